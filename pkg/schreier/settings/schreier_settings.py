"""
This subclass of settings is used to store the setup configuration.

The default file ships with the package and is copied to the user configuration
directory on first use. Afterwards only the copy is read and written.
"""

# Total imports
import os

# Partial imports
from appdirs import user_config_dir
from shutil import copy2 as copy

# Local imports
from schreier.settings import setting

# File parameters
file_name = 'schreier_setup.cfg'

conf_path = user_config_dir('schreier')
init_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'configuration')

init_file = os.path.join(init_path, file_name)
conf_file = os.path.join(conf_path, file_name)

""" ENVIRONMENT VARIABLES """
THREADS_ENV = 'SCHREIER_THREADS'

""" EXIT CODES """
SUCCESS = 0
MISMATCH = 1
USAGE_ERROR = 2
IO_ERROR = 3

instance = None


class Init(object):

    def __init__(self):
        # if config dir does not exist --> create
        if not os.path.exists(conf_path):
            os.makedirs(conf_path)

        # file does not exist --> copy the initial file
        if not os.path.isfile(conf_file):
            copy(init_file, conf_path)

        self.settings = setting.Settings(conf_file)

    """ THE ATTRIBUTE METHODS FOR THE FILENAMES SECTION """

    def logger_file(self): return os.path.join(self.logger_path(), self.logger_filename())

    def logger_path(self, value=None): return conf_path

    def logger_filename(self, value=None): return self.settings.handle("filenames", "LOGGER_FILE", value)

    """ THE ATTRIBUTE METHODS FOR THE ACTIVE SECTION """

    def active_verbose(self, value=None): return self.settings.handle("active", "verbose", value) == "1"

    def active_logger(self, value=None): return self.settings.handle("active", "logger", value) == "1"

    """ THE ATTRIBUTE METHODS FOR THE SWEEP SECTION """

    def sweep_threads(self, value=None):
        """
        Number of worker threads for a sweep. The SCHREIER_THREADS environment
        variable takes precedence over the file; 0 means one per cpu.
        """
        str = self.settings.handle("sweep", "threads", value)
        if not value:
            env = os.environ.get(THREADS_ENV)
            threads = int(env) if env else int(str)
            return threads if threads > 0 else (os.cpu_count() or 1)

    def sweep_random_policies(self, value=None):
        str = self.settings.handle("sweep", "random_policies", value)
        if not value: return int(str)

    def sweep_seed(self, value=None):
        str = self.settings.handle("sweep", "seed", value)
        if not value: return int(str)

    """ THE ATTRIBUTE METHODS FOR THE DEFAULTS SECTION """

    def defaults_p(self, value=None):
        str = self.settings.handle("defaults", "p", value)
        if not value: return int(str)

    def defaults_q(self, value=None):
        str = self.settings.handle("defaults", "q", value)
        if not value: return int(str)


def write():
    get_instance()
    instance.settings.write()


def store(args):
    get_instance()
    for arg in vars(args):
        if (arg in dir(instance)) and getattr(args, arg):
            getattr(instance, arg)(str(getattr(args, arg)))
    instance.settings.write()


def get_instance():
    global instance
    if not instance:
        instance = Init()
    return instance

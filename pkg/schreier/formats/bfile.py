"""
Reads and writes OEIS b-files.

A b-file has one "index value" pair per line with indices increasing by one.
Lines starting with '#' are comments; blank lines and trailing whitespace are
ignored when reading.
"""

from typing import List, NamedTuple, Sequence


class BFileParseError(ValueError):

    def __init__(self, line_number: int, message: str):
        ValueError.__init__(self, "line %d: %s" % (line_number, message))
        self.line_number = line_number


class BFileStructureError(BFileParseError):
    """
    Raised when the indices of a b-file do not increase by one.
    """


class BFileEntry(NamedTuple):
    index: int
    value: int


class Comparison(NamedTuple):
    """
    length is the first index where the sequences differ, or the overlap length
    when they agree; matches tells the two cases apart.
    """
    length: int
    matches: bool


def write_bfile(values: Sequence[int], offset: int = 1) -> str:
    """
    :param values: the terms, at least one
    :param offset: index of the first term
    """
    if not values:
        raise ValueError("a b-file needs at least one value")
    return "".join("%d %d\n" % (offset + i, value) for i, value in enumerate(values))


def read_bfile(text: str) -> List[BFileEntry]:
    """
    :raises BFileParseError: for a line that is not two integers
    :raises BFileStructureError: for an index that does not follow its predecessor
    """
    entries = []
    for line_number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(line_number, "expected 'index value', got %r" % line)
        try:
            entry = BFileEntry(int(fields[0]), int(fields[1]))
        except ValueError:
            raise BFileParseError(line_number, "not an integer pair: %r" % line)
        if entries and entry.index != entries[-1].index + 1:
            raise BFileStructureError(line_number, "index %d follows %d" % (entry.index, entries[-1].index))
        entries.append(entry)
    return entries


def load_bfile(path: str) -> List[BFileEntry]:
    with open(path, encoding='utf-8') as bfile:
        return read_bfile(bfile.read())


def compare_sequences(a: Sequence[int], b: Sequence[int]) -> Comparison:
    """
    Compares the overlapping prefixes of two sequences.
    """
    overlap = min(len(a), len(b))
    for i in range(overlap):
        if a[i] != b[i]:
            return Comparison(i, False)
    return Comparison(overlap, True)

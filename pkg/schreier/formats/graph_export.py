"""
Writes a PartiteGraph as Graphviz DOT text.

Grammar of the output:

    graph      := 'graph ' NAME ' {' NL cluster* edge* '}' NL
    cluster    := '  subgraph cluster_' INDEX ' {' NL
                  '    label="part ' INDEX '";' NL
                  ('    ' VERTEX ';' NL)*
                  '  }' NL
    edge       := '  ' VERTEX ' -- ' VERTEX ';' NL

Parts appear in index order (empty parts included), vertices in id order and
edges sorted by (smaller id, larger id), so equal graphs give equal bytes.
"""

import re

from schreier.graphs.partite_graph import PartiteGraph

_unsafe = re.compile(r'[^A-Za-z0-9_]')


def export_graph(g: PartiteGraph, name: str = "G") -> str:
    """
    :param g: the graph to write
    :param name: graph identifier, characters outside [A-Za-z0-9_] become '_'
    :return: the DOT text
    """
    lines = ["graph %s {" % (_unsafe.sub('_', name) or "G")]
    for index, part in enumerate(g.parts):
        lines.append("  subgraph cluster_%d {" % index)
        lines.append('    label="part %d";' % index)
        lines.extend("    %d;" % vertex for vertex in sorted(part))
        lines.append("  }")
    lines.extend("  %d -- %d;" % edge for edge in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"

import unittest

from schreier.formats.graph_export import export_graph
from schreier.graphs.construct import build_M, build_T
from schreier.graphs.partite_graph import PartiteGraph


class TestExportGraph(unittest.TestCase):

    def test_two_parts(self):
        text = export_graph(build_M(3, 2), "M_3_2")
        expected = ("graph M_3_2 {\n"
                    "  subgraph cluster_0 {\n"
                    '    label="part 0";\n'
                    "    1;\n"
                    "    3;\n"
                    "  }\n"
                    "  subgraph cluster_1 {\n"
                    '    label="part 1";\n'
                    "    2;\n"
                    "  }\n"
                    "  1 -- 2;\n"
                    "  1 -- 3;\n"
                    "}\n")
        self.assertEqual(text, expected)

    def test_empty_parts_are_kept(self):
        text = export_graph(PartiteGraph([[1], [], []], []))
        self.assertTrue(text.startswith("graph G {\n"))
        self.assertIn("subgraph cluster_2 {", text)
        self.assertNotIn("--", text)

    def test_name_is_sanitized(self):
        self.assertTrue(export_graph(build_M(2, 2), "T(5, 2)").startswith("graph T_5__2_ {"))
        self.assertTrue(export_graph(build_M(2, 2), "").startswith("graph G {"))

    def test_edge_lines(self):
        g = build_T(20, 5, 2)
        lines = export_graph(g).splitlines()
        self.assertEqual(sum(1 for line in lines if " -- " in line), 84)
        self.assertEqual(sum(1 for line in lines if line.startswith("  subgraph")), 5)

    def test_deterministic(self):
        self.assertEqual(export_graph(build_T(15, 7, 3)), export_graph(build_T(15, 7, 3)))


if __name__ == '__main__':
    unittest.main()

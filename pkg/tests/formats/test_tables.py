import csv
import io
import unittest

from schreier.formats.tables import (DIFFERENCE_HEADER, SEQUENCE_HEADER, difference_table, rows_agree,
                                     sequence_table, write_csv)


class TestSequenceTable(unittest.TestCase):

    def test_rows(self):
        self.assertEqual(sequence_table(2, 2, 5), [(1, 1, 1), (2, 2, 2), (3, 4, 2), (4, 6, 2), (5, 8, 3)])

    def test_diff_column_is_next_step(self):
        rows = sequence_table(3, 2, 40)
        for row, following in zip(rows, rows[1:]):
            self.assertEqual(row[1] + row[2], following[1])


class TestDifferenceTable(unittest.TestCase):

    def test_rows(self):
        rows = difference_table(2, 2, 6)
        self.assertEqual(rows[3], (4, 0, 4, "FULL", 2, 2, 2))
        self.assertEqual(rows[4], (5, 1, 0, "LOW", 3, 3, 3))
        self.assertEqual(len(rows[0]), len(DIFFERENCE_HEADER))

    def test_all_rows_agree(self):
        for p in range(1, 6):
            for q in range(1, 6):
                self.assertTrue(all(rows_agree(row) for row in difference_table(p, q, 60)))

    def test_disagreement(self):
        self.assertFalse(rows_agree((4, 0, 4, "FULL", 2, 3, 2)))


class TestWriteCsv(unittest.TestCase):

    def test_text(self):
        text = write_csv(SEQUENCE_HEADER, sequence_table(2, 2, 3))
        self.assertEqual(text, "n,sr,diff\n1,1,1\n2,2,2\n3,4,2\n")

    def test_parses_back(self):
        text = write_csv(DIFFERENCE_HEADER, difference_table(2, 3, 10))
        rows = list(csv.reader(io.StringIO(text)))
        self.assertEqual(tuple(rows[0]), DIFFERENCE_HEADER)
        self.assertEqual(len(rows), 11)
        self.assertEqual(rows[1][0], "1")


if __name__ == '__main__':
    unittest.main()

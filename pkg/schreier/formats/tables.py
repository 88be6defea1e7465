"""
CSV tables of Sr(n, p, q) and of its step sizes.
"""

import csv
import io
from typing import List, Sequence, Tuple

from schreier.counting.params import ZERO_BASED, decompose, validate
from schreier.counting.schreier_sets import sr_difference, sr_difference_floor, sr_sequence
from schreier.graphs.partite_graph import classify
from schreier.graphs.turan import growth_delta

SEQUENCE_HEADER = ("n", "sr", "diff")
DIFFERENCE_HEADER = ("n", "ell", "k", "case", "sr_difference", "growth_delta", "floor_form")


def sequence_table(p: int, q: int, n_max: int) -> List[Tuple[int, int, int]]:
    """
    Rows (n, Sr(n, p, q), Sr(n + 1, p, q) - Sr(n, p, q)) for n = 1..n_max.
    """
    values = sr_sequence(p, q, n_max)
    return [(n, value, sr_difference_floor(n, p, q)) for n, value in enumerate(values, 1)]


def difference_table(p: int, q: int, n_max: int) -> List[tuple]:
    """
    Rows comparing the three forms of the step Sr(n + 1, p, q) - Sr(n, p, q).

    ell and k come from n = (pq + 1) * ell + k with 0 <= k <= pq; case is the growth
    case of the step adding vertex n + 2 to T(n + 1, pq + 1, q).
    """
    validate(n_max, p, q)
    rows = []
    for n in range(1, n_max + 1):
        ell, k = decompose(n, p * q + 1, ZERO_BASED)
        rows.append((n, ell, k, classify(n + 1, p * q + 1, q).case_tag,
                     sr_difference(n, p, q), growth_delta(n, p, q), sr_difference_floor(n, p, q)))
    return rows


def rows_agree(row: Sequence) -> bool:
    return row[4] == row[5] == row[6]


def write_csv(header: Sequence[str], rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()

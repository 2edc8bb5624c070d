"""Reference count tables for small genus and node numbers.

These are the known published values of the point-count and
fixed-linear-system families for genus 2..5 and 0..7 nodes, embedded
verbatim so that ``verify`` can run self-contained, with no network or
file dependencies.  Rows are indexed by genus, columns by node count.
"""

from __future__ import annotations

from .modular import InvariantKind

GENUS_RANGE = (2, 5)
NODE_RANGE = (0, 7)

# Fixed-linear-system counts, genus 2..5, nodes 0..7.
FIXED_LINEAR_SYSTEM = (
    (1, 12, 36, 112, 150, 432, 392, 960),
    (1, 18, 120, 500, 1620, 4116, 9920, 19440),
    (1, 24, 240, 1464, 6594, 23808, 73008, 198480),
    (1, 30, 396, 3220, 18960, 88452, 344960, 1169520),
)

# Through-g-points counts, genus 2..5, nodes 0..7.
POINT_COUNTS = (
    (2, 12, 24, 56, 60, 144, 112, 240),
    (3, 36, 180, 600, 1620, 3528, 7440, 12960),
    (4, 72, 576, 2928, 11304, 35712, 97344, 238176),
    (5, 120, 1320, 9200, 47400, 196560, 689920, 2126400),
)

TABLES = {
    InvariantKind.FLS: FIXED_LINEAR_SYSTEM,
    InvariantKind.N: POINT_COUNTS,
}

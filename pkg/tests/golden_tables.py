"""Reference homology tables, transcribed verbatim.

Rows are (t, a, b, chi) for t = 1..23. These are fixture data, frozen as
printed in the bundled reference tables; they are compared cell-for-cell
against the engine, with zero tolerance and no corrections applied.

Known quirk, kept on purpose: the OE row at t=23 reads (0, 2, 2), which is
inconsistent with its own chi entry (the chi sign convention at that t gives
chi = a - b, so (0, 2) would force chi = -2). Every computation in this
package yields (2, 0, 2) there. The row is transcribed as printed so the
golden-table comparison reports exactly that cell.
"""

OO_TABLE = [
    (1, 0, 1, -1),
    (2, 1, 0, 1),
    (3, 0, 1, -1),
    (4, 1, 0, 1),
    (5, 0, 1, -1),
    (6, 2, 0, 2),
    (7, 0, 2, -2),
    (8, 2, 0, 2),
    (9, 0, 2, -2),
    (10, 2, 0, 2),
    (11, 0, 2, -2),
    (12, 3, 0, 3),
    (13, 0, 3, -3),
    (14, 3, 0, 3),
    (15, 0, 3, -3),
    (16, 3, 0, 3),
    (17, 0, 3, -3),
    (18, 4, 0, 4),
    (19, 0, 4, -4),
    (20, 4, 0, 4),
    (21, 0, 4, -4),
    (22, 4, 0, 4),
    (23, 0, 4, -4),
]

EE_TABLE = [
    (1, 0, 0, 0),
    (2, 0, 0, 0),
    (3, 0, 0, 0),
    (4, 0, 0, 0),
    (5, 0, 0, 0),
    (6, 1, 0, -1),
    (7, 0, 1, 1),
    (8, 1, 0, -1),
    (9, 0, 1, 1),
    (10, 1, 0, -1),
    (11, 0, 1, 1),
    (12, 2, 0, -2),
    (13, 0, 2, 2),
    (14, 2, 0, -2),
    (15, 0, 2, 2),
    (16, 2, 0, -2),
    (17, 0, 2, 2),
    (18, 3, 0, -3),
    (19, 0, 3, 3),
    (20, 3, 0, -3),
    (21, 0, 3, 3),
    (22, 3, 0, -3),
    (23, 0, 3, 3),
]

EO_TABLE = [
    (1, 0, 1, 1),
    (2, 0, 0, 0),
    (3, 1, 0, -1),
    (4, 0, 0, 0),
    (5, 0, 1, 1),
    (6, 0, 0, 0),
    (7, 1, 0, -1),
    (8, 0, 0, 0),
    (9, 0, 1, 1),
    (10, 0, 0, 0),
    (11, 2, 0, -2),
    (12, 0, 0, 0),
    (13, 0, 2, 2),
    (14, 1, 0, 1),
    (15, 2, 0, -2),
    (16, 0, 1, -1),
    (17, 0, 2, 2),
    (18, 1, 0, 1),
    (19, 2, 0, -2),
    (20, 0, 1, -1),
    (21, 0, 2, 2),
    (22, 1, 0, 1),
    (23, 3, 0, -3),
]

OE_TABLE = [
    (1, 0, 0, 0),
    (2, 1, 0, -1),
    (3, 0, 0, 0),
    (4, 0, 1, 1),
    (5, 0, 0, 0),
    (6, 1, 0, -1),
    (7, 0, 0, 0),
    (8, 0, 1, 1),
    (9, 0, 0, 0),
    (10, 1, 0, -1),
    (11, 1, 0, 1),
    (12, 0, 1, 1),
    (13, 0, 1, -1),
    (14, 2, 0, -2),
    (15, 1, 0, 1),
    (16, 0, 2, 2),
    (17, 0, 1, -1),
    (18, 2, 0, -2),
    (19, 1, 0, 1),
    (20, 0, 2, 2),
    (21, 0, 1, -1),
    (22, 2, 0, -2),
    (23, 0, 2, 2),
]

TABLES = {"oo": OO_TABLE, "ee": EE_TABLE, "eo": EO_TABLE, "oe": OE_TABLE}

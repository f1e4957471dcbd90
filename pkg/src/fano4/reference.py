"""Published invariant tables, cell for cell.

Keys are the family parameter ``r``; values follow the column schema in
:data:`TABLE_COLUMNS`.  ``h0(-K)`` is reported from ``chi(-K)``.
"""

SPLIT_HODGE = ("rho", "K4", "K2c2", "h22", "h13", "b3", "h0(-K)", "chiT")
B4_EQUALS_H22 = ("rho", "K4", "K2c2", "b4", "b3", "h0(-K)", "chiT")

TABLE_COLUMNS = {
    1: B4_EQUALS_H22,
    2: B4_EQUALS_H22,
    3: SPLIT_HODGE,
    4: B4_EQUALS_H22,
    5: B4_EQUALS_H22,
}

TABLE_TITLES = {
    1: "Fano model W of Bl_{r+1 pts} P^4",
    2: "Family A: blow-up of W along the transform of a cubic scroll",
    3: "Family B: blow-up of W along the transform of a K3 sextic",
    4: "Family C: blow-up of W along the transform of a quadric surface",
    5: "Family E: blow-down Z of family A",
}

REFERENCE_TABLES = {
    1: {
        0: (2, 544, 232, 2, 0, 111, 20),
        1: (3, 464, 212, 4, 0, 96, 16),
        2: (4, 385, 190, 7, 0, 81, 12),
        3: (5, 307, 166, 11, 0, 66, 8),
        4: (6, 230, 140, 16, 0, 51, 4),
        5: (7, 154, 112, 22, 0, 36, 0),
        6: (8, 80, 80, 30, 0, 21, -4),
        7: (9, 13, 34, 45, 0, 6, -8),
    },
    2: {
        0: (3, 303, 174, 5, 0, 66, 4),
        1: (4, 256, 160, 8, 0, 57, 2),
        2: (5, 210, 144, 12, 0, 48, 0),
        3: (6, 165, 126, 17, 0, 39, -2),
        4: (7, 121, 106, 23, 0, 30, -4),
    },
    3: {
        0: (3, 180, 144, 22, 1, 0, 43, -18),
        1: (4, 150, 132, 24, 1, 0, 37, -17),
        2: (5, 121, 118, 27, 1, 0, 31, -16),
        3: (6, 93, 102, 31, 1, 0, 25, -15),
        4: (7, 66, 84, 36, 1, 0, 19, -14),
    },
    4: {
        0: (3, 350, 188, 4, 0, 75, 7),
        1: (4, 303, 174, 7, 0, 66, 5),
        2: (5, 257, 158, 11, 0, 57, 3),
    },
    5: {
        0: (2, 432, 204, 3, 0, 90, 12),
        1: (3, 368, 188, 5, 0, 78, 9),
        2: (4, 305, 170, 8, 0, 66, 6),
        3: (5, 243, 150, 12, 0, 54, 3),
        4: (6, 182, 128, 17, 0, 42, 0),
    },
}

"""Tabulated A-factorizations of lowest-term monomials for types E and F.

Each entry reads ``(numerator, denominator, leading, factors)``: the monomial
numerator/denominator in the variables c(s, i) (occurrence s of letter i)
equals ``c(leading) * prod A_{s,i}^{-e}`` over ``factors = [(s, i, e), ...]``.
"""

EF_IDENTITIES = {
    "E6": [
        ({(7, 2): 1}, {(8, 1): 1}, (7, 1), [
            (7, 1, 1),
        ]),
        ({(6, 3): 1}, {(6, 6): 1, (7, 2): 1}, (3, 1), [
            (6, 2, 1), (5, 6, 1), (6, 1, 1), (5, 3, 1), (4, 4, 1), (3, 5, 1),
            (5, 2, 1), (4, 3, 1), (3, 4, 1), (3, 6, 1), (3, 3, 1), (3, 2, 1),
            (3, 1, 1),
        ]),
        ({(5, 4): 1}, {(6, 3): 1}, (2, 1), [
            (5, 3, 1), (5, 2, 1), (4, 6, 1), (5, 1, 1), (4, 3, 1), (3, 4, 1),
            (2, 5, 1), (4, 2, 1), (3, 3, 1), (2, 4, 1), (2, 6, 1), (2, 3, 1),
            (2, 2, 1), (2, 1, 1),
        ]),
        ({(4, 5): 1}, {(5, 4): 1}, (1, 1), [
            (4, 4, 1), (4, 3, 1), (4, 2, 1), (3, 6, 1), (4, 1, 1), (3, 3, 1),
            (2, 4, 1), (1, 5, 1), (3, 2, 1), (2, 3, 1), (1, 4, 1), (1, 6, 1),
            (1, 3, 1), (1, 2, 1), (1, 1, 1),
        ]),
    ],
    "E7": [
        ({(9, 1): 1}, {(9, 2): 1}, (1, 1), [
            (8, 2, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (5, 7, 1),
            (5, 4, 1), (4, 5, 1), (5, 3, 1), (4, 4, 1), (3, 7, 1), (5, 2, 1),
            (4, 3, 1), (3, 4, 1), (2, 5, 1), (1, 6, 1), (5, 1, 1), (4, 2, 1),
            (3, 3, 1), (2, 4, 1), (1, 5, 1), (1, 7, 1), (1, 4, 1), (1, 3, 1),
            (1, 2, 1), (1, 1, 1),
        ]),
        ({(9, 2): 1}, {(9, 3): 1}, (2, 1), [
            (8, 3, 1), (7, 4, 1), (6, 5, 1), (5, 6, 1), (6, 7, 1), (6, 4, 1),
            (5, 5, 1), (6, 3, 1), (5, 4, 1), (4, 7, 1), (6, 2, 1), (5, 3, 1),
            (4, 4, 1), (3, 5, 1), (2, 6, 1), (6, 1, 1), (5, 2, 1), (4, 3, 1),
            (3, 4, 1), (2, 5, 1), (2, 7, 1), (2, 4, 1), (2, 3, 1), (2, 2, 1),
            (2, 1, 1),
        ]),
        ({(9, 3): 1}, {(9, 4): 1}, (3, 1), [
            (8, 4, 1), (7, 5, 1), (6, 6, 1), (7, 7, 1), (7, 4, 1), (6, 5, 1),
            (7, 3, 1), (6, 4, 1), (5, 7, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1),
            (4, 5, 1), (3, 6, 1), (7, 1, 1), (6, 2, 1), (5, 3, 1), (4, 4, 1),
            (3, 5, 1), (3, 7, 1), (3, 4, 1), (3, 3, 1), (3, 2, 1), (3, 1, 1),
        ]),
        ({(9, 4): 1}, {(9, 5): 1, (9, 7): 1}, (4, 1), [
            (8, 5, 1), (7, 6, 1), (8, 7, 1), (8, 4, 1), (7, 5, 1), (8, 3, 1),
            (7, 4, 1), (6, 7, 1), (8, 2, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1),
            (4, 6, 1), (8, 1, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1), (4, 5, 1),
            (4, 7, 1), (4, 4, 1), (4, 3, 1), (4, 2, 1), (4, 1, 1),
        ]),
        ({(9, 5): 1}, {(9, 6): 1}, (8, 6), [
            (8, 6, 1),
        ]),
    ],
    "E8": [
        ({(15, 1): 1}, {(15, 2): 1}, (1, 1), [
            (14, 2, 1), (13, 3, 1), (12, 4, 1), (11, 5, 1), (10, 6, 1), (9, 7, 1),
            (10, 8, 1), (10, 5, 1), (9, 6, 1), (10, 4, 1), (9, 5, 1), (8, 8, 1),
            (10, 3, 1), (9, 4, 1), (8, 5, 1), (7, 6, 1), (6, 7, 1), (10, 2, 1),
            (9, 3, 1), (8, 4, 1), (7, 5, 1), (6, 6, 1), (6, 8, 1), (10, 1, 1),
            (9, 2, 1), (8, 3, 1), (7, 4, 1), (6, 5, 2), (5, 6, 1), (4, 7, 1),
            (5, 8, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (6, 3, 1), (5, 4, 1),
            (4, 5, 1), (3, 8, 1), (6, 2, 1), (5, 3, 1), (4, 4, 1), (3, 5, 1),
            (2, 6, 1), (1, 7, 1), (6, 1, 1), (5, 2, 1), (4, 3, 1), (3, 4, 1),
            (2, 5, 1), (1, 6, 1), (1, 8, 1), (1, 5, 1), (1, 4, 1), (1, 3, 1),
            (1, 2, 1), (1, 1, 1),
        ]),
        ({(15, 2): 1}, {(15, 3): 1}, (2, 1), [
            (14, 3, 1), (13, 4, 1), (12, 5, 1), (11, 6, 1), (10, 7, 1), (11, 8, 1),
            (11, 5, 1), (10, 6, 1), (11, 4, 1), (10, 5, 1), (9, 8, 1), (11, 3, 1),
            (10, 4, 1), (9, 5, 1), (8, 6, 1), (7, 7, 1), (11, 2, 1), (10, 3, 1),
            (9, 4, 1), (8, 5, 1), (7, 6, 1), (7, 8, 1), (11, 1, 1), (10, 2, 1),
            (9, 3, 1), (8, 4, 1), (7, 5, 2), (6, 6, 1), (5, 7, 1), (6, 8, 1),
            (7, 4, 1), (6, 5, 1), (5, 6, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1),
            (4, 8, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1), (4, 5, 1), (3, 6, 1),
            (2, 7, 1), (7, 1, 1), (6, 2, 1), (5, 3, 1), (4, 4, 1), (3, 5, 1),
            (2, 6, 1), (2, 8, 1), (2, 5, 1), (2, 4, 1), (2, 3, 1), (2, 2, 1),
            (2, 1, 1),
        ]),
        ({(15, 3): 1}, {(15, 4): 1}, (3, 1), [
            (14, 4, 1), (13, 5, 1), (12, 6, 1), (11, 7, 1), (12, 8, 1), (12, 5, 1),
            (11, 6, 1), (12, 4, 1), (11, 5, 1), (10, 8, 1), (12, 3, 1), (11, 4, 1),
            (10, 5, 1), (9, 6, 1), (8, 7, 1), (12, 2, 1), (11, 3, 1), (10, 4, 1),
            (9, 5, 1), (8, 6, 1), (8, 8, 1), (12, 1, 1), (11, 2, 1), (10, 3, 1),
            (9, 4, 1), (8, 5, 2), (7, 6, 1), (6, 7, 1), (7, 8, 1), (8, 4, 1),
            (7, 5, 1), (6, 6, 1), (8, 3, 1), (7, 4, 1), (6, 5, 1), (5, 8, 1),
            (8, 2, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (3, 7, 1),
            (8, 1, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1), (4, 5, 1), (3, 6, 1),
            (3, 8, 1), (3, 5, 1), (3, 4, 1), (3, 3, 1), (3, 2, 1), (3, 1, 1),
        ]),
        ({(15, 4): 1}, {(15, 5): 1}, (4, 1), [
            (14, 5, 1), (13, 6, 1), (12, 7, 1), (13, 8, 1), (13, 5, 1), (12, 6, 1),
            (13, 4, 1), (12, 5, 1), (11, 8, 1), (13, 3, 1), (12, 4, 1), (11, 5, 1),
            (10, 6, 1), (9, 7, 1), (13, 2, 1), (12, 3, 1), (11, 4, 1), (10, 5, 1),
            (9, 6, 1), (9, 8, 1), (13, 1, 1), (12, 2, 1), (11, 3, 1), (10, 4, 1),
            (9, 5, 2), (8, 6, 1), (7, 7, 1), (8, 8, 1), (9, 4, 1), (8, 5, 1),
            (7, 6, 1), (9, 3, 1), (8, 4, 1), (7, 5, 1), (6, 8, 1), (9, 2, 1),
            (8, 3, 1), (7, 4, 1), (6, 5, 1), (5, 6, 1), (4, 7, 1), (9, 1, 1),
            (8, 2, 1), (7, 3, 1), (6, 4, 1), (5, 5, 1), (4, 6, 1), (4, 8, 1),
            (4, 5, 1), (4, 4, 1), (4, 3, 1), (4, 2, 1), (4, 1, 1),
        ]),
        ({(15, 5): 1}, {(15, 6): 1, (15, 8): 1}, (5, 1), [
            (14, 6, 1), (13, 7, 1), (14, 8, 1), (14, 5, 1), (13, 6, 1), (14, 4, 1),
            (13, 5, 1), (12, 8, 1), (14, 3, 1), (13, 4, 1), (12, 5, 1), (11, 6, 1),
            (10, 7, 1), (14, 2, 1), (13, 3, 1), (12, 4, 1), (11, 5, 1), (10, 6, 1),
            (10, 8, 1), (14, 1, 1), (13, 2, 1), (12, 3, 1), (11, 4, 1), (10, 5, 2),
            (9, 6, 1), (8, 7, 1), (9, 8, 1), (10, 4, 1), (9, 5, 1), (8, 6, 1),
            (10, 3, 1), (9, 4, 1), (8, 5, 1), (7, 8, 1), (10, 2, 1), (9, 3, 1),
            (8, 4, 1), (7, 5, 1), (6, 6, 1), (5, 7, 1), (10, 1, 1), (9, 2, 1),
            (8, 3, 1), (7, 4, 1), (6, 5, 1), (5, 6, 1), (5, 8, 1), (5, 5, 1),
            (5, 4, 1), (5, 3, 1), (5, 2, 1), (5, 1, 1),
        ]),
        ({(15, 6): 1}, {(15, 7): 1}, (14, 7), [
            (14, 7, 1),
        ]),
    ],
    "F4": [
        ({(6, 1): 1}, {(6, 2): 1}, (1, 1), [
            (5, 2, 1), (4, 3, 2), (3, 4, 2), (4, 2, 1), (3, 3, 2), (4, 1, 1),
            (3, 2, 2), (2, 3, 2), (1, 4, 2), (3, 1, 1), (2, 2, 1), (1, 3, 2),
            (1, 2, 1), (1, 1, 1),
        ]),
        ({(6, 2): 1}, {(6, 3): 2}, (2, 1), [
            (5, 3, 2), (4, 4, 2), (5, 2, 1), (4, 3, 2), (5, 1, 1), (4, 2, 2),
            (3, 3, 2), (2, 4, 2), (4, 1, 1), (3, 2, 1), (2, 3, 2), (2, 2, 1),
            (2, 1, 1),
        ]),
        ({(6, 3): 1}, {(6, 4): 1}, (5, 4), [
            (5, 4, 1),
        ]),
    ],
}

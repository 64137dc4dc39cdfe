"""Published reference data: figure edge lists and numeric tables.

Figure edges are ``(from_label, to_label, digit)`` with labels written
most-significant digit first; the marked vertex is always ``"0"``.
Table rows are used only for comparison, never to produce output.
"""

DRAWN_19 = {
    "multipliers": (1, 19),
    "edges": [
        ("0", "0", 0), ("0", "20", 1), ("20", "22", 1), ("22", "100", 1),
        ("100", "100", 1), ("100", "10", 0), ("20", "2", 0), ("1", "0", 0),
        ("10", "21", 1), ("10", "1", 0), ("2", "21", 1), ("21", "2", 0),
    ],
}

DRAWN_73 = {
    "multipliers": (1, 73),
    "edges": [
        ("0", "0", 0), ("0", "220", 1), ("220", "1012", 1), ("220", "22", 0),
        ("1012", "1022", 1), ("1022", "1100", 1), ("1100", "1100", 1), ("1100", "110", 0),
        ("110", "11", 0), ("110", "1001", 1), ("11", "1", 0), ("1", "0", 0),
        ("1020", "102", 0), ("102", "1001", 1), ("1020", "1022", 1), ("1001", "100", 0),
        ("100", "10", 0), ("10", "1", 0), ("10", "221", 1), ("221", "22", 0),
        ("22", "1000", 1), ("1000", "1020", 1), ("1000", "100", 0), ("100", "1000", 1),
    ],
}

DRAWN_7 = {
    "multipliers": (1, 7),
    "edges": [
        ("0", "0", 0), ("0", "2", 1), ("2", "10", 1),
        ("10", "10", 1), ("10", "1", 0), ("1", "0", 0),
    ],
}

FIGURES = {"19": DRAWN_19, "73": DRAWN_73, "7": DRAWN_7}

# adjacency matrices printed alongside the 19 and 73 figures (row 0 = marked vertex)
MATRIX_19 = [
    [1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 0],
]

MATRIX_73 = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

# table "2.1": C(1, P_k) -- (k, P_k, vertices, beta, dimension)
TABLE_2_1 = [
    (1, 7, 4, 1.618033, 0.438018),
    (2, 19, 8, 1.465571, 0.347934),
    (3, 55, 16, 1.380278, 0.293358),
    (4, 163, 32, 1.324718, 0.255960),
    (5, 487, 64, 1.370957, 0.287191),
    (6, 1459, 128, 1.388728, 0.298913),
    (7, 4375, 256, 1.392067, 0.301010),
    (8, 13123, 512, 1.387961, 0.298408),
]

# table "4.2": vertices of the P_k graph at each depth -- (k, P_k, counts by depth)
TABLE_4_2 = [
    (1, 7, (4,)),
    (2, 19, (6, 2)),
    (3, 55, (8, 8)),
    (4, 163, (10, 20, 2)),
    (5, 487, (12, 40, 12)),
    (6, 1459, (14, 70, 42, 2)),
    (7, 4375, (16, 112, 112, 16)),
    (8, 13123, (18, 168, 252, 72, 2)),
    (9, 39367, (20, 240, 504, 240, 20)),
]

# table "7.1": C(1, M) -- (M, ternary, s3, vertices, beta, dimension)
TABLE_7_1 = [
    (10, "101", 3, 4, 1.618033, 0.438018),
    (16, "121", 3, 5, 1.324718, 0.255960),
    (19, "201", 3, 8, 1.465571, 0.347934),
    (73, "2201", 3, 16, 1.618033, 0.438018),
    (34, "1021", 4, 8, 1.324718, 0.255960),
    (46, "1201", 4, 10, 1.112776, 0.097266),
    (61, "2021", 4, 14, 1.570147, 0.410672),
    (64, "2101", 4, 14, 1.357193, 0.278004),
    (70, "2121", 4, 14, 1.360632, 0.280308),
    (91, "10101", 5, 9, 1.465571, 0.347934),
    (97, "10121", 5, 16, 1.380277, 0.293356),
    (100, "10201", 5, 17, 1.354948, 0.276497),
    (142, "12021", 5, 20, 1.276393, 0.222133),
    (145, "12101", 5, 21, 1.000000, 0.000000),
    (151, "12121", 5, 20, 1.227525, 0.186599),
    (172, "20101", 5, 22, 1.288329, 0.230606),
    (178, "20121", 5, 25, 1.345528, 0.270148),
    (181, "20201", 5, 22, 1.324718, 0.255960),
    (196, "21021", 5, 24, 1.383785, 0.295666),
    (208, "21201", 5, 25, 1.290893, 0.232415),
]

# table "8.1": C(1, L_k) -- (k, L_k, vertices, beta, dimension)
TABLE_8_1 = [
    (1, 1, 1, 2.000000, 0.630929),
    (2, 4, 2, 1.618033, 0.438018),
    (3, 13, 3, 1.465571, 0.347934),
    (4, 40, 4, 1.380278, 0.293358),
    (5, 121, 5, 1.324718, 0.255960),
    (6, 364, 6, 1.285199, 0.228392),
    (7, 1093, 7, 1.255423, 0.207052),
    (8, 3280, 8, 1.232055, 0.189948),
    (9, 9841, 9, 1.213150, 0.175877),
]

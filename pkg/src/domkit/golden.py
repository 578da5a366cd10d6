"""Reference values transcribed from the published tables and set lists.

Nothing here is computed; these literals are what the harness checks against.
"""

PRISM_TABLE = {
    # n: (gamma, zeta)
    3: (2, 9),
    4: (2, 4),
    5: (3, 10),
    6: (4, 51),
    7: (4, 14),
    8: (4, 4),
    9: (5, 18),
    10: (6, 120),
}

EXPLICIT_SETS = {
    3: [
        "{b_0,t_0}", "{b_0,t_1}", "{b_0,t_2}", "{b_1,t_0}",
        "{b_1,t_1}", "{b_1,t_2}", "{b_2,t_0}", "{b_2,t_1}",
        "{b_2,t_2}",
    ],
    4: ["{b_0,t_2}", "{b_1,t_3}", "{b_2,t_0}", "{b_3,t_1}"],
    5: [
        "{b_0,b_1,t_3}", "{b_0,b_4,t_2}", "{b_0,t_2,t_3}", "{b_1,b_2,t_4}",
        "{b_1,t_3,t_4}", "{b_2,b_3,t_0}", "{b_2,t_0,t_4}", "{b_3,b_4,t_1}",
        "{b_3,t_0,t_1}", "{b_4,t_1,t_2}",
    ],
    8: [
        "{b_0,b_4,t_2,t_6}", "{b_1,b_5,t_3,t_7}",
        "{b_2,b_6,t_0,t_4}", "{b_3,b_7,t_1,t_5}",
    ],
}

ROBUSTNESS_COLUMNS = (
    "gamma", "zeta", "eta", "cal_e", "rho", "lambda2",
    "sfi", "omega", "rri", "tau", "ldi",
)
EXACT_COLUMNS = frozenset({"gamma", "zeta", "tau", "omega"})

# (label, family spec, row values in ROBUSTNESS_COLUMNS order)
ROBUSTNESS_N5 = [
    ("K_5", "complete:5", (1, 5, 2.322, 5.000, 1.000, 5.000, 11.610, 0.0, 5.000, 1, 5.000)),
    ("P_5", "path:5", (2, 3, 0.792, 1.732, 0.600, 0.382, 0.303, 0.0, 1.732, 2, 1.500)),
    ("C_5", "cycle:5", (2, 5, 1.161, 2.236, 1.000, 1.382, 1.604, 0.0, 2.236, 2, 2.500)),
    ("F_5", "fan:5", (1, 1, 0.000, 1.000, 0.200, 1.586, 0.000, 1.0, 0.000, 1, 1.000)),
    ("W_5", "wheel:5", (1, 1, 0.000, 1.000, 0.200, 3.000, 0.000, 1.0, 0.000, 1, 1.000)),
    ("S_5", "star:5", (1, 1, 0.000, 1.000, 0.200, 1.000, 0.000, 1.0, 0.000, 1, 1.000)),
    ("T^bin_5", "bintree:5", (2, 2, 0.500, 1.414, 0.400, 0.519, 0.259, 0.5, 0.707, 2, 1.000)),
    ("House", "house", (2, 7, 1.404, 2.646, 1.400, 1.382, 1.940, 0.0, 2.646, 3, 2.333)),
    ("K_2,3", "kbipartite:2,3", (2, 7, 1.404, 2.646, 1.400, 2.000, 2.807, 0.0, 2.646, 4, 1.750)),
]

ROBUSTNESS_N6 = [
    ("K_6", "complete:6", (1, 6, 2.585, 6.000, 1.000, 6.000, 15.510, 0.0, 6.000, 1, 6.000)),
    ("P_6", "path:6", (2, 1, 0.000, 1.000, 0.167, 0.268, 0.000, 1.0, 0.000, 1, 1.000)),
    ("C_6", "cycle:6", (2, 3, 0.792, 1.732, 0.500, 1.000, 0.792, 0.0, 1.732, 1, 3.000)),
    ("F_6", "fan:6", (1, 1, 0.000, 1.000, 0.167, 1.382, 0.000, 1.0, 0.000, 1, 1.000)),
    ("W_6", "wheel:6", (1, 1, 0.000, 1.000, 0.167, 2.382, 0.000, 1.0, 0.000, 1, 1.000)),
    ("S_6", "star:6", (1, 1, 0.000, 1.000, 0.167, 1.000, 0.000, 1.0, 0.000, 1, 1.000)),
    ("T^bin_6", "bintree:6", (2, 2, 0.500, 1.414, 0.333, 0.325, 0.162, 0.5, 0.707, 2, 1.000)),
    ("L_3", "ladder:3", (2, 3, 0.792, 1.732, 0.500, 1.000, 0.792, 0.0, 1.732, 1, 3.000)),
    ("Pr_3", "prism:3", (2, 9, 1.585, 3.000, 1.500, 2.000, 3.170, 0.0, 3.000, 3, 3.000)),
    ("K_3,3", "kbipartite:3,3", (2, 9, 1.585, 3.000, 1.500, 3.000, 4.755, 0.0, 3.000, 3, 3.000)),
]

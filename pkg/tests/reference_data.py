"""Published worked-example data used as test fixtures.

Matrices are transcribed exactly as printed, including the rounded
reciprocal cells of the conversion scale.
"""

CATEGORY_NAMES = ("Automation", "Measurement", "Sharing", "Culture")

# category-level comparison matrix
CATEGORY_TFN = [
    [(1, 1, 1), (2, 2.5, 3), (1, 1.5, 2), (1.5, 2, 2.5)],
    [(0.3, 0.4, 0.5), (1, 1, 1), (0.3, 0.4, 0.5), (0.5, 1, 1.5)],
    [(0.5, 0.6, 1), (2, 2.5, 3), (1, 1, 1), (1, 1.5, 2)],
    [(0.4, 0.5, 0.6), (0.6, 1, 2), (0.5, 0.6, 1), (1, 1, 1)],
]

# defuzzified category matrix as printed; (1, 3) and (3, 1) disagree with
# the graded mean of the fuzzy cells (0.73 vs 1.00, 1.43 vs 1.10)
CATEGORY_CRISP_PRINTED = [
    [1.00, 2.50, 1.50, 2.00],
    [0.40, 1.00, 0.40, 0.73],
    [0.65, 2.50, 1.00, 1.50],
    [0.50, 1.43, 0.65, 1.00],
]
CRISP_ERRATUM_CELLS = {(1, 3): 1.00, (3, 1): 1.10}
PRINTED_COLUMN_SUMS = (2.55, 7.43, 3.55, 5.23)
PRINTED_PRIORITY = (0.38431, 0.13617, 0.28986, 0.19077)
PRINTED_LAMBDA = 4.0162
PRINTED_CI = 0.0053865
PRINTED_CR = 0.0059850

TOTAL_SUM = (14.6, 18.5, 23.6)
TOTAL_INVERSE = (0.042373, 0.054054, 0.068493)
ROW_SUMS = [(5.5, 7.0, 8.5), (2.1, 2.8, 3.5), (4.5, 5.6, 7.0), (2.5, 3.1, 4.6)]
EXTENTS = [
    (0.233051, 0.378378, 0.582192),
    (0.088983, 0.151351, 0.239726),
    (0.190678, 0.302703, 0.479452),
    (0.105932, 0.167568, 0.315068),
]
# V(row >= column); None on the diagonal. The (Sharing, Culture) entry is
# printed as 0.67605 but must be 1 (Sharing's apex lies right of Culture's).
POSSIBILITY = [
    [None, 1, 1, 1],
    [0.028563, None, 0.24475, 0.89191],
    [0.76504, 1, None, 1],
    [0.28007, 1, 0.47933, None],
]
POSSIBILITY_PRINTED_SHARING_CULTURE = 0.67605
RAW_WEIGHTS = (1, 0.028563, 0.76504, 0.28009)
PRINTED_NORMALIZED = (0.482233, 0.013764, 0.368925, 0.135066)
NORMALIZED_WEIGHTS = (0.4822, 0.0138, 0.3689, 0.1351)

AUTOMATION_TFN = [
    [(1, 1, 1), (0.3, 0.4, 0.5), (0.4, 0.5, 0.6), (1.5, 2, 2.5), (0.4, 0.5, 0.6)],
    [(2, 2.5, 3), (1, 1, 1), (2, 2.5, 3), (0.5, 1, 1.5), (1, 1.5, 2)],
    [(1.5, 2, 2.5), (0.3, 0.4, 0.5), (1, 1, 1), (2, 2.5, 3), (2.5, 3, 3.5)],
    [(0.4, 0.5, 0.6), (0.6, 1, 2), (0.3, 0.4, 0.5), (1, 1, 1), (0.5, 0.6, 1)],
    [(1.5, 2, 2.5), (0.5, 0.6, 1), (0.2, 0.3, 0.4), (1, 1.5, 2), (1, 1, 1)],
]
SHARING_TFN = [
    [(1, 1, 1), (0.4, 0.5, 0.6), (0.3, 0.4, 0.5), (1.5, 2, 2.5)],
    [(1.5, 2, 2.5), (1, 1, 1), (0.5, 0.6, 1), (0.5, 0.6, 1)],
    [(2, 2.5, 3.0), (1, 1.5, 2), (1, 1, 1), (1, 1.5, 2)],
    [(0.4, 0.5, 0.6), (1, 1.5, 2), (0.5, 0.6, 1), (1, 1, 1)],
]
SHARING_PRINTED = {"lambda_max": 4.27, "ci": 0.0856, "cr": 0.095}
SUBMATRIX_PRINTED_CR = {"P1": 0.93, "P3": 0.095, "P4": 0.09}

# printed local weights that the printed matrices reproduce
LOCAL_WEIGHTS = {
    "C1": 0.049895, "C2": 0.362363, "C3": 0.382099, "C4": 0.035323, "C5": 0.170320,
    "C14": 0.17156, "C15": 0.23791, "C16": 0.43009, "C17": 0.16044,
    "C18": 0.092966, "C19": 0.287475, "C20": 0.261335, "C21": 0.186458, "C22": 0.171765,
}
C1_GLOBAL = 0.024061
AUTOMATION_WEIGHT = 0.482232
GLOBAL_TOP3 = ("C3", "C2", "C16")
GLOBAL_TOP3_WEIGHTS = (0.184261, 0.174743, 0.158672)
AUTOMATION_LOCAL_ORDER = ("C3", "C2", "C5", "C1", "C4")

# item: (sa, a, d, sd, n, positive %, negative %, neutral %)
LIKERT = {
    "P1": (31, 52, 0, 5, 5, 89, 5, 5),
    "C1": (26, 43, 4, 8, 12, 74, 13, 13),
    "C2": (24, 51, 1, 6, 11, 81, 8, 12),
    "C3": (29, 38, 3, 9, 14, 72, 13, 15),
    "C4": (24, 50, 2, 8, 9, 80, 11, 10),
    "C5": (27, 40, 3, 9, 14, 72, 13, 15),
    "P2": (29, 48, 2, 6, 8, 83, 9, 9),
    "C6": (31, 39, 4, 7, 12, 75, 12, 13),
    "C7": (26, 38, 6, 7, 16, 69, 14, 17),
    "C8": (23, 40, 4, 11, 15, 68, 16, 16),
    "C9": (30, 49, 0, 7, 7, 85, 8, 8),
    "C10": (31, 40, 4, 8, 10, 76, 13, 11),
    "C11": (27, 38, 5, 7, 16, 70, 13, 17),
    "C12": (29, 40, 4, 6, 14, 74, 11, 15),
    "C13": (30, 40, 3, 8, 12, 75, 12, 13),
    "P3": (24, 56, 3, 3, 7, 86, 6, 8),
    "C14": (30, 38, 5, 6, 14, 73, 12, 15),
    "C15": (26, 44, 3, 7, 13, 75, 11, 14),
    "C16": (39, 34, 2, 4, 14, 78, 6, 15),
    "C17": (27, 40, 5, 6, 15, 72, 12, 16),
    "P4": (37, 49, 0, 2, 5, 92, 2, 5),
    "C18": (30, 38, 5, 8, 12, 73, 14, 13),
    "C19": (27, 43, 6, 7, 10, 75, 14, 11),
    "C20": (33, 46, 4, 5, 5, 85, 10, 5),
    "C21": (27, 39, 5, 8, 14, 71, 14, 15),
    "C22": (29, 44, 0, 9, 11, 78, 10, 12),
}

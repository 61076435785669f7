"""
Covering-Grid Layouts of the Tame Families

Each layout places a D4-tilde or E6-tilde null-root representation on the
covering grid: rows run downwards, columns to the right, and every arrow
carries one of the letters below (a product like "FBA" is F.B.A, "I" is an
identity). Column sums are the partial sums d_p of the block vector.

D4-tilde, centre W = K^2, four lines in W:
    A, B, D : K -> W      lines <(0,1)>, <(1,1)>, <(1,t)>
    C       : W -> K      kernel <(1,0)>

E6-tilde, centre W = K^3, two incoming flags and one outgoing flag:
    A : K -> K^2, B : K^2 -> W     point w1 on the line <w1, w2>
    C : K -> K^2, D : K^2 -> W     point w1+w2+w3 on the line <w1+w2+w3, w2+t w3>
    F : W -> K^2                   kernel <w3>
    E : K^2 -> K  or  H : K -> K^2 together with F, the line <w2, w3>

The parameter sits on a single entry (D or its D4 analogue). Values of t
where the configuration degenerates (0 and 1 for every layout) give
decomposable or special representations.

A layout with close_top_chain is pushed down with the last basis vector
taken as the loop image of the one before it; for d4_222 this keeps the
member's entries in {0, 1, t}.
"""

from typing import Dict, Tuple

Vertex = Tuple[int, int]

GRID_LAYOUTS: Dict[str, Dict] = {
    "d4_222": {
        "kind": "d4",
        "close_top_chain": True,
        "rows": 4,
        "cols": 3,
        "dims": {
            (1, 3): 1,
            (2, 2): 1, (2, 3): 2,
            (3, 1): 1, (3, 2): 2, (3, 3): 2,
            (4, 1): 1, (4, 2): 1, (4, 3): 1,
        },
        "arrows": {
            "alpha_2_2": "B", "alpha_3_1": "A", "alpha_3_2": "I",
            "alpha_4_1": "I", "alpha_4_2": "I",
            "beta_1_3": "D", "beta_2_2": "B", "beta_2_3": "I",
            "beta_3_1": "CA", "beta_3_2": "C", "beta_3_3": "C",
        },
    },
    "e6_66": {
        "kind": "e6",
        "rows": 6,
        "cols": 2,
        "dims": {
            (1, 2): 1,
            (2, 2): 2,
            (3, 1): 1, (3, 2): 3,
            (4, 1): 2, (4, 2): 3,
            (5, 1): 2, (5, 2): 2,
            (6, 1): 1, (6, 2): 1,
        },
        "arrows": {
            "alpha_3_1": "BA", "alpha_4_1": "B", "alpha_5_1": "I", "alpha_6_1": "I",
            "beta_1_2": "C", "beta_2_2": "D", "beta_3_1": "A", "beta_3_2": "I",
            "beta_4_1": "FB", "beta_4_2": "F", "beta_5_1": "E", "beta_5_2": "E",
        },
    },
    "e6_414": {
        "kind": "e6",
        "rows": 5,
        "cols": 3,
        "dims": {
            (1, 3): 1,
            (2, 3): 2,
            (3, 1): 1, (3, 2): 2, (3, 3): 3,
            (4, 1): 2, (4, 2): 2, (4, 3): 2,
            (5, 1): 1, (5, 2): 1, (5, 3): 1,
        },
        "arrows": {
            "alpha_3_1": "A", "alpha_3_2": "B",
            "alpha_4_1": "I", "alpha_4_2": "I", "alpha_5_1": "I", "alpha_5_2": "I",
            "beta_1_3": "C", "beta_2_3": "D", "beta_3_1": "FBA", "beta_3_2": "FB",
            "beta_3_3": "F", "beta_4_1": "E", "beta_4_2": "E", "beta_4_3": "E",
        },
    },
    "e6_146": {
        "kind": "e6",
        "rows": 5,
        "cols": 3,
        "dims": {
            (1, 3): 1,
            (2, 3): 2,
            (3, 2): 1, (3, 3): 3,
            (4, 2): 2, (4, 3): 3,
            (5, 1): 1, (5, 2): 2, (5, 3): 2,
        },
        "arrows": {
            "alpha_3_2": "BA", "alpha_4_2": "B", "alpha_5_1": "H", "alpha_5_2": "I",
            "beta_1_3": "C", "beta_2_3": "D", "beta_3_2": "A", "beta_3_3": "I",
            "beta_4_2": "FB", "beta_4_3": "F",
        },
    },
    "e6_1441": {
        "kind": "e6",
        "rows": 4,
        "cols": 4,
        "dims": {
            (1, 3): 1, (1, 4): 2,
            (2, 2): 1, (2, 3): 3, (2, 4): 3,
            (3, 2): 2, (3, 3): 3, (3, 4): 3,
            (4, 1): 1, (4, 2): 2, (4, 3): 2, (4, 4): 2,
        },
        "arrows": {
            "alpha_1_3": "C", "alpha_2_2": "BA", "alpha_2_3": "I", "alpha_3_2": "B",
            "alpha_3_3": "I", "alpha_4_1": "H", "alpha_4_2": "I", "alpha_4_3": "I",
            "beta_1_3": "DC", "beta_1_4": "D", "beta_2_2": "A", "beta_2_3": "I",
            "beta_2_4": "I", "beta_3_2": "FB", "beta_3_3": "F", "beta_3_4": "F",
        },
    },
    "e6_1214": {
        "kind": "e6",
        "rows": 4,
        "cols": 4,
        "dims": {
            (1, 4): 1,
            (2, 4): 2,
            (3, 2): 1, (3, 3): 2, (3, 4): 3,
            (4, 1): 1, (4, 2): 2, (4, 3): 2, (4, 4): 2,
        },
        "arrows": {
            "alpha_3_2": "A", "alpha_3_3": "B", "alpha_4_1": "H", "alpha_4_2": "I",
            "alpha_4_3": "I",
            "beta_1_4": "C", "beta_2_4": "D", "beta_3_2": "FBA", "beta_3_3": "FB",
            "beta_3_4": "F",
        },
    },
    "e6_12121": {
        "kind": "e6",
        "rows": 3,
        "cols": 5,
        "dims": {
            (1, 4): 1, (1, 5): 2,
            (2, 2): 1, (2, 3): 2, (2, 4): 3, (2, 5): 3,
            (3, 1): 1, (3, 2): 2, (3, 3): 2, (3, 4): 2, (3, 5): 2,
        },
        "arrows": {
            "alpha_1_4": "C", "alpha_2_2": "A", "alpha_2_3": "B", "alpha_2_4": "I",
            "alpha_3_1": "H", "alpha_3_2": "I", "alpha_3_3": "I", "alpha_3_4": "I",
            "beta_1_4": "DC", "beta_1_5": "D", "beta_2_2": "FBA", "beta_2_3": "FB",
            "beta_2_4": "F", "beta_2_5": "F",
        },
    },
}


def extended_layout(k: int, n: int) -> Dict:
    """
    The (6,6) layout grown to d = (k, n): n - k - 6 extra one-dimensional
    spaces chained above the top of column 2, and k - 6 extra rows of two
    one-dimensional spaces below, all joined by identities.
    """
    base = GRID_LAYOUTS["e6_66"]
    above, below = n - k - 6, k - 6
    dims = {(row + above, col): d for (row, col), d in base["dims"].items()}
    arrows = {}
    for arrow, label in base["arrows"].items():
        kind, row, col = arrow.split("_")
        arrows[f"{kind}_{int(row) + above}_{col}"] = label
    for row in range(1, above + 1):
        dims[(row, 2)] = 1
        arrows[f"beta_{row}_2"] = "I"
    last = above + 6
    for row in range(last + 1, last + below + 1):
        dims[(row, 1)] = 1
        dims[(row, 2)] = 1
        arrows[f"alpha_{row}_1"] = "I"
        arrows[f"beta_{row - 1}_1"] = "I"
        arrows[f"beta_{row - 1}_2"] = "I"
    return {"kind": "e6", "rows": last + below, "cols": 2, "dims": dims, "arrows": arrows}

# This File Contains the Finiteness Tables Used by the Classifier

# ============================================================================
# MINIMAL INFINITE BLOCK VECTORS
# ============================================================================
# A block vector is representation-infinite iff one of its coarsenings
# dominates (<=_c) one of these or its reversal.
# Format: "name": {"enabled", "priority", "blocks", "description"}

MINIMAL_INFINITE_CASES = {
    "six_ones": {
        "enabled": True,
        "priority": 1,
        "blocks": (1, 1, 1, 1, 1, 1),
        "description": "Borel of GL_6: at least six blocks",
    },
    "d4_222": {
        "enabled": True,
        "priority": 2,
        "blocks": (2, 2, 2),
        "description": "One-parameter family from the D4-tilde null root",
    },
    "e6_12121": {
        "enabled": True,
        "priority": 3,
        "blocks": (1, 2, 1, 2, 1),
        "description": "E6-tilde family, five blocks",
    },
    "e6_1214": {
        "enabled": True,
        "priority": 4,
        "blocks": (1, 2, 1, 4),
        "description": "E6-tilde family, four blocks",
    },
    "e6_146": {
        "enabled": True,
        "priority": 5,
        "blocks": (1, 4, 6),
        "description": "E6-tilde family, three blocks",
    },
    "e6_1441": {
        "enabled": True,
        "priority": 6,
        "blocks": (1, 4, 4, 1),
        "description": "E6-tilde family, symmetric four blocks",
    },
    "e6_414": {
        "enabled": True,
        "priority": 7,
        "blocks": (4, 1, 4),
        "description": "E6-tilde family, symmetric three blocks",
    },
    "e6_66": {
        "enabled": True,
        "priority": 8,
        "blocks": (6, 6),
        "description": "E6-tilde family, maximal parabolic",
    },
}

# ============================================================================
# MAXIMAL FINITE FAMILIES
# ============================================================================
# Each family is a block-vector template with one free block "k".
# A block vector is finite iff it is dominated by a coarsening of a member
# (or of its reversal). "k_min" is the smallest k the template is used with.

MAXIMAL_FINITE_FAMILIES = {
    "five_k": {
        "enabled": True,
        "priority": 0,
        "template": (5, "k"),
        "k_min": 1,
        "description": "(5,k), reduced by labeled Young diagrams",
    },
    "five_k_one": {
        "enabled": True,
        "priority": 1,
        "template": (5, "k", 1),
        "k_min": 1,
        "description": "(5,k,1) and (1,k,5); contains (5,k)",
    },
    "one_three_k_one": {
        "enabled": True,
        "priority": 2,
        "template": (1, 3, "k", 1),
        "k_min": 1,
        "description": "(1,3,k,1) and (1,k,3,1)",
    },
    "three_one_k_one": {
        "enabled": True,
        "priority": 3,
        "template": (3, 1, "k", 1),
        "k_min": 1,
        "description": "(3,1,k,1) and (1,k,1,3)",
    },
    "ones_k_one": {
        "enabled": True,
        "priority": 4,
        "template": (1, 1, 1, "k", 1),
        "k_min": 1,
        "description": "(1,1,1,k,1) and (1,k,1,1,1); contains the Borel of GL_5",
    },
}

# ============================================================================
# REPRESENTATION TYPE OF THE BOUNDED ALGEBRA A(p, x)
# ============================================================================
# Finite iff p == 1 or x == 1 or (p, x) is listed here.
ALGEBRA_TYPE_FINITE_PAIRS = ((2, 2), (2, 3), (3, 2))

# Delta-filtered covering representations on a p-column, n-row grid:
# finite iff p == 1 or n <= 2 or (p, n) is listed here.
DELTA_TYPE_FINITE_PAIRS = ((2, 3), (3, 3), (4, 3), (2, 4), (2, 5))

# ============================================================================
# DIMENSION DICHOTOMIES
# ============================================================================
# Maximal parabolics (p == 2) have dim C(N_p) = dim p - 1 iff a block is at
# most this size.
MAXIMAL_PARABOLIC_SMALL_BLOCK = 5

# Minimal infinite cases for which a distinguished one-parameter family is
# constructed, so every block vector dominating them has dim C(N_p) >= dim p.
DISTINGUISHED_FAMILY_CASES = (
    (2, 2, 2),
    (6, 6),
    (4, 1, 4),
    (1, 4, 6),
    (1, 4, 4, 1),
    (1, 2, 1, 4),
    (1, 2, 1, 2, 1),
)

# This File Contains the Registry of Named One-Parameter Families

# Format: "name": {"enabled", "priority", "bv", "acting", "target",
#                  "field", "sample", "description"}
#   acting  - group whose orbits the family separates ("P" or "Levi")
#   target  - where members live ("cone" = N_p, "nilradical" = n_p)
#   field   - default certification field
#   sample  - default t values for certification (distinct in the field),
#             "all" for every element of the field
#   bv      - None when the block vector depends on extra parameters

FAMILY_REGISTRY = {
    "levi_nilr_111": {
        "enabled": True,
        "priority": 1,
        "bv": (1, 1, 1),
        "acting": "Levi",
        "target": "nilradical",
        "field": "GF(7)",
        "sample": "all",
        "description": "[[0,1,t],[0,0,1],[0,0,0]]; invariant x13/(x12*x23) = t",
    },
    "levi_cone_22": {
        "enabled": True,
        "priority": 2,
        "bv": (2, 2),
        "acting": "Levi",
        "target": "cone",
        "field": "GF(5)",
        "sample": "all",
        "description": "Square of four one-dimensional spaces with t on one edge",
    },
    "d4_222": {
        "enabled": True,
        "priority": 3,
        "bv": (2, 2, 2),
        "acting": "P",
        "target": "cone",
        "field": "GF(5)",
        "sample": (2, 3, 4),
        "description": "D4-tilde null root; four lines in K^2, t on the line <(1,t)>",
    },
    "e6_66": {
        "enabled": True,
        "priority": 4,
        "bv": (6, 6),
        "acting": "P",
        "target": "cone",
        "field": "GF(5)",
        "sample": (2, 3, 4),
        "description": "E6-tilde null root; three flags in K^3, t on the line <w1+w2+w3, w2+t*w3>",
    },
    "e6_414": {
        "enabled": True,
        "priority": 5,
        "bv": (4, 1, 4),
        "acting": "P",
        "target": "cone",
        "field": "GF(5)",
        "sample": (2, 3, 4),
        "description": "E6-tilde null root on the grid; t on the second flag line",
    },
    "e6_146": {
        "enabled": True,
        "priority": 6,
        "bv": (1, 4, 6),
        "acting": "P",
        "target": "cone",
        "field": "GF(5)",
        "sample": (2, 3, 4),
        "description": "E6-tilde null root on the grid; t on the second flag line",
    },
    "e6_1441": {
        "enabled": True,
        "priority": 7,
        "bv": (1, 4, 4, 1),
        "acting": "P",
        "target": "cone",
        "field": "GF(5)",
        "sample": (2, 3, 4),
        "description": "E6-tilde null root on the grid; t on the second flag line",
    },
    "e6_1214": {
        "enabled": True,
        "priority": 8,
        "bv": (1, 2, 1, 4),
        "acting": "P",
        "target": "cone",
        "field": "GF(5)",
        "sample": (2, 3, 4),
        "description": "E6-tilde null root on the grid; t on the second flag line",
    },
    "e6_12121": {
        "enabled": True,
        "priority": 9,
        "bv": (1, 2, 1, 2, 1),
        "acting": "P",
        "target": "cone",
        "field": "GF(5)",
        "sample": (2, 3, 4),
        "description": "E6-tilde null root on the grid; t on the second flag line",
    },
    "ext_kk": {
        "enabled": True,
        "priority": 10,
        "bv": None,
        "acting": "P",
        "target": "cone",
        "field": "GF(5)",
        "sample": (2, 3, 4),
        "description": "(6,6) family padded by identity rows; d = (k, n), k, n-k >= 6",
    },
    "commuting_pair": {
        "enabled": True,
        "priority": 11,
        "bv": None,
        "acting": "P",
        "target": "cone",
        "field": "GF(101)",
        "sample": (2, 3, 5),
        "description": "Commuting nilpotent pair (x_t, y_t) with cyclic vector e_n",
    },
}

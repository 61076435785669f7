# This File Contains Exact Arithmetic and Search Budget Parameters

# Default field for CLI input when a matrix literal omits "field"
DEFAULT_FIELD = "Q"

# Seed used whenever a command does not receive --seed
DEFAULT_SEED = 69

# ============================================================================
# GENERIC-ELEMENT NILPOTENCY (symbolic characteristic polynomial)
# ============================================================================
# Number of indeterminates allowed in the generic element of a subspace.
# Above this the caller falls back to the indecomposability route.
SYMBOLIC_VARIABLE_BUDGET = 24

# Largest ambient matrix size for which the symbolic expansion is attempted
SYMBOLIC_MATRIX_BUDGET = 9

# ============================================================================
# ISOMORPHISM SEARCH
# ============================================================================
# Hom spaces with at most this many points (q^dim) are enumerated exhaustively
ISO_ENUMERATION_BUDGET = 2**16

# Random points drawn from a larger hom space before the vertex-wise test
ISO_RANDOM_TRIALS = 64

# Budget of the last-resort symbolic determinant in the vertex-wise test.
# A vertex that still needs it above these sizes raises BudgetExceeded.
ISO_SYMBOLIC_VARIABLE_BUDGET = 64
ISO_SYMBOLIC_MATRIX_BUDGET = 16

# ============================================================================
# INDECOMPOSABILITY
# ============================================================================
# Over finite fields, End(M) is searched for non-trivial idempotents only up
# to this dimension; larger endomorphism rings are refused.
IDEMPOTENT_SEARCH_MAX_DIM = 12

# ============================================================================
# YOUNG DIAGRAM REDUCTION
# ============================================================================
# The reduction handles U-side partitions of size at most this value
REDUCTION_MAX_MU = 5

# Safety valve on the number of moves in one reduction
REDUCTION_MAX_MOVES = 2000

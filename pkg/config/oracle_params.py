# This File Contains Finite-Field Orbit Oracle Parameters

# Maximum size of the enumerated target set (q^dim of its ambient space)
ORBIT_SEARCH_CAP = 2**26

# Generator actions are tabulated as permutation arrays below this set size,
# and streamed in chunks above it
PERMUTATION_TABLE_LIMIT = 2**22

# Number of elements conjugated per vectorised chunk
CHUNK_SIZE = 2**16

# Primes sampled by growth profiles when none are given
DEFAULT_PRIMES = (2, 3, 5)

# Parallelization Settings
USE_MULTIPROCESSING = False  # Set to True to shard generator actions over workers
NUM_WORKERS = None  # None = use all available CPU cores, or specify manually (e.g., 4)

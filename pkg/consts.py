import math

MIN_STRANDS = 2

# Thurston types
PERIODIC = "Periodic"
REDUCIBLE = "Reducible"
PSEUDO_ANOSOV = "PseudoAnosov"

# log((3 + sqrt 5) / 2), smallest nonzero entropy of a 3-braid
MIN_ENTROPY_3 = math.log((3 + math.sqrt(5)) / 2)
PENNER_MIN_STRANDS = 3

DEFAULT_BURAU_SAMPLES = (-1.0,)
UNIT_CIRCLE_TOLERANCE = 1e-9
SPECTRAL_RADIUS_TOLERANCE = 1e-7
# radii within this multiple of (eps |M|)^(1/size) of 1 count as 1
DEFECTIVE_EIGENVALUE_FACTOR = 10.0
ORACLE_PARAMETER_ANGLE = 0.7
ORACLE_TOLERANCE = 1e-8
BIG_TRACE_BITS = 52

# Zjuzin criterion constant r0 = 2 pi / log 2
ZJUZIN_R0 = 2 * math.pi / math.log(2)

# Verdicts
ALGEBROID_EXCLUDED = "AlgebroidExcluded"
NOT_EXCLUDED = "NotExcluded"
GUARANTEED_REDUCIBLE = "GuaranteedReducible"
SOLVABLE_OVER_A = "SolvableOverA"
INCONCLUSIVE = "Inconclusive"
SATISFIES_NECESSARY_CONDITION = "SatisfiesNecessaryCondition"
FAILS_SUBGROUP = "FailsSubgroup"
FAILS_GARSIDE_CLAUSE = "FailsGarsideClause"
LEMMA2_LABEL = "conditional on Lemma 2 hypotheses"
THEOREM3_LABEL = "necessary condition"

# Polynomial loops
MIN_LOOP_SAMPLES = 8
DEFAULT_LOOP_SAMPLES = 64
DEFAULT_CLOSURE_TOLERANCE = 1e-6
SEPARABILITY_RELATIVE_FLOOR = 1e-9
MAX_REFINEMENT_DEPTH = 24
CERTIFIED_STEP_FRACTION = 0.5
NEWTON_POLISH_STEPS = 1

# Winding number
WINDING_STEP_BOUND = math.pi / 2
WINDING_RESIDUE_BOUND = 0.25

# Braid extraction
TIE_TOLERANCE = 1e-12
PROJECTION_PROBES = (0.0, 1e-3, 2e-3, 3e-3)

# CLI
THREADS_ENV_VAR = "BRAIDMOD_THREADS"
DEFAULT_THREADS = 1
SIGNIFICANT_DIGITS = 12
INFINITY_TEXT = "inf"
OUTPUT_FORMAT_KV = "kv"
OUTPUT_FORMAT_TABLE = "table"

EXIT_DEFINITIVE = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2

FILE_READ_MODE = "r"
FILE_WRITE_MODE = "w"
FILE_ENCODING = "utf-8"
DEFAULT_LOOP_DIR = "loops"
LOOP_FILE_SUFFIX = ".json"
LOOP_KINDS = ("power", "linear", "random")

# Float agreement
FLOAT_TOLERANCE = 1e-8
ROOT_FORM_TOLERANCE = 1e-10
VANDERMONDE_TOLERANCE = 1e-9
V_FORM_TOLERANCE = 1e-9

# Finite-difference oracle
FD_STEP = 1e-6
FD_TOLERANCE = 1e-6

# Unit-circle decisions
MARGIN_ESCALATION = 1e-9
CIRCLE_TOLERANCE = 1e-6

# Root finder (Aberth-Ehrlich)
ABERTH_MAX_ITERATIONS = 500
ABERTH_STEP_TOLERANCE = 1e-14
ROOT_RESIDUAL_BOUND = 1e-11
PAIRING_TOLERANCE = 1e-8
MULTIPLE_ROOT_SEPARATION = 1e-7

# Sampler
SAMPLER_COEFF_BOUND = 10
SAMPLER_MAX_DENOMINATOR = 64
DEFAULT_SAMPLER_TRIALS = 10_000
DISCRIMINANT_FLOOR = 1e-12
DILATION_RANGE = (0.3, 0.9)

# CLI
MAX_DEGREE = 10

'''
Common tolerances, caps and defaults
'''

# entrywise comparisons of matrix identities
EXACT_TOL = 1e-10

# eigenvalue and representation checks
SPECTRAL_TOL = 1e-9

# operator norms of graded pieces
ISOMETRY_TOL = 1e-8

# Gram matrices: eigenvalues below GRAM_DROP are null directions,
# eigenvalues in (GRAM_DROP, GRAM_REJECT) make the instance undecidable
GRAM_DROP = 1e-12
GRAM_REJECT = 1e-8

DEFAULT_CAP = 10_000

DEFAULT_TIMEOUT_SECONDS = 5 * 60

ORDERS = ('index', 'lex')

NONNEGATIVE = 'nonnegative'
NOT_NONNEGATIVE = 'not-nonnegative'
UNDECIDED = 'undecided-numeric'

THEOREM_MAIN = 'main'
THEOREM_MAIN2 = 'main2'
THEOREM_TIMOFTE = 'timofte'

THEOREMS = (
    (THEOREM_MAIN, '2-points, one free term'),
    (THEOREM_MAIN2, '(m-1)-points, m-2 free terms'),
    (THEOREM_TIMOFTE, 'half-degree points, any even symmetric form'),
)

PASS = 'pass'
FAIL = 'fail'
UNDECIDED_OUTCOME = 'undecided'

EXACT = 'exact'
NUMERIC = 'numeric'
LOWER_STRATUM = 'lower-stratum'

# Two coordinates closer than this (or a coordinate this close to 0) put a
# numeric minimizer on a lower stratum
STRATUM_TOLERANCE = 1e-6

# Denominator cap when rounding a numeric minimizer to a rational point
WITNESS_DENOMINATOR = 10 ** 6

PRESET_CUBE = 'cube'
PRESET_SLICES = 'slices'

PRESETS = (
    (PRESET_CUBE, 'alpha, beta, gamma in [-4, 4], integers'),
    (PRESET_SLICES, 'alpha in {1, 2}, beta, gamma in [-10, 10], integers'),
)

PRESET_RANGES = {
    PRESET_CUBE: ((-4, 4, 1), (-4, 4, 1), (-4, 4, 1)),
    PRESET_SLICES: ((1, 2, 1), (-10, 10, 1), (-10, 10, 1)),
}

IN_THEOREM = ''
OUT_OF_THEOREM = 'out-of-theorem'

MIXED_METHODS = 'mixed'

# Numeric settings for the 3-value patterns of out-of-theorem grid points
SCAN_RESTARTS = 12
SCAN_MAX_ITERATIONS = 500

CSV_HEADER = ('alpha', 'beta', 'gamma', 'verdict', 'witness', 'pattern', 'method', 'annotation')

# SVG layout in pixels
PANEL_SIZE = 240
PANEL_MARGIN = 40
CELL_FILL = {
    'nonnegative': '#2b8cbe',
    'not-nonnegative': '#f0f0f0',
    'undecided-numeric': '#fdae6b',
}


# arithmetic modes
EXACT = "exact"
FLOAT = "float"

# commands
CHECK = "check"
CANON = "canon"
ROOTS = "roots"
GEN = "gen"
SEARCH = "search"
RENDER = "render"
LEMMAS = "lemmas"

# channels
TERMINAL = "terminal"
FILE = "file"

# exit codes, stable across commands
EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2

# report float formatting
FLOAT_FORMAT = ".17g"

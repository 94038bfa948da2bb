#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# group kinds
FINITE = 'finite'
FREE_ABELIAN = 'free_abelian'
FREE = 'free'
INFINITE_CYCLIC = 'infinite_cyclic'
KLEIN_BOTTLE = 'klein_bottle'

GROUP_KINDS = (FINITE, FREE_ABELIAN, FREE, INFINITE_CYCLIC, KLEIN_BOTTLE)

# coefficient regimes
H1 = 'H1'
H2 = 'H2'
H3 = 'H3'

REGIMES = (H1, H2, H3)

# novikov precision
DEFAULT_PRECISION = 32
DEFAULT_LEVELS = 8

# input kinds
DECOMPOSITION = 'decomposition'
CIRCLE_MORSE = 'circle_morse'
MORSE = 'morse'
NDELTA = 'ndelta'

SCHEMA_VERSION = 1

# output formats
HUMAN = 'human'
JSON = 'json'

# commands
COMMANDS = ('validate', 'assemble', 'project', 'homology', 'tower', 'report')

# exit codes
EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2
EXIT_PRECISION = 3

# integers above this magnitude serialize as strings
JSON_INT_LIMIT = 2**63

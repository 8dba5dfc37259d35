"""Default settings for reprometer.

This module defines the defaults used whenever neither a config file nor a
command-line flag says otherwise.
"""

# Assessment
DEFAULT_CI_LEVEL = 0.95
DEFAULT_MODE = "one"
DEFAULT_FORMAT = "text"

# Prose rounding
CV_STAR_DECIMALS = 3
CI_DECIMALS = 3
PERCENT_DECIMALS = 2
MAX_VALUE_DECIMALS = 4
EXTRA_VALUE_DECIMALS = 2

# CV is still computed below this size but flagged as unreliable
MIN_RELIABLE_SAMPLE_SIZE = 3

# Structured output
STRUCTURED_FORMAT_VERSION = "1"

# Exit codes
EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2

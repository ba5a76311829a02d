"""Entry point for ``python -m weightmult``."""

import sys

from .cli import main

sys.exit(main())

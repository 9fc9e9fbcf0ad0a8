"""Entry point of `python -m skentangle`."""

import sys

from .cli import main

sys.exit(main())

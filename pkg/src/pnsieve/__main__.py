"""Module entry point: python -m pnsieve behaves like the pnsieve script."""

import sys

from pnsieve.cli import main

if __name__ == "__main__":
    sys.exit(main())

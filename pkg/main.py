"""Main entry point for jointspec."""

import sys

from jointspec.main import main

if __name__ == "__main__":
    sys.exit(main())

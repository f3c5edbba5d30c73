import sys

from treespectrum.cli import main

sys.exit(main())

import sys

from coendcheck.cli import main

sys.exit(main())

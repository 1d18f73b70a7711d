import sys

from duality_triads.cli import main

sys.exit(main())

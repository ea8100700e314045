import sys

from tonnetz.cli import main

sys.exit(main())

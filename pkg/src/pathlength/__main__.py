import sys

from pathlength.cli import main

sys.exit(main())

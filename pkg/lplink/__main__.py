import sys

from lplink.cli import main

sys.exit(main())

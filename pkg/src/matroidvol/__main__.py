import sys

from matroidvol.cli import main

sys.exit(main())

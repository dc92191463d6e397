import sys

from qhowe.cli import main

sys.exit(main())

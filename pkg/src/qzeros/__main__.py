import sys

from qzeros.cli import main

sys.exit(main())

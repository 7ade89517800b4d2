import sys

from di9.cli import main

sys.exit(main())

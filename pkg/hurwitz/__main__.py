import sys

from hurwitz.cli import main

sys.exit(main())

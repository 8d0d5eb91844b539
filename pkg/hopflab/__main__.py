import sys

from hopflab.cli import main

sys.exit(main())

import sys

from resgames.cli import main

sys.exit(main())

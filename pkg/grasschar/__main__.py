import sys

from grasschar.main import run

sys.exit(run())

import sys

from hurwitz_divisors.cli import main

sys.exit(main())

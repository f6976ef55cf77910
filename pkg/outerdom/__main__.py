import sys

from outerdom.cli import main

sys.exit(main())

# isecode/start.py

import sys
from isecode.main import main

if __name__ == "__main__":
    sys.exit(main())

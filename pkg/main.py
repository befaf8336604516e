import sys

from parrondo.cli import main


if __name__ == "__main__":
    sys.exit(main())

"""Enable `python -m ringprob.cli` execution."""

from . import main

if __name__ == "__main__":
    main()

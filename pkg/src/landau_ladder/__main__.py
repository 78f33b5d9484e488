"""Allow ``python -m landau_ladder ...`` to behave exactly like the console script."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())

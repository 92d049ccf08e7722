"""Entry point for ``python -m semlat``."""

from .cli import main

if __name__ == "__main__":
    main()

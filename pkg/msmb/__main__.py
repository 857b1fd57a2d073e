# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())

"""Console entrypoint."""

import sys
from pathlib import Path

# Ensure the repo root and scripts/ are in path
ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT / "scripts"))
sys.path.insert(0, str(ROOT))

from cli.app import parse_and_dispatch


def main() -> None:
    sys.exit(parse_and_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()

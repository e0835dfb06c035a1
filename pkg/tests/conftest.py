import os
from pathlib import Path

# Tests and the CLI subprocesses they spawn share the repository's golden
# directory, so frozen constants certify once and stay pinned.
os.environ.setdefault("ZETASUM_GOLDEN_DIR",
                      str(Path(__file__).resolve().parent.parent / "golden"))

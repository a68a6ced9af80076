"""CLI configuration."""

import sys
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field

# Add scripts to path so the domain packages are importable
SCRIPTS_DIR = Path(__file__).parent.parent / "scripts"
if str(SCRIPTS_DIR) not in sys.path:
    sys.path.insert(0, str(SCRIPTS_DIR))


class CLIConfig(BaseModel):
    prog: str = "scc-lab"
    default_format: Literal["json", "csv"] = "json"
    indent: int = Field(default=2, ge=0)

from common.errors import (
    InvalidArgumentError,
    LabError,
    ResourceLimitError,
    UnsupportedError,
)

__all__ = [
    "InvalidArgumentError",
    "LabError",
    "ResourceLimitError",
    "UnsupportedError",
]

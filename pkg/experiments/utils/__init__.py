from .utils import (
    format_plt,
    Logger,
    COLORS,
    now,
)

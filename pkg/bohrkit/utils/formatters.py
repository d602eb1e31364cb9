"""
BOHRKIT Formatters Module

Console formatting for constant tables, verification summaries and
colored status output.
"""

import os
import sys
from typing import Any, Dict, List


class Colors:
    """ANSI color codes."""
    RESET = "\033[0m"
    BOLD = "\033[1m"
    DIM = "\033[2m"

    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    CYAN = "\033[36m"
    BRIGHT_RED = "\033[91m"

    @classmethod
    def disable(cls) -> None:
        """Blank every code so output is plain text."""
        for name in ("RESET", "BOLD", "DIM", "RED", "GREEN", "YELLOW", "CYAN", "BRIGHT_RED"):
            setattr(cls, name, "")


def supports_color() -> bool:
    """Check if the terminal supports color output."""
    if os.environ.get('NO_COLOR'):
        return False
    if not hasattr(sys.stdout, 'isatty'):
        return False
    return sys.stdout.isatty()


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def format_number(value: Any, digits: int = 10) -> str:
    """Floats with a fixed number of significant digits; None as an empty cell."""
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


class Formatter:
    """
    Output formatting for the BOHRKIT CLI.

    Tables and status markers for constant tables and verification reports.
    """

    def __init__(self, use_color: bool = True):
        self.use_color = use_color and supports_color()

    def colorize(self, text: str, color: str) -> str:
        """Apply color to text if colors are enabled."""
        if self.use_color and color:
            return f"{color}{text}{Colors.RESET}"
        return text

    def bold(self, text: str) -> str:
        return self.colorize(text, Colors.BOLD)

    def success(self, text: str) -> str:
        return self.colorize(text, Colors.GREEN)

    def error(self, text: str) -> str:
        return self.colorize(text, Colors.BRIGHT_RED)

    def warning(self, text: str) -> str:
        return self.colorize(text, Colors.YELLOW)

    def info(self, text: str) -> str:
        return self.colorize(text, Colors.CYAN)

    def simple_table(self, headers: List[str], rows: List[List[Any]]) -> str:
        """
        Borderless table. Numeric columns are right-aligned with 10
        significant digits; None renders as an empty cell.
        """
        if not rows:
            return "No data to display."

        cells = [[format_number(c) for c in row] for row in rows]
        numeric = [
            all(_is_number(row[i]) or row[i] is None for row in rows if i < len(row))
            for i in range(len(headers))
        ]
        widths = [len(str(h)) for h in headers]
        for row in cells:
            for i, cell in enumerate(row[:len(widths)]):
                widths[i] = max(widths[i], len(cell))

        def align(text: str, i: int) -> str:
            return text.rjust(widths[i]) if numeric[i] else text.ljust(widths[i])

        # Pad before colouring; escape codes have no width.
        lines = [
            "  ".join(self.bold(align(str(h), i)) for i, h in enumerate(headers)),
            "─" * (sum(widths) + 2 * (len(widths) - 1)),
        ]
        lines.extend("  ".join(align(c, i) for i, c in enumerate(row[:len(widths)])) for row in cells)
        return "\n".join(lines)

    def status_icon(self, status: str) -> str:
        """Marker for a report status."""
        icons = {
            'pass': self.success("✓ pass"),
            'fail': self.error("✗ fail"),
            'degenerate': self.warning("○ degenerate"),
            'finding': self.warning("⚠ finding"),
        }
        return icons.get(status.lower(), status)

    def key_value(self, data: Dict[str, Any], indent: int = 0) -> str:
        """Format key-value pairs."""
        prefix = "  " * indent
        max_key_len = max(len(str(k)) for k in data.keys()) if data else 0
        return "\n".join(
            f"{prefix}{self.bold(str(key).ljust(max_key_len))} : {format_number(value)}"
            for key, value in data.items()
        )

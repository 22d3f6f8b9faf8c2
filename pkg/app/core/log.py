import logging

from rich.console import Console
from rich.logging import RichHandler

# Terms contain square brackets; markup would swallow them
console = Console(markup=False, highlight=False, soft_wrap=True)
err_console = Console(stderr=True, markup=False, highlight=False, soft_wrap=True)


def configure_logging(level: str = "WARNING") -> None:
    """Route the standard logging tree through rich on stderr."""
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, markup=False, show_path=False)],
        force=True,
    )

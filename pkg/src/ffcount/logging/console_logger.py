"""Diagnostics on standard error, shown with --verbose."""

from datetime import datetime
from typing import Any, List, Optional

from rich.console import Console

from ffcount.logging.logger import LogEntry, RunLogger


class ConsoleLogger(RunLogger):
    """Prints entries to a rich console bound to stderr; stdout stays JSON only."""

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console(stderr=True)
        self.entries: List[LogEntry] = []

    def init(self, session_name: str) -> bool:
        self.console.print(f"[dim]ffcount {session_name}[/dim]")
        return True

    def log(
        self,
        message: str,
        command: Optional[str] = None,
        level: str = "info",
        **metadata: Any
    ) -> bool:
        entry = LogEntry(datetime.now(), message, command, level, metadata)
        self.entries.append(entry)
        style = self._get_level_style(level)
        details = " ".join(f"{k}={v}" for k, v in metadata.items())
        self.console.print(f"[{style}]{level:>7}[/{style}] {message} [dim]{details}[/dim]")
        return True

    def get_report(self) -> str:
        return "\n".join(f"{e.level}: {e.message}" for e in self.entries)

    def _get_level_style(self, level: str) -> str:
        return {
            "success": "green",
            "error": "red",
            "warning": "yellow",
        }.get(level, "cyan")

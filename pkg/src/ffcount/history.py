"""Run history: reads the JSON Lines run log and renders it."""

import json
from collections import defaultdict
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ffcount.config import Config


class RunHistory:
    """Read and display past invocations."""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()

    def read_entries(
        self,
        limit: Optional[int] = None,
        command: Optional[str] = None
    ) -> List[Dict[str, Any]]:
        """Entries in file order, filtered by command; the last ``limit`` kept."""
        if not self.config.run_log.exists():
            return []

        entries = []
        with open(self.config.run_log, 'r') as f:
            for line in f:
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if command and entry.get("command") != command:
                    continue
                entries.append(entry)

        if limit is not None:
            entries = entries[-limit:] if limit > 0 else []
        return entries

    def display(
        self,
        console: Console,
        limit: Optional[int] = 20,
        command: Optional[str] = None
    ) -> None:
        """Display recent runs and per-command totals."""
        entries = self.read_entries(limit=limit, command=command)

        if not entries:
            console.print("[yellow]No runs recorded.[/yellow]")
            return

        by_command: Dict[str, Dict[str, float]] = defaultdict(
            lambda: {"runs": 0, "errors": 0, "elapsed": 0.0}
        )
        for entry in entries:
            stats = by_command[entry.get("command") or "?"]
            stats["runs"] += 1
            stats["elapsed"] += float(entry.get("elapsed_ms") or 0.0)
            if entry.get("level") == "error":
                stats["errors"] += 1

        summary = (
            f"[bold]Runs:[/bold] {len(entries):,}\n"
            f"[bold]Errors:[/bold] {sum(int(s['errors']) for s in by_command.values()):,}"
        )
        console.print(Panel(summary, title="Run History", border_style="green"))

        table = Table(show_header=True, header_style="bold cyan")
        table.add_column("Time")
        table.add_column("Command")
        table.add_column("Field")
        table.add_column("Method")
        table.add_column("Count", justify="right")
        table.add_column("ms", justify="right")
        table.add_column("Status")
        for entry in entries:
            status = entry.get("level", "info")
            style = "red" if status == "error" else "green"
            count = entry.get("count")
            table.add_row(
                str(entry.get("timestamp", ""))[:19],
                str(entry.get("command") or ""),
                str(entry.get("field") or ""),
                str(entry.get("method") or entry.get("reason") or ""),
                f"{count:,}" if isinstance(count, int) else "",
                f"{float(entry.get('elapsed_ms') or 0.0):.1f}",
                f"[{style}]{status}[/{style}]",
            )
        console.print(table)

        if len(by_command) > 1:
            console.print("\n[bold]By Command:[/bold]")
            command_table = Table(show_header=True, header_style="bold cyan")
            command_table.add_column("Command")
            command_table.add_column("Runs", justify="right")
            command_table.add_column("Errors", justify="right")
            command_table.add_column("Total ms", justify="right")
            for name in sorted(by_command):
                stats = by_command[name]
                command_table.add_row(
                    name,
                    f"{int(stats['runs']):,}",
                    f"{int(stats['errors']):,}",
                    f"{stats['elapsed']:.1f}",
                )
            console.print(command_table)

"""Append-only JSON Lines run log."""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, List, Optional

from ffcount.logging.logger import LogEntry, RunLogger


class JsonlRunLogger(RunLogger):
    """Writes one JSON object per line to the run log (``runs.jsonl``)."""

    def __init__(self, log_file: Path):
        self.log_file = log_file
        self.entries: List[LogEntry] = []

    def init(self, session_name: str) -> bool:
        try:
            self.log_file.parent.mkdir(parents=True, exist_ok=True)
            self.log_file.touch(exist_ok=True)
            return True
        except OSError:
            return False

    def log(
        self,
        message: str,
        command: Optional[str] = None,
        level: str = "info",
        **metadata: Any
    ) -> bool:
        entry = LogEntry(
            timestamp=datetime.now(),
            message=message,
            command=command,
            level=level,
            metadata=metadata,
        )
        self.entries.append(entry)
        try:
            with open(self.log_file, 'a') as f:
                f.write(json.dumps(entry.to_dict(), sort_keys=True, default=str) + "\n")
            return True
        except OSError:
            return False

    def get_report(self) -> str:
        failures = sum(1 for e in self.entries if e.level == "error")
        return f"{len(self.entries)} entries written to {self.log_file} ({failures} errors)"

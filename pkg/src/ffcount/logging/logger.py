"""Abstract run logger interface."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Optional


@dataclass
class LogEntry:
    """A log entry for one step of an invocation."""
    timestamp: datetime
    message: str
    command: Optional[str] = None
    level: str = "info"  # info, success, error, warning
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "timestamp": self.timestamp.isoformat(),
            "message": self.message,
            "command": self.command,
            "level": self.level,
            **self.metadata,
        }


class RunLogger(ABC):
    """Abstract base class for run logging."""

    @abstractmethod
    def init(self, session_name: str) -> bool:
        """Prepare the backend.

        Args:
            session_name: Name of the invocation (usually the subcommand)

        Returns:
            True if successful
        """
        pass

    @abstractmethod
    def log(
        self,
        message: str,
        command: Optional[str] = None,
        level: str = "info",
        **metadata: Any
    ) -> bool:
        """Log an entry.

        Args:
            message: Log message
            command: Subcommand the entry belongs to
            level: Log level (info, success, error, warning)
            **metadata: Additional metadata (field, method, count, elapsed_ms, ...)

        Returns:
            True if successful
        """
        pass

    @abstractmethod
    def get_report(self) -> str:
        """Summarize the entries logged so far."""
        pass

    def get_logger_name(self) -> str:
        """Get logger backend name."""
        return self.__class__.__name__.replace('Logger', '').lower()

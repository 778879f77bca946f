"""Run logging for ffcount invocations."""

from ffcount.logging.console_logger import ConsoleLogger
from ffcount.logging.jsonl_logger import JsonlRunLogger
from ffcount.logging.logger import LogEntry, RunLogger

__all__ = ["RunLogger", "LogEntry", "JsonlRunLogger", "ConsoleLogger"]

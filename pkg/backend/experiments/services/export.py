"""
Export service for experiment reports.

Supports JSONL and CSV. ReportWriter streams rows to a file as instances
finish; emit_report writes a whole batch.
"""
import csv
import io
import json
import logging
import threading
from typing import Any, Dict, Iterable, List, Optional, TextIO

logger = logging.getLogger(__name__)

FORMATS = ('csv', 'jsonl')


def report_to_dict(report) -> Dict[str, Any]:
    """Render a RunReport in the fixed column order."""
    from experiments.serializers import RunReportSerializer

    return dict(RunReportSerializer(report).data)


def report_to_flat_dict(report) -> Dict[str, Any]:
    """Render a RunReport as one CSV row."""
    from experiments.serializers import report_to_flat_dict as flatten

    return flatten(report_to_dict(report))


def export_to_jsonl(reports: Iterable) -> str:
    """Export reports to JSONL format (one JSON object per line)."""
    return "".join(json.dumps(report_to_dict(r), ensure_ascii=False) + "\n" for r in reports)


def export_to_csv(reports: Iterable) -> str:
    """Export reports to CSV format."""
    rows = [report_to_flat_dict(r) for r in reports]
    if not rows:
        return ""

    output = io.StringIO()
    writer = csv.DictWriter(output, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return output.getvalue()


def parse_jsonl(text: str) -> List[Dict[str, Any]]:
    """Read JSONL reports back into dictionaries."""
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class ReportWriter:
    """
    Append-only report stream.

    Every row is flushed as soon as it is written, so an interrupted batch
    leaves all completed rows on disk. One writer may be shared by several
    threads.

    Raises:
        OSError: the path cannot be opened for writing
    """

    def __init__(self, path: str, format: str = 'jsonl', stream: Optional[TextIO] = None):
        if format not in FORMATS:
            raise ValueError(f"Unknown report format {format!r}; choose from {', '.join(FORMATS)}")
        self.path = path
        self.format = format
        self.rows = 0
        self._lock = threading.Lock()
        self._stream = stream if stream is not None else open(path, 'w', newline='', encoding='utf-8')
        self._csv: Optional[csv.DictWriter] = None

    def write(self, report) -> None:
        with self._lock:
            if self.format == 'jsonl':
                self._stream.write(json.dumps(report_to_dict(report), ensure_ascii=False) + "\n")
            else:
                row = report_to_flat_dict(report)
                if self._csv is None:
                    self._csv = csv.DictWriter(self._stream, fieldnames=list(row.keys()), lineterminator="\n")
                    self._csv.writeheader()
                self._csv.writerow(row)
            self._stream.flush()
            self.rows += 1

    def close(self) -> None:
        with self._lock:
            if not self._stream.closed:
                self._stream.close()
        logger.debug(f"Wrote {self.rows} report row(s) to {self.path}")

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()


def emit_report(reports: Iterable, path: str, format: str = 'jsonl') -> int:
    """
    Write a batch of reports to path.

    Returns:
        Number of rows written
    """
    with ReportWriter(path, format) as writer:
        for report in reports:
            writer.write(report)
        return writer.rows

# harness/event_logger.py
import csv
import os
from datetime import datetime

import config
from utils.logger import logger

REPORT_FIELDS = ("timestamp", "identity", "params", "trunc_twice", "pass", "elapsed_ms", "error")


class EventLogger:
    """Appends one CSV row per verified grid point, or per point that raised."""

    def __init__(self, log_dir=None, filename='verify_reports.csv'):
        self.log_dir = config.REPORT_DIR if log_dir is None else log_dir
        self.filepath = os.path.join(self.log_dir, filename)
        os.makedirs(self.log_dir, exist_ok=True)
        self.header_written = self._has_report_header()

    def _has_report_header(self):
        if not os.path.exists(self.filepath) or os.path.getsize(self.filepath) == 0:
            return False
        with open(self.filepath, newline='') as f:
            header = next(csv.reader(f), [])
        if tuple(header) != REPORT_FIELDS:
            # rows from another schema; start a fresh file
            logger.warning(f"{self.filepath} has header {header}, rewriting with {list(REPORT_FIELDS)}")
            os.remove(self.filepath)
            return False
        return True

    def _append(self, row):
        try:
            with open(self.filepath, mode='a', newline='') as csvfile:
                writer = csv.DictWriter(csvfile, fieldnames=REPORT_FIELDS)
                if not self.header_written:
                    writer.writeheader()
                    self.header_written = True
                writer.writerow(row)
            logger.debug(f"Report row logged to {self.filepath}: {row}")
        except OSError as e:
            logger.error(f"Error logging report to CSV: {e}")

    def log_report(self, report):
        """
        Logs a VerifyReport: identity id, params, pass / fail, truncation and elapsed time.
        Args:
            report (VerifyReport): The outcome to record.
        """
        row = {'timestamp': datetime.now().isoformat(timespec='seconds'), 'error': ''}
        row.update(report.summary_row())
        self._append(row)

    def log_error(self, identity_id, params, error):
        """
        Logs a grid point whose check raised instead of producing a report.
        Args:
            identity_id (str): The identity.
            params (dict): Its parameters.
            error (str): "ExceptionName: message".
        """
        self._append({
            'timestamp': datetime.now().isoformat(timespec='seconds'),
            'identity': identity_id,
            'params': ", ".join(f"{k}={v}" for k, v in params.items()),
            'trunc_twice': '',
            'pass': False,
            'elapsed_ms': '',
            'error': error,
        })

# harness/report_generator.py
import json
import os

import pandas as pd

import config
from utils.logger import logger


class ReportGenerator:
    def __init__(self):
        logger.info("ReportGenerator initialized.")

    def build_table(self, reports):
        """
        One row per report.
        Args:
            reports (list): VerifyReport objects.
        Returns:
            pd.DataFrame: Columns identity, params, trunc_twice, pass, elapsed_ms.
        """
        columns = ['identity', 'params', 'trunc_twice', 'pass', 'elapsed_ms']
        return pd.DataFrame([r.summary_row() for r in reports], columns=columns)

    def summarize(self, reports):
        """Pass / fail counts and time per identity id."""
        table = self.build_table(reports)
        if table.empty:
            return pd.DataFrame(columns=['checks', 'passed', 'failed', 'elapsed_ms'])
        grouped = table.groupby('identity')
        summary = pd.DataFrame({
            'checks': grouped.size(),
            'passed': grouped['pass'].sum().astype(int),
            'elapsed_ms': grouped['elapsed_ms'].sum(),
        })
        summary.insert(2, 'failed', summary['checks'] - summary['passed'])
        return summary

    def generate_report(self, grid_results):
        """
        Generates a plain-text report of a grid run.
        Args:
            grid_results (dict): Summary returned by GridRunner.run_grid().
        Returns:
            str: Plain text report.
        """
        reports = grid_results['reports']
        lines = [
            "--- Verification Report ---",
            "",
            f"Grid:      {grid_results['grid']}",
            f"Duration:  {grid_results['duration_seconds']:.2f} seconds",
            f"Checks:    {grid_results['total']} ({grid_results['passed']} passed, {grid_results['failed']} failed)",
            f"Errors:    {len(grid_results['errors'])}",
            f"Skipped:   {grid_results['skipped']}",
            "",
        ]
        if reports:
            lines += [self.summarize(reports).to_string(), ""]
        failed = [r for r in reports if not r.passed]
        if failed:
            lines.append("Failed checks:")
            lines += [f"  {r.identity_id} {r.params}: diff {r.diff}" for r in failed]
            lines.append("")
        for error in grid_results['errors']:
            lines.append(f"  error {error['identity']} {error['params']}: {error['error']}")
        lines.append("--- End of Report ---")
        logger.info("Verification report generated.")
        return "\n".join(lines)

    def render(self, reports, output_format=None):
        """
        Renders reports for the console.
        Args:
            reports (list): VerifyReport objects.
            output_format (str, optional): 'json' or 'table'. Defaults to config.OUTPUT_FORMAT.
        Returns:
            str: JSON array of reports, or an aligned table.
        """
        output_format = output_format or config.OUTPUT_FORMAT
        if output_format == 'table':
            return self.build_table(reports).to_string(index=False)
        return json.dumps([r.to_json() for r in reports], indent=2)

    def save_report_to_file(self, report_text, filepath=None):
        """
        Saves report text (or JSON) to a file.
        Args:
            report_text (str): The report.
            filepath (str, optional): Target path. Defaults to REPORT_DIR/verify_report.txt.
        Returns:
            str | None: The path written, None on failure.
        """
        filepath = filepath or os.path.join(config.REPORT_DIR, 'verify_report.txt')
        try:
            directory = os.path.dirname(filepath)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(filepath, 'w') as f:
                f.write(report_text)
            logger.info(f"Verification report saved to: {filepath}")
            return filepath
        except Exception as e:
            logger.error(f"Error saving verification report to file: {e}")
            return None


if __name__ == '__main__':
    from harness.grid_runner import GridRunner, GridSpec

    results = GridRunner().run_grid(GridSpec({"eval1": {"n": [1, 2], "r": [0]}}, K=8))
    report_generator = ReportGenerator()
    report_text = report_generator.generate_report(results)
    print(report_text)
    report_generator.save_report_to_file(report_text)

"""
Script to generate an acceptance report from existing evaluation results.
"""
import json
from datetime import datetime
from pathlib import Path

from pydantic import BaseModel

from evaluation_models import CriterionResult


class AcceptanceReport(BaseModel):
    total_criteria: int
    passed_criteria: int
    failed_criteria: int
    errored_criteria: int

    pass_rate: float

    # Runtime
    total_runtime_seconds: float
    over_budget: list[int]

    # Detailed results
    failed_ids: list[int]
    rows: list[dict]

    timestamp: str


def generate_acceptance_report(results: list[CriterionResult]) -> AcceptanceReport:
    """
    Generate an acceptance report from criterion results.

    Args:
        results: List of CriterionResult objects

    Returns:
        AcceptanceReport object
    """
    total = len(results)
    passed = sum(1 for r in results if r.passed)

    rows = [
        {
            "id": r.criterion_id,
            "name": r.name,
            "passed": r.passed,
            "cases": r.checked_cases,
            "runtime_seconds": r.runtime_seconds,
            "budget_seconds": r.runtime_budget_seconds,
        }
        for r in sorted(results, key=lambda r: r.criterion_id)
    ]

    return AcceptanceReport(
        total_criteria=total,
        passed_criteria=passed,
        failed_criteria=total - passed,
        errored_criteria=sum(1 for r in results if r.error is not None),
        pass_rate=passed / total if total > 0 else 0.0,
        total_runtime_seconds=sum(r.runtime_seconds or 0.0 for r in results),
        over_budget=[r.criterion_id for r in results if r.within_budget is False],
        failed_ids=[r.criterion_id for r in results if not r.passed],
        rows=rows,
        timestamp=datetime.now().isoformat(),
    )


def print_acceptance_report(report: AcceptanceReport, results: list[CriterionResult]):
    """Print a formatted acceptance report to console."""
    print("\n" + "="*80)
    print("ACCEPTANCE REPORT")
    print("="*80)
    print(f"\nTimestamp: {report.timestamp}")
    print(f"\nCriteria: {report.total_criteria}")
    print(f"Passed: {report.passed_criteria} ({report.pass_rate:.0%})")
    print(f"Failed: {report.failed_criteria} (errors: {report.errored_criteria})")
    print(f"Total runtime: {report.total_runtime_seconds:.2f}s")

    print(f"\n{'Criteria':-^80}")
    print(f"{'id':>3}  {'name':<28} {'status':<6} {'cases':>8} {'runtime':>10} {'budget':>8}")
    for row in report.rows:
        budget = f"{row['budget_seconds']:g}s" if row["budget_seconds"] is not None else "-"
        runtime = f"{row['runtime_seconds']:.3f}s" if row["runtime_seconds"] is not None else "-"
        status = "pass" if row["passed"] else "FAIL"
        print(f"{row['id']:>3}  {row['name']:<28} {status:<6} {row['cases']:>8} {runtime:>10} {budget:>8}")

    if report.over_budget:
        print(f"\n{'Over Runtime Budget':-^80}")
        for criterion_id in report.over_budget:
            print(f"  - criterion {criterion_id}")

    failed = [r for r in results if not r.passed]
    if failed:
        print(f"\n{'Failures':-^80}")
        for r in failed:
            print(f"  - criterion {r.criterion_id} ({r.name}): {r.error or ''}")
            for failure in r.failures[:5]:
                print(f"      {failure}")

    print("\n" + "="*80)


def main():
    """Main function."""
    project_root = Path(__file__).parent.parent
    results_folder = project_root / "results"

    results_file = results_folder / "acceptance_results.json"
    report_file = results_folder / "acceptance_report.json"

    if not results_file.exists():
        print(f"✗ Error: {results_file} not found")
        print("Run evaluate_acceptance.py first to generate results")
        return

    print(f"Loading results from: {results_file}")
    with open(results_file, "r") as f:
        results_data = json.load(f)

    results = [CriterionResult(**r) for r in results_data]

    print(f"Generating report for {len(results)} criteria...")
    report = generate_acceptance_report(results)

    with open(report_file, "w") as f:
        json.dump(report.model_dump(), f, indent=2)

    print_acceptance_report(report, results)

    print(f"\n✓ Report saved to: {report_file}")


if __name__ == "__main__":
    main()

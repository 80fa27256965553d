"""
Evaluation script for the acceptance criteria.
Runs every criterion end to end, timing each, and saves the outcomes.
"""
import json
import time
from pathlib import Path

import sys
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from artin_progressions.config import setup_logging
from criteria import CRITERIA
from evaluation_models import CriterionResult

# Set up logging for the script
setup_logging("WARNING")


def evaluate_single_criterion(criterion_id: int, results_file: Path) -> CriterionResult:
    """
    Run one acceptance criterion and append its result to the JSON file.

    Args:
        criterion_id: Number of the criterion (1-11)
        results_file: Path to the results JSON file

    Returns:
        CriterionResult object
    """
    criterion, check = CRITERIA[criterion_id]
    print(f"\n{'='*60}")
    print(f"Criterion {criterion_id}: {criterion.name}")
    print(f"{'='*60}")

    start = time.perf_counter()
    try:
        checked, failures, details = check()
        runtime = time.perf_counter() - start
        result = CriterionResult(
            criterion_id=criterion_id,
            name=criterion.name,
            passed=not failures,
            checked_cases=checked,
            failures=failures[:20],
            details=details,
            runtime_seconds=runtime,
            runtime_budget_seconds=criterion.runtime_budget_seconds,
            within_budget=None if criterion.runtime_budget_seconds is None else runtime <= criterion.runtime_budget_seconds,
        )
        mark = "✓" if result.passed else "✗"
        print(f"{mark} {checked} cases, {len(failures)} failures, {runtime:.3f}s")

    except Exception as e:
        result = CriterionResult(
            criterion_id=criterion_id,
            name=criterion.name,
            passed=False,
            runtime_seconds=time.perf_counter() - start,
            runtime_budget_seconds=criterion.runtime_budget_seconds,
            error=str(e),
        )
        print(f"✗ Error running criterion: {e}")

    _append_result_to_file(results_file, result)
    return result


def _append_result_to_file(results_file: Path, result: CriterionResult):
    """Append a single result to the JSON results file."""
    if results_file.exists():
        with open(results_file, "r") as f:
            try:
                results = json.load(f)
            except json.JSONDecodeError:
                results = []
    else:
        results = []

    results.append(result.model_dump(mode="json"))

    with open(results_file, "w") as f:
        json.dump(results, f, indent=2)


def evaluate_all_criteria(results_file: Path) -> list[CriterionResult]:
    """Run every criterion in order, starting from an empty results file."""
    if results_file.exists():
        results_file.unlink()

    print(f"Found {len(CRITERIA)} criteria to evaluate")
    return [evaluate_single_criterion(criterion_id, results_file) for criterion_id in sorted(CRITERIA)]


def main():
    """Main evaluation function."""
    project_root = Path(__file__).parent.parent
    results_folder = project_root / "results"
    results_file = results_folder / "acceptance_results.json"

    if not results_folder.is_dir():
        results_folder.mkdir(parents=True)

    print(f"Results file: {results_file}")

    results = evaluate_all_criteria(results_file)
    passed = sum(1 for r in results if r.passed)

    print(f"\n✓ Evaluation complete: {passed}/{len(results)} criteria passed")
    print(f"✓ Results saved to: {results_file}")
    print(f"\nRun 'pdm run evaluation-report' to generate the acceptance report")


if __name__ == "__main__":
    main()

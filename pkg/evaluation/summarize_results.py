"""
Script to create a summarized version of acceptance results.
Keeps only the verdict fields for easier review.
"""
import json
from pathlib import Path

from pydantic import BaseModel


class SummarizedResult(BaseModel):
    criterion_id: int
    name: str
    passed: bool
    checked_cases: int
    runtime_seconds: float | None
    first_failure: str | None
    error: str | None


def summarize_results(input_file: Path, output_file: Path):
    """
    Create a summarized version of acceptance results.

    Args:
        input_file: Path to full acceptance results JSON
        output_file: Path to save summarized results JSON
    """
    with open(input_file, "r") as f:
        full_results = json.load(f)

    summarized = []
    for result in full_results:
        failures = result.get("failures") or []
        summary = SummarizedResult(
            criterion_id=result["criterion_id"],
            name=result["name"],
            passed=result["passed"],
            checked_cases=result.get("checked_cases", 0),
            runtime_seconds=result.get("runtime_seconds"),
            first_failure=failures[0] if failures else None,
            error=result.get("error"),
        )
        summarized.append(summary.model_dump())

    with open(output_file, "w") as f:
        json.dump(summarized, f, indent=2)

    print(f"✓ Summarized {len(summarized)} results")
    print(f"✓ Saved to: {output_file}")


def main():
    """Main function."""
    project_root = Path(__file__).parent.parent
    results_folder = project_root / "results"

    input_file = results_folder / "acceptance_results.json"
    output_file = results_folder / "acceptance_results_summary.json"

    if not input_file.exists():
        print(f"✗ Error: {input_file} not found")
        print("Run evaluate_acceptance.py first to generate results")
        return

    summarize_results(input_file, output_file)


if __name__ == "__main__":
    main()

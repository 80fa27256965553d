"""
Run a single acceptance criterion for debugging.

Usage:
    python evaluation/test_single_criterion.py 2
    python evaluation/test_single_criterion.py 7
"""
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from criteria import CRITERIA
from evaluate_acceptance import evaluate_single_criterion


def main():
    """Run one criterion and print its result."""
    if len(sys.argv) < 2 or not sys.argv[1].isdigit() or int(sys.argv[1]) not in CRITERIA:
        print("Error: Please provide a criterion number")
        print("Usage: python evaluation/test_single_criterion.py <criterion_number>")
        print("Available criteria:")
        for criterion_id, (criterion, _) in sorted(CRITERIA.items()):
            print(f"  - {criterion_id}: {criterion.name}")
        sys.exit(1)

    project_root = Path(__file__).parent.parent
    results_folder = project_root / "results"
    results_file = results_folder / "test_single_criterion.json"

    if not results_folder.is_dir():
        results_folder.mkdir(parents=True)

    if results_file.exists():
        results_file.unlink()

    result = evaluate_single_criterion(int(sys.argv[1]), results_file)

    print("\n" + "="*80)
    print("RESULT")
    print("="*80)
    print(json.dumps(result.model_dump(mode="json"), indent=2))

    print(f"\n✓ Result saved to: {results_file}")


if __name__ == "__main__":
    main()

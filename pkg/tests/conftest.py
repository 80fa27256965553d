import pytest
from fastapi.testclient import TestClient

from artin_progressions.cli import main
from artin_progressions.density import make_base
from artin_progressions.exceptions import NotInGError


def bases_in_g(low: int, high: int) -> list[int]:
    bases = []
    for g in range(low, high + 1):
        try:
            make_base(g)
        except NotInGError:
            continue
        bases.append(g)
    return bases


SMALL_BASES = bases_in_g(-12, 12)


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    """Scans started through the CLI run inline."""
    monkeypatch.setenv("SCAN_WORKERS", "1")


@pytest.fixture
def run_cli(capsys):
    def run(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture(scope="session")
def client():
    from artin_progressions.main import app

    with TestClient(app) as test_client:
        yield test_client

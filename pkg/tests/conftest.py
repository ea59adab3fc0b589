import pytest

from hopfrad.fixtures import builtin_fixtures

_CORPUS = builtin_fixtures()

_ACCEPTANCE: dict = {}


@pytest.fixture(params=_CORPUS, ids=[fx.name for fx in _CORPUS])
def corpus_fixture(request):
    return request.param


@pytest.fixture(
    params=[fx for fx in _CORPUS if fx.M.field.is_prime_field],
    ids=[fx.name for fx in _CORPUS if fx.M.field.is_prime_field],
)
def finite_fixture(request):
    return request.param


def record_acceptance(number: int, description: str, passed: bool):
    _ACCEPTANCE[number] = (description, passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        description, passed = _ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {description}")

import pytest

RESULTS_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[RESULTS_KEY] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the terminal summary.

    Usage: ``with criterion(3, "GLB/LUB", limit=10.0): ...``
    """
    import time
    from contextlib import contextmanager

    results = request.config.stash[RESULTS_KEY]

    @contextmanager
    def record(number, title, limit=None):
        start = time.perf_counter()
        entry = {"number": number, "title": title, "ok": False, "seconds": None, "limit": limit}
        results.append(entry)
        yield
        entry["seconds"] = time.perf_counter() - start
        if limit is not None:
            assert entry["seconds"] < limit, f"took {entry['seconds']:.2f}s, limit {limit}s"
        entry["ok"] = True

    return record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(RESULTS_KEY, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(results, key=lambda r: r["number"]):
        status = "PASS" if r["ok"] else "FAIL"
        timing = "" if r["seconds"] is None else f" ({r['seconds']:.2f}s"
        if timing:
            timing += f" < {r['limit']:.0f}s)" if r["limit"] else ")"
        terminalreporter.write_line(f"{status}  criterion {r['number']:>2}: {r['title']}{timing}")

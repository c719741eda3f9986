from ssvpoly import verify
from ssvpoly.field import param_ring


def test_report_independent_of_workers():
    tasks = verify.relations_tasks(3, 2)[:20] + verify.golden_tasks(3, 2)
    serial = verify.run_tasks(tasks, workers=1)
    parallel = verify.run_tasks(tasks, workers=2)
    assert [r.line() for r in serial] == [r.line() for r in parallel]
    assert all(r.passed for r in serial)


def test_failure_keeps_first_detail():
    tasks = [
        (lambda: [("a", None), ("b", "first")], ()),
        (lambda: [("a", "second"), ("b", "third")], ()),
    ]
    res = {r.name: r for r in verify.run_tasks(tasks, workers=1)}
    assert not res["a"].passed and res["a"].detail == "second"
    assert res["b"].detail == "first" and res["b"].count == 2
    assert "first failure: first" in res["b"].line()


def test_small_suites_pass():
    for suite in ("oracle", "limits"):
        assert all(r.passed for r in verify.run_suite(suite, r=2, n=2, workers=1))


def test_nonnegative_in_G():
    R = param_ring(3)
    g = R.G(1)
    assert verify.nonnegative_in_G(g + 2 * g.inv())
    assert not verify.nonnegative_in_G(g - 1)
    assert not verify.nonnegative_in_G(1 / (1 + g))
    assert not verify.nonnegative_in_G(R.k)


def test_threads_env(monkeypatch):
    monkeypatch.setenv("SSV_THREADS", "3")
    assert verify.threads() == 3
    monkeypatch.setenv("SSV_THREADS", "junk")
    assert verify.threads() == 1

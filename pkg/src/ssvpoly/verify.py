"""Batch verification suites.

Each suite is a list of independent tasks.  A task returns a list of
``(check, failure)`` pairs where ``failure`` is None or a short symbolic
description of the violated identity.  Tasks run on a process pool capped
by ``SSV_THREADS`` and are merged in submission order, so the report does
not depend on the degree of parallelism.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import daha, formulas, serialize, words
from .laurent import LaurentPolynomial, monomial_text, poly_substitute_power
from .rootsys import MetaplecticContext, is_dominant

SUITES = ("golden", "relations", "oracle", "limits", "order")
DEFAULT_RANKS = (2, 3)
DEFAULT_DEGREES = (1, 2, 3)


@dataclass
class CheckResult:
    name: str
    passed: bool
    count: int
    detail: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.name} ({self.count} cases)"
        if not self.passed:
            out += f"\n       first failure: {self.detail}"
        return out


def threads():
    try:
        return max(1, int(os.environ.get("SSV_THREADS", "0")) or os.cpu_count() or 1)
    except ValueError:
        return 1


def sweep(r, lo, hi):
    return list(product(range(lo, hi + 1), repeat=r))


def _diff(lhs, rhs):
    """Text of the first exponent where two polynomials disagree."""
    for e in sorted(set(lhs.support()) | set(rhs.support())):
        a, b = lhs.coefficient(e), rhs.coefficient(e)
        if a != b:
            return f"at {monomial_text(e)}: {a.to_text()} != {b.to_text()}"
    return "equal"


def _ident(label, lhs, rhs):
    return None if lhs == rhs else f"{label}: {_diff(lhs, rhs)}"


# golden


def _golden_task(kind, idx):
    entry = serialize.load_golden(kind)[idx]
    ctx = MetaplecticContext(entry["r"], entry["n"])
    mu = tuple(entry["mu"])
    got = formulas.compute_E(mu, ctx) if kind == "E" else formulas.compute_P(mu, ctx)
    want = serialize.golden_polynomial(entry)
    return [(f"golden {kind} table", _ident(f"{kind}_{mu} n={ctx.n}", got, want))]


def golden_tasks(r=None, n=None):
    out = []
    for kind in ("E", "P"):
        for idx, entry in enumerate(serialize.load_golden(kind)):
            if (r is None or entry["r"] == r) and (n is None or entry["n"] == n):
                out.append((_golden_task, (kind, idx)))
    return out


# relations


def _relations_task(r, n, lam):
    ctx = MetaplecticContext(r, n)
    ring = ctx.ring
    k = ring.k
    x = LaurentPolynomial.monomial(ring, lam)
    T = lambda i, f: daha.apply_T(i, f, ctx)  # noqa: E731
    tag = f"x^{lam} r={r} n={n}"
    out = []
    for i in range(r):
        f = T(i, x)
        lhs = T(i, f) + f.scale(k.inv() - k) - x
        out.append(("Hecke (T_i - k)(T_i + 1/k) = 0", _ident(f"i={i} {tag}", lhs, x.scale(ring.zero))))
        out.append(("T_i T_i^-1 = 1", _ident(f"i={i} {tag}", daha.apply_T(i, f, ctx, inverse=True), x)))
    if r >= 3:
        for i in range(r):
            j = (i + 1) % r
            lhs = T(i, T(j, T(i, x)))
            rhs = T(j, T(i, T(j, x)))
            out.append(("braid T_i T_j T_i = T_j T_i T_j", _ident(f"i={i} j={j} {tag}", lhs, rhs)))
    w = daha.apply_omega(x, ctx)
    out.append(("omega^-1 omega = 1", _ident(tag, daha.apply_omega(w, ctx, inverse=True), x)))
    for i in range(r):
        lhs = daha.apply_omega(T(i, x), ctx)
        rhs = T((i + 1) % r, w)
        out.append(("omega twist omega T_i = T_{i+1} omega", _ident(f"i={i} {tag}", lhs, rhs)))
    ys = [daha.apply_Y(i, x, ctx) for i in range(1, r + 1)]
    for i in range(1, r + 1):
        back = daha.apply_Y(i, ys[i - 1], ctx, inverse=True)
        out.append(("Y_i^-1 Y_i = 1", _ident(f"i={i} {tag}", back, x)))
        for j in range(i + 1, r + 1):
            lhs = daha.apply_Y(i, ys[j - 1], ctx)
            rhs = daha.apply_Y(j, ys[i - 1], ctx)
            out.append(("Y_i Y_j = Y_j Y_i", _ident(f"i={i} j={j} {tag}", lhs, rhs)))
    return out


def relations_tasks(r=None, n=None):
    ranks = (r,) if r else (3,)
    degrees = (n,) if n else DEFAULT_DEGREES
    return [(_relations_task, (rr, nn, lam)) for rr in ranks for nn in degrees for lam in sweep(rr, -2, 2)]


# oracle: formula against intertwiners, eigenvalues, triangularity


def _oracle_task(r, n, mu):
    ctx = MetaplecticContext(r, n)
    tag = f"mu={mu} r={r} n={n}"
    E = formulas.compute_E(mu, ctx)
    out = [("intertwiner oracle = walk formula", _ident(tag, daha.intertwiner_E(mu, ctx), E))]
    ok = daha.eigenvalue_check(E, mu, ctx)
    out.append(("Y eigenvalues gamma(n e_i; mu)", None if ok else f"{tag}: E is not a Y-eigenfunction"))
    lower = words.bruhat_lower_set(mu, ctx)
    supp = set(E.support())
    bad = None
    if supp != lower:
        bad = f"{tag}: support {sorted(supp)} != lower set {sorted(lower)}"
    out.append(("support = Bruhat lower set", bad))
    if is_dominant(mu):
        P = formulas.compute_P(mu, ctx)
        for i in range(1, r):
            lhs = daha.apply_Ti(i, P, ctx)
            out.append(("T_i P = k P", _ident(f"i={i} {tag}", lhs, P.scale(ctx.ring.k))))
    return out


def oracle_tasks(r=None, n=None):
    ranks = (r,) if r else DEFAULT_RANKS
    degrees = (n,) if n else DEFAULT_DEGREES
    return [(_oracle_task, (rr, nn, mu)) for rr in ranks for nn in degrees for mu in sweep(rr, -1, 2)]


# limits


def nonnegative_in_G(c):
    """True iff ``c`` is a Laurent polynomial in the G symbols with coefficients >= 0."""
    ring = c.ring
    if len(c.den) != 1:
        return False
    (dk, dc), = c.den.items()
    if ring.exponents(dk)[:2] != (0, 0):
        return False
    sign = 1 if dc > 0 else -1
    for key, v in c.num.items():
        if ring.exponents(key)[:2] != (0, 0) or sign * v < 0:
            return False
    return True


def _limit_task(r, n, mu):
    ctx = MetaplecticContext(r, n)
    tag = f"mu={mu} r={r} n={n}"
    out = []
    E = formulas.compute_E(mu, ctx)
    antidominant = all(a <= b for a, b in zip(mu, mu[1:]))
    x_mu = LaurentPolynomial.monomial(ctx.ring, mu)
    for direction, kval in (("zero", Fraction(1, 2)), ("infinity", Fraction(2))):
        L = formulas.compute_E_limit(mu, ctx, direction)
        out.append((f"E limit q->{direction} = coefficientwise limit", _ident(tag, L, E.limit_q(direction))))
        bad = None
        for e, c in L.items():
            if not nonnegative_in_G(c.substitute({"k": kval})):
                bad = f"{tag}: coefficient of {monomial_text(e)} is {c.to_text()}"
                break
        out.append((f"E limit q->{direction} positivity at k={kval}", bad))
        if is_dominant(mu):
            P = formulas.compute_P(mu, ctx)
            PL = formulas.compute_P_limit(mu, ctx, direction)
            out.append((f"P limit q->{direction} = coefficientwise limit", _ident(tag, PL, P.limit_q(direction))))
            bad = None
            for e, c in PL.items():
                if not nonnegative_in_G(c.substitute({"k": kval})):
                    bad = f"{tag}: coefficient of {monomial_text(e)} is {c.to_text()}"
                    break
            out.append((f"P limit q->{direction} positivity at k={kval}", bad))
        if direction == "zero" and is_dominant(mu):
            out.append(("dominant mu: q->0 limit is x^mu", _ident(tag, L, x_mu)))
        if direction == "infinity" and antidominant:
            out.append(("antidominant mu: q->infinity limit is x^mu", _ident(tag, L, x_mu)))
    return out


def limits_tasks(r=None, n=None):
    ranks = (r,) if r else DEFAULT_RANKS
    degrees = (n,) if n else DEFAULT_DEGREES
    return [(_limit_task, (rr, nn, mu)) for rr in ranks for nn in degrees for mu in sweep(rr, -1, 2)]


# order: reduced words, Bruhat containment, Macdonald embedding

DIVISOR_PAIRS = ((1, 2), (1, 3), (2, 4))
EMBED_WEIGHTS = ((1, 0, 0), (0, 1, 0), (1, 1, 0))


def _word_task(r, n, mu):
    ctx = MetaplecticContext(r, n)
    tag = f"mu={mu} r={r} n={n}"
    dec = words.reduce_to_fundamental(mu, ctx)
    best = words.minimal_word_length(mu, n)
    out = [("greedy word is reduced", None if len(dec.word) == best else f"{tag}: {len(dec.word)} > {best}")]
    E = formulas.compute_E(mu, ctx)
    _, alts = words.all_reduced_words(mu, n)
    bad = None
    for w in alts[:6]:
        if formulas.compute_E(mu, ctx, word=w) != E:
            bad = f"{tag}: word {w} gives a different polynomial"
            break
    out.append(("E independent of the reduced word", bad))
    return out


def _containment_task(r, m, n, mu):
    cm, cn = MetaplecticContext(r, m), MetaplecticContext(r, n)
    tag = f"mu={mu} r={r} (m,n)=({m},{n})"
    lo_n, lo_m = words.bruhat_lower_set(mu, cn), words.bruhat_lower_set(mu, cm)
    out = [("lower set for n inside lower set for m", None if lo_n <= lo_m else f"{tag}: {sorted(lo_n - lo_m)}")]
    sn = set(formulas.compute_E(mu, cn).support())
    sm = set(formulas.compute_E(mu, cm).support())
    out.append(("support of E^(n) inside support of E^(m)", None if sn <= sm else f"{tag}: {sorted(sn - sm)}"))
    return out


def _embed_task(nu, n):
    c1, cn = MetaplecticContext(len(nu), 1), MetaplecticContext(len(nu), n)
    lhs = formulas.compute_E(tuple(n * a for a in nu), cn)
    rhs = poly_substitute_power(formulas.compute_E(nu, c1), n, target=cn.ring)
    return [("E_(n nu)^(n) = E_nu^(1) with x -> x^n, q -> q^n", _ident(f"nu={nu} n={n}", lhs, rhs))]


def order_tasks(r=None, n=None):
    out = []
    for rr in (r,) if r else DEFAULT_RANKS:
        for nn in (n,) if n else (1, 2):
            out += [(_word_task, (rr, nn, mu)) for mu in sweep(rr, -2, 2)]
    for rr in (r,) if r else (3,):
        for m, nn in DIVISOR_PAIRS:
            if n is None or n == nn:
                out += [(_containment_task, (rr, m, nn, mu)) for mu in sweep(rr, -1, 2)]
    if r in (None, 3):
        for nn in (2, 3):
            if n is None or n == nn:
                out += [(_embed_task, (nu, nn)) for nu in EMBED_WEIGHTS]
    return out


TASKS = {
    "golden": golden_tasks,
    "relations": relations_tasks,
    "oracle": oracle_tasks,
    "limits": limits_tasks,
    "order": order_tasks,
}


def _run(task):
    fn, args = task
    return fn(*args)


def run_tasks(tasks, workers=None):
    """Run tasks and merge into one :class:`CheckResult` per check name, in order."""
    workers = workers or threads()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        chunks = [_run(t) for t in tasks]
    merged = {}
    for chunk in chunks:
        for name, failure in chunk:
            res = merged.get(name)
            if res is None:
                res = merged[name] = CheckResult(name, True, 0)
            res.count += 1
            if failure is not None and res.passed:
                res.passed = False
                res.detail = failure
    return list(merged.values())


def run_suite(suite, r=None, n=None, workers=None):
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        if name not in TASKS:
            raise ValueError(f"unknown suite {name!r}")
        results += run_tasks(TASKS[name](r, n), workers)
    return results

"""Reduction to the fundamental domain, reduced words and the order <=_n."""

from dataclasses import dataclass

from .errors import InternalInconsistencyError
from .rootsys import (
    AffineWeylElement,
    affine_simple_root,
    in_fundamental,
    perm_apply,
    simple_act,
)


@dataclass(frozen=True)
class ReducedDecomposition:
    """``mu = s^(n)_{word[0]} ... s^(n)_{word[-1]} lam`` with the roots beta_j.

    ``betas[j]`` is ``s_{i_l} ... s_{i_{j+1}} * alpha^(n)_{i_j}`` (1-based
    j in the formula, 0-based here).
    """

    mu: tuple
    lam: tuple
    word: tuple
    betas: tuple
    n: int

    def __len__(self):
        return len(self.word)


def greedy_word(mu, n):
    """Greedy descent from ``mu`` into A^(n).

    Returns ``(lam, word)``; reflecting at the smallest violated wall (the
    finite walls before wall 0) and recording the indices in order gives a
    word with ``mu = s_{word[0]} ... s_{word[-1]} lam``.
    """
    r = len(mu)
    v = tuple(mu)
    word = []
    while True:
        for i in range(1, r):
            if v[i - 1] < v[i]:
                break
        else:
            if v[0] - v[-1] > n:
                i = 0
            else:
                break
        v = simple_act(r, i, n, v)
        word.append(i)
    return v, tuple(word)


def betas_for(word, r, n):
    out = [None] * len(word)
    g = AffineWeylElement.identity(r)
    for j in range(len(word) - 1, -1, -1):
        out[j] = g.act_linear(affine_simple_root(r, word[j], n))
        g = g * AffineWeylElement.simple_reflection(r, word[j], n)
    return tuple(out)


def decompose(mu, lam, word, n):
    """Build and validate a decomposition from a given reduced word."""
    r = len(mu)
    v = lam
    for i in reversed(word):
        v = simple_act(r, i, n, v)
    if v != tuple(mu):
        raise InternalInconsistencyError(f"word {word} does not carry {lam} to {mu}")
    betas = betas_for(word, r, n)
    for b in betas:
        if not b.is_positive() or b.pairing(lam) == 0:
            raise InternalInconsistencyError(f"root {b} violates positivity or <beta, lam> != 0")
    return ReducedDecomposition(tuple(mu), tuple(lam), tuple(word), betas, n)


def reduce_to_fundamental(mu, ctx):
    """Decomposition of ``mu`` relative to A^(n).

    >>> from ssvpoly.rootsys import MetaplecticContext
    >>> d = reduce_to_fundamental((2, 0, 0), MetaplecticContext(3, 1))
    >>> d.lam, d.word
    ((1, 1, 0), (0, 2))
    """
    mu = ctx.check_rank(mu)
    lam, word = greedy_word(mu, ctx.n)
    if not in_fundamental(lam, ctx.n):
        raise InternalInconsistencyError(f"descent ended outside A^(n) at {lam}")
    return decompose(mu, lam, word, ctx.n)


def canonical_perm_word(w):
    """Reduced word for a permutation by bubbling the largest misplaced value right.

    >>> canonical_perm_word((2, 1, 0))
    (1, 2, 1)
    """
    cur = list(w)
    swaps = []
    for v in range(len(cur) - 1, -1, -1):
        pos = cur.index(v)
        while pos < v:
            cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
            swaps.append(pos + 1)
            pos += 1
    # cur = w s_{a_1} s_{a_2} ... = identity, so w = s_{a_m} ... s_{a_1}
    return tuple(reversed(swaps))


def perm_from_word(word, r):
    w = tuple(range(r))
    for i in word:
        w = perm_apply_right(w, i)
    return w


def perm_apply_right(w, i):
    """``w s_i`` in one-line notation: swap positions i-1 and i."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def bruhat_lower_set(mu, ctx):
    """``{nu : nu <=_n mu}``: all subwords of the reduced word applied to lam."""
    d = reduce_to_fundamental(mu, ctx)
    found = {d.lam}
    for i in reversed(d.word):
        found |= {simple_act(ctx.r, i, ctx.n, v) for v in found}
    return found


def order_compare_step(mu, rho, ctx=None):
    """True iff ``<rho, mu> < 0``, i.e. reflecting ``mu`` in ``rho`` moves it down."""
    return rho.pairing(mu) < 0


def minimal_word_length(mu, n, limit=64):
    """Length of a shortest word reaching ``mu`` from A^(n), by breadth-first search."""
    r = len(mu)
    start = tuple(mu)
    seen = {start}
    frontier = [start]
    depth = 0
    while frontier:
        if any(in_fundamental(v, n) for v in frontier):
            return depth
        if depth >= limit:
            break
        nxt = []
        for v in frontier:
            for i in range(r):
                w = simple_act(r, i, n, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
        depth += 1
    raise InternalInconsistencyError(f"no word of length <= {limit} reaches {mu}")


def all_reduced_words(mu, n):
    """Every word of minimal length carrying a point of A^(n) to ``mu``.

    Found by search over the orbit; returns ``(lam, [words])``.
    """
    r = len(mu)
    ell = minimal_word_length(mu, n)
    out = []
    lams = set()

    # mu = s_{i_1} (s_{i_2} ... lam): peel letters off the left
    def rec(v, prefix):
        if len(prefix) == ell:
            if in_fundamental(v, n):
                lams.add(v)
                out.append(tuple(prefix))
            return
        for i in range(r):
            w = simple_act(r, i, n, v)
            if minimal_word_length(w, n) == ell - len(prefix) - 1:
                rec(w, prefix + [i])

    rec(tuple(mu), [])
    if len(lams) != 1:
        raise InternalInconsistencyError(f"reduced words of {mu} end at {sorted(lams)}")
    return lams.pop(), out

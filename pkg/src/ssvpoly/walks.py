"""Alcove walks of a fixed type.

Alcoves are identified with elements ``z`` of the affine Coxeter group
(the alcove ``z A``).  A walk of type ``(i_1, ..., i_l)`` from ``start``
visits ``z_0 = start``; at step j the walk either crosses the wall between
``z`` and ``z s_{i_j}`` (and moves there) or folds back (and stays at ``z``).
"""

from dataclasses import dataclass
from fractions import Fraction

from .rootsys import AffineRoot, AffineWeylElement, affine_simple_root


@dataclass(frozen=True)
class StepInfo:
    root: AffineRoot
    positive: bool

    @property
    def side(self):
        return "positive" if self.positive else "negative"


@dataclass(frozen=True)
class AlcoveWalk:
    start: AffineWeylElement
    word: tuple
    folds: tuple
    end: AffineWeylElement
    pos_folds: tuple
    neg_folds: tuple

    @property
    def choices(self):
        return tuple("fold" if f else "cross" for f in self.folds)

    @property
    def wt(self):
        return self.end.translation

    @property
    def phi(self):
        return self.end.perm

    def is_unfolded(self):
        return not any(self.folds)


def sample_point(r):
    """Interior point of the fundamental alcove, ``v_i = (r - i)/(r + 1)``."""
    return tuple(Fraction(r - i, r + 1) for i in range(1, r + 1))


def classify_step(z, i):
    """Separating root and side of alcove ``z`` for the wall towards ``z s_i``.

    The returned root is normalized to be a positive affine root.  The side
    uses the periodic orientation, in which every hyperplane is oriented by
    the root whose finite part is positive; under it the fundamental alcove
    lies on the positive side of every finite wall and on the negative side
    of the affine wall.
    """
    r = z.rank
    root = z.act_linear(affine_simple_root(r, i))
    oriented = root if _finite_positive(root) else -root
    positive = oriented.pairing(z.act(sample_point(r))) > 0
    return StepInfo(root if root.is_positive() else -root, positive)


def _finite_positive(root):
    for x in root.finite:
        if x:
            return x > 0
    raise ValueError("hyperplanes need a nonzero finite part")


def _step_sign(z, i):
    """Fast fold sign: positive iff the finite part of ``z * alpha_i`` is positive.

    Equivalent to :func:`classify_step` because ``z`` sends the fundamental
    alcove to the positive side of ``z * alpha_i``.
    """
    perm = z.perm
    if i == 0:
        a, b = perm[-1], perm[0]
    else:
        a, b = perm[i - 1], perm[i]
    return a < b


def enumerate_walks(start, word, allow_positive=True, allow_negative=True):
    """All walks of type ``word`` from ``start`` in binary-counter order.

    Crossing sorts before folding and the first step is the most significant
    digit, so the unfolded walk comes first.  The ``allow_*`` flags prune
    walks with folds of the excluded sign.
    """
    word = tuple(word)
    ell = len(word)
    reflections = {}
    for i in set(word):
        reflections[i] = AffineWeylElement.simple_reflection(start.rank, i)
    out = []

    def rec(j, z, folds, pos, neg):
        if j == ell:
            out.append(AlcoveWalk(start, word, tuple(folds), z, tuple(pos), tuple(neg)))
            return
        i = word[j]
        rec(j + 1, z * reflections[i], folds + [False], pos, neg)
        if _step_sign(z, i):
            if allow_positive:
                rec(j + 1, z, folds + [True], pos + [j], neg)
        elif allow_negative:
            rec(j + 1, z, folds + [True], pos, neg + [j])

    rec(0, start, [], [], [])
    return out


def walk_filter(walks, mode):
    """``mode``: ``all``, ``positive`` (only positive folds), ``negative`` or ``unfolded``."""
    if mode == "all":
        return list(walks)
    if mode in ("positive", "positive-folds-only"):
        return [p for p in walks if not p.neg_folds]
    if mode in ("negative", "negative-folds-only"):
        return [p for p in walks if not p.pos_folds]
    if mode == "unfolded":
        return [p for p in walks if p.is_unfolded()]
    raise ValueError(f"unknown mode {mode!r}")

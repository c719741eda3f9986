"""Root data of GL_r, affine Weyl group elements and the scalars sigma, gamma.

Conventions used throughout the package:

* Weights and exponents are integer tuples of length r (entries indexed
  from 0 internally).
* A permutation ``w`` is a tuple in one-line notation on ``{0..r-1}``:
  ``w[i]`` is the image of ``i``, and ``w`` sends the basis vector ``e_i``
  to ``e_{w[i]}``.  Products apply the right factor first.
* An affine Weyl element ``tau(t) w`` acts on weights by ``v -> w v + t``.
* Simple reflections are numbered 0..r-1; ``s_0`` is the affine one,
  ``s_0^(n) = tau(n theta) s_theta``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import DomainError, MalformedMetaplecticError
from .field import param_ring


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def unit(r, i):
    v = [0] * r
    v[i] = 1
    return tuple(v)


def root_vector(r, i, j):
    """``e_i - e_j`` (0-based)."""
    v = [0] * r
    v[i] += 1
    v[j] -= 1
    return tuple(v)


@lru_cache(maxsize=None)
def positive_roots(r):
    return tuple(root_vector(r, i, j) for i in range(r) for j in range(i + 1, r))


def simple_root_vector(r, i):
    """Finite simple root alpha_i for 1 <= i <= r-1."""
    if not 1 <= i <= r - 1:
        raise DomainError(f"finite simple root index {i} outside 1..{r - 1}")
    return root_vector(r, i - 1, i)


def theta(r):
    return root_vector(r, 0, r - 1)


def is_dominant(v):
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def in_fundamental(v, n):
    """Membership in A^(n): dominant with ``v_1 - v_r <= n``."""
    return is_dominant(v) and v[0] - v[-1] <= n


def is_positive_finite(v):
    for x in v:
        if x:
            return x > 0
    return False


# permutations


def perm_apply(w, v):
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[w[i]] = x
    return tuple(out)


def perm_compose(u, v):
    return tuple(u[v[i]] for i in range(len(v)))


def perm_inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x] = i
    return tuple(out)


def perm_length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def simple_transposition(r, i):
    w = list(range(r))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def all_perms(r):
    return [tuple(p) for p in permutations(range(r))]


def perm_from_one_line(values):
    """Parse one-line notation on ``{1..r}``."""
    w = tuple(int(x) - 1 for x in values)
    if sorted(w) != list(range(len(w))):
        raise DomainError(f"{values} is not a permutation of 1..{len(w)}")
    return w


# affine roots


@dataclass(frozen=True)
class AffineRoot:
    """The affine function ``v -> (finite, v) + level``."""

    finite: tuple
    level: int = 0

    def __post_init__(self):
        object.__setattr__(self, "finite", tuple(int(x) for x in self.finite))
        object.__setattr__(self, "level", int(self.level))
        if not any(self.finite) and not self.level:
            raise DomainError("the zero affine root")

    @property
    def rank(self):
        return len(self.finite)

    def pairing(self, v):
        return dot(self.finite, v) + self.level

    def __neg__(self):
        return AffineRoot(tuple(-x for x in self.finite), -self.level)

    def is_positive(self):
        return self.level > 0 or (self.level == 0 and is_positive_finite(self.finite))

    def is_metaplectic(self, n):
        return all(x % n == 0 for x in self.finite) and self.level % (n * n) == 0

    def __str__(self):
        s = "(" + ",".join(str(x) for x in self.finite) + ")"
        if self.level:
            s += f"{self.level:+d}d"
        return s


def affine_simple_root(r, i, n=1):
    """alpha_i^(n): ``n alpha_i`` for i >= 1 and ``-n theta + n^2 delta`` for i = 0."""
    if i == 0:
        return AffineRoot(tuple(-n * x for x in theta(r)), n * n)
    return AffineRoot(tuple(n * x for x in simple_root_vector(r, i)), 0)


def pairing_eval(rho, v):
    return rho.pairing(v)


def reflect(rho, v):
    """Affine reflection in the hyperplane of ``rho``.

    >>> reflect(AffineRoot((-1, 0, 1), 1), (2, 0, 0))
    (1, 0, 1)
    """
    a = rho.finite
    norm = dot(a, a)
    if not norm:
        raise DomainError("reflection needs a nonzero finite part")
    c = Fraction(2 * rho.pairing(v), norm)
    out = tuple(x - c * y for x, y in zip(v, a))
    if all(isinstance(x, int) or x.denominator == 1 for x in out):
        return tuple(int(x) for x in out)
    return out


# affine Weyl group


@dataclass(frozen=True)
class AffineWeylElement:
    """``tau(translation) perm``."""

    translation: tuple
    perm: tuple

    @classmethod
    def identity(cls, r):
        return cls((0,) * r, tuple(range(r)))

    @classmethod
    def from_perm(cls, w):
        return cls((0,) * len(w), tuple(w))

    @classmethod
    def tau(cls, v):
        return cls(tuple(v), tuple(range(len(v))))

    @classmethod
    def simple_reflection(cls, r, i, n=1):
        if i == 0:
            w = list(range(r))
            w[0], w[-1] = w[-1], w[0]
            return cls(tuple(n * x for x in theta(r)), tuple(w))
        return cls.from_perm(simple_transposition(r, i))

    @classmethod
    def omega(cls, r, n=1):
        """``s_1 ... s_{r-1} tau(n e_r)``."""
        w = cls.identity(r)
        for i in range(1, r):
            w = w * cls.simple_reflection(r, i)
        return w * cls.tau(tuple(n * x for x in unit(r, r - 1)))

    @property
    def rank(self):
        return len(self.perm)

    def act(self, v):
        """Affine action on a weight (rational entries allowed)."""
        return tuple(x + t for x, t in zip(perm_apply(self.perm, v), self.translation))

    def act_linear(self, rho):
        """Linear action on an affine root: the level shifts by ``-(w mu, t)``."""
        f = perm_apply(self.perm, rho.finite)
        return AffineRoot(f, rho.level - dot(f, self.translation))

    def __mul__(self, other):
        t = tuple(a + b for a, b in zip(self.translation, perm_apply(self.perm, other.translation)))
        return AffineWeylElement(t, perm_compose(self.perm, other.perm))

    def inverse(self):
        wi = perm_inverse(self.perm)
        return AffineWeylElement(tuple(-x for x in perm_apply(wi, self.translation)), wi)

    def psi(self, n):
        return AffineWeylElement(tuple(n * x for x in self.translation), self.perm)

    def __str__(self):
        return f"tau{self.translation}*[{','.join(str(x + 1) for x in self.perm)}]"


def weyl_act(w, target, mode="affine"):
    if mode == "affine":
        return w.act(target)
    if mode == "linear":
        return w.act_linear(target)
    raise ValueError(f"unknown mode {mode!r}")


def psi_n(x, n):
    """Rescale an element or root: translations and finite parts by n, levels by n^2."""
    if isinstance(x, AffineWeylElement):
        return x.psi(n)
    if isinstance(x, AffineRoot):
        return AffineRoot(tuple(n * a for a in x.finite), n * n * x.level)
    raise TypeError(type(x).__name__)


def simple_act(r, i, n, v):
    """``s_i^(n) v`` on a weight without building group elements."""
    v = list(v)
    if i == 0:
        v[0], v[-1] = v[-1] + n, v[0] - n
    else:
        v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


# metaplectic context and scalars


@dataclass(frozen=True)
class MetaplecticContext:
    """Rank, metaplectic degree and the G_{n/2} reduction flag."""

    r: int
    n: int
    reduce_ghalf: bool = True

    def __post_init__(self):
        if self.r < 2:
            raise DomainError("rank must be at least 2")
        if self.n < 1:
            raise DomainError("metaplectic degree must be positive")

    @property
    def ring(self):
        return param_ring(self.n, self.reduce_ghalf)

    def check_rank(self, v):
        if len(v) != self.r:
            raise DomainError(f"vector {tuple(v)} does not have length {self.r}")
        return tuple(int(x) for x in v)

    def G(self, a):
        return G_param(a, self)

    def sigma(self, a):
        return sigma_eval(a, self)

    def gamma(self, rho, lam):
        return gamma_eval(rho, lam, self)


def _g_exps(a, n):
    j = a % n
    if j == 0:
        return {"k": 1}
    if j <= n // 2:
        return {f"G{j}": 1}
    return {f"G{n - j}": -1}


def _sigma_exps(a, n):
    if a > 0 and a % n == 0:
        return {"k": -1}
    return _g_exps(a, n)


@lru_cache(maxsize=None)
def G_param(a, ctx):
    """Periodic parameter ``G_a`` (``G_0 = k``, ``G_j G_{-j} = 1``)."""
    return ctx.ring.monomial(_g_exps(a, ctx.n))


@lru_cache(maxsize=None)
def sigma_eval(a, ctx):
    """sigma(a): ``1/k`` on positive multiples of n, ``G_a`` otherwise."""
    return ctx.ring.monomial(_sigma_exps(a, ctx.n))


def gamma_exponents(rho, lam, ctx):
    """Exponent dict of gamma(rho; lam); see :func:`gamma_eval`."""
    n = ctx.n
    mu = rho.finite
    if any(x % n for x in mu):
        raise MalformedMetaplecticError(f"{rho} is not in the rescaled lattice for n={n}")
    p = rho.pairing(lam)
    if p % n:
        raise MalformedMetaplecticError(f"<{rho}, {lam}> = {p} is not divisible by n={n}")
    exps = {"q": -(p // n)}
    for alpha in positive_roots(ctx.r):
        m = dot(mu, alpha) // n
        if not m:
            continue
        for s, e in _sigma_exps(dot(lam, alpha), n).items():
            exps[s] = exps.get(s, 0) + e * m
    return exps


@lru_cache(maxsize=None)
def _gamma_cached(finite, level, lam, ctx):
    return ctx.ring.monomial(gamma_exponents(AffineRoot(finite, level), lam, ctx))


def gamma_eval(rho, lam, ctx):
    """gamma(rho; lam) = q^(-<rho,lam>/n) prod_{alpha>0} sigma((lam,alpha))^((mu,alpha)/n).

    ``rho`` is an :class:`AffineRoot` (or a plain weight, read at level 0)
    whose finite part ``mu`` lies in ``n Z^r``.

    >>> ctx = MetaplecticContext(3, 1)
    >>> gamma_eval(AffineRoot((-1, 1, 0)), (1, 0, 0), ctx).to_text()
    'k^4 q'
    """
    if not isinstance(rho, AffineRoot):
        rho = AffineRoot(tuple(rho), 0)
    return _gamma_cached(rho.finite, rho.level, tuple(lam), ctx)

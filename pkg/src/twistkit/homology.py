"""Action of Dehn twist words on H_1(Sigma_g; Z).

Classes are integer vectors in the ordered basis (a_1..a_g, b_1..b_g) with
<a_i, b_i> = +1.  A right twist about a curve of class c acts by the
transvection x -> x + <x, c> c.  Matrices act on column vectors and a twist
word t_1 t_2 ... t_k maps to M_1 M_2 ... M_k (rightmost twist acts first).

Curve labels: ``a<i>``, ``b<i>``, the chain ``A1``..``A{2g+1}``, the images
``B0``..``B{g}``, the separating curve ``c`` (even g) and the odd-g chain
boundary pair ``bd1``/``bd2`` (aliases ``a``/``b``).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

import numpy as np

from .braid import bar_delta, delta


class CurveLabelError(ValueError):
    pass


class ChainBoundaryError(RuntimeError):
    """The homology shadow of the odd-genus chain relation could not be reproduced."""


def _vec(coords: Iterable[int]) -> np.ndarray:
    return np.array([int(x) for x in coords], dtype=object)


def identity(g: int) -> np.ndarray:
    return np.identity(2 * g, dtype=int).astype(object)


def symplectic_form(g: int) -> np.ndarray:
    J = np.zeros((2 * g, 2 * g), dtype=int)
    J[:g, g:] = np.identity(g, dtype=int)
    J[g:, :g] = -np.identity(g, dtype=int)
    return J.astype(object)


@dataclass(frozen=True)
class HClass:
    g: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != 2 * self.g:
            raise ValueError(f"class in genus {self.g} needs {2 * self.g} coordinates")

    @classmethod
    def from_vector(cls, g: int, v) -> "HClass":
        return cls(g, tuple(int(x) for x in v))

    @property
    def vector(self) -> np.ndarray:
        return _vec(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "HClass") -> "HClass":
        _same_genus(self, other)
        return HClass(self.g, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "HClass") -> "HClass":
        return self + (-other)

    def __neg__(self) -> "HClass":
        return HClass(self.g, tuple(-x for x in self.coords))

    def __rmul__(self, k: int) -> "HClass":
        return HClass(self.g, tuple(k * x for x in self.coords))

    def normalized(self) -> "HClass":
        """Sign-normalize: first nonzero coordinate positive."""
        for x in self.coords:
            if x:
                return self if x > 0 else -self
        return self

    def __str__(self) -> str:
        g = self.g
        names = [f"a{i}" for i in range(1, g + 1)] + [f"b{i}" for i in range(1, g + 1)]
        terms = []
        for name, x in zip(names, self.coords):
            if x:
                coef = "" if abs(x) == 1 else f"{abs(x)}"
                terms.append(("-" if x < 0 else "+") + coef + name)
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s[0] == "+" else s


def _same_genus(x: HClass, y: HClass) -> None:
    if x.g != y.g:
        raise ValueError(f"genus mismatch: {x.g} vs {y.g}")


def basis(g: int, name: str, i: int) -> HClass:
    v = [0] * (2 * g)
    v[(i - 1) if name == "a" else (g + i - 1)] = 1
    return HClass(g, tuple(v))


def intersection(x: HClass, y: HClass) -> int:
    _same_genus(x, y)
    g = x.g
    return sum(x.coords[i] * y.coords[g + i] - x.coords[g + i] * y.coords[i] for i in range(g))


def transvection(c: HClass, e: int = 1) -> np.ndarray:
    """Matrix of x -> x + e <x, c> c."""
    g = c.g
    v = c.vector
    Jv = symplectic_form(g).dot(v)
    # <x, c> = x^T J c, so the rank-one part is e * c (J c)^T
    return identity(g) + e * np.outer(v, Jv)


def is_symplectic(M: np.ndarray) -> bool:
    g = M.shape[0] // 2
    J = symplectic_form(g)
    return bool((M.T.dot(J).dot(M) == J).all())


def apply(M: np.ndarray, x: HClass) -> HClass:
    return HClass.from_vector(x.g, M.dot(x.vector))


def chain_class(g: int, i: int) -> HClass:
    """Class of the chain curve A_i, 1 <= i <= 2g+1.

    A_1 = a_1, A_{2j} = b_j, A_{2j+1} = a_j - a_{j+1} for 1 <= j <= g-1 and
    A_{2g+1} = a_g, so consecutive chain curves meet once.
    """
    if not 1 <= i <= 2 * g + 1:
        raise CurveLabelError(f"A{i} does not exist in genus {g}")
    if i == 1:
        return basis(g, "a", 1)
    if i == 2 * g + 1:
        return basis(g, "a", g)
    j, odd = divmod(i, 2)
    if not odd:
        return basis(g, "b", j)
    return basis(g, "a", j) - basis(g, "a", j + 1)


@dataclass(frozen=True)
class TwistWord:
    """Product of powers of Dehn twists, written left to right."""

    g: int
    factors: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        for label, _ in self.factors:
            curve_class(label, self.g)

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        if other.g != self.g:
            raise ValueError("genus mismatch")
        return TwistWord(self.g, self.factors + other.factors)

    def __pow__(self, k: int) -> "TwistWord":
        if k < 0:
            inv = tuple((lab, -e) for lab, e in reversed(self.factors))
            return TwistWord(self.g, inv * -k)
        return TwistWord(self.g, self.factors * k)

    def curves(self) -> Tuple[str, ...]:
        """Labels with multiplicity; only for words of right twists."""
        out = []
        for label, e in self.factors:
            if e < 0:
                raise ValueError(f"{label}^{e} is not a right twist")
            out.extend([label] * e)
        return tuple(out)

    def __str__(self) -> str:
        return " ".join(f"t_{lab}" + ("" if e == 1 else f"^{e}") for lab, e in self.factors) or "1"


def twistword_from_braid(word, g: int) -> TwistWord:
    """Replace each sigma_i by the twist t_i about A_i."""
    w = getattr(word, "word", word)
    return TwistWord(g, tuple((f"A{abs(x)}", 1 if x > 0 else -1) for x in w.signed))


_LABEL = re.compile(r"^(a|b|A|B)(\d+)$")


def curve_class(label: str, g: int) -> HClass:
    if g < 1:
        raise CurveLabelError("curves need genus >= 1")
    if label == "c":
        if g % 2:
            raise CurveLabelError("c is only defined for even genus")
        return HClass(g, (0,) * (2 * g))
    if label in ("a", "b", "bd1", "bd2"):
        if g % 2 == 0 or g < 3:
            raise CurveLabelError(f"{label} is only defined for odd genus >= 3")
        alpha, beta_ = chain_boundary_classes(g)
        return alpha if label in ("a", "bd1") else beta_
    m = _LABEL.match(label)
    if m is None:
        raise CurveLabelError(f"unknown curve label {label!r}")
    kind, i = m.group(1), int(m.group(2))
    if kind in "ab":
        if not 1 <= i <= g:
            raise CurveLabelError(f"{label} does not exist in genus {g}")
        return basis(g, kind, i)
    if kind == "A":
        return chain_class(g, i)
    if not 0 <= i <= g:
        raise CurveLabelError(f"{label} does not exist in genus {g}")
    return b_class(g, i)


@lru_cache(maxsize=None)
def _b_class(g: int, k: int) -> Tuple[int, ...]:
    f = twistword_from_braid(bar_delta(g, k) * delta(g, 2 * g - k), g)
    return apply(evaluate_twistword(f), chain_class(g, 2 * g + 1 - k)).coords


def b_class(g: int, k: int) -> HClass:
    """[B_k], the image of A_{2g+1-k} under bD_k D_{2g-k}."""
    return HClass(g, _b_class(g, k))


def evaluate_twistword(w: TwistWord) -> np.ndarray:
    M = identity(w.g)
    for label, e in w.factors:
        M = M.dot(transvection(curve_class(label, w.g), e))
    return M


def hyperelliptic_matrix(g: int) -> np.ndarray:
    if g < 1:
        raise ValueError("genus must be >= 1")
    return -identity(g)


def chain_power_word(g: int, length: int, exponent: int) -> TwistWord:
    """(t_length ... t_2 t_1)^exponent over the chain curves."""
    one = TwistWord(g, tuple((f"A{i}", 1) for i in range(length, 0, -1)))
    return one ** exponent


def _primitive(v: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    d = math.gcd(*v)
    return d, tuple(x // d for x in v)


def _two_squares(d: int) -> Tuple[int, int]:
    # prefer both parts nonzero: a pair of boundary curves, not one
    best = None
    for s in range(math.isqrt(d), -1, -1):
        t2 = d - s * s
        t = math.isqrt(t2)
        if t * t == t2 and t <= s:
            if t:
                return s, t
            best = best or (s, t)
    if best is None:
        raise ChainBoundaryError(f"{d} is not a sum of two squares")
    return best


@lru_cache(maxsize=None)
def _chain_boundary(g: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    M = evaluate_twistword(chain_power_word(g, g, g + 1))
    N = M - identity(g)
    # N x = <x,alpha> alpha + <x,beta> beta  <=>  N J = alpha alpha^T + beta beta^T
    S = N.dot(symplectic_form(g))
    rank = np.linalg.matrix_rank(np.array(S, dtype=float))
    if rank == 0 or rank > 2 or not (S == S.T).all():
        raise ChainBoundaryError(f"genus {g}: M - I has rank {rank} or is not of twist type")
    if rank == 1:
        col = next(c for c in S.T if any(c))
        _, v = _primitive(col)
        i = next(k for k, x in enumerate(v) if x)
        d = S[i, i] // (v[i] * v[i])
        if d <= 0:
            raise ChainBoundaryError(f"genus {g}: M is a negative transvection")
        s, t = _two_squares(int(d))
        alpha, beta_ = tuple(s * x for x in v), tuple(t * x for x in v)
    else:
        alpha, beta_ = _split_rank_two(S)
    return HClass(g, alpha).normalized().coords, HClass(g, beta_).normalized().coords


def _split_rank_two(S: np.ndarray, bound: int = 6) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    # Search alpha among small combinations of two independent columns.
    cols = [tuple(int(x) for x in c) for c in S.T if any(c)]
    u = cols[0]
    w = next(c for c in cols[1:] if np.linalg.matrix_rank(np.array([u, c], dtype=float)) == 2)
    _, u = _primitive(u)
    _, w = _primitive(w)
    for p, q in itertools.product(range(-bound, bound + 1), repeat=2):
        alpha = tuple(p * x + q * y for x, y in zip(u, w))
        if not any(alpha):
            continue
        R = S - np.outer(_vec(alpha), _vec(alpha))
        if np.linalg.matrix_rank(np.array(R, dtype=float)) != 1:
            continue
        col = next(c for c in R.T if any(c))
        _, v = _primitive(col)
        i = next(k for k, x in enumerate(v) if x)
        d = R[i, i] // (v[i] * v[i])
        r = math.isqrt(max(int(d), 0))
        if d > 0 and r * r == d and (np.outer(_vec(v), _vec(v)) * d == R).all():
            return alpha, tuple(r * x for x in v)
    raise ChainBoundaryError("no integral splitting of the rank-two boundary part")


def chain_boundary_classes(g: int) -> Tuple[HClass, HClass]:
    """Classes (alpha, beta) with (t_g ... t_1)^{g+1} acting as T_alpha T_beta.

    Only for odd g >= 3.  The pair is recovered from the rank of M - I, checked
    for <alpha, beta> = 0 and reconstructed exactly; failure raises
    ``ChainBoundaryError``.
    """
    if g < 3 or g % 2 == 0:
        raise ValueError(f"chain boundary pair needs odd g >= 3, got {g}")
    a, b = _chain_boundary(g)
    alpha, beta_ = HClass(g, a), HClass(g, b)
    M = evaluate_twistword(chain_power_word(g, g, g + 1))
    if intersection(alpha, beta_) != 0:
        raise ChainBoundaryError("boundary classes intersect")
    if not (transvection(alpha, 1).dot(transvection(beta_, 1)) == M).all():
        raise ChainBoundaryError("T_alpha T_beta does not reproduce the chain power")
    return alpha, beta_


def relation_word(g: int) -> TwistWord:
    """The monodromy word: (t_B0 ... t_Bg t_c)^2, or with t_a^2 t_b^2 for odd g."""
    if g < 2:
        raise ValueError("the relation word needs g >= 2")
    half = tuple((f"B{k}", 1) for k in range(g + 1))
    if g % 2 == 0:
        half += (("c", 1),)
    else:
        half += (("bd1", 2), ("bd2", 2))
    return TwistWord(g, half * 2)


def hyperelliptic_word(g: int) -> TwistWord:
    """t_1 ... t_{2g+1} t_{2g+1} ... t_1, a word for the hyperelliptic involution."""
    up = tuple((f"A{i}", 1) for i in range(1, 2 * g + 2))
    return TwistWord(g, up + tuple(reversed(up)))

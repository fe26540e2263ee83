"""Named braid words in B_{2g+2} and the permutation quotient B_n -> S_n.

Naming: ``delta(g, k)`` is sigma_1 sigma_2 ... sigma_k and ``bar_delta(g, k)``
is the reversed product sigma_k ... sigma_2 sigma_1 (the overlined Delta).
Every constructor returns a word on 2g+2 strands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .words import Word, conjugate, format_word, power, product

LEMMA_IDS = ("L1a", "L1b", "L1c", "L1d", "L2a", "L2b", "L3", "T3")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: Word

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"a braid needs at least 2 strands, got {self.strands}")
        if self.word.max_index() > self.strands - 1:
            raise ValueError(
                f"generator s{self.word.max_index()} does not exist in B_{self.strands}"
            )

    @classmethod
    def gen(cls, strands: int, i: int, sign: int = 1) -> "BraidWord":
        return cls(strands, Word.gen(i, sign))

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, Word.identity())

    def _check(self, other: "BraidWord") -> None:
        if other.strands != self.strands:
            raise ValueError(f"strand mismatch: B_{self.strands} vs B_{other.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check(other)
        return BraidWord(self.strands, self.word * other.word)

    def __invert__(self) -> "BraidWord":
        return BraidWord(self.strands, ~self.word)

    def __pow__(self, k: int) -> "BraidWord":
        return BraidWord(self.strands, power(self.word, k))

    def conjugate(self, f: "BraidWord") -> "BraidWord":
        self._check(f)
        return BraidWord(self.strands, conjugate(self.word, f.word))

    def widen(self, strands: int) -> "BraidWord":
        """View this braid inside B_strands via B_n < B_strands on the first strands."""
        if strands < self.strands:
            raise ValueError("cannot narrow a braid")
        return BraidWord(strands, self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self.word) or "1"


def _strands(g: int) -> int:
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    return 2 * g + 2


def _check_k(g: int, k: int, hi: int, name: str) -> None:
    if not 0 <= k <= hi:
        raise ValueError(f"{name}: index {k} outside 0..{hi} for genus {g}")


def delta(g: int, k: int) -> BraidWord:
    n = _strands(g)
    _check_k(g, k, 2 * g + 1, "delta")
    return BraidWord(n, Word(range(1, k + 1)))


def bar_delta(g: int, k: int) -> BraidWord:
    n = _strands(g)
    _check_k(g, k, 2 * g + 1, "bar_delta")
    return BraidWord(n, Word(range(k, 0, -1)))


def sigma(g: int, i: int, sign: int = 1) -> BraidWord:
    return BraidWord.gen(_strands(g), i, sign)


def beta_k(g: int, k: int) -> BraidWord:
    _check_k(g, k, g, "beta_k")
    bd = bar_delta(g, k)
    return bd * delta(g, 2 * g + 1 - k) * ~delta(g, 2 * g - k) * ~bd


def beta(g: int) -> BraidWord:
    return bar_delta(g, g) ** (g + 1)


def gamma_k(g: int, k: int) -> BraidWord:
    """The genus g-1 analogue of beta_k, with gamma_g = 1."""
    _check_k(g, k, g, "gamma_k")
    if k == g:
        return BraidWord.identity(_strands(g))
    bd = bar_delta(g, k)
    return bd * delta(g, 2 * g - 1 - k) * ~delta(g, 2 * g - 2 - k) * ~bd


def gamma(g: int) -> BraidWord:
    if g < 1:
        raise ValueError("gamma needs g >= 1")
    return bar_delta(g, g - 1) ** g


def half_twist(g: int) -> BraidWord:
    """Delta_{2g+1} Delta_{2g} ... Delta_1."""
    return BraidWord(_strands(g), product(delta(g, m).word for m in range(2 * g + 1, 0, -1)))


def theorem3_sides(g: int) -> Tuple[BraidWord, BraidWord]:
    lhs = BraidWord(_strands(g), product(beta_k(g, k).word for k in range(g + 1)))
    lhs = lhs * beta(g) ** 2
    return lhs, half_twist(g)


def lemma_parameters(lemma: str, g: int) -> Iterator[Dict[str, int]]:
    """Every valid parameter combination of ``lemma`` at genus ``g``."""
    top = 2 * g + 1
    if lemma == "L1a":
        for m in range(2, top + 1):
            for k in range(2, m + 1):
                for s in (1, -1):
                    yield {"k": k, "m": m, "sign": s}
    elif lemma == "L1b":
        for m in range(2, top + 1):
            for k in range(1, m):
                for s in (1, -1):
                    yield {"k": k, "m": m, "sign": s}
    elif lemma == "L1c":
        for m in range(0, top + 1):
            for k in range(m + 2, top + 1):
                for bar in (0, 1):
                    yield {"k": k, "m": m, "bar": bar}
    elif lemma == "L1d":
        for k in range(1, g + 1):
            for bar in (0, 1):
                yield {"k": k, "bar": bar}
    elif lemma == "L2a":
        if g >= 1:
            yield {}
    elif lemma == "L2b":
        for k in range(1, g):
            yield {"k": k}
    elif lemma == "L3":
        for k in range(0, g):
            yield {"k": k}
    elif lemma == "T3":
        yield {}
    else:
        raise ValueError(f"unknown lemma identifier {lemma!r}; expected one of {LEMMA_IDS}")


def lemma_identity_sides(lemma: str, g: int, **params: int) -> Tuple[BraidWord, BraidWord]:
    """Both sides of one instance of a braid identity.

    ``L1a``: s_k^{+-1} D_m = D_m s_{k-1}^{+-1}, 1 < k <= m (params k, m, sign).
    ``L1b``: s_k^{+-1} bD_m = bD_m s_{k+1}^{+-1}, 1 <= k < m (params k, m, sign).
    ``L1c``: s_k commutes with D_m (bar=0) or bD_m (bar=1) when k > m+1.
    ``L1d``: D_g^k = D_{g-1} D_g^{k-1} s_{g-k+1} (bar=0) or
    bD_g^k = s_{g-k+1} bD_g^{k-1} bD_{g-1} (bar=1), 1 <= k <= g.
    ``L2a``: beta = bD_g D_g bD_{g-1}^g.
    ``L2b``: bD_g D_g commutes with s_k, k < g.
    ``L3``: the gamma_k rewriting identity, 0 <= k <= g-1.
    ``T3``: the product of the beta_k and beta^2 against the half twist.

    Here D is ``delta`` and bD is ``bar_delta``.
    """
    valid = list(lemma_parameters(lemma, g))
    if params not in valid:
        raise ValueError(f"{lemma} parameters {params} invalid at genus {g}")
    s = lambda i, e=1: sigma(g, i, e)  # noqa: E731
    D = lambda m: delta(g, m)  # noqa: E731
    bD = lambda m: bar_delta(g, m)  # noqa: E731

    if lemma == "L1a":
        k, m, e = params["k"], params["m"], params["sign"]
        return s(k, e) * D(m), D(m) * s(k - 1, e)
    if lemma == "L1b":
        k, m, e = params["k"], params["m"], params["sign"]
        return s(k, e) * bD(m), bD(m) * s(k + 1, e)
    if lemma == "L1c":
        k, m = params["k"], params["m"]
        X = bD(m) if params["bar"] else D(m)
        return s(k) * X, X * s(k)
    if lemma == "L1d":
        k = params["k"]
        if params["bar"]:
            return bD(g) ** k, s(g - k + 1) * bD(g) ** (k - 1) * bD(g - 1)
        return D(g) ** k, D(g - 1) * D(g) ** (k - 1) * s(g - k + 1)
    if lemma == "L2a":
        return beta(g), bD(g) * D(g) * bD(g - 1) ** g
    if lemma == "L2b":
        k = params["k"]
        c = bD(g) * D(g)
        return c * s(k), s(k) * c
    if lemma == "L3":
        k = params["k"]
        lhs = ~D(2 * g - k) * ~bD(k) * bD(k + 1) * D(2 * g - k) * bD(k + 1) * D(2 * g - k - 1)
        return lhs, bD(k) * D(2 * g - k) * gamma_k(g, k)
    return theorem3_sides(g)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored as its image tuple."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(tuple(img))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``p * q`` applies q first."""
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


def to_permutation(w: BraidWord) -> Permutation:
    n = w.strands
    img = list(range(1, n + 1))
    # right-to-left: the last letter acts first, so fold from the right
    for x in reversed(w.word.signed):
        i = abs(x)
        img = [i + 1 if v == i else i if v == i + 1 else v for v in img]
    return Permutation(tuple(img))

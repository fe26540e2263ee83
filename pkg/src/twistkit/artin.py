"""Artin action of B_n on the free group F_n, used as an exact equality test.

Convention: sigma_i sends x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i and
fixes every other basis letter.  The action is faithful, so two braid words
are equal in B_n exactly when their automorphisms agree on all of x_1..x_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .braid import BraidWord
from .words import Word, _join

DEFAULT_LENGTH_CEILING = 10**6


class GrowthLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class FreeAuto:
    """Automorphism of F_n given by the images of x_1..x_n."""

    n: int
    images: Tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.n:
            raise ValueError(f"expected {self.n} images, got {len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "FreeAuto":
        return cls(n, tuple(Word.gen(j) for j in range(1, n + 1)))

    def apply(self, w: Word) -> Word:
        out: Tuple[int, ...] = ()
        for x in w.signed:
            img = self.images[abs(x) - 1].signed
            if x < 0:
                img = tuple(-y for y in reversed(img))
            out = _join(out, img)
        return Word._trusted(out)

    def __mul__(self, other: "FreeAuto") -> "FreeAuto":
        """Composition ``self o other``: other acts first."""
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return FreeAuto(self.n, tuple(self.apply(img) for img in other.images))

    def is_identity(self) -> bool:
        return all(img.signed == (j,) for j, img in enumerate(self.images, 1))

    def total_length(self) -> int:
        return sum(len(img) for img in self.images)

    def __str__(self) -> str:
        if self.is_identity():
            return "identity"
        return "\n".join(
            f"x{j} -> " + (" ".join(_fmt(y) for y in img.signed) or "1")
            for j, img in enumerate(self.images, 1)
        )


def _fmt(y: int) -> str:
    return f"x{abs(y)}" + ("" if y > 0 else "^-1")


def artin_generator(n: int, i: int, sign: int = 1) -> FreeAuto:
    if not 1 <= i <= n - 1:
        raise ValueError(f"sigma_{i} does not exist in B_{n}")
    images = list(FreeAuto.identity(n).images)
    xi, xj = Word.gen(i), Word.gen(i + 1)
    if sign > 0:
        images[i - 1] = xi * xj * ~xi
        images[i] = xi
    else:
        images[i - 1] = xj
        images[i] = ~xj * xi * xj
    return FreeAuto(n, tuple(images))


def evaluate(w: BraidWord, length_ceiling: Optional[int] = DEFAULT_LENGTH_CEILING) -> FreeAuto:
    """Automorphism of a braid word, rightmost letter acting first.

    Builds R = phi_1 o phi_2 o ... by right-composing one generator at a time;
    R o sigma_i only changes the images of x_i and x_{i+1}.
    """
    n = w.strands
    imgs = [(j,) for j in range(1, n + 1)]
    total = n
    for x in w.word.signed:
        i = abs(x)
        a, b = imgs[i - 1], imgs[i]
        if x > 0:
            ainv = tuple(-y for y in reversed(a))
            new_a, new_b = _join(_join(a, b), ainv), a
        else:
            binv = tuple(-y for y in reversed(b))
            new_a, new_b = b, _join(_join(binv, a), b)
        total += len(new_a) + len(new_b) - len(a) - len(b)
        imgs[i - 1], imgs[i] = new_a, new_b
        if length_ceiling is not None and total > length_ceiling:
            raise GrowthLimitError(
                f"image words exceed {length_ceiling} letters in total while evaluating "
                f"a word of length {len(w.word)} on {n} strands"
            )
    return FreeAuto(n, tuple(Word._trusted(t) for t in imgs))


def first_difference(u: BraidWord, v: BraidWord, **kw) -> Optional[int]:
    """Index j of the first basis letter x_j whose images differ, else None."""
    if u.strands != v.strands:
        raise ValueError(f"strand mismatch: B_{u.strands} vs B_{v.strands}")
    fu, fv = evaluate(u, **kw), evaluate(v, **kw)
    for j, (p, q) in enumerate(zip(fu.images, fv.images), 1):
        if p != q:
            return j
    return None


def braid_equal(u: BraidWord, v: BraidWord, **kw) -> bool:
    return first_difference(u, v, **kw) is None

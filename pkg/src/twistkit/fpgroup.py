"""Abelianization of fibration fundamental groups and a small Tietze engine.

The rigorous route to H_1 of the total space is homological: quotient
Z^{2g} by the classes of the vanishing cycles and read off the cokernel from
the Smith normal form.  ``paper_presentation`` and ``tietze_eliminate`` give a
word-level cross-check for even genus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .homology import HClass, TwistWord, apply, curve_class, evaluate_twistword, relation_word
from .snf import smith_normal_form
from .words import Word, product


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z_{d_1} + ... with d_1 | d_2 | ..., every d_i >= 2."""

    free_rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion if d != 1)
        object.__setattr__(self, "torsion", t)
        if self.free_rank < 0 or any(d < 2 for d in t):
            raise ValueError(f"invalid abelian group data {self.free_rank}, {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain")

    @classmethod
    def from_invariant_factors(cls, n_generators: int, factors: Iterable[int]) -> "AbelianGroup":
        factors = [abs(int(d)) for d in factors]
        rank = sum(1 for d in factors if d)
        return cls(n_generators - rank, tuple(d for d in factors if d > 1))

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.torsion]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"


def cokernel(rows: Sequence[Sequence[int]], n_columns: int) -> AbelianGroup:
    """Z^n_columns modulo the row span."""
    if len(rows) == 0:
        return AbelianGroup(n_columns)
    M = np.array([[int(x) for x in r] for r in rows], dtype=object).reshape(len(rows), n_columns)
    D, _, _ = smith_normal_form(M)
    return AbelianGroup.from_invariant_factors(n_columns, [D[i, i] for i in range(min(D.shape))])


def abelianization(classes: Sequence[HClass], g: Optional[int] = None) -> AbelianGroup:
    """H_1(Sigma_g) modulo the span of the given vanishing-cycle classes.

    The surface relation prod [a_k, b_k] is zero in homology and adds no row.
    """
    genera = {c.g for c in classes}
    if g is not None:
        genera.add(g)
    if len(genera) != 1:
        raise ValueError(f"classes from different genera: {sorted(genera)}")
    (g,) = genera
    return cokernel([c.coords for c in classes], 2 * g)


def monodromy_conjugators(g: int, n: int) -> List[TwistWord]:
    """The mapping classes f with W_n = prod_f f W f^-1, in order."""
    if g < 2 or n < 1:
        raise ValueError(f"need g >= 2 and n >= 1, got g={g}, n={n}")
    tw = lambda label, e=1: TwistWord(g, ((label, e),))  # noqa: E731
    out = [TwistWord(g, ())]
    if g % 2 == 0:
        r = g // 2
        out += [tw(f"a{k}") for k in range(1, r)]
        out.append(tw(f"a{r}", n))
    else:
        r = (g - 1) // 2
        out.append(tw("A3", n))
        out += [tw(f"A{j}") for j in range(5, 2 * r + 2, 2)]
    out += [tw(f"b{k}") for k in range(r + 2, g + 1)]
    return out


def vanishing_cycle_classes(g: int, n: Optional[int] = None) -> List[HClass]:
    """Classes of the vanishing cycles of W (``n=None``) or of W_n."""
    curves = [curve_class(label, g) for label in relation_word(g).curves()]
    if n is None:
        return curves
    out = []
    for f in monodromy_conjugators(g, n):
        M = evaluate_twistword(f)
        out.extend(apply(M, c) for c in curves)
    return out


# -- word level ---------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """A group presentation over a fixed symbol table.

    Symbols are 1-based indices into ``names``.  ``generators`` lists the live
    free generators; ``opaque`` maps each opaque commutator-product symbol to
    the generators it is built from.  Opaque symbols lie in the commutator
    subgroup, so they vanish under abelianization.
    """

    names: Tuple[str, ...]
    generators: Tuple[int, ...]
    relators: Tuple[Word, ...]
    opaque: Tuple[Tuple[int, FrozenSet[int]], ...] = field(default=())

    def __post_init__(self):
        allowed = set(self.generators) | {s for s, _ in self.opaque}
        for r in self.relators:
            stray = {abs(x) for x in r} - allowed
            if stray:
                raise ValueError(f"relator uses undeclared symbols {sorted(stray)}")

    def symbol(self, name: str) -> int:
        return self.names.index(name) + 1

    def generator_names(self) -> List[str]:
        return [self.names[i - 1] for i in self.generators]

    def format_relator(self, r: Word) -> str:
        return " ".join(
            self.names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in r.signed
        ) or "1"

    def __str__(self) -> str:
        rels = ", ".join(self.format_relator(r) for r in self.relators)
        return f"< {', '.join(self.generator_names())} | {rels} >"

    def abelianization(self) -> AbelianGroup:
        col = {s: i for i, s in enumerate(self.generators)}
        rows = []
        for r in self.relators:
            row = [0] * len(col)
            for x in r.signed:
                if abs(x) in col:
                    row[col[abs(x)]] += 1 if x > 0 else -1
            rows.append(row)
        return cokernel(rows, len(col))


def presentation(names: Sequence[str], relators: Sequence[Sequence[Tuple[str, int]]],
                 opaque: Optional[Dict[str, Iterable[str]]] = None) -> Presentation:
    """Build a presentation from named letters; ``opaque`` maps symbol -> argument names."""
    opaque = dict(opaque or {})
    all_names = tuple(names) + tuple(opaque)
    idx = {nm: i + 1 for i, nm in enumerate(all_names)}
    rels = tuple(_word_from_named(rel, idx) for rel in relators)
    op = tuple((idx[s], frozenset(idx[a] for a in args)) for s, args in opaque.items())
    return Presentation(all_names, tuple(idx[nm] for nm in names), rels, op)


def _word_from_named(rel: Sequence[Tuple[str, int]], idx: Dict[str, int]) -> Word:
    letters: List[int] = []
    for nm, e in rel:
        letters.extend([idx[nm] if e > 0 else -idx[nm]] * abs(e))
    return Word(letters)


def paper_presentation(g: int, n: int) -> Presentation:
    """Presentation of pi_1(X_n) for even g from the vanishing-cycle word table.

    The words c_j are opaque commutator products with arguments
    a_1, b_1, ..., a_j, b_j; c = c_r with r = g/2.
    """
    if g < 2 or g % 2:
        raise ValueError("the word table is only available for even g >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    r = g // 2
    a = lambda i: (f"a{i}", 1)  # noqa: E731
    b = lambda i: (f"b{i}", 1)  # noqa: E731
    c = lambda j: (f"c{j}", 1)  # noqa: E731
    names = [f"a{i}" for i in range(1, g + 1)] + [f"b{i}" for i in range(1, g + 1)]
    opaque = {f"c{j}": [x for i in range(1, j + 1) for x in (f"a{i}", f"b{i}")]
              for j in range(1, g + 1)}

    surface = []
    for k in range(1, g + 1):
        surface += [a(k), b(k), (f"a{k}", -1), (f"b{k}", -1)]
    B: Dict[int, list] = {0: [b(i) for i in range(1, g + 1)]}
    for k in range(1, r + 1):
        B[2 * k - 1] = [a(k)] + [b(i) for i in range(k, g + 2 - k)] + [c(g + 1 - k), a(g + 1 - k)]
    for k in range(1, r):
        B[2 * k] = [a(k)] + [b(i) for i in range(k + 1, g - k + 1)] + [c(g - k), a(g + 1 - k)]
    B[g] = [a(r), c(r), a(r + 1)]

    rels = [surface] + [B[k] for k in range(g + 1)] + [[c(r)]]
    rels += [[a(k)] for k in range(1, r)] + [[(f"a{r}", n)]]
    rels += [[b(k)] for k in range(r + 2, g + 1)]
    return presentation(names, rels, opaque)


def _cyclic_reduce(w: Word) -> Word:
    s = w.signed
    i, j = 0, len(s) - 1
    while i < j and s[i] == -s[j]:
        i += 1
        j -= 1
    return Word._trusted(s[i: j + 1])


def _substitute(w: Word, sym: int, image: Word) -> Word:
    inv = ~image
    return product(image if x == sym else inv if x == -sym else Word._trusted((x,))
                   for x in w.signed)


def _drop_symbol(w: Word, sym: int) -> Word:
    return Word(x for x in w.signed if abs(x) != sym)


def _tidy(relators: Iterable[Word]) -> Tuple[Word, ...]:
    seen = []
    for r in relators:
        r = _cyclic_reduce(r)
        if r.signed and r not in seen and ~r not in seen:
            seen.append(r)
    return tuple(seen)


def _collapse(p: Presentation, symbols: Iterable[int]) -> Presentation:
    symbols = set(symbols)
    rels = list(p.relators)
    for s in symbols:
        rels = [_drop_symbol(r, s) for r in rels]
    opaque = tuple((s, args) for s, args in p.opaque if s not in symbols)
    return Presentation(p.names, p.generators, _tidy(rels), opaque)


def _tietze_step(p: Presentation) -> Optional[Presentation]:
    opaque_syms = {s for s, _ in p.opaque}
    # a relator that is a single opaque symbol kills it
    for r in p.relators:
        if len(r) == 1 and abs(r.signed[0]) in opaque_syms:
            return _collapse(p, [abs(r.signed[0])])

    best = None
    for ri, r in enumerate(p.relators):
        s = r.signed
        for x in p.generators:
            pos = [i for i, y in enumerate(s) if abs(y) == x]
            if len(pos) != 1:
                continue
            i = pos[0]
            rest = Word._trusted(s[i + 1:] + s[:i])  # x^e * rest is a rotation of r
            image = ~rest if s[i] > 0 else rest
            key = (len(image), ri, x)
            if best is None or key < best[0]:
                best = (key, ri, x, image)
    if best is None:
        return None
    _, ri, x, image = best
    rels = [_substitute(r, x, image) for k, r in enumerate(p.relators) if k != ri]
    gens = tuple(y for y in p.generators if y != x)
    if image.is_identity():
        q = Presentation(p.names, gens, _tidy(rels), p.opaque)
        return _collapse(q, [s for s, args in p.opaque if x in args])
    new_args = {abs(y) for y in image.signed if abs(y) in set(gens)}
    opaque = tuple((s, (args - {x}) | new_args if x in args else args) for s, args in p.opaque)
    return Presentation(p.names, gens, _tidy(rels), opaque)


def tietze_eliminate(p: Presentation) -> Presentation:
    """Eliminate generators occurring exactly once in some relator, to a fixed point.

    Substituting a generator by the identity collapses every opaque symbol
    built from it.  Each step removes a generator or an opaque symbol, so the
    loop terminates.
    """
    p = Presentation(p.names, p.generators, _tidy(p.relators), p.opaque)
    while True:
        q = _tietze_step(p)
        if q is None:
            return p
        p = q

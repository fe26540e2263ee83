"""Euler characteristic, signature and Betti numbers of the fibration X.

Even genus goes through the hyperelliptic signature formula.  Odd genus
replays a parity/definiteness argument; the steps that rest on geometry are
recorded as premises in the report instead of being computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple

import numpy as np

from .fpgroup import AbelianGroup, abelianization, vanishing_cycle_classes
from .snf import det

SYMPLECTIC_PARITY = "1 - b1 + b2plus is even for a closed symplectic 4-manifold"
SYMPLECTIC_B2PLUS = "b2plus >= 1 for a closed symplectic 4-manifold"
EIGHTH_CLASS = "V-perp contains a class [S_8] with [S_8]^2 < 0 (fiber class argument)"
SEPARATING_GENUS = "both separating vanishing cycles c bound genus g/2 on each side"


class InvalidFibrationData(ValueError):
    pass


class InconsistentInvariants(ValueError):
    pass


class DeductionError(AssertionError):
    pass


@dataclass(frozen=True)
class FibrationData:
    g: int
    m: int
    s: Dict[int, int] = field(default_factory=dict)
    hyperelliptic: bool = True

    def __post_init__(self):
        if self.g < 2:
            raise InvalidFibrationData(f"genus must be >= 2, got {self.g}")
        if self.m < 0 or any(v < 0 for v in self.s.values()):
            raise InvalidFibrationData("cycle counts must be nonnegative")
        bad = [h for h in self.s if not 1 <= h <= self.g // 2]
        if bad:
            raise InvalidFibrationData(f"separating types {bad} outside 1..{self.g // 2}")

    @property
    def total_cycles(self) -> int:
        return self.m + sum(self.s.values())


def monodromy_data(g: int) -> FibrationData:
    """Cycle counts of the relation word W in genus g."""
    if g % 2 == 0:
        return FibrationData(g, 2 * g + 2, {g // 2: 2}, hyperelliptic=True)
    return FibrationData(g, 2 * g + 10, {}, hyperelliptic=False)


def euler_characteristic(g: int, total_cycles: int) -> int:
    if total_cycles < 0:
        raise ValueError("negative cycle count")
    return 2 * (2 - 2 * g) + total_cycles


def endo_signature(d: FibrationData) -> int:
    """Signature of a hyperelliptic Lefschetz fibration from its cycle counts."""
    if not d.hyperelliptic:
        raise InvalidFibrationData("the signature formula needs a hyperelliptic fibration")
    if d.total_cycles < 1:
        raise InvalidFibrationData("empty monodromy")
    g = d.g
    sigma = Fraction(-(g + 1), 2 * g + 1) * d.m
    for h, s_h in d.s.items():
        sigma += (Fraction(4 * h * (g - h), 2 * g + 1) - 1) * s_h
    if sigma.denominator != 1:
        raise InvalidFibrationData(f"signature {sigma} is not an integer")
    return int(sigma)


@dataclass
class InvariantReport:
    chi: int
    sigma: int
    b1: int
    b2: int
    b2plus: int
    b2minus: int
    genus: int | None = None
    premises: List[str] = field(default_factory=list)
    steps: List[Tuple[str, str]] = field(default_factory=list)

    def check(self) -> "InvariantReport":
        if self.chi != 2 - 2 * self.b1 + self.b2:
            raise InconsistentInvariants("chi != 2 - 2 b1 + b2")
        if self.b2 != self.b2plus + self.b2minus or self.sigma != self.b2plus - self.b2minus:
            raise InconsistentInvariants("b2plus/b2minus do not match b2 and sigma")
        return self

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "chi": self.chi,
            "sigma": self.sigma,
            "b1": self.b1,
            "b2": self.b2,
            "b2plus": self.b2plus,
            "b2minus": self.b2minus,
            "premises": list(self.premises),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def betti_report(chi: int, sigma: int, b1: int) -> InvariantReport:
    b2 = chi - 2 + 2 * b1
    if b2 < 0:
        raise InconsistentInvariants(f"b2 = {b2} < 0")
    if (b2 + sigma) % 2 or b2 + sigma < 0 or b2 - sigma < 0:
        raise InconsistentInvariants(f"b2 = {b2} and sigma = {sigma} are incompatible")
    return InvariantReport(chi, sigma, b1, b2, (b2 + sigma) // 2, (b2 - sigma) // 2).check()


def matrix_A() -> np.ndarray:
    """Intersection matrix (negated) of the seven (-2)-classes S_1..S_7."""
    return np.array([
        [2, 1, 0, 0, 0, 0, 1],
        [1, 2, 1, 0, 0, 0, 0],
        [0, 1, 2, 0, 0, 0, 0],
        [0, 0, 0, 2, 1, 0, 1],
        [0, 0, 0, 1, 2, 1, 0],
        [0, 0, 0, 0, 1, 2, 0],
        [1, 0, 0, 1, 0, 0, 2],
    ], dtype=object)


class Definiteness(NamedTuple):
    positive: bool
    minors: Tuple[int, ...]


def is_positive_definite(M) -> Definiteness:
    """Sylvester's criterion with exact leading principal minors."""
    M = np.asarray(M, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or not (M == M.T).all():
        raise ValueError("expected a symmetric square matrix")
    minors = tuple(det(M[:k, :k]) for k in range(1, M.shape[0] + 1))
    return Definiteness(all(x > 0 for x in minors), minors)


def first_homology(g: int) -> AbelianGroup:
    return abelianization(vanishing_cycle_classes(g))


def even_genus_report(g: int) -> InvariantReport:
    if g < 2 or g % 2:
        raise ValueError(f"expected even g >= 2, got {g}")
    classes = vanishing_cycle_classes(g)
    h1 = abelianization(classes)
    if h1.torsion:
        raise DeductionError(f"H_1 = {h1} has torsion")
    d = monodromy_data(g)
    if len(classes) != d.total_cycles:
        raise DeductionError("cycle count disagrees with the relation word")
    chi = euler_characteristic(g, d.total_cycles)
    report = betti_report(chi, endo_signature(d), h1.free_rank)
    report.genus = g
    report.premises = [SEPARATING_GENUS]
    report.steps = [
        ("computed", f"H_1 = {h1}"),
        ("computed", f"chi = 2(2-2g) + {d.total_cycles} = {chi}"),
        ("computed", f"sigma = {report.sigma} from m = {d.m}, s = {d.s}"),
    ]
    return report


def odd_g_deduction(g: int) -> InvariantReport:
    """Replay the odd-genus signature argument, checking every computed step."""
    if g < 3 or g % 2 == 0:
        raise ValueError(f"expected odd g >= 3, got {g}")
    steps: List[Tuple[str, str]] = []

    def require(ok: bool, what: str) -> None:
        if not ok:
            raise DeductionError(f"genus {g}: {what}")
        steps.append(("computed", what))

    classes = vanishing_cycle_classes(g)
    require(len(classes) == 2 * g + 10, f"{len(classes)} vanishing cycles")
    chi = euler_characteristic(g, len(classes))
    require(chi == 14 - 2 * g, f"chi = {chi}")

    h1 = abelianization(classes)
    require(h1 == AbelianGroup(g - 1), f"H_1 = {h1}")
    b1 = h1.free_rank
    b2 = chi - 2 + 2 * b1
    require(b2 == 10, f"b2 = {b2}")

    steps.append(("premise", SYMPLECTIC_PARITY))
    steps.append(("premise", SYMPLECTIC_B2PLUS))
    plus_candidates = [p for p in range(1, b2 + 1) if (1 - b1 + p) % 2 == 0]
    require(plus_candidates == [1, 3, 5, 7, 9], f"b2plus in {plus_candidates}")
    minus_candidates = [b2 - p for p in plus_candidates]

    pd = is_positive_definite(matrix_A())
    require(pd.positive, f"A positive definite, leading minors {list(pd.minors)}")
    lower = matrix_A().shape[0]
    steps.append(("premise", EIGHTH_CLASS))
    lower += 1
    minus_candidates = [q for q in minus_candidates if q >= lower]
    require(minus_candidates == [9], f"b2minus in {minus_candidates}")

    b2minus = minus_candidates[0]
    report = InvariantReport(chi, (b2 - b2minus) - b2minus, b1, b2, b2 - b2minus, b2minus,
                             genus=g, premises=[SYMPLECTIC_PARITY, SYMPLECTIC_B2PLUS, EIGHTH_CLASS],
                             steps=steps)
    return report.check()


def invariant_report(g: int) -> InvariantReport:
    return even_genus_report(g) if g % 2 == 0 else odd_g_deduction(g)

"""Named verification claims, each checked for one genus at a time."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from . import homology as hom
from .artin import first_difference
from .braid import LEMMA_IDS, lemma_identity_sides, lemma_parameters, to_permutation

BRAID_CLAIMS = LEMMA_IDS
SYMPLECTIC_CLAIMS = ("MCG-W", "CHAIN", "JACT")
CLAIMS = BRAID_CLAIMS + SYMPLECTIC_CLAIMS

VERIFIED, FALSIFIED, ERROR = "verified", "falsified", "error"


@dataclass
class VerificationReport:
    claim: str
    genus: int
    status: str
    params: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status == FALSIFIED and self.witness is None:
            raise ValueError("a falsified claim needs a witness")

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED

    def to_dict(self, timing: bool = False) -> dict:
        d = {"claim": self.claim, "genus": self.genus, "status": self.status,
             "params": self.params, "witness": self.witness}
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def __str__(self) -> str:
        s = f"{self.claim:6s} g={self.genus:<3d} {self.status:9s} {self.params}"
        if self.witness:
            s += f" witness={self.witness}"
        return s + f" ({self.elapsed:.3f}s)"


def min_genus(claim: str) -> int:
    if claim in ("L1a", "L1b", "L1c", "L1d", "L2a", "L2b", "L3"):
        return 1
    if claim == "T3":
        return 0
    if claim in SYMPLECTIC_CLAIMS:
        return 2
    raise ValueError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}")


def _matrix_witness(M: np.ndarray, expected: np.ndarray) -> Optional[Dict[str, Any]]:
    diff = np.argwhere(M != expected)
    if len(diff) == 0:
        return None
    i, j = (int(x) for x in diff[0])
    return {"entry": [i + 1, j + 1], "got": int(M[i, j]), "expected": int(expected[i, j])}


def _check_braid(claim: str, g: int) -> Tuple[Dict[str, Any], Optional[Dict[str, Any]]]:
    count = 0
    for params in lemma_parameters(claim, g):
        lhs, rhs = lemma_identity_sides(claim, g, **params)
        count += 1
        j = first_difference(lhs, rhs)
        if j is not None:
            return {"instances": count}, {"params": params, "letter": f"x{j}"}
        if to_permutation(lhs) != to_permutation(rhs):
            return {"instances": count}, {"params": params, "permutation": True}
    return {"instances": count}, None


def _check_mcg_w(g: int):
    M = hom.evaluate_twistword(hom.relation_word(g))
    if not hom.is_symplectic(M):
        return {}, {"symplectic": False}
    return {"twists": len(hom.relation_word(g).curves())}, _matrix_witness(M, hom.identity(g))


def _check_chain(g: int):
    if g % 2 == 0:
        if not hom.curve_class("c", g).is_zero():
            return {}, {"class_c": str(hom.curve_class("c", g))}
        M = hom.evaluate_twistword(hom.chain_power_word(g, g, 2 * (g + 1)))
        return {"parity": "even", "exponent": 2 * (g + 1)}, _matrix_witness(M, hom.identity(g))
    try:
        alpha, beta = hom.chain_boundary_classes(g)
    except hom.ChainBoundaryError as exc:
        return {"parity": "odd"}, {"extraction": str(exc)}
    return {"parity": "odd", "alpha": str(alpha), "beta": str(beta)}, None


def _check_jact(g: int):
    J = hom.hyperelliptic_matrix(g)
    I = hom.identity(g)
    if (J == I).all():
        return {}, {"hyperelliptic_is_identity": True}
    if not hom.is_symplectic(J):
        return {}, {"symplectic": False}
    # W acts as the identity, so it cannot be the hyperelliptic involution
    W = hom.evaluate_twistword(hom.relation_word(g))
    if (W == J).all():
        return {}, {"relation_word_acts_as": "-I"}
    word = hom.evaluate_twistword(hom.hyperelliptic_word(g))
    return {"distinct_from_W": True}, _matrix_witness(word, J)


_SYMPLECTIC: Dict[str, Callable[[int], tuple]] = {
    "MCG-W": _check_mcg_w,
    "CHAIN": _check_chain,
    "JACT": _check_jact,
}


def verify_claim(claim: str, g: int) -> VerificationReport:
    lo = min_genus(claim)
    if g < lo:
        raise ValueError(f"{claim} needs genus >= {lo}, got {g}")
    t0 = time.perf_counter()
    try:
        if claim in BRAID_CLAIMS:
            params, witness = _check_braid(claim, g)
        else:
            params, witness = _SYMPLECTIC[claim](g)
        status = VERIFIED if witness is None else FALSIFIED
    except Exception as exc:  # reported, not raised: one bad claim must not hide the rest
        params, witness, status = {}, {"exception": f"{type(exc).__name__}: {exc}"}, ERROR
    return VerificationReport(claim, g, status, params, witness, time.perf_counter() - t0)

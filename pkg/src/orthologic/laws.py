"""Decidable checkers for lattice laws.

Every checker returns a LawReport carrying the verdict, the number of
trials, the worst numerical residual seen, and, on failure, a
re-checkable counterexample (serialized inputs plus both evaluated
sides).  The checkers work both on quantum propositions (Subspace) and
classical ones (ClassicalProp); the classical power-set lattice
satisfies every law here, the subspace lattice does not.

Compatibility of two subspaces is decided lattice-theoretically by the
constructive criterion (a meet b) join (a' meet b) = b; the second
criterion (a join b') meet b = a meet b and the projector-commutator
test are exposed separately so independence of the three routes can be
asserted in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import classical as cl
from . import subspace as sub
from .core import DEFAULT_TOL, Tolerance, random_vector
from .errors import DimensionMismatch, PreconditionViolated
from .subspace import Ray, Subspace

__all__ = [
    "LawReport",
    "check_distributive",
    "nondistributivity_witness",
    "check_orthomodular",
    "compatible",
    "compatible_second_criterion",
    "commuting_projectors",
    "check_foulis_distributivity",
    "check_triple_distributive",
    "check_covering",
    "is_modular_pair",
]


@dataclass
class LawReport:
    """Verdict of a single lattice-law check."""

    law_name: str
    holds: bool
    trials: int = 1
    applicable: bool = True
    worst_residual: float = 0.0
    counterexample: Optional[dict] = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "law_name": self.law_name,
            "holds": self.holds,
            "trials": self.trials,
            "applicable": self.applicable,
            "worst_residual": self.worst_residual,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail:
            out["detail"] = self.detail
        return out


class _Ops:
    """Uniform lattice interface over Subspace and ClassicalProp."""

    def __init__(self, sample):
        if isinstance(sample, Subspace):
            self.kind = "subspace"
        elif isinstance(sample, cl.ClassicalProp):
            self.kind = "classical"
        else:
            raise TypeError(f"unsupported proposition type {type(sample)!r}")

    def join(self, a, b, tol):
        if self.kind == "subspace":
            return sub.join(a, b, tol)
        return cl.prop_or(a, b)

    def meet(self, a, b, tol):
        if self.kind == "subspace":
            return sub.meet(a, b, tol)
        return cl.prop_and(a, b)

    def ortho(self, a, tol):
        if self.kind == "subspace":
            return sub.ortho(a, tol)
        return cl.prop_not(a)

    def equal(self, a, b, tol):
        if self.kind == "subspace":
            return sub.equal(a, b, tol)
        return a.members == b.members

    def leq(self, a, b, tol):
        if self.kind == "subspace":
            return sub.leq(a, b, tol)
        return b.contains(a)

    def residual(self, a, b) -> float:
        if self.kind == "subspace":
            return sub.projector_distance(a, b)
        return float(bin(a.members ^ b.members).count("1"))

    def serialize(self, a) -> dict:
        if self.kind == "subspace":
            return sub.subspace_to_json(a)
        return a.to_json()


def _counterexample(ops: _Ops, inputs: dict, left, right) -> dict:
    ce = {"inputs": {k: ops.serialize(v) for k, v in inputs.items()}}
    ce["left"] = ops.serialize(left)
    ce["right"] = ops.serialize(right)
    return ce


def check_distributive(a, b, c, tol: Tolerance = DEFAULT_TOL) -> LawReport:
    """Check a join (b meet c) = (a join b) meet (a join c).

    Holds for every classical triple; fails for generic subspace
    triples, which is the structural split between the two logics.
    """
    ops = _Ops(a)
    left = ops.join(a, ops.meet(b, c, tol), tol)
    right = ops.meet(ops.join(a, b, tol), ops.join(a, c, tol), tol)
    holds = ops.equal(left, right, tol)
    report = LawReport(
        "distributive",
        holds,
        worst_residual=0.0 if holds else ops.residual(left, right),
    )
    if not holds:
        report.counterexample = _counterexample(
            ops, {"a": a, "b": b, "c": c}, left, right
        )
    return report


def nondistributivity_witness(
    psi1=None, psi2=None, psi3=None, tol: Tolerance = DEFAULT_TOL
) -> LawReport:
    """The classic worked three-subspace configuration in C^3.

    With rays p1 = <psi1>, p2 = <psi2> and the plane p3 = span{psi2,
    psi3} (so p2 <= p3), evaluates the two groupings
    p3 join (p1 meet p2) and (p3 join p1) meet (p1 join p2), which land
    on span{psi2, psi3} and span{psi1, psi2}: two incomparable planes,
    recorded side by side in the report.  Defaults to the coordinate
    basis of C^3.
    """
    if psi1 is None:
        psi1, psi2, psi3 = np.eye(3)[0], np.eye(3)[1], np.eye(3)[2]
    p1 = sub.span_of([psi1], tol)
    p2 = sub.span_of([psi2], tol)
    p3 = sub.span_of([psi2, psi3], tol)
    left = sub.join(p3, sub.meet(p1, p2, tol), tol)
    right = sub.meet(sub.join(p3, p1, tol), sub.join(p1, p2, tol), tol)
    holds = sub.equal(left, right, tol)
    ops = _Ops(p1)
    report = LawReport(
        "distributive",
        holds,
        worst_residual=sub.projector_distance(left, right),
        detail={"left_dim": left.dim, "right_dim": right.dim},
    )
    report.counterexample = _counterexample(
        ops, {"p1": p1, "p2": p2, "p3": p3}, left, right
    )
    return report


def check_orthomodular(p, q, tol: Tolerance = DEFAULT_TOL) -> LawReport:
    """For p <= q, check q = p join (q meet p')."""
    ops = _Ops(p)
    if not ops.leq(p, q, tol):
        return LawReport("orthomodular", True, applicable=False)
    rebuilt = ops.join(p, ops.meet(q, ops.ortho(p, tol), tol), tol)
    holds = ops.equal(rebuilt, q, tol)
    report = LawReport(
        "orthomodular", holds, worst_residual=ops.residual(rebuilt, q) if not holds else 0.0
    )
    if not holds:
        report.counterexample = _counterexample(ops, {"p": p, "q": q}, rebuilt, q)
    return report


def compatible(a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Compatibility via (a meet b) join (a' meet b) = b."""
    rebuilt = sub.join(
        sub.meet(a, b, tol), sub.meet(sub.ortho(a, tol), b, tol), tol
    )
    return sub.equal(rebuilt, b, tol)


def compatible_second_criterion(
    a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL
) -> bool:
    """Compatibility via (a join b') meet b = a meet b."""
    left = sub.meet(sub.join(a, sub.ortho(b, tol), tol), b, tol)
    return sub.equal(left, sub.meet(a, b, tol), tol)


def commuting_projectors(
    a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL
) -> bool:
    """Operator-side oracle: do the orthogonal projectors commute."""
    pa, pb = a.projector(), b.projector()
    return float(np.linalg.norm(pa @ pb - pb @ pa)) < tol.eps_eq * a.ambient_dim


def check_foulis_distributivity(
    b, family, tol: Tolerance = DEFAULT_TOL
) -> LawReport:
    """For b compatible with every a_i, check
    join_i (b meet a_i) = b meet (join_i a_i)."""
    ops = _Ops(b)
    family = list(family)
    if ops.kind == "subspace":
        if not all(compatible(b, a, tol) for a in family):
            return LawReport("foulis_distributivity", True, applicable=False)
    if not family:
        return LawReport("foulis_distributivity", True, applicable=False)
    left = ops.meet(b, family[0], tol)
    joined = family[0]
    for a in family[1:]:
        left = ops.join(left, ops.meet(b, a, tol), tol)
        joined = ops.join(joined, a, tol)
    right = ops.meet(b, joined, tol)
    holds = ops.equal(left, right, tol)
    report = LawReport(
        "foulis_distributivity",
        holds,
        trials=len(family),
        worst_residual=0.0 if holds else ops.residual(left, right),
    )
    if not holds:
        inputs = {"b": b}
        inputs.update({f"a{k}": a for k, a in enumerate(family)})
        report.counterexample = _counterexample(ops, inputs, left, right)
    return report


def check_triple_distributive(a, b, c, tol: Tolerance = DEFAULT_TOL) -> LawReport:
    """If some element is compatible with the other two, the triple must
    satisfy all six distributivity identities."""
    ops = _Ops(a)
    if ops.kind == "subspace":
        hypothesis = (
            (compatible(a, b, tol) and compatible(a, c, tol))
            or (compatible(b, a, tol) and compatible(b, c, tol))
            or (compatible(c, a, tol) and compatible(c, b, tol))
        )
        if not hypothesis:
            return LawReport("triple_distributive", True, applicable=False)
    worst = 0.0
    for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
        left = ops.join(x, ops.meet(y, z, tol), tol)
        right = ops.meet(ops.join(x, y, tol), ops.join(x, z, tol), tol)
        if not ops.equal(left, right, tol):
            report = LawReport(
                "triple_distributive", False, worst_residual=ops.residual(left, right)
            )
            report.counterexample = _counterexample(
                ops, {"a": a, "b": b, "c": c}, left, right
            )
            return report
        dual_left = ops.meet(x, ops.join(y, z, tol), tol)
        dual_right = ops.join(ops.meet(x, y, tol), ops.meet(x, z, tol), tol)
        if not ops.equal(dual_left, dual_right, tol):
            report = LawReport(
                "triple_distributive",
                False,
                worst_residual=ops.residual(dual_left, dual_right),
            )
            report.counterexample = _counterexample(
                ops, {"a": a, "b": b, "c": c}, dual_left, dual_right
            )
            return report
        worst = max(worst, ops.residual(left, right), ops.residual(dual_left, dual_right))
    return LawReport("triple_distributive", True, trials=6, worst_residual=worst)


def check_covering(p: Ray, a: Subspace, tol: Tolerance = DEFAULT_TOL) -> LawReport:
    """Covering property of atoms: with a meet p = 0, nothing sits
    strictly between a and a join p.

    Quantifying over all intermediate subspaces is out of numerical
    reach, so the check asserts the dimension consequence
    dim(a join p) = dim(a) + 1 and verifies that sampled candidates
    (a itself, a join p, and a joined with perturbed rays of the gap)
    all collapse onto one of the two endpoints.
    """
    ray = p.subspace
    if sub.meet(a, ray, tol).dim != 0:
        raise PreconditionViolated("the atom must intersect a only in zero")
    top = sub.join(a, ray, tol)
    holds = top.dim == a.dim + 1
    candidates = [a, top]
    for k in range(3):
        mix = ray.basis[:, 0] + 0.25 * (k + 1) * (
            a.basis[:, 0] if a.dim else np.zeros(a.ambient_dim)
        )
        candidate = sub.join(a, sub.span_of([mix], tol), tol)
        candidates.append(candidate)
    for b in candidates:
        between = sub.leq(a, b, tol) and sub.leq(b, top, tol)
        if between and not (sub.equal(b, a, tol) or sub.equal(b, top, tol)):
            holds = False
    report = LawReport(
        "covering",
        holds,
        trials=len(candidates),
        detail={"dim_a": a.dim, "dim_join": top.dim},
    )
    if not holds:
        report.counterexample = _counterexample(
            _Ops(a), {"a": a, "p": ray}, a, top
        )
    return report


def is_modular_pair(
    p: Subspace, q: Subspace, samples: int = 20, seed: int = 0, tol: Tolerance = DEFAULT_TOL
) -> LawReport:
    """Check (p join r) meet q = (p meet q) join r for sampled r <= q.

    In finite dimension every pair is modular, so this checker doubles
    as a consistency test of the lattice operations themselves.
    """
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatch("ambient dims differ")
    worst = 0.0
    for trial in range(samples):
        k = trial % (q.dim + 1)
        if k == 0:
            r = sub.zero_subspace(q.ambient_dim)
        else:
            coeffs = np.column_stack(
                [random_vector(q.dim, seed + 7919 * trial + j) for j in range(k)]
            )
            r = sub.span_of(list((q.basis @ coeffs).T), tol)
        left = sub.meet(sub.join(p, r, tol), q, tol)
        right = sub.join(sub.meet(p, q, tol), r, tol)
        worst = max(worst, sub.projector_distance(left, right))
        if not sub.equal(left, right, tol):
            report = LawReport(
                "modular_pair", False, trials=trial + 1, worst_residual=worst
            )
            report.counterexample = _counterexample(
                _Ops(p), {"p": p, "q": q, "r": r}, left, right
            )
            return report
    return LawReport("modular_pair", True, trials=samples, worst_residual=worst)

"""Projection-valued truth assignment for prepared quantum states.

A proposition q gets, against a normalized state psi, the projection
probability <P_q psi, P_q psi> as its truth value: 0 when psi lies in
the complement of q, 1 when psi lies in q, and a genuine probability
in between.  The eigenvector cases collapse to the classifications
"false" and "true"; everything else is "probabilistic".

Unnormalized nonzero states are admitted and normalized first, which
reproduces the generalized normalization of projection probabilities.
The numerical classification thresholds are an artifact of finite
precision, not of the valuation itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Tolerance, as_vector, inner
from .errors import DimensionMismatch, ZeroState
from .subspace import Subspace

__all__ = ["StateVector", "TruthValue", "truth_value"]


@dataclass(frozen=True)
class StateVector:
    """A state vector with a cached normalization flag."""

    vector: np.ndarray
    normalized: bool = False

    def __post_init__(self) -> None:
        v = as_vector(self.vector)
        object.__setattr__(self, "vector", v)
        nrm = float(np.linalg.norm(v))
        object.__setattr__(self, "normalized", abs(nrm - 1.0) < DEFAULT_TOL.eps_prob)

    @classmethod
    def normalize(cls, vector, tol: Tolerance = DEFAULT_TOL) -> "StateVector":
        v = as_vector(vector)
        nrm = float(np.linalg.norm(v))
        if nrm < tol.eps_rank:
            raise ZeroState("cannot normalize a (numerically) zero vector")
        return cls(v / nrm)


@dataclass(frozen=True)
class TruthValue:
    """A number in [0, 1] plus its three-way classification."""

    value: float
    classification: str

    @classmethod
    def classify(cls, value: float, tol: Tolerance = DEFAULT_TOL) -> "TruthValue":
        if value < tol.eps_prob:
            label = "false"
        elif value > 1.0 - tol.eps_prob:
            label = "true"
        else:
            label = "probabilistic"
        return cls(float(value), label)

    def to_json(self) -> dict:
        return {"value": self.value, "classification": self.classification}


def truth_value(psi, q: Subspace, tol: Tolerance = DEFAULT_TOL) -> TruthValue:
    """Projection probability of the state psi onto the proposition q."""
    vec = psi.vector if isinstance(psi, StateVector) else as_vector(psi)
    if vec.shape[0] != q.ambient_dim:
        raise DimensionMismatch("state and proposition dimensions differ")
    nrm = float(np.linalg.norm(vec))
    if nrm < tol.eps_rank:
        raise ZeroState("truth values are undefined for the zero state")
    vec = vec / nrm
    projected = q.projector() @ vec
    value = inner(projected, projected).real
    return TruthValue.classify(min(max(value, 0.0), 1.0), tol)

"""Global Tjurina numbers via graded Milnor-algebra dimensions, the
du Plessis-Wall bounds, and the free / nearly free classification.

The stable value of k -> dim (S / (f_x, f_y, f_z))_k is the global Tjurina
number of a reduced curve; sampling starts at k = 3d-6 and a witness pair of
equal consecutive values is required.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .backend import Backend, make_backend
from .fields import PrimeField, QQ
from .linalg import ExactMatrix, rank_mod_np
from .poly import HomogPoly, monomial_count
from .syzygy import SyzygyTriple, ar_slice, graded_multiplication_matrix, mdr

__all__ = [
    "MilnorProfile",
    "FreenessReport",
    "InconsistencyError",
    "NonStabilizationError",
    "milnor_hilbert",
    "global_tjurina",
    "dpw_bounds",
    "thmF_gate",
    "refine_mdr_candidates",
    "classify",
]


class InconsistencyError(ArithmeticError):
    """A mathematically impossible configuration: wrong inputs or a genuine
    theorem violation.  CLI exit code 2."""


class NonStabilizationError(ArithmeticError):
    """Hilbert samples refused to stabilize (signals non-reduced input)."""

    def __init__(self, samples: dict):
        self.samples = dict(samples)
        super().__init__(
            f"Milnor-algebra Hilbert values did not stabilize: {samples}")


@dataclass(frozen=True)
class MilnorProfile:
    degree: int
    samples: dict
    tau: int
    stabilization_degree: int


@dataclass
class FreenessReport:
    d: int
    mdr: int
    tau: int
    classification: str  # free | nearly-free | neither | cone
    exponents: tuple | None
    certificate: SyzygyTriple | None
    bounds: dict
    backend: str
    primes: list

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "mdr": self.mdr,
            "tau": self.tau,
            "class": self.classification,
            "exponents": list(self.exponents) if self.exponents else None,
            "certificate": (self.certificate.to_json()
                            if self.certificate else None),
            "certificate_field": (self.certificate.field.tag
                                  if self.certificate else None),
            "bounds": self.bounds,
            "backend": self.backend,
            "primes": self.primes,
        }


def milnor_hilbert(f: HomogPoly, k: int) -> int:
    """Exact dimension of the degree-k piece of S/(f_x, f_y, f_z)."""
    if k < 0:
        raise ValueError("negative degree")
    d = f.degree
    r = k - d + 1
    if r < 0:
        return monomial_count(k)
    A = graded_multiplication_matrix(list(f.gradient()), r, k)
    if isinstance(A, np.ndarray):
        rank = rank_mod_np(A, f.field.p)
    else:
        rank = ExactMatrix(f.field, A).rank()
    return monomial_count(k) - rank


def _profile(f: HomogPoly) -> MilnorProfile:
    d = f.degree
    start = max(3 * d - 6, 0)
    stop = 3 * d - 3
    samples: dict = {}

    def get(k):
        if k not in samples:
            samples[k] = milnor_hilbert(f, k)
        return samples[k]

    k = start
    while k <= stop:
        if get(k) == get(k + 1):
            return MilnorProfile(d, dict(samples), samples[k], k)
        k += 1
    raise NonStabilizationError(samples)


def global_tjurina(f: HomogPoly, backend: Backend | None = None) -> MilnorProfile:
    """Stabilized Hilbert value of the Milnor algebra; witness pair required."""
    if f.field == QQ and backend is not None and backend.mode == "modular":
        return backend.vote(_profile, f, what="Tjurina profile")
    return _profile(f)


def dpw_bounds(d: int, r: int):
    """du Plessis-Wall upper bound for tau given r <= mdr: (value, branch)."""
    if not 0 <= r <= d - 1:
        raise ValueError(f"need 0 <= r <= d-1, got r={r}, d={d}")
    if 2 * r <= d - 1:
        return (d - 1) ** 2 - r * (d - 1 - r), "phi1"
    return (d - 1) ** 2 - r * (d - r - 1) - comb(2 * r + 2 - d, 2), "phi2"


def thmF_gate(d: int, r0: int, tau: int) -> str:
    """Whether tau attains the bound (d-1)^2 - r0(d-r0-1): "attained" means
    free with exponents (r0, d-r0-1); above the bound is inconsistent."""
    if r0 < 1:
        raise ValueError("r0 must be >= 1")
    bound = (d - 1) ** 2 - r0 * (d - r0 - 1)
    if tau > bound:
        raise InconsistencyError(
            f"tau={tau} exceeds the bound {bound} for d={d}, r0={r0}: "
            "wrong tau or wrong mdr lower bound")
    return "attained" if tau == bound else "undershoot"


def refine_mdr_candidates(d: int, tau: int, candidates) -> set:
    """Drop every candidate r whose du Plessis-Wall bound is below tau."""
    return {r for r in candidates if dpw_bounds(d, r)[0] >= tau}


def classify(f: HomogPoly, backend: Backend | None = None) -> FreenessReport:
    """Compute r = mdr(f) and tau, then decide free / nearly free / neither /
    cone with exponents and a syzygy certificate."""
    d = f.degree
    if d < 1:
        raise ValueError("f must have positive degree")
    if isinstance(f.field, PrimeField):
        backend_desc = {"backend": "direct", "primes": [f.field.p]}
        r = mdr(f)
        profile = _profile(f)
        cert_input = f
    elif backend is None or backend.mode == "rational":
        backend_desc = {"backend": "rational", "primes": []}
        r = mdr(f)
        profile = _profile(f)
        cert_input = f
    else:
        backend_desc = backend.describe()
        r = backend.vote(mdr, f, what="mdr")
        profile = backend.vote(_profile, f, what="Tjurina profile")
        cert_input = f.map_field(backend.fields[0])
    tau = profile.tau

    certificate = None
    slice_r = ar_slice(cert_input, r)
    if slice_r.dimension > 0:
        certificate = slice_r.basis[0]

    if r == 0:
        classification = "cone"
        exponents = None
    elif 2 * r <= d - 1 and tau == (d - 1) ** 2 - r * (d - 1 - r):
        classification = "free"
        exponents = (r, d - 1 - r)
    elif 2 * r <= d and tau == (d - 1) ** 2 - r * (d - r - 1) - 1:
        classification = "nearly-free"
        exponents = (r, d - r)
    else:
        classification = "neither"
        exponents = None

    bound, branch = dpw_bounds(d, r)
    if tau > bound:
        raise InconsistencyError(
            f"tau={tau} violates the du Plessis-Wall bound {bound} "
            f"({branch}) at d={d}, r={r}")
    bounds = {
        "phi1": (d - 1) ** 2 - r * (d - 1 - r),
        "phi2": ((d - 1) ** 2 - r * (d - r - 1) - comb(2 * r + 2 - d, 2)
                 if 2 * r + 2 - d >= 0 else None),
        "active": branch,
        "value": bound,
    }
    return FreenessReport(
        d=d,
        mdr=r,
        tau=tau,
        classification=classification,
        exponents=exponents,
        certificate=certificate,
        bounds=bounds,
        backend=backend_desc["backend"],
        primes=backend_desc["primes"],
    )

"""Computation backends for rational inputs.

The default path reduces a rational input modulo three independent random
primes > 2^30, runs each computation in every GF(p), and cross-checks the
results; any disagreement aborts with a diagnostic.  A rational exact mode is
available for small degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import Field, PrimeField, QQ, random_primes

__all__ = ["Backend", "BackendDisagreement", "make_backend"]

DEFAULT_PRIME_COUNT = 3


class BackendDisagreement(ArithmeticError):
    """The random primes voted differently; the probabilistic path is
    self-policing and refuses to return an answer."""


@dataclass
class Backend:
    mode: str  # "modular" | "rational"
    primes: list = dc_field(default_factory=list)
    seed: int | None = None

    def __post_init__(self):
        if self.mode == "modular":
            self.fields = [PrimeField(p) for p in self.primes]
        elif self.mode == "rational":
            self.fields = [QQ]
        else:
            raise ValueError(f"unknown backend mode {self.mode!r}")

    def reduce(self, f):
        """Images of a rational polynomial in every backend field."""
        return [f.map_field(F) for F in self.fields]

    def vote(self, fn, f, what="value"):
        """Apply ``fn`` to each reduction of ``f``; all answers must agree."""
        answers = [fn(fp) for fp in self.reduce(f)]
        first = answers[0]
        for F, a in zip(self.fields, answers[1:]):
            if a != first:
                raise BackendDisagreement(
                    f"backend disagreement on {what}: "
                    f"{list(zip([F.tag for F in self.fields], answers))}")
        return first

    def describe(self):
        return {"backend": self.mode, "primes": list(self.primes)}


def make_backend(mode: str = "modular",
                 primes: int | list = DEFAULT_PRIME_COUNT,
                 seed: int | None = None) -> Backend:
    if mode == "rational":
        return Backend("rational", [], seed)
    if isinstance(primes, int):
        primes = random_primes(primes, seed=seed)
    return Backend("modular", list(primes), seed)

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..ideals import Ideal
from ..local import LocalIdeal


@dataclass(frozen=True)
class Options:
    seed: int = 0
    samples: int = 8
    n_max: int = 50
    mc: int = 25
    height: int = 1000
    buffer: int = 1
    retries: int = 5
    degree_cap: int | None = None

    def rng(self, label: str, index: int = 0) -> random.Random:
        """Independent substream for (seed, label, index); order of use never matters."""
        return random.Random(f"{self.seed}:{label}:{index}")


@dataclass
class ReductionSample:
    """A sampled general minimal reduction J = [f_1..f_n] * X of I."""

    I: Ideal
    matrix: list[list[int]]
    J: Ideal
    r_J: int
    label: str = ""
    index: int = 0
    attempts: int = 1
    colons: dict[int, LocalIdeal] = field(default_factory=dict, repr=False)

    @property
    def provenance(self) -> str:
        return f"{self.label}:{self.index}"


@dataclass
class CoreResult:
    core: LocalIdeal
    n_used: int
    J_used: ReductionSample
    stabilized: bool
    cross_validated: bool
    characteristic_guard: bool

    @property
    def certified(self) -> bool:
        return self.stabilized and self.cross_validated

    @property
    def label(self) -> str:
        return "core (certified)" if self.certified else "core (formula value)"


@dataclass
class BalanceVerdict:
    n: int
    independent: bool
    witness: tuple[int, int] | None = None


@dataclass
class BalanceReport:
    ell: int
    g: int
    r_hat: int
    r_samples: list[int]
    verdicts: list[BalanceVerdict]
    min_balanced_index: int | None
    expected_index: int
    gr_cm: str
    dim: int
    theorem_verdict: str
    monotone: bool
    r_constant: bool
    characteristic_guard: bool
    notes: list[str] = field(default_factory=list)

    def verdict_at(self, n: int) -> bool | None:
        for v in self.verdicts:
            if v.n == n:
                return v.independent
        return None

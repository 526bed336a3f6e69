"""Innovation distributions with unit variance: cumulants up to order 8 and sampling."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["InnovationModel", "RngHandle", "cumulant", "sample", "parse_dist"]

MAX_ORDER = 8


@dataclass(frozen=True)
class RngHandle:
    """A reproducible random stream.

    Stream ``i`` of ``seed`` is seeded by ``SeedSequence(seed, spawn_key=(i,))``,
    so replicates drawn from distinct streams are independent and do not
    depend on the order (or thread) in which they run.
    """

    seed: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.stream < 0:
            raise ValueError("stream must be nonnegative")

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        return np.random.Generator(np.random.PCG64(ss))

    def substream(self, i: int) -> "RngHandle":
        # nested replicate streams: fold the parent stream into the key
        return RngHandle(self.seed, self.stream * 1_000_003 + i + 1)


@dataclass(frozen=True)
class InnovationModel:
    """Standard normal or Student-t scaled to unit variance.

    ``kind`` is ``"standard_normal"`` or ``"scaled_student_t"``; the latter
    needs ``nu > 8`` so that the eighth cumulant is finite.
    """

    kind: str = "standard_normal"
    nu: float | None = None

    def __post_init__(self):
        if self.kind == "standard_normal":
            if self.nu is not None:
                raise ValueError("nu is only meaningful for scaled_student_t")
        elif self.kind == "scaled_student_t":
            if self.nu is None or not self.nu > 8:
                raise ValueError("scaled_student_t needs nu > 8 (kappa_8 must exist)")
        else:
            raise ValueError(f"unknown innovation kind {self.kind!r}")

    @classmethod
    def normal(cls) -> "InnovationModel":
        return cls("standard_normal")

    @classmethod
    def student_t(cls, nu: float) -> "InnovationModel":
        return cls("scaled_student_t", float(nu))

    @property
    def label(self) -> str:
        if self.kind == "standard_normal":
            return "normal"
        nu = self.nu
        return f"t{int(nu)}" if float(nu).is_integer() else f"t:{nu}"

    def cumulant(self, p: int) -> float:
        return cumulant(self, p)

    def cumulants(self) -> np.ndarray:
        """``kappa[p]`` for ``p = 0..8`` (``kappa[0]`` is unused and 0)."""
        out = np.zeros(MAX_ORDER + 1)
        for p in range(1, MAX_ORDER + 1):
            out[p] = cumulant(self, p)
        return out

    def sample(self, rng, count: int) -> np.ndarray:
        return sample(self, rng, count)


def cumulant(model: InnovationModel, p: int) -> float:
    if not isinstance(p, (int, np.integer)) or not 1 <= p <= MAX_ORDER:
        raise ValueError(f"cumulant order must be in 1..{MAX_ORDER}, got {p!r}")
    if p == 2:
        return 1.0
    if p % 2 or model.kind == "standard_normal":
        return 0.0
    nu = model.nu
    if p == 4:
        return 6.0 / (nu - 4.0)
    if p == 6:
        return 240.0 / ((nu - 4.0) * (nu - 6.0))
    return 5040.0 * (5.0 * nu - 22.0) / ((nu - 4.0) ** 2 * (nu - 6.0) * (nu - 8.0))


def draw(model: InnovationModel, gen: np.random.Generator, size) -> np.ndarray:
    """Draw from an existing generator (used by the simulators)."""
    if model.kind == "standard_normal":
        return gen.standard_normal(size)
    nu = model.nu
    z = gen.standard_normal(size)
    v = gen.chisquare(nu, size)
    return z / np.sqrt(v / nu) * np.sqrt((nu - 2.0) / nu)


def sample(model: InnovationModel, rng: RngHandle | np.random.Generator, count: int) -> np.ndarray:
    """``count`` i.i.d. innovations, deterministic given ``(seed, stream)``."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    gen = rng.generator() if isinstance(rng, RngHandle) else rng
    return draw(model, gen, count)


def parse_dist(text: str) -> InnovationModel:
    """``normal``, ``t9``, ``t14`` or ``t:<nu>``."""
    s = text.strip().lower()
    if s in ("normal", "n01", "gaussian"):
        return InnovationModel.normal()
    if s.startswith("t:"):
        return InnovationModel.student_t(float(s[2:]))
    if s.startswith("t") and s[1:].isdigit():
        return InnovationModel.student_t(float(s[1:]))
    raise ValueError(f"unknown distribution {text!r}; use normal, t9, t14 or t:<nu>")

"""Monte-Carlo carries chain: add columns of uniformly random base-b digits.

Randomness comes from xoshiro256** whose four state words are filled by
splitmix64 from the 64-bit seed.  A digit is ``x % b`` for the first raw output
``x`` with ``x >= 2**64 % b`` (rejection, so no modulo bias).  The kernel is the
compiled ``_ckernel`` extension when it is importable, otherwise the
bit-identical ``_pykernel``; :data:`BACKEND` names the one in use.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, TextIO

from . import _pykernel
from .errors import DomainError
from .exact import RatMatrix

try:
    from . import _ckernel as _kernel
    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    _kernel = _pykernel
    BACKEND = "python"

KERNELS = {"python": _pykernel}
if BACKEND == "cython":
    KERNELS["cython"] = _kernel

SEED_LIMIT = 1 << 64


@dataclass(frozen=True)
class SimulationConfig:
    base: int
    addends: int
    columns: int
    seed: int = 0

    def __post_init__(self):
        for name in ("base", "addends", "columns", "seed"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise DomainError(f"{name} must be an integer, got {v!r}")
        if self.base < 2:
            raise DomainError(f"base must be >= 2, got {self.base}")
        if self.addends < 2:
            raise DomainError(f"addends must be >= 2, got {self.addends}")
        if self.columns < 1:
            raise DomainError(f"columns must be >= 1, got {self.columns}")
        if not 0 <= self.seed < SEED_LIMIT:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class CarrySequence:
    carries: tuple[int, ...]
    config: SimulationConfig

    def __post_init__(self):
        object.__setattr__(self, "carries", tuple(self.carries))
        if not self.carries:
            raise DomainError("a carry sequence holds at least kappa_0")
        if self.carries[0] != 0:
            raise DomainError("kappa_0 must be 0")
        m = self.config.addends
        bad = next((c for c in self.carries if not 0 <= c < m), None)
        if bad is not None:
            raise DomainError(f"carry {bad} outside 0..{m - 1}")

    def __len__(self) -> int:
        return len(self.carries)

    def to_dict(self) -> dict:
        return {"config": asdict(self.config), "carries": list(self.carries)}

    @classmethod
    def from_dict(cls, data: dict) -> CarrySequence:
        return cls(tuple(data["carries"]), SimulationConfig(**data["config"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> CarrySequence:
        return cls.from_dict(json.loads(text))


def write_stream(seq: CarrySequence, out: TextIO) -> None:
    """Header line with the config as JSON, then one carry per line."""
    out.write(json.dumps(asdict(seq.config), separators=(",", ":")) + "\n")
    for c in seq.carries:
        out.write(f"{c}\n")


def read_stream(lines: Iterable[str]) -> CarrySequence:
    it = iter(lines)
    header = json.loads(next(it))
    carries = tuple(int(line) for line in it if line.strip())
    return CarrySequence(carries, SimulationConfig(**header))


def simulate(config: SimulationConfig, kernel=None) -> CarrySequence:
    kernel = _kernel if kernel is None else kernel
    carries = kernel.simulate_carries(config.base, config.addends, config.columns, config.seed)
    return CarrySequence(tuple(carries), config)


def simulate_many(configs: list[SimulationConfig], jobs: int = 1) -> list[CarrySequence]:
    """Independent runs, returned in input order. The compiled kernel releases
    the GIL, so threads give real parallelism there."""
    if jobs <= 1 or len(configs) <= 1:
        return [simulate(c) for c in configs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(simulate, configs))


@dataclass(frozen=True)
class EmpiricalTransition:
    matrix: RatMatrix
    counts: tuple[tuple[int, ...], ...]
    # rows whose state was never left, emitted as all zeros
    unvisited: tuple[int, ...]


def empirical_transition(seq: CarrySequence) -> EmpiricalTransition:
    if len(seq) < 2:
        raise DomainError("need at least one transition")
    m = seq.config.addends
    counts = _kernel.count_transitions(list(seq.carries), m)
    entries = []
    unvisited = []
    for i, row in enumerate(counts):
        total = sum(row)
        if total == 0:
            unvisited.append(i)
            entries.extend([0] * m)
        else:
            entries.extend(Fraction(c, total) for c in row)
    return EmpiricalTransition(RatMatrix(m, m, entries),
                               tuple(tuple(r) for r in counts), tuple(unvisited))


def occupation_distribution(seq: CarrySequence) -> list[Fraction]:
    """Fraction of kappa_1..kappa_C spent at each carry. All zero if C = 0."""
    m = seq.config.addends
    steps = seq.carries[1:]
    counts = [0] * m
    for c in steps:
        counts[c] += 1
    if not steps:
        return [Fraction(0)] * m
    return [Fraction(c, len(steps)) for c in counts]

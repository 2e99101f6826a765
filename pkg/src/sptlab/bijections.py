"""The transformation tau, its inverse sigma, and the bijection Delta.

Delta sends a marked partition ``(mu, k)`` to a doubly marked partition by
starting from ``(mu', 1, k)`` and applying tau until the result is doubly
marked.  Lambda walks the same orbit backwards with sigma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .doubly_marked import (
    ColumnMarkedPartition,
    Kind,
    classify,
    in_U,
    spt_crank_dmp,
)
from .errors import DomainError, InvariantViolation
from .partitions import (
    conjugate,
    conjugate_part,
    durfee_side,
    part,
    partitions_of,
    smallest_part,
    strip_zeros,
)
from .spt import MarkedPartition, enumerate_marked


@dataclass(frozen=True)
class OrbitTrace:
    steps: tuple  # ColumnMarkedPartition, seed first

    @property
    def step_count(self) -> int:
        return len(self.steps) - 1

    def to_json(self) -> dict:
        return {"steps": [x.to_json() for x in self.steps]}


def in_W(x: ColumnMarkedPartition) -> bool:
    mu, a, b = x
    if not in_U(mu, a, b):
        return False
    if a != 1:
        return True
    return conjugate_part(mu, b) > smallest_part(conjugate(mu))


def tau(x: ColumnMarkedPartition) -> ColumnMarkedPartition:
    if classify(*x) is not Kind.U_ONLY:
        raise DomainError(f"tau is defined on U_n minus Q_n; {x} is {classify(*x).value}")
    lam, s, t = x
    height = conjugate_part(lam, s)
    p = s
    while conjugate_part(lam, p + 1) == height:
        p += 1
    cut = p - s + 1
    delta = strip_zeros(tuple(v - cut for v in lam[:height]) + lam[height:])
    a = 1
    while part(delta, a) >= height:
        a += 1
    mu = delta[: a - 1] + (height,) * cut + delta[a - 1 :]
    b = t if t < s else t - p + s - 1
    return ColumnMarkedPartition(mu, a, b)


def sigma(x: ColumnMarkedPartition) -> ColumnMarkedPartition:
    if not in_W(x):
        raise DomainError(f"sigma is defined on W_n; {x} is not in W_n")
    mu, a, b = x
    size = mu[a - 1]
    r = a
    while part(mu, r + 1) == size:
        r += 1
    gamma = mu[: a - 1] + mu[r:]
    s = 1
    while conjugate_part(gamma, s) >= size:
        s += 1
    extra = r - a + 1
    rows = max(size, len(gamma))
    lam = tuple(part(gamma, i) + (extra if i <= size else 0) for i in range(1, rows + 1))
    lam = tuple(v for v in lam if v)
    t = b if b < s else b + extra
    out = ColumnMarkedPartition(lam, s, t)
    if classify(*out) is not Kind.U_ONLY:
        raise InvariantViolation(f"sigma{tuple(x)} = {out} is not in U_n minus Q_n")
    return out


@lru_cache(maxsize=None)
def orbit_cap(n: int) -> int:
    """An upper bound on |U_n|, plus one: the longest orbit Delta can walk."""
    return sum(durfee_side(lam) * lam[0] for lam in partitions_of(n)) + 1


def delta_with_trace(mp: MarkedPartition) -> tuple[ColumnMarkedPartition, OrbitTrace]:
    if not mp.is_valid():
        raise DomainError(f"{tuple(mp)} is not a marked partition")
    mu, k = mp
    x = ColumnMarkedPartition(conjugate(mu), 1, k)
    steps = [x]
    cap = orbit_cap(sum(mu))
    while classify(*x) is Kind.U_ONLY:
        if len(steps) > cap:
            raise InvariantViolation(f"Delta orbit of {tuple(mp)} exceeded {cap} steps")
        x = tau(x)
        steps.append(x)
    if classify(*x) is not Kind.DOUBLY_MARKED:
        raise InvariantViolation(f"Delta orbit of {tuple(mp)} left U_n at {x}")
    return x, OrbitTrace(tuple(steps))


def delta(mp: MarkedPartition) -> ColumnMarkedPartition:
    return delta_with_trace(mp)[0]


def lambda_with_trace(x: ColumnMarkedPartition) -> tuple[MarkedPartition, OrbitTrace]:
    """Inverse of Delta; the trace runs from ``x`` back to the seed."""
    if classify(*x) is not Kind.DOUBLY_MARKED:
        raise DomainError(f"{x} is not a doubly marked partition")
    steps = [x]
    cap = orbit_cap(sum(x.parts))
    while in_W(x):
        if len(steps) > cap:
            raise InvariantViolation(f"Lambda orbit of {x} exceeded {cap} steps")
        x = sigma(x)
        steps.append(x)
    lam, s, t = x
    mu = conjugate(lam)
    result = MarkedPartition(mu, t)
    if s != 1 or not result.is_valid():
        raise InvariantViolation(f"Lambda orbit stopped at {x}, which is not a seed")
    return result, OrbitTrace(tuple(steps))


def lambda_inv(x: ColumnMarkedPartition) -> MarkedPartition:
    return lambda_with_trace(x)[0]


@dataclass(frozen=True)
class ClassEntry:
    marked: MarkedPartition
    dmp: ColumnMarkedPartition
    crank: int

    def to_json(self) -> dict:
        return {"marked": self.marked.to_json(), "dmp": self.dmp.to_json(), "crank": self.crank}


@dataclass(frozen=True)
class CrankClassReport:
    n: int
    modulus: int
    classes: dict = field(default_factory=dict)  # residue -> list[ClassEntry]

    @property
    def sizes(self) -> list:
        return [len(self.classes[r]) for r in range(self.modulus)]

    @property
    def equinumerous(self) -> bool:
        return len(set(self.sizes)) == 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "modulus": self.modulus,
            "classes": {str(r): [e.to_json() for e in self.classes[r]] for r in range(self.modulus)},
        }


def crank_entries(n: int) -> list:
    """Every marked partition of ``n`` with its Delta image and spt-crank."""
    out = []
    for mp in enumerate_marked(n):
        x = delta(mp)
        out.append(ClassEntry(mp, x, spt_crank_dmp(x)))
    return out


def crank_classes(n: int, t: int) -> CrankClassReport:
    if n < 1:
        raise DomainError("crank classes need n >= 1")
    if t < 1:
        raise DomainError(f"modulus must be positive, got {t}")
    classes = {r: [] for r in range(t)}
    for entry in crank_entries(n):
        classes[entry.crank % t].append(entry)
    return CrankClassReport(n, t, classes)

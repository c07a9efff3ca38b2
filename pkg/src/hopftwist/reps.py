"""Left H-modules given by action matrices, and their characters."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cyclo import ZERO, CycNumber, cyc
from .errors import DimensionMismatch, InvalidRepresentation
from .linalg import Matrix
from .structures import Check, HopfAlgebra, VerificationReport


class Representation:
    """A left module: ``action[i]`` is the matrix of basis element ``b_i``."""

    def __init__(self, algebra: HopfAlgebra, name: str, dim_v: int, action):
        self.algebra = algebra
        self.name = name
        self.dim = int(dim_v)
        self.action = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in action)
        if len(self.action) != algebra.dim:
            raise DimensionMismatch(
                f"{len(self.action)} action matrices for an algebra of dim {algebra.dim}"
            )
        if any(m.shape != (self.dim, self.dim) for m in self.action):
            raise DimensionMismatch(f"action matrices must be {self.dim} x {self.dim}")
        self._verified = None

    def __repr__(self):
        return f"Representation({self.name!r}, dim={self.dim}, algebra={self.algebra.name!r})"

    def rho(self, h) -> Matrix:
        """Action matrix of an arbitrary element ``h`` of the algebra."""
        if len(h) != self.algebra.dim:
            raise DimensionMismatch("element length does not match the algebra")
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for c, m in zip(h, self.action):
            if not c:
                continue
            for i, row in enumerate(m.rows):
                out = rows[i]
                for j, x in enumerate(row):
                    if x:
                        out[j] = out[j] + c * x
        return Matrix._wrap(rows, self.dim)

    def is_verified(self) -> bool:
        if self._verified is None:
            self._verified = verify_representation(self).ok
        return self._verified


@dataclass(frozen=True)
class Character:
    """Values chi(b_i) = trace(rho(b_i)) on the basis."""

    values: tuple[CycNumber, ...]

    def __call__(self, h) -> CycNumber:
        acc = ZERO
        for c, v in zip(h, self.values):
            if c and v:
                acc = acc + c * v
        return acc

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


def verify_representation(rep: Representation) -> VerificationReport:
    """Check rho(1) = Id and rho(b_i) rho(b_j) = rho(b_i b_j) for all pairs."""
    H = rep.algebra
    unit_ok = rep.rho(H.unit).is_identity()
    checks = [Check("unit", unit_ok)]
    bad = None
    for i, j in itertools.product(range(H.dim), range(H.dim)):
        if rep.action[i] @ rep.action[j] != rep.rho(H.mult[i][j]):
            bad = (i, j)
            break
    checks.append(Check("multiplicative", bad is None, bad))
    report = VerificationReport(f"module {rep.name}", tuple(checks))
    rep._verified = report.ok
    return report


def ensure_representation(rep: Representation) -> Representation:
    if not rep.is_verified():
        raise InvalidRepresentation(verify_representation(rep))
    return rep


def character(rep: Representation) -> Character:
    return Character(tuple(m.trace() for m in rep.action))


def regular_representation(H: HopfAlgebra) -> Representation:
    """rho(b_i) = left multiplication by b_i."""
    n = H.dim
    mats = [Matrix.from_columns([H.mult[i][j] for j in range(n)]) for i in range(n)]
    return Representation(H, "regular", n, mats)


def one_dimensional(H: HopfAlgebra, values, name: str = "chi") -> Representation:
    return Representation(H, name, 1, [Matrix._wrap([[cyc(v)]]) for v in values])


def trivial_representation(H: HopfAlgebra) -> Representation:
    """The module given by the counit."""
    return one_dimensional(H, H.counit_values, "trivial")

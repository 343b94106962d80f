"""Exact feasibility and linear optimization over mixed linear systems.

A :class:`MixedSystem` holds rows ``<normal, x> REL rhs`` with ``REL`` one of
``EQ, LE, LT, GE, GT``.  :func:`decide` returns either a witness point that
satisfies every row (strict rows strictly) or a :class:`FarkasCertificate`:
multipliers ``y`` with ``y >= 0`` on LE/LT rows, ``y <= 0`` on GE/GT rows,
``sum y_i normal_i = 0`` and either ``sum y_i rhs_i < 0`` or
``sum y_i rhs_i = 0`` with a nonzero multiplier on some strict row.

Strict rows are removed by homogenization: with an extra variable ``t >= 1``
every row becomes ``<normal, x> - t*rhs <= 0`` (or ``<= -1`` when strict,
after orienting GE/GT rows as LE/LT).  The weak system in ``(x, t)`` is then
settled by a Phase-I simplex run on its Farkas alternative; whichever side
is feasible, the other side is read off the final dual values.

Every result is checked exactly before it is returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import CertificateError, DimensionMismatch
from .exactla import ONE, ZERO, Vector, dot, is_zero, parse_rational, vector, zeros


class Rel(str, enum.Enum):
    EQ = "EQ"
    LE = "LE"
    LT = "LT"
    GE = "GE"
    GT = "GT"

    @property
    def strict(self) -> bool:
        return self in (Rel.LT, Rel.GT)

    def holds(self, lhs, rhs) -> bool:
        if self is Rel.EQ:
            return lhs == rhs
        if self is Rel.LE:
            return lhs <= rhs
        if self is Rel.LT:
            return lhs < rhs
        if self is Rel.GE:
            return lhs >= rhs
        return lhs > rhs


@dataclass(frozen=True)
class Constraint:
    normal: Vector
    rel: Rel
    rhs: Fraction

    def holds_at(self, x: Sequence) -> bool:
        return self.rel.holds(dot(self.normal, x), self.rhs)


@dataclass(frozen=True)
class MixedSystem:
    n: int
    rows: tuple = ()

    def __post_init__(self):
        for c in self.rows:
            if len(c.normal) != self.n:
                raise DimensionMismatch(
                    f"constraint normal has length {len(c.normal)}, ambient dimension is {self.n}"
                )

    @classmethod
    def build(cls, n: int, rows: Iterable) -> "MixedSystem":
        """Build from ``(normal, rel, rhs)`` triples with loosely typed entries."""
        out = []
        for normal, rel, rhs in rows:
            out.append(Constraint(vector(normal), Rel(rel), parse_rational(rhs)))
        return cls(n, tuple(out))

    def __add__(self, other: "MixedSystem") -> "MixedSystem":
        if other.n != self.n:
            raise DimensionMismatch("cannot join systems of different dimension")
        return MixedSystem(self.n, self.rows + other.rows)

    def satisfied_by(self, x: Sequence) -> bool:
        if len(x) != self.n:
            raise DimensionMismatch("point has the wrong length")
        return all(c.holds_at(x) for c in self.rows)

    @property
    def has_strict(self) -> bool:
        return any(c.rel.strict for c in self.rows)


STRICTLY_NEGATIVE = "strictly-negative"
ZERO_WITH_STRICT_SUPPORT = "zero-with-strict-support"


@dataclass(frozen=True)
class FarkasCertificate:
    multipliers: Vector
    flag: str

    def check(self, system: MixedSystem) -> bool:
        y = self.multipliers
        if len(y) != len(system.rows):
            return False
        for yi, c in zip(y, system.rows):
            if c.rel in (Rel.LE, Rel.LT) and yi < 0:
                return False
            if c.rel in (Rel.GE, Rel.GT) and yi > 0:
                return False
        combo = [ZERO] * system.n
        for yi, c in zip(y, system.rows):
            if yi:
                for j, v in enumerate(c.normal):
                    combo[j] += yi * v
        if any(combo):
            return False
        value = sum((yi * c.rhs for yi, c in zip(y, system.rows)), ZERO)
        if self.flag == STRICTLY_NEGATIVE:
            return value < 0
        if self.flag == ZERO_WITH_STRICT_SUPPORT:
            return value == 0 and any(yi != 0 and c.rel.strict for yi, c in zip(y, system.rows))
        return False


@dataclass(frozen=True)
class Feasible:
    witness: Vector
    feasible = True


@dataclass(frozen=True)
class Infeasible:
    certificate: FarkasCertificate
    feasible = False


@dataclass(frozen=True)
class Optimal:
    point: Vector
    value: Fraction


@dataclass(frozen=True)
class Unbounded:
    point: Vector
    ray: Vector


Decision = Union[Feasible, Infeasible]
LpOutcome = Union[Optimal, Unbounded, Infeasible]


# -- simplex engine ---------------------------------------------------------


class _Tableau:
    """Dense simplex tableau for ``A z = b, z >= 0`` with Bland's rule.

    Columns ``0..q-1`` are structural, ``q..q+p-1`` artificial.  ``obj``
    holds reduced profits for a maximization; the last entry is minus the
    current objective value.
    """

    def __init__(self, A: Sequence[Sequence], b: Sequence, q: int):
        p = len(A)
        self.p, self.q = p, q
        self.sigma = [1 if bi >= 0 else -1 for bi in b]
        width = q + p + 1
        rows = []
        for i, (row, bi) in enumerate(zip(A, b)):
            s = self.sigma[i]
            r = [Fraction(s * v) for v in row]
            r.extend(ONE if k == i else ZERO for k in range(p))
            r.append(Fraction(s * bi))
            rows.append(r)
        self.rows = rows
        self.basis = list(range(q, q + p))
        self.allowed = [True] * (q + p)
        # phase one: maximize -(sum of artificials)
        obj = [ZERO] * width
        for r in rows:
            for j in range(q):
                if r[j]:
                    obj[j] += r[j]
            obj[-1] += r[-1]
        self.obj = obj

    def pivot(self, i: int, j: int):
        row = self.rows[i]
        piv = row[j]
        if piv != 1:
            row = [v / piv for v in row]
            self.rows[i] = row
        nz = [k for k, v in enumerate(row) if v]
        for k, other in enumerate(self.rows):
            if k != i:
                f = other[j]
                if f:
                    for c in nz:
                        other[c] -= f * row[c]
        f = self.obj[j]
        if f:
            for c in nz:
                self.obj[c] -= f * row[c]
        self.basis[i] = j

    def run(self) -> Optional[int]:
        """Pivot to optimality; return an unbounded entering column or ``None``."""
        obj = self.obj
        while True:
            j = next((c for c in range(len(obj) - 1) if self.allowed[c] and obj[c] > 0), None)
            if j is None:
                return None
            best = None
            for i, r in enumerate(self.rows):
                a = r[j]
                if a > 0:
                    ratio = r[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return j
            self.pivot(best[1], j)

    def value(self) -> Fraction:
        return -self.obj[-1]

    def primal(self) -> list:
        z = [ZERO] * (self.q + self.p)
        for i, col in enumerate(self.basis):
            z[col] = self.rows[i][-1]
        return z

    def phase_one_dual(self) -> list:
        """Multipliers ``rho`` on the original rows with ``rho A <= 0`` and ``rho b > 0``."""
        q = self.q
        return [self.sigma[i] * (ONE + self.obj[q + i]) for i in range(self.p)]

    def drop_artificials(self):
        q = self.q
        for i in range(len(self.rows) - 1, -1, -1):
            if self.basis[i] < q:
                continue
            j = next((c for c in range(q) if self.rows[i][c] != 0), None)
            if j is None:
                del self.rows[i]
                del self.basis[i]
            else:
                self.pivot(i, j)
        for c in range(q, q + self.p):
            self.allowed[c] = False

    def set_objective(self, c: Sequence):
        width = self.q + self.p + 1
        obj = [ZERO] * width
        for j in range(self.q):
            obj[j] = Fraction(c[j])
        for i, col in enumerate(self.basis):
            cb = c[col] if col < self.q else ZERO
            if cb:
                r = self.rows[i]
                for k in range(width):
                    if r[k]:
                        obj[k] -= cb * r[k]
        for k in range(self.q, self.q + self.p):
            obj[k] = ZERO
        self.obj = obj


def _standard_lp(A, b, q, c=None):
    """Solve ``max c.z`` over ``A z = b, z >= 0`` (feasibility only when ``c`` is None).

    Returns ``("infeasible", rho)``, ``("feasible", z)``, ``("optimal", z, value)``
    or ``("unbounded", z, ray)``.
    """
    T = _Tableau(A, b, q)
    T.run()
    if T.value() != 0:
        return ("infeasible", T.phase_one_dual())
    if c is None:
        return ("feasible", T.primal()[:q])
    T.drop_artificials()
    T.set_objective(c)
    j = T.run()
    z = T.primal()[:q]
    if j is not None:
        ray = [ZERO] * q
        ray[j] = ONE
        for i, col in enumerate(T.basis):
            if col < q:
                ray[col] = -T.rows[i][j]
        return ("unbounded", z, ray)
    return ("optimal", z, T.value())


# -- decide -----------------------------------------------------------------


def _homogenized_rows(system: MixedSystem):
    """Rows ``(coeffs over (x, t), rhs, source index, sign)`` of the weak system.

    ``sign`` converts the nonnegative multiplier of the row back to the
    multiplier of the source constraint.
    """
    n = system.n
    rows = [(zeros(n) + (-ONE,), -ONE, None, 0)]
    for idx, c in enumerate(system.rows):
        up = c.normal + (-c.rhs,)
        down = tuple(-v for v in up)
        if c.rel is Rel.EQ:
            rows.append((up, ZERO, idx, 1))
            rows.append((down, ZERO, idx, -1))
        elif c.rel is Rel.LE:
            rows.append((up, ZERO, idx, 1))
        elif c.rel is Rel.LT:
            rows.append((up, -ONE, idx, 1))
        elif c.rel is Rel.GE:
            rows.append((down, ZERO, idx, -1))
        else:
            rows.append((down, -ONE, idx, -1))
    return rows


def decide(system: MixedSystem) -> Decision:
    """Return a witness of feasibility or a Farkas-type certificate of infeasibility."""
    n = system.n
    if not system.rows:
        return Feasible(zeros(n))
    rows = _homogenized_rows(system)
    N = len(rows)
    # alternative: ytilde >= 0, ytilde * Atilde = 0, <ytilde, atilde> = -1
    A = [[rows[k][0][r] for k in range(N)] for r in range(n + 1)]
    A.append([rows[k][1] for k in range(N)])
    b = [ZERO] * (n + 1) + [-ONE]
    status, payload = _standard_lp(A, b, N)
    if status == "infeasible":
        rho = payload
        scale = -rho[-1]
        if scale <= 0:
            raise CertificateError("phase-one dual does not separate")
        z = [v / scale for v in rho[: n + 1]]
        t = z[-1]
        witness = tuple(v / t for v in z[:n])
        if not system.satisfied_by(witness):
            raise CertificateError("recovered witness violates the system")
        return Feasible(witness)
    ytilde = payload
    y = [ZERO] * len(system.rows)
    for k, (_, _, idx, s) in enumerate(rows):
        if idx is not None and ytilde[k]:
            y[idx] += s * ytilde[k]
    value = sum((yi * c.rhs for yi, c in zip(y, system.rows)), ZERO)
    flag = STRICTLY_NEGATIVE if value < 0 else ZERO_WITH_STRICT_SUPPORT
    cert = FarkasCertificate(tuple(y), flag)
    if not cert.check(system):
        raise CertificateError("extracted certificate fails verification")
    return Infeasible(cert)


def is_feasible(system: MixedSystem) -> bool:
    return decide(system).feasible


def witness(system: MixedSystem) -> Optional[Vector]:
    out = decide(system)
    return out.witness if out.feasible else None


# -- optimize ---------------------------------------------------------------


def optimize(objective: Sequence, system: MixedSystem) -> LpOutcome:
    """Maximize ``<objective, x>`` over a system of EQ/LE/GE rows."""
    n = system.n
    c = vector(objective)
    if len(c) != n:
        raise DimensionMismatch("objective has the wrong length")
    if system.has_strict:
        raise ValueError("optimize accepts only EQ, LE and GE rows")
    slack_of = {}
    for idx, con in enumerate(system.rows):
        if con.rel is not Rel.EQ:
            slack_of[idx] = 2 * n + len(slack_of)
    q = 2 * n + len(slack_of)
    A, b = [], []
    for idx, con in enumerate(system.rows):
        row = [ZERO] * q
        for j, v in enumerate(con.normal):
            row[j] = v
            row[n + j] = -v
        if idx in slack_of:
            row[slack_of[idx]] = ONE if con.rel is Rel.LE else -ONE
        A.append(row)
        b.append(con.rhs)
    cost = list(c) + [-v for v in c] + [ZERO] * len(slack_of)
    if not A:
        if is_zero(c):
            return Optimal(zeros(n), ZERO)
        return Unbounded(zeros(n), c)
    result = _standard_lp(A, b, q, cost)
    if result[0] == "infeasible":
        out = decide(system)
        if out.feasible:
            raise CertificateError("simplex and decide disagree on feasibility")
        return out
    z = result[1]
    x = tuple(z[j] - z[n + j] for j in range(n))
    if not system.satisfied_by(x):
        raise CertificateError("optimal point violates the system")
    if result[0] == "unbounded":
        r = result[2]
        ray = tuple(r[j] - r[n + j] for j in range(n))
        if not _is_recession_direction(system, ray) or dot(c, ray) <= 0:
            raise CertificateError("unbounded ray fails verification")
        return Unbounded(x, ray)
    value = result[2]
    if dot(c, x) != value:
        raise CertificateError("objective value mismatch")
    return Optimal(x, value)


def _is_recession_direction(system: MixedSystem, v: Sequence) -> bool:
    for con in system.rows:
        d = dot(con.normal, v)
        if con.rel is Rel.EQ and d != 0:
            return False
        if con.rel in (Rel.LE, Rel.LT) and d > 0:
            return False
        if con.rel in (Rel.GE, Rel.GT) and d < 0:
            return False
    return True

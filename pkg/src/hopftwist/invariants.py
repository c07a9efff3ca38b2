"""Twisted Sweedler powers, twisted exponents and twisted FS indicators.

Two independent routes are implemented for each invariant:

* the definitional route, built on :func:`twisted_powers`, which folds
  the iterated coproduct one tensor factor at a time and keeps its state
  in ``H (x) H``;
* the route through the element ``q_tau`` of ``H (x) H*``, whose left
  multiplication on ``V (x) H*`` is an explicit matrix.

The definitional exponent twists by ``S^-2 tau``; the indicators twist by
``tau`` itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cyclo import ONE, ZERO, CycNumber, divisors
from .errors import (
    ExponentBoundExceeded,
    MethodDisagreement,
    MNotDivisibleByOrder,
    NoNormalizedIntegral,
    NotGrouplike,
    NotInvolutory,
    OrderBoundExceeded,
)
from .linalg import Matrix, map_order
from .reps import Character, Representation, character, ensure_representation
from .structures import (
    HopfAlgebra,
    HopfAutomorphism,
    _acc,
    _clean,
    _sp,
    antipode_inv,
    dual,
    ensure_verified,
    identity_automorphism,
    is_grouplike,
)


def default_bound(H: HopfAlgebra, tau: HopfAutomorphism | None = None) -> int:
    """Search bound 2 * r * (dim H)^3."""
    r = tau.order if tau is not None else 1
    return 2 * r * H.dim ** 3


# -- twisted Sweedler powers --------------------------------------------------------


class _Twister:
    """Cached products ``b_a * A^j(b_c)`` for the fold in :func:`twisted_powers`."""

    def __init__(self, H: HopfAlgebra, A: Matrix):
        self.H = H
        self.A = A
        self.period = None
        self._cols = [None]  # _cols[j] = sparse columns of A^j (j >= 1)
        self._power = Matrix.identity(H.dim)
        self._tables: dict[int, dict] = {}

    def _columns(self, j):
        if self.period is not None:
            j = j % self.period or self.period
        while len(self._cols) <= j and self.period is None:
            self._power = self._power @ self.A
            k = len(self._cols)
            if self._power.is_identity():
                self.period = k
            self._cols.append([_sp(self._power.column(c)) for c in range(self.H.dim)])
        if self.period is not None:
            j = j % self.period or self.period
        return j, self._cols[j]

    def product(self, j, a, c) -> dict:
        j, cols = self._columns(j)
        table = self._tables.setdefault(j, {})
        key = (a, c)
        out = table.get(key)
        if out is None:
            out = table[key] = self.H.mul_sp({a: ONE}, cols[c])
        return out


def _fold(tw: _Twister, h: dict, m_max: int):
    """Yield the twisted powers of ``h`` for m = 1, ..., m_max.

    State after step j is sum P_j (x) h_(j+1) with
    P_j = h_1 A(h_2) ... A^(j-1)(h_j); the m-th power is (Id (x) eps)
    of the state after step m.
    """
    H = tw.H
    eps = H.counit_values
    s = H.delta_sp(h)
    for m in range(1, m_max + 1):
        out = {}
        for (a, b), c in s.items():
            e = eps[b]
            if e:
                _acc(out, a, c * e)
        yield _clean(out)
        if m == m_max:
            return
        nxt = {}
        for (a, b), c in s.items():
            for (p, f), u in H._dsp[b].items():
                cu = c * u
                for k, v in tw.product(m, a, p).items():
                    _acc(nxt, (k, f), cu * v)
        s = _clean(nxt)


def twisted_powers(H: HopfAlgebra, h, A: Matrix, m_max: int) -> list[tuple]:
    """``[P_1, ..., P_m_max]`` with P_m = mu^m (Id (x) A (x) ... (x) A^(m-1)) Delta^(m-1)(h)."""
    tw = _Twister(H, A)
    return [H.to_vec(p) for p in _fold(tw, _sp(h), m_max)]


def twisted_power(H: HopfAlgebra, h, A: Matrix, m: int) -> tuple:
    if m < 1:
        raise ValueError("m must be at least 1")
    return twisted_powers(H, h, A, m)[-1]


def twist_for_exponent(H: HopfAlgebra, tau: HopfAutomorphism) -> Matrix:
    """The map S^-2 tau."""
    Sinv = antipode_inv(H)
    return Sinv @ Sinv @ tau.map


# -- twisted exponents ------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentResult:
    value: int
    r: int
    method: str
    bound_used: int

    @property
    def d_tau(self) -> int:
        return self.r * self.value


def _is_counit_image(H, rep, b, p: dict) -> bool:
    e = H.counit_values[b]
    if rep is None:
        return p == ({i: e * c for i, c in _sp(H.unit).items()} if e else {})
    return rep.rho(H.to_vec(p)) == Matrix.identity(rep.dim).scale(e)


def gamma_is_counit(H: HopfAlgebra, tau: HopfAutomorphism, k: int,
                    rep: Representation | None = None) -> bool:
    """Whether the twisted power map with m = k r acts as eps * Id (on ``rep`` if given)."""
    ensure_verified(H)
    if rep is not None:
        ensure_representation(rep)
    tw = _Twister(H, twist_for_exponent(H, tau))
    m = k * tau.order
    for b in range(H.dim):
        *_, p = _fold(tw, {b: ONE}, m)
        if not _is_counit_image(H, rep, b, p):
            return False
    return True


def twisted_exponent(H: HopfAlgebra, tau: HopfAutomorphism | None = None,
                     rep: Representation | None = None, bound: int | None = None) -> ExponentResult:
    """Least k with Gamma_(k r) = eps * Id, straight from the definition.

    ``rep=None`` means the algebra itself (equivalently its regular module).
    Raises :class:`ExponentBoundExceeded` when no ``k <= bound`` works.
    """
    ensure_verified(H)
    tau = tau or identity_automorphism(H)
    if rep is not None:
        ensure_representation(rep)
    bound = bound or default_bound(H, tau)
    r = tau.order
    tw = _Twister(H, twist_for_exponent(H, tau))
    folds = [_fold(tw, {b: ONE}, bound * r) for b in range(H.dim)]
    for k in range(1, bound + 1):
        ok = True
        for b, gen in enumerate(folds):
            for _ in range(r - 1):
                next(gen)
            p = next(gen)
            # keep advancing every fold even after a failure so they stay in step
            if ok and not _is_counit_image(H, rep, b, p):
                ok = False
        if ok:
            return ExponentResult(k, r, "definition", bound)
    raise ExponentBoundExceeded(bound)


# -- group-likes and norms ----------------------------------------------------------------


def norm(H: HopfAlgebra, tau: HopfAutomorphism, g) -> tuple:
    """N(g) = g tau(g) ... tau^(r-1)(g) for a group-like g."""
    if not is_grouplike(H, g):
        raise NotGrouplike("norm is only defined on group-like elements")
    out = _sp(g)
    img = _sp(g)
    for _ in range(1, tau.order):
        img = H.map_sp(tau.map, img)
        out = H.mul_sp(out, img)
    return H.to_vec(out)


def element_order(H: HopfAlgebra, g, bound: int | None = None) -> int:
    """Multiplicative order of ``g`` in H."""
    bound = bound or default_bound(H)
    unit = _sp(H.unit)
    gs = _sp(g)
    p = gs
    for k in range(1, bound + 1):
        if p == unit:
            return k
        p = H.mul_sp(p, gs)
    raise OrderBoundExceeded(bound, "element")


def group_twisted_exponent(H: HopfAlgebra, tau: HopfAutomorphism) -> int:
    """lcm of the orders of N(g) over the group basis of a group algebra."""
    if H.group is None:
        raise NotGrouplike(f"{H.name} was not built from a group")
    return math.lcm(*(element_order(H, norm(H, tau, H.basis_element(i))) for i in range(H.dim)))


# -- integral ----------------------------------------------------------------------------


def find_integral(H: HopfAlgebra) -> tuple:
    """The two-sided integral Lambda with eps(Lambda) = 1."""
    ensure_verified(H)
    n = H.dim
    rows = []
    for i in range(n):
        e = H.counit_values[i]
        left = [[H.mult[i][j][k] for j in range(n)] for k in range(n)]
        right = [[H.mult[j][i][k] for j in range(n)] for k in range(n)]
        for block in (left, right):
            for k in range(n):
                row = list(block[k])
                row[k] = row[k] - e
                rows.append(row)
    space = Matrix._wrap(rows, n).nullspace()
    if len(space) != 1:
        raise NoNormalizedIntegral(
            f"two-sided integrals of {H.name} form a space of dimension {len(space)}, not 1"
        )
    lam = space[0]
    e = H.eps_sp(_sp(lam))
    if not e:
        raise NoNormalizedIntegral(f"the counit vanishes on the integrals of {H.name}")
    inv = 1 / e
    return tuple(inv * c if c else c for c in lam)


# -- q_tau ------------------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QElement:
    """q_tau in H (x) H*, stored as ``{(i, j): coeff}`` over b_i (x) b_j*."""

    algebra: HopfAlgebra
    tau: HopfAutomorphism
    coeffs: dict = field(repr=False)

    @property
    def tensor(self) -> tuple:
        n = self.algebra.dim
        return tuple(self.coeffs.get((i, j), ZERO) for i in range(n) for j in range(n))


def _require_involutory(H: HopfAlgebra):
    if not (H.antipode @ H.antipode).is_identity():
        raise NotInvolutory(f"S^2 != Id on {H.name}; the q_tau route needs an involutory algebra")


def _dual_of(H: HopfAlgebra) -> HopfAlgebra:
    D = getattr(H, "_dual_cache", None)
    if D is None:
        D = H._dual_cache = dual(H)
    return D


def q_element(H: HopfAlgebra, tau: HopfAutomorphism | None = None) -> QElement:
    """prod over t < r of (Id (x) (tau*)^t) coev(1), multiplied in H (x) H*."""
    ensure_verified(H)
    tau = tau or identity_automorphism(H)
    D = _dual_of(H)
    n = H.dim
    q = None
    power = Matrix.identity(n)
    for _ in range(tau.order):
        # (Id (x) (tau*)^t) coev = sum_i b_i (x) sum_k (tau^t)[i][k] b_k*
        factor = _clean({(i, k): power.rows[i][k] for i in range(n) for k in range(n)})
        if q is None:
            q = factor
        else:
            out = {}
            for (a, b), x in q.items():
                for (c, d), y in factor.items():
                    xy = x * y
                    for k, u in H._msp[a][c].items():
                        for l, v in D._msp[b][d].items():
                            _acc(out, (k, l), xy * u * v)
            q = _clean(out)
        power = power @ tau.map
    return QElement(H, tau, q)


def q_action(H: HopfAlgebra, tau: HopfAutomorphism, rep: Representation) -> Matrix:
    """Matrix of left multiplication by q_tau on V (x) H*, index v * n + k."""
    q = q_element(H, tau)
    D = _dual_of(H)
    n, dv = H.dim, rep.dim
    N = dv * n
    rows = [[ZERO] * N for _ in range(N)]
    for (i, j), c in q.coeffs.items():
        rv = rep.action[i].rows
        # left convolution by b_j*: column l is b_j* b_l*
        for l in range(n):
            for k, u in D._msp[j][l].items():
                cu = c * u
                for v1 in range(dv):
                    for v2 in range(dv):
                        x = rv[v1][v2]
                        if x:
                            row = rows[v1 * n + k]
                            row[v2 * n + l] = row[v2 * n + l] + cu * x
    return Matrix._wrap(rows, N)


def twisted_exponent_via_q(H: HopfAlgebra, tau: HopfAutomorphism | None, rep: Representation,
                           bound: int | None = None) -> ExponentResult:
    """Order of q_tau acting on V (x) H*."""
    ensure_verified(H)
    tau = tau or identity_automorphism(H)
    _require_involutory(H)
    ensure_representation(rep)
    bound = bound or default_bound(H, tau)
    k = map_order(q_action(H, tau, rep), bound)
    return ExponentResult(k, tau.order, "q_order", bound)


# -- indicators -----------------------------------------------------------------------------


def _check_m(tau: HopfAutomorphism, ms):
    for m in ms:
        if m < 1 or m % tau.order:
            raise MNotDivisibleByOrder(f"m = {m} is not a positive multiple of r = {tau.order}")


def indicator_charsums(H: HopfAlgebra, tau: HopfAutomorphism, chi, ms) -> dict[int, CycNumber]:
    """chi applied to the tau-twisted powers of the normalized integral."""
    ms = sorted(set(ms))
    _check_m(tau, ms)
    if isinstance(chi, Representation):
        chi = character(chi)
    lam = find_integral(H)
    tw = _Twister(H, tau.map)
    wanted = set(ms)
    out = {}
    for m, p in enumerate(_fold(tw, _sp(lam), ms[-1]), start=1):
        if m in wanted:
            out[m] = chi(H.to_vec(p))
    return out


def indicator_charsum(H: HopfAlgebra, tau: HopfAutomorphism, chi, m: int) -> CycNumber:
    return indicator_charsums(H, tau, chi, [m])[m]


def indicator_traces(H: HopfAlgebra, tau: HopfAutomorphism, rep: Representation, ms) -> dict[int, CycNumber]:
    """(1 / dim H) trace of q_tau^(m / r) on V (x) H*."""
    ms = sorted(set(ms))
    _check_m(tau, ms)
    ensure_verified(H)
    _require_involutory(H)
    ensure_representation(rep)
    M = q_action(H, tau, rep)
    scale = CycNumber.rational(1) / H.dim
    out = {}
    power = M
    k = 1
    for m in ms:
        target = m // tau.order
        while k < target:
            power = power @ M
            k += 1
        out[m] = power.trace() * scale
    return out


def indicator_trace(H: HopfAlgebra, tau: HopfAutomorphism, rep: Representation, m: int) -> CycNumber:
    return indicator_traces(H, tau, rep, [m])[m]


def is_large_compared(m: int, d: int) -> bool:
    """True iff d / gcd(d, m) is coprime to m."""
    if m < 1 or d < 1:
        raise ValueError("m and d must be positive")
    return math.gcd(d // math.gcd(d, m), m) == 1


@dataclass(frozen=True)
class IndicatorEntry:
    m: int
    value: CycNumber
    methods: tuple[str, ...]
    in_ring: bool
    is_integer: bool


@dataclass(frozen=True)
class IndicatorReport:
    module: str
    automorphism: str
    r: int
    exponent: int
    entries: tuple[IndicatorEntry, ...]
    period: int
    observed_period: int | None
    ring_conductor: int | None
    all_rational_integers: bool

    def values(self) -> dict[int, CycNumber]:
        return {e.m: e.value for e in self.entries}


def _observed_period(values: dict[int, CycNumber], r: int) -> int | None:
    ms = sorted(values)
    span = ms[-1] - ms[0] if ms else 0
    for p in range(r, span + 1, r):
        if all(values[m + p] == values[m] for m in ms if m + p in values):
            return p
    return None


def indicator_report(H: HopfAlgebra, tau: HopfAutomorphism, rep: Representation,
                     m_max: int | None = None, method: str = "both",
                     bound: int | None = None) -> IndicatorReport:
    """Tabulate nu_m for m = r, 2r, ..., m_max and classify the values.

    ``method`` is ``"charsum"``, ``"trace"`` or ``"both"``; with ``both``
    any disagreement raises :class:`MethodDisagreement`.
    """
    if method not in ("charsum", "trace", "both"):
        raise ValueError(f"unknown method {method!r}")
    r = tau.order
    e = twisted_exponent(H, tau, rep, bound).value
    d = r * e
    m_max = m_max or 4 * d
    ms = list(range(r, m_max + 1, r))
    if not ms:
        raise MNotDivisibleByOrder(f"no multiple of r = {r} is <= {m_max}")
    results = {}
    if method in ("charsum", "both"):
        results["charsum"] = indicator_charsums(H, tau, character(rep), ms)
    if method in ("trace", "both"):
        results["trace"] = indicator_traces(H, tau, rep, ms)
    if method == "both":
        for m in ms:
            a, b = results["charsum"][m], results["trace"][m]
            if a != b:
                raise MethodDisagreement(
                    f"nu_{m}({rep.name}, {tau.name}): character sum {a} != trace formula {b}"
                )
    values = next(iter(results.values()))
    methods = tuple(results)
    entries = tuple(
        IndicatorEntry(
            m,
            values[m],
            methods,
            values[m].is_algebraic_integer_in(e),
            values[m].is_algebraic_integer_in(1),
        )
        for m in ms
    )
    ring = next(
        (c for c in divisors(e) if all(v.is_algebraic_integer_in(c) for v in values.values())),
        None,
    )
    return IndicatorReport(
        module=rep.name,
        automorphism=tau.name,
        r=r,
        exponent=e,
        entries=entries,
        period=d,
        observed_period=_observed_period(values, r),
        ring_conductor=ring,
        all_rational_integers=all(x.is_integer for x in entries),
    )

"""Finite-dimensional Hopf algebras given by structure constants.

Elements of an algebra are plain tuples of :class:`CycNumber` (one
coordinate per basis element).  Tensors in ``H (x) H`` are dicts mapping
index pairs to nonzero coefficients.  Multiplication is stored densely,
comultiplication sparsely as ``(coeff, left, right)`` triples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import lcm

from .cyclo import ONE, ZERO, CycNumber, cyc
from .errors import (
    DimensionMismatch,
    InvalidAlgebra,
    InvalidAutomorphism,
    NotAGroup,
    NotAGroupAutomorphism,
    OrderBoundExceeded,
    SingularAntipode,
    SingularMatrix,
)
from .linalg import Matrix, basis_vec, map_order

# Vec is a tuple of CycNumber; LinMap is a Matrix acting on columns.
LinMap = Matrix


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def __str__(self):
        if self.passed:
            return f"PASS {self.name}"
        text = f"FAIL {self.name}"
        if self.witness is not None:
            text += f" witness={self.witness}"
        if self.detail:
            text += f" ({self.detail})"
        return text


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def __iter__(self):
        return iter(self.checks)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "witness": list(c.witness) if c.witness is not None else None,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _acc(d: dict, key, c):
    v = d.get(key)
    d[key] = c if v is None else v + c


def _sp(vec) -> dict:
    return {i: c for i, c in enumerate(vec) if c}


class HopfAlgebra:
    """Structure constants of a finite-dimensional Hopf algebra.

    Construction does not verify anything; call :func:`verify_axioms` or
    :func:`ensure_verified`.  ``group`` holds the Cayley table when the
    algebra was built by :func:`group_algebra`.
    """

    def __init__(self, name, basis, mult, unit, comult, counit, antipode, group=None):
        n = len(basis)
        self.name = str(name)
        self.dim = n
        self.basis_labels = tuple(str(b) for b in basis)
        self.mult = tuple(tuple(tuple(cyc(c) for c in v) for v in row) for row in mult)
        self.unit = tuple(cyc(c) for c in unit)
        self.comult = tuple(
            tuple((cyc(c), int(l), int(r)) for c, l, r in terms) for terms in comult
        )
        self.counit_values = tuple(cyc(c) for c in counit)
        self.antipode = antipode if isinstance(antipode, Matrix) else Matrix(antipode)
        self.group = group
        self._verified = None
        self._s_inv = None
        if len(self.mult) != n or any(len(row) != n for row in self.mult):
            raise DimensionMismatch("multiplication table must be n x n")
        if any(len(v) != n for row in self.mult for v in row):
            raise DimensionMismatch("products must have length n")
        if len(self.unit) != n or len(self.counit_values) != n or len(self.comult) != n:
            raise DimensionMismatch("unit, counit and comult need one entry per basis element")
        if self.antipode.shape != (n, n):
            raise DimensionMismatch("antipode must be n x n")
        for terms in self.comult:
            for _, l, r in terms:
                if not (0 <= l < n and 0 <= r < n):
                    raise DimensionMismatch(f"comult index out of range: {(l, r)}")
        self._msp = tuple(tuple(_sp(v) for v in row) for row in self.mult)
        self._dsp = tuple(self._merge(terms) for terms in self.comult)

    @staticmethod
    def _merge(terms):
        d = {}
        for c, l, r in terms:
            _acc(d, (l, r), c)
        return _clean(d)

    def __repr__(self):
        return f"HopfAlgebra({self.name!r}, dim={self.dim})"

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)

    def basis_element(self, i) -> tuple:
        if isinstance(i, str):
            i = self.index(i)
        return basis_vec(self.dim, i)

    def element(self, coeffs: dict) -> tuple:
        """Vector from a ``{label_or_index: coeff}`` mapping."""
        v = [ZERO] * self.dim
        for k, c in coeffs.items():
            i = self.index(k) if isinstance(k, str) else k
            v[i] = v[i] + cyc(c)
        return tuple(v)

    # -- sparse kernels ----------------------------------------------------

    def mul_sp(self, a: dict, b: dict) -> dict:
        out = {}
        msp = self._msp
        for i, x in a.items():
            row = msp[i]
            for j, y in b.items():
                xy = x * y
                for k, c in row[j].items():
                    _acc(out, k, xy * c)
        return _clean(out)

    def delta_sp(self, a: dict) -> dict:
        out = {}
        for k, x in a.items():
            for lr, c in self._dsp[k].items():
                _acc(out, lr, x * c)
        return _clean(out)

    def eps_sp(self, a: dict) -> CycNumber:
        acc = ZERO
        for i, x in a.items():
            e = self.counit_values[i]
            if e:
                acc = acc + x * e
        return acc

    def map_sp(self, f: Matrix, a: dict) -> dict:
        out = {}
        rows = f.rows
        for j, x in a.items():
            for i in range(self.dim):
                c = rows[i][j]
                if c:
                    _acc(out, i, x * c)
        return _clean(out)

    def tensor_mul_sp(self, s: dict, t: dict) -> dict:
        """Product in the algebra ``H (x) H``."""
        out = {}
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                left = self._msp[a][c]
                right = self._msp[b][d]
                xy = x * y
                for k, u in left.items():
                    for l, v in right.items():
                        _acc(out, (k, l), xy * u * v)
        return _clean(out)

    def to_vec(self, a: dict) -> tuple:
        v = [ZERO] * self.dim
        for i, c in a.items():
            v[i] = c
        return tuple(v)

    def is_verified(self) -> bool:
        if self._verified is None:
            self._verified = verify_axioms(self).ok
        return self._verified


# -- elementwise operations -----------------------------------------------------


def _check_len(H: HopfAlgebra, *vecs):
    for v in vecs:
        if len(v) != H.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in algebra of dim {H.dim}")


def multiply(H: HopfAlgebra, a, b) -> tuple:
    _check_len(H, a, b)
    return H.to_vec(H.mul_sp(_sp(a), _sp(b)))


def comultiply(H: HopfAlgebra, a) -> dict:
    """Delta(a) as a dict ``{(left, right): coeff}``."""
    _check_len(H, a)
    return H.delta_sp(_sp(a))


def counit(H: HopfAlgebra, a) -> CycNumber:
    _check_len(H, a)
    return H.eps_sp(_sp(a))


def apply_map(H: HopfAlgebra, f: Matrix, a) -> tuple:
    _check_len(H, a)
    return f.apply(a)


def antipode_inv(H: HopfAlgebra) -> Matrix:
    """Exact inverse of the antipode matrix."""
    if H._s_inv is None:
        try:
            H._s_inv = H.antipode.inverse()
        except SingularMatrix as exc:
            raise SingularAntipode(f"antipode of {H.name} is not invertible") from exc
    return H._s_inv


def tensor_of(a, b) -> dict:
    """Pure tensor ``a (x) b`` in sparse form."""
    return {(i, j): x * y for i, x in enumerate(a) if x for j, y in enumerate(b) if y}


def is_grouplike(H: HopfAlgebra, g) -> bool:
    _check_len(H, g)
    if H.eps_sp(_sp(g)) != 1:
        return False
    return H.delta_sp(_sp(g)) == _clean(tensor_of(g, g))


# -- axiom verification -------------------------------------------------------------

AXIOM_NAMES = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comult_multiplicative",
    "comult_unital",
    "counit_multiplicative",
    "counit_unital",
    "antipode_left",
    "antipode_right",
)


def _axiom_checks(H: HopfAlgebra):
    n = H.dim
    rng = range(n)
    e = [{i: ONE} for i in rng]
    unit = _sp(H.unit)

    def associativity():
        for i, j in itertools.product(rng, rng):
            ij = H._msp[i][j]
            for k in rng:
                if H.mul_sp(ij, e[k]) != H.mul_sp(e[i], H._msp[j][k]):
                    return (i, j, k)
        return None

    def unit_law():
        for i in rng:
            if H.mul_sp(unit, e[i]) != e[i] or H.mul_sp(e[i], unit) != e[i]:
                return (i,)
        return None

    def coassociativity():
        for k in rng:
            left, right = {}, {}
            for (a, b), c in H._dsp[k].items():
                for (p, q), u in H._dsp[a].items():
                    _acc(left, (p, q, b), c * u)
                for (p, q), u in H._dsp[b].items():
                    _acc(right, (a, p, q), c * u)
            if _clean(left) != _clean(right):
                return (k,)
        return None

    def counit_law():
        for k in rng:
            left, right = {}, {}
            for (a, b), c in H._dsp[k].items():
                ea, eb = H.counit_values[a], H.counit_values[b]
                if ea:
                    _acc(left, b, c * ea)
                if eb:
                    _acc(right, a, c * eb)
            if _clean(left) != e[k] or _clean(right) != e[k]:
                return (k,)
        return None

    def comult_multiplicative():
        for i, j in itertools.product(rng, rng):
            lhs = H.delta_sp(H._msp[i][j])
            rhs = H.tensor_mul_sp(H._dsp[i], H._dsp[j])
            if lhs != rhs:
                return (i, j)
        return None

    def comult_unital():
        if H.delta_sp(unit) != _clean(tensor_of(H.unit, H.unit)):
            return ()
        return None

    def counit_multiplicative():
        eps = H.counit_values
        for i, j in itertools.product(rng, rng):
            if H.eps_sp(H._msp[i][j]) != eps[i] * eps[j]:
                return (i, j)
        return None

    def counit_unital():
        return None if H.eps_sp(unit) == 1 else ()

    def antipode(side):
        def check():
            S = H.antipode
            for k in rng:
                out = {}
                for (a, b), c in H._dsp[k].items():
                    if side == "left":
                        prod = H.mul_sp(H.map_sp(S, e[a]), e[b])
                    else:
                        prod = H.mul_sp(e[a], H.map_sp(S, e[b]))
                    for t, u in prod.items():
                        _acc(out, t, c * u)
                expect = {t: H.counit_values[k] * u for t, u in unit.items()}
                if _clean(out) != _clean(expect):
                    return (k,)
            return None

        return check

    return [
        ("associativity", associativity),
        ("unit", unit_law),
        ("coassociativity", coassociativity),
        ("counit", counit_law),
        ("comult_multiplicative", comult_multiplicative),
        ("comult_unital", comult_unital),
        ("counit_multiplicative", counit_multiplicative),
        ("counit_unital", counit_unital),
        ("antipode_left", antipode("left")),
        ("antipode_right", antipode("right")),
    ]


def verify_axioms(H: HopfAlgebra, fail_fast: bool = False) -> VerificationReport:
    """Check the ten Hopf algebra axioms exhaustively over basis elements.

    Failures are reported with a witness tuple of basis indices.  With
    ``fail_fast`` the report stops at the first failing axiom.
    """
    checks = []
    for name, fn in _axiom_checks(H):
        witness = fn()
        checks.append(Check(name, witness is None, witness))
        if fail_fast and witness is not None:
            break
    report = VerificationReport(H.name, tuple(checks))
    if not fail_fast or not report.ok:
        H._verified = report.ok
    return report


def ensure_verified(H: HopfAlgebra) -> HopfAlgebra:
    if not H.is_verified():
        raise InvalidAlgebra(verify_axioms(H))
    return H


def same_structure(H: HopfAlgebra, K: HopfAlgebra) -> bool:
    """Identical structure constants (labels and names ignored)."""
    return (
        H.dim == K.dim
        and H.mult == K.mult
        and H.unit == K.unit
        and H._dsp == K._dsp
        and H.counit_values == K.counit_values
        and H.antipode == K.antipode
    )


def is_commutative(H: HopfAlgebra) -> bool:
    return all(H.mult[i][j] == H.mult[j][i] for i in range(H.dim) for j in range(i))


def is_cocommutative(H: HopfAlgebra) -> bool:
    return all(
        d == {(r, l): c for (l, r), c in d.items()} for d in H._dsp
    )


# -- automorphisms -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HopfAutomorphism:
    """A verified Hopf algebra automorphism of finite order ``order``."""

    algebra: HopfAlgebra
    map: Matrix
    order: int
    name: str = "tau"

    def apply(self, v) -> tuple:
        return self.map.apply(v)

    def power(self, k: int) -> Matrix:
        return self.map.power(k % self.order)


def default_order_bound(H: HopfAlgebra) -> int:
    return 2 * H.dim ** 3


def verify_automorphism(H: HopfAlgebra, f: Matrix, bound: int | None = None) -> VerificationReport:
    """Invariant checks for a candidate automorphism; order check last."""
    n = H.dim
    rng = range(n)
    checks = []
    if f.shape != (n, n):
        return VerificationReport("automorphism", (Check("shape", False, None, str(f.shape)),))
    cols = [_sp(f.column(j)) for j in rng]

    inv = f.is_invertible()
    checks.append(Check("invertible", inv))
    checks.append(Check("unital", H.map_sp(f, _sp(H.unit)) == _sp(H.unit)))

    bad = None
    for i, j in itertools.product(rng, rng):
        if H.map_sp(f, H._msp[i][j]) != H.mul_sp(cols[i], cols[j]):
            bad = (i, j)
            break
    checks.append(Check("multiplicative", bad is None, bad))

    bad = None
    for k in rng:
        lhs = H.delta_sp(cols[k])
        rhs = {}
        for (a, b), c in H._dsp[k].items():
            for p, u in cols[a].items():
                for q, v in cols[b].items():
                    _acc(rhs, (p, q), c * u * v)
        if lhs != _clean(rhs):
            bad = (k,)
            break
    checks.append(Check("comultiplicative", bad is None, bad))

    bad = next((k for k in rng if H.eps_sp(cols[k]) != H.counit_values[k]), None)
    checks.append(Check("counital", bad is None, None if bad is None else (bad,)))
    checks.append(Check("commutes_with_antipode", H.antipode @ f == f @ H.antipode))

    if inv:
        b = bound or default_order_bound(H)
        try:
            r = map_order(f, b)
            checks.append(Check("finite_order", True, detail=str(r)))
        except OrderBoundExceeded as exc:
            checks.append(Check("finite_order", False, detail=str(exc)))
    else:
        checks.append(Check("finite_order", False, detail="not invertible"))
    return VerificationReport("automorphism", tuple(checks))


def make_automorphism(H: HopfAlgebra, f, name: str = "tau", bound: int | None = None) -> HopfAutomorphism:
    """Validate ``f`` and wrap it; raises :class:`InvalidAutomorphism`."""
    f = f if isinstance(f, Matrix) else Matrix(f)
    report = verify_automorphism(H, f, bound)
    if not report.ok:
        raise InvalidAutomorphism(report)
    order = int(report.checks[-1].detail)
    return HopfAutomorphism(H, f, order, name)


def identity_automorphism(H: HopfAlgebra, name: str = "id") -> HopfAutomorphism:
    return HopfAutomorphism(H, Matrix.identity(H.dim), 1, name)


# -- constructions -------------------------------------------------------------------


def dual(H: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis ``b_i*``.

    Multiplication is the transpose of Delta, Delta is the transpose of
    multiplication, unit = counit, counit = evaluation at 1, antipode =
    transpose of S.
    """
    ensure_verified(H)
    n = H.dim
    mult = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for k, d in enumerate(H._dsp):
        for (l, r), c in d.items():
            mult[l][r][k] = mult[l][r][k] + c
    comult = [[] for _ in range(n)]
    for i, j in itertools.product(range(n), range(n)):
        for k, c in H._msp[i][j].items():
            comult[k].append((c, i, j))
    D = HopfAlgebra(
        H.name + "*",
        [b + "*" for b in H.basis_labels],
        mult,
        H.counit_values,
        comult,
        H.unit,
        H.antipode.transpose(),
    )
    return D


def dual_automorphism(tau: HopfAutomorphism, dual_algebra: HopfAlgebra | None = None) -> HopfAutomorphism:
    """tau* on the dual, (tau* a)(h) = a(tau h); its matrix is the transpose."""
    D = dual_algebra or dual(tau.algebra)
    return make_automorphism(D, tau.map.transpose(), tau.name + "*", bound=tau.order)


def tensor_product(H: HopfAlgebra, K: HopfAlgebra) -> HopfAlgebra:
    """Componentwise structure on the basis ``b_i (x) c_p`` with index ``i*m + p``."""
    ensure_verified(H)
    ensure_verified(K)
    n, m = H.dim, K.dim
    N = n * m
    idx = lambda i, p: i * m + p  # noqa: E731
    mult = []
    for i, p in itertools.product(range(n), range(m)):
        row = []
        for j, q in itertools.product(range(n), range(m)):
            v = [ZERO] * N
            for k, x in H._msp[i][j].items():
                for l, y in K._msp[p][q].items():
                    v[idx(k, l)] = x * y
            row.append(tuple(v))
        mult.append(row)
    unit = [a * b for a in H.unit for b in K.unit]
    comult = []
    for i, p in itertools.product(range(n), range(m)):
        terms = []
        for (a, b), x in H._dsp[i].items():
            for (c, d), y in K._dsp[p].items():
                terms.append((x * y, idx(a, c), idx(b, d)))
        comult.append(terms)
    counit_values = [a * b for a in H.counit_values for b in K.counit_values]
    labels = [f"{a}⊗{b}" for a in H.basis_labels for b in K.basis_labels]
    return HopfAlgebra(
        f"{H.name}⊗{K.name}",
        labels,
        mult,
        unit,
        comult,
        counit_values,
        H.antipode.kron(K.antipode),
    )


def tensor_automorphism(tau: HopfAutomorphism, sigma: HopfAutomorphism, product: HopfAlgebra | None = None) -> HopfAutomorphism:
    T = product or tensor_product(tau.algebra, sigma.algebra)
    gamma = tau.map.kron(sigma.map)
    return make_automorphism(
        T, gamma, f"{tau.name}⊗{sigma.name}", bound=lcm(tau.order, sigma.order)
    )


def _check_group(cayley, e):
    n = len(cayley)
    rng = range(n)
    if any(len(row) != n or any(not (0 <= x < n) for x in row) for row in cayley):
        raise NotAGroup("Cayley table must be n x n with entries in range")
    if not (0 <= e < n) or any(cayley[e][a] != a or cayley[a][e] != a for a in rng):
        raise NotAGroup(f"{e} is not a two-sided identity")
    for a, b, c in itertools.product(rng, rng, rng):
        if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]:
            raise NotAGroup(f"not associative at {(a, b, c)}")
    inverses = []
    for a in rng:
        inv = next((b for b in rng if cayley[a][b] == e and cayley[b][a] == e), None)
        if inv is None:
            raise NotAGroup(f"element {a} has no inverse")
        inverses.append(inv)
    return inverses


def group_algebra(cayley, identity_index: int = 0, labels=None, name: str = "k[G]") -> HopfAlgebra:
    """Group algebra with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1."""
    cayley = [list(row) for row in cayley]
    inverses = _check_group(cayley, identity_index)
    n = len(cayley)
    labels = labels or [f"g{i}" for i in range(n)]
    mult = [[basis_vec(n, cayley[i][j]) for j in range(n)] for i in range(n)]
    S = Matrix.from_columns([basis_vec(n, inverses[j]) for j in range(n)])
    H = HopfAlgebra(
        name,
        labels,
        mult,
        basis_vec(n, identity_index),
        [[(ONE, i, i)] for i in range(n)],
        [ONE] * n,
        S,
        group=(tuple(tuple(r) for r in cayley), identity_index),
    )
    return H


def group_automorphism(H: HopfAlgebra, perm, name: str = "tau") -> HopfAutomorphism:
    """Automorphism of ``k[G]`` induced by a group automorphism ``perm``."""
    if H.group is None:
        raise NotAGroupAutomorphism(f"{H.name} was not built from a group")
    cayley, e = H.group
    n = H.dim
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise NotAGroupAutomorphism("not a permutation of the group elements")
    for a, b in itertools.product(range(n), range(n)):
        if perm[cayley[a][b]] != cayley[perm[a]][perm[b]]:
            raise NotAGroupAutomorphism(f"not multiplicative at {(a, b)}")
    f = Matrix.from_columns([basis_vec(n, perm[j]) for j in range(n)])
    return make_automorphism(H, f, name)


def group_automorphisms(H: HopfAlgebra) -> list[tuple[int, ...]]:
    """All automorphisms of the underlying group, sorted lexicographically."""
    cayley, e = H.group
    n = H.dim
    others = [a for a in range(n) if a != e]
    found = []
    for images in itertools.permutations(others):
        perm = [0] * n
        perm[e] = e
        for a, b in zip(others, images):
            perm[a] = b
        if all(
            perm[cayley[a][b]] == cayley[perm[a]][perm[b]]
            for a in range(n)
            for b in range(n)
        ):
            found.append(tuple(perm))
    return sorted(found)

"""Built-in algebras, automorphisms and modules.

H_8 and the Sweedler algebra are generated from generator-and-relation
presentations: words in the generators are rewritten to a fixed normal
form, and Delta, eps, S, automorphisms and module actions are extended
from the generators multiplicatively.  Nothing here is trusted; callers
(and the test suite) run the verifiers on the results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclo import ONE, ZERO, I, cyc, zeta
from .errors import UnknownBuiltin
from .linalg import Matrix
from .reps import Representation, one_dimensional, regular_representation, trivial_representation
from .structures import (
    HopfAlgebra,
    HopfAutomorphism,
    _acc,
    _clean,
    ensure_verified,
    group_algebra,
    group_automorphism,
    group_automorphisms,
    make_automorphism,
)

HALF = Fraction(1, 2)


class Presentation:
    """Linear combinations of words reduced by two-letter rewrite rules.

    ``rules`` maps a two-letter word to a ``{word: coeff}`` replacement;
    ``normal`` lists the normal-form words, which become the basis.
    """

    def __init__(self, rules: dict, normal: list[str]):
        self.rules = {k: {w: cyc(c) for w, c in v.items()} for k, v in rules.items()}
        self.normal = list(normal)
        self.index = {w: i for i, w in enumerate(self.normal)}

    def reduce(self, combo: dict) -> dict:
        todo = {w: cyc(c) for w, c in combo.items()}
        done = {}
        while todo:
            w, c = todo.popitem()
            if not c:
                continue
            hit = next((p for p in range(len(w) - 1) if w[p:p + 2] in self.rules), None)
            if hit is None:
                if w not in self.index:
                    raise ValueError(f"word {w!r} is irreducible but not a normal form")
                _acc(done, w, c)
                continue
            for rep, u in self.rules[w[hit:hit + 2]].items():
                _acc(todo, w[:hit] + rep + w[hit + 2:], c * u)
        return _clean(done)

    def vec(self, combo: dict) -> tuple:
        v = [ZERO] * len(self.normal)
        for w, c in self.reduce(combo).items():
            v[self.index[w]] = c
        return tuple(v)

    def multiplication(self):
        return [[self.vec({a + b: 1}) for b in self.normal] for a in self.normal]


def _letters(word):
    return list(word)


def _concat(a: dict, b: dict) -> dict:
    """Product of word combinations before reduction."""
    out = {}
    for wa, c in a.items():
        for wb, u in b.items():
            _acc(out, wa + wb, c * u)
    return out


def presented_hopf_algebra(name, labels, pres: Presentation, gen_delta, gen_eps, gen_S):
    """Build a Hopf algebra from a presentation and data on generators.

    ``gen_delta[g]`` is a list of ``(coeff, left_word, right_word)``;
    ``gen_eps[g]`` a scalar; ``gen_S[g]`` a ``{word: coeff}`` combination.
    Delta and eps extend multiplicatively, S anti-multiplicatively.
    """
    mult = pres.multiplication()
    n = len(pres.normal)
    # temporary algebra for products in H (x) H; its coalgebra data is unused
    scratch = HopfAlgebra(name, labels, mult, pres.vec({"": 1}), [[] for _ in range(n)],
                          [ZERO] * n, Matrix.identity(n))

    def delta_gen(g):
        out = {}
        for c, l, r in gen_delta[g]:
            for wl, u in pres.reduce({l: 1}).items():
                for wr, v in pres.reduce({r: 1}).items():
                    _acc(out, (pres.index[wl], pres.index[wr]), cyc(c) * u * v)
        return _clean(out)

    comult, counit, S_cols = [], [], []
    for w in pres.normal:
        d = {(pres.index[""], pres.index[""]): ONE}
        e = ONE
        s = {"": ONE}
        for g in _letters(w):
            d = scratch.tensor_mul_sp(d, delta_gen(g))
            e = e * cyc(gen_eps[g])
            s = _concat(pres.reduce(gen_S[g]), s)
        comult.append([(c, l, r) for (l, r), c in sorted(d.items())])
        counit.append(e)
        S_cols.append(pres.vec(s))
    return HopfAlgebra(name, labels, mult, pres.vec({"": 1}), comult, counit,
                       Matrix.from_columns(S_cols))


def extend_algebra_map(pres: Presentation, gen_images: dict) -> Matrix:
    """Matrix of the algebra map sending generator ``g`` to ``gen_images[g]``."""
    cols = []
    for w in pres.normal:
        img = {"": ONE}
        for g in _letters(w):
            img = _concat(img, gen_images[g])
        cols.append(pres.vec(img))
    return Matrix.from_columns(cols)


def extend_action(pres: Presentation, gen_mats: dict, dim_v: int) -> list[Matrix]:
    mats = []
    for w in pres.normal:
        m = Matrix.identity(dim_v)
        for g in _letters(w):
            m = m @ gen_mats[g]
        mats.append(m)
    return mats


# -- H_8 ---------------------------------------------------------------------------

H8_WORDS = ["", "x", "y", "xy", "z", "xz", "yz", "xyz"]
H8_LABELS = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]

H8_PRESENTATION = Presentation(
    {
        "xx": {"": 1},
        "yy": {"": 1},
        "yx": {"xy": 1},
        "zx": {"yz": 1},
        "zy": {"xz": 1},
        "zz": {"": HALF, "x": HALF, "y": HALF, "xy": -HALF},
    },
    H8_WORDS,
)

# images of the generators (x, y, z), one automorphism per row of the table
H8_AUTOMORPHISMS = {
    "tau1": {"x": {"x": 1}, "y": {"y": 1}, "z": {"z": 1}},
    "tau2": {"x": {"x": 1}, "y": {"y": 1}, "z": {"xyz": 1}},
    "tau3": {"x": {"y": 1}, "y": {"x": 1}, "z": {"z": HALF, "xz": HALF, "yz": HALF, "xyz": -HALF}},
    "tau4": {"x": {"y": 1}, "y": {"x": 1}, "z": {"z": -HALF, "xz": HALF, "yz": HALF, "xyz": HALF}},
}

# character values on the generators (x, y, z) of the one-dimensional modules
H8_LINEAR_CHARACTERS = {
    "V1": (1, 1, 1),
    "V2": (1, 1, -1),
    "V3": (-1, -1, I),
    "V4": (-1, -1, -I),
}

H8_V5_GENERATORS = {
    "x": Matrix([[1, 0], [0, -1]]),
    "y": Matrix([[-1, 0], [0, 1]]),
    "z": Matrix([[0, 1], [1, 0]]),
}


def h8_algebra() -> HopfAlgebra:
    pres = H8_PRESENTATION
    delta = {
        "x": [(1, "x", "x")],
        "y": [(1, "y", "y")],
        "z": [(HALF, "z", "z"), (HALF, "z", "xz"), (HALF, "yz", "z"), (-HALF, "yz", "xz")],
    }
    eps = {"x": 1, "y": 1, "z": 1}
    S = {"x": {"x": 1}, "y": {"y": 1}, "z": {"z": 1}}
    return presented_hopf_algebra("H8", H8_LABELS, pres, delta, eps, S)


@dataclass
class Package:
    """An algebra with named automorphisms and named modules."""

    algebra: HopfAlgebra
    automorphisms: dict[str, HopfAutomorphism] = field(default_factory=dict)
    modules: dict[str, Representation] = field(default_factory=dict)


def builtin_h8() -> Package:
    H = ensure_verified(h8_algebra())
    pres = H8_PRESENTATION
    auts = {}
    for name, images in H8_AUTOMORPHISMS.items():
        f = extend_algebra_map(pres, {g: {w: cyc(c) for w, c in img.items()} for g, img in images.items()})
        auts[name] = make_automorphism(H, f, name)
    mods = {}
    for name, (cx, cy, cz) in H8_LINEAR_CHARACTERS.items():
        gens = {"x": cyc(cx), "y": cyc(cy), "z": cyc(cz)}
        values = []
        for w in pres.normal:
            v = ONE
            for g in w:
                v = v * gens[g]
            values.append(v)
        mods[name] = one_dimensional(H, values, name)
    mods["V5"] = Representation(H, "V5", 2, extend_action(pres, H8_V5_GENERATORS, 2))
    return Package(H, auts, mods)


# -- Sweedler's four-dimensional algebra (not semisimple, S^2 != Id) ----------------

SWEEDLER_PRESENTATION = Presentation(
    {"gg": {"": 1}, "xx": {}, "xg": {"gx": -1}},
    ["", "g", "x", "gx"],
)


def sweedler_algebra() -> HopfAlgebra:
    return presented_hopf_algebra(
        "H4",
        ["1", "g", "x", "gx"],
        SWEEDLER_PRESENTATION,
        {"g": [(1, "g", "g")], "x": [(1, "x", ""), (1, "g", "x")]},
        {"g": 1, "x": 0},
        {"g": {"g": 1}, "x": {"gx": -1}},
    )


# -- group algebras -----------------------------------------------------------------


def cyclic_group_algebra(n: int) -> HopfAlgebra:
    labels = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    cayley = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_algebra(cayley, 0, labels[:n], name=f"C{n}")


def _cycle_label(p):
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        c, t = [], s
        while t not in seen:
            seen.add(t)
            c.append(t + 1)
            t = p[t]
        cycles.append("(" + " ".join(map(str, c)) + ")")
    return "".join(cycles) or "()"


def symmetric_group_algebra(k: int = 3) -> HopfAlgebra:
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(i) = p(q(i))
    cayley = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    return group_algebra(cayley, 0, [_cycle_label(p) for p in perms], name=f"S{k}")


def group_package(H: HopfAlgebra) -> Package:
    auts = {}
    for i, perm in enumerate(group_automorphisms(H), start=1):
        auts[f"tau{i}"] = group_automorphism(H, perm, f"tau{i}")
    return Package(H, auts, {})


def _cyclic_package(n):
    pkg = group_package(cyclic_group_algebra(n))
    H = pkg.algebra
    for k in range(n):
        pkg.modules[f"chi{k}"] = one_dimensional(H, [zeta(n, j * k) for j in range(n)], f"chi{k}")
    return pkg


def _s3_package():
    pkg = group_package(symmetric_group_algebra(3))
    H = pkg.algebra
    perms = sorted(itertools.permutations(range(3)))
    sign = []
    for p in perms:
        inv = sum(1 for a in range(3) for b in range(a + 1, 3) if p[a] > p[b])
        sign.append(ONE if inv % 2 == 0 else -ONE)
    pkg.modules["sign"] = one_dimensional(H, sign, "sign")
    # standard representation on {v : sum v = 0}, basis e1 - e2, e2 - e3
    mats = []
    for p in perms:
        def img(v):
            out = [0, 0, 0]
            for i in range(3):
                out[p[i]] += v[i]
            return out

        cols = []
        for v in ([1, -1, 0], [0, 1, -1]):
            w = img(v)
            # w = a(e1 - e2) + b(e2 - e3)  =>  a = w1, b = w1 + w2
            cols.append((w[0], w[0] + w[1]))
        mats.append(Matrix.from_columns([tuple(cyc(c) for c in col) for col in cols]))
    pkg.modules["standard"] = Representation(H, "standard", 2, mats)
    return pkg


_BUILDERS = {
    "h8": builtin_h8,
    "c2": lambda: _cyclic_package(2),
    "c3": lambda: _cyclic_package(3),
    "c4": lambda: _cyclic_package(4),
    "c6": lambda: _cyclic_package(6),
    "s3": _s3_package,
}

BUILTIN_NAMES = tuple(_BUILDERS)

_cache: dict[str, Package] = {}


def builtin(name: str) -> Package:
    """Built-in package by name: ``h8``, ``c2``, ``c3``, ``c4``, ``c6`` or ``s3``."""
    key = name.lower()
    if key not in _BUILDERS:
        raise UnknownBuiltin(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    if key not in _cache:
        _cache[key] = _BUILDERS[key]()
    return _cache[key]


def standard_modules(pkg: Package) -> dict[str, Representation]:
    """Named modules plus ``trivial`` and ``regular``."""
    mods = dict(pkg.modules)
    mods.setdefault("trivial", trivial_representation(pkg.algebra))
    mods.setdefault("regular", regular_representation(pkg.algebra))
    return mods

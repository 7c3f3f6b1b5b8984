"""Named verification suites with JSON reports.

Each suite runs at a fixed default scale over a fixed list of types, or over
one type when ``family``/``rank`` are given.  ``inject=True`` plants a known
fault so the suite is expected to fail; it is how the failure path of the
command line is exercised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import braid, cellular, connectivity
from .cellular import CellularCrystal, CheckReport
from .crystalcore import graph_isomorphic
from .errors import InvalidInput, UnsupportedMinor
from .grouprep import (defining_rep, generalized_minor, geo_e, geo_eps, geo_gamma, random_point,
                       theta_minus)
from .rootdata import braid_neighbors, canonical_longest_word, cartan_matrix, word_graph_path
from .tropsym import LaurentPoly, eval_positive

REPORT_VERSION = 1


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"version": REPORT_VERSION, "suite": self.suite, "passed": self.passed,
                "params": _plain(self.params),
                "checks": [{"name": c.name, "passed": bool(c.passed), "details": _plain(c.details)}
                           for c in self.checks]}


def _plain(v):
    """Make report details JSON-safe with stable key order."""
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    if isinstance(v, (list, tuple, set, frozenset)):
        seq = sorted(v, key=str) if isinstance(v, (set, frozenset)) else v
        return [_plain(x) for x in seq]
    if isinstance(v, (bool, str)) or v is None:
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    return str(v)


def _types(default, family, rank):
    if family is None:
        return list(default)
    if rank is None:
        raise InvalidInput("--rank is required with --family")
    c = cartan_matrix(family, rank)
    return [(c.family, c.rank)]


def _name(f, n) -> str:
    return f"{f}{n}"


# ---------------------------------------------------------------- catalog
CATALOG_TYPES = [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("C", 2), ("C", 3), ("D", 4), ("G", 2)]


def suite_catalog(family=None, rank=None, inject=False, **_) -> SuiteResult:
    """Catalog potentials against minors computed in the matrix model."""
    res = SuiteResult("catalog-vs-oracle", params={"inject": inject})
    for f, n in _types(CATALOG_TYPES, family, rank):
        reports = cellular.catalog_vs_oracle(f, n)
        if inject:
            # add a stray monomial to the first catalog minor and compare again
            want = cellular.catalog_delta(f, n, 1)
            bumped = want + LaurentPoly.monomial([1] + [0] * (want.nvars - 1))
            got = cellular.upper_minor(f, n, 1)
            reports[0] = CheckReport(reports[0].name, got == bumped, {"mode": "oracle", "injected": True})
        res.checks += reports
    return res


# ------------------------------------------------------------ isomorphism
TRUNCATION_TYPES = [("A", 2, 6), ("B", 2, 6), ("C", 2, 6), ("G", 2, 6), ("A", 3, 5)]


def _with_depth(default, family, rank, depth):
    if family is None:
        return [t if depth is None else (t[0], t[1], depth) for t in default]
    (f, n), = _types([], family, rank)
    d = depth if depth is not None else next((t[2] for t in default if t[:2] == (f, n)), 4)
    return [(f, n, d)]


def _weakened(pot):
    """The potential with one non-trivial form removed."""
    bare = tuple(int(k == 0) for k in range(len(pot.word)))
    drop = next(f for f in pot.forms if f != bare)
    return pot.without_form(drop)


def suite_truncations(family=None, rank=None, depth=None, inject=False, **_) -> SuiteResult:
    """Potential cutoff, polyhedral cone and tensor closure give the same truncated graph."""
    res = SuiteResult("truncations", params={"inject": inject})
    for f, n, d in _with_depth(TRUNCATION_TYPES, family, rank, depth):
        pot = cellular.potential_catalog(f, n)
        # single forms are redundant for the f-generated part, so the fault adds -x_1 instead
        cut = pot.with_form((-1,) + (0,) * (len(pot.word) - 1)) if inject else pot
        gs = {"potential": cellular.binf_truncation(f, n, d, "potential", cut)[0],
              "polyhedral": cellular.binf_truncation(f, n, d, "polyhedral")[0],
              "tensor": cellular.binf_truncation(f, n, d, "tensor", pot)[0]}
        for a, b in (("potential", "polyhedral"), ("potential", "tensor"), ("polyhedral", "tensor")):
            ok, info = graph_isomorphic(gs[a], gs[b], labels=("wt", "eps", "phi"))
            res.checks.append(CheckReport(f"{_name(f, n)} depth {d}: {a} ~ {b}", ok,
                                          {"nodes": [len(gs[a]), len(gs[b])],
                                           "reason": None if ok else info}))
    return res


# ------------------------------------------------------------------- ks
def suite_ks(family=None, rank=None, depth=None, inject=False, **_) -> SuiteResult:
    """Characterization conditions, normality, uniqueness and the min-x1 shape."""
    res = SuiteResult("ks", params={"inject": inject})
    for f, n, d in _with_depth(TRUNCATION_TYPES, family, rank, depth):
        pot = cellular.potential_catalog(f, n)
        if inject:
            pot = _weakened(pot)
        for key, r in cellular.ks_check(f, n, d, pot).items():
            res.checks.append(CheckReport(f"{_name(f, n)} {key}", r.passed, r.details))
    return res


# ---------------------------------------------------------------- braid
class _Shifted:
    """A transition with its first output coordinate moved by one (fault injection)."""

    def __init__(self, t):
        self.t, self.k, self.source, self.target = t, t.k, t.source, t.target

    def __call__(self, x):
        y = self.t(x)
        return (y[0] + 1,) + tuple(y[1:])

    def batch(self, X):
        Y = np.array(self.t.batch(X))
        Y[:, 0] += 1
        return Y


def _involution(k, samples, rng, inject):
    fwd, back = braid.load_transition(k, 1), braid.load_transition(k, 2)
    if inject:
        fwd = _Shifted(fwd)
    L = len(fwd.source)
    X = np.array([[rng.randint(-9, 9) for _ in range(L)] for _ in range(samples)], dtype=np.int64)
    out = []
    for a, b, label in ((fwd, back, "from 1"), (back, fwd, "from 2")):
        R = np.asarray(b.batch(np.asarray(a.batch(X), dtype=np.int64)))
        bad = np.nonzero((R != X).any(axis=1))[0]
        out.append(CheckReport(f"involution k={k} {label}", len(bad) == 0,
                               {"samples": samples, "violations": [X[j].tolist() for j in bad[:5]],
                                "provenance": getattr(a, "provenance", "")}))
    return out


def _far_word(c, w):
    """The last reduced word reached by breadth-first search over braid moves."""
    seen, queue = {w}, [w]
    for u in queue:
        for _, v in braid_neighbors(c, u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return queue[-1]


def _morphism(f, n, samples, rng):
    """Transport to the farthest reduced word preserves the crystal structure."""
    c = cartan_matrix(f, n)
    w1 = canonical_longest_word(f, n)
    w2 = _far_word(c, w1)
    path = word_graph_path(c, w1, w2)
    A, B = CellularCrystal(c, w1), CellularCrystal(c, w2)
    bad = []
    for _ in range(samples):
        x = tuple(rng.randint(-6, 6) for _ in w1)
        y = braid.apply_path(c, w1, x, path)[1]
        if A.wt(x) != B.wt(y):
            bad.append(("wt", x))
        for i in c.index_set:
            if A.eps(x, i) != B.eps(y, i):
                bad.append(("eps", i, x))
            for op in ("e", "f"):
                lhs = braid.apply_path(c, w1, getattr(A, op)(x, i), path)[1]
                if lhs != getattr(B, op)(y, i):
                    bad.append((op, i, x))
    return CheckReport(f"{_name(f, n)} morphism {''.join(map(str, w1))} -> {''.join(map(str, w2))}",
                       not bad, {"samples": samples, "moves": len(path), "violations": bad[:5]})


def _second_route(c, w1, w2, first):
    """A different move sequence from w1 to w2: detour through another neighbour first."""
    step = first[0].apply(w1) if first else None
    for mv, nxt in braid_neighbors(c, w1):
        if nxt != step:
            return [mv] + word_graph_path(c, nxt, w2)
    # only one neighbour: go there, come back, then take the direct route
    mv = first[0]
    return [mv, mv.reverse()] + list(first)


def _path_independence(f, n, samples, rng):
    c = cartan_matrix(f, n)
    w1 = canonical_longest_word(f, n)
    w2 = _far_word(c, w1)
    p1 = word_graph_path(c, w1, w2)
    p2 = _second_route(c, w1, w2, p1)
    bad = []
    for _ in range(samples):
        x = tuple(rng.randint(-6, 6) for _ in w1)
        a, b = braid.apply_path(c, w1, x, p1), braid.apply_path(c, w1, x, p2)
        if a != b:
            bad.append(x)
    return CheckReport(f"{_name(f, n)} two routes agree", not bad,
                       {"samples": samples, "route_lengths": [len(p1), len(p2)], "violations": bad[:5]})


def _omega_xi(f, n, samples, rng):
    c = cartan_matrix(f, n)
    w = canonical_longest_word(f, n)
    bad = []
    routes = {i: braid.leading_words(c, w, i, 3) for i in c.index_set}
    for _ in range(samples):
        x = tuple(rng.randint(-5, 5) for _ in w)
        for i, lw in routes.items():
            oms = {braid.omega(c, w, x, i, path=p) for _, p in lw}
            xis = {braid.xi(c, w, x, i, path=p) for _, p in lw}
            if len(oms) != 1 or len(xis) != 1:
                bad.append((x, i))
    return CheckReport(f"{_name(f, n)} omega/xi independent of the leading word", not bad,
                       {"samples": samples, "leading_words": {i: len(v) for i, v in routes.items()},
                        "violations": bad[:5]})


def suite_braid(family=None, rank=None, seed=0, inject=False, samples=10**4, **_) -> SuiteResult:
    """Involutivity, morphism property, route independence and omega/xi well-definedness."""
    rng = random.Random(seed)
    res = SuiteResult("braid", params={"seed": seed, "samples": samples, "inject": inject})
    for k in (0, 1, 2, 3):
        res.checks += _involution(k, samples, rng, inject and k == 1)
    small = max(1, samples // 10)
    morph = [("A", 3), ("B", 2), ("C", 2), ("G", 2)]
    routes = [("A", 3), ("C", 2)]
    if family is not None:
        morph = routes = _types([], family, rank)
    for f, n in morph:
        res.checks.append(_morphism(f, n, small, rng))
    for f, n in routes:
        res.checks.append(_path_independence(f, n, small, rng))
    for f, n in routes if family is not None else [("A", 3)]:
        res.checks.append(_omega_xi(f, n, small, rng))
    return res


# ------------------------------------------------------------ geometric
GEOMETRIC_TYPES = [("A", 2), ("B", 2), ("C", 2), ("G", 2), ("A", 3)]


def _verma_sides(aij, aji, i, j, c1, c2):
    if aij == aji == 0:
        return [(i, c1), (j, c2)], [(j, c2), (i, c1)]
    if aij == aji == -1:
        return [(i, c1), (j, c1 * c2), (i, c2)], [(j, c2), (i, c1 * c2), (j, c1)]
    if (aij, aji) == (-2, -1):
        return ([(i, c1), (j, c1**2 * c2), (i, c1 * c2), (j, c2)],
                [(j, c2), (i, c1 * c2), (j, c1**2 * c2), (i, c1)])
    if (aij, aji) == (-3, -1):
        return ([(i, c1), (j, c1**3 * c2), (i, c1**2 * c2), (j, c1**3 * c2**2), (i, c1 * c2), (j, c2)],
                [(j, c2), (i, c1 * c2), (j, c1**3 * c2**2), (i, c1**2 * c2), (j, c1**3 * c2), (i, c1)])
    return None


def _act(c, word, ops, x):
    for i, a in reversed(ops):
        x = geo_e(c, word, i, a, x)
    return x


def _ratio(rng):
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def suite_geometric(family=None, rank=None, seed=0, inject=False, points=50, **_) -> SuiteResult:
    """Exact identities of the positive geometric crystal on the parameter torus."""
    rng = random.Random(seed)
    res = SuiteResult("geometric", params={"seed": seed, "points": points, "inject": inject})
    for f, n in _types(GEOMETRIC_TYPES, family, rank):
        c = cartan_matrix(f, n)
        pot = cellular.potential_catalog(f, n)
        w, phi = pot.word, pot.laurent
        eps = geo_eps
        if inject:
            def eps(c_, w_, i_, x_, _e=geo_eps):
                return 2 * _e(c_, w_, i_, x_)
        verma, gamma, eaxis, half = [], [], [], []
        for _ in range(points):
            x = random_point(rng, len(w))
            c1, c2 = _ratio(rng), _ratio(rng)
            for i in c.index_set:
                y = geo_e(c, w, i, c1, x)
                if eps(c, w, i, y) != eps(c, w, i, x) / c1:
                    eaxis.append((i, x))
                if eval_positive(phi, y) - eval_positive(phi, x) != (1 / c1 - 1) * eps(c, w, i, x):
                    half.append((i, x))
                for j in c.index_set:
                    if geo_gamma(c, w, j, y) != c1 ** c.pairing(i, j) * geo_gamma(c, w, j, x):
                        gamma.append((i, j, x))
                    if i == j:
                        continue
                    if c.pairing(i, j) == c.pairing(j, i) == 0 and eps(c, w, i, geo_e(c, w, j, c1, x)) != eps(c, w, i, x):
                        eaxis.append((i, j, x))
                    sides = _verma_sides(c.pairing(i, j), c.pairing(j, i), i, j, c1, c2)
                    if sides and _act(c, w, sides[0], x) != _act(c, w, sides[1], x):
                        verma.append((i, j, x))
        nm = _name(f, n)
        res.checks += [
            CheckReport(f"{nm} Verma relations", not verma, {"violations": verma[:3]}),
            CheckReport(f"{nm} gamma transforms by c^a", not gamma, {"violations": gamma[:3]}),
            CheckReport(f"{nm} epsilon axioms", not eaxis, {"violations": eaxis[:3]}),
            CheckReport(f"{nm} half-potential law", not half, {"violations": half[:3]}),
        ]
        res.checks.append(_lowest_minor_is_one(f, n))
    return res


def _lowest_minor_is_one(f, n) -> CheckReport:
    rep = defining_rep(f, n)
    w = canonical_longest_word(f, n)
    g = theta_minus(rep, w)
    vals, skipped = {}, []
    for i in range(1, n + 1):
        try:
            vals[i] = generalized_minor(rep, g, w, (), i)
        except UnsupportedMinor:
            skipped.append(i)
    ok = all(v == 1 for v in vals.values())
    return CheckReport(f"{_name(f, n)} minor at w0 L_i, L_i is 1", ok,
                       {"checked": sorted(vals), "not_realized": skipped})


# ---------------------------------------------------------- lowest terms
LOWEST_TYPES = [("A", 2), ("A", 3), ("C", 2), ("G", 2)]
EF_TYPES = [("E", 6), ("E", 7), ("E", 8), ("F", 4)]


def suite_lowest_terms(family=None, rank=None, inject=False, **_) -> SuiteResult:
    """Lowest-term monomials, A-factorization of every minor monomial, tabulated identities."""
    res = SuiteResult("lowest-terms", params={"inject": inject})
    if family is None:
        plain, ef = LOWEST_TYPES, EF_TYPES
    else:
        t = _types([], family, rank)
        plain, ef = ([], t) if t[0] in EF_TYPES else (t, [])
    for f, n in plain:
        for j in range(1, n + 1):
            try:
                lt = cellular.lowest_term_check(f, n, j)
                af = cellular.a_monomial_factor_check(f, n, j)
            except UnsupportedMinor as exc:
                res.checks.append(CheckReport(f"{_name(f, n)} j={j} not realized", True, {"note": str(exc)}))
                continue
            res.checks += [CheckReport(f"{_name(f, n)} {lt.name}", lt.passed, lt.details),
                           CheckReport(f"{_name(f, n)} {af.name}", af.passed, af.details)]
    for f, n in ef:
        r = cellular.ef_identity_check(f, n)
        if inject:
            r = _perturbed_ef(f, n)
        res.checks.append(r)
    return res


def _perturbed_ef(f, n) -> CheckReport:
    from . import exceptional_tables as tab

    key = f"{f}{n}"
    saved = tab.EF_IDENTITIES[key]
    num, den, lead, factors = saved[0]
    s, i, ex = factors[0]
    try:
        tab.EF_IDENTITIES[key] = [(num, den, lead, [(s, i, ex + 1)] + list(factors[1:]))] + list(saved[1:])
        return cellular.ef_identity_check(f, n)
    finally:
        tab.EF_IDENTITIES[key] = saved


# ----------------------------------------------------------- connectivity
LATTICE_TYPES = ([("A", n) for n in range(2, 9)] + [("B", n) for n in range(2, 9)]
                 + [("C", n) for n in range(3, 9)] + [("D", n) for n in range(4, 9)]
                 + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])
SHIFT_TYPES = [("A", 2), ("B", 2), ("C", 2), ("G", 2), ("A", 3)]
CONDITION_H_TYPES = ([("A", n) for n in (2, 3, 4)] + [("B", n) for n in (2, 3, 4)]
                     + [("C", n) for n in (2, 3, 4)] + [("D", 4), ("G", 2)])
COVERAGE = {("A", 2): 5, ("B", 2): 3, ("C", 2): 3, ("G", 2): 3}
CONNECT = {("A", 2): (4, 200, 2), ("C", 2): (3, 100, 2), ("G", 2): (2, 100, 1)}


def suite_connectivity(family=None, rank=None, seed=0, inject=False, samples=10**4,
                       witnesses=100, **_) -> SuiteResult:
    """Shift lattice, equivariance, Condition H, witnesses, coverage and connectedness."""
    res = SuiteResult("connectivity", params={"seed": seed, "samples": samples,
                                              "witnesses": witnesses, "inject": inject})
    one = _types([], family, rank) if family is not None else None
    for f, n in one or LATTICE_TYPES:
        lat = connectivity.h_basis(cartan_matrix(f, n))
        res.checks.append(CheckReport(f"{_name(f, n)} shift lattice", lat.same_lattice, lat.details))
    if one and one[0][0] in "EF":
        rep = connectivity.connectedness_report(*one[0], radius=1, pairs=0)
        res.checks.append(CheckReport(f"{_name(*one[0])} connectedness", True, rep))
        return res
    for f, n in one or SHIFT_TYPES:
        r = connectivity.shift_equivariance_check(cartan_matrix(f, n), samples=samples, seed=seed)
        res.checks.append(CheckReport(f"{_name(f, n)} {r.name}", r.passed, r.details))
    rng = random.Random(seed)
    for f, n in one or CONDITION_H_TYPES:
        c = cartan_matrix(f, n)
        pot = cellular.potential_catalog(f, n)
        if inject:
            pot = pot.with_form((2,) + (0,) * (len(pot.word) - 1))
        r = connectivity.condition_H_check(c, pot)
        res.checks.append(CheckReport(f"{_name(f, n)} {r.name}", r.passed,
                                      {"forms": r.details["forms"], "offending": r.details["offending"]}))
        lat = connectivity.h_basis(c, pot.word)
        bad = []
        for _ in range(witnesses):
            H = lat.vector([rng.randint(-5, 5) for _ in range(n)])
            try:
                connectivity.intersection_witness(c, pot, H)
            except InvalidInput:
                bad.append(H)
        res.checks.append(CheckReport(f"{_name(f, n)} intersection witnesses", not bad,
                                      {"count": witnesses, "failures": bad[:5]}))
    for (f, n), r in COVERAGE.items():
        if one and (f, n) != one[0]:
            continue
        rep = connectivity.coverage_check(cartan_matrix(f, n), cellular.potential_catalog(f, n), r)
        res.checks.append(CheckReport(f"{_name(f, n)} {rep.name}", rep.passed, rep.details))
    for (f, n), (r, pairs, pad) in CONNECT.items():
        if one and (f, n) != one[0]:
            continue
        rep = connectivity.connectedness_report(f, n, r, pairs, seed=seed, pad=pad)
        res.checks.append(CheckReport(f"{_name(f, n)} connectedness", rep["ok"], rep))
    return res


# --------------------------------------------------------------- monomial
MONOMIAL_TYPES = [("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("G", 2)]


def suite_monomial(family=None, rank=None, inject=False, **_) -> SuiteResult:
    """Potential summands rebuilt from monomial-crystal orbits."""
    res = SuiteResult("monomial", params={"inject": inject})
    for f, n in _types(MONOMIAL_TYPES, family, rank):
        for k in range(1, n + 1):
            r = cellular.monomial_orbit_restatement_check(f, n, k)
            if inject and k == 1:
                got = cellular.monomial_orbit_expansion(f, n, k) * 2
                r = CheckReport(r.name, got == cellular.catalog_delta(f, n, k), {"injected": True})
            res.checks.append(CheckReport(f"{_name(f, n)} {r.name}", r.passed, r.details))
    return res


SUITES = {
    "catalog-vs-oracle": suite_catalog,
    "truncations": suite_truncations,
    "ks": suite_ks,
    "braid": suite_braid,
    "geometric": suite_geometric,
    "lowest-terms": suite_lowest_terms,
    "connectivity": suite_connectivity,
    "monomial": suite_monomial,
}


def run_suite(name: str, **kw) -> SuiteResult:
    if name not in SUITES:
        raise InvalidInput(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](**kw)

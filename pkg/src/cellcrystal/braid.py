"""Braid-type isomorphisms between cellular crystals of different reduced words.

The rank-2 transitions for patterns of length 4 and 6 are derived by solving
the factorization problem in the matrix model and tropicalizing the result;
the derived maps ship as JSON fixtures under ``data/`` and can be re-derived
with :func:`derive_phi`.  Transitions act on cellular windows; the closed
forms for lengths 2 and 3 are stated on the tensor side and converted in
:func:`_tensor_to_cellular`, the single place where the sign flip happens.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import InvalidInput
from .rootdata import BraidMove, CartanData, path_to_leading, replay, word_graph_path
from .tropsym import TropForm, TropRatio, tropicalize_ratio

DATA = Path(__file__).parent / "data"


def phi01(k: int, elems):
    """Closed forms on tensor factors: k=0 takes (x, y), k=1 takes (x, y, z)."""
    if k == 0:
        if len(elems) != 2:
            raise InvalidInput("the commuting move takes two factors")
        x, y = elems
        return (y, x)
    if k == 1:
        if len(elems) != 3:
            raise InvalidInput("the length-3 move takes three factors")
        x, y, z = elems
        return (max(z, y - x), x + z, -max(-x, z - y))
    raise InvalidInput("closed forms exist for k = 0, 1 only")


def _tensor_to_cellular(fn):
    """Turn a tensor-side window map into a cellular one via x <-> reversed(-x)."""
    def cell(x):
        out = fn(tuple(-v for v in reversed(x)))
        return tuple(-v for v in reversed(out))
    return cell


@dataclass(frozen=True)
class TropTransition:
    """Piecewise-linear window map; output t is min(num_t . x) - min(den_t . x)."""

    k: int
    source: tuple
    target: tuple
    coords: tuple[TropRatio, ...]
    provenance: str = "derived"

    def __post_init__(self):
        mats = [(np.array(r.num.forms, dtype=np.int64), np.array(r.den.forms, dtype=np.int64))
                for r in self.coords]
        object.__setattr__(self, "_mats", mats)

    def __call__(self, x):
        v = np.asarray(x, dtype=np.int64)
        return tuple(int((N @ v).min() - (D @ v).min()) for N, D in self._mats)

    def batch(self, X: np.ndarray) -> np.ndarray:
        cols = [(X @ N.T).min(axis=1) - (X @ D.T).min(axis=1) for N, D in self._mats]
        return np.stack(cols, axis=1)

    def to_json(self) -> dict:
        return {"k": self.k, "source": list(self.source), "target": list(self.target),
                "provenance": self.provenance, "coords": [r.to_json() for r in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "TropTransition":
        return cls(data["k"], tuple(data["source"]), tuple(data["target"]),
                   tuple(TropRatio.from_json(r) for r in data["coords"]), data.get("provenance", "derived"))


def _pattern(first: int, k: int) -> tuple:
    other = 3 - first
    L = {0: 2, 1: 3, 2: 4, 3: 6}[k]
    return tuple(first if t % 2 == 0 else other for t in range(L))


def _model(k: int):
    from .grouprep import defining_rep, product_rep_a1a1

    if k == 0:
        return product_rep_a1a1()
    return defining_rep(*{1: ("A", 2), 2: ("C", 2), 3: ("G", 2)}[k])


def derive_phi(k: int, first: int = 1, budget: int | None = None) -> TropTransition:
    """Solve the rank-2 factorization for the pattern starting with model letter ``first``."""
    from .grouprep import SYMBOLIC_TERM_BUDGET, chamber_solve

    if k not in (0, 1, 2, 3) or first not in (1, 2):
        raise InvalidInput("k must be 0..3 and the first letter 1 or 2")
    src = _pattern(first, k)
    tgt = _pattern(3 - first, k)
    sol = chamber_solve(_model(k), src, tgt, budget or SYMBOLIC_TERM_BUDGET)
    coords = tuple(tropicalize_ratio(d) for d in sol.d)
    return TropTransition(k, src, tgt, coords, f"chamber solve ({sol.check})")


def fixture_path(k: int, first: int) -> Path:
    return DATA / f"braid_k{k}_from{first}.json"


def write_fixture(k: int, first: int) -> Path:
    t = derive_phi(k, first)
    p = fixture_path(k, first)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(json.dumps(t.to_json(), separators=(",", ":")) + "\n")
    return p


@lru_cache(maxsize=None)
def load_transition(k: int, first: int) -> TropTransition:
    """Rank-2 cellular transition for the pattern (first, other, ...)."""
    if k in (0, 1):
        fn = _tensor_to_cellular(lambda b: phi01(k, b))
        src, tgt = _pattern(first, k), _pattern(3 - first, k)
        return _ClosedTransition(k, src, tgt, fn)
    p = fixture_path(k, first)
    if not p.exists():
        return derive_phi(k, first)
    return TropTransition.from_json(json.loads(p.read_text()))


class _ClosedTransition:
    def __init__(self, k, source, target, fn):
        self.k, self.source, self.target, self._fn = k, source, target, fn
        self.provenance = "closed form"

    def __call__(self, x):
        return self._fn(tuple(int(v) for v in x))

    def batch(self, X):
        return np.array([self(r) for r in X], dtype=np.int64)


def _model_first(c: CartanData, mv: BraidMove) -> int:
    """Which model letter plays the role of mv.i."""
    aij, aji = c.pairing(mv.i, mv.j), c.pairing(mv.j, mv.i)
    if mv.k in (0, 1):
        return 1
    model = _model(mv.k).a
    return 1 if model[0][1] == aij and model[1][0] == aji else 2


def apply_move(c: CartanData, word, x, mv: BraidMove):
    word = tuple(word)
    new_word = mv.apply(word)
    p = mv.position - 1
    t = load_transition(mv.k, _model_first(c, mv))
    window = t(x[p:p + mv.length])
    return new_word, tuple(x[:p]) + tuple(window) + tuple(x[p + mv.length:])


def apply_path(c: CartanData, word, x, path):
    """Transport a cellular point along braid moves; returns (final word, point)."""
    word, x = tuple(word), tuple(x)
    if len(x) != len(word):
        raise InvalidInput("point and word lengths differ")
    for mv in path:
        word, x = apply_move(c, word, x, mv)
    return word, x


def reverse_path(word, path) -> list[BraidMove]:
    return [mv.reverse() for mv in reversed(list(path))]


def transport(c: CartanData, word, x, target):
    return apply_path(c, word, x, word_graph_path(c, word, target))[1]


def omega(c: CartanData, word, x, i: int, end: str = "first", path=None) -> int:
    """First (or last) coordinate after moving to an i-leading (or i-ending) word."""
    word = tuple(word)
    if end == "first":
        path = path if path is not None else path_to_leading(c, word, i)
        return apply_path(c, word, x, path)[1][0]
    if end == "last":
        path = path if path is not None else _path_to_ending(c, word, i)
        return apply_path(c, word, x, path)[1][-1]
    raise InvalidInput("end must be 'first' or 'last'")


def _path_to_ending(c: CartanData, word, i: int):
    rev = tuple(reversed(word))
    p = path_to_leading(c, rev, i)
    L = len(word)
    return [BraidMove(L - mv.position - mv.length + 2, mv.i if mv.length % 2 else mv.j,
                      mv.j if mv.length % 2 else mv.i, mv.length) for mv in p]


def xi(c: CartanData, word, x, i: int, path=None):
    """Zero the first coordinate in an i-leading word and come back."""
    word = tuple(word)
    path = path if path is not None else path_to_leading(c, word, i)
    lead, y = apply_path(c, word, x, path)
    if lead[0] != i:
        raise InvalidInput("path does not lead to an i-leading word")
    y = (0,) + tuple(y[1:])
    return apply_path(c, lead, y, reverse_path(word, path))[1]


def leading_words(c: CartanData, word, i: int, limit: int = 2):
    """Up to ``limit`` distinct i-leading words with paths (for well-definedness tests)."""
    from .rootdata import braid_neighbors

    word = tuple(word)
    seen = {word: []}
    queue = [word]
    found = []
    while queue and len(found) < limit:
        w = queue.pop(0)
        if w[0] == i:
            found.append((w, seen[w]))
        for mv, nxt in braid_neighbors(c, w):
            if nxt not in seen:
                seen[nxt] = seen[w] + [mv]
                queue.append(nxt)
    return found


def transition_forms(t: TropTransition) -> list[TropForm]:
    return [r.num for r in t.coords] + [r.den for r in t.coords]

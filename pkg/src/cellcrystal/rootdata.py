"""Cartan data, weights and roots, and reduced-word combinatorics.

Conventions
-----------
* ``a[i][j] = <h_i, alpha_j>`` (0-based storage, 1-based letters everywhere
  in the public API).
* B_n: node n is short (``a[n][n-1] = -2``).  C_n: node n is long
  (``a[n-1][n] = -2``).  G2: ``[[2,-1],[-3,2]]``, node 2 is short.
* D_n: nodes n-1 and n both attach to n-2.
* E6: chain 1-2-3-4-5 with 6 attached to 3.  E7: chain 1-..-6 with 7 attached
  to 4.  E8: chain 1-..-7 with 8 attached to 5.
* F4: chain 1-2-3-4 with ``a[3][2] = -2`` (nodes 1, 2 long).

Weights are integer tuples in the fundamental-weight basis, roots are tuples
in the simple-root basis, and ``alpha_j = sum_i a[i][j] Lambda_i``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import BudgetExceeded, InvalidInput

WeightVec = tuple[int, ...]
RootVec = tuple[int, ...]
Word = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

WORD_GRAPH_CAP = 10**6

_E_EDGES = {
    6: [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)],
    7: [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)],
    8: [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
}

# Stored verbatim rather than generated.
_E6_WORD: Word = tuple(list(range(1, 7)) * 4 + [1, 2, 3, 4, 6, 1, 2, 3, 6, 1, 2, 1])


def _valid_rank(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


def _standard_matrix(family: str, rank: int) -> list[list[int]]:
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if family in ("A", "B", "C", "D"):
        for i in range(1, n - 1):
            link(i, i + 1)
        if family == "A" and n >= 2:
            link(n - 1, n)
        elif family == "B":
            link(n - 1, n, -1, -2)
        elif family == "C":
            link(n - 1, n, -2, -1)
        elif family == "D":
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0
            link(n - 2, n)
    elif family == "E":
        for i, j in _E_EDGES[n]:
            link(i, j)
    elif family == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif family == "G":
        link(1, 2, -1, -3)
    return a


@dataclass(frozen=True)
class CartanData:
    family: str
    rank: int
    a: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.rank
        if len(self.a) != n or any(len(row) != n for row in self.a):
            raise InvalidInput("Cartan matrix shape does not match rank")
        for i in range(n):
            if self.a[i][i] != 2:
                raise InvalidInput("diagonal entries must be 2")
            for j in range(n):
                if i != j:
                    if self.a[i][j] > 0:
                        raise InvalidInput("off-diagonal entries must be <= 0")
                    if (self.a[i][j] == 0) != (self.a[j][i] == 0):
                        raise InvalidInput("a_ij = 0 must match a_ji = 0")
        if not _valid_rank(self.family, n):
            raise InvalidInput(f"invalid type {self.family}{n}")
        std = _standard_matrix(self.family, n)
        allowed = [std, [list(r) for r in zip(*std)]]
        if self.family in ("B", "C"):
            allowed = [std]
        if [list(r) for r in self.a] not in allowed:
            raise InvalidInput(f"matrix does not match family {self.family}{n}")

    def pairing(self, i: int, j: int) -> int:
        """<h_i, alpha_j> with 1-based letters."""
        return self.a[i - 1][j - 1]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @cached_property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def alpha(self, j: int) -> WeightVec:
        """Simple root alpha_j in fundamental-weight coordinates."""
        return tuple(self.a[i][j - 1] for i in range(self.rank))

    def root_to_weight(self, r: RootVec) -> WeightVec:
        return tuple(sum(self.a[i][j] * r[j] for j in range(self.rank)) for i in range(self.rank))

    def reflect_root(self, i: int, r: RootVec) -> RootVec:
        """s_i(beta) = beta - <h_i, beta> alpha_i on root coordinates."""
        p = sum(self.a[i - 1][j] * r[j] for j in range(self.rank))
        out = list(r)
        out[i - 1] -= p
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[RootVec, ...]:
        n = self.rank
        simple = [tuple(int(k == j) for k in range(n)) for j in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            r = queue.popleft()
            for i in self.index_set:
                s = self.reflect_root(i, r)
                if all(c >= 0 for c in s) and s not in seen:
                    seen.add(s)
                    queue.append(s)
        return tuple(sorted(seen, key=lambda r: (sum(r), r)))

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank, "a": [list(r) for r in self.a]}


def cartan_matrix(family: str, rank: int) -> CartanData:
    family = family.upper()
    if family not in FAMILIES or not _valid_rank(family, rank):
        raise InvalidInput(f"invalid family/rank pair ({family}, {rank})")
    return CartanData(family, rank, tuple(tuple(r) for r in _standard_matrix(family, rank)))


def langlands_dual(c: CartanData) -> CartanData:
    fam = {"B": "C", "C": "B"}.get(c.family, c.family)
    return CartanData(fam, c.rank, tuple(zip(*c.a)))


def reflect(c: CartanData, i: int, w: WeightVec) -> WeightVec:
    """s_i(lambda) = lambda - <h_i, lambda> alpha_i in fundamental-weight coordinates."""
    p = w[i - 1]
    al = c.alpha(i)
    return tuple(w[k] - p * al[k] for k in range(c.rank))


def _check_letters(c: CartanData, word) -> Word:
    word = tuple(int(x) for x in word)
    if any(not 1 <= x <= c.rank for x in word):
        raise InvalidInput(f"letters out of range for {c.name}: {word}")
    return word


def word_roots(c: CartanData, word) -> list[RootVec]:
    """alpha^(k) = s_{i_N} ... s_{i_{k+1}}(alpha_{i_k}) for every position k."""
    word = _check_letters(c, word)
    out = []
    for k, ik in enumerate(word):
        r = tuple(int(t == ik - 1) for t in range(c.rank))
        for il in word[k + 1:]:
            r = c.reflect_root(il, r)
        out.append(r)
    return out


def is_reduced(c: CartanData, word) -> bool:
    return all(all(x >= 0 for x in r) for r in word_roots(c, word))


def is_longest(c: CartanData, word) -> bool:
    return len(word) == c.num_positive_roots and is_reduced(c, word)


def positive_roots_from_word(c: CartanData, word) -> list[RootVec]:
    if not is_longest(c, word):
        raise InvalidInput("word is not a reduced longest word")
    return word_roots(c, word)


def canonical_longest_word(family: str, rank: int) -> Word:
    c = cartan_matrix(family, rank)
    n = c.rank
    f = c.family
    if f == "A":
        word: list[int] = []
        for top in range(n, 0, -1):
            word.extend(range(1, top + 1))
        return tuple(word)
    cycle = tuple(range(1, n + 1))
    if f in ("B", "C"):
        return cycle * n
    if f == "D":
        return cycle * (n - 1)
    if f == "G":
        return (1, 2) * 3
    if f == "E":
        return {6: _E6_WORD, 7: cycle * 9, 8: cycle * 15}[n]
    return cycle * 6  # F4


def kplus(word, k: int) -> int | None:
    """Next position (1-based) carrying the same letter as position k, or None."""
    letter = word[k - 1]
    for l in range(k + 1, len(word) + 1):
        if word[l - 1] == letter:
            return l
    return None


def kminus(word, k: int) -> int:
    """Previous position carrying the same letter, or 0 for a first occurrence."""
    letter = word[k - 1]
    for l in range(k - 1, 0, -1):
        if word[l - 1] == letter:
            return l
    return 0


def braid_length(c: CartanData, i: int, j: int) -> int:
    return {0: 2, 1: 3, 2: 4, 3: 6}[c.pairing(i, j) * c.pairing(j, i)]


@dataclass(frozen=True)
class BraidMove:
    """Replace the alternating pattern i j i ... (length ``length``) at ``position``."""

    position: int  # 1-based start
    i: int
    j: int
    length: int

    @property
    def k(self) -> int:
        return {2: 0, 3: 1, 4: 2, 6: 3}[self.length]

    def source(self) -> Word:
        return tuple(self.i if t % 2 == 0 else self.j for t in range(self.length))

    def target(self) -> Word:
        return tuple(self.j if t % 2 == 0 else self.i for t in range(self.length))

    def apply(self, word) -> Word:
        p = self.position - 1
        if tuple(word[p:p + self.length]) != self.source():
            raise InvalidInput(f"move {self} does not match word {tuple(word)}")
        return tuple(word[:p]) + self.target() + tuple(word[p + self.length:])

    def reverse(self) -> "BraidMove":
        return BraidMove(self.position, self.j, self.i, self.length)

    def to_json(self) -> dict:
        return {"position": self.position, "pattern": self.k, "from": list(self.source()),
                "to": list(self.target())}


def braid_neighbors(c: CartanData, word: Word):
    for p in range(len(word) - 1):
        i, j = word[p], word[p + 1]
        if i == j:
            continue
        m = braid_length(c, i, j)
        mv = BraidMove(p + 1, i, j, m)
        if tuple(word[p:p + m]) == mv.source():
            yield mv, mv.apply(word)


def _bfs_words(c: CartanData, start: Word, goal, cap: int = WORD_GRAPH_CAP) -> list[BraidMove]:
    parent: dict[Word, tuple[Word, BraidMove] | None] = {start: None}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if goal(w):
            path = []
            while parent[w] is not None:
                prev, mv = parent[w]
                path.append(mv)
                w = prev
            return path[::-1]
        for mv, nxt in braid_neighbors(c, w):
            if nxt not in parent:
                parent[nxt] = (w, mv)
                if len(parent) > cap:
                    raise BudgetExceeded("word-graph search exceeded its cap")
                queue.append(nxt)
    raise InvalidInput("words are not equivalent (different Weyl elements)")


def word_graph_path(c: CartanData, word_from, word_to) -> list[BraidMove]:
    a = _check_letters(c, word_from)
    b = _check_letters(c, word_to)
    if len(a) != len(b) or not is_reduced(c, a) or not is_reduced(c, b):
        raise InvalidInput("both words must be reduced of equal length")
    return _bfs_words(c, a, lambda w: w == b)


def path_to_leading(c: CartanData, word, i: int) -> list[BraidMove]:
    """Shortest braid path to some word whose first letter is i."""
    return _bfs_words(c, _check_letters(c, word), lambda w: w[0] == i)


def replay(word, path) -> Word:
    w = tuple(word)
    for mv in path:
        w = mv.apply(w)
    return w


def weyl_act_weight(c: CartanData, word, w: WeightVec) -> WeightVec:
    """(s_{i_1} ... s_{i_k})(w), rightmost reflection first."""
    for i in reversed(tuple(word)):
        w = reflect(c, i, w)
    return w


def weyl_act_root(c: CartanData, word, r: RootVec) -> RootVec:
    for i in reversed(tuple(word)):
        r = c.reflect_root(i, r)
    return r


def partner_index(c: CartanData, word) -> int:
    """The k with -alpha_k = w0(alpha_{i_1})."""
    if not is_longest(c, word):
        raise InvalidInput("word is not a reduced longest word")
    r = tuple(int(t == word[0] - 1) for t in range(c.rank))
    img = weyl_act_root(c, word, r)
    for k in c.index_set:
        if img == tuple(-int(t == k - 1) for t in range(c.rank)):
            return k
    raise AssertionError("w0 did not send a simple root to a negative simple root")


def word_json(c: CartanData, word) -> str:
    return json.dumps({"family": c.family, "rank": c.rank, "word": list(word)})


def parse_word(text: str) -> Word:
    """Accept ``121``, ``1,2,1`` or ``1 2 1``."""
    text = text.strip()
    if "," in text or " " in text:
        return tuple(int(t) for t in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)

"""Polyhedral realization of B(infinity) inside Z^infinity_iota.

Sequences are finitely supported and stored as tuples without trailing zeros;
linear forms are sparse maps ``{k: coefficient}`` frozen as sorted tuples.
Everything works for the Cartan matrix it is given, so pass the Langlands
dual when comparing against cellular crystals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crystalcore import ZERO, Crystal, alpha, as_cartan, wadd
from .errors import InvalidInput

Form = tuple[tuple[int, int], ...]

XI_FORM_CAP = 10**4
XI_STEP_CAP = 50


def trim(x) -> tuple[int, ...]:
    x = list(x)
    while x and x[-1] == 0:
        x.pop()
    return tuple(x)


@dataclass(frozen=True)
class Iota:
    """Periodic index sequence iota(k) = cycle[(k-1) mod n]."""

    cycle: tuple[int, ...]
    rank: int

    def __post_init__(self):
        c = tuple(self.cycle)
        object.__setattr__(self, "cycle", c)
        if set(c) != set(range(1, self.rank + 1)):
            raise InvalidInput("every index must occur in the cycle")
        if any(c[k] == c[(k + 1) % len(c)] for k in range(len(c))) and len(c) > 1:
            raise InvalidInput("consecutive letters of iota must differ")
        if len(c) == 1:
            raise InvalidInput("iota = (i, i, ...) repeats a letter consecutively")

    def __call__(self, k: int) -> int:
        return self.cycle[(k - 1) % len(self.cycle)]

    @property
    def period(self) -> int:
        return len(self.cycle)

    def kplus(self, k: int) -> int:
        i = self(k)
        j = k + 1
        while self(j) != i:
            j += 1
        return j

    def kminus(self, k: int) -> int:
        i = self(k)
        j = k - 1
        while j >= 1 and self(j) != i:
            j -= 1
        return max(j, 0)


def cyclic_iota(rank: int) -> Iota:
    return Iota(tuple(range(1, rank + 1)), rank)


def _get(x, k: int) -> int:
    return x[k - 1] if 1 <= k <= len(x) else 0


def sigma_k(a, iota: Iota, x, k: int) -> int:
    """sigma_k(x) = x_k + sum_{j>k} <h_{i_k}, alpha_{i_j}> x_j."""
    ik = iota(k)
    return _get(x, k) + sum(a[ik - 1][iota(j) - 1] * _get(x, j) for j in range(k + 1, len(x) + 1))


def _window(x, iota: Iota) -> int:
    return len(x) + iota.period


def sigma_i(a, iota: Iota, x, i: int) -> tuple[int, int, int]:
    """(sigma^{(i)}(x), m_f, m_e): the max and the first/last position attaining it."""
    best, mf, me = None, None, None
    for k in range(1, _window(x, iota) + 1):
        if iota(k) != i:
            continue
        s = sigma_k(a, iota, x, k)
        if best is None or s > best:
            best, mf, me = s, k, k
        elif s == best:
            me = k
    return best, mf, me


def zinf_f(a, iota: Iota, x, i: int):
    _, mf, _ = sigma_i(a, iota, x, i)
    y = list(x) + [0] * max(0, mf - len(x))
    y[mf - 1] += 1
    return trim(y)


def zinf_e(a, iota: Iota, x, i: int):
    s, _, me = sigma_i(a, iota, x, i)
    if s <= 0:
        return ZERO
    y = list(x)
    y[me - 1] -= 1
    return trim(y)


class PolyhedralCrystal(Crystal):
    """The crystal Z^infinity_iota: wt = -sum x_k alpha_{i_k}, eps_i = sigma^{(i)}."""

    def __init__(self, a, iota: Iota):
        self.a = as_cartan(a)
        if iota.rank != len(self.a):
            raise InvalidInput("iota rank does not match the Cartan matrix")
        self.iota = iota

    def wt(self, x):
        out = (0,) * self.rank
        for k, v in enumerate(x, start=1):
            if v:
                out = wadd(out, alpha(self.a, self.iota(k)), -v)
        return out

    def eps(self, x, i: int):
        return sigma_i(self.a, self.iota, x, i)[0]

    def e(self, x, i: int):
        return zinf_e(self.a, self.iota, x, i)

    def f(self, x, i: int):
        return zinf_f(self.a, self.iota, x, i)


# -------------------------------------------------------------- linear forms
def form(d: dict[int, int]) -> Form:
    return tuple(sorted((k, v) for k, v in d.items() if v))


def form_eval(phi: Form, x) -> int:
    return sum(v * _get(x, k) for k, v in phi)


def coord_form(k: int) -> Form:
    return ((k, 1),)


def beta_form(a, iota: Iota, k: int) -> Form:
    """beta_k = x_k + sum_{k<j<k+} <h_{i_k}, alpha_{i_j}> x_j + x_{k+}; beta_0 = 0."""
    if k == 0:
        return ()
    ik = iota(k)
    kp = iota.kplus(k)
    d = {k: 1, kp: 1}
    for j in range(k + 1, kp):
        d[j] = d.get(j, 0) + a[ik - 1][iota(j) - 1]
    return form(d)


def _axpy(phi: Form, s: int, psi: Form) -> Form:
    d = dict(phi)
    for k, v in psi:
        d[k] = d.get(k, 0) + s * v
    return form(d)


def S_k(a, iota: Iota, phi: Form, k: int) -> Form:
    """phi - phi_k beta_k if phi_k > 0, else phi - phi_k beta_{k-}."""
    c = dict(phi).get(k, 0)
    if c > 0:
        return _axpy(phi, -c, beta_form(a, iota, k))
    if c < 0:
        return _axpy(phi, -c, beta_form(a, iota, iota.kminus(k)))
    return phi


@dataclass
class XiResult:
    forms: set
    stabilized: bool
    window: int
    positivity: bool

    def to_json(self) -> list:
        return [{str(k): v for k, v in f} for f in sorted(self.forms)]


def positivity_holds(iota: Iota, forms) -> bool:
    """If k- = 0 then phi_k >= 0, for every form."""
    return all(v >= 0 for f in forms for k, v in f if iota.kminus(k) == 0)


def generate_Xi(a, iota: Iota, window: int, form_cap: int = XI_FORM_CAP,
                step_cap: int = XI_STEP_CAP) -> XiResult:
    """Closure of the coordinate forms x_1..x_window under S_k for k <= window."""
    a = as_cartan(a)
    seen = {coord_form(k) for k in range(1, window + 1)}
    frontier = list(seen)
    stable = False
    for _ in range(step_cap):
        new = []
        for phi in frontier:
            for k, _v in phi:
                if k > window:
                    continue
                psi = S_k(a, iota, phi, k)
                if psi and psi not in seen:
                    seen.add(psi)
                    new.append(psi)
                    if len(seen) > form_cap:
                        return XiResult(seen, False, window, positivity_holds(iota, seen))
        if not new:
            stable = True
            break
        frontier = new
    return XiResult(seen, stable, window, positivity_holds(iota, seen))


def sigma_membership(x, xi: XiResult) -> bool:
    return all(form_eval(f, x) >= 0 for f in xi.forms)


def membership_label(xi: XiResult) -> str:
    if not xi.stabilized:
        return "closure not stabilized within the cap"
    if not xi.positivity:
        return "positivity hypothesis violated"
    return "ok"

"""Oscillation-aware quadrature for integrals f(t)*cos(xt) or f(t)*sin(xt) on [0, 1].

Internal engine, not part of the public API. The strategy:

  * split [0, 1] at the kernel's half-period lattice t = j*pi/x (the extrema
    of cos/sin), plus any declared interior breakpoints of the weight;
  * on smooth interior panels apply a fixed Gauss-Kronrod (7, 15) pair, with
    the |K15 - G7| difference as the panel error estimate;
  * on panels touching an endpoint where the weight is singular or merely
    non-smooth, use a tanh-sinh (double exponential) rule whose nodes are
    stored as exact distances from the endpoint, so algebraic endpoint
    singularities like t**(-0.9) are sampled without catastrophic rounding;
  * accumulate panel sums with Neumaier compensation.

Weights are evaluated through a two-argument callable w2(t, one_minus_t) so
densities singular at t=1 see the exact distance to that endpoint instead of
the rounded 1-t.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import QuadratureError

# ---------------------------------------------------------------------------
# compensated accumulation
# ---------------------------------------------------------------------------


class CompensatedSum:
    """Neumaier variant of Kahan summation; exact to one final rounding for
    the magnitude ranges that arise here."""

    __slots__ = ("s", "c")

    def __init__(self) -> None:
        self.s = 0.0
        self.c = 0.0

    def add(self, x: float) -> None:
        t = self.s + x
        if abs(self.s) >= abs(x):
            self.c += (self.s - t) + x
        else:
            self.c += (x - t) + self.s
        self.s = t

    @property
    def total(self) -> float:
        return self.s + self.c


def neumaier_sum(values) -> float:
    acc = CompensatedSum()
    for v in values:
        acc.add(float(v))
    return acc.total


# ---------------------------------------------------------------------------
# Gauss-Kronrod (7, 15) on [-1, 1]
# ---------------------------------------------------------------------------

# Kronrod nodes (positive half, descending) and weights; Gauss-7 weights sit
# on nodes 1, 3, 5 and the center.
_XGK_HALF = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK_HALF = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG_HALF = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _build_gk() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    nodes = [-x for x in _XGK_HALF[:7]] + [0.0] + [x for x in reversed(_XGK_HALF[:7])]
    wk = list(_WGK_HALF[:7]) + [_WGK_HALF[7]] + list(reversed(_WGK_HALF[:7]))
    wg = [0.0] * 15
    # Gauss nodes are every second Kronrod node, center included
    for i, j in enumerate((1, 3, 5)):
        wg[j] = _WG_HALF[i]
        wg[14 - j] = _WG_HALF[i]
    wg[7] = _WG_HALF[3]
    return np.array(nodes), np.array(wk), np.array(wg)


_GK_NODES, _GK_WK, _GK_WG = _build_gk()


# ---------------------------------------------------------------------------
# tanh-sinh node tables
# ---------------------------------------------------------------------------

# Node positions are kept as distances d_j from the nearer endpoint of the
# standard interval [0, 1]: d_j = 1/(1 + exp(2*z_j)) with z_j = (pi/2)*sinh(j*h).
# Exponents of integrable singularities exceed -1, so truncating once
# d_j < 1e-290 (z_j > ~334) or j*h > 6.2 loses nothing at float64 scale.


@lru_cache(maxsize=None)
def _de_table(level: int) -> tuple[np.ndarray, np.ndarray, float]:
    """Distances from the endpoint, weights, and the center weight for the
    tanh-sinh rule with step h = 2**-level on [0, 1]. Arrays cover j = 1..J."""
    h = 2.0 ** (-level)
    dist = []
    wts = []
    j = 1
    while True:
        jh = j * h
        if jh > 6.2:
            break
        z = 0.5 * math.pi * math.sinh(jh)
        if z > 334.0:
            break
        e = math.exp(-2.0 * z)
        d = e / (1.0 + e)
        w = 0.5 * h * (0.5 * math.pi) * math.cosh(jh) / (math.cosh(z) ** 2)
        if d < 1e-290 or w < 1e-290:
            break
        dist.append(d)
        wts.append(w)
        j += 1
    w0 = 0.5 * h * (0.5 * math.pi)
    return np.array(dist), np.array(wts), w0


def _de_panel(w2, kernel, x: float, a: float, b: float, panel_tol: float):
    """tanh-sinh integration of w(t)*kernel(x t) over [a, b].

    Node t-values near each end are formed from exact distances so endpoint
    singularities of w are sampled correctly. Levels are refined (reusing all
    previous nodes) until two successive estimates agree within panel_tol.
    Returns (value, error_estimate).
    """
    width = b - a
    one_minus_b = 1.0 - b

    def level_sums(level: int, odd_only: bool) -> float:
        dist, wts, w0 = _de_table(level)
        if odd_only:
            dist = dist[::2]  # odd j of this level = new nodes vs level-1
            wts = wts[::2]
        d = width * dist
        # left-end nodes: t = a + d ; right-end nodes: t = b - d
        tl = a + d
        tr = b - d
        om_l = one_minus_b + (width - d)   # 1 - tl, formed stably
        om_r = one_minus_b + d             # 1 - tr, exact when b == 1
        fl = w2(tl, om_l) * kernel(x * tl)
        fr = w2(tr, om_r) * kernel(x * tr)
        s = float(np.dot(wts, fl) + np.dot(wts, fr))
        if not odd_only:
            tc = a + 0.5 * width
            s += w0 * float(w2(np.array([tc]), np.array([1.0 - tc]))[0]
                            * kernel(x * tc))
        return s

    # level 2 from scratch; each deeper level adds the odd-index nodes and
    # halves the previously accumulated weighted sum
    prev = width * level_sums(2, odd_only=False)
    est = abs(prev)
    for level in (3, 4, 5, 6):
        add = level_sums(level, odd_only=True)
        cur = 0.5 * prev + width * add
        est = abs(cur - prev)
        prev = cur
        if est <= panel_tol:
            break
    return prev, max(est * 0.5, 1e-17 * abs(prev))


# ---------------------------------------------------------------------------
# panel assembly
# ---------------------------------------------------------------------------


def _gk_batch(w2, kernel, x: float, lows: np.ndarray, highs: np.ndarray):
    """Vectorized G7/K15 over many panels at once. Returns (values, errors)."""
    n = lows.size
    half = 0.5 * (highs - lows)
    mid = 0.5 * (highs + lows)
    # nodes laid out as an (n, 15) grid flattened once
    t = (mid[:, None] + half[:, None] * _GK_NODES[None, :]).reshape(-1)
    f = w2(t, 1.0 - t) * kernel(x * t)
    f = f.reshape(n, 15)
    k15 = f @ _GK_WK
    g7 = f @ _GK_WG
    vals = half * k15
    errs = np.abs(half * (k15 - g7))
    return vals, errs


def oscillatory_integral(w2, x: float, kernel: str, *,
                         singular_at_0: bool = False,
                         singular_at_1: bool = False,
                         breakpoints: tuple[float, ...] = (),
                         tol: float = 1e-10) -> tuple[float, float]:
    """Integrate w(t)*cos(xt) or w(t)*sin(xt) over [0, 1].

    w2(t_array, one_minus_t_array) must accept numpy arrays of interior
    points and return the weight values. Returns (value, error_estimate);
    raises QuadratureError if the estimate cannot be brought under tol
    within the refinement budget.
    """
    ker = np.cos if kernel == "cos" else np.sin

    lattice = []
    if x > math.pi:
        half = math.pi / x
        jmax = int(x / math.pi)
        lattice = [j * half for j in range(1, jmax + 1)
                   if 1e-12 < j * half < 1.0 - 1e-12]
        # a sliver of a panel against a singular endpoint would leave the
        # neighboring smooth panel too close to the singularity for the
        # fixed rule; absorb it into the double-exponential end panel
        if singular_at_1:
            while lattice and 1.0 - lattice[-1] < 0.5 * half:
                lattice.pop()
    cuts = {0.0, 1.0}
    cuts.update(lattice)
    for bp in breakpoints:
        if 0.0 < bp < 1.0:
            cuts.add(float(bp))
    edges = sorted(cuts)

    total = CompensatedSum()
    err_total = 0.0
    n_panels = len(edges) - 1
    # per-panel tolerance target; end panels get the larger share since the
    # tanh-sinh estimate is the one that actually adapts
    panel_tol = tol / max(4.0, n_panels)

    gk_lo: list[float] = []
    gk_hi: list[float] = []
    for i in range(n_panels):
        a, b = edges[i], edges[i + 1]
        de = (i == 0 and singular_at_0) or (i == n_panels - 1 and singular_at_1)
        if de:
            v, e = _de_panel(w2, ker, x, a, b, panel_tol)
            total.add(v)
            err_total += e
        else:
            gk_lo.append(a)
            gk_hi.append(b)

    if gk_lo:
        lows = np.array(gk_lo)
        highs = np.array(gk_hi)
        vals, errs = _gk_batch(w2, ker, x, lows, highs)
        # refine the worst panels by splitting; grading toward a steep end
        # takes one round per halving, so allow a decent number
        for _ in range(12):
            bad = errs > panel_tol
            if not bad.any() or lows.size > 512:
                break
            keep_v = vals[~bad]
            keep_e = errs[~bad]
            lo_b, hi_b = lows[bad], highs[bad]
            mid_b = 0.5 * (lo_b + hi_b)
            lows = np.concatenate([lows[~bad], lo_b, mid_b])
            highs = np.concatenate([highs[~bad], mid_b, hi_b])
            v2, e2 = _gk_batch(w2, ker, x, lows[keep_v.size:], highs[keep_v.size:])
            vals = np.concatenate([keep_v, v2])
            errs = np.concatenate([keep_e, e2])
        for v in vals:
            total.add(float(v))
        err_total += float(errs.sum())

    value = total.total
    if err_total > max(tol, 1e-15 * (1.0 + abs(value))) * 10.0:
        raise QuadratureError(
            f"quadrature error estimate {err_total:.3e} exceeds tolerance {tol:.3e}",
            value=value, error_estimate=err_total)
    return value, err_total


def plain_integral(w2, *, singular_at_0: bool = False,
                   singular_at_1: bool = False,
                   breakpoints: tuple[float, ...] = (),
                   tol: float = 1e-12) -> tuple[float, float]:
    """Integral of the weight alone (kernel = 1), used for moments of custom
    densities."""
    return oscillatory_integral(w2, 0.0, "cos",
                                singular_at_0=singular_at_0,
                                singular_at_1=singular_at_1,
                                breakpoints=breakpoints, tol=tol)

"""Conformal minimal disks from polynomial Weierstrass data, with margin checks.

A surface is built from two complex polynomials ``p`` and ``q`` through the
component triple Phi = (p(1 - q^2)/2, i p(1 + q^2)/2, p q), whose square-sum
vanishes identically — the null condition that makes the parametrization
conformal and the surface minimal.  The map into R^3 is
F(z) = base + Re A(z) where A is the exact polynomial antiderivative of Phi
with A(0) = 0, so evaluation is closed-form and path-independence is
automatic.

Convention: dF/dz = Phi/2, so F_x = Re Phi and F_y = -Im Phi, and the
conformal factor is lambda = |p| (1 + |q|^2) / 2.  The metric audit check
measures this convention constant instead of assuming one.

Checks cover the null condition, isothermal identities, the Gauss normal,
an interior pseudo-hyperbolic growth bound, hyperbolic distance decrease
from the disk to the ball, the boundary conformal-factor lower bound, the
half-sphere minimum-modulus chain, and an inverse Lipschitz estimate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import legendre
from numpy.polynomial import polynomial as P

from .ballgeom import cayley_klein_dist, poincare_dist, vnorm
from .holodisk import BOUNDARY_GRID, INTERIOR_GRID, _boundary_param
from .reports import DomainError, InequalityReport, make_report

# Composite Gauss rule used for arc-length and antiderivative validation.
QUAD_PANELS = 8
QUAD_NODES = 8

_BALL_SLACK = 1e-10


def _coeffs(c) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(c, dtype=complex))
    if arr.ndim != 1 or arr.shape[0] == 0:
        raise DomainError("polynomial data must be a nonempty coefficient vector")
    return arr


def _boundary_grid(n: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


class WeierstrassDisk:
    """Polynomial Weierstrass data (p, q) plus a real translation of the image.

    Parameters
    ----------
    p, q : array_like
        Ascending complex coefficient lists.
    base : array_like, optional
        Real 3-vector F(0); defaults to the origin.
    halfsphere : bool, optional
        Declares that the Gauss map stays in the upper half-sphere
        (equivalently max |q| < 1 on the closed disk); verified on a
        boundary grid at construction.
    """

    def __init__(self, p, q, base=(0.0, 0.0, 0.0), halfsphere: bool = False) -> None:
        self.p = _coeffs(p)
        self.q = _coeffs(q)
        self.base = np.asarray(base, dtype=float)
        if self.base.shape != (3,):
            raise DomainError("base must be a real 3-vector")
        self.halfsphere = bool(halfsphere)
        q2 = P.polymul(self.q, self.q)
        self.phi = [
            0.5 * P.polysub(self.p, P.polymul(self.p, q2)),
            0.5j * P.polyadd(self.p, P.polymul(self.p, q2)),
            P.polymul(self.p, self.q),
        ]
        self.antiderivative = [P.polyint(c) for c in self.phi]
        if self.halfsphere:
            worst = float(np.max(np.abs(P.polyval(_boundary_grid(BOUNDARY_GRID), self.q))))
            if worst >= 1.0:
                raise DomainError(f"half-sphere flag requires |q| < 1 on the closed disk; boundary max {worst:.6g}")

    # -- raw evaluation -----------------------------------------------------

    def phi_values(self, z):
        """The holomorphic component triple at ``z``: (3,) or (N, 3) complex."""
        zs = np.atleast_1d(np.asarray(z, dtype=complex))
        out = np.stack([P.polyval(zs, c) for c in self.phi], axis=-1)
        return out[0] if np.ndim(z) == 0 else out

    def eval(self, z):
        """Surface position base + Re A(z): (3,) or (N, 3) real."""
        zs = np.atleast_1d(np.asarray(z, dtype=complex))
        out = self.base + np.stack([np.real(P.polyval(zs, c)) for c in self.antiderivative], axis=-1)
        return out[0] if np.ndim(z) == 0 else out

    __call__ = eval

    def partials(self, z):
        """Cartesian partials (F_x, F_y) with F_x = Re Phi, F_y = -Im Phi."""
        phi = self.phi_values(z)
        return np.real(phi), -np.imag(phi)

    def conformal_factor(self, z):
        """lambda(z) = |p(z)| (1 + |q(z)|^2) / 2: float or (N,) array."""
        zs = np.atleast_1d(np.asarray(z, dtype=complex))
        pv = np.abs(P.polyval(zs, self.p))
        qv = np.abs(P.polyval(zs, self.q))
        lam = 0.5 * pv * (1.0 + qv * qv)
        return float(lam[0]) if np.ndim(z) == 0 else lam

    def gauss_normal(self, z):
        """Unit vector (2 Re q, 2 Im q, 1 - |q|^2) / (1 + |q|^2).

        Always unit length, with third component positive exactly where
        |q| < 1.  Note this is the mirror image (through the horizontal
        plane) of the vector orthogonal to the surface for the sign
        conventions used by :meth:`partials`; callers needing the metric
        normal should flip the sign of the third component.
        """
        zs = np.atleast_1d(np.asarray(z, dtype=complex))
        qv = P.polyval(zs, self.q)
        denom = 1.0 + np.abs(qv) ** 2
        n = np.stack([2.0 * np.real(qv), 2.0 * np.imag(qv), 1.0 - np.abs(qv) ** 2], axis=-1) / denom[..., None]
        return n[0] if np.ndim(z) == 0 else n

    # -- structure certificates ----------------------------------------------

    def null_residual(self) -> float:
        """Max coefficient magnitude of Phi_1^2 + Phi_2^2 + Phi_3^2."""
        total = np.zeros(1, dtype=complex)
        for c in self.phi:
            total = P.polyadd(total, P.polymul(c, c))
        return float(np.max(np.abs(total)))

    def immersion_winding(self, n_grid: int = BOUNDARY_GRID) -> int:
        """Number of zeros of p in the disk, by boundary argument counting."""
        vals = P.polyval(_boundary_grid(n_grid), self.p)
        if np.any(np.abs(vals) < 1e-14):
            raise DomainError("p vanishes on the boundary grid; zero count undefined")
        steps = np.angle(np.roll(vals, -1) / vals)
        return int(round(float(np.sum(steps)) / (2.0 * np.pi)))

    def max_norm(self, n_boundary: int = BOUNDARY_GRID, n_interior: int = INTERIOR_GRID) -> float:
        """Max of ||F|| over boundary and interior polar grids."""
        worst = float(np.max(vnorm(self.eval(_boundary_grid(n_boundary)))))
        radii = np.linspace(0.0, 1.0, n_interior, endpoint=False)
        thetas = 2.0 * np.pi * np.arange(n_interior) / n_interior
        zs = (radii[:, None] * np.exp(1j * thetas)[None, :]).ravel()
        return max(worst, float(np.max(vnorm(self.eval(zs)))))

    def __repr__(self) -> str:
        def fmt(arr):
            return "[" + ", ".join(repr(complex(c)) for c in arr) + "]"

        base = "[" + ", ".join(repr(float(x)) for x in self.base) + "]"
        return f"WeierstrassDisk(p={fmt(self.p)}, q={fmt(self.q)}, base={base}, halfsphere={self.halfsphere!r})"


@dataclass(frozen=True)
class SurfacePoint:
    """Position and first-order data of the surface at one parameter value."""

    z: complex
    position: np.ndarray
    f_x: np.ndarray
    f_y: np.ndarray
    f_r: np.ndarray
    f_t: np.ndarray
    conformal_factor: float


def surface_point(w: WeierstrassDisk, z) -> SurfacePoint:
    """Exact partials at one nonzero parameter, in Cartesian and polar form."""
    z = complex(z)
    if z == 0:
        raise DomainError("polar partials are undefined at the parameter origin")
    f_x, f_y = w.partials(z)
    r, t = abs(z), np.angle(z)
    f_r = f_x * np.cos(t) + f_y * np.sin(t)
    f_t = r * (-f_x * np.sin(t) + f_y * np.cos(t))
    return SurfacePoint(
        z=z,
        position=w.eval(z),
        f_x=f_x,
        f_y=f_y,
        f_r=f_r,
        f_t=f_t,
        conformal_factor=w.conformal_factor(z),
    )


# ---------------------------------------------------------------------------
# identity checks


def null_condition_report(w: WeierstrassDisk, tolerances=None) -> InequalityReport:
    """Coefficient-level residual of the square-sum cancellation."""
    res = w.null_residual()
    return make_report(
        "null_condition", repr(w), lhs=res, rhs=0.0, margin=res, equality=True, tolerances=tolerances
    )


def isothermal_report(w: WeierstrassDisk, zs, tolerances=None) -> InequalityReport:
    """Max deviation from the isothermal identities over a parameter batch.

    Checks ||F_x|| = ||F_y|| = lambda, <F_x, F_y> = 0, ||F_r|| = lambda and
    ||F_t|| = r lambda (polar identities at nonzero parameters only).
    """
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    f_x, f_y = w.partials(zs)
    lam = w.conformal_factor(zs)
    res_x = np.abs(vnorm(f_x) - lam)
    res_y = np.abs(vnorm(f_y) - lam)
    res_dot = np.abs(np.sum(f_x * f_y, axis=-1))
    worst = float(max(res_x.max(), res_y.max(), res_dot.max()))
    nz = zs[np.abs(zs) > 0]
    if nz.size:
        r, t = np.abs(nz), np.angle(nz)
        f_x, f_y = w.partials(nz)
        lam = w.conformal_factor(nz)
        f_r = f_x * np.cos(t)[:, None] + f_y * np.sin(t)[:, None]
        f_t = r[:, None] * (-f_x * np.sin(t)[:, None] + f_y * np.cos(t)[:, None])
        worst = max(worst, float(np.max(np.abs(vnorm(f_r) - lam))))
        worst = max(worst, float(np.max(np.abs(vnorm(f_t) - r * lam))))
    return make_report(
        "isothermal",
        repr(w),
        lhs=worst,
        rhs=0.0,
        margin=worst,
        equality=True,
        tolerances=tolerances,
        extra={"sample_count": int(zs.size)},
    )


def metric_identity_audit(w: WeierstrassDisk, z):
    """Measured lambda^2, the bare product |p|^2 (1 + |q|^2)^2, and their ratio.

    The ratio exposes the convention constant relating the conformal factor
    to the raw Weierstrass data; points where p vanishes yield NaN ratios.
    """
    zs = np.atleast_1d(np.asarray(z, dtype=complex))
    f_x, _ = w.partials(zs)
    lam_sq = vnorm(f_x) ** 2
    pv = np.abs(P.polyval(zs, w.p))
    qv = np.abs(P.polyval(zs, w.q))
    rhs = pv**2 * (1.0 + qv**2) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(rhs > 0, lam_sq / rhs, np.nan)
    if np.ndim(z) == 0:
        return float(lam_sq[0]), float(rhs[0]), float(ratio[0])
    return lam_sq, rhs, ratio


# ---------------------------------------------------------------------------
# inequality checks


def _require_in_ball(w: WeierstrassDisk) -> None:
    worst = w.max_norm()
    if worst > 1.0 + _BALL_SLACK:
        raise DomainError(f"surface image leaves the unit ball: max grid norm {worst:.12g}")


def interior_growth_margin(w: WeierstrassDisk, a, tolerances=None, certify: bool = True) -> InequalityReport:
    """Pseudo-hyperbolic growth bound ||F(a)|| <= (|a| + r0)/(1 + |a| r0).

    ``r0 = ||F(0)||``; requires the image to stay in the closed unit ball
    (grid-certified unless ``certify`` is disabled by a caller that already
    certified the surface).
    """
    a = complex(a)
    if abs(a) >= 1.0:
        raise DomainError("interior growth bound needs |a| < 1")
    if certify:
        _require_in_ball(w)
    r0 = float(vnorm(w.eval(0j)))
    val = float(vnorm(w.eval(a)))
    bound = (abs(a) + r0) / (1.0 + abs(a) * r0)
    return make_report(
        "lemma0_margin",
        f"{w!r} @ a={a!r}",
        lhs=val,
        rhs=bound,
        margin=bound - val,
        tolerances=tolerances,
        extra={"base_norm": r0},
    )


def distance_decreasing_margins(w: WeierstrassDisk, zs, ws) -> np.ndarray:
    """Vectorized margins poincare_dist(z, w) - cayley_klein_dist(F(z), F(w))."""
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    ws = np.atleast_1d(np.asarray(ws, dtype=complex))
    if np.any(np.abs(zs) >= 1.0) or np.any(np.abs(ws) >= 1.0):
        raise DomainError("distance comparison needs interior parameters")
    return poincare_dist(zs, ws) - cayley_klein_dist(w.eval(zs), w.eval(ws))


def distance_decreasing_margin(w: WeierstrassDisk, z, ww, tolerances=None) -> InequalityReport:
    """Hyperbolic distance decrease for one parameter pair."""
    margin = float(distance_decreasing_margins(w, [complex(z)], [complex(ww)])[0])
    lhs = float(cayley_klein_dist(w.eval(complex(z)), w.eval(complex(ww))))
    return make_report(
        "distance_decreasing",
        f"{w!r} @ ({z!r}, {ww!r})",
        lhs=lhs,
        rhs=lhs + margin,
        margin=margin,
        tolerances=tolerances,
    )


def boundary_minimal_margin(w: WeierstrassDisk, zeta, tolerances=None) -> InequalityReport:
    """Boundary bound ||F_r(zeta)|| >= (1 - r0)/(1 + r0) at a sphere-contact point."""
    zeta = _boundary_param(zeta)
    n = float(vnorm(w.eval(zeta)))
    if abs(n - 1.0) > 1e-10:
        raise DomainError(f"not a boundary-contact point: ||F(zeta)|| = {n:.12g}")
    val = float(vnorm(surface_point(w, zeta).f_r))
    r0 = float(vnorm(w.eval(0j)))
    bound = (1.0 - r0) / (1.0 + r0)
    return make_report(
        "boundary_minimal_margin",
        f"{w!r} @ zeta={zeta!r}",
        lhs=val,
        rhs=bound,
        margin=val - bound,
        tolerances=tolerances,
        extra={"conformal_factor": w.conformal_factor(zeta), "base_norm": r0},
    )


def _chain_preconditions(w: WeierstrassDisk) -> None:
    if not w.halfsphere:
        raise DomainError("check requires the half-sphere flag (|q| < 1 on the closed disk)")
    zeros = w.immersion_winding()
    if zeros != 0:
        raise DomainError(f"p has {zeros} zero(s) in the disk; the data is not an immersion")


def halfsphere_chain_check(
    w: WeierstrassDisk,
    tolerances=None,
    n_boundary: int = BOUNDARY_GRID,
    n_interior: int = INTERIOR_GRID,
) -> InequalityReport:
    """Testable links of the half-sphere lower bound on the conformal factor.

    For zero-free p with |q| < 1: (i) the minimum modulus of p over the disk
    is attained on the boundary; (ii) lambda >= c * min boundary |p| with the
    audited convention constant c; (iii) when the surface touches the sphere
    along the whole boundary circle, lambda >= c (1 - r0)/(1 + r0) on the
    disk with r0 = ||F(0)||.  The report margin is the worst link.

    The grid minimum of |p| on the circle can overshoot the true minimum, so
    links (i) and (ii) subtract an exact Lipschitz allowance
    sum_j j |p_j| * pi / n_boundary, which makes their nonnegativity a
    theorem rather than a grid-resolution accident.
    """
    _chain_preconditions(w)
    circle = _boundary_grid(n_boundary)
    radii = np.linspace(0.0, 1.0, n_interior, endpoint=False)
    thetas = 2.0 * np.pi * np.arange(n_interior) / n_interior
    inside = (radii[:, None] * np.exp(1j * thetas)[None, :]).ravel()
    grid = np.concatenate([inside, circle])

    p_abs = np.abs(P.polyval(grid, w.p))
    grid_slack = float(np.sum(np.arange(len(w.p)) * np.abs(w.p))) * np.pi / n_boundary
    boundary_min_p = float(np.min(np.abs(P.polyval(circle, w.p)))) - grid_slack
    min_modulus_residual = float(np.min(p_abs)) - boundary_min_p

    c = 0.5  # audited convention constant: lambda = c |p| (1 + |q|^2)
    lam = w.conformal_factor(grid)
    min_lambda = float(np.min(lam))
    lambda_link_margin = min_lambda - c * boundary_min_p

    r0 = float(vnorm(w.eval(0j)))
    contact_dev = float(np.max(np.abs(vnorm(w.eval(circle)) - 1.0)))
    boundary_contact = contact_dev <= 1e-10
    margins = [min_modulus_residual, lambda_link_margin]
    extra = {
        "min_modulus_residual": min_modulus_residual,
        "lambda_link_margin": lambda_link_margin,
        "boundary_min_p": boundary_min_p,
        "grid_slack": grid_slack,
        "min_lambda": min_lambda,
        "convention_constant": c,
        "boundary_contact": boundary_contact,
        "base_norm": r0,
    }
    corollary_bound = c * (1.0 - r0) / (1.0 + r0)
    if boundary_contact:
        corollary_margin = min_lambda - corollary_bound
        margins.append(corollary_margin)
        extra["corollary_margin"] = corollary_margin
        extra["corollary_bound"] = corollary_bound
    margin = float(min(margins))
    return make_report(
        "halfsphere_chain",
        repr(w),
        lhs=min_lambda,
        rhs=corollary_bound if boundary_contact else c * boundary_min_p,
        margin=margin,
        tolerances=tolerances,
        extra=extra,
    )


def _segment_lengths(w: WeierstrassDisk, z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    """Image lengths of parameter segments, by composite Gauss quadrature."""
    nodes, weights = legendre.leggauss(QUAD_NODES)
    offsets = (np.arange(QUAD_PANELS)[:, None] + (nodes[None, :] + 1.0) / 2.0) / QUAD_PANELS
    s = offsets.ravel()
    wts = np.tile(weights / (2.0 * QUAD_PANELS), QUAD_PANELS)
    zs = z1[:, None] + s[None, :] * (z2 - z1)[:, None]
    lam = w.conformal_factor(zs.ravel()).reshape(zs.shape)
    return np.abs(z2 - z1) * (lam @ wts)


def inverse_lipschitz_check(w: WeierstrassDisk, pairs, tolerances=None) -> InequalityReport:
    """Parameter separation against image arc length.

    For each pair: |z1 - z2| <= 2 (1 + r0)/(1 - r0) * length(F o segment),
    with the segment length an upper bound for the intrinsic surface
    distance, so the tested inequality is conservative.
    """
    _chain_preconditions(w)
    arr = np.asarray([(complex(a), complex(b)) for a, b in pairs], dtype=complex)
    if arr.size == 0:
        raise DomainError("need at least one parameter pair")
    r0 = float(vnorm(w.eval(0j)))
    if r0 >= 1.0 - 1e-12:
        raise DomainError("degenerate surface: ||F(0)|| = 1")
    factor = 2.0 * (1.0 + r0) / (1.0 - r0)
    lengths = _segment_lengths(w, arr[:, 0], arr[:, 1])
    margins = factor * lengths - np.abs(arr[:, 0] - arr[:, 1])
    worst = int(np.argmin(margins))
    return make_report(
        "inverse_lipschitz",
        f"{w!r} @ {arr.shape[0]} pairs",
        lhs=float(np.abs(arr[worst, 0] - arr[worst, 1])),
        rhs=float(factor * lengths[worst]),
        margin=float(margins[worst]),
        tolerances=tolerances,
        extra={"factor": factor, "pair_count": int(arr.shape[0])},
    )


def antiderivative_quadrature_residual(w: WeierstrassDisk, z) -> float:
    """Exact primitive at ``z`` versus Gauss quadrature of Phi along [0, z]."""
    z = complex(z)
    nodes, weights = legendre.leggauss(QUAD_NODES)
    offsets = (np.arange(QUAD_PANELS)[:, None] + (nodes[None, :] + 1.0) / 2.0) / QUAD_PANELS
    s = offsets.ravel()
    wts = np.tile(weights / (2.0 * QUAD_PANELS), QUAD_PANELS)
    phi = w.phi_values(s * z)
    quad = z * np.tensordot(wts, phi, axes=(0, 0))
    exact = np.asarray([P.polyval(z, c) for c in w.antiderivative])
    return float(np.max(np.abs(exact - quad)))


# ---------------------------------------------------------------------------
# constructions


def planar_disk() -> WeierstrassDisk:
    """The flat unit disk (x, -y, 0): p = 2, q = 0."""
    return WeierstrassDisk([2.0], [0.0], halfsphere=True)


def rotated_planar_disk(c) -> WeierstrassDisk:
    """A flat unit disk in a rotated 2-plane through the origin.

    Constant Gauss map q = c with p = 2/(1 + |c|^2) keeps the conformal
    factor at 1, so the boundary circle still lands on the unit sphere.
    """
    c = complex(c)
    return WeierstrassDisk([2.0 / (1.0 + abs(c) ** 2)], [c], halfsphere=abs(c) < 1.0)


def translated_planar_disk(t: float, orthogonal: bool = False) -> WeierstrassDisk:
    """A shrunken flat disk translated off the origin, touching the sphere.

    In-plane (default): base (t, 0, 0) with radius 1 - t, touching the
    sphere at parameter 1 only.  Orthogonal: base (0, 0, t) with radius
    sqrt(1 - t^2), touching the sphere along the whole boundary circle.
    """
    t = float(t)
    if not 0.0 <= t < 1.0:
        raise DomainError("translation parameter must lie in [0, 1)")
    if orthogonal:
        rho = float(np.sqrt(1.0 - t * t))
        return WeierstrassDisk([2.0 * rho], [0.0], base=(0.0, 0.0, t), halfsphere=True)
    rho = 1.0 - t
    return WeierstrassDisk([2.0 * rho], [0.0], base=(t, 0.0, 0.0), halfsphere=True)


def enneper_disk(shrink: float = 1.0) -> WeierstrassDisk:
    """The Enneper surface p = 1, q = shrink * z (classical at shrink = 1)."""
    shrink = float(shrink)
    return WeierstrassDisk([1.0], [0.0, shrink], halfsphere=abs(shrink) < 1.0)


def scaled_into_ball(w: WeierstrassDisk, slack: float = 1e-6) -> WeierstrassDisk:
    """Rescale a surface so its grid max norm becomes 1/(1 + slack)."""
    s = 1.0 / ((1.0 + slack) * w.max_norm())
    return WeierstrassDisk(s * w.p, w.q, base=tuple(s * w.base), halfsphere=w.halfsphere)


# ---------------------------------------------------------------------------
# data files and samples


def save_weierstrass(w: WeierstrassDisk, path) -> None:
    """Write coefficient lists and flags in the plain-text surface format."""
    lines = ["[p]"]
    lines += [f"{float(c.real)!r} {float(c.imag)!r}" for c in w.p]
    lines.append("[q]")
    lines += [f"{float(c.real)!r} {float(c.imag)!r}" for c in w.q]
    lines.append("[base]")
    lines.append(" ".join(repr(float(x)) for x in w.base))
    lines.append("[flags]")
    if w.halfsphere:
        lines.append("halfsphere")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_weierstrass(path) -> WeierstrassDisk:
    """Read a surface written by :func:`save_weierstrass`."""
    sections: dict[str, list[str]] = {}
    current = None
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1]
                sections[current] = []
                continue
            if current is None:
                raise DomainError(f"surface file has data before any section header: {line!r}")
            sections[current].append(line)

    def parse_complex_lines(name: str) -> list[complex]:
        out = []
        for line in sections.get(name, []):
            parts = line.split()
            if len(parts) != 2:
                raise DomainError(f"bad coefficient line in [{name}]: {line!r}")
            out.append(complex(float(parts[0]), float(parts[1])))
        return out

    p = parse_complex_lines("p")
    q = parse_complex_lines("q")
    if not p or not q:
        raise DomainError("surface file must provide [p] and [q] coefficients")
    base = (0.0, 0.0, 0.0)
    if sections.get("base"):
        parts = sections["base"][0].split()
        if len(parts) != 3:
            raise DomainError(f"bad base line: {sections['base'][0]!r}")
        base = tuple(float(x) for x in parts)
    flags = set(sections.get("flags", []))
    unknown = flags - {"halfsphere"}
    if unknown:
        raise DomainError(f"unknown flags in surface file: {sorted(unknown)}")
    return WeierstrassDisk(p, q, base=base, halfsphere="halfsphere" in flags)


def surface_sample(w: WeierstrassDisk, n_radial: int = 24, n_angular: int = 48) -> np.ndarray:
    """Polar-grid samples as rows (x_param, y_param, F1, F2, F3, lambda)."""
    radii = np.linspace(0.0, 1.0, n_radial)
    thetas = 2.0 * np.pi * np.arange(n_angular) / n_angular
    zs = (radii[:, None] * np.exp(1j * thetas)[None, :]).ravel()
    pos = w.eval(zs)
    lam = w.conformal_factor(zs)
    return np.column_stack([np.real(zs), np.imag(zs), pos, lam])


__all__ = [
    "SurfacePoint",
    "WeierstrassDisk",
    "antiderivative_quadrature_residual",
    "boundary_minimal_margin",
    "distance_decreasing_margin",
    "distance_decreasing_margins",
    "enneper_disk",
    "halfsphere_chain_check",
    "interior_growth_margin",
    "inverse_lipschitz_check",
    "isothermal_report",
    "load_weierstrass",
    "metric_identity_audit",
    "null_condition_report",
    "planar_disk",
    "rotated_planar_disk",
    "save_weierstrass",
    "scaled_into_ball",
    "surface_point",
    "surface_sample",
    "translated_planar_disk",
]

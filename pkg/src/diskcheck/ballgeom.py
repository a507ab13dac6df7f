"""Moebius geometry of the unit ball and hyperbolic distances.

Vectors live in C^m (represented as complex numpy arrays) with the Hermitian
inner product <x, y> = sum_j x_j * conj(y_j), linear in the first argument.
For a point a in the open ball the Moebius involution exchanging a and 0 is

    phi_a(w) = (a - P_a w - s * Q_a w) / (1 - <w, a>),

where P_a is the orthogonal projection onto the line C*a, Q_a = I - P_a and
s = sqrt(1 - ||a||^2).  The convention P_0 = 0 makes phi_0 = -identity.  All
point-wise operations broadcast over leading axes of ``w`` so entire sample
batches can be pushed through in one call.

Two distances are provided: the Poincare distance on the unit disk,
artanh(|z - w| / |1 - conj(z) w|), the integrated form of |dz| / (1 - |z|^2),
and the Cayley-Klein distance on the real unit ball,
arcosh(|1 - <x, y>| / sqrt((1 - ||x||^2)(1 - ||y||^2))).  Both measure
artanh(r) along a radius from the origin.
"""

from __future__ import annotations

import numpy as np

from .reports import DomainError

# Points with norm within this slack of 1 are accepted as boundary inputs
# where the closed ball is the legal domain.
_BALL_SLACK = 1e-10


def inner(x: np.ndarray, y: np.ndarray) -> complex | np.ndarray:
    """Hermitian inner product <x, y> = sum x_j conj(y_j) over the last axis."""
    return np.sum(np.asarray(x) * np.conj(y), axis=-1)


def vnorm(x: np.ndarray) -> float | np.ndarray:
    """Euclidean norm over the last axis."""
    return np.sqrt(np.sum(np.abs(np.asarray(x)) ** 2, axis=-1))


def _check_in_closed_ball(w: np.ndarray, what: str = "w") -> None:
    n = vnorm(w)
    if np.any(n > 1.0 + _BALL_SLACK):
        raise DomainError(f"{what} must lie in the closed unit ball; got norm {np.max(n):.6g}")


class BallAutomorphism:
    """The Moebius involution phi_a of the unit ball of C^m.

    Parameters
    ----------
    a : array_like of complex, shape (m,)
        Interior point exchanged with the origin: phi_a(0) = a, phi_a(a) = 0.

    Raises
    ------
    DomainError
        If ``a`` does not lie strictly inside the unit ball.
    """

    def __init__(self, a) -> None:
        a = np.atleast_1d(np.asarray(a, dtype=complex))
        if a.ndim != 1:
            raise DomainError("a must be a vector")
        r = float(vnorm(a))
        if r >= 1.0:
            raise DomainError(f"a must lie strictly inside the unit ball; got norm {r:.6g}")
        self.a = a
        self.dim = a.shape[0]
        self.r = r
        self.r2 = r * r
        self.s = float(np.sqrt(1.0 - self.r2))
        self.e = a / r if r > 0 else None

    # -- point map -----------------------------------------------------

    def apply(self, w) -> np.ndarray:
        """Evaluate phi_a(w) for ``w`` in the closed ball, shape (..., m)."""
        w = np.asarray(w, dtype=complex)
        if w.shape[-1] != self.dim:
            raise DomainError(f"dimension mismatch: automorphism is {self.dim}-dimensional")
        _check_in_closed_ball(w)
        if self.r == 0.0:
            return -w
        t = inner(w, self.a)
        pw = (t / self.r2)[..., None] * self.a
        qw = w - pw
        return (self.a - pw - self.s * qw) / (1.0 - t)[..., None]

    __call__ = apply

    def differential(self, w, v) -> np.ndarray:
        """Directional derivative D phi_a(w)[v]; broadcasts over (..., m)."""
        w = np.asarray(w, dtype=complex)
        v = np.asarray(v, dtype=complex)
        if w.shape[-1] != self.dim or v.shape[-1] != self.dim:
            raise DomainError(f"dimension mismatch: automorphism is {self.dim}-dimensional")
        _check_in_closed_ball(w)
        if self.r == 0.0:
            return -v + np.zeros_like(w)
        t = inner(w, self.a)
        ta = inner(v, self.a)
        pv = (ta / self.r2)[..., None] * self.a
        qv = v - pv
        return (-pv - self.s * qv + ta[..., None] * self.apply(w)) / (1.0 - t)[..., None]

    def matrix(self, w) -> np.ndarray:
        """Complex m x m matrix of D phi_a(w); stacked over leading axes."""
        w = np.asarray(w, dtype=complex)
        cols = []
        for j in range(self.dim):
            ej = np.zeros(self.dim, dtype=complex)
            ej[j] = 1.0
            cols.append(self.differential(w, np.broadcast_to(ej, w.shape)))
        return np.stack(cols, axis=-1)

    # -- norms of the differential --------------------------------------

    def opnorm_formula(self, w) -> float | np.ndarray:
        """Closed-form candidate max(s, ||-e + r*phi_a(w)||) / |1 - <w, a>|.

        This is the maximum of the differential's norm along the direction of
        ``a`` and along the orthogonal complement, so it agrees with
        :meth:`opnorm_oracle` at w = a and w = a/||a|| in every dimension,
        and at w = 0 when the dimension is at least 2.  In dimension 1 the
        orthogonal branch ``s`` is vacuous and the formula can exceed the
        true norm; at general w in higher dimensions it can fall below it.
        Callers should treat it as a diagnostic, not a bound.
        """
        w = np.asarray(w, dtype=complex)
        if self.r == 0.0:
            return np.ones(w.shape[:-1]) if w.ndim > 1 else 1.0
        t = inner(w, self.a)
        x = -self.e + self.r * self.apply(w)
        val = np.maximum(self.s, vnorm(x)) / np.abs(1.0 - t)
        return val if w.ndim > 1 else float(val)

    def opnorm_oracle(self, w) -> float | np.ndarray:
        """Exact operator norm of D phi_a(w): largest singular value."""
        w = np.asarray(w, dtype=complex)
        sv = np.linalg.svd(self.matrix(w), compute_uv=False)
        val = sv[..., 0]
        return val if w.ndim > 1 else float(val)

    def opnorm_global_bound(self) -> float:
        """Supremum (1 + r) / (1 - r) of the operator norm over the closed ball."""
        return (1.0 + self.r) / (1.0 - self.r)

    def norm_identity_residual(self, w) -> float | np.ndarray:
        """Residual of (1 - ||phi_a(w)||^2) |1 - <w, a>|^2 = (1 - r^2)(1 - ||w||^2)."""
        w = np.asarray(w, dtype=complex)
        t = inner(w, self.a)
        lhs = (1.0 - vnorm(self.apply(w)) ** 2) * np.abs(1.0 - t) ** 2
        rhs = (1.0 - self.r2) * (1.0 - vnorm(w) ** 2)
        res = np.abs(lhs - rhs)
        return res if w.ndim > 1 else float(res)


def pseudo_hyperbolic_quotient(a, w) -> float | np.ndarray:
    """The quotient ||w - a|| / |1 - <w, a>|.

    Dominates ||phi_a(w)|| in every dimension, with equality exactly when
    m = 1 or w is a complex multiple of a (Cauchy-Schwarz gap otherwise).
    """
    a = np.atleast_1d(np.asarray(a, dtype=complex))
    w = np.asarray(w, dtype=complex)
    if float(vnorm(a)) >= 1.0:
        raise DomainError("a must lie strictly inside the unit ball")
    _check_in_closed_ball(w)
    val = vnorm(w - a) / np.abs(1.0 - inner(w, a))
    return val if w.ndim > 1 else float(val)


def poincare_dist(z, w) -> float | np.ndarray:
    """Poincare distance artanh(|z - w| / |1 - conj(z) w|) on the unit disk.

    Raises
    ------
    DomainError
        If either argument has modulus >= 1 (boundary excluded).
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if np.any(np.abs(z) >= 1.0) or np.any(np.abs(w) >= 1.0):
        raise DomainError("poincare_dist requires interior points of the disk")
    rho = np.abs(z - w) / np.abs(1.0 - np.conj(z) * w)
    val = np.arctanh(rho)
    return val if val.ndim > 0 else float(val)


def cayley_klein_dist(x, y) -> float | np.ndarray:
    """Cayley-Klein distance arcosh(|1 - <x, y>| / sqrt((1-||x||^2)(1-||y||^2))).

    ``x`` and ``y`` are real vectors strictly inside the unit ball of R^n;
    the operation broadcasts over leading axes.  Along a common diameter the
    value reduces to the artanh difference |artanh r_x - artanh r_y|.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    nx = vnorm(x)
    ny = vnorm(y)
    if np.any(nx >= 1.0) or np.any(ny >= 1.0):
        raise DomainError("cayley_klein_dist requires interior points of the ball")
    arg = np.abs(1.0 - np.sum(x * y, axis=-1)) / np.sqrt((1.0 - nx**2) * (1.0 - ny**2))
    val = np.arccosh(np.maximum(arg, 1.0))
    return val if val.ndim > 0 else float(val)


__all__ = [
    "BallAutomorphism",
    "cayley_klein_dist",
    "inner",
    "poincare_dist",
    "pseudo_hyperbolic_quotient",
    "vnorm",
]

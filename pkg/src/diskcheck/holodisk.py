"""Holomorphic disk maps as exact expression trees, with margin checks.

A :class:`HoloDisk` is a closed-form holomorphic map from the unit disk into
C^m built from a small node grammar: the coordinate ``z``, constants, complex
polynomials, Blaschke factors (z + c)/(1 + conj(c) z), products and sums of
scalar maps, scalar-times-vector embeddings, complex rescaling, and
post-composition with a ball automorphism.  Evaluation and differentiation
are exact (chain rule through every node, no numerical differentiation), and
both accept arrays of points so whole sample batches cost one tree walk.

The inequality checks at the bottom of the module all return
:class:`~diskcheck.reports.InequalityReport`; vectorized ``*_margins``
variants return raw margin arrays for bulk sweeps.

Serialization uses a nested prefix notation, e.g. ``mul(z, blaschke(0.5))``
or ``compose(phi(a=[0.3, 0.0]), scale(z, u=[1.0, 0.0]))``; see the README
for the exact grammar.  ``parse_disk`` inverts ``to_text``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .ballgeom import BallAutomorphism, inner, vnorm
from .reports import DomainError, InequalityReport, make_report

# Grid sizes for in-ball certification of corpus members.
BOUNDARY_GRID = 4096
INTERIOR_GRID = 128

# Default radius schedule for the boundary difference quotients: 1 - 2^-k.
RADIAL_SCHEDULE_KMIN = 3
RADIAL_SCHEDULE_KMAX = 20


class ParseError(ValueError):
    """Malformed disk expression text."""


def _fmt_real(x: float) -> str:
    return repr(float(x))


def _fmt_complex(c: complex) -> str:
    c = complex(c)
    if c.imag == 0.0:
        return _fmt_real(c.real)
    if c.real == 0.0:
        return _fmt_real(c.imag) + "j"
    sign = "+" if c.imag > 0 else "-"
    return f"{_fmt_real(c.real)}{sign}{_fmt_real(abs(c.imag))}j"


def _fmt_vector(u: np.ndarray) -> str:
    return "[" + ", ".join(_fmt_complex(x) for x in u) + "]"


class HoloDisk:
    """Base class for holomorphic disk maps D -> C^m."""

    dim: int = 1

    def _eval(self, z: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _deriv(self, z: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def to_text(self) -> str:
        raise NotImplementedError

    def eval(self, z):
        """Value at ``z``: shape (m,) for scalar input, (N, m) for arrays."""
        zs = np.atleast_1d(np.asarray(z, dtype=complex))
        out = self._eval(zs)
        return out[0] if np.ndim(z) == 0 else out

    def deriv(self, z):
        """Complex derivative at ``z``, shaped like :meth:`eval`."""
        zs = np.atleast_1d(np.asarray(z, dtype=complex))
        out = self._deriv(zs)
        return out[0] if np.ndim(z) == 0 else out

    __call__ = eval

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()!r})"


class Identity(HoloDisk):
    """The coordinate map z."""

    def _eval(self, z):
        return z[:, None]

    def _deriv(self, z):
        return np.ones_like(z)[:, None]

    def to_text(self):
        return "z"


class Const(HoloDisk):
    """Constant scalar map."""

    def __init__(self, c) -> None:
        self.c = complex(c)

    def _eval(self, z):
        return np.full((z.shape[0], 1), self.c)

    def _deriv(self, z):
        return np.zeros((z.shape[0], 1), dtype=complex)

    def to_text(self):
        return f"const({_fmt_complex(self.c)})"


class Poly(HoloDisk):
    """Scalar polynomial with ascending complex coefficients."""

    def __init__(self, coeffs) -> None:
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if c.ndim != 1 or c.shape[0] == 0:
            raise DomainError("poly needs a nonempty coefficient vector")
        self.coeffs = P.polytrim(c, tol=0.0)

    def _eval(self, z):
        return P.polyval(z, self.coeffs)[:, None]

    def _deriv(self, z):
        return P.polyval(z, P.polyder(self.coeffs))[:, None]

    def to_text(self):
        return "poly(" + ", ".join(_fmt_complex(c) for c in self.coeffs) + ")"


class Blaschke(HoloDisk):
    """Blaschke factor (z + c) / (1 + conj(c) z) with |c| < 1."""

    def __init__(self, c) -> None:
        c = complex(c)
        if abs(c) >= 1.0:
            raise DomainError(f"Blaschke parameter must satisfy |c| < 1; got {abs(c):.6g}")
        self.c = c

    def _eval(self, z):
        return ((z + self.c) / (1.0 + np.conj(self.c) * z))[:, None]

    def _deriv(self, z):
        return ((1.0 - abs(self.c) ** 2) / (1.0 + np.conj(self.c) * z) ** 2)[:, None]

    def to_text(self):
        return f"blaschke({_fmt_complex(self.c)})"


class Mul(HoloDisk):
    """Product of two scalar maps."""

    def __init__(self, f: HoloDisk, g: HoloDisk) -> None:
        if f.dim != 1 or g.dim != 1:
            raise DomainError("mul requires scalar factors")
        self.f = f
        self.g = g

    def _eval(self, z):
        return self.f._eval(z) * self.g._eval(z)

    def _deriv(self, z):
        return self.f._deriv(z) * self.g._eval(z) + self.f._eval(z) * self.g._deriv(z)

    def to_text(self):
        return f"mul({self.f.to_text()}, {self.g.to_text()})"


class Add(HoloDisk):
    """Sum of two maps of equal dimension."""

    def __init__(self, f: HoloDisk, g: HoloDisk) -> None:
        if f.dim != g.dim:
            raise DomainError(f"add requires equal dimensions; got {f.dim} and {g.dim}")
        self.f = f
        self.g = g
        self.dim = f.dim

    def _eval(self, z):
        return self.f._eval(z) + self.g._eval(z)

    def _deriv(self, z):
        return self.f._deriv(z) + self.g._deriv(z)

    def to_text(self):
        return f"add({self.f.to_text()}, {self.g.to_text()})"


class CMul(HoloDisk):
    """Complex scalar multiple of a map."""

    def __init__(self, c, f: HoloDisk) -> None:
        self.c = complex(c)
        self.f = f
        self.dim = f.dim

    def _eval(self, z):
        return self.c * self.f._eval(z)

    def _deriv(self, z):
        return self.c * self.f._deriv(z)

    def to_text(self):
        return f"cmul({_fmt_complex(self.c)}, {self.f.to_text()})"


class Embed(HoloDisk):
    """Scalar map times a constant vector: z -> f(z) * u."""

    def __init__(self, f: HoloDisk, u) -> None:
        if f.dim != 1:
            raise DomainError("scale requires a scalar map")
        u = np.atleast_1d(np.asarray(u, dtype=complex))
        if u.ndim != 1 or u.shape[0] == 0:
            raise DomainError("scale direction must be a nonempty vector")
        self.f = f
        self.u = u
        self.dim = u.shape[0]

    def _eval(self, z):
        return self.f._eval(z)[:, 0][:, None] * self.u[None, :]

    def _deriv(self, z):
        return self.f._deriv(z)[:, 0][:, None] * self.u[None, :]

    def to_text(self):
        return f"scale({self.f.to_text()}, u={_fmt_vector(self.u)})"


class Vec(HoloDisk):
    """Coordinate-wise combination of scalar maps into a vector map."""

    def __init__(self, components) -> None:
        comps = list(components)
        if not comps:
            raise DomainError("vec needs at least one component")
        if any(f.dim != 1 for f in comps):
            raise DomainError("vec components must be scalar maps")
        self.components = comps
        self.dim = len(comps)

    def _eval(self, z):
        return np.concatenate([f._eval(z) for f in self.components], axis=1)

    def _deriv(self, z):
        return np.concatenate([f._deriv(z) for f in self.components], axis=1)

    def to_text(self):
        return "vec(" + ", ".join(f.to_text() for f in self.components) + ")"


class ComposeAut(HoloDisk):
    """Post-composition with a ball automorphism: z -> phi_a(F(z))."""

    def __init__(self, aut: BallAutomorphism, f: HoloDisk) -> None:
        if aut.dim != f.dim:
            raise DomainError(f"compose dimension mismatch: {aut.dim} vs {f.dim}")
        self.aut = aut
        self.f = f
        self.dim = f.dim

    def _eval(self, z):
        return self.aut.apply(self.f._eval(z))

    def _deriv(self, z):
        return self.aut.differential(self.f._eval(z), self.f._deriv(z))

    def to_text(self):
        return f"compose(phi(a={_fmt_vector(self.aut.a)}), {self.f.to_text()})"


# ---------------------------------------------------------------------------
# parsing


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def parse(self) -> HoloDisk:
        node = self._node()
        self._ws()
        if self.pos != len(self.text):
            raise ParseError(f"trailing input at offset {self.pos}: {self.text[self.pos:]!r}")
        return node

    def _ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _expect(self, ch: str):
        self._ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            got = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise ParseError(f"expected {ch!r} at offset {self.pos}, got {got!r}")
        self.pos += 1

    def _ident(self) -> str:
        self._ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected a name at offset {start}")
        return self.text[start:self.pos]

    def _number(self) -> complex:
        self._ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",)]":
            self.pos += 1
        token = self.text[start:self.pos].strip()
        try:
            return complex(token)
        except ValueError:
            raise ParseError(f"bad number {token!r} at offset {start}") from None

    def _vector(self) -> np.ndarray:
        self._expect("[")
        vals = [self._number()]
        self._ws()
        while self.pos < len(self.text) and self.text[self.pos] == ",":
            self.pos += 1
            vals.append(self._number())
            self._ws()
        self._expect("]")
        return np.asarray(vals, dtype=complex)

    def _node(self) -> HoloDisk:
        name = self._ident()
        self._ws()
        if name == "z" and (self.pos >= len(self.text) or self.text[self.pos] != "("):
            return Identity()
        self._expect("(")
        if name == "const":
            c = self._number()
            self._expect(")")
            return Const(c)
        if name == "blaschke":
            c = self._number()
            self._expect(")")
            return Blaschke(c)
        if name == "poly":
            coeffs = [self._number()]
            self._ws()
            while self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                coeffs.append(self._number())
                self._ws()
            self._expect(")")
            return Poly(coeffs)
        if name in ("mul", "add"):
            f = self._node()
            self._expect(",")
            g = self._node()
            self._expect(")")
            return Mul(f, g) if name == "mul" else Add(f, g)
        if name == "cmul":
            c = self._number()
            self._expect(",")
            f = self._node()
            self._expect(")")
            return CMul(c, f)
        if name == "scale":
            f = self._node()
            self._expect(",")
            key = self._ident()
            if key != "u":
                raise ParseError(f"scale expects 'u=', got {key!r}")
            self._expect("=")
            u = self._vector()
            self._expect(")")
            return Embed(f, u)
        if name == "vec":
            comps = [self._node()]
            self._ws()
            while self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                comps.append(self._node())
                self._ws()
            self._expect(")")
            return Vec(comps)
        if name == "compose":
            key = self._ident()
            if key != "phi":
                raise ParseError(f"compose expects phi(a=[...]), got {key!r}")
            self._expect("(")
            akey = self._ident()
            if akey != "a":
                raise ParseError(f"phi expects 'a=', got {akey!r}")
            self._expect("=")
            a = self._vector()
            self._expect(")")
            self._expect(",")
            f = self._node()
            self._expect(")")
            return ComposeAut(BallAutomorphism(a), f)
        raise ParseError(f"unknown node {name!r}")


def parse_disk(text: str) -> HoloDisk:
    """Parse the nested prefix notation produced by ``HoloDisk.to_text``."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# builders


def affine_disk(u) -> HoloDisk:
    """The affine disk z -> z * u."""
    return Embed(Identity(), u)


def blaschke_product(cs, include_z: bool = False, fix_one: bool = True) -> HoloDisk:
    """Finite Blaschke product, optionally z-premultiplied and rotated to fix 1.

    With ``fix_one`` the product is multiplied by the unimodular constant that
    makes f(1) = 1 (so Julia-type checks apply directly).
    """
    cs = list(cs)
    if not cs and not include_z:
        raise DomainError("empty Blaschke product")
    node: HoloDisk | None = Identity() if include_z else None
    for c in cs:
        factor = Blaschke(c)
        node = factor if node is None else Mul(node, factor)
    if fix_one:
        value_at_one = complex(node.eval(1.0 + 0j)[0])
        node = CMul(np.conj(value_at_one) / abs(value_at_one) ** 2, node)
    return node


def extremal_family_1d(a: float) -> HoloDisk:
    """Boundary-equality family member f(z) = z (z + a) / (1 + a z), a in [0, 1).

    Satisfies f(0) = 0, f(1) = 1, f'(0) = a and f'(1) = 2 / (1 + a); the
    a = 0 member is z^2.
    """
    a = float(a)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"family parameter must lie in [0, 1); got {a}")
    return Mul(Identity(), Blaschke(a))


# ---------------------------------------------------------------------------
# boundary machinery


@dataclass(frozen=True)
class BoundaryPoint:
    """A unit-circle parameter, tagged with whether the image reaches the sphere."""

    zeta: complex
    on_sphere: bool = False

    def __post_init__(self):
        if abs(abs(complex(self.zeta)) - 1.0) > 1e-14:
            raise DomainError(f"boundary parameter must have |zeta| = 1; got {abs(self.zeta):.17g}")

    @classmethod
    def for_disk(cls, f: HoloDisk, zeta, tol: float = 1e-10) -> "BoundaryPoint":
        zeta = complex(zeta)
        on = abs(float(vnorm(f.eval(zeta))) - 1.0) <= tol
        return cls(zeta=zeta, on_sphere=on)


def _boundary_param(zeta) -> complex:
    if isinstance(zeta, BoundaryPoint):
        return complex(zeta.zeta)
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > 1e-14:
        raise DomainError(f"boundary parameter must have |zeta| = 1; got {abs(zeta):.17g}")
    return zeta


def sup_boundary_norm(f: HoloDisk, n_grid: int = BOUNDARY_GRID) -> float:
    """Max of ||f|| over an n-point boundary grid."""
    thetas = 2.0 * np.pi * np.arange(n_grid) / n_grid
    return float(np.max(vnorm(f._eval(np.exp(1j * thetas)))))


def certify_in_ball(f: HoloDisk, n_boundary: int = BOUNDARY_GRID, n_interior: int = INTERIOR_GRID) -> float:
    """Max of ||f|| over boundary and interior polar grids.

    ||f||^2 is subharmonic so the boundary grid dominates in exact arithmetic;
    the interior grid is a cheap independent guard.
    """
    worst = sup_boundary_norm(f, n_boundary)
    radii = np.linspace(0.0, 1.0, n_interior, endpoint=False)
    thetas = 2.0 * np.pi * np.arange(n_interior) / n_interior
    zs = (radii[:, None] * np.exp(1j * thetas)[None, :]).ravel()
    worst = max(worst, float(np.max(vnorm(f._eval(zs)))))
    return worst


def _require_zero_at_origin(f: HoloDisk, tol: float = 1e-12) -> None:
    n0 = float(vnorm(f.eval(0j)))
    if n0 > tol:
        raise DomainError(f"map must fix the origin; got ||F(0)|| = {n0:.6g}")


def _require_boundary_contact(f: HoloDisk, zeta: complex, tol: float = 1e-10) -> None:
    n = float(vnorm(f.eval(zeta)))
    if abs(n - 1.0) > tol:
        raise DomainError(f"not a boundary-contact point: ||F(zeta)|| = {n:.12g}")


# ---------------------------------------------------------------------------
# interior growth bounds


def growth_margins(f: HoloDisk, zs) -> np.ndarray:
    """Vectorized margins |z|(|z| + A)/(1 + |z| A) - ||F(z)||, A = ||F'(0)||."""
    _require_zero_at_origin(f)
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    if np.any(np.abs(zs) >= 1.0):
        raise DomainError("growth margin requires interior points")
    a = float(vnorm(f.deriv(0j)))
    r = np.abs(zs)
    bound = r * (r + a) / (1.0 + r * a)
    return bound - vnorm(f._eval(zs))


def growth_margin(f: HoloDisk, z, tolerances=None) -> InequalityReport:
    """Growth bound at one interior point of an origin-fixing map."""
    margin = float(growth_margins(f, [complex(z)])[0])
    a = float(vnorm(f.deriv(0j)))
    r = abs(complex(z))
    bound = r * (r + a) / (1.0 + r * a)
    return make_report(
        "growth_margin",
        f"{f.to_text()} @ z={_fmt_complex(z)}",
        lhs=bound - margin,
        rhs=bound,
        margin=margin,
        tolerances=tolerances,
        extra={"deriv0_norm": a},
    )


def two_sided_margins(f: HoloDisk, zs) -> tuple[np.ndarray, np.ndarray]:
    """Quotient bounds for x = ||F(z)/z||: upper and lower margins.

    Upper: (A + |z|)/(1 + A |z|) - x, valid in every dimension.  Lower:
    x - max((A - |z|)/(1 - A |z|), 0), asserted by callers only for m = 1 or
    collinear-range maps and reported otherwise.
    """
    _require_zero_at_origin(f)
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    r = np.abs(zs)
    if np.any((r <= 0.0) | (r >= 1.0)):
        raise DomainError("quotient bounds need 0 < |z| < 1")
    a = float(vnorm(f.deriv(0j)))
    x = vnorm(f._eval(zs)) / r
    upper = (a + r) / (1.0 + a * r) - x
    lower = x - np.maximum((a - r) / (1.0 - a * r), 0.0)
    return upper, lower


def two_sided_quotient_check(f: HoloDisk, z, tolerances=None) -> InequalityReport:
    """Two-sided quotient bound at one point; lower margin rides in ``extra``."""
    upper, lower = two_sided_margins(f, [complex(z)])
    a = float(vnorm(f.deriv(0j)))
    return make_report(
        "two_sided_upper",
        f"{f.to_text()} @ z={_fmt_complex(z)}",
        lhs=float(vnorm(f.eval(complex(z)))) / abs(complex(z)),
        rhs=(a + abs(complex(z))) / (1.0 + a * abs(complex(z))),
        margin=float(upper[0]),
        tolerances=tolerances,
        extra={"lower_margin": float(lower[0]), "deriv0_norm": a},
    )


# ---------------------------------------------------------------------------
# boundary derivative bounds


def boundary_bound_origin(f: HoloDisk, zeta, tolerances=None) -> InequalityReport:
    """Margin ||F'(zeta)|| - 2/(1 + ||F'(0)||) for origin-fixing contact maps."""
    zeta = _boundary_param(zeta)
    _require_zero_at_origin(f)
    _require_boundary_contact(f, zeta)
    a = float(vnorm(f.deriv(0j)))
    val = float(vnorm(f.deriv(zeta)))
    bound = 2.0 / (1.0 + a)
    return make_report(
        "boundary_origin_margin",
        f"{f.to_text()} @ zeta={_fmt_complex(zeta)}",
        lhs=val,
        rhs=bound,
        margin=val - bound,
        tolerances=tolerances,
        extra={"deriv0_norm": a},
    )


def boundary_bound_shifted(f: HoloDisk, zeta, tolerances=None) -> InequalityReport:
    """Basepoint-shifted boundary bound with the dimension-dependent floor.

    Main bound: ||F'(zeta)|| >= 2 (1 - r)^2 / (1 - r^2 + ||F'(0)||) with
    r = ||F(0)|| < 1.  The floor substitutes the maximal ||F'(0)||:
    sqrt(1 - r^2) for m >= 2 (giving 2 (1 - r)^2 / (1 - r^2 + sqrt(1 - r^2)))
    and 1 - r^2 for m = 1 (giving (1 - r)/(1 + r)).
    """
    zeta = _boundary_param(zeta)
    _require_boundary_contact(f, zeta)
    r = float(vnorm(f.eval(0j)))
    if r >= 1.0 - 1e-12:
        raise DomainError("degenerate map: ||F(0)|| = 1 pins the image to the boundary")
    a = float(vnorm(f.deriv(0j)))
    val = float(vnorm(f.deriv(zeta)))
    main = 2.0 * (1.0 - r) ** 2 / (1.0 - r * r + a)
    if f.dim >= 2:
        floor = 2.0 * (1.0 - r) ** 2 / (1.0 - r * r + math.sqrt(1.0 - r * r))
    else:
        floor = (1.0 - r) / (1.0 + r)
    return make_report(
        "boundary_shifted_margin",
        f"{f.to_text()} @ zeta={_fmt_complex(zeta)}",
        lhs=val,
        rhs=main,
        margin=val - main,
        tolerances=tolerances,
        extra={
            "floor_bound": floor,
            "floor_margin": val - floor,
            "base_norm": r,
            "deriv0_norm": a,
        },
    )


def schwarz_derivative_bound(f: HoloDisk, tolerances=None) -> InequalityReport:
    """Margin sqrt(1 - ||F(0)||^2) - ||F'(0)|| for ball-valued maps."""
    r = float(vnorm(f.eval(0j)))
    if r > 1.0:
        raise DomainError("map must send the disk into the closed ball")
    a = float(vnorm(f.deriv(0j)))
    bound = math.sqrt(max(1.0 - r * r, 0.0))
    return make_report(
        "schwarz_derivative",
        f.to_text(),
        lhs=a,
        rhs=bound,
        margin=bound - a,
        tolerances=tolerances,
        extra={"base_norm": r},
    )


# ---------------------------------------------------------------------------
# Julia-type quotient bound (scalar maps fixing 1)


def _julia_deriv_at_one(f: HoloDisk) -> float:
    if f.dim != 1:
        raise DomainError("Julia bound applies to scalar maps")
    one = complex(f.eval(1.0 + 0j)[0])
    if abs(one - 1.0) > 1e-10:
        raise DomainError(f"map must fix 1; got f(1) = {one!r}")
    d1 = complex(f.deriv(1.0 + 0j)[0])
    if abs(d1.imag) > 1e-10:
        raise DomainError(f"boundary derivative at 1 must be real; got {d1!r}")
    if d1.real <= 0.0:
        raise DomainError(f"boundary derivative at 1 must be positive; got {d1.real!r}")
    return d1.real


def julia_margins(f: HoloDisk, zs) -> np.ndarray:
    """Vectorized Julia margins f'(1)|1-z|^2/(1-|z|^2) - |1-f(z)|^2/(1-|f(z)|^2)."""
    d1 = _julia_deriv_at_one(f)
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    if np.any(np.abs(zs) >= 1.0):
        raise DomainError("Julia margin requires interior points")
    w = f._eval(zs)[:, 0]
    lhs = np.abs(1.0 - w) ** 2 / (1.0 - np.abs(w) ** 2)
    rhs = d1 * np.abs(1.0 - zs) ** 2 / (1.0 - np.abs(zs) ** 2)
    return rhs - lhs


def julia_margin(f: HoloDisk, z, tolerances=None) -> InequalityReport:
    """Julia quotient bound at one interior point of a map fixing 1."""
    margin = float(julia_margins(f, [complex(z)])[0])
    d1 = _julia_deriv_at_one(f)
    z = complex(z)
    rhs = d1 * abs(1.0 - z) ** 2 / (1.0 - abs(z) ** 2)
    return make_report(
        "julia_margin",
        f"{f.to_text()} @ z={_fmt_complex(z)}",
        lhs=rhs - margin,
        rhs=rhs,
        margin=margin,
        tolerances=tolerances,
        extra={"deriv_at_one": d1},
    )


# ---------------------------------------------------------------------------
# radial boundary estimates


def analytic_radial_derivative(f: HoloDisk, zeta) -> float:
    """d/dr ||F(r zeta)|| at r = 1, via Re<zeta F'(zeta), F(zeta)> / ||F(zeta)||."""
    zeta = _boundary_param(zeta)
    val = f.eval(zeta)
    dval = f.deriv(zeta)
    return float(np.real(inner(zeta * dval, val)) / vnorm(val))


def radial_derivative_estimate(f: HoloDisk, zeta, schedule=None) -> tuple[float, float]:
    """Estimate lim_{r->1} (1 - ||F(r zeta)||) / (1 - r) by extrapolation.

    Difference quotients on the radius schedule (default r_k = 1 - 2^-k,
    k = 3..20) are refined by one level of Richardson extrapolation; the
    returned error estimate is the last extrapolated increment.
    """
    zeta = _boundary_param(zeta)
    if schedule is None:
        ks = np.arange(RADIAL_SCHEDULE_KMIN, RADIAL_SCHEDULE_KMAX + 1)
        rs = 1.0 - 0.5**ks
    else:
        rs = np.asarray(schedule, dtype=float)
        if rs.size < 3 or np.any(rs <= 0.0) or np.any(rs >= 1.0) or np.any(np.diff(rs) <= 0):
            raise DomainError("schedule must be an increasing sequence in (0, 1) of length >= 3")
    h = 1.0 - rs
    q = (1.0 - vnorm(f._eval(rs * zeta))) / h
    rich = (h[:-1] * q[1:] - h[1:] * q[:-1]) / (h[:-1] - h[1:])
    estimate = float(rich[-1])
    error = float(abs(rich[-1] - rich[-2]) + 1e-12 * (1.0 + abs(estimate)))
    return estimate, error


# ---------------------------------------------------------------------------
# sharpness of the boundary bound in the family parameter


def nonreal_parameter_strictness(a: complex, tolerances=None) -> InequalityReport:
    """Boundary-bound margin of the rotated map z * b_a(z), strict for arg(a) != 0.

    For a = r e^{it} the margin has the closed form
    2 r (1 - cos t)(1 - r) / ((1 + 2 r cos t + r^2)(1 + r)), which vanishes
    exactly on the real ray t = 0.
    """
    a = complex(a)
    r, t = abs(a), math.atan2(a.imag, a.real)
    if not 0.0 < r < 1.0:
        raise DomainError("parameter must satisfy 0 < |a| < 1")
    f = blaschke_product([a], include_z=True, fix_one=True)
    rep = boundary_bound_origin(f, 1.0 + 0j, tolerances=tolerances)
    closed = 2.0 * r * (1.0 - math.cos(t)) * (1.0 - r) / ((1.0 + 2.0 * r * math.cos(t) + r * r) * (1.0 + r))
    return make_report(
        "strictness_margin",
        f"z*blaschke({_fmt_complex(a)}) rotated to fix 1",
        lhs=rep.lhs,
        rhs=rep.rhs,
        margin=rep.margin,
        tolerances=tolerances,
        extra={"closed_form": closed, "closed_form_deviation": rep.margin - closed},
    )


# ---------------------------------------------------------------------------
# affine rigidity


def affine_rigidity_check(f: HoloDisk, n_grid: int = 64, tolerances=None) -> InequalityReport:
    """If F fixes 0, reaches the sphere at 1 and ||F'(1)|| <= 1, F must be affine.

    Checks max over an interior polar grid of | ||F(z)|| - |z| |; reported as
    not applicable (and passing) when the premises fail.
    """
    applicable = True
    try:
        _require_zero_at_origin(f)
        _require_boundary_contact(f, 1.0 + 0j)
    except DomainError:
        applicable = False
    if applicable and float(vnorm(f.deriv(1.0 + 0j))) > 1.0 + 1e-10:
        applicable = False
    if not applicable:
        return make_report(
            "affine_rigidity",
            f.to_text(),
            lhs=0.0,
            rhs=0.0,
            margin=0.0,
            equality=True,
            tolerances=tolerances,
            extra={"applicable": False},
        )
    radii = np.linspace(0.05, 0.95, n_grid)
    thetas = 2.0 * np.pi * np.arange(n_grid) / n_grid
    zs = (radii[:, None] * np.exp(1j * thetas)[None, :]).ravel()
    dev = float(np.max(np.abs(vnorm(f._eval(zs)) - np.abs(zs))))
    return make_report(
        "affine_rigidity",
        f.to_text(),
        lhs=dev,
        rhs=0.0,
        margin=dev,
        equality=True,
        tolerances=tolerances,
        extra={"applicable": True},
    )


__all__ = [
    "Add",
    "Blaschke",
    "BoundaryPoint",
    "CMul",
    "ComposeAut",
    "Const",
    "Embed",
    "HoloDisk",
    "Identity",
    "Mul",
    "ParseError",
    "Poly",
    "Vec",
    "affine_disk",
    "affine_rigidity_check",
    "analytic_radial_derivative",
    "blaschke_product",
    "boundary_bound_origin",
    "boundary_bound_shifted",
    "certify_in_ball",
    "extremal_family_1d",
    "growth_margin",
    "growth_margins",
    "julia_margin",
    "julia_margins",
    "nonreal_parameter_strictness",
    "parse_disk",
    "radial_derivative_estimate",
    "schwarz_derivative_bound",
    "sup_boundary_norm",
    "two_sided_margins",
    "two_sided_quotient_check",
]

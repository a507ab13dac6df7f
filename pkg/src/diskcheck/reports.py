"""Shared result records, error types and the tolerance table.

Every inequality check in the package produces an :class:`InequalityReport`
with an explicit margin and the tolerance it was judged against.  Margins are
oriented so that ``margin >= -tolerance`` means the inequality held; equality
cases are asserted as ``abs(margin) <= tolerance``.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


# Per-check tolerances, overridable from the CLI (--tolerance NAME=VALUE) or a
# config file (tolerance.NAME=VALUE).  Algebraic identities are held to 1e-12,
# differential and oracle comparisons to 1e-8, one-sided margins to -1e-10.
DEFAULT_TOLERANCES: dict[str, float] = {
    # ball geometry
    "phi_fixed_point": 1e-12,
    "phi_origin_value": 1e-12,
    "phi_involution": 1e-12,
    "phi_norm_identity": 1e-12,
    "phi_boundary_preservation": 1e-12,
    "quotient_domination": 1e-12,
    "quotient_collinear_equality": 1e-12,
    "dphi_finite_difference": 1e-8,
    "opnorm_anchor": 1e-8,
    "opnorm_global_bound": 1e-8,
    "metric_plane_consistency": 1e-12,
    "poincare_invariance": 1e-12,
    "cayley_klein_radial": 1e-12,
    # holomorphic disks
    "serialization_roundtrip": 1e-15,
    "boundary_membership": 1e-10,
    "growth_margin": 1e-10,
    "growth_equality_affine": 1e-10,
    "two_sided_upper": 1e-10,
    "two_sided_lower": 1e-10,
    "boundary_origin_margin": 1e-10,
    "boundary_origin_equality": 1e-10,
    "boundary_shifted_margin": 1e-10,
    "shifted_equality_blaschke": 1e-10,
    "schwarz_derivative": 1e-10,
    "julia_margin": 1e-10,
    "julia_equality": 1e-10,
    "radial_estimate": 1e-6,
    "extremal_family_values": 1e-12,
    "strictness_margin": 1e-10,
    "strictness_closed_form": 1e-10,
    "affine_rigidity": 1e-8,
    # minimal disks
    "null_condition": 1e-12,
    "isothermal": 1e-10,
    "antiderivative_quadrature": 1e-10,
    "gauss_normal_unit": 1e-12,
    "metric_audit_spread": 1e-10,
    "lemma0_margin": 1e-10,
    "lemma0_equality_planar": 1e-10,
    "distance_decreasing": 1e-10,
    "distance_equality_planar": 1e-10,
    "boundary_minimal_margin": 1e-10,
    "boundary_minimal_equality": 1e-10,
    "halfsphere_chain": 1e-8,
    "inverse_lipschitz": 1e-8,
    # sharpness search
    "search_trace_floor": 1e-8,
    "family_1d_best": 1e-8,
    "family_1d_phase": 1e-4,
    "family_1d_restricted_floor": 1e-4,
    "family_md_margin": 1e-8,
    "nelder_mead_optimum": 1e-6,
}


def resolve_tolerance(name: str, overrides: dict[str, float] | None = None) -> float:
    """Look up the tolerance for a named check, applying any overrides."""
    if overrides and name in overrides:
        return float(overrides[name])
    try:
        return DEFAULT_TOLERANCES[name]
    except KeyError:
        raise KeyError(f"unknown check name {name!r}; see DEFAULT_TOLERANCES") from None


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of one inequality or equality check.

    ``margin`` is bound minus value for one-sided checks (nonnegative when the
    inequality holds) and signed deviation for equality checks.  ``extra``
    carries secondary quantities such as floor bounds or lower margins.
    """

    name: str
    instance: str
    lhs: float
    rhs: float
    margin: float
    tolerance: float
    passed: bool
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "instance": self.instance,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "extra": dict(self.extra),
        }


def make_report(
    name: str,
    instance: str,
    lhs: float,
    rhs: float,
    margin: float,
    *,
    equality: bool = False,
    tolerances: dict[str, float] | None = None,
    extra: dict | None = None,
) -> InequalityReport:
    """Build a report, judging ``margin`` against the named tolerance."""
    tol = resolve_tolerance(name, tolerances)
    margin = float(margin)
    passed = abs(margin) <= tol if equality else margin >= -tol
    return InequalityReport(
        name=name,
        instance=instance,
        lhs=float(lhs),
        rhs=float(rhs),
        margin=margin,
        tolerance=tol,
        passed=bool(passed),
        extra=dict(extra or {}),
    )

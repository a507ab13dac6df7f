"""Reproducible test corpora of disk maps and minimal surfaces.

Every corpus member is generated from a per-case random stream keyed by
(seed, stream id, case index), so corpus content is independent of
generation order and identical across runs and machines for a fixed seed.
Fixed archetypes — the affine disk, the squared coordinate, the
real-parameter extremal family, and flat planar surfaces — are always
included, because the margin checks assert exact equality on them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ballgeom import BallAutomorphism
from .holodisk import (
    Blaschke,
    CMul,
    ComposeAut,
    Embed,
    HoloDisk,
    Identity,
    Mul,
    Poly,
    Vec,
    blaschke_product,
    extremal_family_1d,
    sup_boundary_norm,
)
from .reports import DomainError
from .weierstrass import (
    WeierstrassDisk,
    enneper_disk,
    planar_disk,
    rotated_planar_disk,
    scaled_into_ball,
    translated_planar_disk,
)

# Stream ids namespacing the per-case random streams.
HOLO_STREAM = 100
JULIA_STREAM = 200
SURFACE_STREAM = 300

# Fixed scalar archetypes with exactly-zero boundary margin; the embedded
# extremal family parameters exercised in every corpus.
FAMILY_PARAMETERS = (0.1, 0.3, 0.5, 0.7, 0.9)

_IN_BALL_SLACK = 1e-6


@dataclass(frozen=True)
class CorpusDisk:
    """A holomorphic corpus member with flags the suites key off of.

    ``equality_archetype`` marks members of the exact zero-margin set of the
    origin boundary bound; ``growth_equality`` marks maps whose interior
    growth bound is an identity at every point (affine disks and the squared
    coordinate), which is a strictly smaller class than the boundary one.
    """

    name: str
    disk: HoloDisk
    zero_at_origin: bool
    boundary_contact: complex | None
    equality_archetype: bool
    growth_equality: bool = False


@dataclass(frozen=True)
class CorpusJulia:
    """A Blaschke product normalized to fix 1, tagged with its factor count."""

    name: str
    disk: HoloDisk
    factors: int


@dataclass(frozen=True)
class CorpusSurface:
    """A Weierstrass corpus member with flags the suites key off of."""

    name: str
    surface: WeierstrassDisk
    planar_through_origin: bool
    boundary_contact_point: complex | None
    full_circle_contact: bool


def case_rng(seed: int, stream: int, index: int) -> np.random.Generator:
    """The per-case random stream; keying is part of the determinism contract."""
    return np.random.default_rng(np.random.SeedSequence((int(seed), int(stream), int(index))))


def _unit_vector(rng: np.random.Generator, m: int) -> np.ndarray:
    v = rng.normal(size=m) + 1j * rng.normal(size=m)
    return v / np.linalg.norm(v)


def _disk_point(rng: np.random.Generator, radius: float) -> complex:
    r = radius * np.sqrt(rng.random())
    t = 2.0 * np.pi * rng.random()
    return complex(r * np.cos(t), r * np.sin(t))


def _ball_point(rng: np.random.Generator, m: int, radius: float) -> np.ndarray:
    v = _unit_vector(rng, m)
    return radius * rng.random() ** (1.0 / (2 * m)) * v


def _embed(scalar: HoloDisk, u) -> HoloDisk:
    return Embed(scalar, u)


def _scaled_polynomial(rng: np.random.Generator, m: int) -> HoloDisk:
    degree = 2 + int(rng.integers(0, 5))
    rows = []
    for _ in range(m):
        coeffs = (rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)) / (
            1.0 + np.arange(degree + 1)
        )
        coeffs[0] = 0.0
        rows.append(Poly(coeffs))
    raw = rows[0] if m == 1 else Vec(rows)
    scale = 1.0 / ((1.0 + _IN_BALL_SLACK) * sup_boundary_norm(raw))
    return CMul(scale, raw)


def _contact_blaschke(rng: np.random.Generator, m: int) -> HoloDisk:
    n_factors = 1 + int(rng.integers(0, 2))
    node: HoloDisk = Identity()
    for _ in range(n_factors):
        node = Mul(node, Blaschke(_disk_point(rng, 0.8)))
    return _embed(node, _unit_vector(rng, m))


def holo_corpus(seed: int, m: int, count: int) -> list[CorpusDisk]:
    """Mixed corpus of maps D -> B_m; the first entries are fixed archetypes."""
    if count < 1:
        raise DomainError("count must be at least 1")
    if m < 1:
        raise DomainError("dimension must be at least 1")
    e1 = np.zeros(m, dtype=complex)
    e1[0] = 1.0
    members = [
        CorpusDisk("archetype-affine", _embed(Identity(), e1), True, 1.0 + 0j, True, True),
        CorpusDisk("archetype-square", _embed(Mul(Identity(), Identity()), e1), True, 1.0 + 0j, True, True),
        CorpusDisk("archetype-family-0.5", _embed(extremal_family_1d(0.5), e1), True, 1.0 + 0j, True),
    ]
    for a in FAMILY_PARAMETERS:
        members.append(
            CorpusDisk(f"family-{a}", _embed(extremal_family_1d(a), e1), True, 1.0 + 0j, True)
        )
    for index in range(len(members), count):
        rng = case_rng(seed, HOLO_STREAM + m, index)
        kind = index % 5
        if kind == 0:
            disk = _embed(Identity(), _unit_vector(rng, m))
            members.append(CorpusDisk(f"affine-{index}", disk, True, 1.0 + 0j, True, True))
        elif kind == 1:
            disk = _contact_blaschke(rng, m)
            members.append(CorpusDisk(f"zblaschke-{index}", disk, True, 1.0 + 0j, False))
        elif kind == 3:
            inner = _contact_blaschke(rng, m)
            aut = BallAutomorphism(_ball_point(rng, m, 0.6))
            members.append(
                CorpusDisk(f"composed-{index}", ComposeAut(aut, inner), False, 1.0 + 0j, False)
            )
        else:
            members.append(CorpusDisk(f"poly-{index}", _scaled_polynomial(rng, m), True, None, False))
    return members[:count]


def julia_corpus(seed: int, count: int, max_factors: int = 3) -> list[CorpusJulia]:
    """Blaschke products fixing 1; factor counts cycle through 1..max_factors."""
    if count < 1:
        raise DomainError("count must be at least 1")
    members = []
    for index in range(count):
        rng = case_rng(seed, JULIA_STREAM, index)
        n_factors = 1 + index % max_factors
        cs = [_disk_point(rng, 0.8) for _ in range(n_factors)]
        disk = blaschke_product(cs, include_z=False, fix_one=True)
        members.append(CorpusJulia(f"julia-{n_factors}-{index}", disk, n_factors))
    return members


def _random_surface(rng: np.random.Generator) -> WeierstrassDisk:
    p_degree = 1 + int(rng.integers(0, 4))
    q_degree = 1 + int(rng.integers(0, 4))
    tail = rng.normal(size=p_degree) + 1j * rng.normal(size=p_degree)
    # A dominant constant term keeps p zero-free on the closed disk.
    head = float(np.sum(np.abs(tail))) * (1.1 + rng.random()) * np.exp(2j * np.pi * rng.random())
    p = np.concatenate([[head], tail])
    q = rng.normal(size=q_degree + 1) + 1j * rng.normal(size=q_degree + 1)
    total = float(np.sum(np.abs(q)))
    if total > 0:
        q = q * (0.8 * rng.random() / total)
    base = 0.3 * rng.random() * np.asarray([rng.normal(), rng.normal(), rng.normal()])
    base = base / max(1.0, float(np.linalg.norm(base)))
    raw = WeierstrassDisk(p, q, base=tuple(base), halfsphere=True)
    return scaled_into_ball(raw, slack=_IN_BALL_SLACK)


def weierstrass_corpus(seed: int, count: int) -> list[CorpusSurface]:
    """Surface corpus: flat disks in several positions, Enneper, random data."""
    if count < 1:
        raise DomainError("count must be at least 1")
    members = [
        CorpusSurface("planar", planar_disk(), True, 1.0 + 0j, True),
        CorpusSurface("planar-rot-real", rotated_planar_disk(0.5), True, 1.0 + 0j, True),
        CorpusSurface("planar-rot-complex", rotated_planar_disk(0.3 + 0.4j), True, 1.0 + 0j, True),
        CorpusSurface("planar-shift-inplane", translated_planar_disk(0.4), False, 1.0 + 0j, False),
        CorpusSurface(
            "planar-shift-orthogonal", translated_planar_disk(0.6, orthogonal=True), False, 1.0 + 0j, True
        ),
        CorpusSurface("enneper-scaled", scaled_into_ball(enneper_disk()), False, None, False),
        CorpusSurface("enneper-halfsphere", scaled_into_ball(enneper_disk(0.9)), False, None, False),
    ]
    for index in range(len(members), count):
        rng = case_rng(seed, SURFACE_STREAM, index)
        members.append(CorpusSurface(f"surface-{index}", _random_surface(rng), False, None, False))
    return members[:count]


def corpus_generate(seed: int, m: int, count: int) -> list:
    """Combined reproducible corpus: disk members first, then surfaces.

    Returns :class:`CorpusDisk` descriptors for dimension ``m`` followed by
    :class:`CorpusSurface` descriptors; both lists are deterministic in
    ``(seed, m, count)``.
    """
    return list(holo_corpus(seed, m, count)) + list(weierstrass_corpus(seed, count))


__all__ = [
    "CorpusDisk",
    "CorpusJulia",
    "CorpusSurface",
    "FAMILY_PARAMETERS",
    "case_rng",
    "corpus_generate",
    "holo_corpus",
    "julia_corpus",
    "weierstrass_corpus",
]

"""Exact evaluation of the cocycle-dimension formula and its companion bounds.

For a group with signature (g; d_1, ..., d_m) acting on a real vector space
V, the space of 1-cocycles has dimension

    (2g - 1) dim V + dim (V*)^Gamma + sum_j (dim V - fix_j)
  = (1 - chi) dim V + dim (V*)^Gamma + sum_j (dim V / d_j - fix_j),

where fix_j is the fixed-space dimension of the image of the j-th torsion
generator.  Both lines are evaluated on every call and must agree; the
wrappers below supply the fix_j for the two concrete representation families
the package knows how to build (principal images on the adjoint
representation, permutation images on the exterior square of the standard
representation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .eigen import (
    Permutation,
    cycle_type_std_eigenprofile,
    exterior_square_fixed_dim,
    principal_fixed_dim,
)
from .liedata import RootSystem, dimension, exponents
from .presentation import FuchsianPresentation


class MismatchedPeriodsError(ValueError):
    """Torsion data does not pair up with the presentation's period list."""


class NonIntegerResultError(ValueError):
    """The rational form of the cocycle dimension failed to be an integer."""


class OrderMismatchError(ValueError):
    """A supplied permutation's order differs from its period."""


@dataclass(frozen=True)
class TorsionFixedData:
    """Per-generator torsion data for one cocycle-dimension evaluation.

    ``torsion`` lists (period, fixed-space dimension) pairs, one per torsion
    generator; ``invariant_dual_dim`` is dim (V*)^Gamma, a caller input since
    it is not computable from the signature alone.
    """

    torsion: tuple[tuple[int, int], ...]
    dim_v: int
    invariant_dual_dim: int = 0

    def __post_init__(self) -> None:
        if self.dim_v < 0 or self.invariant_dual_dim < 0:
            raise ValueError("dimensions must be non-negative")
        for d, fix in self.torsion:
            if d < 2:
                raise ValueError(f"period {d} < 2")
            if not 0 <= fix <= self.dim_v:
                raise ValueError(f"fixed dimension {fix} outside 0..{self.dim_v}")


def z1_dim(p: FuchsianPresentation, t: TorsionFixedData) -> int:
    """Cocycle-space dimension for the action described by ``t``.

    Evaluates both lines of the dimension formula exactly and checks they
    agree and are integral; a fractional value can only arise from
    inconsistent fix data and is rejected rather than rounded.
    """
    if tuple(sorted(d for d, _ in t.torsion)) != p.periods:
        raise MismatchedPeriodsError(
            f"torsion periods {sorted(d for d, _ in t.torsion)} do not match "
            f"presentation periods {list(p.periods)}"
        )
    first = (
        (2 * p.genus - 1) * t.dim_v
        + t.invariant_dual_dim
        + sum(t.dim_v - fix for _, fix in t.torsion)
    )
    chi = p.euler_characteristic()
    second = (
        (1 - chi) * t.dim_v
        + t.invariant_dual_dim
        + sum(Fraction(t.dim_v, d) - fix for d, fix in t.torsion)
    )
    if second.denominator != 1:
        raise NonIntegerResultError(f"cocycle dimension {second} is not an integer")
    if first != second:
        raise NonIntegerResultError(
            f"the two forms of the dimension formula disagree: {first} != {second}"
        )
    return first


def z1_dim_principal(p: FuchsianPresentation, rs: RootSystem) -> int:
    """Cocycle dimension at a principal representation on the adjoint module.

    The image is maximal, so its centralizer is finite and the dual
    invariants vanish; each torsion fix is the principal fixed dimension.
    """
    torsion = tuple((d, principal_fixed_dim(rs, d)) for d in p.periods)
    return z1_dim(p, TorsionFixedData(torsion, dimension(rs), 0))


def z1_dim_alternating_so(
    p: FuchsianPresentation,
    generators: Sequence[Permutation | tuple[int, ...] | list[int]],
    degree: int,
) -> int:
    """Cocycle dimension for a degree-N alternating image inside SO(N-1).

    ``generators`` gives one permutation (or bare cycle type) per period,
    with orders matching the periods; the module is the exterior square of
    the standard representation, of dimension (N-1)(N-2)/2 = dim SO(N-1),
    irreducible for N >= 6, so the dual invariants vanish.
    """
    if degree < 6:
        raise ValueError("need degree >= 6 for an irreducible exterior square")
    if len(generators) != len(p.periods):
        raise MismatchedPeriodsError(
            f"{len(generators)} generators for {len(p.periods)} periods"
        )
    pairs = []
    for gen in generators:
        if isinstance(gen, Permutation):
            if gen.degree != degree:
                raise MismatchedPeriodsError(
                    f"permutation degree {gen.degree} != {degree}"
                )
            lengths = gen.cycle_type()
        else:
            lengths = tuple(gen)
            if sum(lengths) != degree:
                raise MismatchedPeriodsError(
                    f"cycle type {lengths} does not fill {degree} points"
                )
        profile = cycle_type_std_eigenprofile(lengths)
        pairs.append((profile.order, exterior_square_fixed_dim(profile)))
    if tuple(sorted(d for d, _ in pairs)) != p.periods:
        raise OrderMismatchError(
            f"generator orders {sorted(d for d, _ in pairs)} do not match "
            f"periods {list(p.periods)}"
        )
    dim_v = (degree - 1) * (degree - 2) // 2
    return z1_dim(p, TorsionFixedData(tuple(pairs), dim_v, 0))


def upper_bound(p: FuchsianPresentation, dim_g: int, rank: int) -> Fraction:
    """Exact upper bound (1 - chi) dim G + (2g + m + r) + (3/2) m r.

    Dominates every cocycle dimension at a Zariski-dense representation: the
    dual-invariant term is at most 2g + m + r and each torsion fix is at
    least dim G / d - (3/2) r.
    """
    if dim_g < 1 or rank < 1:
        raise ValueError("dimension and rank must be positive")
    chi = p.euler_characteristic()
    return (
        (1 - chi) * dim_g
        + (2 * p.genus + p.m + rank)
        + Fraction(3, 2) * p.m * rank
    )


def density_criterion_compare(t_g: int, dim_g: int, t_h: int, dim_h: int) -> bool:
    """True iff t_G - dim G > t_H - dim H (the subgroup-comparison criterion)."""
    return t_g - dim_g > t_h - dim_h


def exceptional_inequality(p: FuchsianPresentation, rs: RootSystem) -> bool:
    """Rewritten form of t_G - dim G > t_SO(3) - dim SO(3) for principal data.

    Evaluates (2g - 2 + m)(dim G - 3) - sum_j sum_{e in E} (1 + 2 floor(e/d_j))
    where E is the exponent list with the single exponent 1 removed (that
    exponent is SO(3)'s and contributes exactly the SO(3) term for every
    period).  Agrees with ``density_criterion_compare`` fed by
    ``z1_dim_principal`` against the A1 data.
    """
    exps = list(exponents(rs))
    exps.remove(1)
    total = (2 * p.genus - 2 + p.m) * (dimension(rs) - 3)
    total -= sum(1 + 2 * (e // d) for d in p.periods for e in exps)
    return total > 0

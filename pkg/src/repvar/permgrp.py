"""Deterministic permutation-group engine and the shipped generating triples.

The engine is a plain Schreier-Sims stabilizer chain: base points are chosen
as the least moved point, orbits are grown breadth-first with generators in
list order, and every Schreier generator is sifted until the chain closes.
No randomization anywhere, so certification runs are reproducible bit for
bit.  Orders are exact arbitrary-precision integers; the degrees used by the
shipped data (12 and 14) are nowhere near any internal limit.

``APPENDIX_ENTRIES`` holds the six triples of even permutations, one per
non-SO(3)-dense signature, parsed from their printed cycle notation.  The
product convention is function composition: x1*x2*x3 applies x3 first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .cocycle import z1_dim_alternating_so
from .eigen import (
    DegreeMismatchError,
    Permutation,
    cycles_text,
    identity_perm,
    perm_compose,
    perm_from_cycles,
    perm_inverse,
    perm_order,
    perm_parity,
)
from .presentation import FuchsianPresentation


class StabilizerChain:
    """Stabilizer chain for the subgroup generated by ``gens``.

    ``base`` lists the stabilized points, ``transversals[i]`` maps each point
    of the i-th basic orbit to a coset representative u with
    u(base[i]) = point, and the group order is the product of orbit sizes.
    Chains are immutable once built and safe to share.
    """

    def __init__(self, gens: Sequence[Permutation]):
        if not gens:
            raise ValueError("need at least one generator")
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise DegreeMismatchError("generators must share a degree")
        self.degree = degree
        self.base: list[int] = []
        self.transversals: list[dict[int, Permutation]] = []
        self._sgens: list[Permutation] = []
        self._sgen_level: list[int] = []
        seed = [g for g in gens if not g.is_identity()]
        if seed:
            self._append_base_point(self._least_moved(seed[0]))
            for g in seed:
                self._sgens.append(g)
                self._sgen_level.append(self._fixed_prefix(g))
            self._close()

    def order(self) -> int:
        total = 1
        for tr in self.transversals:
            total *= len(tr)
        return total

    def level_generators(self, level: int) -> list[Permutation]:
        """Strong generators fixing the first ``level`` base points."""
        return [g for g, l in zip(self._sgens, self._sgen_level) if l >= level]

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatchError(f"degree {g.degree} != {self.degree}")
        residue, _ = self._sift(g, 0)
        return residue.is_identity()

    # -- construction internals -------------------------------------------

    @staticmethod
    def _least_moved(g: Permutation) -> int:
        return min(p for p in range(1, g.degree + 1) if g(p) != p)

    def _fixed_prefix(self, g: Permutation) -> int:
        level = 0
        while level < len(self.base) and g(self.base[level]) == self.base[level]:
            level += 1
        return level

    def _append_base_point(self, point: int) -> None:
        self.base.append(point)
        self.transversals.append({point: identity_perm(self.degree)})

    def _rebuild_orbit(self, level: int) -> None:
        gens = self.level_generators(level)
        tr = {self.base[level]: identity_perm(self.degree)}
        queue = [self.base[level]]
        while queue:
            p = queue.pop(0)
            u = tr[p]
            for s in gens:
                q = s(p)
                if q not in tr:
                    tr[q] = perm_compose(s, u)
                    queue.append(q)
        self.transversals[level] = tr

    def _sift(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        """Strip g through levels >= start; return (residue, level reached)."""
        for level in range(start, len(self.base)):
            image = g(self.base[level])
            u = self.transversals[level].get(image)
            if u is None:
                return g, level
            g = perm_compose(perm_inverse(u), g)
        return g, len(self.base)

    def _close(self) -> None:
        for level in range(len(self.base)):
            self._rebuild_orbit(level)
        level = len(self.base) - 1
        while level >= 0:
            self._rebuild_orbit(level)
            tr = self.transversals[level]
            gens = self.level_generators(level)
            restart = False
            for p in sorted(tr):
                u_p = tr[p]
                for s in gens:
                    u_q = tr.get(s(p))
                    if u_q is None:  # orbit grew stale under a new generator
                        restart = True
                        break
                    schreier = perm_compose(perm_inverse(u_q), perm_compose(s, u_p))
                    if schreier.is_identity():
                        continue
                    residue, drop = self._sift(schreier, level + 1)
                    if not residue.is_identity():
                        if drop == len(self.base):
                            self._append_base_point(self._least_moved(residue))
                        self._sgens.append(residue)
                        self._sgen_level.append(self._fixed_prefix(residue))
                        for lower in range(level + 1, len(self.base)):
                            self._rebuild_orbit(lower)
                        level = drop
                        restart = True
                        break
                if restart:
                    break
            if restart:
                continue
            level -= 1


def group_order(gens: Sequence[Permutation]) -> int:
    """Exact order of the subgroup generated inside the symmetric group."""
    return StabilizerChain(gens).order()


def generates_alternating(gens: Sequence[Permutation], n: int) -> bool:
    """True iff all generators are even, of degree n, and generate all of A_n."""
    if any(g.degree != n for g in gens):
        raise DegreeMismatchError(f"generators must have degree {n}")
    if any(perm_parity(g) == "odd" for g in gens):
        return False
    return group_order(gens) == factorial(n) // 2


@dataclass(frozen=True)
class AppendixEntry:
    """A labelled triple (x1, x2, x3) of permutations for one signature.

    The shipped entries satisfy x1*x2*x3 = 1 with orders matching the label's
    periods; arbitrary entries may violate that, which
    ``verify_appendix_entry`` reports as flags rather than errors.
    """

    label: str
    periods: tuple[int, int, int]
    degree: int
    x1: Permutation
    x2: Permutation
    x3: Permutation

    @property
    def generators(self) -> tuple[Permutation, Permutation, Permutation]:
        return (self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class AppendixReport:
    """Outcome flags of one certification run; ``ok`` is their conjunction."""

    label: str
    product_is_identity: bool
    order_matches: tuple[bool, bool, bool]
    all_even: tuple[bool, bool, bool]
    generates_alternating: bool
    z1_dim: int
    so_dim: int

    @property
    def margin(self) -> int:
        return self.z1_dim - self.so_dim

    @property
    def margin_positive(self) -> bool:
        return self.margin > 0

    @property
    def ok(self) -> bool:
        return (
            self.product_is_identity
            and all(self.order_matches)
            and all(self.all_even)
            and self.generates_alternating
            and self.margin_positive
        )


def verify_appendix_entry(entry: AppendixEntry) -> AppendixReport:
    """Certify one triple: product, orders, parities, generation, positivity.

    The positivity figure is the cocycle dimension at the alternating
    representation minus dim SO(degree - 1); failures show up as false flags
    in the report, never as exceptions.
    """
    product = perm_compose(perm_compose(entry.x1, entry.x2), entry.x3)
    orders = tuple(
        perm_order(x) == d for x, d in zip(entry.generators, entry.periods)
    )
    even = tuple(perm_parity(x) == "even" for x in entry.generators)
    gen_alt = generates_alternating(list(entry.generators), entry.degree)
    # the positivity figure needs order-faithful generators and a hyperbolic
    # label; a broken entry reports z1 = 0 so its margin flag reads false
    z1 = 0
    if all(orders):
        try:
            pres = FuchsianPresentation(0, entry.periods)
            z1 = z1_dim_alternating_so(pres, list(entry.generators), entry.degree)
        except ValueError:
            z1 = 0
    so_dim = (entry.degree - 1) * (entry.degree - 2) // 2
    return AppendixReport(
        label=entry.label,
        product_is_identity=product.is_identity(),
        order_matches=orders,
        all_even=even,
        generates_alternating=gen_alt,
        z1_dim=z1,
        so_dim=so_dim,
    )


def entry_to_text(entry: AppendixEntry) -> str:
    """Serialize: ``gamma=d1,d2,d3;degree=n`` header plus three cycle lines."""
    header = "gamma=%d,%d,%d;degree=%d" % (*entry.periods, entry.degree)
    return "\n".join([header, *(cycles_text(x) for x in entry.generators)]) + "\n"


def parse_entry_text(text: str) -> AppendixEntry:
    """Parse the ``entry_to_text`` format; blank lines are ignored."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 4:
        raise ValueError("expected a header line and exactly three cycle lines")
    header = lines[0]
    parts = header.split(";")
    if (
        len(parts) != 2
        or not parts[0].startswith("gamma=")
        or not parts[1].startswith("degree=")
    ):
        raise ValueError(f"bad header {header!r}")
    try:
        periods = tuple(int(tok) for tok in parts[0][len("gamma="):].split(","))
        degree = int(parts[1][len("degree="):])
    except ValueError:
        raise ValueError(f"bad header {header!r}") from None
    if len(periods) != 3:
        raise ValueError("entries carry exactly three periods")
    perms = tuple(perm_from_cycles(line, degree) for line in lines[1:])
    label = "%d,%d,%d" % periods
    return AppendixEntry(label, periods, degree, *perms)


def _entry(periods: tuple[int, int, int], degree: int, c1: str, c2: str, c3: str) -> AppendixEntry:
    return AppendixEntry(
        label="%d,%d,%d" % periods,
        periods=periods,
        degree=degree,
        x1=perm_from_cycles(c1, degree),
        x2=perm_from_cycles(c2, degree),
        x3=perm_from_cycles(c3, degree),
    )


# the six certified triples, in printed order, cycle notation verbatim
APPENDIX_ENTRIES: tuple[AppendixEntry, ...] = (
    _entry(
        (2, 4, 6), 14,
        "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)",
        "(1 10 9 8)(2 14 13 3)(4 5)(6 7 12 11)",
        "(1 3 5 11 7 9)(2 8 6 4 13 14)",
    ),
    _entry(
        (2, 6, 6), 14,
        "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)",
        "(1 14 8 7 4 2)(3 5 13 11 9 6)",
        "(1 4 6 3 7 14)(5 9 10 11 12 13)",
    ),
    _entry(
        (3, 6, 6), 12,
        "(1 2 3)(4 5 6)(7 8 9)(10 11 12)",
        "(1 12 11 6 2 3)(4 10 8 9 5 7)",
        "(1 2 3 6 9 10)(4 11)(5 7 8)",
    ),
    _entry(
        (3, 4, 4), 14,
        "(1 2 3)(4 5 6)(7 8 9)(10 11 12)",
        "(1 14 11 12)(2 3 4 5)(7 10 13 9)(6 8)",
        "(1 2 12 14)(3 5)(4 8 9 6)(7 13 10 11)",
    ),
    _entry(
        (2, 6, 10), 12,
        "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)",
        "(1 8 6 7 5 3)(4 10 11)(9 12)",
        "(1 2 3 11 9 4 5 8 6 7)(10 12)",
    ),
    _entry(
        (4, 6, 12), 12,
        "(1 4 3 2)(5 8 7 6)(9 10)(11 12)",
        "(1 2 5 9 10 3)(4 7 11 8 6 12)",
        "(2 10 5 8)(3 12 7 11 6 4)",
    ),
)


def entry_by_label(label: str) -> AppendixEntry:
    """Look up a shipped entry by its ``d1,d2,d3`` label."""
    key = label.strip()
    for entry in APPENDIX_ENTRIES:
        if entry.label == key:
            return entry
    raise KeyError(f"no appendix entry labelled {label!r}")

"""Normal subgroup lattice, solvable radical, cores, and group recognition.

Normal subgroups are generated as class-union closures, so the lattice BFS is
complete.  Recognition of the three named targets (A5, L2(8), SL2(5)) is by
order, perfectness and center size, cross-checked against simplicity data
from the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .chartab import compute_table, real_degree_set
from .errors import CapacityError, InternalError
from .perm import (
    ClassData,
    GroupElements,
    center,
    commutator_subgroup,
    conjugacy_classes,
    derived_series_limit,
    generators_of,
    subgroup_closure,
    subgroup_elements,
)

DEFAULT_LATTICE_CAP = 10_000


@dataclass(frozen=True)
class NormalLattice:
    """All normal subgroups, as index sets sorted by (order, elements)."""

    members: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.members)

    def of_order(self, n: int) -> list[frozenset[int]]:
        return [m for m in self.members if len(m) == n]


def normal_subgroups(
    g: GroupElements, cd: ClassData | None = None, cap: int = DEFAULT_LATTICE_CAP
) -> NormalLattice:
    """BFS over closures of (normal subgroup) union (conjugacy class)."""
    cd = cd if cd is not None else conjugacy_classes(g)
    trivial = frozenset({0})
    known = {trivial}
    queue = [trivial]
    qi = 0
    while qi < len(queue):
        n = queue[qi]
        qi += 1
        for cls in cd.classes:
            if cls[0] in n:
                continue
            m = subgroup_closure(g, set(n) | set(cls))
            if m not in known:
                if len(known) >= cap:
                    raise CapacityError(
                        f"normal subgroup lattice exceeds the cap {cap}", cap
                    )
                known.add(m)
                queue.append(m)
    members = sorted(known, key=lambda s: (len(s), sorted(s)))
    return NormalLattice(members=tuple(members))


def is_solvable(g: GroupElements, members: Iterable[int]) -> bool:
    """Derived series of the subgroup reaches the trivial subgroup."""
    current = frozenset(members)
    while True:
        nxt = commutator_subgroup(g, current, current)
        if len(nxt) == 1:
            return True
        if nxt == current:
            return False
        current = nxt


def solvable_radical(g: GroupElements, cd: ClassData, lat: NormalLattice) -> frozenset[int]:
    """Largest solvable normal subgroup; must contain every solvable member."""
    solvable = [m for m in lat.members if is_solvable(g, m)]
    rad = max(solvable, key=len)
    for m in solvable:
        if not m <= rad:
            raise InternalError("solvable members are not all inside the largest one")
    return rad


def core_subgroups(
    g: GroupElements, radical: Iterable[int]
) -> tuple[frozenset[int], frozenset[int]]:
    """(largest normal 2-subgroup, largest odd-order normal subgroup) of the
    radical, relative to the radical itself, as index sets of ``g``."""
    rad = frozenset(radical)
    sub = subgroup_elements(g, rad, "radical")
    lat = normal_subgroups(sub)
    two_part = max(
        (m for m in lat.members if _is_power_of_two(len(m))), key=len
    )
    odd_part = max((m for m in lat.members if len(m) % 2 == 1), key=len)
    to_parent = lambda s: frozenset(g.index[sub.perm(i).images] for i in s)
    return to_parent(two_part), to_parent(odd_part)


def _is_power_of_two(n: int) -> bool:
    return n & (n - 1) == 0


def subgroup_center(g: GroupElements, members: Iterable[int]) -> frozenset[int]:
    """Center of a subgroup, as an index set of ``g``."""
    mset = frozenset(members)
    gens = generators_of(g, mset) or [0]
    table = g.table
    return frozenset(
        x for x in mset if all(table.mul(x, t) == table.mul(t, x) for t in gens)
    )


def is_perfect(g: GroupElements, members: Iterable[int]) -> bool:
    mset = frozenset(members)
    return commutator_subgroup(g, mset, mset) == mset


def chillag_mann_type(g: GroupElements, seed: int = 0) -> bool:
    """Every real-valued irreducible character is linear."""
    t = compute_table(g, conjugacy_classes(g), seed)
    return all(d == 1 for d in real_degree_set(t).multiset)


def chillag_mann_subgroup(g: GroupElements, members: Iterable[int], seed: int = 0) -> bool:
    sub = subgroup_elements(g, frozenset(members), "cm_check")
    return chillag_mann_type(sub, seed)


def recognize(kg: GroupElements, lat: NormalLattice | None = None) -> str:
    """One of 'A5', 'L2_8', 'SL2_5', 'other', by invariants.

    Among the groups this tool classifies, order + perfectness (+ center
    size) pin down the three targets; the lattice cross-check guards the
    recognizer against bad inputs.
    """
    order = kg.order
    whole = frozenset(range(order))
    if order == 60 and is_perfect(kg, whole):
        _cross_check_simple(kg, lat, "A5")
        return "A5"
    if order == 504 and is_perfect(kg, whole):
        _cross_check_simple(kg, lat, "L2_8")
        return "L2_8"
    if order == 120 and is_perfect(kg, whole):
        z = center(kg)
        if len(z) == 2:
            lat = lat if lat is not None else normal_subgroups(kg)
            proper = [m for m in lat.members if 1 < len(m) < order]
            if len(proper) != 1 or proper[0] != z:
                raise InternalError(
                    "group of order 120 looked like SL2(5) but its lattice disagrees"
                )
            return "SL2_5"
    return "other"


def _cross_check_simple(kg: GroupElements, lat: NormalLattice | None, label: str) -> None:
    lat = lat if lat is not None else normal_subgroups(kg)
    if len(lat.members) != 2:
        raise InternalError(f"recognizer matched {label} but the group is not simple")


def internal_direct_product(
    g: GroupElements, a: Iterable[int], b: Iterable[int], whole: Iterable[int] | None = None
) -> bool:
    """A x B = the whole group: trivial intersection, full order, commuting."""
    aset, bset = frozenset(a), frozenset(b)
    total = len(whole if whole is not None else range(g.order))
    if aset & bset != frozenset({0}) or len(aset) * len(bset) != total:
        return False
    table = g.table
    gens_a = generators_of(g, aset)
    gens_b = generators_of(g, bset)
    return all(
        table.mul(x, y) == table.mul(y, x) for x in gens_a for y in gens_b
    )


def central_product_check(
    g: GroupElements, k: Iterable[int], h: Iterable[int]
) -> bool:
    """K and H commute elementwise, K n H = Z(K), and Z(K) < H strictly."""
    kset, hset = frozenset(k), frozenset(h)
    table = g.table
    gens_k = generators_of(g, kset) or [0]
    gens_h = generators_of(g, hset) or [0]
    if any(table.mul(x, y) != table.mul(y, x) for x in gens_k for y in gens_h):
        return False
    zk = subgroup_center(g, kset)
    return kset & hset == zk and zk < hset


@dataclass(frozen=True)
class StructureReport:
    """Radical/derived-limit decomposition data for one group."""

    radical: frozenset[int]
    k: frozenset[int]
    o2_rad: frozenset[int]
    o2p_rad: frozenset[int]
    center_k: frozenset[int]
    is_solvable: bool
    is_perfect: bool
    is_simple: bool


def analyze(
    g: GroupElements, cd: ClassData | None = None, lat: NormalLattice | None = None
) -> StructureReport:
    cd = cd if cd is not None else conjugacy_classes(g)
    lat = lat if lat is not None else normal_subgroups(g, cd)
    rad = solvable_radical(g, cd, lat)
    k = derived_series_limit(g)
    o2, o2p = core_subgroups(g, rad)
    if o2 & o2p != frozenset({0}):
        raise InternalError("the 2-core and odd core of the radical intersect")
    return StructureReport(
        radical=rad,
        k=k,
        o2_rad=o2,
        o2p_rad=o2p,
        center_k=subgroup_center(g, k),
        is_solvable=len(rad) == g.order,
        is_perfect=len(k) == g.order,
        is_simple=len(lat.members) == 2 and g.order > 1,
    )

"""Finite categories, orbit categories, and fundamental groups of nerves.

A FinCategory stores its objects, morphisms, and a total composition
table on composable pairs.  Orbit categories O_A(G) have one object G/H
per subgroup H in a conjugation- and intersection-closed family A, with
hom(G/H, G/K) = {gK : g^-1 H g <= K}.  The fundamental group of the
nerve is presented with one generator per non-identity morphism, one
relation per composable pair, and one trivializing relation per spanning
tree edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .errors import BadBasepoint, EmptyFamily, SizeError
from .fp import FpGroup, Word
from .perm import Perm, PermGroup, Subgroup

MAX_FAMILY = 4096


@dataclass(frozen=True)
class Morphism:
    src: int
    dst: int
    label: Hashable


class FinCategory:
    """A finite category with an explicit composition table.

    Objects are sortable hashable labels; morphisms are indexed and the
    composition table maps (g_index, f_index) -> (g o f)_index for every
    pair with dst(f) = src(g).  ``object_info`` carries optional payload
    data per object (orbit categories store the subgroup there).
    """

    def __init__(
        self,
        objects: Sequence[Hashable],
        morphisms: Sequence[Morphism],
        identity_of: Sequence[int],
        compose_table: dict[tuple[int, int], int],
        object_info: Optional[Sequence[object]] = None,
    ):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.identity_of = tuple(identity_of)
        self.compose_table = dict(compose_table)
        self.object_info = tuple(object_info) if object_info is not None else None
        self._check_basic()

    def _check_basic(self) -> None:
        n = len(self.objects)
        if len(set(self.objects)) != n:
            raise ValueError("duplicate object labels")
        if len(self.identity_of) != n:
            raise ValueError("need one identity per object")
        for o, mi in enumerate(self.identity_of):
            m = self.morphisms[mi]
            if m.src != o or m.dst != o:
                raise ValueError(f"identity of object {o} is not an endomorphism")
        for m in self.morphisms:
            if not (0 <= m.src < n and 0 <= m.dst < n):
                raise ValueError("morphism endpoint out of range")
        for (g, f), h in self.compose_table.items():
            mf, mg, mh = self.morphisms[f], self.morphisms[g], self.morphisms[h]
            if mf.dst != mg.src or mh.src != mf.src or mh.dst != mg.dst:
                raise ValueError("composition table violates source/target")
        for f, mf in enumerate(self.morphisms):
            for g, mg in enumerate(self.morphisms):
                if mf.dst == mg.src and (g, f) not in self.compose_table:
                    raise ValueError("composition table not total on composable pairs")
        for f, mf in enumerate(self.morphisms):
            if self.compose_table[(self.identity_of[mf.dst], f)] != f:
                raise ValueError("left unit law fails")
            if self.compose_table[(f, self.identity_of[mf.src])] != f:
                raise ValueError("right unit law fails")

    def compose(self, g: int, f: int) -> int:
        """Index of g o f; f acts first."""
        return self.compose_table[(g, f)]

    def is_identity_morphism(self, i: int) -> bool:
        return self.identity_of[self.morphisms[i].src] == i and (
            self.morphisms[i].src == self.morphisms[i].dst
        )

    def hom(self, x: int, y: int) -> list[int]:
        return [
            i
            for i, m in enumerate(self.morphisms)
            if m.src == x and m.dst == y
        ]

    def validate(self) -> None:
        """Exhaustively check unit and associativity laws."""
        for f, mf in enumerate(self.morphisms):
            if self.compose(self.identity_of[mf.dst], f) != f:
                raise ValueError("left unit law fails")
            if self.compose(f, self.identity_of[mf.src]) != f:
                raise ValueError("right unit law fails")
        for f, mf in enumerate(self.morphisms):
            for g, mg in enumerate(self.morphisms):
                if mf.dst != mg.src:
                    continue
                gf = self.compose(g, f)
                for h, mh in enumerate(self.morphisms):
                    if mg.dst != mh.src:
                        continue
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                        raise ValueError("associativity fails")

    def to_json(self) -> dict:
        """Schema: objects, morphisms with (src, dst), composition table.

        Orbit categories carry subgroup metadata (order and member images)
        per object.
        """
        out: dict = {
            "schema": 1,
            "objects": list(self.objects),
            "morphisms": [{"src": m.src, "dst": m.dst} for m in self.morphisms],
            "identities": list(self.identity_of),
            "composition": [
                [g, f, h] for (g, f), h in sorted(self.compose_table.items())
            ],
        }
        if self.object_info is not None:
            info = []
            for payload in self.object_info:
                if isinstance(payload, Subgroup):
                    info.append(
                        {
                            "subgroup_order": payload.order,
                            "members": [list(m.images) for m in payload.members],
                        }
                    )
                else:
                    info.append(None)
            out["object_info"] = info
        return out

    def object_components(self) -> list[list[int]]:
        """Connected components of objects under the morphism graph."""
        n = len(self.objects)
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for m in self.morphisms:
            a, b = find(m.src), find(m.dst)
            if a != b:
                parent[max(a, b)] = min(a, b)
        comps: dict[int, list[int]] = {}
        for o in range(n):
            comps.setdefault(find(o), []).append(o)
        return [sorted(c) for _, c in sorted(comps.items())]


def category_from_group(G: PermGroup) -> FinCategory:
    """The one-object category whose endomorphisms are the group."""
    els = G.elements
    index = {g: i for i, g in enumerate(els)}
    morphisms = [Morphism(0, 0, g) for g in els]
    table = {
        (j, i): index[els[j] * els[i]]
        for i in range(len(els))
        for j in range(len(els))
    }
    return FinCategory([0], morphisms, [index[G.identity]], table)


def category_from_poset(
    labels: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool]
) -> FinCategory:
    """The category of a finite poset: one morphism x -> y iff x <= y."""
    labels = tuple(labels)
    pairs = [
        (i, j)
        for i in range(len(labels))
        for j in range(len(labels))
        if leq(labels[i], labels[j])
    ]
    mindex = {p: k for k, p in enumerate(pairs)}
    morphisms = [Morphism(i, j, (labels[i], labels[j])) for i, j in pairs]
    identity_of = [mindex[(i, i)] for i in range(len(labels))]
    table = {}
    for f, (i, j) in enumerate(pairs):
        for g, (j2, k) in enumerate(pairs):
            if j == j2:
                table[(g, f)] = mindex[(i, k)]
    return FinCategory(labels, morphisms, identity_of, table)


# -- subgroup families ------------------------------------------------------


class SubgroupFamily:
    """A family of subgroups with verified closure flags.

    The flags record what actually holds of the member list: closure
    under conjugation by the ambient group, closure under pairwise
    intersection, and containment of the trivial subgroup.
    """

    def __init__(self, group: PermGroup, members: Iterable[Subgroup]):
        self.group = group
        dedup: dict[tuple, Subgroup] = {}
        for H in members:
            if H.parent is not group:
                raise ValueError("family member from a different group")
            dedup.setdefault(H.member_key(), H)
        self.members: tuple[Subgroup, ...] = tuple(
            sorted(dedup.values(), key=lambda s: (s.order, s.member_key()))
        )
        keys = set(dedup.keys())
        self.closed_under_conjugation = all(
            H.conjugate(g).member_key() in keys
            for H in self.members
            for g in group.generators
        )
        self.closed_under_intersection = all(
            A.intersection(B).member_key() in keys
            for A in self.members
            for B in self.members
        )
        self.contains_trivial = any(H.order == 1 for H in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return (
            f"SubgroupFamily({len(self.members)} subgroups, "
            f"conj={self.closed_under_conjugation}, "
            f"int={self.closed_under_intersection})"
        )


def close_family(
    G: PermGroup, seed: Iterable[Subgroup], drop_trivial: bool = False
) -> SubgroupFamily:
    """Smallest family containing the seed, closed under conjugation by G
    and pairwise intersection; the trivial subgroup is removed iff
    ``drop_trivial``."""
    current: dict[tuple, Subgroup] = {}
    queue = list(seed)
    while queue:
        H = queue.pop()
        key = H.member_key()
        if key in current:
            continue
        current[key] = H
        if len(current) > MAX_FAMILY:
            raise SizeError("subgroup family closure blow-up")
        for g in G.elements:
            C = H.conjugate(g)
            if C.member_key() not in current:
                queue.append(C)
        for other in list(current.values()):
            I = H.intersection(other)
            if I.member_key() not in current:
                queue.append(I)
    members = list(current.values())
    if drop_trivial:
        members = [H for H in members if H.order > 1]
    return SubgroupFamily(G, members)


# -- orbit categories --------------------------------------------------------


def orbit_category(G: PermGroup, family: SubgroupFamily) -> FinCategory:
    """The orbit category on G/H for H in the family.

    One object per family member (conjugate members give isomorphic
    objects); hom(G/H, G/K) = {gK : g^-1 H g <= K} with composition
    (gK then g'L) = g g' L and identity eH.
    """
    if family.group is not G:
        raise ValueError("family belongs to a different group")
    if not family.members:
        raise EmptyFamily("orbit category over an empty family")
    subs = family.members
    elements = G.elements
    # cosets of each subgroup, by canonical (minimal) representative
    coset_reps: list[list[Perm]] = []
    coset_index: list[dict[Perm, int]] = []
    for K in subs:
        kset = list(K.members)
        seen: dict[Perm, int] = {}
        reps: list[Perm] = []
        for g in elements:
            if g in seen:
                continue
            coset = sorted(g * k for k in kset)
            idx = len(reps)
            reps.append(coset[0])
            for c in coset:
                seen[c] = idx
        coset_reps.append(reps)
        coset_index.append(seen)
    morphisms: list[Morphism] = []
    mor_index: dict[tuple[int, int, int], int] = {}
    for i, H in enumerate(subs):
        for j, K in enumerate(subs):
            kset = set(K.members)
            for ci, g in enumerate(coset_reps[j]):
                ginv = g.inverse()
                if all(ginv * h * g in kset for h in H.members):
                    mor_index[(i, j, ci)] = len(morphisms)
                    morphisms.append(Morphism(i, j, (i, j, g)))
    identity_of = []
    for i in range(len(subs)):
        ci = coset_index[i][G.identity]
        identity_of.append(mor_index[(i, i, ci)])
    table: dict[tuple[int, int], int] = {}
    for (i, j, ci), f in mor_index.items():
        g_rep = coset_reps[j][ci]
        for (j2, l, cj), s in mor_index.items():
            if j2 != j:
                continue
            comp_rep = g_rep * coset_reps[l][cj]
            table[(s, f)] = mor_index[(i, l, coset_index[l][comp_rep])]
    return FinCategory(
        tuple(range(len(subs))),
        morphisms,
        identity_of,
        table,
        object_info=subs,
    )


def reduced_orbit_category(G: PermGroup, family: SubgroupFamily) -> FinCategory:
    """Orbit category on the family with the trivial subgroup removed."""
    nontrivial = [H for H in family.members if H.order > 1]
    if not nontrivial:
        raise EmptyFamily("no nontrivial subgroups in family")
    return orbit_category(G, SubgroupFamily(G, nontrivial))


# -- nerve invariants ---------------------------------------------------------


def nerve_pi0(C: FinCategory) -> list[list[Hashable]]:
    """Components of the nerve: objects under the undirected morphism graph."""
    return [[C.objects[o] for o in comp] for comp in C.object_components()]


def nerve_pi1_presentation(C: FinCategory, basepoint: Hashable) -> FpGroup:
    """Fundamental group of the nerve at the basepoint's component.

    Generators: the non-identity morphisms of the component.  Relations:
    [g o f] = [g][f] for every composable pair (identity morphisms map to
    the empty word), plus one trivializing relation per edge of a
    breadth-first spanning tree rooted at the least object of the
    component, edges taken in morphism-index order.
    """
    try:
        bp = C.objects.index(basepoint)
    except ValueError:
        raise BadBasepoint(f"{basepoint!r} is not an object") from None
    comp = next(c for c in C.object_components() if bp in c)
    comp_set = set(comp)
    in_comp = [
        i
        for i, m in enumerate(C.morphisms)
        if m.src in comp_set and m.dst in comp_set
    ]
    gen_of: dict[int, int] = {}
    for i in in_comp:
        if not C.is_identity_morphism(i):
            gen_of[i] = len(gen_of) + 1
    # breadth-first spanning tree from the least object of the component
    adjacency: dict[int, list[tuple[int, int]]] = {o: [] for o in comp}
    for i in in_comp:
        m = C.morphisms[i]
        if m.src != m.dst:
            adjacency[m.src].append((i, m.dst))
            adjacency[m.dst].append((i, m.src))
    for o in comp:
        adjacency[o].sort()
    root = min(comp)
    visited = {root}
    tree_edges: set[int] = set()
    frontier = [root]
    while frontier:
        nxt = []
        for o in frontier:
            for mi, other in adjacency[o]:
                if other not in visited:
                    visited.add(other)
                    tree_edges.add(mi)
                    nxt.append(other)
        frontier = nxt
    relators: list[Word] = []
    for t in sorted(tree_edges):
        relators.append((gen_of[t],))
    for (g, f), h in sorted(C.compose_table.items()):
        if f not in gen_of or g not in gen_of:
            # identity morphisms contribute the empty word: relation trivial
            continue
        word = [gen_of[g], gen_of[f]]
        if h in gen_of:
            word.append(-gen_of[h])
        relators.append(tuple(word))
    return FpGroup(len(gen_of), tuple(relators))

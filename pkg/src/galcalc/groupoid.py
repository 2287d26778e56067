"""Finite groupoids: deloopings, homotopy invariants, and hom-groupoids.

The hom-groupoid Hom(BG, BG') is computed two ways: by the structural
formula (components = conjugacy classes of homomorphisms, automorphisms
= centralizer of the image) and by a definitional brute-force functor
enumeration.  The two paths are kept independent so they can be checked
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .catalogue import name_group
from .errors import BadBasepoint, SizeError
from .gset import GSet
from .orbitcat import FinCategory, Morphism
from .perm import (
    GroupHom,
    Perm,
    PermGroup,
    Subgroup,
    find_isomorphism,
    hom_conjugacy_classes,
    homomorphisms,
)

DELOOPING_BOUND = 512
FUNCTOR_SEARCH_BOUND = 10**4


class FinGroupoid(FinCategory):
    """A finite category in which every morphism is invertible."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._check_invertible()

    def _check_invertible(self) -> None:
        for i, m in enumerate(self.morphisms):
            has_inverse = any(
                self.morphisms[j].src == m.dst
                and self.morphisms[j].dst == m.src
                and self.compose_table[(j, i)] == self.identity_of[m.src]
                and self.compose_table[(i, j)] == self.identity_of[m.dst]
                for j in range(len(self.morphisms))
            )
            if not has_inverse:
                raise ValueError(f"morphism {i} has no inverse")


def delooping(G: PermGroup) -> FinGroupoid:
    """BG: one object whose automorphisms are the group elements."""
    if G.order > DELOOPING_BOUND:
        raise SizeError(f"delooping bound {DELOOPING_BOUND} exceeded")
    els = G.elements
    index = {g: i for i, g in enumerate(els)}
    morphisms = [Morphism(0, 0, g) for g in els]
    table = {
        (j, i): index[els[j] * els[i]]
        for i in range(len(els))
        for j in range(len(els))
    }
    return FinGroupoid([0], morphisms, [index[G.identity]], table)


def disjoint_union(*pieces: FinGroupoid) -> FinGroupoid:
    """Disjoint union of groupoids, objects retagged by piece index."""
    objects: list[Hashable] = []
    morphisms: list[Morphism] = []
    identity_of: list[int] = []
    table: dict[tuple[int, int], int] = {}
    for pi, X in enumerate(pieces):
        obj_off = len(objects)
        mor_off = len(morphisms)
        objects.extend((pi, o) for o in X.objects)
        morphisms.extend(
            Morphism(m.src + obj_off, m.dst + obj_off, (pi, m.label))
            for m in X.morphisms
        )
        identity_of.extend(mi + mor_off for mi in X.identity_of)
        for (g, f), h in X.compose_table.items():
            table[(g + mor_off, f + mor_off)] = h + mor_off
    return FinGroupoid(objects, morphisms, identity_of, table)


def action_groupoid(X: GSet) -> FinGroupoid:
    """The action groupoid: objects are points, morphisms are (g, x)."""
    G = X.group
    els = G.elements
    eindex = {g: i for i, g in enumerate(els)}
    n = len(X.points)
    morphisms = []
    mindex: dict[tuple[int, int], int] = {}
    for x in range(n):
        for gi, g in enumerate(els):
            mindex[(gi, x)] = len(morphisms)
            morphisms.append(Morphism(x, X.act(g, x), (g, x)))
    identity_of = [mindex[(eindex[G.identity], x)] for x in range(n)]
    table = {}
    for (gi, x), f in mindex.items():
        mid = X.act(els[gi], x)
        for (hi, x2), s in mindex.items():
            if x2 == mid:
                table[(s, f)] = mindex[(eindex[els[hi] * els[gi]], x)]
    return FinGroupoid(list(range(n)), morphisms, identity_of, table)


def pi0(X: FinCategory) -> list[list[Hashable]]:
    """Isomorphism classes of objects (zigzag = direct connectivity)."""
    return [[X.objects[o] for o in comp] for comp in X.object_components()]


def pi1(X: FinGroupoid, basepoint: Hashable) -> PermGroup:
    """Automorphism group of the basepoint as a permutation group.

    The group acts by postcomposition on the set of morphisms into the
    basepoint, which is a faithful action.
    """
    try:
        bp = X.objects.index(basepoint)
    except ValueError:
        raise BadBasepoint(f"{basepoint!r} is not an object") from None
    loops = [i for i, m in enumerate(X.morphisms) if m.src == bp and m.dst == bp]
    anchored = [i for i, m in enumerate(X.morphisms) if m.dst == bp]
    pos = {mi: k for k, mi in enumerate(anchored)}
    gens = []
    for a in loops:
        gens.append(Perm(pos[X.compose_table[(a, m)]] for m in anchored))
    group = PermGroup(len(anchored), gens)
    assert group.order == len(loops)
    return group


@dataclass(frozen=True)
class HomGroupoidReport:
    """Components of Hom(BG, BG') with automorphism groups.

    One entry per conjugacy class of homomorphisms G -> G': the least
    representative and the centralizer in G' of its image.
    """

    source: PermGroup
    target: PermGroup
    components: tuple[tuple[GroupHom, Subgroup], ...]

    def component_count(self) -> int:
        return len(self.components)

    def automorphism_orders(self) -> list[int]:
        return [c.order for _, c in self.components]

    def to_json(self) -> dict:
        comps = []
        for rep, cent in self.components:
            cgroup = cent.as_group()
            comps.append(
                {
                    "representative": {
                        "generator_images": [list(p.images) for p in rep.gen_images]
                    },
                    "automorphisms": {
                        "order": cent.order,
                        "group": name_group(cgroup),
                    },
                }
            )
        return {
            "schema": 1,
            "source": self.source.name,
            "target": self.target.name,
            "components": comps,
        }


def hom_groupoid(G: PermGroup, H: PermGroup) -> HomGroupoidReport:
    """Hom(BG, BH) by the structural formula.

    Components are conjugacy classes of homomorphisms; the automorphism
    group at a representative f is the centralizer in H of f(G).
    """
    classes = hom_conjugacy_classes(G, H)
    components = []
    for cls in classes:
        rep = cls[0]
        cent = H.centralizer(rep.image_elements())
        components.append((rep, cent))
    return HomGroupoidReport(G, H, tuple(components))


def hom_groupoid_bruteforce(G: PermGroup, H: PermGroup) -> FinGroupoid:
    """Hom(BG, BH) as a definitional functor groupoid.

    Objects are all functors BG -> BH (i.e. all homomorphisms); morphisms
    are all natural isomorphisms, i.e. elements x of H with
    x f(g) x^-1 = f'(g) for every g.  Serves as the oracle for the
    structural formula.
    """
    if G.order * H.order > FUNCTOR_SEARCH_BOUND:
        raise SizeError("functor enumeration bound exceeded")
    homs = homomorphisms(G, H)
    hindex = {f.key(): i for i, f in enumerate(homs)}
    morphisms = []
    mindex: dict[tuple[int, Perm], int] = {}
    for fi, f in enumerate(homs):
        for x in H.elements:
            xi = x.inverse()
            conj_key = tuple((x * img * xi).images for img in f.gen_images)
            ti = hindex[conj_key]
            mindex[(fi, x)] = len(morphisms)
            morphisms.append(Morphism(fi, ti, (fi, x)))
    identity_of = [mindex[(fi, H.identity)] for fi in range(len(homs))]
    table = {}
    for (fi, x), mor_f in mindex.items():
        mid = morphisms[mor_f].dst
        for y in H.elements:
            mor_g = mindex[(mid, y)]
            table[(mor_g, mor_f)] = mindex[(fi, y * x)]
    return FinGroupoid(
        list(range(len(homs))),
        morphisms,
        identity_of,
        table,
        object_info=homs,
    )


def hom_groupoids_agree(G: PermGroup, H: PermGroup) -> bool:
    """Check the structural formula against the brute-force oracle.

    Compares component counts and, per component, the isomorphism type of
    the automorphism group of the report against pi1 of the functor
    groupoid at the matching object.
    """
    report = hom_groupoid(G, H)
    brute = hom_groupoid_bruteforce(G, H)
    comps = brute.object_components()
    if len(comps) != report.component_count():
        return False
    homs = brute.object_info
    assert homs is not None
    for rep, cent in report.components:
        obj = next(
            i for i, f in enumerate(homs) if f.key() == rep.key()
        )
        comp = next(c for c in comps if obj in c)
        del comp
        auts = pi1(brute, obj)
        if find_isomorphism(auts, cent.as_group()) is None:
            return False
    return True

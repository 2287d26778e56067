"""Finite G-sets: the Galois category of a finite group at desk scale.

A GSet stores a left action of a PermGroup on a finite carrier, with the
action maps of all group elements built from generator images and
verified exhaustively during construction.  Torsors carry an auxiliary
commuting action; torsor isomorphism testing is brute force over the
carrier bijections compatible with both actions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .errors import IncompatibleGroups, ParseError, SizeError
from .perm import GroupHom, Perm, PermGroup, find_isomorphism, homomorphisms
from .stone import BooleanAlgebra

TORSOR_CARRIER_BOUND = 24


class GSet:
    """A finite set with a left action of a permutation group.

    The per-element action maps are assembled by breadth-first words in
    the generators and the action law g(h(x)) = (gh)(x) is verified for
    every element/generator pair, which makes the action axioms
    exhaustively checked at construction time.
    """

    def __init__(
        self,
        group: PermGroup,
        points: Sequence[Hashable],
        gen_images: Sequence[Sequence[int]],
    ):
        self.group = group
        self.points = tuple(points)
        n = len(self.points)
        if len(gen_images) != len(group.generators):
            raise ValueError("need one image list per group generator")
        gmaps = []
        for img in gen_images:
            img = tuple(img)
            if sorted(img) != list(range(n)):
                raise ValueError("generator image is not a permutation of the carrier")
            gmaps.append(img)
        self._gen_maps = tuple(gmaps)
        self._maps = self._build_and_verify()

    def _build_and_verify(self) -> dict[Perm, tuple[int, ...]]:
        n = len(self.points)
        ident = tuple(range(n))
        maps: dict[Perm, tuple[int, ...]] = {self.group.identity: ident}
        for perm, parent, gi in self.group.definition_order()[1:]:
            assert parent is not None and gi is not None
            pm = maps[parent]
            gm = self._gen_maps[gi]
            # perm = parent * gen acts by parent after gen
            maps[perm] = tuple(pm[gm[x]] for x in range(n))
        for g in self.group.elements:
            mg = maps[g]
            for gi, s in enumerate(self.group.generators):
                ms = self._gen_maps[gi]
                mgs = maps[g * s]
                if any(mgs[x] != mg[ms[x]] for x in range(n)):
                    raise ValueError("generator images do not define a group action")
        return maps

    @classmethod
    def from_generator_images(
        cls,
        group: PermGroup,
        points: Sequence[Hashable],
        gen_images: Sequence[Sequence[int]],
    ) -> "GSet":
        return cls(group, points, gen_images)

    @classmethod
    def regular(cls, group: PermGroup) -> "GSet":
        """The group acting on itself by left multiplication."""
        els = group.elements
        index = {g: i for i, g in enumerate(els)}
        gen_images = [
            [index[gen * x] for x in els] for gen in group.generators
        ]
        return cls(group, els, gen_images)

    @classmethod
    def trivial(cls, group: PermGroup, n: int) -> "GSet":
        return cls(group, range(n), [list(range(n)) for _ in group.generators])

    @classmethod
    def natural(cls, group: PermGroup) -> "GSet":
        """The defining action on the permutation points."""
        pts = range(group.degree)
        return cls(group, pts, [list(g.images) for g in group.generators])

    @classmethod
    def coset_action(cls, group: PermGroup, subgroup_members: Sequence[Perm]) -> "GSet":
        """Left action on cosets of a subgroup."""
        seen: dict[Perm, int] = {}
        reps = []
        for g in group.elements:
            if g in seen:
                continue
            idx = len(reps)
            reps.append(g)
            for h in subgroup_members:
                seen[g * h] = idx
        gen_images = [
            [seen[gen * reps[c]] for c in range(len(reps))]
            for gen in group.generators
        ]
        return cls(group, [f"c{i}" for i in range(len(reps))], gen_images)

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"GSet({len(self.points)} points over {self.group!r})"

    def act(self, g: Perm, point: int) -> int:
        return self._maps[g][point]

    def action_map(self, g: Perm) -> tuple[int, ...]:
        return self._maps[g]

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbit partition of the carrier, in least-point order."""
        n = len(self.points)
        seen = [False] * n
        out = []
        for start in range(n):
            if seen[start]:
                continue
            orbit = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                for gm in self._gen_maps:
                    for y in (gm[x], gm.index(x)):
                        if y not in orbit:
                            orbit.add(y)
                            frontier.append(y)
            for x in orbit:
                seen[x] = True
            out.append(tuple(sorted(orbit)))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) <= 1


def parse_gset(text: str) -> GSet:
    """Parse gset:<group-spec>:<size>:<gen-index>:<images>;... text.

    Each ;-separated chunk maps one group generator (by 0-based index) to
    its permutation of the carrier {0, ..., size-1}, written as a
    space-separated image list.  Every generator must appear exactly once.
    """
    from .catalogue import group_from_catalogue

    parts = text.strip().split(":", 3)
    if len(parts) != 4 or parts[0] != "gset":
        raise ParseError(f"bad gset text {text!r}")
    group = group_from_catalogue(parts[1])
    try:
        size = int(parts[2])
    except ValueError as exc:
        raise ParseError(f"bad carrier size in {text!r}") from exc
    if size < 0:
        raise ParseError("carrier size must be >= 0")
    images: dict[int, list[int]] = {}
    for chunk in parts[3].split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        head, _, body = chunk.partition(":")
        try:
            gi = int(head)
            img = [int(tok) for tok in body.split()]
        except ValueError as exc:
            raise ParseError(f"bad generator chunk {chunk!r}") from exc
        if gi in images:
            raise ParseError(f"generator {gi} mapped twice")
        if not (0 <= gi < len(group.generators)):
            raise ParseError(f"generator index {gi} out of range")
        if len(img) != size:
            raise ParseError(f"image list for generator {gi} has wrong length")
        images[gi] = img
    if sorted(images) != list(range(len(group.generators))):
        raise ParseError("every group generator needs exactly one image list")
    gen_images = [images[i] for i in range(len(group.generators))]
    try:
        return GSet(group, range(size), gen_images)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_gset(X: GSet) -> str:
    """Inverse of parse_gset for groups with catalogue names."""
    if X.group.name is None:
        raise ValueError("group has no spec name")
    chunks = [
        f"{i}:{' '.join(str(v) for v in gm)}"
        for i, gm in enumerate(X._gen_maps)
    ]
    return f"gset:{X.group.name}:{len(X.points)}:{';'.join(chunks)}"


def _require_same_group(X: GSet, Y: GSet) -> None:
    if X.group is not Y.group and not X.group.same_group(Y.group):
        raise IncompatibleGroups("G-sets live over different groups")


def product(X: GSet, Y: GSet) -> GSet:
    """Product with the diagonal action."""
    _require_same_group(X, Y)
    pairs = [(i, j) for i in range(len(X.points)) for j in range(len(Y.points))]
    pos = {p: k for k, p in enumerate(pairs)}
    labels = [(X.points[i], Y.points[j]) for i, j in pairs]
    gen_images = []
    for gi in range(len(X.group.generators)):
        gx, gy = X._gen_maps[gi], Y._gen_maps[gi]
        gen_images.append([pos[(gx[i], gy[j])] for i, j in pairs])
    return GSet(X.group, labels, gen_images)


def coproduct(X: GSet, Y: GSet) -> GSet:
    """Disjoint union with the componentwise action."""
    _require_same_group(X, Y)
    nx = len(X.points)
    labels = [("L", p) for p in X.points] + [("R", p) for p in Y.points]
    gen_images = []
    for gi in range(len(X.group.generators)):
        gx, gy = X._gen_maps[gi], Y._gen_maps[gi]
        gen_images.append(list(gx) + [nx + v for v in gy])
    return GSet(X.group, labels, gen_images)


def quotient_by_action(X: GSet, aux: GSet) -> GSet:
    """Orbit set of a commuting auxiliary action, with induced G-action."""
    if aux.points != X.points:
        raise IncompatibleGroups("auxiliary action lives on a different carrier")
    _check_commuting(X, aux)
    orbs = aux.orbits()
    orbit_of = {}
    for oi, orb in enumerate(orbs):
        for x in orb:
            orbit_of[x] = oi
    gen_images = []
    for gi in range(len(X.group.generators)):
        gm = X._gen_maps[gi]
        img = [orbit_of[gm[orb[0]]] for orb in orbs]
        # well-definedness: commuting actions send aux-orbits to aux-orbits
        for oi, orb in enumerate(orbs):
            if any(orbit_of[gm[x]] != img[oi] for x in orb):
                raise IncompatibleGroups("auxiliary action does not commute")
        gen_images.append(img)
    return GSet(X.group, [f"o{i}" for i in range(len(orbs))], gen_images)


def _check_commuting(X: GSet, aux: GSet) -> None:
    n = len(X.points)
    for gm in X._gen_maps:
        for am in aux._gen_maps:
            if any(am[gm[x]] != gm[am[x]] for x in range(n)):
                raise IncompatibleGroups("actions do not commute")


@dataclass(frozen=True)
class TorsorCandidate:
    """A G-set with a commuting auxiliary group action on the same carrier.

    The commutation invariant is verified at construction.
    """

    base: GSet
    aux: GSet

    def __post_init__(self):
        if self.aux.points != self.base.points:
            raise IncompatibleGroups("torsor actions on different carriers")
        _check_commuting(self.base, self.aux)


def is_torsor(T: TorsorCandidate) -> bool:
    """True iff the auxiliary action is free and transitive."""
    if not T.aux.is_transitive():
        return False
    if len(T.base.points) != T.aux.group.order:
        return False
    n = len(T.base.points)
    ident = T.aux.group.identity
    for a in T.aux.group.elements:
        if a == ident:
            continue
        am = T.aux.action_map(a)
        if any(am[x] == x for x in range(n)):
            return False
    return True


def torsor_from_hom(phi: GroupHom) -> TorsorCandidate:
    """The target-group torsor induced by a homomorphism.

    The carrier is the target group; the source acts on the left through
    the homomorphism, the target on the right.  Right multiplication is
    stored as the left action h . x = x h^-1.
    """
    G, Gp = phi.source, phi.target
    els = Gp.elements
    index = {g: i for i, g in enumerate(els)}
    base = GSet(
        G,
        els,
        [[index[phi(gen) * x] for x in els] for gen in G.generators],
    )
    aux = GSet(
        Gp,
        els,
        [[index[x * gen.inverse()] for x in els] for gen in Gp.generators],
    )
    return TorsorCandidate(base, aux)


def torsor_isomorphic(T1: TorsorCandidate, T2: TorsorCandidate) -> bool:
    """Brute-force search for a bijection commuting with both actions.

    Both candidates must be torsors; a compatible bijection is determined
    by the image of one carrier point, so all carrier points are tried as
    that image.
    """
    if len(T1.base.points) > TORSOR_CARRIER_BOUND:
        raise SizeError(f"torsor carrier bound {TORSOR_CARRIER_BOUND} exceeded")
    if T1.base.group is not T2.base.group and not T1.base.group.same_group(
        T2.base.group
    ):
        raise IncompatibleGroups("torsors over different groups")
    if not T1.aux.group.same_group(T2.aux.group):
        return False
    if len(T1.base.points) != len(T2.base.points):
        return False
    if not (is_torsor(T1) and is_torsor(T2)):
        raise ValueError("torsor_isomorphic requires torsor candidates")
    n = len(T1.base.points)
    aux_els = T1.aux.group.elements
    x0 = 0
    for y in range(n):
        psi = [None] * n
        ok = True
        for a in aux_els:
            u = T1.aux.act(a, x0)
            v = T2.aux.act(a, y)
            if psi[u] is None:
                psi[u] = v
            elif psi[u] != v:
                ok = False
                break
        if not ok or any(p is None for p in psi):
            continue
        good = True
        for gi in range(len(T1.base.group.generators)):
            gm1 = T1.base._gen_maps[gi]
            gm2 = T2.base._gen_maps[gi]
            if any(psi[gm1[x]] != gm2[psi[x]] for x in range(n)):
                good = False
                break
        if good:
            return True
    return False


def classify_torsors(G: PermGroup, Gp: PermGroup) -> list[TorsorCandidate]:
    """Isomorphism classes of Gp-torsors in the category of finite G-sets.

    Torsors are enumerated through homomorphisms (every torsor is
    isomorphic to one so induced, the carrier being trivializable to the
    right-regular Gp-set); the classification into isomorphism classes is
    brute force over action-compatible carrier bijections, bucketed by
    the cycle types of the base action.
    """
    if Gp.order > TORSOR_CARRIER_BOUND:
        raise SizeError(f"torsor carrier bound {TORSOR_CARRIER_BOUND} exceeded")
    torsors = [torsor_from_hom(f) for f in homomorphisms(G, Gp)]
    for T in torsors:
        assert is_torsor(T)
    buckets: dict[tuple, list[TorsorCandidate]] = {}
    order = []
    for T in torsors:
        key = tuple(
            _map_cycle_type(T.base.action_map(g)) for g in G.elements
        )
        if key not in buckets:
            buckets[key] = []
            order.append(key)
        buckets[key].append(T)
    classes: list[TorsorCandidate] = []
    for key in order:
        reps: list[TorsorCandidate] = []
        for T in buckets[key]:
            if not any(torsor_isomorphic(T, R) for R in reps):
                reps.append(T)
        classes.extend(reps)
    return classes


def _map_cycle_type(m: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(m)
    lengths = []
    for s in range(len(m)):
        if seen[s]:
            continue
        ln = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = m[x]
            ln += 1
        lengths.append(ln)
    return tuple(sorted(lengths))


def subterminal_boolean_algebra(X: GSet) -> BooleanAlgebra:
    """The Boolean algebra of G-stable subsets: unions of orbits."""
    orbs = X.orbits()
    if len(orbs) > 16:
        raise SizeError("more than 16 orbits")
    return BooleanAlgebra.powerset(tuple(range(len(orbs))))


def reconstruct_pi1(G: PermGroup) -> tuple[PermGroup, GroupHom]:
    """Automorphism group of the regular G-set, with isomorphism witness.

    Candidate self-maps are forced by equivariance to be right
    multiplications; each is verified to commute with the full left
    action, the collection is closed into a permutation group, and an
    isomorphism onto G is found by generator-image search.
    """
    X = GSet.regular(G)
    els = G.elements
    index = {g: i for i, g in enumerate(els)}
    n = len(els)
    auts = []
    for h in els:
        sigma = tuple(index[els[x] * h] for x in range(n))
        ok = True
        for g in G.elements:
            mg = X.action_map(g)
            if any(sigma[mg[x]] != mg[sigma[x]] for x in range(n)):
                ok = False
                break
        if ok:
            auts.append(Perm(sigma))
    group = PermGroup(n, auts, name=None, max_order=max(n, G.max_order))
    assert group.order == len(auts) == n
    witness = find_isomorphism(group, G)
    assert witness is not None
    return group, witness

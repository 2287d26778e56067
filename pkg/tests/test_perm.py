"""Group-core: permutation arithmetic, subgroup machinery, hom search."""

import itertools

import pytest

from galcalc.catalogue import catalogue_group, name_group
from galcalc.errors import NotNormal, SizeError
from galcalc.perm import (
    Perm,
    PermGroup,
    are_conjugate_homs,
    find_isomorphism,
    find_surjection,
    hom_conjugacy_classes,
    homomorphisms,
)


def test_perm_arithmetic():
    a = Perm([1, 0, 2])
    b = Perm([0, 2, 1])
    assert (a * b).images == (1, 2, 0)  # b first, then a
    assert a.inverse() * a == Perm.identity(3)
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert Perm.from_cycles(4, [(0, 1), (2, 3)]).images == (1, 0, 3, 2)
    assert Perm([2, 0, 1]).order() == 3
    assert Perm([1, 0, 3, 2]).cycle_type() == (2, 2)


def test_perm_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_associativity_brute():
    S3 = catalogue_group("S3")
    for a, b, c in itertools.product(S3.elements, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_enumeration_against_itertools():
    # independent oracle: S4 is all 24 permutations of 4 points
    S4 = catalogue_group("S4")
    all_perms = {Perm(p) for p in itertools.permutations(range(4))}
    assert set(S4.elements) == all_perms
    assert S4.elements == tuple(sorted(all_perms))


def test_enumerate_examples():
    assert catalogue_group("S3").order == 6
    assert catalogue_group("D8").order == 8
    assert catalogue_group("C12").order == 12
    assert catalogue_group("C1").order == 1


def test_size_bound():
    with pytest.raises(SizeError):
        PermGroup(6, catalogue_group("S6").generators, max_order=100).elements


def test_order_p_elements():
    # (C4, 2) -> 1, (Q8, 2) -> 1, (S4, 2) -> 9; oracle: direct scan
    for spec, p, expected in [("C4", 2, 1), ("Q8", 2, 1), ("S4", 2, 9), ("C9", 2, 0)]:
        G = catalogue_group(spec)
        got = G.order_p_elements(p)
        direct = [g for g in G.elements if not g.is_identity() and (g ** p).is_identity()]
        assert len(got) == expected
        assert list(got) == sorted(direct)


def _all_normal_subgroups(G):
    """Oracle: normal subgroups are closures of unions of conjugacy classes."""
    classes = G.conjugacy_classes()
    ident_class = next(c for c in classes if G.identity in c)
    rest = [c for c in classes if c is not ident_class]
    found = {}
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            seed = set(ident_class)
            for c in combo:
                seed.update(c)
            H = G.subgroup_from_generators(seed)
            found[frozenset(H.members)] = H
    return list(found.values())


@pytest.mark.parametrize("spec", ["S3", "S4", "Q8", "A4", "D12", "C12", "D16", "D24"])
def test_normal_closure_minimality(spec):
    G = catalogue_group(spec)
    seeds = [
        [G.elements[1]],
        list(G.order_p_elements(2))[:1],
        list(G.order_p_elements(2)),
    ]
    normals = _all_normal_subgroups(G)
    for seed in seeds:
        seed = [s for s in seed if s is not None]
        if not seed:
            continue
        N = G.normal_closure(seed)
        assert N.is_normal()
        assert all(s in N for s in seed)
        for M in normals:
            if all(s in M for s in seed):
                assert set(N.members) <= set(M.members)


def test_normal_closure_examples():
    S4 = catalogue_group("S4")
    transpositions = [g for g in S4.elements if g.cycle_type() == (2, 1, 1)]
    assert S4.normal_closure(transpositions).order == 24
    assert S4.normal_closure([]).order == 1
    Q8 = catalogue_group("Q8")
    minus_one = Q8.order_p_elements(2)[0]
    N = Q8.normal_closure([minus_one])
    assert N.order == 2
    assert N == Q8.center()


def test_quotient_examples_and_kernel():
    C4 = catalogue_group("C4")
    H = C4.subgroup_from_generators([g for g in C4.elements if g.order() == 2])
    Q, proj = C4.quotient(H)
    assert Q.order == 2
    Q8 = catalogue_group("Q8")
    V, projq = Q8.quotient(Q8.center())
    assert V.order == 4
    assert all(g.order() <= 2 for g in V.elements)
    # projection is surjective with kernel exactly N, element by element
    assert projq.is_surjective()
    assert set(projq.kernel().members) == set(Q8.center().members)
    for a in Q8.elements:
        for b in Q8.elements:
            assert projq(a * b) == projq(a) * projq(b)
    G = catalogue_group("S3")
    T, _ = G.quotient(G.full_subgroup())
    assert T.order == 1


def test_quotient_not_normal():
    S3 = catalogue_group("S3")
    t = next(g for g in S3.elements if g.order() == 2)
    with pytest.raises(NotNormal):
        S3.quotient(S3.subgroup_from_generators([t]))


def test_centralizer_examples():
    S3 = catalogue_group("S3")
    t = next(g for g in S3.elements if g.order() == 2)
    assert S3.centralizer([t]).order == 2
    assert S3.centralizer([S3.identity]).order == 6
    Q8 = catalogue_group("Q8")
    i = next(g for g in Q8.elements if g.order() == 4)
    C = Q8.centralizer([i])
    assert C.order == 4
    assert i in C


def test_normalizer_examples():
    S3 = catalogue_group("S3")
    A3 = S3.subgroup_from_generators([next(g for g in S3.elements if g.order() == 3)])
    assert S3.normalizer(A3).order == 6
    S4 = catalogue_group("S4")
    syl = S4.sylow_subgroup(2)
    assert syl.order == 8
    assert S4.normalizer(syl).order == 8  # self-normalizing
    assert S4.normalizer(S4.full_subgroup()).order == 24


def test_elementary_abelian_subgroups():
    S3 = catalogue_group("S3")
    assert len(S3.elementary_abelian_p_subgroups(3)) == 1
    V4 = catalogue_group("C2xC2")
    subs = V4.elementary_abelian_p_subgroups(2)
    assert len(subs) == 4  # three lines and the plane
    assert len(catalogue_group("C9").elementary_abelian_p_subgroups(2)) == 0
    # every member is elementary abelian: exhaustive member check
    for spec, p in [("S4", 2), ("A4", 2), ("D12", 2), ("C3xC3", 3)]:
        G = catalogue_group(spec)
        subs = G.elementary_abelian_p_subgroups(p)
        for H in subs:
            assert all((x ** p).is_identity() for x in H.members)
            assert all(a * b == b * a for a in H.members for b in H.members)
        maximal = [H for H in subs if not any(H is not K and H <= K for K in subs)]
        for H in subs:
            assert any(H <= M for M in maximal)


def test_elementary_abelian_include_trivial():
    G = catalogue_group("C4")
    with_triv = G.elementary_abelian_p_subgroups(2, include_trivial=True)
    without = G.elementary_abelian_p_subgroups(2)
    assert len(with_triv) == len(without) + 1
    assert with_triv[0].order == 1


def test_p_residual():
    S3 = catalogue_group("S3")
    assert S3.p_residual(3).order == 6
    C6 = catalogue_group("C6")
    R = C6.p_residual(2)
    assert R.order == 3
    Q, _ = C6.quotient(R)
    assert Q.order == 2
    # p-groups have trivial residual
    assert catalogue_group("Q8").p_residual(2).order == 1
    # quotient is the maximal p-quotient: p-power order always
    for spec in ["S4", "A4", "C12", "D12"]:
        G = catalogue_group(spec)
        for p in (2, 3):
            Q, _ = G.quotient(G.p_residual(p))
            n = Q.order
            while n % p == 0:
                n //= p
            assert n == 1


def test_lagrange_everywhere():
    for spec in ["S4", "Q8", "D12", "A4"]:
        G = catalogue_group(spec)
        for H in G.elementary_abelian_p_subgroups(2):
            assert G.order % H.order == 0
        for P in G.sylow_subgroups(2):
            assert G.order % P.order == 0


def test_hom_counts():
    C2 = catalogue_group("C2")
    S3 = catalogue_group("S3")
    assert len(homomorphisms(C2, S3)) == 4
    assert len(homomorphisms(S3, catalogue_group("C1"))) == 1
    assert len(homomorphisms(catalogue_group("C3"), C2)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 6])
@pytest.mark.parametrize("hspec", ["C2", "C6", "S3", "D8", "Q8", "A4", "C12"])
def test_hom_count_cyclic_formula(n, hspec):
    # |Hom(C_n, H)| equals the number of h with h^n = e
    C = catalogue_group(f"C{n}")
    H = catalogue_group(hspec)
    expected = sum(1 for h in H.elements if (h ** n).is_identity())
    assert len(homomorphisms(C, H)) == expected


def test_hom_multiplicativity_verified():
    C2 = catalogue_group("C2")
    S3 = catalogue_group("S3")
    for f in homomorphisms(C2, S3):
        for a in C2.elements:
            for b in C2.elements:
                assert f(a * b) == f(a) * f(b)


def test_conjugacy_classes_of_homs():
    C2 = catalogue_group("C2")
    S3 = catalogue_group("S3")
    classes = hom_conjugacy_classes(C2, S3)
    assert len(classes) == 2
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 3]
    assert len(hom_conjugacy_classes(C2, catalogue_group("C1"))) == 1
    # abelian target: classes = maps
    assert len(hom_conjugacy_classes(C2, C2)) == 2


def test_are_conjugate_homs():
    C2 = catalogue_group("C2")
    S3 = catalogue_group("S3")
    homs = homomorphisms(C2, S3)
    nontrivial = [f for f in homs if not f(f.source.elements[1]).is_identity()]
    assert len(nontrivial) == 3
    assert are_conjugate_homs(nontrivial[0], nontrivial[1])
    trivial = next(f for f in homs if f not in nontrivial)
    assert not are_conjugate_homs(trivial, nontrivial[0])


def test_find_isomorphism_and_profile_pruning():
    C6 = catalogue_group("C6")
    S3 = catalogue_group("S3")
    assert find_isomorphism(C6, S3) is None
    D6 = catalogue_group("D6")
    iso = find_isomorphism(D6, S3)
    assert iso is not None and iso.is_isomorphism()
    assert name_group(catalogue_group("D4")) == "C2xC2"


def test_find_surjection():
    S3 = catalogue_group("S3")
    C2 = catalogue_group("C2")
    f = find_surjection(S3, C2)
    assert f is not None and f.is_surjective()
    assert find_surjection(catalogue_group("C3"), C2) is None


def test_small_generating_set():
    for spec in ["S4", "Q8", "C12", "C2xC2xC2"]:
        G = catalogue_group(spec)
        gens = G.small_generating_set()
        assert G.subgroup_from_generators(gens).order == G.order
        assert len(gens) <= 3


def test_subgroup_validation():
    S3 = catalogue_group("S3")
    t = next(g for g in S3.elements if g.order() == 2)
    assert S3.subgroup([S3.identity, t]).order == 2
    # a set that is not closed under products
    r = next(g for g in S3.elements if g.order() == 3)
    with pytest.raises(ValueError):
        S3.subgroup([S3.identity, r])


def test_abelianization_data():
    S3 = catalogue_group("S3")
    assert S3.abelianization_data() == {2: (1, 2)}
    V4 = catalogue_group("C2xC2")
    assert V4.abelianization_data() == {2: (2, 2)}
    C12 = catalogue_group("C12")
    assert C12.abelianization_data() == {2: (1, 4), 3: (1, 3)}
    Q8 = catalogue_group("Q8")
    assert Q8.abelianization_data() == {2: (2, 2)}

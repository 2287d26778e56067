"""Theorem-level Galois group computations with independent cross-checks.

Three pipelines, each for one invariant of a finite group G over a
separably closed field k of characteristic p:

* ``galois_modg``     - the fundamental group of the category of k-linear
  G-representations: G modulo the normal closure of its order-p elements.
* ``galois_cochains`` - the fundamental group of modules over cochains on
  BG: additionally kill the p-residual, leaving a p-group quotient.
* ``galois_stmod``    - the fundamental group of the stable module
  category: the fundamental group of the nerve of the reduced orbit
  category on elementary abelian p-subgroups, certified against finite
  candidates and cross-checked against whichever special-case formulas
  apply (central order-p element, Sylow triple intersections, rank-one
  Weyl group).

Every report carries a fixed note that the arithmetic factor of the
Galois group is omitted: the ground field is assumed separably closed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .catalogue import catalogue_group, standard_catalogue
from .errors import CosetLimitExceeded, POrderError
from .fp import (
    DEFAULT_MAX_COSETS,
    FpGroup,
    FpMap,
    IdentificationResult,
    abelianization,
    coset_enumeration,
    identify_finite,
    pushout,
    simplify,
)
from .orbitcat import (
    close_family,
    nerve_pi0,
    nerve_pi1_presentation,
    reduced_orbit_category,
)
from .perm import PermGroup, Subgroup, find_isomorphism

ARITHMETIC_NOTE = (
    "ground field assumed separably closed; the arithmetic factor "
    "Gal(k_sep/k) of the Galois group is omitted"
)

PATH_MODG = "ModG"
PATH_COCHAINS = "Cochains"
PATH_STMOD_NERVE = "StmodNerve"
PATH_CENTRAL = "StmodCentralCase"
PATH_SYLOW = "StmodSylowTriple"
PATH_WEYL = "StmodWeylRankOne"


def galois_modg(G: PermGroup, p: int) -> PermGroup:
    """G modulo the normal closure of its order-p elements."""
    _require_prime(p)
    N = G.normal_closure(G.order_p_elements(p))
    Q, _ = G.quotient(N)
    return Q


def galois_cochains(G: PermGroup, p: int) -> PermGroup:
    """The maximal p-group quotient of G with order-p elements killed.

    Kills the normal closure of the p-residual together with the order-p
    elements; the result is always a p-group and a quotient of the
    representation-category answer.
    """
    _require_prime(p)
    residual = G.p_residual(p)
    seed = list(residual.members) + list(G.order_p_elements(p))
    N = G.normal_closure(seed)
    Q, _ = G.quotient(N)
    return Q


def weyl_group(G: PermGroup, H: Subgroup) -> PermGroup:
    """N_G(H)/H, the Weyl group of a subgroup."""
    N = G.normalizer(H)
    NG = N.as_group()
    HN = NG.subgroup(H.members)
    Q, _ = NG.quotient(HN)
    return Q


def has_central_order_p(G: PermGroup, p: int) -> bool:
    """True iff the center contains an element of order exactly p."""
    _require_prime(p)
    return any(z.order() == p for z in G.center().members)


def sylow_triple_condition(G: PermGroup, p: int) -> bool:
    """True iff every triple of Sylow p-subgroups intersects nontrivially.

    Triples are taken with repetition, so pairwise and single
    intersections are covered; a p'-group fails (its Sylow is trivial).
    """
    _require_prime(p)
    sylows = G.sylow_subgroups(p)
    for trio in itertools.combinations_with_replacement(sylows, 3):
        common = trio[0]
        for S in trio[1:]:
            common = common.intersection(S)
        if common.order == 1:
            return False
    return True


def maximal_elementary_abelian_classes(
    G: PermGroup, p: int
) -> list[list[Subgroup]]:
    """Conjugacy classes of maximal elementary abelian p-subgroups."""
    subs = G.elementary_abelian_p_subgroups(p)
    maximal = [
        H for H in subs if not any(H is not K and H <= K for K in subs)
    ]
    classes: list[list[Subgroup]] = []
    for H in maximal:
        for cls in classes:
            if any(
                H.conjugate(g).member_key() == cls[0].member_key()
                for g in G.elements
            ):
                cls.append(H)
                break
        else:
            classes.append([H])
    return classes


@dataclass(frozen=True)
class CrossCheck:
    path: str
    agreed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"path": self.path, "agreed": self.agreed, "detail": self.detail}


@dataclass
class GaloisReport:
    """Result record of a pipeline run.

    ``result_perm`` is set for the pipelines that land directly in a
    permutation group; the nerve pipeline stores the raw and simplified
    presentations plus the identification outcome.  Cross-check
    agreement always comes from an isomorphism test, never from a name
    comparison.
    """

    group_spec: str
    prime: int
    theorem_path: str
    result_perm: Optional[PermGroup] = None
    presentation: Optional[FpGroup] = None
    simplified: Optional[FpGroup] = None
    identification: Optional[IdentificationResult] = None
    pi0_components: Optional[int] = None
    cross_checks: list[CrossCheck] = field(default_factory=list)
    note: str = ARITHMETIC_NOTE

    def result_group(self) -> Optional[PermGroup]:
        if self.result_perm is not None:
            return self.result_perm
        if self.identification is not None and self.identification.candidate is not None:
            return self.identification.candidate
        return None

    def to_json(self) -> dict:
        from .catalogue import name_group

        result: dict = {}
        if self.result_perm is not None:
            result = {
                "kind": "perm",
                "order": self.result_perm.order,
                "group": name_group(self.result_perm),
            }
        elif self.identification is not None:
            result = {
                "kind": "fp",
                "identification": self.identification.to_json(),
            }
        out = {
            "schema": 1,
            "input": {"group": self.group_spec, "prime": self.prime},
            "theorem_path": self.theorem_path,
            "result": result,
            "cross_checks": [c.to_json() for c in self.cross_checks],
            "note": self.note,
        }
        if self.presentation is not None:
            out["presentation"] = self.presentation.spec_text()
        if self.simplified is not None:
            out["simplified"] = self.simplified.spec_text()
        if self.pi0_components is not None:
            out["pi0_components"] = self.pi0_components
        return out


def stmod_candidates(G: PermGroup, p: int) -> list[PermGroup]:
    """Candidate pool for identifying the nerve fundamental group.

    The trivial group, the catalogue up to |G|, the representation-
    category quotient, and the Weyl group of each maximal elementary
    abelian class representative: every special-case answer lies here.
    """
    pool: list[PermGroup] = [catalogue_group("C1")]
    for spec in standard_catalogue(G.order):
        if spec != "C1":
            pool.append(catalogue_group(spec))
    modg = galois_modg(G, p)
    modg.name = modg.name or "modg-quotient"
    pool.append(modg)
    for i, cls in enumerate(maximal_elementary_abelian_classes(G, p)):
        W = weyl_group(G, cls[0])
        W.name = W.name or f"weyl-class-{i}"
        pool.append(W)
    return pool


def galois_stmod(
    G: PermGroup,
    p: int,
    max_cosets: int = DEFAULT_MAX_COSETS,
    candidates: Optional[Sequence[PermGroup]] = None,
) -> GaloisReport:
    """Galois group of the stable module category via the orbit nerve.

    Requires p to divide |G| (otherwise the category is trivial and its
    Galois groupoid empty: POrderError).  Builds the conjugation- and
    intersection-closed family of nontrivial elementary abelian
    p-subgroups, presents the fundamental group of the nerve of the
    reduced orbit category, identifies it against the candidate pool, and
    runs every applicable special-case cross-check.
    """
    _require_prime(p)
    if G.order % p != 0:
        raise POrderError(
            f"prime {p} does not divide |G| = {G.order}: "
            "the stable module category is zero and its Galois groupoid empty"
        )
    seed = G.elementary_abelian_p_subgroups(p)
    family = close_family(G, seed, drop_trivial=True)
    cat = reduced_orbit_category(G, family)
    components = nerve_pi0(cat)
    basepoint = min(cat.objects)
    F = nerve_pi1_presentation(cat, basepoint)
    Fs = simplify(F)
    pool = list(candidates) if candidates is not None else stmod_candidates(G, p)
    ident = identify_finite(Fs, pool, max_cosets=max_cosets, presimplify=False)
    report = GaloisReport(
        group_spec=G.name or f"<order {G.order}>",
        prime=p,
        theorem_path=PATH_STMOD_NERVE,
        presentation=F,
        simplified=Fs,
        identification=ident,
        pi0_components=len(components),
    )
    return stmod_cross_check(G, p, report)


def stmod_cross_check(G: PermGroup, p: int, report: GaloisReport) -> GaloisReport:
    """Record agreement with every special-case theorem that applies.

    Central order-p element and Sylow-triple cases compare against the
    representation-category quotient; a single conjugacy class of
    rank-one maximal elementary abelians compares against its Weyl
    group.  Isomorphism is tested on groups, never on names.
    """
    nerve_result = report.result_group()

    def agrees(target: PermGroup) -> bool:
        return (
            nerve_result is not None
            and find_isomorphism(nerve_result, target) is not None
        )

    checks = list(report.cross_checks)
    if has_central_order_p(G, p):
        target = galois_modg(G, p)
        checks.append(
            CrossCheck(
                PATH_CENTRAL,
                agrees(target),
                f"modg quotient has order {target.order}",
            )
        )
    if sylow_triple_condition(G, p):
        target = galois_modg(G, p)
        checks.append(
            CrossCheck(
                PATH_SYLOW,
                agrees(target),
                f"modg quotient has order {target.order}",
            )
        )
    classes = maximal_elementary_abelian_classes(G, p)
    if len(classes) == 1 and classes[0][0].order == p:
        target = weyl_group(G, classes[0][0])
        checks.append(
            CrossCheck(
                PATH_WEYL,
                agrees(target),
                f"Weyl group has order {target.order}",
            )
        )
    report.cross_checks = checks
    return report


def modg_report(G: PermGroup, p: int) -> GaloisReport:
    return GaloisReport(
        group_spec=G.name or f"<order {G.order}>",
        prime=p,
        theorem_path=PATH_MODG,
        result_perm=galois_modg(G, p),
    )


def cochains_report(G: PermGroup, p: int) -> GaloisReport:
    return GaloisReport(
        group_spec=G.name or f"<order {G.order}>",
        prime=p,
        theorem_path=PATH_COCHAINS,
        result_perm=galois_cochains(G, p),
    )


@dataclass(frozen=True)
class VanKampenReport:
    """Pushout presentation with abelianization and bounded identification."""

    presentation: FpGroup
    simplified: FpGroup
    invariant_factors: tuple[int, ...]
    identification: IdentificationResult

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "presentation": self.presentation.spec_text(),
            "simplified": self.simplified.spec_text(),
            "abelianization": list(self.invariant_factors),
            "identification": self.identification.to_json(),
        }


def van_kampen_pushout(
    left: FpMap,
    right: FpMap,
    max_cosets: int = DEFAULT_MAX_COSETS,
    candidate_bound: int = 48,
) -> VanKampenReport:
    """Pushout of presentations, wrapped with the standard certificates.

    Delegates to the presentation pushout, then reports the
    abelianization and a bounded identification against the catalogue of
    the certified order (when the order certifies at or below the
    candidate bound).
    """
    P = pushout(left, right)
    Ps = simplify(P)
    factors = tuple(abelianization(P))
    candidates: list[PermGroup] = []
    try:
        order = coset_enumeration(Ps, (), max_cosets=max_cosets)
        if order <= candidate_bound:
            candidates = [
                catalogue_group(spec)
                for spec in standard_catalogue(order)
                if catalogue_group(spec).order == order
            ]
    except CosetLimitExceeded:
        pass
    ident = identify_finite(Ps, candidates, max_cosets=max_cosets, presimplify=False)
    return VanKampenReport(P, Ps, factors, ident)


def _require_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")

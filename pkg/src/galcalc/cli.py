"""Command-line surface over the pipelines.

Commands:

    modg <G> -p <p>           Galois group of the G-representation category
    cochains <G> -p <p>       Galois group of modules over cochains on BG
    stmod <G> -p <p>          Galois group of the stable module category
    hom <G> <H>               hom-groupoid components and automorphisms
    torsors <G> <H>           torsor classification
    orbit-nerve <G> -p <p>    raw nerve presentation of the orbit category
    stone <algebra-file>      spectrum and decompositions of a Boolean algebra
    pushout <F0> <F1> <F2> <left-map> <right-map>
    selftest                  run the invariant suites

Exit codes: 0 success, 2 parse/usage errors, 3 size or bound errors,
4 inconclusive identification under --require-identified.  JSON output is
byte-deterministic for fixed inputs and bounds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import selftest as selftest_mod
from .catalogue import display_name, group_from_catalogue
from .errors import (
    CosetLimitExceeded,
    GalcalcError,
    IllFormedMap,
    MalformedAlgebra,
    ParseError,
    POrderError,
    SizeError,
)
from .fp import DEFAULT_MAX_COSETS, FpMap, parse_fp, word_from_text
from .groupoid import hom_groupoid
from .gset import classify_torsors
from .orbitcat import close_family, nerve_pi0, nerve_pi1_presentation, reduced_orbit_category
from .perm import DEFAULT_MAX_ORDER, PermGroup
from .pipelines import (
    cochains_report,
    galois_stmod,
    modg_report,
    van_kampen_pushout,
)
from .stone import BooleanAlgebra, idempotent_decompositions, spectrum

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_INCONCLUSIVE = 4


def _max_order(args: argparse.Namespace) -> int:
    if args.max_order is not None:
        return args.max_order
    env = os.environ.get("GALOIS_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"bad GALOIS_MAX_ORDER value {env!r}") from exc
    return DEFAULT_MAX_ORDER


def _group(args: argparse.Namespace, spec: str) -> PermGroup:
    return group_from_catalogue(spec, max_order=_max_order(args))


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_modg(args: argparse.Namespace) -> int:
    report = modg_report(_group(args, args.group), args.prime)
    assert report.result_perm is not None
    _emit(args, report.to_json(), display_name(report.result_perm))
    return EXIT_OK


def _cmd_cochains(args: argparse.Namespace) -> int:
    report = cochains_report(_group(args, args.group), args.prime)
    assert report.result_perm is not None
    _emit(args, report.to_json(), display_name(report.result_perm))
    return EXIT_OK


def _cmd_stmod(args: argparse.Namespace) -> int:
    report = galois_stmod(
        _group(args, args.group), args.prime, max_cosets=args.max_cosets
    )
    ident = report.identification
    assert ident is not None
    lines = []
    if ident.status == "Identified":
        lines.append(f"identified {ident.match_name} (order {ident.certified_order})")
    else:
        lines.append(f"identification: {ident.status}")
        if ident.certified_order is not None:
            lines.append(f"certified order: {ident.certified_order}")
    lines.append(f"pi0 components: {report.pi0_components}")
    for check in report.cross_checks:
        verdict = "agreed" if check.agreed else "DISAGREED"
        lines.append(f"cross-check {check.path}: {verdict}")
    lines.append(f"note: {report.note}")
    _emit(args, report.to_json(), "\n".join(lines))
    if args.require_identified and ident.status != "Identified":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_hom(args: argparse.Namespace) -> int:
    G = _group(args, args.group)
    H = _group(args, args.target)
    report = hom_groupoid(G, H)
    lines = [f"components: {report.component_count()}"]
    for k, (rep, cent) in enumerate(report.components):
        imgs = ", ".join(repr(p) for p in rep.gen_images) or "(trivial map)"
        lines.append(
            f"  [{k}] representative images: {imgs}; automorphisms of order {cent.order}"
        )
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_OK


def _cmd_torsors(args: argparse.Namespace) -> int:
    G = _group(args, args.group)
    H = _group(args, args.target)
    classes = classify_torsors(G, H)
    payload = {
        "schema": 1,
        "source": G.name,
        "aux_group": H.name,
        "class_count": len(classes),
        "carrier_size": H.order,
    }
    _emit(
        args,
        payload,
        f"{len(classes)} isomorphism classes of {args.target}-torsors "
        f"over finite {args.group}-sets",
    )
    return EXIT_OK


def _cmd_orbit_nerve(args: argparse.Namespace) -> int:
    G = _group(args, args.group)
    if G.order % args.prime != 0:
        raise POrderError(f"prime {args.prime} does not divide |G| = {G.order}")
    seed = G.elementary_abelian_p_subgroups(args.prime)
    family = close_family(G, seed, drop_trivial=True)
    cat = reduced_orbit_category(G, family)
    components = nerve_pi0(cat)
    F = nerve_pi1_presentation(cat, min(cat.objects))
    payload = {
        "schema": 1,
        "input": {"group": args.group, "prime": args.prime},
        "objects": len(cat.objects),
        "morphisms": len(cat.morphisms),
        "pi0_components": len(components),
        "presentation": F.spec_text(),
    }
    text = (
        f"orbit category: {len(cat.objects)} objects, "
        f"{len(cat.morphisms)} morphisms, {len(components)} nerve component(s)\n"
        f"pi1 presentation: {F.spec_text()}"
    )
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_stone(args: argparse.Namespace) -> int:
    try:
        with open(args.algebra_file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read algebra file: {exc}") from exc
    if "atoms" in data:
        B = BooleanAlgebra.powerset(data["atoms"])
    else:
        try:
            B = BooleanAlgebra.from_tables(
                int(data["size"]),
                data["meet"],
                data["join"],
                data["complement"],
                int(data["bottom"]),
                int(data["top"]),
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad algebra file: missing {exc}") from exc
    atoms = spectrum(B)
    decomps = idempotent_decompositions(B)
    payload = {
        "schema": 1,
        "element_count": len(B),
        "atom_count": len(atoms),
        "decomposition_count": len(decomps),
        "serialized": B.to_json(),
    }
    _emit(
        args,
        payload,
        f"{len(B)} elements, {len(atoms)} atoms, "
        f"{len(decomps)} idempotent decompositions",
    )
    return EXIT_OK


def _parse_map_words(text: str, ngens: int) -> list[tuple[int, ...]]:
    if ngens == 0:
        if text not in ("", "-"):
            raise ParseError("map for a generator-free source must be empty or '-'")
        return []
    chunks = text.split(",")
    if len(chunks) != ngens:
        raise ParseError(f"map needs {ngens} comma-separated words, got {len(chunks)}")
    words = []
    for chunk in chunks:
        chunk = chunk.strip()
        if chunk in ("", "1"):
            words.append(())
        else:
            words.append(word_from_text(chunk))
    return words


def _cmd_pushout(args: argparse.Namespace) -> int:
    F0 = parse_fp(args.source)
    F1 = parse_fp(args.left_target)
    F2 = parse_fp(args.right_target)
    left = FpMap(F0, F1, tuple(_parse_map_words(args.left_map, F0.ngens)))
    right = FpMap(F0, F2, tuple(_parse_map_words(args.right_map, F0.ngens)))
    report = van_kampen_pushout(left, right, max_cosets=args.max_cosets)
    ident = report.identification
    lines = [
        f"pushout presentation: {report.presentation.spec_text()}",
        f"simplified: {report.simplified.spec_text()}",
        f"abelianization invariant factors: {list(report.invariant_factors)}",
    ]
    if ident.status == "Identified":
        lines.append(f"identified {ident.match_name} (order {ident.certified_order})")
    else:
        lines.append(f"identification: {ident.status}")
    _emit(args, report.to_json(), "\n".join(lines))
    if args.require_identified and ident.status != "Identified":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_selftest(args: argparse.Namespace) -> int:
    failures = selftest_mod.run_all(verbose=True)
    return EXIT_OK if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galcalc",
        description="Galois groups of representation-theoretic categories "
        "of finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, prime: bool = False) -> None:
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format",
        )
        p.add_argument(
            "--max-order", type=int, default=None,
            help=f"group order bound (default {DEFAULT_MAX_ORDER}; "
            "env GALOIS_MAX_ORDER)",
        )
        p.add_argument(
            "--max-cosets", type=int, default=DEFAULT_MAX_COSETS,
            help="Todd-Coxeter coset bound",
        )
        if prime:
            p.add_argument("-p", "--prime", type=int, required=True,
                           help="characteristic of the ground field")

    p = sub.add_parser("modg", help="Galois group of Mod_G(k)")
    p.add_argument("group")
    add_common(p, prime=True)
    p.set_defaults(func=_cmd_modg)

    p = sub.add_parser("cochains", help="Galois group of Mod(C*(BG;k))")
    p.add_argument("group")
    add_common(p, prime=True)
    p.set_defaults(func=_cmd_cochains)

    p = sub.add_parser("stmod", help="Galois group of the stable module category")
    p.add_argument("group")
    add_common(p, prime=True)
    p.add_argument(
        "--require-identified", action="store_true",
        help="exit 4 unless the result is identified",
    )
    p.set_defaults(func=_cmd_stmod)

    p = sub.add_parser("hom", help="hom-groupoid Hom(BG, BH)")
    p.add_argument("group")
    p.add_argument("target")
    add_common(p)
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("torsors", help="torsor classification")
    p.add_argument("group")
    p.add_argument("target")
    add_common(p)
    p.set_defaults(func=_cmd_torsors)

    p = sub.add_parser("orbit-nerve", help="raw orbit-category nerve presentation")
    p.add_argument("group")
    add_common(p, prime=True)
    p.set_defaults(func=_cmd_orbit_nerve)

    p = sub.add_parser("stone", help="spectrum of a finite Boolean algebra")
    p.add_argument("algebra_file")
    add_common(p)
    p.set_defaults(func=_cmd_stone)

    p = sub.add_parser("pushout", help="van Kampen pushout of presentations")
    p.add_argument("source", help="fp:<k>:<relators> presentation of the corner")
    p.add_argument("left_target")
    p.add_argument("right_target")
    p.add_argument("left_map", help="comma-separated image words ('1' = empty)")
    p.add_argument("right_map")
    add_common(p)
    p.add_argument("--require-identified", action="store_true")
    p.set_defaults(func=_cmd_pushout)

    p = sub.add_parser("selftest", help="run the invariant suites")
    add_common(p)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, IllFormedMap, MalformedAlgebra, POrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SizeError, CosetLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except GalcalcError as exc:  # remaining domain errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())

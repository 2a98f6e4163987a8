"""Command-line front end.

Subcommands: ``build-kp`` (construct K(P) and write it out), ``table``
(reproduce the classification table for small dimensions), ``analyze``
(full report on a complex or quadrillage file), and ``embed``
(embeddability probes on a graph file).

Exit codes: 0 success, 2 input error, 3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import formats
from .errors import FormatError, GuardExceeded
from .metric import (Graph, cut_cone_decompose, find_scaled_embedding,
                     is_isometric_cycle, kgonal_violations, partial_cube)
from .partitions import Partition, build_kp, classify, enumerate_partitions, kp_summary
from .quadrillage import (Quadrillage, embeddable_by_zones, quadrillage_type,
                          zone_is_convex, zone_is_simple, zones)
from .simplicial import (SimplicialComplex, complex_type, euler_characteristic,
                         faces_of_dim, is_closed_pseudomanifold, link_of_face,
                         skeleton)
from .symmetry import automorphisms, coxeter_order_bruteforce, orbits

TABLE_COLUMNS = ("partition", "skeleton", "facets", "aut", "orbits", "cox",
                 "verified")
AUT_MATERIALIZE_LIMIT = 100_000


def skeleton_name(m: int, h: int) -> str:
    """Display form of K_m - hK_2."""
    if h == 0:
        return f"K{m}"
    if h == 1:
        return f"K{m}-K2"
    return f"K{m}-{h}K2"


def identify_complete_minus_matching(G: Graph):
    """(m, h) if the graph is K_m - hK_2, else None."""
    m = G.num_vertices
    missing = []
    verts = G.vertices
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if not G.has_edge(u, v):
                missing.append((u, v))
    touched = [v for e in missing for v in e]
    if len(set(touched)) != len(touched):
        return None
    return m, len(missing)


def _print_report(pairs, tsv: bool, out) -> None:
    for key, value in pairs:
        if tsv:
            out.write(f"{key}\t{value}\n")
        else:
            out.write(f"{key}: {value}\n")


def cmd_build_kp(args) -> int:
    p = Partition.from_spec(args.partition)
    if not p.covers_range():
        raise FormatError(f"partition must cover 1..{p.m}: {args.partition!r}")
    K = build_kp(p)
    text = formats.serialize_complex(K)
    s = kp_summary(p)
    summary = [
        ("partition", p.to_spec()),
        ("facets", s.facet_count),
        ("skeleton", skeleton_name(s.skeleton_m, s.skeleton_h)),
        ("aut order", s.aut_order),
        ("cox order", s.cox_order),
        ("vertex orbits", s.vertex_orbit_count),
    ]
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        _print_report(summary, tsv=False, out=sys.stdout)
    else:
        sys.stdout.write(text)
        _print_report(summary, tsv=False, out=sys.stderr)
    return 0


def _verify_row(p: Partition, s) -> str:
    if (s.skeleton_m > 12 or s.aut_order > AUT_MATERIALIZE_LIMIT
            or s.cox_order > 10 ** 7):
        return "-"
    K = build_kp(p)
    perms = automorphisms(K)
    checks = (
        K.num_facets == s.facet_count
        and len(perms) == s.aut_order
        and len(orbits(perms, K.vertices)) == s.vertex_orbit_count
        and coxeter_order_bruteforce(p) == s.cox_order
    )
    return "yes" if checks else "MISMATCH"


def cmd_table(args) -> int:
    if not 2 <= args.max_dim <= 6:
        raise FormatError(f"--max-dim must be between 2 and 6, got {args.max_dim}")
    out = sys.stdout
    out.write("\t".join(TABLE_COLUMNS) + "\n")
    for m in range(3, args.max_dim + 2):
        for p in enumerate_partitions(m):
            s = kp_summary(p)
            row = (p.to_spec(), skeleton_name(s.skeleton_m, s.skeleton_h),
                   s.facet_count, s.aut_order, s.vertex_orbit_count,
                   s.cox_order, _verify_row(p, s))
            out.write("\t".join(str(x) for x in row) + "\n")
    return 0


def _simplicial_report(K: SimplicialComplex, bound: int):
    pairs = [
        ("format", "simplicial"),
        ("dimension", K.dim),
        ("vertices", len(K.vertices)),
        ("facets", K.num_facets),
    ]
    verdict = is_closed_pseudomanifold(K)
    pairs.append(("closed", "yes" if verdict.is_closed else verdict.status))
    pairs.append(("euler characteristic", euler_characteristic(K)))
    G = skeleton(K)
    ident = identify_complete_minus_matching(G)
    name = f" ({skeleton_name(*ident)})" if ident else ""
    pairs.append(("skeleton",
                  f"{G.num_vertices} vertices, {G.num_edges} edges{name}"))
    if not verdict.is_closed:
        if verdict.status == "boundary":
            pairs.append(("boundary faces", len(verdict.boundary)))
        else:
            pairs.append(("bad face",
                          f"{sorted(verdict.bad_face)} in {verdict.bad_count} facets"))
        pairs.append(("note", "not closed; partial report"))
        return pairs
    ty = complex_type(K)
    pairs.append(("type", "{" + ",".join(str(x) for x in sorted(ty)) + "}"))
    try:
        pairs.append(("classification", classify(K).to_spec()))
    except ValueError as exc:
        pairs.append(("classification", f"failed: {exc}"))
    if K.dim >= 3:
        flagged = []
        count = 0
        for face in sorted(faces_of_dim(K, K.dim - 2), key=sorted):
            report = link_of_face(K, face)
            if sum(report.sizes) >= 5 and len(report.cycles) == 1:
                count += 1
                if is_isometric_cycle(G, report.cycles[0]):
                    flagged.append(",".join(str(v) for v in sorted(face)))
        if flagged:
            pairs.append(("isometric link obstruction",
                          "; ".join(flagged) + " (skeleton not embeddable)"))
        else:
            pairs.append(("isometric link obstruction",
                          f"none ({count} links of size >= 5)"))
    pairs.extend(_embeddability_report(G, bound))
    return pairs


def _embeddability_report(G: Graph, bound: int):
    pairs = []
    gonal5 = kgonal_violations(G, 2)
    pairs.append(("5-gonal", "ok" if not gonal5
                  else f"violated by b={dict(gonal5[0].coefficients)}"))
    hyper = kgonal_violations(G, bound)
    pairs.append((f"hypermetric (bound {bound})", "ok" if not hyper
                  else f"violated by b={dict(hyper[0].coefficients)}"))
    try:
        dec = cut_cone_decompose(G)
    except GuardExceeded:
        pairs.append(("cut cone", "skipped (vertex guard)"))
    except ValueError as exc:
        pairs.append(("cut cone", f"skipped ({exc})"))
    else:
        pairs.append(("cut cone", "feasible (L1-embeddable)" if dec
                      else "infeasible (NOT embeddable at any scale)"))
    try:
        labeling = partial_cube(G)
    except ValueError as exc:
        pairs.append(("partial cube", f"skipped ({exc})"))
    else:
        pairs.append(("partial cube",
                      f"yes (dimension {labeling.dimension})" if labeling else "no"))
    return pairs


def _quad_report(Q: Quadrillage, bound: int):
    pairs = [
        ("format", "quad"),
        ("vertices", Q.num_vertices),
        ("edges", Q.num_edges),
        ("faces", Q.num_faces),
        ("closed", "yes" if Q.is_closed else "boundary"),
        ("euler characteristic", Q.euler_characteristic()),
    ]
    if Q.is_closed:
        ty = quadrillage_type(Q)
        pairs.append(("type", "{" + ",".join(str(x) for x in sorted(ty)) + "}"))
    zs = zones(Q)
    pairs.append(("zones", len(zs)))
    pairs.append(("zone lengths", ",".join(str(z.length) for z in zs)))
    simple = all(zone_is_simple(Q, z) for z in zs)
    pairs.append(("zones simple", "yes" if simple else "no"))
    if simple:
        convex = all(zone_is_convex(Q, z) for z in zs)
        pairs.append(("zones convex", "yes" if convex else "no"))
    import warnings as _warnings
    with _warnings.catch_warnings():
        _warnings.simplefilter("ignore")
        pairs.append(("embeddable by zones",
                      "yes" if embeddable_by_zones(Q) else "no"))
    pairs.extend(_embeddability_report(Q.skeleton(), bound))
    return pairs


def cmd_analyze(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    keyword = formats.detect_format(text)
    if keyword == "simplicial":
        pairs = _simplicial_report(formats.parse_complex(text), args.hypermetric_bound)
    elif keyword == "quad":
        pairs = _quad_report(formats.parse_quadrillage(text), args.hypermetric_bound)
    else:
        raise FormatError("analyze expects a simplicial or quad file; "
                          "use 'embed' for graph files")
    _print_report(pairs, tsv=args.tsv, out=sys.stdout)
    return 0


def cmd_embed(args) -> int:
    if not args.graph:
        raise FormatError("embed requires the --graph flag")
    with open(args.file, encoding="utf-8") as fh:
        G = formats.parse_graph(fh.read())
    pairs = [("graph", f"{G.num_vertices} vertices, {G.num_edges} edges")]
    pairs.extend(_embeddability_report(G, args.hypermetric_bound))
    _print_report(pairs, tsv=False, out=sys.stdout)
    if args.scale is not None or args.dim is not None:
        if args.scale is None or args.dim is None:
            raise FormatError("--scale and --dim must be given together")
        found = find_scaled_embedding(G, args.scale, args.dim)
        if found is None:
            sys.stdout.write(
                f"embedding (scale {args.scale}, dim {args.dim}): none\n")
        else:
            sys.stdout.write(
                f"embedding (scale {args.scale}, dim {args.dim}): found\n")
            for v in G.vertices:
                bits = "".join(str(b) for b in found[v])
                sys.stdout.write(f"  {v}: {bits}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shortlinks",
        description="Simplicial complexes with short links, zones, and "
                    "hypercube embeddability.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build-kp", help="construct K(P) from a partition")
    p_build.add_argument("--partition", required=True,
                         help="parts separated by '|', elements by ','")
    p_build.add_argument("-o", "--output", help="write the complex file here")
    p_build.set_defaults(func=cmd_build_kp)

    p_table = sub.add_parser("table", help="classification table as TSV")
    p_table.add_argument("--max-dim", type=int, required=True)
    p_table.set_defaults(func=cmd_table)

    p_analyze = sub.add_parser("analyze", help="full report on a complex file")
    p_analyze.add_argument("file")
    p_analyze.add_argument("--hypermetric-bound", type=int, default=3)
    p_analyze.add_argument("--tsv", action="store_true",
                           help="machine-readable key<TAB>value output")
    p_analyze.set_defaults(func=cmd_analyze)

    p_embed = sub.add_parser("embed", help="embeddability probes on a graph file")
    p_embed.add_argument("file")
    p_embed.add_argument("--graph", action="store_true",
                         help="the file is in the graph format")
    p_embed.add_argument("--scale", type=int)
    p_embed.add_argument("--dim", type=int)
    p_embed.add_argument("--hypermetric-bound", type=int, default=3)
    p_embed.set_defaults(func=cmd_embed)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"instance too large: {exc}", file=sys.stderr)
        return 3
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

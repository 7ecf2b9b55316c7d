"""Command-line interface.

Every subcommand that writes files also writes a run manifest (JSON with
the argument vector, versions, and SHA-256 digests of the outputs), and
``indcycles replay MANIFEST`` re-runs it and compares digests.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import platform
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .census import census_csv, count_induced_cycles, count_induced_cycles_through_path
from .constructors import (
    ConstructionError,
    RequiredFormSpec,
    make_case_graph,
    make_even_blowup,
    make_face_gadget,
    make_h_minus_z,
    make_k2m,
    make_odd_blowup,
    make_required_form,
    parse_face_type,
)
from .enumeration import EnumerationError, enumerate_planar
from .formats import dot_export, graph6_decode, graph6_encode, read_graph6_stream
from .planar import Embedding, PlanarityError, embed, rotation_from_text, rotation_to_text
from .search import SearchConfig, SearchError, anneal_max, exhaustive_max
from .verify import SUITES, SuiteReport, run_suite

log = logging.getLogger("indcycles")

WORKERS_ENV = "INDCYCLES_WORKERS"


class UsageError(Exception):
    pass


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# manifests
# ---------------------------------------------------------------------------


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _versions() -> dict[str, str]:
    import numpy

    out = {"indcycles": __version__, "numpy": numpy.__version__, "python": platform.python_version()}
    try:
        import numba

        out["numba"] = numba.__version__
    except ImportError:  # pragma: no cover
        pass
    return out


class Outputs:
    """Collects output files and stdout text so the manifest can digest them."""

    def __init__(self):
        self.files: dict[str, str] = {}
        self.stdout_parts: list[str] = []

    def write(self, path: str | Path, text: str) -> None:
        data = text.encode()
        Path(path).write_bytes(data)
        self.files[str(path)] = _sha256(data)

    def echo(self, text: str) -> None:
        sys.stdout.write(text)
        self.stdout_parts.append(text)

    def digests(self) -> dict[str, str]:
        d = dict(self.files)
        if self.stdout_parts:
            d["<stdout>"] = _sha256("".join(self.stdout_parts).encode())
        return d


def _write_manifest(path: str | Path, command: str, argv: Sequence[str], params: dict, outputs: Outputs) -> None:
    manifest = {
        "subcommand": command,
        "argv": list(argv),
        "parameters": params,
        "seed": params.get("seed"),
        "versions": _versions(),
        "outputs": outputs.digests(),
    }
    Path(path).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _params(ns: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(ns).items()) if k not in ("func",) and not callable(v)}


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------


def _parse_types(text: str):
    return [parse_face_type(t.strip()) for t in text.split(",")]


def _construct(ns):
    fam = ns.family
    if fam == "k2m":
        return make_k2m(ns.n)
    if fam == "required-form":
        spec = RequiredFormSpec(ns.n, ns.option)
        mask = spec.full_mask() if ns.mask == "full" else int(ns.mask, 0)
        return make_required_form(RequiredFormSpec(ns.n, ns.option, mask))
    if fam == "blowup":
        if ns.k is None:
            raise UsageError("blowup needs --k")
        if ns.odd:
            return make_odd_blowup(ns.k, ns.n, with_paths=ns.paths)
        return make_even_blowup(ns.k, ns.n)
    if fam == "gadget":
        if not ns.types:
            raise UsageError("gadget needs --types, e.g. 3:4,2,2")
        masks = [None if m == "-" else int(m, 0) for m in ns.masks.split(",")] if ns.masks else None
        return make_face_gadget(_parse_types(ns.types), masks)
    if fam == "h-minus-z":
        if not ns.sizes:
            raise UsageError("h-minus-z needs --sizes A B C")
        return make_h_minus_z(*ns.sizes)
    if fam == "case":
        if not ns.types or not ns.sizes:
            raise UsageError("case needs --types and --sizes")
        masks = [None if m == "-" else int(m, 0) for m in ns.masks.split(",")] if ns.masks else None
        return make_case_graph(_parse_types(ns.types), tuple(ns.sizes), masks)
    raise UsageError(f"unknown family {fam}")  # argparse restricts choices


def cmd_construct(ns, argv) -> int:
    needs_n = ns.family in ("k2m", "required-form", "blowup")
    if needs_n and ns.n is None:
        raise UsageError(f"{ns.family} needs --n")
    con = _construct(ns)
    out = Outputs()
    g6 = graph6_encode(con.graph).decode() + "\n"
    if ns.out:
        prefix = ns.out
        out.write(f"{prefix}.g6", g6)
        out.write(f"{prefix}.names.json", json.dumps(con.names, indent=2) + "\n")
        if con.rotation is not None:
            out.write(f"{prefix}.rot", rotation_to_text(con.rotation))
        _write_manifest(ns.manifest or f"{prefix}.manifest.json", "construct", argv, _params(ns), out)
        print(f"wrote {prefix}.g6 ({con.graph.n} vertices, {con.graph.num_edges} edges)", file=sys.stderr)
    else:
        out.echo(g6)
        if ns.manifest:
            _write_manifest(ns.manifest, "construct", argv, _params(ns), out)
    return 0


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------


def _read_lines(source: str) -> list[str]:
    if source == "-":
        return sys.stdin.read().splitlines()
    return Path(source).read_text().splitlines()


def _resolve_vertex(token: str, names: dict[str, int] | None) -> int:
    if names and token in names:
        return names[token]
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"unknown vertex {token!r} (pass --names to use vertex names)") from None


def cmd_count(ns, argv) -> int:
    names = json.loads(Path(ns.names).read_text()) if ns.names else None
    rows = []
    through = {} if ns.through else None
    errors = 0
    for lineno, item in read_graph6_stream(_read_lines(ns.input)):
        gid = str(lineno)
        if isinstance(item, Exception):
            print(f"line {lineno}: {item}", file=sys.stderr)
            errors += 1
            continue
        g = item
        if not 3 <= ns.k <= g.n:
            print(f"line {lineno}: cycle length {ns.k} out of range for n={g.n}", file=sys.stderr)
            errors += 1
            continue
        rows.append((gid, count_induced_cycles(g, ns.k)))
        if ns.through:
            path = [_resolve_vertex(t, names) for t in ns.through]
            try:
                through[gid] = count_induced_cycles_through_path(g, path, ns.k)
            except ValueError as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                errors += 1
    out = Outputs()
    text = census_csv(rows, through, per_vertex=ns.per_vertex)
    if ns.out:
        out.write(ns.out, text)
    else:
        out.echo(text)
    if ns.manifest:
        _write_manifest(ns.manifest, "count", argv, _params(ns), out)
    return 1 if errors else 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _suite_options(ns) -> dict:
    opts = {}
    if ns.suite == "ten-vertex":
        opts = {"restarts": ns.restarts, "seed": ns.seed, "steps": ns.budget, "workers": ns.workers}
    return opts


def _emit_reports(reports: list[SuiteReport], ns, argv, command: str) -> int:
    out = Outputs()
    # one header row for the concatenated CSV
    csv_text = "".join(r.to_csv() if i == 0 else r.to_csv().split("\n", 1)[1] for i, r in enumerate(reports))
    body = csv_text if ns.format == "csv" else "\n".join(r.to_markdown() for r in reports)
    if ns.out:
        out.write(ns.out, body)
    else:
        out.echo(body)
    if ns.csv:
        out.write(ns.csv, csv_text)
    if ns.manifest:
        _write_manifest(ns.manifest, command, argv, _params(ns), out)
    failed = [r.suite for r in reports if not r.ok]
    if failed:
        print(f"FAILED suites: {', '.join(failed)}", file=sys.stderr)
    return 1 if failed else 0


def cmd_verify(ns, argv) -> int:
    names = list(SUITES) if ns.suite == "all" else [ns.suite]
    reports = []
    for name in names:
        ns_suite = argparse.Namespace(**{**vars(ns), "suite": name})
        reports.append(run_suite(name, **_suite_options(ns_suite)))
    return _emit_reports(reports, ns, argv, "verify")


def cmd_verify_formulas(ns, argv) -> int:
    return _emit_reports([run_suite("formulas", n_max=ns.n_max)], ns, argv, "verify-formulas")


# ---------------------------------------------------------------------------
# enumerate / search
# ---------------------------------------------------------------------------


def cmd_enumerate(ns, argv) -> int:
    graphs = enumerate_planar(ns.n, workers=ns.workers)
    out = Outputs()
    text = "".join(graph6_encode(g).decode() + "\n" for g in graphs)
    if ns.out:
        out.write(ns.out, text)
        print(f"{len(graphs)} planar graphs on {ns.n} vertices -> {ns.out}", file=sys.stderr)
    else:
        out.echo(text)
    manifest = ns.manifest or (f"{ns.out}.manifest.json" if ns.out else "indcycles-enumerate.manifest.json")
    _write_manifest(manifest, "enumerate", argv, _params(ns), out)
    return 0


def cmd_search(ns, argv) -> int:
    if ns.exhaustive:
        rec = exhaustive_max(ns.n, ns.k, workers=ns.workers)
    else:
        weights = tuple(float(x) for x in ns.weights.split(","))
        cfg = SearchConfig(
            n=ns.n, k=ns.k, weights=weights, t_start=ns.t_start, t_end=ns.t_end,
            steps=ns.budget, restarts=ns.restarts, seed=ns.seed, start=ns.start, workers=ns.workers,
        )
        rec = anneal_max(cfg)
    out = Outputs()
    text = rec.to_json()
    if ns.out:
        out.write(ns.out, text)
    else:
        out.echo(text)
    manifest = ns.manifest or (f"{ns.out}.manifest.json" if ns.out else "indcycles-search.manifest.json")
    _write_manifest(manifest, "search", argv, _params(ns), out)
    return 0


# ---------------------------------------------------------------------------
# faces / export-dot
# ---------------------------------------------------------------------------


def _single_graph(source: str):
    text = source
    if source == "-" or Path(source).exists():
        lines = [l for l in _read_lines(source) if l.strip()]
        if not lines:
            raise UsageError("no graph in input")
        text = lines[0]
    return graph6_decode(text)


def cmd_faces(ns, argv) -> int:
    g = _single_graph(ns.graph)
    if ns.rotation:
        emb = Embedding.from_rotation(rotation_from_text(Path(ns.rotation).read_text()))
        if not emb.matches(g):
            raise UsageError("rotation does not match the graph")
    else:
        emb = embed(g)
    out = Outputs()
    lines = [emb.to_text().rstrip("\n"), f"# {len(emb.faces)} faces, spherical={emb.is_spherical()}"]
    lines += [" ".join(map(str, f)) for f in emb.faces]
    text = "\n".join(lines) + "\n"
    if ns.out:
        out.write(ns.out, text)
    else:
        out.echo(text)
    if ns.manifest:
        _write_manifest(ns.manifest, "faces", argv, _params(ns), out)
    return 0


def cmd_export_dot(ns, argv) -> int:
    g = _single_graph(ns.graph)
    names = json.loads(Path(ns.names).read_text()) if ns.names else None
    highlight = [_resolve_vertex(t, names) for t in ns.highlight or []]
    out = Outputs()
    text = dot_export(g, highlight=highlight, names=names)
    if ns.out:
        out.write(ns.out, text)
    else:
        out.echo(text)
    if ns.manifest:
        _write_manifest(ns.manifest, "export-dot", argv, _params(ns), out)
    return 0


# ---------------------------------------------------------------------------
# replay
# ---------------------------------------------------------------------------


def cmd_replay(ns, argv) -> int:
    manifest = json.loads(Path(ns.manifest_file).read_text())
    replay_manifest = Path(ns.manifest_file).with_suffix(".replay.json")
    cleaned = []
    skip = False
    for a in manifest["argv"]:
        if skip:
            skip = False
            continue
        if a == "--manifest":
            skip = True
            continue
        if a.startswith("--manifest="):
            continue
        cleaned.append(a)
    code = main(cleaned + ["--manifest", str(replay_manifest)])
    new = json.loads(replay_manifest.read_text())
    replay_manifest.unlink()
    same = new["outputs"] == manifest["outputs"]
    for key in sorted(set(manifest["outputs"]) | set(new["outputs"])):
        a, b = manifest["outputs"].get(key), new["outputs"].get(key)
        print(f"{'ok ' if a == b else 'DIFF'} {key}", file=sys.stderr)
    return 0 if same and code == 0 else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    workers = _default_workers()
    p = argparse.ArgumentParser(prog="indcycles", description="Induced cycles in extremal planar graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, manifest_help="write a run manifest here"):
        sp.add_argument("--out", help="output path (default: stdout)")
        sp.add_argument("--manifest", help=manifest_help)

    c = sub.add_parser("construct", help="build a named graph family")
    c.add_argument("family", choices=["k2m", "required-form", "blowup", "gadget", "h-minus-z", "case"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int, help="blow-up parameter (cycle length 2k or 2k+1)")
    c.add_argument("--option", choices=["first", "second"], help="class-size option when n != 1 mod 3")
    c.add_argument("--mask", default="0", help="optional-edge bitmask (int, 0x.., or 'full')")
    parity = c.add_mutually_exclusive_group()
    parity.add_argument("--even", action="store_true", help="blow up C_2k (default)")
    parity.add_argument("--odd", action="store_true", help="blow up C_2k+1")
    c.add_argument("--paths", action="store_true", help="odd blow-up: add a path through each class")
    c.add_argument("--types", help="face types for F1,F2,F3, e.g. 3:4,2,2")
    c.add_argument("--masks", help="per-face optional-edge masks, '-' for default, e.g. 3,-,-")
    c.add_argument("--sizes", type=int, nargs=3, metavar=("A", "B", "C"))
    c.add_argument("--out", help="output prefix: writes PREFIX.g6, PREFIX.names.json, PREFIX.rot")
    c.add_argument("--manifest", help="manifest path (default PREFIX.manifest.json with --out)")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("count", help="induced cycle census of a graph6 stream, as CSV")
    c.add_argument("input", nargs="?", default="-", help="graph6 file, one graph per line ('-' = stdin)")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--per-vertex", action="store_true", help="add the per-vertex vector")
    c.add_argument("--through", nargs=3, metavar=("U", "V", "W"), help="also count cycles through path U-V-W")
    c.add_argument("--names", help="JSON name map for --through vertex names")
    common(c)
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("verify", help="run a verification suite; exit 1 on any mismatch")
    c.add_argument("suite", choices=sorted(SUITES) + ["all"])
    c.add_argument("--format", choices=["md", "csv"], default="md")
    c.add_argument("--csv", help="also write the CSV twin here")
    c.add_argument("--restarts", type=int, default=32)
    c.add_argument("--seed", type=int, default=7)
    c.add_argument("--budget", type=int, default=3000, help="annealing steps per restart")
    c.add_argument("--workers", type=int, default=workers)
    common(c)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("verify-formulas", help="closed forms against constructed censuses")
    c.add_argument("--n-max", type=int, default=40)
    c.add_argument("--format", choices=["md", "csv"], default="md")
    c.add_argument("--csv", help="also write the CSV twin here")
    common(c)
    c.set_defaults(func=cmd_verify_formulas)

    c = sub.add_parser("enumerate", help="all planar graphs on n <= 9 vertices, graph6 stream")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--workers", type=int, default=workers)
    common(c)
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("search", help="maximise induced k-cycles over planar graphs")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, default=5)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--restarts", type=int, default=32)
    c.add_argument("--budget", type=int, default=3000, help="annealing steps per restart")
    c.add_argument("--start", choices=["random", "skeleton", "required-form"], default="random")
    c.add_argument("--weights", default="0.4,0.2,0.4", help="add,delete,swap move weights")
    c.add_argument("--t-start", type=float, default=2.0)
    c.add_argument("--t-end", type=float, default=0.05)
    c.add_argument("--exhaustive", action="store_true", help="scan the full enumeration instead (n <= 9)")
    c.add_argument("--workers", type=int, default=workers)
    common(c)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("faces", help="rotation system and faces of a planar graph")
    c.add_argument("graph", help="graph6 string or file")
    c.add_argument("--rotation", help="use this rotation file instead of computing an embedding")
    common(c)
    c.set_defaults(func=cmd_faces)

    c = sub.add_parser("export-dot", help="DOT drawing input")
    c.add_argument("graph", help="graph6 string or file")
    c.add_argument("--highlight", nargs="*", help="vertices to highlight (labels or names)")
    c.add_argument("--names", help="JSON name map (labels nodes, resolves --highlight)")
    common(c)
    c.set_defaults(func=cmd_export_dot)

    c = sub.add_parser("replay", help="re-run a manifest and compare output digests")
    c.add_argument("manifest_file")
    c.set_defaults(func=cmd_replay)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return ns.func(ns, argv)
    except UsageError as exc:
        parser.error(str(exc))
    except (ConstructionError, EnumerationError, SearchError, PlanarityError, ValueError, OSError) as exc:
        print(f"indcycles: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

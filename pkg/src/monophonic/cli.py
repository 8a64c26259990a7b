"""Command-line interface.

Exit codes: 0 when every expectation holds, 1 when a claim or verdict fails
(or a search budget runs out), 2 on usage, parse or configuration errors.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from . import __version__, engine, structure
from .claims import ConfigError, build_graph, default_cache_dir, load_manifest, run_manifest
from .graph import Graph, GraphInputError, is_induced_path, parse_graph, to_text
from .paths import johnson_witness_path, kneser_witness_path, product_witness_path
from .search import DEFAULT_BUDGET, BudgetExceeded

FAMILIES = [
    "kneser",
    "johnson",
    "generalized_johnson",
    "hamming",
    "hypercube",
    "complete",
    "path",
    "cycle",
    "complete_minus_matching",
]

# positional parameter names for `generate FAMILY P1 P2 ...`
POSITIONAL = {
    "kneser": ("n", "r"),
    "johnson": ("n", "r"),
    "generalized_johnson": ("n", "r", "i"),
    "hypercube": ("k",),
    "complete": ("n",),
    "path": ("n",),
    "cycle": ("n",),
    "complete_minus_matching": ("n", "m"),
}


class UsageFailure(click.ClickException):
    exit_code = 2


class BudgetFailure(click.ClickException):
    exit_code = 1


class Cli(click.Group):
    """Group that turns library errors into the documented exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (GraphInputError, ConfigError) as exc:
            raise UsageFailure(str(exc)) from None
        except BudgetExceeded as exc:
            raise BudgetFailure(f"budget-exceeded: {exc}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageFailure(f"expected comma-separated integers, got {text!r}") from None


def graph_options(fn):
    opts = [
        click.option("--family", type=click.Choice(FAMILIES), help="Generated graph family."),
        click.option("--n", "n", type=int, help="Ground set size or order."),
        click.option("--r", "r", type=int, help="Subset size."),
        click.option("--i", "i", type=int, help="Intersection size for generalized Johnson graphs."),
        click.option("--dims", help="Comma-separated Hamming dimensions."),
        click.option("--m", "m", type=int, default=0, show_default=True, help="Matching size removed."),
        click.option("--k", "k", type=int, help="Hypercube dimension."),
        click.option("--file", "file", type=click.Path(dir_okay=False), help="Graph in text format."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def format_option(fn):
    return click.option(
        "--format", "fmt", type=click.Choice(["text", "machine"]), default="text", show_default=True
    )(fn)


def budget_option(fn):
    return click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True, help="Search steps per query.")(fn)


def load_graph(family, n, r, i, dims, m, k, file) -> Graph:
    if file:
        if family:
            raise UsageFailure("give either --family or --file, not both")
        try:
            return parse_graph(Path(file).read_text())
        except OSError as exc:
            raise UsageFailure(str(exc)) from None
    if not family:
        raise UsageFailure("a graph is required: use --family or --file")
    spec = {"family": family, "n": n, "r": r, "i": i, "m": m, "k": k}
    if dims:
        spec["dims"] = _ints(dims)
    spec = {key: v for key, v in spec.items() if v is not None}
    return build_graph(spec)


def parse_vertex(G: Graph, text: str) -> int:
    parts = _ints(text)
    if G.labels:
        return G.vertex(parts)
    if G.pair_labels and len(parts) == 2:
        if tuple(parts) not in G.pair_labels:
            raise GraphInputError(f"no product vertex {tuple(parts)}")
        return G.pair_labels.index(tuple(parts))
    if len(parts) != 1:
        raise UsageFailure(f"{text!r} is not a vertex id of this unlabelled graph")
    return G.check(parts[0])


def show(G: Graph, v: int):
    if G.labels:
        return list(G.labels[v])
    if G.pair_labels:
        return list(G.pair_labels[v])
    return v


def fmt_vertex(G: Graph, v: int) -> str:
    s = show(G, v)
    return "{" + ",".join(map(str, s)) + "}" if G.labels else str(tuple(s) if isinstance(s, list) else s)


def emit(fmt: str, doc: dict, lines: list[str]) -> None:
    if fmt == "machine":
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo("\n".join(lines))


@click.group(cls=Cli, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="monophonic")
@click.option("-v", "--verbose", count=True, help="Log progress to stderr.")
def main(verbose: int) -> None:
    """Monophonic intervals, numbers and induced-path constructions."""
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.argument("kind", required=False, type=click.Choice(FAMILIES))
@click.argument("params", nargs=-1, type=int)
@graph_options
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write to a file instead of stdout.")
def generate(kind, params, output, **opts):
    """Emit a generated graph in the text format.

    Parameters may be positional (``generate kneser 5 2``) or given as flags.
    """
    if kind:
        if opts["family"] and opts["family"] != kind:
            raise UsageFailure("conflicting family names")
        opts["family"] = kind
        if kind == "hamming":
            if params:
                opts["dims"] = ",".join(map(str, params))
        else:
            names = POSITIONAL[kind]
            if len(params) > len(names):
                raise UsageFailure(f"{kind} takes at most {len(names)} parameters: {' '.join(names)}")
            for name, value in zip(names, params):
                opts[name] = value
    elif params:
        raise UsageFailure("positional parameters need a family")
    if opts["file"]:
        raise UsageFailure("generate does not read files")
    text = to_text(load_graph(**opts))
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


@main.command()
@graph_options
@click.option("--x", "x", required=True, help="First endpoint (subset as 1,2,3 or an id).")
@click.option("--y", "y", required=True, help="Second endpoint.")
@budget_option
@format_option
def interval(x, y, budget, fmt, **opts):
    """Monophonic interval of two vertices, with one witness path per member."""
    G = load_graph(**opts)
    a, b = parse_vertex(G, x), parse_vertex(G, y)
    res = engine.monophonic_interval(G, a, b, budget=budget)
    members = sorted(res.members)
    doc = {
        "graph": G.name or G.digest(),
        "x": show(G, a),
        "y": show(G, b),
        "size": len(members),
        "order": G.n,
        "members": [{"vertex": show(G, v), "witness": [show(G, w) for w in res.witness[v]]} for v in members],
    }
    lines = [f"J({fmt_vertex(G, a)}, {fmt_vertex(G, b)}) in {G.name or 'graph'}: {len(members)} of {G.n} vertices"]
    for v in members:
        lines.append(f"  {fmt_vertex(G, v):<16} via " + " - ".join(fmt_vertex(G, w) for w in res.witness[v]))
    missing = [v for v in range(G.n) if v not in res.members]
    if missing:
        lines.append("not in interval: " + " ".join(fmt_vertex(G, v) for v in missing))
    emit(fmt, doc, lines)


@main.command("mono-number")
@graph_options
@click.option("--max-k", type=int, help="Largest set size to try.")
@budget_option
@format_option
def mono_number(max_k, budget, fmt, **opts):
    """Monophonic number m(G) with one optimal set."""
    G = load_graph(**opts)
    found = engine.monophonic_number(G, max_k, budget=budget)
    if found is None:
        emit(fmt, {"graph": G.name, "m": None, "max_k": max_k}, [f"no monophonic set of size <= {max_k}"])
        sys.exit(1)
    k, S = found
    emit(
        fmt,
        {"graph": G.name or G.digest(), "m": k, "set": [show(G, v) for v in sorted(S)]},
        [str(k), "set: " + " ".join(fmt_vertex(G, v) for v in sorted(S))],
    )


@main.command("s2m-check")
@graph_options
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes.")
@budget_option
@format_option
def s2m_check(jobs, budget, fmt, **opts):
    """Decide strong 2-monophonicity; exits 1 when the graph is not."""
    G = load_graph(**opts)
    holds, triple = engine.is_strongly_2_monophonic(G, jobs=jobs, budget=budget)
    doc = {"graph": G.name or G.digest(), "strongly_2_monophonic": holds}
    lines = [f"{G.name or 'graph'}: strongly 2-monophonic = {str(holds).lower()}"]
    if triple is not None:
        x, y, u = triple
        doc["counterexample"] = {"x": show(G, x), "y": show(G, y), "u": show(G, u)}
        lines.append(f"counterexample: {fmt_vertex(G, u)} is outside J({fmt_vertex(G, x)}, {fmt_vertex(G, y)})")
    emit(fmt, doc, lines)
    sys.exit(0 if holds else 1)


@main.group()
def path():
    """Run one of the explicit induced-path constructions."""


def _path_report(G: Graph, ids: list[int], case: str, fallback: bool, fmt: str) -> None:
    valid = is_induced_path(G, ids)
    doc = {
        "path": [show(G, v) for v in ids],
        "length": len(ids) - 1,
        "case": case,
        "fallback": fallback,
        "validated": valid,
    }
    lines = [
        " - ".join(fmt_vertex(G, v) for v in ids),
        f"length {len(ids) - 1}, case {case}, validated {str(valid).lower()}" + (", fallback used" if fallback else ""),
    ]
    emit(fmt, doc, lines)
    if not valid:
        sys.exit(1)


@path.command("kneser")
@click.option("--x", "x", required=True)
@click.option("--y", "y", required=True)
@click.option("--via", required=True)
@click.option("--r", "r", type=int, required=True)
@click.option("--n", "n", type=int, help="Ground set size (default 2r+1).")
@format_option
def path_kneser(x, y, via, r, n, fmt):
    """Induced x,y-path through VIA in K(n, r)."""
    from .paths import _kneser

    built = kneser_witness_path(_ints(x), _ints(y), _ints(via), r, n=n)
    G = _kneser(n or 2 * r + 1, r)
    _path_report(G, [G.vertex(v) for v in built.path], built.case, built.fallback, fmt)


@path.command("johnson")
@click.option("--x", "x", required=True)
@click.option("--y", "y", required=True)
@click.option("--via", required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--r", "r", type=int, required=True)
@format_option
def path_johnson(x, y, via, n, r, fmt):
    """Induced x,y-path through VIA in J(n, r)."""
    from .paths import _johnson

    built = johnson_witness_path(_ints(x), _ints(y), _ints(via), n, r)
    G = _johnson(n, r)
    _path_report(G, [G.vertex(v) for v in built.path], built.case, built.fallback, fmt)


def _factor(text: str) -> Graph:
    """Factor spec such as ``cycle:5``, ``complete:3``, ``kneser:5,2`` or ``hamming:2,2``."""
    fam, _, params = text.partition(":")
    if fam not in FAMILIES:
        raise UsageFailure(f"unknown factor family {fam!r}")
    vals = _ints(params)
    if fam == "hamming":
        return build_graph({"family": fam, "dims": vals})
    names = POSITIONAL[fam]
    if len(vals) != len(names):
        raise UsageFailure(f"factor {fam} needs parameters {','.join(names)}")
    return build_graph({"family": fam, **dict(zip(names, vals))})


@path.command("product")
@click.option("--left", required=True, help="First factor, e.g. cycle:4.")
@click.option("--right", required=True, help="Second factor, e.g. complete:2.")
@click.option("--x", "x", required=True, help="Source as g,h.")
@click.option("--y", "y", required=True, help="Target as g,h.")
@click.option("--via", required=True, help="Required vertex as g,h.")
@format_option
def path_product(left, right, x, y, via, fmt):
    """Induced path in a Cartesian product through VIA."""
    from .generators import cartesian_product

    G, H = _factor(left), _factor(right)
    coords = []
    for text in (x, y, via):
        c = _ints(text)
        if len(c) != 2:
            raise UsageFailure(f"product vertices are g,h pairs, got {text!r}")
        coords.append(tuple(c))
    GH = cartesian_product(G, H)
    built = product_witness_path(G, H, *coords, product=GH)
    _path_report(GH, built.path, built.case, built.fallback, fmt)


@main.command()
@graph_options
@click.option("--no-engine", is_flag=True, help="Skip the exact strong 2-monophonic check.")
@format_option
def analyze(no_engine, fmt, **opts):
    """Structural report: cliques, chordality, cuts, domination, reductions."""
    G = load_graph(**opts)
    from .graph import is_connected

    connected = is_connected(G)
    simp = sorted(structure.simplicial_vertices(G))
    dismantlable, _ = structure.is_dismantlable(G)
    dom = structure.domination_report(G)
    cuts = structure.cut_analysis(G) if connected else None
    nec = structure.necessary_conditions_report(G)
    red = structure.reduce_by_universals_and_twins(G)
    rows = [
        ("order", G.n),
        ("size", G.edge_count),
        ("connected", connected),
        ("clique number", structure.clique_number(G)),
        ("chordal", structure.is_chordal(G)),
        ("dismantlable", dismantlable),
        ("simplicial", [show(G, v) for v in simp]),
        ("universal", [show(G, v) for v in sorted(dom.universal)]),
        ("open twins", [[show(G, u), show(G, v)] for u, v in sorted(dom.open_twins)]),
        ("cut vertices", None if cuts is None else [show(G, v) for v in sorted(cuts.cut_vertices)]),
        ("N[x] cut sets", None if cuts is None else [show(G, v) for v in sorted(cuts.closed_neighborhood_cuts)]),
    ]
    for check in nec.checks:
        rows.append((f"necessary: {check.name}", "pass" if check.passed else f"FAIL ({check.witness})"))
    rows.append(("reduction core order", red.core.n))
    rows.append(("reduction steps", len(red.log)))
    if not no_engine:
        holds, triple = engine.is_strongly_2_monophonic(G)
        rows.append(("strongly 2-monophonic", holds))
        if triple is not None:
            rows.append(("counterexample", [show(G, v) for v in triple]))
        if G.n > 2 and not connected:
            rows.append(("note", "disconnected: per-component interval convention applied"))
    doc = {"graph": G.name or G.digest(), **{k: v for k, v in rows}}
    width = max(len(k) for k, _ in rows)
    lines = [f"{G.name or 'graph'}"] + [f"  {k.ljust(width)}  {json.dumps(v) if not isinstance(v, str) else v}" for k, v in rows]
    emit(fmt, doc, lines)


@main.command("verify-claims")
@click.argument("manifest", default="reference-claims")
@click.option("--jobs", type=int, default=1, show_default=True, help="Claims evaluated in parallel.")
@click.option("--cache-dir", type=click.Path(file_okay=False), help="Result cache directory (env MONOPHONIC_CACHE_DIR).")
@click.option("--no-cache", is_flag=True, help="Ignore and do not write the cache.")
@budget_option
@format_option
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Also write the machine report here.")
def verify_claims(manifest, jobs, cache_dir, no_cache, budget, fmt, output):
    """Run a claim manifest (default: the bundled reference-claims)."""
    specs = load_manifest(manifest)
    directory = None if no_cache else (cache_dir or default_cache_dir())
    report = run_manifest(specs, jobs=jobs, cache_dir=directory, budget=budget, source=str(manifest))
    if output:
        Path(output).write_text(report.to_machine())
    click.echo(report.to_machine() if fmt == "machine" else report.to_text(), nl=False)
    sys.exit(0 if report.all_hold else 1)

"""Claim manifests, the result cache and report documents.

A manifest is a JSON list of claim specs::

    {"id": "k52-number", "statement": "...",
     "graph": {"family": "kneser", "n": 5, "r": 2},
     "op": "monophonic_number", "args": {}, "expect": 3}

``graph`` may be omitted for operations that build their own graphs.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from . import __version__, engine, generators, structure, sweeps
from .graph import Graph, GraphInputError, parse_graph
from .search import DEFAULT_BUDGET, BudgetExceeded

CACHE_ENV = "MONOPHONIC_CACHE_DIR"
CACHE_FILE = "results.jsonl"
VERDICTS = ("holds", "fails", "budget-exceeded")


class ConfigError(ValueError):
    """A manifest or graph spec is malformed or names an unknown operation."""


def build_graph(spec: dict) -> Graph:
    """Graph from a family descriptor (also used by the CLI)."""
    fam = spec.get("family")
    try:
        if fam == "kneser":
            return generators.kneser(spec["n"], spec["r"])
        if fam == "johnson":
            return generators.johnson(spec["n"], spec["r"])
        if fam == "generalized_johnson":
            return generators.generalized_johnson(spec["n"], spec["r"], spec["i"])
        if fam == "hamming":
            return generators.hamming(spec["dims"])
        if fam == "hypercube":
            return generators.hypercube(spec["k"])
        if fam in ("complete", "path", "cycle", "complete_minus_matching"):
            return generators.basic_graph(fam, spec["n"], spec.get("m", 0))
        if fam == "product":
            G, H = (build_graph(f) for f in spec["factors"])
            return generators.cartesian_product(G, H)
        if fam == "file":
            return parse_graph(Path(spec["path"]).read_text())
    except KeyError as exc:
        raise ConfigError(f"graph spec {spec} lacks {exc}") from None
    raise ConfigError(f"unknown graph family {fam!r}")


def _labels(G: Graph, vs) -> Any:
    return [G.labels[v] if G.labels else v for v in sorted(vs)]


def _vertex(G: Graph, v) -> int:
    return G.vertex(v) if isinstance(v, (list, tuple)) else G.check(v)


# Operations: each returns (value, witness)


def _op_monophonic_number(G, args, budget):
    found = engine.monophonic_number(G, args.get("max_k"), budget=budget)
    if found is None:
        return None, None
    return found[0], _labels(G, found[1])


def _op_s2m(G, args, budget):
    holds, triple = engine.is_strongly_2_monophonic(G, jobs=args.get("jobs", 1), budget=budget)
    return holds, None if triple is None else [_lab(G, v) for v in triple]


def _lab(G: Graph, v: int):
    return G.labels[v] if G.labels else v


def _op_interval_contains(G, args, budget):
    x, y, u = (_vertex(G, args[k]) for k in ("x", "y", "u"))
    res = engine.monophonic_interval(G, x, y, budget=budget)
    hit = u in res.members
    return hit, [_lab(G, w) for w in res.witness[u]] if hit else None


def _op_interval_size(G, args, budget):
    x, y = _vertex(G, args["x"]), _vertex(G, args["y"])
    res = engine.monophonic_interval(G, x, y, budget=budget)
    return len(res.members), _labels(G, set(range(G.n)) - res.members)


def _op_is_monophonic_set(G, args, budget):
    verdict = engine.is_monophonic_set(G, [_vertex(G, v) for v in args["set"]], budget=budget)
    return verdict.holds, None if verdict.holds else _lab(G, verdict.uncovered)


def _op_convexity_is_clique(G, args, budget):
    cm, S = engine.convexity_number(G, budget=budget)
    omega = structure.clique_number(G)
    return cm == omega, {"c_m": cm, "omega": omega, "set": _labels(G, S)}


def _op_induced_cycle(G, args, budget):
    a, b, c = (_vertex(G, v) for v in args["triple"])
    cyc = structure.induced_cycle_through(G, a, b, c, budget=budget)
    return cyc is not None, None if cyc is None else [_lab(G, v) for v in cyc]


def _op_necessary_conditions(G, args, budget):
    rep = structure.necessary_conditions_report(G)
    bad = rep.first_failure()
    return rep.all_passed, None if bad is None else {"condition": bad.name, "witness": bad.witness}


def _sweep_result(sw: sweeps.Sweep):
    return sw.ok, {"checked": sw.checked, "fallbacks": sw.fallbacks, "failure": sw.failure}


def _op_sweep(name: str) -> Callable:
    def run(G, args, budget):
        if name == "product_sweep":
            G1, H1 = (build_graph(f) for f in args["factors"])
            return _sweep_result(sweeps.product_sweep(G1, H1))
        if name == "necessary_soundness":
            return _sweep_result(sweeps.necessary_soundness(build_graph(f) for f in args["graphs"]))
        kwargs = dict(args)
        if "S" in kwargs:
            kwargs["S"] = [tuple(s) for s in kwargs["S"]]
        return _sweep_result(getattr(sweeps, name)(**kwargs))

    return run


OPERATIONS: dict[str, Callable] = {
    "monophonic_number": _op_monophonic_number,
    "is_strongly_2_monophonic": _op_s2m,
    "interval_contains": _op_interval_contains,
    "interval_size": _op_interval_size,
    "is_monophonic_set": _op_is_monophonic_set,
    "convexity_equals_clique": _op_convexity_is_clique,
    "induced_cycle_exists": _op_induced_cycle,
    "necessary_conditions_pass": _op_necessary_conditions,
}
for _name in (
    "kneser_sweep",
    "distance_law",
    "distance_paths",
    "lift_chain",
    "johnson_sweep",
    "product_sweep",
    "chordal_classification",
    "necessary_soundness",
    "oracle_equivalence",
):
    OPERATIONS[_name] = _op_sweep(_name)


@dataclass
class ClaimResult:
    claim_id: str
    statement: str
    verdict: str
    witness: Any = None
    runtime_ms: int = 0

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")


@dataclass
class ReportDocument:
    tool_version: str
    source: str
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {v: 0 for v in VERDICTS}
        for c in self.claims:
            counts[c.verdict] += 1
        return counts

    @property
    def all_hold(self) -> bool:
        return all(c.verdict == "holds" for c in self.claims)

    def to_machine(self, with_runtime: bool = True) -> str:
        claims = []
        for c in self.claims:
            row = asdict(c)
            if not with_runtime:
                row.pop("runtime_ms")
            claims.append(row)
        doc = {
            "tool_version": self.tool_version,
            "source": self.source,
            "claims": claims,
            "summary": self.summary,
        }
        return json.dumps(doc, indent=2, default=_jsonable) + "\n"

    def to_text(self) -> str:
        width = max([len(c.claim_id) for c in self.claims] + [5])
        lines = [f"monophonic {self.tool_version}  manifest: {self.source}", ""]
        lines.append(f"{'claim'.ljust(width)}  {'verdict':15}  {'ms':>8}  statement")
        for c in self.claims:
            lines.append(f"{c.claim_id.ljust(width)}  {c.verdict:15}  {c.runtime_ms:>8}  {c.statement}")
            if c.verdict != "holds" and c.witness is not None:
                lines.append(f"{''.ljust(width)}  witness: {json.dumps(c.witness, default=_jsonable)}")
        s = self.summary
        lines += ["", f"holds {s['holds']}  fails {s['fails']}  budget-exceeded {s['budget-exceeded']}"]
        return "\n".join(lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _canon(obj) -> Any:
    """JSON round trip, turning tuples into lists for comparisons."""
    return json.loads(json.dumps(obj, default=_jsonable))


class ResultCache:
    """Append-only JSON-lines store keyed by (graph digest, op, args)."""

    def __init__(self, directory: str | os.PathLike | None) -> None:
        self.path = None if directory is None else Path(directory) / CACHE_FILE
        self._data: dict[str, dict] = {}
        if self.path is not None and self.path.exists():
            for line in self.path.read_text().splitlines():
                try:
                    row = json.loads(line)
                    self._data[row["key"]] = row
                except (ValueError, KeyError):
                    continue  # a torn trailing line from an interrupted run

    @staticmethod
    def key(digest: str, op: str, args: dict) -> str:
        blob = json.dumps([digest, op, args], sort_keys=True, default=_jsonable)
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, key: str) -> dict | None:
        return self._data.get(key)

    def put(self, key: str, value: Any, witness: Any, runtime_ms: int) -> None:
        row = {"key": key, "value": value, "witness": witness, "runtime_ms": runtime_ms}
        row = _canon(row)
        self._data[key] = row
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as fh:
                fh.write(json.dumps(row) + "\n")


def default_cache_dir() -> str | None:
    return os.environ.get(CACHE_ENV)


def load_manifest(source: str | os.PathLike) -> list[dict]:
    """A manifest file, or the bundled manifest by name (``reference-claims``)."""
    if str(source) == "reference-claims":
        text = resources.files("monophonic").joinpath("data/reference_claims.json").read_text()
    else:
        text = Path(source).read_text()
    try:
        manifest = json.loads(text)
    except ValueError as exc:
        raise ConfigError(f"manifest is not valid JSON: {exc}") from None
    validate_manifest(manifest)
    return manifest


def validate_manifest(manifest: Any) -> None:
    if not isinstance(manifest, list):
        raise ConfigError("a manifest is a list of claim specs")
    seen = set()
    for spec in manifest:
        for key in ("id", "op", "expect"):
            if key not in spec:
                raise ConfigError(f"claim spec {spec} lacks {key!r}")
        if spec["op"] not in OPERATIONS:
            raise ConfigError(f"unknown operation {spec['op']!r} in claim {spec['id']}")
        if spec["id"] in seen:
            raise ConfigError(f"duplicate claim id {spec['id']!r}")
        seen.add(spec["id"])


def _evaluate(spec: dict, budget: int) -> tuple[Any, Any, str | None, int]:
    """Run one claim; returns (value, witness, graph digest, runtime_ms).
    ``value`` is the string "budget-exceeded" when the search ran out."""
    start = time.perf_counter()
    G = build_graph(spec["graph"]) if "graph" in spec else Graph(0, [])
    try:
        value, witness = OPERATIONS[spec["op"]](G, spec.get("args", {}), budget)
    except BudgetExceeded as exc:
        value, witness = "budget-exceeded", {"steps": exc.steps}
    except GraphInputError as exc:
        raise ConfigError(f"claim {spec['id']}: {exc}") from None
    return _canon(value), _canon(witness), G.digest(), int((time.perf_counter() - start) * 1000)


def _task(item: tuple[dict, int]):
    spec, budget = item
    return _evaluate(spec, budget)


def _verdict(spec: dict, value: Any, witness: Any) -> tuple[str, Any]:
    if value == "budget-exceeded":
        return "budget-exceeded", witness
    if value == _canon(spec["expect"]):
        return "holds", witness
    return "fails", {"observed": value, "detail": witness}


def run_manifest(
    manifest: list[dict],
    jobs: int = 1,
    cache_dir: str | os.PathLike | None = None,
    budget: int = DEFAULT_BUDGET,
    source: str = "<memory>",
) -> ReportDocument:
    """Evaluate every claim (in parallel across claims when ``jobs > 1``)."""
    validate_manifest(manifest)
    cache = ResultCache(cache_dir)
    keys: list[str | None] = []
    pending = []
    for idx, spec in enumerate(manifest):
        G = build_graph(spec["graph"]) if "graph" in spec else Graph(0, [])
        key = ResultCache.key(G.digest(), spec["op"], spec.get("args", {}))
        keys.append(key)
        if cache.get(key) is None:
            pending.append(idx)
    fresh: dict[int, tuple] = {}
    items = [(manifest[i], budget) for i in pending]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, res in zip(pending, pool.map(_task, items)):
                fresh[i] = res
    else:
        for i, item in zip(pending, items):
            fresh[i] = _task(item)

    report = ReportDocument(__version__, source)
    for idx, spec in enumerate(manifest):
        if idx in fresh:
            value, witness, _, ms = fresh[idx]
            if value != "budget-exceeded":
                cache.put(keys[idx], value, witness, ms)
        else:
            row = cache.get(keys[idx])
            value, witness, ms = row["value"], row["witness"], row["runtime_ms"]
        verdict, shown = _verdict(spec, value, witness)
        report.claims.append(ClaimResult(spec["id"], spec.get("statement", ""), verdict, shown, ms))
    return report

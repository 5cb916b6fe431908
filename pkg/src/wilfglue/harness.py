"""Batch campaigns: genus-tree enumeration, seeded gluing fuzzing, affine audits."""

from __future__ import annotations

import json
import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .affine import build_affine
from .affine_gluing import audit_affine_gluing, audit_triple, order_from, read_ray_spec
from .errors import GenusBoundExceeded, SemigroupError
from .gluing import GluingSpec, audit_gluing, candidate_pairs, gluing_violations
from .numerical import (
    NumericalSemigroup,
    construct,
    format_generators,
    minimize_generators,
)

MAX_GENUS = 22
MODES = ("enumerate-genus", "fuzz-gluing", "affine-audit")
_INT_KEYS = {"max_genus", "seed", "workers", "gen_bound", "kmax", "count", "per_pair", "bound"}
_STR_KEYS = {"mode", "output", "spec_file", "order", "gap_modes"}


# -- genus tree ---------------------------------------------------------------

@dataclass(frozen=True)
class _Node:
    """Semigroup as a bitmask of its elements in [0, limit]."""

    mask: int
    frobenius: int
    genus: int


def _mingens(mask: int, limit: int) -> list[int]:
    nonzero = mask & ~1
    sums = 0
    s = nonzero
    while s:
        low = s & -s
        sums |= nonzero << (low.bit_length() - 1)
        s ^= low
    full = (1 << (limit + 1)) - 1
    gens = nonzero & ~sums & full
    out = []
    while gens:
        low = gens & -gens
        out.append(low.bit_length() - 1)
        gens ^= low
    return out


def _children(node: _Node, limit: int) -> list[_Node]:
    return [_Node(node.mask & ~(1 << x), x, node.genus + 1)
            for x in _mingens(node.mask, limit) if x > node.frobenius]


def _limit(max_genus: int) -> int:
    # F <= 2g - 1 and every minimal generator is at most F + m <= 3g.
    return 3 * max_genus + 3


def _root(max_genus: int) -> _Node:
    return _Node((1 << (_limit(max_genus) + 1)) - 1, -1, 0)


def _walk(node: _Node, max_genus: int, limit: int) -> Iterator[_Node]:
    stack = [node]
    while stack:
        cur = stack.pop()
        yield cur
        if cur.genus < max_genus:
            stack.extend(reversed(_children(cur, limit)))


def _check_genus(max_genus):
    if not 0 <= max_genus <= MAX_GENUS:
        raise GenusBoundExceeded(f"max_genus must lie in [0, {MAX_GENUS}], got {max_genus}")


def enumerate_by_genus(max_genus: int) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= max_genus, each exactly once.

    Children of S are S minus one minimal generator larger than F(S).
    """
    _check_genus(max_genus)
    limit = _limit(max_genus)
    for node in _walk(_root(max_genus), max_genus, limit):
        yield construct(_mingens(node.mask, limit))


def _node_stats(node: _Node, limit: int) -> tuple:
    gens = _mingens(node.mask, limit)
    F, g = node.frobenius, node.genus
    p = len(gens)
    n = F + 1 - g if F >= 0 else 0
    t = 0
    for x in range(F + 1):
        if not node.mask >> x & 1:
            if all(x + a > limit or node.mask >> (x + a) & 1 for a in gens):
                t += 1
    t = max(t, 1)
    return gens, p, n, F, t


def _enumerate_subtree(args):
    node, max_genus = args
    limit = _limit(max_genus)
    counts = Counter()
    wilf_bad, froberg_bad = [], []
    for cur in _walk(node, max_genus, limit):
        counts[cur.genus] += 1
        gens, p, n, F, t = _node_stats(cur, limit)
        if p * n < F + 1:
            wilf_bad.append(gens)
        if (t + 1) * n < F + 1:
            froberg_bad.append(gens)
    return dict(counts), wilf_bad, froberg_bad


def _split_tree(max_genus: int, depth: int):
    """Nodes shallower than ``depth`` plus the roots of the remaining subtrees."""
    limit = _limit(max_genus)
    shallow, frontier = [], [_root(max_genus)]
    for _ in range(depth):
        nxt = []
        for node in frontier:
            shallow.append(node)
            if node.genus < max_genus:
                nxt.extend(_children(node, limit))
        frontier = nxt
    return shallow, frontier


# -- campaign plumbing --------------------------------------------------------

@dataclass
class CampaignConfig:
    mode: str
    max_genus: int = 12
    seed: int = 0
    workers: int = 1
    output: Optional[str] = None
    gen_bound: int = 60
    kmax: int = 30
    count: int = 1000
    per_pair: int = 3
    trivial_prob: float = 0.1
    spec_file: Optional[str] = None
    order: str = "graded-lex"
    gap_modes: tuple = ("paper-literal", "lattice")
    bound: Optional[int] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise SemigroupError(f"unknown campaign mode {self.mode!r}")
        if self.workers < 1:
            raise SemigroupError("workers must be at least 1")
        if isinstance(self.gap_modes, str):
            self.gap_modes = tuple(m.strip() for m in self.gap_modes.split(",") if m.strip())

    @classmethod
    def from_text(cls, text: str) -> "CampaignConfig":
        """Parse a flat ``key=value`` file; ``#`` starts a comment."""
        raw = {}
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SemigroupError(f"config line without '=': {line!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            raw[key.replace("-", "_")] = value
        kwargs = {}
        for key, value in raw.items():
            if key in _INT_KEYS:
                kwargs[key] = int(value)
            elif key == "trivial_prob":
                kwargs[key] = float(value)
            elif key in _STR_KEYS:
                kwargs[key] = value
            else:
                raise SemigroupError(f"unknown config key {key!r}")
        if "mode" not in kwargs:
            raise SemigroupError("config must set mode")
        return cls(**kwargs)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["gap_modes"] = list(self.gap_modes)
        return d


@dataclass
class CampaignReport:
    mode: str
    config: dict
    per_genus_counts: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    audit_aggregate: dict = field(default_factory=dict)
    instances: int = 0
    wall_seconds: float = 0.0

    @property
    def wilf_counterexamples(self) -> list:
        return [v for v in self.violations if v["kind"] == "wilf-counterexample"]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "mode": self.mode,
            "config": self.config,
            "per_genus_counts": self.per_genus_counts,
            "violations": self.violations,
            "audit_aggregate": self.audit_aggregate,
            "instances": self.instances,
        }
        if timing:
            d["stats"] = {
                "wall_seconds": round(self.wall_seconds, 3),
                "instances_per_second": round(self.instances / self.wall_seconds, 1)
                if self.wall_seconds > 0 else None,
            }
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=1) + "\n"


class CampaignAborted(RuntimeError):
    """A theorem-backed check failed; carries the reproduction bundle."""

    def __init__(self, bundle: dict):
        self.bundle = bundle
        super().__init__(bundle.get("reason", "campaign aborted"))


def _map(fn, items, workers):
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _run_enumeration(cfg: CampaignConfig, report: CampaignReport):
    _check_genus(cfg.max_genus)
    depth = min(cfg.max_genus, 6)
    shallow, frontier = _split_tree(cfg.max_genus, depth)
    limit = _limit(cfg.max_genus)
    # Shallow nodes are checked here; deeper ones by subtree in workers.
    results = [_enumerate_subtree_single(n, limit) for n in shallow]
    results += _map(_enumerate_subtree, [(n, cfg.max_genus) for n in frontier], cfg.workers)
    counts = Counter()
    for c, wilf_bad, froberg_bad in results:
        counts.update(c)
        for gens in wilf_bad:
            report.violations.append({
                "kind": "wilf-counterexample",
                "severity": "CONJECTURE COUNTEREXAMPLE",
                "generators": format_generators(gens),
                "argv": ["ns", "analyze", format_generators(gens), "--json"],
            })
        for gens in froberg_bad:
            report.violations.append({
                "kind": "froberg-violation",
                "severity": "artifact bug",
                "generators": format_generators(gens),
                "argv": ["ns", "analyze", format_generators(gens), "--json"],
            })
    report.violations.sort(key=lambda v: (v["kind"], v["generators"]))
    report.per_genus_counts = [counts.get(g, 0) for g in range(cfg.max_genus + 1)]
    report.instances = sum(report.per_genus_counts)


def _enumerate_subtree_single(node, limit):
    gens, p, n, F, t = _node_stats(node, limit)
    return ({node.genus: 1},
            [gens] if p * n < F + 1 else [],
            [gens] if (t + 1) * n < F + 1 else [])


# -- fuzzing ------------------------------------------------------------------

def random_generators(rng: random.Random, bound: int, trivial_prob: float = 0.0) -> list[int]:
    """Random minimal generating set inside [2, bound], coprime via a seeded pair."""
    if rng.random() < trivial_prob:
        return [1]
    while True:
        x, y = rng.randint(2, bound), rng.randint(2, bound)
        if math.gcd(x, y) == 1:
            break
    extra = [rng.randint(2, bound) for _ in range(rng.randint(0, 3))]
    return minimize_generators([x, y] + extra)


def fuzz_specs(seed: int, count: int, gen_bound: int = 60, kmax: int = 30,
               per_pair: int = 3, trivial_prob: float = 0.1) -> list[GluingSpec]:
    """Deterministic stream of ``count`` valid gluing specs."""
    rng = random.Random(seed)
    specs: list[GluingSpec] = []
    while len(specs) < count:
        A = construct(random_generators(rng, gen_bound, trivial_prob))
        B = construct(random_generators(rng, gen_bound, trivial_prob))
        pairs = candidate_pairs(A, B, kmax)
        rng.shuffle(pairs)
        taken = 0
        for k1, k2 in pairs:
            if taken == per_pair or len(specs) == count:
                break
            if not gluing_violations(A, B, k1, k2):
                specs.append(GluingSpec(A, B, k1, k2))
                taken += 1
    return specs


def _audit_chunk(specs):
    return [audit_gluing(s) for s in specs]


def _run_fuzz(cfg: CampaignConfig, report: CampaignReport):
    specs = fuzz_specs(cfg.seed, cfg.count, cfg.gen_bound, cfg.kmax,
                       cfg.per_pair, cfg.trivial_prob)
    chunk = max(1, len(specs) // (4 * cfg.workers))
    chunks = [specs[i:i + chunk] for i in range(0, len(specs), chunk)]
    audits = [a for part in _map(_audit_chunk, chunks, cfg.workers) for a in part]
    agg = Counter()
    flags = ("formula_ok", "frobenius_witness_ok", "bound_A_ok", "bound_B_ok",
             "weak_bound_A_ok", "weak_bound_B_ok", "distinct_witnesses_ok",
             "type_product_ok", "wilf_closure_ok")
    optional = ("witness_family_ii_ok", "ci_symmetric_ok", "fc_upper_ok", "p1_case_ok")
    for index, audit in enumerate(audits):
        if not audit.formula_ok:
            raise CampaignAborted(_bundle(audit, index, cfg, "Frobenius gluing formula failed"))
        for name in flags:
            agg[f"{name}:{getattr(audit, name)}"] += 1
        for name in optional:
            value = getattr(audit, name)
            agg[f"{name}:{'not-applicable' if value is None else value}"] += 1
        agg[f"wilf_C:{audit.wilf_C.wilf_holds}"] += 1
        if not audit.all_ok:
            report.violations.append(_bundle(audit, index, cfg, "audit flag failed"))
    report.audit_aggregate = dict(sorted(agg.items()))
    report.instances = len(audits)


def _bundle(audit, index, cfg, reason) -> dict:
    s = audit.spec
    return {
        "kind": "gluing-audit-failure",
        "severity": "artifact bug",
        "reason": reason,
        "instance": index,
        "seed": cfg.seed,
        "audit": audit.to_dict(),
        "argv": ["ns", "glue", "--A", str(s.A), "--B", str(s.B),
                 "--k1", str(s.k1), "--k2", str(s.k2), "--audit", "--json"],
    }


# -- affine audits ------------------------------------------------------------

def _run_affine(cfg: CampaignConfig, report: CampaignReport):
    if not cfg.spec_file:
        raise SemigroupError("affine-audit mode needs spec_file")
    entries = json.loads(Path(cfg.spec_file).read_text(encoding="utf-8"))
    if isinstance(entries, dict):
        entries = [entries]
    agg = Counter()
    results = []
    for i, entry in enumerate(entries):
        for mode in cfg.gap_modes:
            if "triple" in entry:
                t = entry["triple"]
                A, B, C = (build_affine(t[k]) for k in ("A", "B", "C"))
                order = order_from({"order": cfg.order, **entry}, A.dim)
                bound = entry.get("bound", cfg.bound) or 6 * A.dim * max(
                    order.degree(g) for g in C.generators)
                d = audit_triple(A, B, C, order, bound, mode).to_dict()
                for key in ("implication_paper", "implication_reference"):
                    agg[f"{key}:{d[key]}"] += 1
                results.append({"entry": i, "mode": mode, "kind": "triple",
                                "implication_paper": d["implication_paper"],
                                "implication_reference": d["implication_reference"]})
                continue
            spec = read_ray_spec(entry)
            order = order_from({"order": cfg.order, **entry}, spec.A.dim)
            bound = entry.get("bound", cfg.bound) or 25
            audit = audit_affine_gluing(spec, order, bound, mode)
            for claim, status in audit.claims.items():
                agg[f"{claim}:{status}"] += 1
            results.append({"entry": i, "mode": mode, "kind": "ray",
                            "claims": audit.claims})
            if audit.claims["k1FA_not_in_C"] == "refuted-exact":
                report.violations.append({
                    "kind": "exact-claim-refuted", "severity": "artifact bug",
                    "entry": i, "mode": mode, "audit": audit.to_dict()})
    report.audit_aggregate = {"claims": dict(sorted(agg.items())), "instances": results}
    report.instances = len(results)


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    """Execute one campaign; output is a deterministic function of ``cfg``.

    Raises ``CampaignAborted`` when the Frobenius gluing formula fails.
    """
    report = CampaignReport(mode=cfg.mode, config=_stable_config(cfg))
    start = time.perf_counter()
    if cfg.mode == "enumerate-genus":
        _run_enumeration(cfg, report)
    elif cfg.mode == "fuzz-gluing":
        _run_fuzz(cfg, report)
    else:
        _run_affine(cfg, report)
    report.wall_seconds = time.perf_counter() - start
    return report


def _stable_config(cfg: CampaignConfig) -> dict:
    # Worker count and output path do not influence results.
    d = cfg.to_dict()
    d.pop("workers")
    d.pop("output")
    return d

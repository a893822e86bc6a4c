"""Command-line front end.

Subcommands: alpha, matrices, witness, builder, game, check, report.  Exit
codes: 0 when every check in the run passed, 1 when a check failed (the
report carries the witness), 2 on a usage error.  Output goes to stdout as
text (default) or JSON; diagnostics, seeds and warnings go to stderr so the
JSON stream stays parseable and byte-stable.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import os
import random
import sys
from fractions import Fraction

from .additivity import AdditivityWitness, check_complete_additivity
from .algebra import ParseError, eval_term, parse_term
from .atoms import AtomSet, FiniteAtomStructure, check_atom_structure_axioms
from .builder import builder_verify, run_builder, s_sequences, trace_lines
from .errors import (BudgetExceededError, PreconditionError,
                     UnboundVariableError, UnsupportedQueryError)
from .fincof import FinCofSet
from .graphs import Graph
from .labelled import LabelledGraph, gg_membership, saturate_labelled_model
from .matrices import (ca_atoms_from_matrices, enumerate_basic_matrices,
                       is_basic_matrix)
from .partition import (PartitionAlgebra, additivity_failure_certificate,
                        concrete_partition, is_symmetric_block,
                        pa_complement, pa_leq, pa_s01, pa_transposition,
                        pa_union, pointwise_replacement01_on,
                        pointwise_transposition_on)
from .ra import RelationAtomStructure, build_alpha, check_ra_atom_structure
from .ramsey import ramsey_kernel_check
from .report import CheckReport, emit_report, exit_code, report_from_findings
from .schema import check_crpa2_schema
from .setalg import (diagonal_quotient_lift, full_set_algebra,
                     identity_representation, verify_complete_representation)
from .signature import Signature
from .vectorspace import (FiniteSupportSeq, in_y, neat_embedding_map_check,
                          singleton_recovery_check)
from .games import (UNBOUNDED, ef_decide, ef_system_equivalence_test,
                    fresh_atom_strategy_verify, product_model, square_game)

# Any sampled check runs from this seed unless --seed overrides it.
DEFAULT_SEED = 1807


class UsageError(Exception):
    """Bad flags or malformed input files; exits with code 2."""


# -- plumbing ----------------------------------------------------------------


def _print_seed(seed: int) -> None:
    print(f"seed: {seed}", file=sys.stderr)


def _jsonable(x):
    """Witness values reduced to plain JSON types, deterministically."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, AtomSet):
        return list(x.indices())
    if isinstance(x, FinCofSet):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((_jsonable(v) for v in x), key=repr)
    if hasattr(x, "to_json"):
        return _jsonable(x.to_json())
    return str(x)


def _finish(results: list[CheckReport], fmt: str) -> int:
    clean = [CheckReport(r.check, r.status, _jsonable(r.witness))
             for r in results]
    print(emit_report(clean, fmt))
    return exit_code(clean)


def _passed(check: str, info: dict) -> CheckReport:
    return CheckReport(check, "pass", info)


def _report(check: str, findings: list, info: dict) -> CheckReport:
    rep = report_from_findings(check, findings)
    return rep if findings else _passed(check, info)


# -- input parsing -----------------------------------------------------------


def _need(args, *names: str) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required for graph kind "
                             f"{args.graph!r}")


def _parse_edges(text: str) -> list[tuple[int, int]]:
    edges = []
    if not text:
        return edges
    for part in text.split(","):
        bits = part.strip().split("-")
        if len(bits) != 2:
            raise UsageError(f"bad edge {part!r}; expected like 0-1")
        try:
            edges.append((int(bits[0]), int(bits[1])))
        except ValueError:
            raise UsageError(f"bad edge {part!r}; endpoints must be integers")
    return edges


def load_graph(args) -> Graph:
    """Graph from a JSON file path or generator flags (--graph kind)."""
    selector = getattr(args, "graph", None)
    if selector is None:
        raise UsageError("--graph is required")
    looks_like_file = (selector.endswith(".json") or os.path.sep in selector
                       or os.path.exists(selector))
    if looks_like_file:
        try:
            with open(selector, encoding="utf-8") as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read graph file: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"graph file parse error at line {exc.lineno} "
                             f"column {exc.colno}: {exc.msg}")
        if not isinstance(obj, dict) or "kind" not in obj:
            raise UsageError('graph file is missing the "kind" field')
        if obj["kind"] == "explicit":
            raw = [tuple(e) for e in obj.get("edges", [])]
            norm = {(min(a, b), max(a, b)) for (a, b) in raw}
            if len(norm) < len(raw):
                print("warning: duplicate edges in graph file were "
                      "deduplicated", file=sys.stderr)
        try:
            return Graph.from_json(obj)
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"bad graph object: {exc}")

    kind = selector.replace("-", "_")
    try:
        if kind == "interval":
            _need(args, "m", "N")
            return Graph.interval(args.m, args.N)
        if kind == "clique_union":
            _need(args, "N", "blocks")
            return Graph.clique_union(args.N, args.blocks)
        if kind == "complete":
            _need(args, "m")
            return Graph.complete(args.m)
        if kind == "single":
            return Graph.edgeless(1)
        if kind == "edgeless":
            _need(args, "m")
            return Graph.edgeless(args.m)
        if kind == "explicit":
            _need(args, "m")
            raw = _parse_edges(getattr(args, "edges", None) or "")
            norm = {(min(a, b), max(a, b)) for (a, b) in raw}
            if len(norm) < len(raw):
                print("warning: duplicate edges were deduplicated",
                      file=sys.stderr)
            return Graph.explicit(args.m, raw)
    except ValueError as exc:
        raise UsageError(str(exc))
    raise UsageError(f"unknown graph kind {selector!r}; use interval, "
                     "clique-union, complete, edgeless, single, explicit "
                     "or a JSON file path")


def _parse_atom_mask(text: str, ras: RelationAtomStructure) -> int:
    mask = 0
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            a = int(part)
        except ValueError:
            raise UsageError(f"atom index {part!r} is not an integer")
        if not (0 <= a < ras.atom_count):
            raise UsageError(f"atom index {a} out of range "
                             f"(structure has {ras.atom_count} atoms)")
        mask |= 1 << a
    return mask


def _mask_labels(ras: RelationAtomStructure, mask: int) -> list[str]:
    return [ras.label(a) for a in range(ras.atom_count) if mask >> a & 1]


def _parse_components(text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip().lower()
        if part in ("unbounded", "w", "omega", "inf"):
            out.append(UNBOUNDED)
            continue
        try:
            v = int(part)
        except ValueError:
            raise UsageError(f"component supply {part!r} is neither an "
                             "integer nor 'unbounded'")
        if v < 0:
            raise UsageError("component supplies must be nonnegative")
        out.append(v)
    if not out:
        raise UsageError("at least one component supply is required")
    return out


def _random_fincof(rng: random.Random) -> FinCofSet:
    support = rng.sample(range(16), rng.randint(0, 5))
    if rng.random() < 0.5:
        return FinCofSet.cofinite(support)
    return FinCofSet.finite(support)


# -- shared check bodies ------------------------------------------------------


def _partition_closure_findings(seed: int, samples: int, universe: int,
                                dimension: int, blocks: int) -> list[dict]:
    """Symbolic closure laws on sampled elements plus the pointwise facts
    about a concrete finite partition model."""
    rng = random.Random(seed)
    alg = PartitionAlgebra(3)
    findings: list[dict] = []
    for t in range(samples):
        a = _random_fincof(rng)
        b = _random_fincof(rng)
        if alg.denotation(pa_union(a, b)) != alg.denotation(a) | alg.denotation(b):
            findings.append({"condition": "union-law", "sample": t})
        if alg.denotation(pa_complement(a)) != ~alg.denotation(a):
            findings.append({"condition": "complement-law", "sample": t})
        i, j = rng.randrange(3), rng.randrange(3)
        if pa_transposition(a, i, j) != a:
            findings.append({"condition": "transposition-not-identity",
                             "sample": t})
        expect = FinCofSet.universe() if a.is_cofinite else FinCofSet.empty()
        if pa_s01(a) != expect:
            findings.append({"condition": "replacement-case-split",
                             "sample": t})
        if not pa_leq(a, pa_union(a, b)):
            findings.append({"condition": "order-vs-union", "sample": t})

    space = list(itertools.product(range(universe), repeat=dimension))
    parts = concrete_partition(universe, dimension, blocks)
    covered: set = set()
    total = 0
    for block in parts:
        covered |= block
        total += len(block)
    if covered != set(space) or total != len(space):
        findings.append({"condition": "not-a-partition"})
    for idx, block in enumerate(parts):
        if not is_symmetric_block(block, dimension):
            findings.append({"condition": "block-not-symmetric", "block": idx})
        for i in range(dimension):
            for j in range(i + 1, dimension):
                if pointwise_transposition_on(space, block, i, j) != block:
                    findings.append({"condition": "transposition-moves-block",
                                     "block": idx, "pair": [i, j]})
        image = pointwise_replacement01_on(space, block)
        expect2 = frozenset(space) if idx == 0 else frozenset()
        if image != expect2:
            findings.append({"condition": "replacement-pointwise-mismatch",
                             "block": idx})
    return findings


def _recovery_findings(seed: int, samples: int) -> list[dict]:
    rng = random.Random(seed)
    findings: list[dict] = []
    for t in range(samples):
        entries = {i: Fraction(rng.randint(-5, 5))
                   for i in range(1, 8) if rng.random() < 0.7}
        total = sum(entries.values(), Fraction(0))
        s = FiniteSupportSeq.from_pairs([(0, total - 1)] + list(entries.items()))
        if not in_y(s):
            findings.append({"condition": "not-in-plane", "sample": t})
            continue
        if not singleton_recovery_check(s):
            findings.append({"condition": "recovery-failed", "sample": t})
        if in_y(s.replace(0, s.get(0) + 1)):
            findings.append({"condition": "plane-membership-not-sharp",
                             "sample": t})
    return findings


def _embedding_samples(seed: int, count: int, width: int) -> list[frozenset]:
    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        size = rng.randint(0, 6)
        tuples = {tuple(Fraction(rng.randint(-2, 2)) for _ in range(width))
                  for _ in range(size)}
        samples.append(frozenset(tuples))
    return samples


# -- subcommands --------------------------------------------------------------


def cmd_alpha(args) -> int:
    if args.action == "check":
        graph = load_graph(args)
        ras = build_alpha(graph, args.n)
        findings = check_ra_atom_structure(ras)
        rep = _report("alpha-structure", findings,
                      {"vertices": graph.vertex_count, "colors": args.n,
                       "atoms": ras.atom_count})
        return _finish([rep], args.format)
    if args.action == "compose":
        graph = load_graph(args)
        ras = build_alpha(graph, args.n)
        x = _parse_atom_mask(args.x, ras)
        y = _parse_atom_mask(args.y, ras)
        z = ras.compose(x, y)
        rep = _passed("alpha-compose", {
            "x": _mask_labels(ras, x),
            "y": _mask_labels(ras, y),
            "composition": _mask_labels(ras, z)})
        return _finish([rep], args.format)
    if args.action == "ramsey":
        findings = ramsey_kernel_check(args.m, args.N, args.n,
                                       max_subset=args.max_subset)
        rep = _report("ramsey-kernel", findings,
                      {"m": args.m, "step": args.N, "colors": args.n})
        return _finish([rep], args.format)
    if args.action == "saturate":
        graph = load_graph(args)
        if args.n < 1 or graph.vertex_count < 1:
            raise UsageError("saturation needs at least one colour and one "
                             "graph vertex")
        seed_model = LabelledGraph.from_label_map(graph, args.n, 2,
                                                  {(0, 1): (0, 0)})
        res = saturate_labelled_model(seed_model, args.size_bound, args.budget)
        ok, witness = gg_membership(res.graph)
        findings: list[dict] = []
        if not ok:
            findings.append({"condition": "not-admissible", "witness": witness})
        for task in res.unrealized:
            findings.append({"condition": "unrealized-demand",
                             "anchor": list(task.anchor),
                             "wanted": [list(lab) for lab in task.wanted]})
        rep = _report("labelled-saturation", findings,
                      {"nodes": res.graph.node_count,
                       "demands_processed": len(res.processed),
                       "tasks_spent": res.tasks_spent})
        return _finish([rep], args.format)
    raise UsageError(f"unknown alpha action {args.action!r}")


def cmd_matrices(args) -> int:
    graph = load_graph(args)
    ras = build_alpha(graph, args.n)
    mats = enumerate_basic_matrices(ras, args.n, budget=args.budget)
    findings: list[dict] = []
    for mat in mats:
        if not is_basic_matrix(ras, mat):
            findings.append({"condition": "enumeration-mismatch",
                             "matrix": [list(row) for row in mat.entries]})
            break
    structure = ca_atoms_from_matrices(ras, mats)
    findings.extend(check_atom_structure_axioms(structure,
                                                Signature.pea(args.n)))
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            json.dump([[list(row) for row in m.entries] for m in mats], fh)
            fh.write("\n")
    if args.structure:
        with open(args.structure, "w", encoding="utf-8") as fh:
            json.dump(structure.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    rep = _report("basic-matrices", findings,
                  {"count": len(mats), "ca_atoms": structure.atom_count})
    return _finish([rep], args.format)


def cmd_witness(args) -> int:
    if args.action == "additivity":
        cert = additivity_failure_certificate(args.n)
        outcome = check_complete_additivity("s_0^1", PartitionAlgebra(args.n))
        accepted = (isinstance(outcome, AdditivityWitness)
                    and outcome.sup == cert.sup
                    and outcome.op_of_sup == cert.op_of_sup
                    and outcome.sup_of_images == cert.sup_of_images)
        payload = cert.to_json()
        payload["accepted_by_additivity_checker"] = bool(accepted)
        rep = CheckReport("additivity-failure", "pass" if accepted else "fail",
                          payload)
        return _finish([rep], args.format)
    if args.action == "partition":
        _print_seed(args.seed)
        findings = _partition_closure_findings(args.seed, args.samples,
                                               args.universe, args.n,
                                               args.blocks)
        rep = _report("partition-family", findings,
                      {"samples": args.samples, "universe": args.universe,
                       "dimension": args.n, "blocks": args.blocks})
        return _finish([rep], args.format)
    if args.action == "recovery":
        _print_seed(args.seed)
        findings = _recovery_findings(args.seed, args.samples)
        rep = _report("singleton-recovery", findings,
                      {"samples": args.samples})
        return _finish([rep], args.format)
    if args.action == "embedding":
        _print_seed(args.seed)
        samples = _embedding_samples(args.seed, args.samples, args.n)
        findings = neat_embedding_map_check(samples, args.n, args.pad)
        rep = _report("neat-embedding", findings,
                      {"samples": len(samples), "width": args.n,
                       "pad": args.pad})
        return _finish([rep], args.format)
    raise UsageError(f"unknown witness action {args.action!r}")


def cmd_builder(args) -> int:
    if args.action == "run":
        state, records = run_builder(args.steps, args.n)
        lines = trace_lines(records)
        with open(args.trace, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
        results = [_passed("builder-run", {
            "steps": args.steps, "elements": state.step,
            "tuples": sum(len(t) for _, t in state.rels),
            "relations": len(state.rels), "trace": args.trace})]
        if args.verify:
            findings = builder_verify(state, records)
            _, records2 = run_builder(args.steps, args.n)
            if trace_lines(records2) != lines:
                findings.append({"condition": "trace-not-replayable"})
            results.append(_report("builder-invariants", findings,
                                   {"checked_steps": len(records)}))
        return _finish(results, args.format)
    if args.action == "replay":
        try:
            with open(args.trace, encoding="utf-8") as fh:
                stored = fh.read().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read trace file: {exc}")
        _, records = run_builder(args.steps, args.n)
        fresh = trace_lines(records)
        findings = []
        if stored != fresh:
            k = next((i for i, (u, v) in enumerate(zip(stored, fresh))
                      if u != v), min(len(stored), len(fresh)))
            findings.append({"condition": "trace-mismatch", "line": k,
                             "stored_lines": len(stored),
                             "fresh_lines": len(fresh)})
        rep = _report("builder-replay", findings, {"lines": len(fresh)})
        return _finish([rep], args.format)
    if args.action == "shapes":
        seqs = s_sequences(args.n, args.k)
        rep = _passed("builder-shapes", {
            "n": args.n, "k": args.k, "count": len(seqs),
            "sequences": [list(s) for s in seqs]})
        return _finish([rep], args.format)
    raise UsageError(f"unknown builder action {args.action!r}")


def cmd_game(args) -> int:
    if args.action == "ef":
        a = product_model(_parse_components(args.a))
        b = product_model(_parse_components(args.b))
        result = ef_decide(a, b, args.rounds, budget=args.budget)
        rep = _passed("game-ef", result.to_json())
        return _finish([rep], args.format)
    if args.action == "system":
        a = product_model(_parse_components(args.a))
        b = product_model(_parse_components(args.b))
        if not (a.is_finite and b.is_finite):
            raise UsageError("system comparison needs finite presentations")
        outcome = ef_system_equivalence_test(a, b, args.rounds)
        rep = CheckReport("game-system-agreement",
                          "pass" if outcome["agree"] else "fail", outcome)
        return _finish([rep], args.format)
    if args.action == "product":
        a = product_model(_parse_components(args.a))
        b = product_model(_parse_components(args.b))
        outcome = fresh_atom_strategy_verify(a, b, args.rounds)
        rep = CheckReport("game-product-strategy",
                          "pass" if outcome["ef_agrees"] else "fail", outcome)
        return _finish([rep], args.format)
    if args.action == "square":
        graph = load_graph(args)
        ras = build_alpha(graph, args.n)
        result = square_game(ras, args.clique_bound, args.rounds,
                             budget=args.budget)
        rep = _passed("game-square", result.to_json())
        return _finish([rep], args.format)
    raise UsageError(f"unknown game action {args.action!r}")


def cmd_check(args) -> int:
    if args.action == "axioms":
        try:
            with open(args.file, encoding="utf-8") as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read structure file: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"structure file parse error at line "
                             f"{exc.lineno} column {exc.colno}: {exc.msg}")
        try:
            structure = FiniteAtomStructure.from_json(obj)
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"bad structure file: {exc}")
        sig = Signature(structure.dimension,
                        structure.cyl is not None,
                        structure.diag is not None,
                        structure.transp is not None,
                        structure.repl is not None)
        findings = check_atom_structure_axioms(structure, sig)
        rep = _report("atom-structure-axioms", findings,
                      {"dimension": structure.dimension,
                       "atoms": structure.atom_count})
        return _finish([rep], args.format)
    if args.action == "schema":
        alg, _ = full_set_algebra(args.universe, 2)
        verdicts = check_crpa2_schema(alg, args.variant)
        findings = [{"i": v.i, "j": v.j, "variant": v.variant,
                     "counterexample": list(v.counterexample or ())}
                    for v in verdicts if not v.holds]
        rep = _report(f"crpa2-schema-{args.variant}", findings,
                      {"universe": args.universe,
                       "instances": len(verdicts)})
        return _finish([rep], args.format)
    if args.action == "representation":
        alg, tuples = full_set_algebra(args.universe, args.n)
        rep_ = identity_representation(alg, tuples)
        findings = verify_complete_representation(rep_, alg)
        rep = _report("complete-representation", findings,
                      {"universe": args.universe, "dimension": args.n,
                       "elements": 2 ** alg.atom_count})
        return _finish([rep], args.format)
    if args.action == "lift":
        alg, tuples = full_set_algebra(args.universe, args.n)
        base_rep = identity_representation(alg, tuples)
        try:
            lifted = diagonal_quotient_lift(base_rep, alg)
        except (PreconditionError, UnsupportedQueryError) as exc:
            rep = CheckReport("diagonal-lift", "fail", {"error": str(exc)})
            return _finish([rep], args.format)
        findings = verify_complete_representation(lifted.representation, alg,
                                                  check_diagonals=True)
        classes = len(set(lifted.class_of.values()))
        rep = _report("diagonal-lift", findings,
                      {"universe": args.universe, "dimension": args.n,
                       "point_classes": classes})
        return _finish([rep], args.format)
    if args.action == "term":
        alg, tuples = full_set_algebra(args.universe, args.n)
        try:
            term = parse_term(args.term)
        except ParseError as exc:
            raise UsageError(f"term parse error: {exc}")
        try:
            val = eval_term(alg, term)
        except UnboundVariableError as exc:
            raise UsageError(str(exc))
        rep = _passed("term-evaluation", {
            "universe": args.universe, "dimension": args.n,
            "term": args.term,
            "tuples": sorted(list(tuples[a]) for a in val.indices())})
        return _finish([rep], args.format)
    raise UsageError(f"unknown check action {args.action!r}")


def cmd_report(args) -> int:
    from . import figures

    os.makedirs(args.out, exist_ok=True)
    _print_seed(args.seed)
    results: list[CheckReport] = []
    figure_paths: list[str] = []

    cert = additivity_failure_certificate(3)
    outcome = check_complete_additivity("s_0^1", PartitionAlgebra(3))
    ok = isinstance(outcome, AdditivityWitness)
    results.append(CheckReport("additivity-failure",
                               "pass" if ok else "fail", cert.to_json()))

    results.append(_report(
        "partition-family",
        _partition_closure_findings(args.seed, 200, 4, 3, 3),
        {"samples": 200}))

    ras20 = build_alpha(Graph.interval(20, 3), 3)
    results.append(_report("alpha-structure", check_ra_atom_structure(ras20),
                           {"vertices": 20, "colors": 3,
                            "atoms": ras20.atom_count}))

    results.append(_report("ramsey-kernel", ramsey_kernel_check(30, 3, 3),
                           {"m": 30, "step": 3, "colors": 3}))

    k2 = build_alpha(Graph.complete(2), 3)
    mats = enumerate_basic_matrices(k2, 3)
    ca = ca_atoms_from_matrices(k2, mats)
    results.append(_report("basic-matrices",
                           check_atom_structure_axioms(ca, Signature.pea(3)),
                           {"count": len(mats), "ca_atoms": ca.atom_count}))
    figure_paths.append(figures.composition_heatmap(
        k2, os.path.join(args.out, "composition.png")))
    figure_paths.append(figures.matrix_census(
        k2, mats, os.path.join(args.out, "matrix_census.png")))

    agreement_findings = []
    for ca_, cb_ in (((1,), (2,)), ((2, 2), (2, 2)), ((2, 3), (3, 2)),
                     ((1, 2), (2, 1))):
        out = ef_system_equivalence_test(product_model(list(ca_)),
                                         product_model(list(cb_)), 2)
        if not out["agree"]:
            agreement_findings.append({"a": list(ca_), "b": list(cb_), **out})
    results.append(_report("game-system-agreement", agreement_findings,
                           {"pairs": 4, "rounds": 2}))

    state, records = run_builder(80, 3)
    results.append(_report("builder-invariants",
                           builder_verify(state, records),
                           {"steps": 80,
                            "tuples": sum(len(t) for _, t in state.rels)}))
    figure_paths.append(figures.builder_growth(
        records, os.path.join(args.out, "builder_growth.png")))

    results.append(_report("singleton-recovery",
                           _recovery_findings(args.seed, 50), {"samples": 50}))
    results.append(_report(
        "neat-embedding",
        neat_embedding_map_check(_embedding_samples(args.seed, 12, 3), 3, 2),
        {"samples": 12, "width": 3, "pad": 2}))

    alg, tuples = full_set_algebra(2, 3)
    rep_ = identity_representation(alg, tuples)
    results.append(_report("complete-representation",
                           verify_complete_representation(rep_, alg),
                           {"universe": 2, "dimension": 3}))
    lifted = diagonal_quotient_lift(rep_, alg)
    results.append(_report(
        "diagonal-lift",
        verify_complete_representation(lifted.representation, alg, True),
        {"universe": 2, "dimension": 3}))

    alg2, _ = full_set_algebra(2, 2)
    verdicts = check_crpa2_schema(alg2, "corrected")
    bad = [{"i": v.i, "j": v.j} for v in verdicts if not v.holds]
    results.append(_report("crpa2-schema-corrected", bad, {"universe": 2}))

    cells = []
    mono_findings = []
    ras1 = build_alpha(Graph.edgeless(1), 3)
    for bound in (3, 4, 5):
        prev = None
        for rounds in (0, 1, 2, 3):
            res = square_game(ras1, bound, rounds)
            cells.append({"rounds": rounds, "clique_bound": bound,
                          "winner": res.winner})
            if prev == "forall" and res.winner != "forall":
                mono_findings.append({"condition": "winner-not-monotone",
                                      "clique_bound": bound,
                                      "rounds": rounds})
            prev = res.winner
    results.append(_report("square-monotonicity", mono_findings,
                           {"instances": len(cells)}))
    figure_paths.append(figures.game_grid(
        cells, os.path.join(args.out, "game_grid.png")))

    csv_path = os.path.join(args.out, "report.csv")
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "status", "witness"])
        for r in results:
            writer.writerow([r.check, r.status,
                             json.dumps(_jsonable(r.witness), sort_keys=True)])
    json_path = os.path.join(args.out, "report.json")
    clean = [CheckReport(r.check, r.status, _jsonable(r.witness))
             for r in results]
    with open(json_path, "w", encoding="utf-8") as fh:
        fh.write(emit_report(clean, "json") + "\n")

    for p in figure_paths:
        print(f"figure: {p}", file=sys.stderr)
    print(f"table: {csv_path}", file=sys.stderr)
    return _finish(results, args.format)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text",
                     help="report format (default text)")
    seedp = argparse.ArgumentParser(add_help=False)
    seedp.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help=f"RNG seed (default {DEFAULT_SEED}, printed)")
    budgetp = argparse.ArgumentParser(add_help=False)
    budgetp.add_argument("--budget", type=int, default=2_000_000,
                         help="search node budget")
    graphp = argparse.ArgumentParser(add_help=False)
    graphp.add_argument("--graph", help="graph kind (interval, clique-union, "
                        "complete, edgeless, single, explicit) or JSON file")
    graphp.add_argument("--m", type=int, help="vertex count")
    graphp.add_argument("--N", type=int, help="interval width / clique size")
    graphp.add_argument("--blocks", type=int, help="clique blocks")
    graphp.add_argument("--edges", help="explicit edges, like 0-1,1-2")
    np_ = argparse.ArgumentParser(add_help=False)
    np_.add_argument("--n", type=int, default=3,
                     help="dimension / colour count (default 3)")

    parser = argparse.ArgumentParser(
        prog="baolab",
        description="Atom structures, their complex algebras, and the games "
                    "and witnesses that probe them.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_alpha = sub.add_parser("alpha", help="graph-based relation atom "
                             "structures")
    asub = p_alpha.add_subparsers(dest="action", required=True)
    asub.add_parser("check", parents=[fmt, graphp, np_],
                    help="structural laws of the colour structure")
    p_comp = asub.add_parser("compose", parents=[fmt, graphp, np_],
                             help="compose two atom sets")
    p_comp.add_argument("--x", required=True, help="atom indices, like 0,2")
    p_comp.add_argument("--y", required=True)
    p_ram = asub.add_parser("ramsey", parents=[fmt, np_],
                            help="residue kernel checks")
    p_ram.add_argument("--m", type=int, required=True)
    p_ram.add_argument("--N", type=int, required=True,
                       help="residue step count")
    p_ram.add_argument("--max-subset", type=int, default=6)
    p_sat = asub.add_parser("saturate", parents=[fmt, graphp, np_],
                            help="saturate a labelled model")
    p_sat.add_argument("--size-bound", type=int, default=400)
    p_sat.add_argument("--budget", type=int, default=400,
                       help="extension demands to process")

    p_mat = sub.add_parser("matrices", parents=[fmt, graphp, np_, budgetp],
                           help="basic matrices and their atom structure")
    p_mat.add_argument("--dump", help="write the matrix list to this file")
    p_mat.add_argument("--structure",
                       help="write the derived atom structure JSON here")

    p_wit = sub.add_parser("witness", help="symbolic and sampled witnesses")
    wsub = p_wit.add_subparsers(dest="action", required=True)
    wsub.add_parser("additivity", parents=[fmt, np_],
                    help="the replacement-operator additivity failure")
    p_part = wsub.add_parser("partition", parents=[fmt, seedp, np_],
                             help="closure laws of the block family")
    p_part.add_argument("--universe", type=int, default=4)
    p_part.add_argument("--blocks", type=int, default=3)
    p_part.add_argument("--samples", type=int, default=200)
    p_rec = wsub.add_parser("recovery", parents=[fmt, seedp],
                            help="plane witnesses pin singletons")
    p_rec.add_argument("--samples", type=int, default=100)
    p_emb = wsub.add_parser("embedding", parents=[fmt, seedp, np_],
                            help="padding map respects the operations")
    p_emb.add_argument("--samples", type=int, default=20)
    p_emb.add_argument("--pad", type=int, default=2)

    p_bld = sub.add_parser("builder", help="step-by-step model builder")
    bsub = p_bld.add_subparsers(dest="action", required=True)
    p_run = bsub.add_parser("run", parents=[fmt, np_], help="run and verify")
    p_run.add_argument("--steps", type=int, required=True)
    p_run.add_argument("--trace", default="builder_trace.jsonl")
    p_run.add_argument("--verify", action="store_true")
    p_rep = bsub.add_parser("replay", parents=[fmt, np_],
                            help="byte-compare a stored trace")
    p_rep.add_argument("--trace", required=True)
    p_rep.add_argument("--steps", type=int, required=True)
    p_shp = bsub.add_parser("shapes", parents=[fmt, np_],
                            help="list bounded weakly increasing shapes")
    p_shp.add_argument("--k", type=int, required=True)

    p_game = sub.add_parser("game", help="atom games")
    gsub = p_game.add_subparsers(dest="action", required=True)
    p_ef = gsub.add_parser("ef", parents=[fmt, budgetp],
                           help="solve the atom game")
    p_ef.add_argument("--a", required=True,
                      help="component supplies, like 2,3 or 2,unbounded")
    p_ef.add_argument("--b", required=True)
    p_ef.add_argument("--rounds", type=int, required=True)
    p_sys = gsub.add_parser("system", parents=[fmt],
                            help="game solver vs family oracle")
    p_sys.add_argument("--a", required=True)
    p_sys.add_argument("--b", required=True)
    p_sys.add_argument("--rounds", type=int, required=True)
    p_prod = gsub.add_parser("product", parents=[fmt],
                             help="component-count strategy verdict")
    p_prod.add_argument("--a", required=True)
    p_prod.add_argument("--b", required=True)
    p_prod.add_argument("--rounds", type=int, required=True)
    p_sq = gsub.add_parser("square", parents=[fmt, graphp, np_, budgetp],
                           help="bounded clique-witness game")
    p_sq.add_argument("--clique-bound", type=int, default=5)
    p_sq.add_argument("--rounds", type=int, required=True)

    p_chk = sub.add_parser("check", help="algebra-level checks")
    csub = p_chk.add_subparsers(dest="action", required=True)
    p_ax = csub.add_parser("axioms", parents=[fmt],
                           help="atom structure axioms from a JSON file")
    p_ax.add_argument("--file", required=True)
    p_sch = csub.add_parser("schema", parents=[fmt],
                            help="the dimension-2 replacement schema")
    p_sch.add_argument("--universe", type=int, required=True)
    p_sch.add_argument("--variant", choices=("literal", "corrected"),
                       default="corrected")
    p_repr = csub.add_parser("representation", parents=[fmt, np_],
                             help="identity representation completeness")
    p_repr.add_argument("--universe", type=int, required=True)
    p_lift = csub.add_parser("lift", parents=[fmt, np_],
                             help="diagonal-free rep lifted to the full "
                             "algebra")
    p_lift.add_argument("--universe", type=int, required=True)
    p_term = csub.add_parser("term", parents=[fmt, np_],
                             help="evaluate an operator term")
    p_term.add_argument("--universe", type=int, required=True)
    p_term.add_argument("--term", required=True)

    p_rpt = sub.add_parser("report", parents=[fmt, seedp],
                           help="run the check battery, write figures + CSV")
    p_rpt.add_argument("--out", default="report_out")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "alpha": cmd_alpha,
        "matrices": cmd_matrices,
        "witness": cmd_witness,
        "builder": cmd_builder,
        "game": cmd_game,
        "check": cmd_check,
        "report": cmd_report,
    }[args.cmd]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"usage error (precondition): {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        rep = CheckReport("budget", "fail",
                          {"condition": "budget-exceeded", "detail": str(exc)})
        print(emit_report([rep], getattr(args, "format", "text")))
        return 1
    except OSError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

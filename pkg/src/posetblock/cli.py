"""Command-line front end: instance files in, one JSON document out.

An instance file bundles the modulus, weight, poset, block profile and
optionally a code plus resource caps.  Every command reads one instance,
computes, and prints a single JSON document to stdout.  Errors go to
stderr as JSON and map to exit codes: 1 for validation problems, 2 for
capacity limits, 3 when `verify` finds a formula/brute mismatch.

Counts of vectors (shell counts, ball sizes, cardinalities) are emitted
as decimal strings so consumers with fixed-width integers stay safe;
small structural numbers (weights, distances, radii) stay native.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Sequence

from .blockspace import BlockSpace, LabelMap
from .codes import (
    DEFAULT_CODEWORD_CAP,
    Code,
    CodeAnalysis,
    SingletonReport,
    analyze_code,
    build_code,
)
from .distribution import (
    DEFAULT_BRUTE_CAP,
    ball_size,
    brute_distribution,
    method_counts,
    weight_distribution,
)
from .errors import (
    CapacityError,
    DomainError,
    InstanceError,
    PosetBlockError,
)
from .nrt import analyze_chain
from .poset import DEFAULT_IDEAL_CAP, Poset
from .weights import make_weight

_TOP_KEYS = {"m", "weight", "poset", "pi", "code", "caps"}
_CAP_KEYS = {"brute_cap", "ideal_cap", "codeword_cap"}


def _require_int(value: Any, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InstanceError(f"{what} must be an integer, got {value!r}")
    return value


def _require_vector(value: Any, what: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise InstanceError(f"{what} must be an array of integers")
    return tuple(_require_int(v, f"entry of {what}") for v in value)


class Instance:
    """A parsed, validated instance document.

    Holds both the canonical field values (for serialization) and the
    constructed space/code objects, so parsing alone already enforces
    every cross-field invariant.
    """

    def __init__(
        self,
        *,
        m: int,
        weight_kind: str,
        weight_table: tuple[int, ...] | None,
        poset_n: int,
        poset_kind: str | None,
        poset_covers: tuple[tuple[int, int], ...] | None,
        pi: tuple[int, ...],
        code_kind: str | None,
        code_vectors: tuple[tuple[int, ...], ...] | None,
        caps: dict[str, int],
    ):
        self.m = m
        self.weight_kind = weight_kind
        self.weight_table = weight_table
        self.poset_n = poset_n
        self.poset_kind = poset_kind
        self.poset_covers = poset_covers
        self.pi = pi
        self.code_kind = code_kind
        self.code_vectors = code_vectors
        self.caps = dict(caps)

        weight = make_weight(
            weight_kind, m, list(weight_table) if weight_table is not None else None
        )
        if poset_kind == "chain":
            poset = Poset.chain(poset_n)
        elif poset_kind == "antichain":
            poset = Poset.antichain(poset_n)
        else:
            poset = Poset.from_covers(poset_n, poset_covers or ())
        self.space = BlockSpace(m, poset, LabelMap(pi), weight)
        self.code: Code | None = None
        if code_kind is not None:
            self.code = build_code(
                self.space, code_kind, code_vectors or (), codeword_cap=self.codeword_cap
            )

    @property
    def brute_cap(self) -> int:
        return self.caps.get("brute_cap", DEFAULT_BRUTE_CAP)

    @property
    def ideal_cap(self) -> int:
        return self.caps.get("ideal_cap", DEFAULT_IDEAL_CAP)

    @property
    def codeword_cap(self) -> int:
        return self.caps.get("codeword_cap", DEFAULT_CODEWORD_CAP)

    def to_document(self) -> dict[str, Any]:
        weight: dict[str, Any] = {"kind": self.weight_kind}
        if self.weight_table is not None:
            weight["table"] = {str(a): v for a, v in enumerate(self.weight_table)}
        poset: dict[str, Any] = {"n": self.poset_n}
        if self.poset_kind is not None:
            poset["kind"] = self.poset_kind
        else:
            poset["covers"] = [list(pair) for pair in self.poset_covers or ()]
        doc: dict[str, Any] = {
            "m": self.m,
            "weight": weight,
            "poset": poset,
            "pi": list(self.pi),
        }
        if self.code_kind is not None:
            key = "words" if self.code_kind == "explicit" else "generators"
            doc["code"] = {
                "kind": self.code_kind,
                key: [list(v) for v in self.code_vectors or ()],
            }
        if self.caps:
            doc["caps"] = {k: self.caps[k] for k in sorted(self.caps)}
        return doc

    def serialize(self) -> str:
        return json.dumps(self.to_document())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Instance) and self.to_document() == other.to_document()

    def __repr__(self) -> str:
        return f"Instance(m={self.m}, n={self.poset_n}, pi={list(self.pi)})"


def parse_instance(text: str) -> Instance:
    """Parse and fully validate an instance document.

    Syntax problems raise :class:`InstanceError` with line/column; broken
    cross-field invariants raise the library's own typed errors.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(
            f"instance is not well-formed: {exc.msg}", line=exc.lineno, column=exc.colno
        ) from exc
    if not isinstance(doc, dict):
        raise InstanceError("instance must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise InstanceError(f"unknown instance keys: {sorted(unknown)}")
    for key in ("m", "weight", "poset", "pi"):
        if key not in doc:
            raise InstanceError(f"instance is missing required key {key!r}")

    m = _require_int(doc["m"], '"m"')

    weight_doc = doc["weight"]
    if not isinstance(weight_doc, dict) or "kind" not in weight_doc:
        raise InstanceError('"weight" must be an object with a "kind"')
    weight_kind = weight_doc["kind"]
    if weight_kind not in ("hamming", "lee", "custom"):
        raise InstanceError(f"unknown weight kind {weight_kind!r}")
    allowed = {"kind", "table"} if weight_kind == "custom" else {"kind"}
    if set(weight_doc) - allowed:
        raise InstanceError(f'unexpected keys in "weight": {sorted(set(weight_doc) - allowed)}')
    weight_table = None
    if weight_kind == "custom":
        table_doc = weight_doc.get("table")
        if not isinstance(table_doc, dict):
            raise InstanceError('custom weight needs a "table" object')
        expected = {str(a) for a in range(m)} if isinstance(m, int) and m >= 2 else set()
        if set(table_doc) != expected:
            raise InstanceError(
                f'custom weight table keys must be exactly "0".."{m - 1}"'
            )
        weight_table = tuple(
            _require_int(table_doc[str(a)], f"weight of {a}") for a in range(m)
        )

    poset_doc = doc["poset"]
    if not isinstance(poset_doc, dict) or "n" not in poset_doc:
        raise InstanceError('"poset" must be an object with "n"')
    poset_n = _require_int(poset_doc["n"], '"poset.n"')
    poset_kind = None
    poset_covers = None
    extra = set(poset_doc) - {"n", "kind", "covers"}
    if extra:
        raise InstanceError(f'unexpected keys in "poset": {sorted(extra)}')
    if "kind" in poset_doc and "covers" in poset_doc:
        raise InstanceError('"poset" takes either "kind" or "covers", not both')
    if "kind" in poset_doc:
        poset_kind = poset_doc["kind"]
        if poset_kind not in ("chain", "antichain"):
            raise InstanceError(f"unknown poset kind {poset_kind!r}")
    else:
        covers_doc = poset_doc.get("covers")
        if not isinstance(covers_doc, list):
            raise InstanceError('"poset.covers" must be an array of [a, b] pairs')
        pairs = []
        for item in covers_doc:
            if not isinstance(item, list) or len(item) != 2:
                raise InstanceError(f"cover {item!r} is not a pair")
            pairs.append(
                (_require_int(item[0], "cover label"), _require_int(item[1], "cover label"))
            )
        poset_covers = tuple(sorted(set(pairs)))

    pi = _require_vector(doc["pi"], '"pi"')

    code_kind = None
    code_vectors = None
    if "code" in doc:
        code_doc = doc["code"]
        if not isinstance(code_doc, dict) or "kind" not in code_doc:
            raise InstanceError('"code" must be an object with a "kind"')
        code_kind = code_doc["kind"]
        if code_kind == "explicit":
            vector_key = "words"
        elif code_kind == "linear":
            vector_key = "generators"
        else:
            raise InstanceError(f"unknown code kind {code_kind!r}")
        if set(code_doc) != {"kind", vector_key}:
            raise InstanceError(
                f'"code" of kind {code_kind!r} takes exactly the key {vector_key!r}'
            )
        vectors_doc = code_doc[vector_key]
        if not isinstance(vectors_doc, list):
            raise InstanceError(f'"code.{vector_key}" must be an array of vectors')
        code_vectors = tuple(
            _require_vector(v, f'vector in "code.{vector_key}"') for v in vectors_doc
        )

    caps: dict[str, int] = {}
    if "caps" in doc:
        caps_doc = doc["caps"]
        if not isinstance(caps_doc, dict):
            raise InstanceError('"caps" must be an object')
        unknown_caps = set(caps_doc) - _CAP_KEYS
        if unknown_caps:
            raise InstanceError(f'unknown keys in "caps": {sorted(unknown_caps)}')
        for key, value in caps_doc.items():
            cap = _require_int(value, f'"caps.{key}"')
            if cap < 1:
                raise InstanceError(f'"caps.{key}" must be positive, got {cap}')
            caps[key] = cap

    return Instance(
        m=m,
        weight_kind=weight_kind,
        weight_table=weight_table,
        poset_n=poset_n,
        poset_kind=poset_kind,
        poset_covers=poset_covers,
        pi=pi,
        code_kind=code_kind,
        code_vectors=code_vectors,
        caps=caps,
    )


# -- command handlers ----------------------------------------------------------


def _parse_cli_vector(text: str, what: str) -> tuple[int, ...]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{what} is not a valid array: {exc.msg}") from exc
    return _require_vector(value, what)


def _fraction_str(value: Fraction) -> str:
    return str(value)


def _singleton_doc(report: SingletonReport) -> dict[str, Any]:
    return {
        "metric": report.metric,
        "min_distance": report.min_distance,
        "r": report.ideal_cardinality,
        "lhs": report.max_ideal_length,
        "rhs": report.length_budget,
        "holds": report.holds,
        "is_mds": report.is_mds,
    }


def _analysis_doc(analysis: CodeAnalysis, instance: Instance) -> dict[str, Any]:
    code = analysis.code
    doc: dict[str, Any] = {
        "kind": code.kind,
        "cardinality": str(analysis.cardinality),
        "min_distances": dict(analysis.min_distances),
        "singleton": _singleton_doc(analysis.singleton["pwpi"]),
        "singleton_unweighted": _singleton_doc(analysis.singleton["ppi"]),
        "mds_interval": None,
        "distance_comparison": {
            "weighted_distance": analysis.comparison.weighted_distance,
            "unweighted_distance": analysis.comparison.unweighted_distance,
            "max_weight": analysis.comparison.max_weight,
            "holds": analysis.comparison.holds,
        },
        "mds_inheritance": {
            "weighted_mds": analysis.inheritance.weighted_mds,
            "unweighted_mds": analysis.inheritance.unweighted_mds,
            "consistent": analysis.inheritance.consistent,
        },
    }
    if analysis.mds_interval is not None:
        low, high = analysis.mds_interval
        doc["mds_interval"] = [_fraction_str(low), _fraction_str(high)]
    if code.space.poset.is_chain():
        chain = analyze_chain(code.space, code, brute_cap=instance.brute_cap)
        chain_doc: dict[str, Any] = {
            "packing_radius": chain.packing_radius_formula,
        }
        rep = chain.singleton
        assert rep is not None
        chain_doc["singleton"] = {
            "min_distance": rep.min_distance,
            "r": rep.ideal_cardinality,
            "segment": list(rep.segment),
            "lhs": rep.segment_length,
            "rhs": rep.length_budget,
            "holds": rep.holds,
            "is_mds": rep.is_mds,
            "uniform_lhs": rep.uniform_lhs,
            "uniform_rhs": None if rep.uniform_rhs is None else _fraction_str(rep.uniform_rhs),
            "uniform_holds": rep.uniform_holds,
        }
        if chain.relation is not None:
            rel = chain.relation
            chain_doc["min_distance_relation"] = {
                "weighted_distance": rel.weighted_distance,
                "unweighted_distance": rel.unweighted_distance,
                "min_nonzero_weight": rel.min_nonzero_weight,
                "predicted_distance": rel.predicted_distance,
                "agrees": rel.agrees,
                "unit_blocks": rel.unit_blocks,
            }
        else:
            chain_doc["min_distance_relation"] = None
        doc["chain"] = chain_doc
    return doc


def _cmd_weight(instance: Instance, args: argparse.Namespace) -> tuple[dict, int]:
    space = instance.space
    vec = space.vector(_parse_cli_vector(args.vector, "--vector"))
    return {"weight": space.wt(vec)}, 0


def _cmd_dist(instance: Instance, args: argparse.Namespace) -> tuple[dict, int]:
    space = instance.space
    x = space.vector(_parse_cli_vector(args.x, "--x"))
    y = space.vector(_parse_cli_vector(args.y, "--y"))
    return {"distance": space.dist(x, y)}, 0


def _cmd_distribution(instance: Instance, args: argparse.Namespace) -> tuple[dict, int]:
    dist = weight_distribution(
        instance.space,
        args.method,
        brute_cap=instance.brute_cap,
        ideal_cap=instance.ideal_cap,
    )
    if args.r is not None:
        return {"r": args.r, "count": str(dist.count(args.r))}, 0
    return {"method": dist.method, "counts": [str(c) for c in dist.counts]}, 0


def _cmd_ball(instance: Instance, args: argparse.Namespace) -> tuple[dict, int]:
    size = ball_size(
        instance.space,
        args.radius,
        brute_cap=instance.brute_cap,
        ideal_cap=instance.ideal_cap,
    )
    return {"size": str(size)}, 0


def _cmd_analyze_code(instance: Instance, args: argparse.Namespace) -> tuple[dict, int]:
    if instance.code is None:
        raise DomainError("the instance has no code to analyze")
    analysis = analyze_code(instance.code, ideal_cap=instance.ideal_cap)
    return _analysis_doc(analysis, instance), 0


def _cmd_verify(instance: Instance, args: argparse.Namespace) -> tuple[dict, int]:
    space = instance.space
    oracle = brute_distribution(space, brute_cap=instance.brute_cap)
    methods = ["general"]
    if len(set(space.pi.block_sizes)) == 1:
        methods.append("uniform")
    if space.poset.is_chain():
        methods.append("chain")
    mismatches = []
    for method in methods:
        counts, _ = method_counts(
            space, method, brute_cap=instance.brute_cap, ideal_cap=instance.ideal_cap
        )
        for r, (got, expected) in enumerate(zip(counts, oracle)):
            if got != expected:
                mismatches.append(
                    {"method": method, "r": r, "formula": str(got), "brute": str(expected)}
                )
    rng = random.Random(args.seed)
    width = space.pi.total_length
    failures = 0
    failure_samples: list[dict[str, Any]] = []

    def note(axiom: str, vectors: list[tuple[int, ...]]) -> None:
        nonlocal failures
        failures += 1
        if len(failure_samples) < 10:
            failure_samples.append({"axiom": axiom, "vectors": [list(v) for v in vectors]})

    for _ in range(args.trials):
        x = tuple(rng.randrange(space.m) for _ in range(width))
        y = tuple(rng.randrange(space.m) for _ in range(width))
        z = tuple(rng.randrange(space.m) for _ in range(width))
        d_xy = space.dist(x, y)
        if space.dist(x, x) != 0:
            note("identity", [x])
        if x != y and d_xy <= 0:
            note("positivity", [x, y])
        if d_xy != space.dist(y, x):
            note("symmetry", [x, y])
        if d_xy > space.dist(x, z) + space.dist(z, y):
            note("triangle", [x, y, z])
        if space.dist(space.add(x, z), space.add(y, z)) != d_xy:
            note("translation", [x, y, z])
    ok = not mismatches and failures == 0
    doc = {
        "radii": list(range(space.max_total_weight + 1)),
        "methods": methods,
        "mismatches": mismatches,
        "axiom_trials": args.trials,
        "axiom_failures": failures,
        "axiom_failure_samples": failure_samples,
        "seed": args.seed,
        "ok": ok,
    }
    return doc, 0 if ok else 3


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage problems as validation errors."""

    def error(self, message: str):
        raise InstanceError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="posetblock",
        description="Weighted poset block metrics: distances, distributions, code analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--instance", required=True, help="path to an instance file")
        return p

    p = add("weight", "weight of one vector")
    p.add_argument("--vector", required=True, help="JSON array of coordinates")

    p = add("dist", "distance between two vectors")
    p.add_argument("--x", required=True, help="JSON array of coordinates")
    p.add_argument("--y", required=True, help="JSON array of coordinates")

    p = add("distribution", "shell counts, full or at one weight")
    p.add_argument("--r", type=int, default=None, help="report only this weight")
    p.add_argument(
        "--method",
        choices=["auto", "general", "uniform", "chain", "brute"],
        default="auto",
    )

    p = add("ball", "number of vectors within a radius")
    p.add_argument("--radius", type=int, required=True)

    add("analyze-code", "distances, bound checks, and chain results for the code")

    p = add("verify", "cross-check every formula against brute enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)

    return parser


_HANDLERS = {
    "weight": _cmd_weight,
    "dist": _cmd_dist,
    "distribution": _cmd_distribution,
    "ball": _cmd_ball,
    "analyze-code": _cmd_analyze_code,
    "verify": _cmd_verify,
}


def _emit_error(kind: str, exc: Exception) -> None:
    doc: dict[str, Any] = {"error": kind, "type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, InstanceError):
        if exc.line is not None:
            doc["line"] = exc.line
        if exc.column is not None:
            doc["column"] = exc.column
    print(json.dumps(doc), file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        with open(args.instance, "r", encoding="utf-8") as handle:
            instance = parse_instance(handle.read())
        doc, status = _HANDLERS[args.command](instance, args)
    except CapacityError as exc:
        _emit_error("capacity", exc)
        return 2
    except PosetBlockError as exc:
        _emit_error("validation", exc)
        return 1
    except OSError as exc:
        _emit_error("validation", exc)
        return 1
    print(json.dumps(doc))
    return status


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

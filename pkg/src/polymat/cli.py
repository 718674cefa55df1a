"""Command-line front end: JSON documents in, deterministic JSON reports out.

Exit codes: 0 when the computation succeeded or the property holds, 1
when a checked property fails (the report carries the witness), 2 for
usage, schema or size-cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Any

from . import __version__
from .algebra import (
    GenericGorensteinParams,
    base_ring_generators,
    closed_inseparable_subsets,
    ehrhart_generators,
    ehrhart_gorenstein,
    generic_gorenstein_rank,
    h_star,
    hilbert_values,
    is_generic,
    is_gorenstein_hstar,
    normality_check,
)
from .constructions import (
    borel_gorenstein,
    is_transversal,
    principal_borel,
    sublattice,
    sublattice_polymatroid,
    transversal,
    transversal_presentation,
    veronese,
)
from .core import SizeCapExceeded, Verdict, as_vector, subset_elements
from .exchange import ExchangeMode, exchange_property, is_sortable, rewrite_balanced, sort_pair
from .polymatroid import (
    BaseSet,
    DiscretePolymatroid,
    RankFunction,
    VectorSet,
    base_set,
    bases,
    contract,
    discrete_polymatroid,
    downward_closure,
    is_base_set,
    is_discrete_polymatroid,
    lift,
    polymatroid_sum,
    rank_function,
    rank_function_from_values,
    truncate,
    validate_rank_function,
    vector_set,
)
from .toric import white_check

KINDS = ("vector-set", "base-set", "rank-function", "transversal", "sublattice", "borel", "params")


class SchemaError(ValueError):
    """Input document rejected; the message names the offending field."""


@dataclass(frozen=True)
class Document:
    kind: str
    value: Any


def _require(payload: dict, field: str, kind: str) -> Any:
    if field not in payload:
        raise SchemaError(f"document of kind {kind!r} is missing field {field!r}")
    return payload[field]


def _int_field(payload: dict, field: str, kind: str) -> int:
    v = _require(payload, field, kind)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"field {field!r} must be an integer, got {v!r}")
    return v


def _vector_list(payload: dict, field: str, kind: str) -> list:
    v = _require(payload, field, kind)
    if not isinstance(v, list) or not v:
        raise SchemaError(f"field {field!r} must be a nonempty list")
    return v


def parse_document(text: str | bytes) -> Document:
    """Validate a JSON document against its kind's schema."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise SchemaError("document must be a JSON object")
    kind = payload.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"field 'kind' must be one of {KINDS}, got {kind!r}")
    try:
        if kind in ("vector-set", "base-set"):
            n = _int_field(payload, "n", kind)
            vectors = _vector_list(payload, "vectors", kind)
            build = base_set if kind == "base-set" else vector_set
            return Document(kind, build((as_vector(v) for v in vectors), n))
        if kind == "rank-function":
            n = _int_field(payload, "n", kind)
            values = _require(payload, "values", kind)
            rho = rank_function_from_values(values, n)
            verdict = validate_rank_function(rho)
            if not verdict:
                raise SchemaError(f"field 'values' is not a valid rank function: {verdict.witness}")
            return Document(kind, rho)
        if kind == "transversal":
            n = _int_field(payload, "n", kind)
            family = _vector_list(payload, "family", kind)
            return Document(kind, transversal_presentation(n, family))
        if kind == "sublattice":
            n = _int_field(payload, "n", kind)
            members = _require(payload, "members", kind)
            mu_vals = _require(payload, "mu", kind)
            if not isinstance(members, list) or not isinstance(mu_vals, list):
                raise SchemaError("fields 'members' and 'mu' must be lists")
            if len(members) != len(mu_vals):
                raise SchemaError("fields 'members' and 'mu' must have equal length")
            from .core import subset_mask

            masks = [subset_mask(m, n) for m in members]
            lat = sublattice(n, masks)
            return Document(kind, (lat, dict(zip(masks, mu_vals))))
        if kind == "borel":
            return Document(kind, as_vector(_vector_list(payload, "a", kind)))
        extras = {k: v for k, v in payload.items() if k != "kind"}
        return Document(kind, extras)
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def _load(path: str) -> Document:
    try:
        with open(path, "rb") as handle:
            return parse_document(handle.read())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def _parse_vector(text: str) -> tuple:
    try:
        return as_vector(int(part) for part in text.split(","))
    except ValueError as exc:
        raise SchemaError(f"bad vector {text!r}: {exc}") from exc


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def _vectors_doc(kind: str, n: int, vectors) -> dict:
    return {"kind": kind, "n": n, "vectors": [list(v) for v in sorted(vectors)]}


def _verdict_payload(verdict: Verdict) -> dict:
    out: dict[str, Any] = {"verdict": verdict.holds}
    if verdict.witness is not None:
        out["witness"] = _jsonable(verdict.witness)
    return out


def _as_polymatroid(doc: Document) -> DiscretePolymatroid:
    if doc.kind == "vector-set":
        return discrete_polymatroid(doc.value)
    if doc.kind == "base-set":
        return discrete_polymatroid(downward_closure(VectorSet(doc.value.n, doc.value.vectors)))
    raise SchemaError(f"expected a vector-set document, got {doc.kind!r}")


def _as_base_set(doc: Document) -> BaseSet:
    if doc.kind == "base-set":
        return doc.value
    if doc.kind == "vector-set":
        return bases(discrete_polymatroid(doc.value))
    raise SchemaError(f"expected a base-set document, got {doc.kind!r}")


def _as_rank_function(doc: Document) -> RankFunction:
    if doc.kind == "rank-function":
        return doc.value
    if doc.kind in ("vector-set", "base-set"):
        return rank_function(bases(_as_polymatroid(doc)))
    raise SchemaError(f"expected a rank-function document, got {doc.kind!r}")


def _generators(which: str, doc: Document):
    if which == "base":
        return base_ring_generators(_as_base_set(doc))
    return ehrhart_generators(_as_polymatroid(doc))


# --- subcommand handlers ----------------------------------------------------


def _cmd_validate(args) -> tuple[int, dict]:
    doc = _load(args.file)
    if doc.kind == "vector-set":
        verdict = is_discrete_polymatroid(doc.value)
    elif doc.kind == "base-set":
        verdict = is_base_set(doc.value)
    elif doc.kind == "rank-function":
        verdict = validate_rank_function(doc.value)
    else:
        raise SchemaError(f"nothing to validate for kind {doc.kind!r}")
    return (0 if verdict else 1), _verdict_payload(verdict)


def _cmd_bases(args) -> tuple[int, dict]:
    P = _as_polymatroid(_load(args.file))
    B = bases(P)
    return 0, {"result": _vectors_doc("base-set", B.n, B.vectors)}


def _cmd_rank(args) -> tuple[int, dict]:
    rho = _as_rank_function(_load(args.file))
    return 0, {"result": {"kind": "rank-function", "n": rho.n, "values": list(rho.values)}}


def _cmd_exchange(args) -> tuple[int, dict]:
    verdict = exchange_property(_as_base_set(_load(args.file)), ExchangeMode(args.mode))
    payload = _verdict_payload(verdict)
    payload["mode"] = args.mode
    return (0 if verdict else 1), payload


def _cmd_sort(args) -> tuple[int, dict]:
    u, v = _parse_vector(args.u), _parse_vector(args.v)
    s, t = sort_pair(u, v)
    return 0, {"result": {"pair": [list(s), list(t)]}}


def _cmd_sortable(args) -> tuple[int, dict]:
    verdict = is_sortable(_as_base_set(_load(args.file)))
    return (0 if verdict else 1), _verdict_payload(verdict)


def _cmd_rewrite(args) -> tuple[int, dict]:
    B = _as_base_set(_load(args.file))
    seq = [_parse_vector(s) for s in args.seq]
    out, moves = rewrite_balanced(seq, B)
    return 0, {
        "result": {
            "sequence": [list(v) for v in out],
            "moves": [_jsonable(m) for m in moves],
        }
    }


def _cmd_white(args) -> tuple[int, dict]:
    verdict = white_check(
        _as_base_set(_load(args.file)),
        args.degree,
        max_base_size=args.max_base_size,
        max_degree=max(args.degree, 4),
    )
    payload = _verdict_payload(verdict)
    payload["degree"] = args.degree
    payload["label"] = "verified instance" if verdict else "candidate counterexample"
    return (0 if verdict else 1), payload


def _cmd_hilbert(args) -> tuple[int, dict]:
    gens = _generators(args.which, _load(args.file))
    return 0, {"result": {"which": args.which, "values": hilbert_values(gens, args.terms)}}


def _cmd_gorenstein(args) -> tuple[int, dict]:
    doc = _load(args.file)
    if args.method == "hstar":
        gens = _generators(args.which, doc)
        data = h_star(gens)
        verdict = is_gorenstein_hstar(gens)
        payload = {
            "verdict": verdict,
            "h_star": list(data.h_star_trimmed),
            "krull_dim": data.krull_dim,
        }
        return (0 if verdict else 1), payload
    if args.which == "ehrhart":
        delta = ehrhart_gorenstein(_as_rank_function(doc))
        return (0 if delta is not None else 1), {"verdict": delta is not None, "delta": delta}
    if doc.kind != "borel":
        raise SchemaError("the base-ring criterion method needs a borel document")
    verdict = borel_gorenstein(doc.value)
    return (0 if verdict else 1), {"verdict": verdict}


def _cmd_facets(args) -> tuple[int, dict]:
    desc = closed_inseparable_subsets(_as_rank_function(_load(args.file)))
    return 0, {
        "result": {
            "coordinate_facets": list(desc.coordinate_facets),
            "rank_facets": [
                {"subset": list(subset_elements(mask)), "rank": value}
                for mask, value in desc.rank_facets
            ],
        }
    }


def _cmd_generic(args) -> tuple[int, dict]:
    verdict = is_generic(_as_polymatroid(_load(args.file)))
    return (0 if verdict else 1), _verdict_payload(verdict)


def _cmd_is_transversal(args) -> tuple[int, dict]:
    pres = is_transversal(_as_polymatroid(_load(args.file)))
    if pres is None:
        return 1, {"verdict": False}
    return 0, {"verdict": True, "presentation": [list(s) for s in pres.subsets_as_elements()]}


def _cmd_truncate(args) -> tuple[int, dict]:
    P = truncate(_as_polymatroid(_load(args.file)), args.rank)
    return 0, {"result": _vectors_doc("vector-set", P.n, P.points)}


def _cmd_contract(args) -> tuple[int, dict]:
    P = contract(_as_polymatroid(_load(args.file)), _parse_vector(args.at))
    return 0, {"result": _vectors_doc("vector-set", P.n, P.points)}


def _cmd_lift(args) -> tuple[int, dict]:
    B = lift(_as_polymatroid(_load(args.file)))
    return 0, {"result": _vectors_doc("base-set", B.n, B.vectors)}


def _cmd_sum(args) -> tuple[int, dict]:
    parts = [_as_polymatroid(_load(path)) for path in args.files]
    P = polymatroid_sum(*parts)
    return 0, {"result": _vectors_doc("vector-set", P.n, P.points)}


def _cmd_normality(args) -> tuple[int, dict]:
    gens = _generators(args.which, _load(args.file))
    verdict = normality_check(gens, args.tmax)
    payload = _verdict_payload(verdict)
    payload["t_max"] = args.tmax
    return (0 if verdict else 1), payload


def _cmd_construct(args) -> tuple[int, dict]:
    target = args.target
    if target == "veronese":
        if args.caps is None or args.rank is None:
            caps, d = _construct_params(args, ("caps", "d"))
        else:
            caps, d = _parse_vector(args.caps), args.rank
        B = veronese(caps, d)
        return 0, {"result": _vectors_doc("base-set", B.n, B.vectors)}
    if target == "borel":
        if args.generator is None:
            raise SchemaError("construct borel needs --generator")
        S = principal_borel(_parse_vector(args.generator))
        return 0, {"result": _vectors_doc("vector-set", S.n, S.vectors)}
    if target == "generic-gorenstein":
        if args.alpha is None or args.rank is None:
            alpha, d = _construct_params(args, ("alpha", "d"))
        else:
            alpha, d = _parse_vector(args.alpha), args.rank
        rho = generic_gorenstein_rank(GenericGorensteinParams(tuple(alpha), d))
        return 0, {"result": {"kind": "rank-function", "n": rho.n, "values": list(rho.values)}}
    if target == "transversal":
        doc = _load(args.file)
        if doc.kind != "transversal":
            raise SchemaError("construct transversal needs a transversal document")
        B, rho = transversal(doc.value)
        return 0, {
            "result": {
                "base_set": _vectors_doc("base-set", B.n, B.vectors),
                "rank_function": {"kind": "rank-function", "n": rho.n, "values": list(rho.values)},
            }
        }
    if target == "sublattice":
        doc = _load(args.file)
        if doc.kind != "sublattice":
            raise SchemaError("construct sublattice needs a sublattice document")
        lat, mu = doc.value
        P = sublattice_polymatroid(lat, mu)
        return 0, {"result": _vectors_doc("vector-set", P.n, P.points)}
    raise SchemaError(f"unknown construction target {target!r}")


def _construct_params(args, fields) -> tuple:
    if args.file is None:
        raise SchemaError(f"construct {args.target} needs flags or a params document")
    doc = _load(args.file)
    if doc.kind != "params":
        raise SchemaError(f"construct {args.target} needs a params document")
    out = []
    for field in fields:
        if field not in doc.value:
            raise SchemaError(f"params document is missing field {field!r}")
        out.append(doc.value[field])
    vec, d = out
    if not isinstance(vec, list):
        raise SchemaError(f"params field {fields[0]!r} must be a list")
    if not isinstance(d, int):
        raise SchemaError("params field 'd' must be an integer")
    return as_vector(vec), d


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymat",
        description="Discrete polymatroid toolkit: validation, exchange, toric and Hilbert checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("validate", _cmd_validate, help="validate a vector set, base set or rank function")
    p.add_argument("file")
    p = add("bases", _cmd_bases, help="maximal vectors of a polymatroid")
    p.add_argument("file")
    p = add("rank", _cmd_rank, help="rank function of a base set")
    p.add_argument("file")
    p = add("exchange", _cmd_exchange, help="check an exchange property")
    p.add_argument("--mode", choices=[m.value for m in ExchangeMode], required=True)
    p.add_argument("file")
    p = add("sort", _cmd_sort, help="apply the sorting operator to a pair")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p = add("sortable", _cmd_sortable, help="closure under the sorting operator")
    p.add_argument("file")
    p = add("rewrite", _cmd_rewrite, help="balance a sequence of bases by symmetric exchanges")
    p.add_argument("--seq", action="append", required=True, help="vector, repeatable")
    p.add_argument("file")
    p = add("white", _cmd_white, help="fiber-graph connectivity in a given degree")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--max-base-size", type=int, default=64, dest="max_base_size")
    p.add_argument("file")
    p = add("hilbert", _cmd_hilbert, help="Hilbert function values")
    p.add_argument("--which", choices=["base", "ehrhart"], required=True)
    p.add_argument("--terms", type=int, default=4)
    p.add_argument("file")
    p = add("gorenstein", _cmd_gorenstein, help="Gorenstein verdicts")
    p.add_argument("--which", choices=["base", "ehrhart"], required=True)
    p.add_argument("--method", choices=["hstar", "criterion"], default="hstar")
    p.add_argument("file")
    p = add("facets", _cmd_facets, help="coordinate and rank facets")
    p.add_argument("file")
    p = add("generic", _cmd_generic, help="genericity of a polymatroid")
    p.add_argument("file")
    p = add("construct", _cmd_construct, help="build a classical family instance")
    p.add_argument(
        "target",
        choices=["veronese", "borel", "transversal", "sublattice", "generic-gorenstein"],
    )
    p.add_argument("file", nargs="?")
    p.add_argument("--caps")
    p.add_argument("--generator")
    p.add_argument("--alpha")
    p.add_argument("--rank", type=int)
    p = add("is-transversal", _cmd_is_transversal, help="search for a transversal presentation")
    p.add_argument("file")
    p = add("truncate", _cmd_truncate, help="restrict to a smaller rank")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("file")
    p = add("contract", _cmd_contract, help="contract at a point")
    p.add_argument("--at", required=True)
    p.add_argument("file")
    p = add("lift", _cmd_lift, help="append a slack coordinate")
    p.add_argument("file")
    p = add("sum", _cmd_sum, help="polymatroid sum of several inputs")
    p.add_argument("files", nargs="+")
    p = add("normality", _cmd_normality, help="degree-by-degree saturation check")
    p.add_argument("--which", choices=["base", "ehrhart"], required=True)
    p.add_argument("--tmax", type=int, default=2)
    p.add_argument("file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        code, payload = args.handler(args)
    except (SchemaError, SizeCapExceeded, ValueError) as exc:
        code, payload = 2, {"error": str(exc)}
    report = {"command": args.command, "version": __version__}
    report.update(payload)
    report["timing_ms"] = int((time.perf_counter() - started) * 1000)
    json.dump(report, sys.stdout, sort_keys=True, separators=(", ", ": "))
    sys.stdout.write("\n")
    return code


def entry() -> None:
    sys.exit(main())

"""Command-line interface.

Every invocation is turned into a request dictionary and handed to ``run``,
which returns a JSON-serializable report together with an exit code:
0 when the property holds, 3 when it fails, 2 for malformed input, 4 when a
configured cap is exceeded and 1 for any other error.  Reports echo the
request, and re-running an echoed request reproduces the report exactly.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Any, Optional, Sequence

from . import corpus
from . import valuation as val
from .decider import (DEFAULT_BUDGET, Budget, Method, classify_cyclic, enumerate_idempotents, is_local,
                      is_mathieu, is_quasi_stable, is_strong_mathieu, lemma_36_chain)
from .errors import (AlgebraMismatch, BadParameter, DimensionMismatch, MathieuError, RingMismatch, SchemaError,
                     SpecMismatch, TooLarge)
from .formats import (algebra_to_json, element_to_json, parse_algebra, parse_element, parse_subspace,
                      subspace_to_json)
from .homs import hom_preimage_subspace, make_hom, quotient_algebra
from .radical import (classify_element, cointegral_certificate, idempotent_predicates, polynomial_congruences_hold,
                      tail_span)
from .subspace import MathieuVariant, largest_theta_ideal, theta_ideal

EXIT_OK, EXIT_ERROR, EXIT_SCHEMA, EXIT_FALSE, EXIT_TOO_LARGE = 0, 1, 2, 3, 4

SCHEMA_ERRORS = (SchemaError, BadParameter, DimensionMismatch, RingMismatch, AlgebraMismatch, SpecMismatch)

COMMON_FIELDS = {"command", "max_elements", "timing"}
COMMAND_FIELDS = {
    "is-mathieu": {"algebra", "subspace", "variant", "method"},
    "is-strong": {"algebra", "subspace", "variant", "method"},
    "radical-member": {"algebra", "subspace", "element"},
    "cointegral": {"algebra", "element"},
    "idempotent": {"algebra", "element"},
    "classify": {"algebra", "element"},
    "theta-ideal": {"algebra", "element", "variant"},
    "largest-ideal": {"algebra", "subspace", "variant"},
    "idempotents": {"algebra", "subspace"},
    "quotient": {"algebra", "subspace"},
    "preimage": {"algebra", "target", "matrix", "subspace"},
    "cyclic-classify": {"algebra", "element", "variant"},
    "local": {"algebra"},
    "quasi-stable": {"algebra", "variant", "contains_one"},
    "valuation": {"action", "family", "k", "g", "h"},
    "corpus-verify": {"suites", "seed"},
}
REQUIRED = {
    "is-mathieu": {"algebra", "subspace"},
    "is-strong": {"algebra", "subspace"},
    "radical-member": {"algebra", "subspace", "element"},
    "cointegral": {"algebra", "element"},
    "idempotent": {"algebra", "element"},
    "classify": {"algebra", "element"},
    "theta-ideal": {"algebra", "element"},
    "largest-ideal": {"algebra", "subspace"},
    "idempotents": {"algebra"},
    "quotient": {"algebra", "subspace"},
    "preimage": {"algebra", "target", "matrix", "subspace"},
    "cyclic-classify": {"algebra", "element"},
    "local": {"algebra"},
    "quasi-stable": {"algebra"},
    "valuation": {"action", "family"},
    "corpus-verify": set(),
}


def validate(request: Any) -> dict:
    if not isinstance(request, dict):
        raise SchemaError("request must be a JSON object")
    command = request.get("command")
    if command not in COMMAND_FIELDS:
        raise SchemaError(f"unknown command {command!r}")
    allowed = COMMAND_FIELDS[command] | COMMON_FIELDS
    extra = set(request) - allowed
    if extra:
        raise SchemaError(f"unknown fields for {command}: {sorted(extra)}")
    missing = REQUIRED[command] - set(request)
    if missing:
        raise SchemaError(f"{command} needs {sorted(missing)}")
    if "max_elements" in request:
        m = request["max_elements"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise SchemaError("max_elements must be a positive integer")
    return request


def _budget(request: dict) -> Budget:
    if "max_elements" in request:
        return replace(DEFAULT_BUDGET, max_elements=request["max_elements"])
    return DEFAULT_BUDGET


def _fmt(x) -> str:
    return ",".join(element_to_json(x))


def _variant(request: dict) -> MathieuVariant:
    return MathieuVariant.parse(request.get("variant", "two"))


def _method(request: dict, default: Method, allowed: tuple) -> Method:
    aliases = {"idempotent": Method.IDEMPOTENT_CRITERION, "idempotent-criterion": Method.IDEMPOTENT_CRITERION,
               "brute": Method.BRUTE_FORCE, "brute-force": Method.BRUTE_FORCE, "direct": Method.DIRECT,
               "radical": Method.RADICAL_EQUALITY, "radical-equality": Method.RADICAL_EQUALITY}
    text = request.get("method")
    if text is None:
        return default
    method = aliases.get(str(text).lower())
    if method not in allowed:
        raise SchemaError(f"method {text!r} is not available here")
    return method


def _group_element(spec: val.OrderedGroupSpec, text) -> val.GroupElement:
    if isinstance(text, list):
        parts = text
    else:
        parts = [p for p in str(text).split(",") if p.strip()]
    try:
        return spec.element(tuple(int(p) for p in parts))
    except ValueError:
        raise SchemaError(f"group element must be integers, got {text!r}") from None


def _valuation(request: dict) -> tuple[dict, int]:
    family = val.parse_family(request["family"])
    if family is val.Family.LEX:
        spec = val.OrderedGroupSpec.lex(int(request.get("k", 1)))
    else:
        if "k" in request:
            raise SchemaError("k only applies to the lexicographic family")
        spec = val.OrderedGroupSpec(family)
    action = request["action"]
    out: dict = {"spec": spec.to_json()}
    if action == "verdict":
        out["strongly_simple"] = val.strongly_simple_verdict(spec)
        return out, EXIT_OK if out["strongly_simple"] else EXIT_FALSE
    if "g" not in request:
        raise SchemaError(f"valuation {action} needs g")
    g = _group_element(spec, request["g"])
    if action == "compare":
        if "h" not in request:
            raise SchemaError("valuation compare needs h")
        h = _group_element(spec, request["h"])
        out["order"] = val.group_compare(g, h).name.lower()
        return out, EXIT_OK
    if action == "dominating":
        dom, wit = val.is_dominating(g)
        out["dominating"] = dom
        out["witness"] = wit.to_json() if wit is not None else None
        return out, EXIT_OK if dom else EXIT_FALSE
    if action == "anti-archimedean":
        anti, bound = val.is_anti_archimedean(g)
        out["anti_archimedean"] = anti
        out["bound"] = bound.to_json() if bound is not None else None
        return out, EXIT_OK if anti else EXIT_FALSE
    raise SchemaError(f"unknown valuation action {action!r}")


def _matrix(text, rows: int, cols: int) -> list:
    if isinstance(text, str):
        text = text.strip()
        if text.startswith("["):
            text = json.loads(text)
        else:
            text = [r.split(",") for r in text.split(";") if r.strip()]
    if not isinstance(text, list) or len(text) != rows or any(len(r) != cols for r in text):
        raise SchemaError(f"hom matrix must be {rows} x {cols}")
    return [[str(v).strip() for v in r] for r in text]


def _dispatch(request: dict) -> tuple[dict, int]:
    command = request["command"]
    budget = _budget(request)
    if command == "valuation":
        return _valuation(request)
    if command == "corpus-verify":
        names = request.get("suites")
        if names is not None:
            unknown = set(names) - set(corpus.SUITES)
            if unknown:
                raise SchemaError(f"unknown suites {sorted(unknown)}")
        results = corpus.run_suites(names, budget, int(request.get("seed", 0)))
        ok = all(r.passed for r in results)
        return {"passed": ok, "suites": [r.to_json() for r in results]}, EXIT_OK if ok else EXIT_FALSE

    A = parse_algebra(request["algebra"])
    V = parse_subspace(A, request["subspace"]) if "subspace" in request and command != "preimage" else None
    a = parse_element(A, request["element"]) if "element" in request else None

    if command == "is-mathieu":
        method = _method(request, Method.IDEMPOTENT_CRITERION, (Method.IDEMPOTENT_CRITERION, Method.BRUTE_FORCE))
        verdict = is_mathieu(V, _variant(request), method, budget)
        return verdict.to_json(bool(request.get("timing"))), EXIT_OK if verdict.is_mathieu else EXIT_FALSE
    if command == "is-strong":
        method = _method(request, Method.DIRECT, (Method.DIRECT, Method.RADICAL_EQUALITY))
        strong = is_strong_mathieu(V, _variant(request), method, budget)
        return ({"subspace": subspace_to_json(V), "variant": _variant(request).value, "method": method.value,
                 "is_strong_mathieu": strong}, EXIT_OK if strong else EXIT_FALSE)
    if command == "radical-member":
        tail = tail_span(a)
        inside = V.contains(tail.span)
        return ({"element": _fmt(a), "in_radical": inside, "tail_start": tail.start,
                 "tail_span": subspace_to_json(tail.span)}, EXIT_OK if inside else EXIT_FALSE)
    if command == "cointegral":
        cert = cointegral_certificate(a)
        out = cert.to_json()
        out["congruences"] = polynomial_congruences_hold(cert)
        return out, EXIT_OK
    if command == "idempotent":
        cert = cointegral_certificate(a)
        return ({"element": _fmt(a), "N": cert.index, "p_of_a": ",".join(cert.to_json()["p_of_a"]),
                 "p": cert.to_json()["p"], "f": cert.to_json()["f"]}, EXIT_OK)
    if command == "classify":
        c = classify_element(a)
        preds = idempotent_predicates(a)
        out = {"element": _fmt(a), "kind": c.kind.value, "N": c.certificate.index,
               "inverse": _fmt(c.inverse) if c.inverse is not None else None,
               "idempotent": _fmt(c.idempotent) if c.idempotent is not None else None,
               "is_idempotent": preds.is_idempotent, "is_quasi_idempotent": preds.is_quasi_idempotent,
               "is_semi_idempotent": preds.is_semi_idempotent}
        return out, EXIT_OK
    if command == "theta-ideal":
        return {"element": _fmt(a), "variant": _variant(request).value,
                "theta_ideal": subspace_to_json(theta_ideal(a, _variant(request)))}, EXIT_OK
    if command == "largest-ideal":
        I = largest_theta_ideal(V, _variant(request))
        return {"subspace": subspace_to_json(V), "variant": _variant(request).value,
                "largest_ideal": subspace_to_json(I)}, EXIT_OK
    if command == "idempotents":
        found = enumerate_idempotents(A, V, budget)
        return {"count": len(found), "idempotents": [_fmt(e) for e in found]}, EXIT_OK
    if command == "quotient":
        Q, phi = quotient_algebra(A, V)
        return {"ideal": subspace_to_json(V), "quotient": algebra_to_json(Q),
                "projection": [[A.ring.format(v) for v in row] for row in phi.matrix]}, EXIT_OK
    if command == "preimage":
        B = parse_algebra(request["target"])
        W = parse_subspace(B, request["subspace"])
        phi = make_hom(A, B, _matrix(request["matrix"], B.dim, A.dim))
        pre = hom_preimage_subspace(phi, W)
        return {"surjective": phi.surjective, "preimage": subspace_to_json(pre)}, EXIT_OK
    if command == "cyclic-classify":
        rec = classify_cyclic(a, _variant(request), budget=budget)
        return ({"element": _fmt(a), "variant": _variant(request).value, "statements": list(rec.statements),
                 "chain_holds": rec.chain_holds}, EXIT_OK)
    if command == "local":
        local = is_local(A, budget)
        chain = lemma_36_chain(A, budget)
        return ({"is_local": local, "chain": list(chain.statements), "chain_holds": chain.chain_holds},
                EXIT_OK if local else EXIT_FALSE)
    if command == "quasi-stable":
        rep = is_quasi_stable(A, _variant(request), budget, bool(request.get("contains_one", False)))
        return rep.to_json(), EXIT_OK if rep.quasi_stable else EXIT_FALSE
    raise SchemaError(f"unknown command {command!r}")


def run(request: dict) -> tuple[dict, int]:
    """Execute one request; never raises for package errors."""
    echo = request
    try:
        request = validate(request)
        result, code = _dispatch(request)
    except TooLarge as exc:
        return {"request": echo, "error": {"type": "TooLarge", "message": str(exc)}}, EXIT_TOO_LARGE
    except SCHEMA_ERRORS as exc:
        return {"request": echo, "error": {"type": type(exc).__name__, "message": str(exc)}}, EXIT_SCHEMA
    except MathieuError as exc:
        return {"request": echo, "error": {"type": type(exc).__name__, "message": str(exc)}}, EXIT_ERROR
    report = {"request": request, "result": result}
    return report, code


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


# -- argparse front end ------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mathieu", description="Decide and certify Mathieu subspace properties.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *fields: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        if "algebra" in fields:
            sp.add_argument("--algebra", required=True, help="builtin name (e.g. builtin:zn12) or algebra JSON")
        if "subspace" in fields:
            sp.add_argument("--subspace", help="zero | all | trace-zero | rows 'a,b;c,d' | JSON")
        if "element" in fields:
            sp.add_argument("--element", help="coordinates, e.g. 1,0,0")
        if "variant" in fields:
            sp.add_argument("--variant", choices=["left", "right", "pre", "two"])
        if "method" in fields:
            sp.add_argument("--method")
        sp.add_argument("--max-elements", type=int, dest="max_elements")
        sp.add_argument("--json", action="store_true", help="print the full JSON report")
        sp.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-identity)")
        return sp

    add("is-mathieu", "decide the Mathieu property", "algebra", "subspace", "variant", "method")
    add("is-strong", "decide the strong Mathieu property", "algebra", "subspace", "variant", "method")
    add("radical-member", "test a in r(V)", "algebra", "subspace", "element")
    add("cointegral", "co-integrality certificate", "algebra", "element")
    add("idempotent", "the idempotent p(a) and its index", "algebra", "element")
    add("classify", "nilpotent / unit / neither", "algebra", "element")
    add("theta-ideal", "the theta-ideal generated by an element", "algebra", "element", "variant")
    add("largest-ideal", "largest theta-ideal inside a subspace", "algebra", "subspace", "variant")
    add("idempotents", "list idempotents", "algebra", "subspace")
    add("quotient", "quotient by a two-sided ideal", "algebra", "subspace")
    pre = add("preimage", "preimage of a subspace under a homomorphism", "algebra", "subspace")
    pre.add_argument("--target", required=True)
    pre.add_argument("--matrix", required=True, help="target.dim x source.dim rows 'a,b;c,d' or JSON")
    add("cyclic-classify", "statements about the cyclic submodule Ra", "algebra", "element", "variant")
    add("local", "locality and its implication chain", "algebra")
    qs = add("quasi-stable", "exhaustive quasi-stability check", "algebra", "variant")
    qs.add_argument("--contains-one", action="store_true", dest="contains_one",
                    help="check the submodules containing 1 instead of those avoiding it")

    v = sub.add_parser("valuation", help="value-group predicates")
    v.add_argument("action", choices=["compare", "dominating", "anti-archimedean", "verdict"])
    v.add_argument("--family", required=True, help="Z | lex | Z[t]")
    v.add_argument("--k", type=int)
    v.add_argument("--g")
    v.add_argument("--h")
    v.add_argument("--json", action="store_true")

    c = sub.add_parser("corpus-verify", help="run the invariant suites on the fixed corpus")
    c.add_argument("--suite", action="append", dest="suites", choices=sorted(corpus.SUITES))
    c.add_argument("--seed", type=int)
    c.add_argument("--max-elements", type=int, dest="max_elements")
    c.add_argument("--json", action="store_true")

    r = sub.add_parser("replay", help="re-run the request echoed in a saved JSON report")
    r.add_argument("report", help="path to a report written with --json")
    r.add_argument("--json", action="store_true")
    return p


def request_from_args(args: argparse.Namespace) -> dict:
    skip = {"json"}
    req = {}
    for key, value in vars(args).items():
        if key in skip or value is None or value is False:
            continue
        req[key] = value
    return req


def _summary(report: dict) -> str:
    if "error" in report:
        return f"error ({report['error']['type']}): {report['error']['message']}"
    lines = []
    for key, value in sorted(report["result"].items()):
        lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "replay":
        with open(args.report, encoding="utf-8") as fh:
            text = fh.read()
        saved = json.loads(text)
        report, code = run(saved.get("request"))
        identical = dumps(report) == text.rstrip("\n")
        out = {"identical": identical, "exit_code": code}
        print(dumps(out) if args.json else f"identical: {json.dumps(identical)}")
        return EXIT_OK if identical else EXIT_FALSE
    report, code = run(request_from_args(args))
    print(dumps(report) if args.json else _summary(report))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""``conelab`` command line.

Each command reads one JSON document, prints a text table or a canonical
JSON report (inputs embedded by value), and exits with 0 for definite
answers, 3 for inconclusive or not-found searches, 2 for invalid input and
1 when ``--verify`` finds a mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import frobenius as fr
from .cone import dual, lineality
from .io import (
    SchemaError,
    cone_from_doc,
    cone_to_doc,
    dumps,
    element_from_doc,
    element_to_doc,
    encode_vec,
    monoid_from_doc,
    valuation_from_doc,
    witness_from_doc,
    witness_to_doc,
)
from .grval import NonInjective, graded_ring_presentation, gr_is_finitely_generated_if_SFR
from .monoid import hilbert_basis, is_normal

COMMANDS = ("cone-analyze", "cone-dual", "hilbert", "freg-check", "freg-minimal-e",
            "freg-witness", "freg-synth", "freg-verdict", "grval")

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _vecs(vs):
    return [encode_vec(v) for v in vs]


def _param(args, doc, key, flag):
    val = getattr(args, flag)
    return doc.get(key) if val is None else val


def _prime(args, doc, *keys):
    p = args.p
    for k in keys:
        if p is None:
            p = doc.get(k)
    if p is None:
        raise InputError("a prime is required (--p or a 'p' key)")
    try:
        return fr.check_prime(p)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _alpha(args, doc, c, required=True):
    a = _param(args, doc, "alpha", "alpha")
    if a is None:
        if required:
            raise InputError("alpha is required (--alpha or an 'alpha' key)")
        a = fr.interior_lattice_point(c)
        if a is None:
            raise InputError("no interior lattice point found; pass --alpha")
    if not isinstance(a, (list, tuple)) or any(isinstance(t, bool) or not isinstance(t, int) for t in a):
        raise InputError(f"alpha must be an integer vector, got {a!r}")
    return tuple(a)


def _power_transcript(p, e, m):
    lo = f"{p}^{e - 1} = {p ** (e - 1)} <= {m}" if m >= 1 else f"{m} < 1"
    return f"{lo} < {p}^{e} = {p ** e}"


# -- commands -----------------------------------------------------------------

def cmd_cone_analyze(args, doc):
    c = cone_from_doc(doc)
    res = {
        "is_rational": c.is_rational,
        "is_closed": c.is_closed,
        "dim": c.dim,
        "is_full_dimensional": c.is_full_dimensional,
        "is_pointed": c.is_pointed,
        "lineality": _vecs(lineality(c)),
        "rays": _vecs(c.rays),
        "facets": _vecs(c.facets),
        "equations": _vecs(c.equations),
        "strict_normals": _vecs([h.normal for h in (c.given_inequalities or ()) if h.strict]),
    }
    return res, EXIT_OK


def cmd_cone_dual(args, doc):
    c = cone_from_doc(doc)
    dc = dual(c)
    return {"dual": cone_to_doc(dc)}, EXIT_OK


def cmd_hilbert(args, doc):
    if "monoid_generators" in doc:
        s = monoid_from_doc(doc)
        nr = is_normal(s)
        return {
            "group_basis": _vecs(s.group_basis),
            "hilbert_basis": _vecs(s.hilbert_basis),
            "normal": nr.normal,
            "witness": None if nr.witness is None else list(nr.witness),
        }, EXIT_OK
    c = cone_from_doc(doc)
    return {"hilbert_basis": _vecs(hilbert_basis(c))}, EXIT_OK


def _profile_doc(prof):
    return [{"normal": encode_vec(f), "value": v} for f, v in prof.values]


def cmd_freg_check(args, doc):
    c = cone_from_doc(doc)
    p = _prime(args, doc, "p")
    alpha = _alpha(args, doc, c)
    e = _param(args, doc, "e", "e")
    if e is None:
        raise InputError("e is required (--e or an 'e' key)")
    holds = fr.splitting_condition(c, alpha, e, p)
    prof = fr.facet_profile(c, alpha)
    pts = fr.enumerate_M_alpha_e(c, alpha, e, p, args.box)
    outside = [list(g) for g in pts if not c.contains(g)]
    if holds and outside:
        raise AssertionError(f"criterion holds but the box oracle found {outside[0]}")
    m = prof.max_value
    cmp = "<" if holds else ">="
    return {
        "condition": holds,
        "facet_profile": _profile_doc(prof),
        "transcript": f"max phi(alpha) = {m} {cmp} {p}^{e} = {p ** e}",
        "oracle_outside_point": outside[0] if outside else None,
    }, EXIT_OK


def cmd_freg_minimal_e(args, doc):
    c = cone_from_doc(doc)
    p = _prime(args, doc, "p")
    alpha = _alpha(args, doc, c)
    e = fr.minimal_split_e(c, alpha, p)
    prof = fr.facet_profile(c, alpha)
    return {
        "minimal_e": e,
        "facet_profile": _profile_doc(prof),
        "transcript": _power_transcript(p, e, prof.max_value),
    }, EXIT_OK


def cmd_freg_witness(args, doc):
    c = cone_from_doc(doc)
    p = _prime(args, doc, "p")
    alpha = _alpha(args, doc, c, required=False)
    e = _param(args, doc, "e", "e")
    if e is None:
        raise InputError("e is required (--e or an 'e' key)")
    try:
        w = fr.witness_violation(c, alpha, e, p, args.box)
    except fr.WitnessNotFound as exc:
        return {"witness": None, "alpha": list(alpha), "reason": str(exc)}, EXIT_INCONCLUSIVE
    return {"witness": witness_to_doc(w), "verified": fr.verify_witness(c, w)}, EXIT_OK


def cmd_freg_synth(args, doc):
    c = cone_from_doc(doc)
    if "element" not in doc:
        raise InputError("freg-synth needs an 'element' key")
    y = element_from_doc(doc["element"], args.p)
    p = _prime(args, doc["element"], "p")
    if y.p != p:
        raise InputError("--p does not match the element's characteristic")
    r = fr.synthesize_splitting(c, y, p)
    d = r.descriptor
    return {
        "descriptor": {"e": d.e, "alpha": list(d.alpha), "p": d.p},
        "leading_coefficient": r.leading_coefficient,
        "scalar": r.scalar,
        "image": element_to_doc(r.image),
        "transcript": f"pi[-alpha](F^{d.e}_*({r.scalar} * y)) = {r.image}",
    }, EXIT_OK


def _verdict_doc(v: fr.Verdict):
    out = {"verdict": v.status, "p": v.p, "reason": v.reason}
    if v.table:
        out["table"] = [{"beta": list(b), "e": e, "max_facet_value": m,
                         "transcript": _power_transcript(v.p, e, m)} for b, e, m in v.table]
        out["facets"] = _vecs(v.facets)
        out["lattice_basis"] = _vecs(v.lattice_basis)
    if v.alpha is not None:
        out["alpha"] = list(v.alpha)
    if v.alpha_e is not None:
        out["alpha_e"] = v.alpha_e
    if v.witnesses:
        out["witnesses"] = [witness_to_doc(w) for w in v.witnesses]
    return out


def cmd_freg_verdict(args, doc):
    c = cone_from_doc(doc)
    p = _prime(args, doc, "p")
    v = fr.is_split_F_regular(c, p, args.emax, args.box)
    code = EXIT_INCONCLUSIVE if v.status == "inconclusive" else EXIT_OK
    return _verdict_doc(v), code


def cmd_grval(args, doc):
    v = valuation_from_doc(doc)
    p = _prime(args, doc, "prime", "p")
    try:
        pres = graded_ring_presentation(v)
    except NonInjective as exc:
        raise InputError(str(exc)) from exc
    g = gr_is_finitely_generated_if_SFR(v, p)
    out = {
        "value_monoid": _vecs(pres.generators),
        "group_rank": pres.group_rank,
        "presentation": pres.note,
        "verdict": g.status,
        "generators": _vecs(g.generators),
        "witness": None if g.witness is None else list(g.witness),
    }
    code = EXIT_INCONCLUSIVE if g.status == "inconclusive" else EXIT_OK
    return out, code


HANDLERS = {
    "cone-analyze": cmd_cone_analyze,
    "cone-dual": cmd_cone_dual,
    "hilbert": cmd_hilbert,
    "freg-check": cmd_freg_check,
    "freg-minimal-e": cmd_freg_minimal_e,
    "freg-witness": cmd_freg_witness,
    "freg-synth": cmd_freg_synth,
    "freg-verdict": cmd_freg_verdict,
    "grval": cmd_grval,
}


# -- driver -------------------------------------------------------------------

def _params(args):
    return {"p": args.p, "e_max": args.emax, "box": args.box, "e": args.e,
            "alpha": None if args.alpha is None else list(args.alpha)}


def build_report(command, doc, args):
    result, code = HANDLERS[command](args, doc)
    report = {"command": command, "input": doc, "params": _params(args), "result": result}
    return report, code


def _text(report) -> str:
    lines = [f"command: {report['command']}"]
    res = report["result"]
    for key in sorted(res):
        val = res[key]
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{key}:")
            for item in val:
                lines.append("  " + ", ".join(f"{k}={json.dumps(item[k])}" for k in sorted(item)))
        else:
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
    text = "\n".join(lines) + "\n"
    return (text.replace("facet_profile", "phi(alpha) per facet of sigma")
            .replace("oracle_outside_point", "M[alpha,e] point outside sigma"))


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _alpha_arg(s):
    try:
        v = json.loads(s)
    except json.JSONDecodeError:
        raise argparse.ArgumentTypeError(f"alpha must be a JSON list, got {s!r}")
    if not isinstance(v, list):
        raise argparse.ArgumentTypeError("alpha must be a JSON list")
    return tuple(v)


def _nonneg(s):
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def make_parser():
    ap = argparse.ArgumentParser(prog="conelab", description="Exact cones, monoids and Frobenius splittings.")
    ap.add_argument("command", nargs="?", choices=COMMANDS)
    ap.add_argument("--input", metavar="PATH")
    ap.add_argument("--p", type=int)
    ap.add_argument("--emax", type=_nonneg, default=8)
    ap.add_argument("--box", type=_nonneg, default=12)
    ap.add_argument("--e", type=int)
    ap.add_argument("--alpha", type=_alpha_arg)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--verify", metavar="PATH", help="re-check a JSON report")
    return ap


def _args_from_params(ap, params):
    argv = []
    for key, flag in (("p", "--p"), ("e_max", "--emax"), ("box", "--box"), ("e", "--e")):
        if params.get(key) is not None:
            argv += [flag, str(params[key])]
    if params.get("alpha") is not None:
        argv += ["--alpha", json.dumps(params["alpha"])]
    return ap.parse_args(argv)


def verify_report(report, ap) -> list[str]:
    """Re-run a report and re-check every witness; returns the problems found."""
    problems = []
    cmd = report.get("command")
    if cmd not in HANDLERS:
        raise InputError(f"unknown command {cmd!r} in report")
    args = _args_from_params(ap, report.get("params", {}))
    fresh, _ = build_report(cmd, report["input"], args)
    if dumps(fresh) != dumps(report):
        problems.append("re-run does not reproduce the report")
    res = report.get("result", {})
    wits = list(res.get("witnesses", []))
    if res.get("witness") and isinstance(res["witness"], dict):
        wits.append(res["witness"])
    if wits:
        c = cone_from_doc(report["input"])
        for wd in wits:
            w = witness_from_doc(wd)
            if not fr.verify_witness(c, w):
                problems.append(f"witness beta={list(w.beta)} e={w.e} does not verify")
    return problems


def run(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        if args.verify:
            problems = verify_report(_load(args.verify), ap)
            for msg in problems:
                print(msg, file=sys.stderr)
            print("verified" if not problems else "verification failed")
            return EXIT_MISMATCH if problems else EXIT_OK
        if args.command is None:
            raise InputError("a command is required")
        if args.input is None:
            raise InputError("--input is required")
        doc = _load(args.input)
        if not isinstance(doc, dict):
            raise InputError("the input document must be a JSON object")
        report, code = build_report(args.command, doc, args)
    except (InputError, SchemaError, NonInjective, fr.ZeroElement, fr.SupportOutsideCone) as exc:
        print(f"conelab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, TypeError) as exc:
        print(f"conelab: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(dumps(report) if args.format == "json" else _text(report))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

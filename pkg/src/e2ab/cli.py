"""Command-line front end.

Every command builds a report ``{"schema": 1, "command", "input", "results",
"verdicts", "timing_s"}`` and prints it either as JSON or as ``key: value``
text lines that :func:`parse_text_report` reads back into the same dict.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Callable, Sequence

from .abelian import AbelianGroup
from .corpus import negative_m_table
from .e2group import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    abelianization,
    beta_map,
    count_sl2,
    generate_e2,
)
from .formulas import (
    EXCEPTIONAL_D,
    exceptional_symbol,
    fundamental_unit,
    od_ab,
    od_ab_as_stated,
    od_m_oracle,
    od_refined_ab,
    pslinv_ab,
    zinv_ab,
)
from .matrices import identity
from .msubgroup import local_formula, m_subgroup, n_subgroup
from .quadratic import QuadraticOrder
from .rings import is_local
from .ringspec import ParseError, parse_ring_spec
from .steinberg import am_image, parse_word, theta_eval
from .verify import AGREE, DISAGREE, NOT_APPLICABLE, SUITES, run_suite, verdict

__all__ = ["main", "build_parser", "render_text", "parse_text_report", "SCHEMA"]

SCHEMA = 1

EXIT_OK, EXIT_DISAGREE, EXIT_PARSE, EXIT_CAP, EXIT_INVALID = 0, 1, 2, 3, 4


class InvalidArgument(ValueError):
    pass


def _group(g: AbelianGroup | None) -> dict | None:
    return None if g is None else g.to_dict()


# -- commands ---------------------------------------------------------------
def cmd_abelianization(args) -> tuple[dict, dict, dict]:
    R = parse_ring_spec(args.spec)
    M, N = m_subgroup(R), n_subgroup(R)
    info = is_local(R)
    lf = local_formula(R) if info.is_local else None
    results = {
        "ring": str(R),
        "size": R.size,
        "local": info.is_local,
        "a_mod_m": _group(M.quotient()),
        "a_mod_n": _group(N.quotient()),
        "local_formula": _group(lf),
        "e2_ab": None,
        "e2_order": None,
        "e2_equals_sl2": None,
        "beta_surjective": None,
        "beta_kernel": None,
    }
    verdicts = {}
    if info.is_local:
        verdicts["A/M vs local formula"] = verdict(M.quotient() == lf)
    if args.no_bruteforce:
        verdicts["A/M vs E2^ab"] = NOT_APPLICABLE
        return {"ring": args.spec, "cap": args.cap, "bruteforce": False}, results, verdicts
    G = generate_e2(R, args.cap)
    ab = abelianization(G)
    beta = beta_map(R, group=G, ab=ab, msub=M)
    results.update(
        e2_ab=_group(beta.e2_ab),
        e2_order=len(G),
        e2_equals_sl2=len(G) == count_sl2(R),
        beta_surjective=beta.surjective,
        beta_kernel=_group(beta.kernel),
    )
    verdicts["beta surjective"] = verdict(beta.surjective)
    verdicts["A/M vs E2^ab"] = verdict(beta.bijective)
    verdicts["N maps to 0"] = verdict(all(beta.images[n] == beta.images[0] for n in N.elements))
    if info.is_local:
        verdicts["E2^ab vs local formula"] = verdict(beta.e2_ab == lf)
    return {"ring": args.spec, "cap": args.cap, "bruteforce": True}, results, verdicts


def _table_command(fn: Callable[[int], AbelianGroup]):
    def run(args):
        try:
            g = fn(args.m)
        except ValueError as exc:
            raise InvalidArgument(str(exc)) from None
        results = {"m": args.m, "group": _group(g)}
        return {"m": args.m}, results, {"closed form": NOT_APPLICABLE}

    return run


def cmd_quad(args) -> tuple[dict, dict, dict]:
    d = args.d
    try:
        QuadraticOrder(d)
    except ValueError as exc:
        raise InvalidArgument(str(exc)) from None
    oracle = od_m_oracle(d)
    results: dict = {"d": d, "oracle": _group(oracle)}
    verdicts = {}
    if d < 0:
        results["table"] = _group(od_ab(d))
        m_table = AbelianGroup.parse(negative_m_table(d))
        verdicts["oracle vs M table"] = verdict(oracle == m_table)
        if d in EXCEPTIONAL_D:
            label, image = exceptional_symbol(d)
            refined = od_refined_ab(d)
            results.update(symbol=label, symbol_image=list(image.coords), refined=_group(refined))
            verdicts["refined vs table"] = verdict(refined == od_ab(d))
        else:
            verdicts["oracle vs table"] = verdict(oracle == od_ab(d))
    else:
        u = fundamental_unit(d)
        formula = od_ab(d)
        stated = od_ab_as_stated(d, u)
        results.update(
            unit={"a": u.a, "b": u.b, "norm": u.norm},
            formula=_group(formula),
            as_stated=_group(stated),
            as_stated_discrepancy=stated != oracle,
            upper_bound=True,
        )
        verdicts["formula vs oracle"] = verdict(formula == oracle)
    return {"d": d}, results, verdicts


def cmd_word(args) -> tuple[dict, dict, dict]:
    R = parse_ring_spec(args.spec)
    try:
        word = parse_word(args.word, R)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise InvalidArgument(str(exc)) from None
    mat = theta_eval(word, R)
    img = am_image(word, R)
    results = {
        "ring": str(R),
        "letters": len(word),
        "theta": [[str(x) for x in row] for row in mat.rows()],
        "in_ker_theta": mat == identity(R),
        "am_value": str(img.value),
        "am_class": str(img.representative),
        "am_is_zero": img.is_zero(),
        "a_mod_m": _group(img.subgroup.quotient()),
    }
    return {"ring": args.spec, "word": args.word}, results, {}


def cmd_verify(args) -> tuple[dict, dict, dict]:
    lo, hi = args.d_range
    checks = run_suite(args.suite, d_range=(lo, hi), cap=args.cap, seed=args.seed,
                       bruteforce=not args.no_bruteforce)
    results = {
        "suite": args.suite,
        "checks": [c.to_dict() for c in checks],
        "passed": sum(c.verdict == AGREE for c in checks),
        "failed": sum(c.verdict == DISAGREE for c in checks),
        "skipped": sum(c.verdict == NOT_APPLICABLE for c in checks),
    }
    verdicts = {c.name: c.verdict for c in checks}
    inp = {"suite": args.suite, "d_range": [lo, hi], "seed": args.seed, "cap": args.cap,
           "bruteforce": not args.no_bruteforce}
    return inp, results, verdicts


# -- text rendering ---------------------------------------------------------
_GROUP_TAG = " (group)"
_BARE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_COMPONENT = re.compile(r'[A-Za-z_][A-Za-z0-9_]*|"(?:[^"\\]|\\.)*"')


def _is_group_dict(v) -> bool:
    return isinstance(v, dict) and set(v) == {"free_rank", "torsion"}


def _component(k: str) -> str:
    return k if _BARE.fullmatch(k) else json.dumps(k, ensure_ascii=False)


def _flatten(path: str, value, out: list[str]):
    if _is_group_dict(value):
        out.append(f"{path}{_GROUP_TAG}: {AbelianGroup.from_dict(value)}")
    elif isinstance(value, dict) and value:
        for k, v in value.items():
            _flatten(f"{path}.{_component(k)}", v, out)
    else:
        out.append(f"{path}: {json.dumps(value, ensure_ascii=False)}")


def render_text(report: dict) -> str:
    """One ``path: value`` line per leaf; groups print as ``Z x Z/12``."""
    lines: list[str] = []
    for key, value in report.items():
        _flatten(key, value, lines)
    return "\n".join(lines)


def _parse_path(line: str) -> tuple[list[str], str]:
    parts, pos = [], 0
    while True:
        m = _COMPONENT.match(line, pos)
        if not m:
            raise ValueError(f"malformed report line {line!r}")
        tok = m.group()
        parts.append(json.loads(tok) if tok.startswith('"') else tok)
        pos = m.end()
        if line.startswith(".", pos):
            pos += 1
            continue
        return parts, line[pos:]


def parse_text_report(text: str) -> dict:
    """Inverse of :func:`render_text`."""
    report: dict = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        parts, rest = _parse_path(line)
        if rest.startswith(_GROUP_TAG + ": "):
            value = AbelianGroup.parse(rest[len(_GROUP_TAG) + 2:]).to_dict()
        elif rest.startswith(": "):
            value = json.loads(rest[2:])
        else:
            raise ValueError(f"malformed report line {line!r}")
        node = report
        for p in parts[:-1]:
            node = node.setdefault(p, {})
        node[parts[-1]] = value
    return report


# -- argument parsing -------------------------------------------------------
def _d_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on |E_2|")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--no-bruteforce", action="store_true", help="closed forms only")
    common.add_argument("--d-range", type=_d_range, default=(2, 200), metavar="LO:HI",
                        help="range of d for sweeps")

    p = argparse.ArgumentParser(prog="e2ab", description="Abelianizations of E_2 over commutative rings.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("abelianization", parents=[common], help="A/M, A/N and brute-force E_2^ab")
    s.add_argument("spec", help="ring spec, e.g. 'Z/12' or 'Z/2[x]/(x^2)'")
    s.set_defaults(run=cmd_abelianization)
    for name, fn in (("zinv", zinv_ab), ("pslinv", pslinv_ab)):
        s = sub.add_parser(name, parents=[common], help=f"{name} table value for square-free m")
        s.add_argument("m", type=int)
        s.set_defaults(run=_table_command(fn))
    s = sub.add_parser("quad", parents=[common], help="quadratic integer ring O_d")
    s.add_argument("d", type=int)
    s.set_defaults(run=cmd_quad)
    s = sub.add_parser("word", parents=[common], help="evaluate a Steinberg word")
    s.add_argument("spec")
    s.add_argument("word")
    s.set_defaults(run=cmd_word)
    s = sub.add_parser("verify", parents=[common], help="run a check suite")
    s.add_argument("suite", choices=[*SUITES, "all"])
    s.set_defaults(run=cmd_verify)
    return p


def _error_report(command: str, kind: str, message: str) -> dict:
    return {"schema": SCHEMA, "command": command, "error": {"kind": kind, "message": message}}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        inp, results, verdicts = args.run(args)
    except ParseError as exc:
        return _fail(args, "parse", str(exc), EXIT_PARSE)
    except EnumerationCapExceeded as exc:
        return _fail(args, "cap", str(exc), EXIT_CAP)
    except InvalidArgument as exc:
        return _fail(args, "invalid", str(exc), EXIT_INVALID)
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "input": inp,
        "results": results,
        "verdicts": verdicts,
        "timing_s": round(time.perf_counter() - start, 6),
    }
    print(json.dumps(report, indent=2) if args.json else render_text(report))
    if any(v == DISAGREE for v in verdicts.values()):
        first = next(k for k, v in verdicts.items() if v == DISAGREE)
        detail = ""
        if args.command == "verify":
            detail = next(c["detail"] for c in results["checks"] if c["name"] == first)
        print(f"first failure: {first} {detail}".rstrip(), file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _fail(args, kind: str, message: str, code: int) -> int:
    if args.json:
        print(json.dumps(_error_report(args.command, kind, message), indent=2))
    print(f"error ({kind}): {message}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command line front end.

    levintype accelerate --problem ln2 --family S --variant d --kmax 10
    levintype predict --problem exp --terms 3 --family L --variant d --k 1
    levintype compare --problem ln2 --family S --variant d --baseline epsilon
    levintype list-problems

Exit codes: 1 configuration error, 2 input error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import corpus, engine, rational, richardson
from . import schedules as sch
from .estimates import EstimateError, estimator_named, explicit_omega
from .numeric import Field, SingularError, field_named
from .schedules import ScheduleError, WindowError
from .sequence import Sequence

LEVIN_FAMILIES = ("G", "L", "S", "M", "C")
RICHARDSON_FAMILIES = ("lambda", "F", "P", "RC")
FAMILIES = LEVIN_FAMILIES + RICHARDSON_FAMILIES + ("epsilon",)
LOOKAHEAD = {"u": 0, "t": 0, "d": 1, "v": 1, "explicit": 0}


class ConfigError(Exception):
    code = 1


class InputError(Exception):
    code = 2


class NumericalError(Exception):
    code = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- input -------------------------------------------------------------------


def parse_values(text: str, fld: Field) -> list:
    """Numbers from a JSON array or from text with one value per line (commas also split)."""
    text = text.strip()
    if not text:
        raise InputError("input contains no values")
    if text.startswith("["):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON input: {exc}") from None
        items = [str(x) for x in raw]
    else:
        items = [tok.strip() for line in text.splitlines() if not line.lstrip().startswith("#")
                 for tok in line.split(",") if tok.strip()]
    try:
        return [fld.convert(Fraction(x)) if fld.exact else fld.convert(x) for x in items]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse value: {exc}") from None


def _read_input(args, fld: Field) -> list:
    if args.input == "-":
        return parse_values(sys.stdin.read(), fld)
    try:
        return parse_values(Path(args.input).read_text(), fld)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None


def _z(args, fld):
    return None if args.z is None else fld.convert(Fraction(args.z))


def load_sequence(args, fld: Field):
    """(sequence, problem or None) from --input or --problem."""
    prob = None
    if args.problem:
        prob = corpus.problem(args.problem)
        terms = prob.terms(args.terms, fld)
        if prob.kind == "coefficients":
            z = _z(args, fld)
            if z is None:
                raise ConfigError(f"problem {prob.name!r} holds power-series coefficients; pass --z")
            terms = [g * z ** i for i, g in enumerate(terms)]
        return Sequence.from_terms(terms), prob
    values = _read_input(args, fld)
    if args.as_sums:
        return Sequence(tuple(values)), None
    return Sequence.from_terms(values), None


def load_coefficients(args, fld: Field) -> list:
    if args.problem:
        return corpus.problem(args.problem).terms(args.terms, fld)
    return _read_input(args, fld)


# -- configuration -----------------------------------------------------------


def _num(text, fld):
    return None if text is None else fld.convert(Fraction(text))


def validate(args) -> None:
    if getattr(args, "input", None) and getattr(args, "problem", None):
        raise ConfigError("give either --input or --problem, not both")
    if not getattr(args, "input", None) and not getattr(args, "problem", None) and args.command != "list-problems":
        raise ConfigError("an input is required: --input FILE or --problem NAME")
    if args.problem and args.problem not in corpus.PROBLEMS:
        raise ConfigError(f"unknown problem {args.problem!r}; see list-problems")
    fam = args.family
    if fam not in LEVIN_FAMILIES and args.variant is not None:
        raise ConfigError(f"family {fam} takes no remainder-estimate variant")
    if args.q is not None and fam != "G":
        raise ConfigError("--q selects a schedule for family G only")
    if fam == "G" and args.q is None:
        raise ConfigError("family G needs a schedule, e.g. --q m^2 or --q const:1")
    if args.variant == "explicit" and not args.omega:
        raise ConfigError("variant explicit needs --omega FILE")
    if fam in ("C", "RC") and args.alpha is None:
        raise ConfigError(f"family {fam} needs --alpha")
    if args.command == "predict" and fam not in LEVIN_FAMILIES:
        raise ConfigError(f"predict needs one of the families {', '.join(LEVIN_FAMILIES)}")
    if args.kmax is not None and args.kmax < 0:
        raise ConfigError("--kmax must be non-negative")


def _schedule(args, fld):
    fam = args.family
    beta = _num(args.beta, fld) if args.beta is not None else fld.convert(1)
    xi = _num(args.xi, fld) if args.xi is not None else fld.convert(1)
    if fam == "G":
        return sch.parse_schedule(args.q)
    if fam == "L":
        return sch.constant(beta)
    if fam == "S":
        return sch.factorial_shift(beta)
    if fam == "M":
        return sch.reverse_shift(xi)
    return sch.interpolating(_num(args.alpha, fld), beta)


def run_method(family: str, variant: Optional[str], args, s: Sequence, fld: Field, k_max: Optional[int]):
    """Build the table for one (family, variant) pair."""
    beta = _num(args.beta, fld) if args.beta is not None else fld.convert(1)
    xi = _num(args.xi, fld) if args.xi is not None else fld.convert(1)
    if family == "epsilon":
        return rational.epsilon_table(s, k_max, fld)
    if family == "lambda":
        return richardson.lambda_recursive(beta, s, k_max)
    if family == "F":
        return richardson.f_variant(beta, s, k_max)
    if family == "P":
        return richardson.p_variant(xi, s, k_max)
    if family == "RC":
        return richardson.rc_variant(_num(args.alpha, fld), beta, s, k_max)
    ns = argparse.Namespace(**{**vars(args), "family": family})
    q = _schedule(ns, fld)
    variant = variant or "u"
    if variant == "explicit":
        try:
            text = Path(args.omega).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.omega}: {exc.strerror}") from None
        omega = explicit_omega(parse_values(text, fld), s.start)
    else:
        omega = estimator_named(variant)
    need = 1 + LOOKAHEAD[variant]
    if len(s) < need:
        raise InputError(f"the {variant} variant needs at least {need} sequence elements, got {len(s)}")
    return engine.transform(q, s, omega, k_max, fld, family=family)


# -- output ------------------------------------------------------------------


def _fmt(x, fld: Field):
    if x is None:
        return None
    return str(x) if fld.exact else float(x)


def _approx(x):
    return None if x is None else float(x)


def _emit(doc: dict, rows: list, args) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def _config_echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "output") and v is not None}


def _oracle(prob, args):
    if prob is None or prob.oracle is None or (prob.kind == "coefficients"):
        return None
    return corpus.oracle_value(prob)


def cmd_accelerate(args) -> None:
    fld = field_named(args.scalar)
    s, prob = load_sequence(args, fld)
    table = run_method(args.family, args.variant, args, s, fld, args.kmax)
    rows = []
    for k, n, v, ok in table:
        den = None
        if table.denominators is not None:
            den = _approx(abs(table.denominators[k][n - table.start]))
        rows.append({"k": k, "n": n, "value": _fmt(v, fld), "valid": ok, "denominator_abs": den})
    pick = table.stable() if args.select == "stable" else table.recommended()
    k, v, err = pick
    doc = {
        "config": _config_echo(args),
        "table": rows,
        "recommended": {"k": k, "n": table.start, "value": _fmt(v, fld), "value_float": _approx(v),
                        "error_estimate": _approx(err),
                        "error_estimate_note": "heuristic: difference of the two highest selected orders"},
        "meta": table.meta,
        "diagnostics": [f"{sum(1 for r in rows if not r['valid'])} invalid entries"],
    }
    ref = _oracle(prob, args)
    if ref is not None:
        doc["oracle"] = ref
        doc["recommended"]["abs_error"] = abs(float(v) - ref)
    _emit(doc, rows, args)


def cmd_predict(args) -> None:
    fld = field_named(args.scalar)
    gamma = load_coefficients(args, fld)
    variant = args.variant or "u"
    if variant == "explicit":
        raise ConfigError("predict works with the u, t, d and v variants")
    need = args.k + args.n + 1 + LOOKAHEAD[variant]
    if len(gamma) < need:
        raise InputError(f"the {variant} variant with k={args.k}, n={args.n} needs {need} coefficients, got {len(gamma)}")
    q = _schedule(args, fld)
    pred = rational.predict(variant, q, args.k, args.n, gamma[:need], args.count, field=fld)
    a = pred.approximant
    rows = [{"index": pred.first + i, "predicted": _fmt(v, fld), "predicted_float": _approx(v)}
            for i, v in enumerate(pred.values)]
    doc = {
        "config": _config_echo(args),
        "approximant": {"numerator": [_fmt(c, fld) for c in a.numerator.coeffs],
                        "denominator": [_fmt(c, fld) for c in a.denominator.coeffs],
                        "variant": a.variant, "k": a.k, "n": a.n, "schedule": a.schedule},
        "coefficients_used": need,
        "guaranteed_matched": pred.guaranteed,
        "predictions": rows,
    }
    if len(gamma) > need:
        doc["matched_against_input"] = rational.check_order(a, gamma)
    _emit(doc, rows, args)


def _parse_method(text: str):
    fam, _, var = text.partition(":")
    if fam not in FAMILIES:
        raise ConfigError(f"unknown method {text!r}; families are {', '.join(FAMILIES)}")
    if var and fam not in LEVIN_FAMILIES:
        raise ConfigError(f"method {fam} takes no variant")
    if var and var not in LOOKAHEAD:
        raise ConfigError(f"unknown variant {var!r}")
    if fam == "G" and not var:
        var = "u"
    return fam, var or (None if fam not in LEVIN_FAMILIES else "u")


def _diagonal(table, family, variant):
    """Best value from s_0..s_i as a function of i."""
    out = {}
    if family == "epsilon":
        for m, row in enumerate(table.values):
            for i in (2 * m, 2 * m + 1):
                if i - 2 * m < len(row) and table.valid[m][i - 2 * m]:
                    out[i] = row[i - 2 * m]
        return out
    shift = LOOKAHEAD.get(variant, 0) if family in LEVIN_FAMILIES else 0
    for k, row in enumerate(table.values):
        if row and table.valid[k][0]:
            out[k + shift] = row[0]
    return out


def cmd_compare(args) -> None:
    fld = field_named(args.scalar)
    s, prob = load_sequence(args, fld)
    methods = [(args.family, args.variant or ("u" if args.family in LEVIN_FAMILIES else None))]
    methods += [_parse_method(b) for b in args.baseline or []]
    ref = _oracle(prob, args)
    labels, diags = [], []
    for idx, (fam, var) in enumerate(methods):
        labels.append(f"{idx}:{fam}" + (f":{var}" if var else ""))
        diags.append(_diagonal(run_method(fam, var, args, s, fld, args.kmax), fam, var))
    rows = []
    for i in range(len(s)):
        row = {"i": i}
        for lab, d in zip(labels, diags):
            v = d.get(i)
            row[f"{lab}:value"] = _fmt(v, fld)
            if ref is not None:
                row[f"{lab}:abs_error"] = None if v is None else abs(float(v) - ref)
        rows.append(row)
    doc = {"config": _config_echo(args), "methods": labels, "rows": rows}
    if ref is not None:
        doc["oracle"] = ref
    _emit(doc, rows, args)


def cmd_list_problems(args) -> None:
    rows = [{"name": p.name, "kind": p.kind, "classification": p.classification,
             "description": p.description, "has_oracle": p.oracle is not None}
            for p in sorted(corpus.PROBLEMS.values(), key=lambda p: p.name)]
    _emit({"problems": rows}, rows, args)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="levintype", description="Levin-type sequence transformations and rational approximants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--input", help="file with one value per line or a JSON array ('-' reads stdin)")
        sp.add_argument("--problem", help="registry problem name (see list-problems)")
        sp.add_argument("--terms", type=int, default=20, help="number of registry terms to use (default 20)")
        sp.add_argument("--z", help="evaluation point for coefficient problems")
        sp.add_argument("--as-sums", action="store_true", help="input values are partial sums s_n, not terms a_n")
        sp.add_argument("--family", choices=FAMILIES, default="L")
        sp.add_argument("--variant", choices=tuple(LOOKAHEAD), default=None)
        sp.add_argument("--omega", help="file of remainder estimates for --variant explicit")
        sp.add_argument("--beta", help="beta (L, S, C, lambda) or chi (F, RC); default 1")
        sp.add_argument("--xi", help="xi (M) or zeta (P); default 1")
        sp.add_argument("--alpha", help="alpha for C and RC")
        sp.add_argument("--q", help="schedule rule for G: const:B, shift:B, reverse:X, interp:A,B, m^2, list:...")
        sp.add_argument("--kmax", type=int, default=None)
        sp.add_argument("--scalar", choices=("f64", "rational"), default="f64")
        sp.add_argument("--output", help="write to this file instead of stdout")
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    acc = sub.add_parser("accelerate", help="transformation table and recommended value")
    common(acc)
    acc.add_argument("--select", choices=("highest", "stable"), default="highest",
                     help="highest valid order, or the order where successive values agree best")
    acc.set_defaults(func=cmd_accelerate)

    pre = sub.add_parser("predict", help="rational approximant and predicted series coefficients")
    common(pre)
    pre.add_argument("--k", type=int, default=1)
    pre.add_argument("--n", type=int, default=0)
    pre.add_argument("--count", type=int, default=3, help="number of predicted coefficients")
    pre.set_defaults(func=cmd_predict)

    cmp_ = sub.add_parser("compare", help="errors per order for several methods")
    common(cmp_)
    cmp_.add_argument("--baseline", action="append",
                      help="extra method, e.g. epsilon, lambda or S:d (repeatable)")
    cmp_.set_defaults(func=cmd_compare)

    lst = sub.add_parser("list-problems", help="registry of reference problems")
    lst.add_argument("--format", choices=("json", "csv"), default="json")
    lst.add_argument("--output")
    lst.set_defaults(func=cmd_list_problems)
    return p


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command != "list-problems":
            validate(args)
            if args.family in LEVIN_FAMILIES or args.command == "predict":
                _schedule(args, field_named(args.scalar))
        args.func(args)
    except WindowError as exc:
        print(f"levintype: numerical error: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, ScheduleError) as exc:
        print(f"levintype: error: {exc}", file=sys.stderr)
        return 1
    except (InputError, ValueError, IndexError) as exc:
        print(f"levintype: input error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, SingularError, EstimateError, ArithmeticError) as exc:
        print(f"levintype: numerical error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

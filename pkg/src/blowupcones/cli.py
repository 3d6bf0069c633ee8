"""Batch command-line front end for the cone oracles.

Every subcommand reads classes in the canonical text forms (``d;m1,...,m8``
for divisors, ``a;c1,...,c8`` for curves), writes to stdout or ``--output``,
and is deterministic: identical inputs and flags produce byte-identical
structured output.  Exit status: 0 when a verdict was computed (whatever it
is), 2 on input errors, 3 when a step or scale cap was hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys

from .cones import (
    CONE_CURVES,
    CONE_EFF,
    CONE_MOV,
    CONE_NEF,
    Certificate,
    CertificateError,
    HypothesisViolated,
    NotEffective,
    NotMovable,
    NotNef,
    accumulation_report,
    curve_decompose,
    effective_decompose,
    is_nef,
    movable_decompose,
    nef_decompose,
)
from .lattice import CurveClass, DivisorClass
from .oracle import ConeProblem, Feasible, ScaleExceeded, cone_member
from .weyl import (
    DEFAULT_MAX_STEPS,
    StepLimitExceeded,
    exceptional_orbit,
    minus_one_certificate,
    to_standard_form,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3

# Lets class arguments with a negative leading entry ("-1;0,...,0") parse as
# positionals instead of unknown options; "--" before them works regardless.
_NEGATIVE_TOKEN = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+(/\d+)?;")


def _accept_negative_classes(parser: argparse.ArgumentParser) -> None:
    if hasattr(parser, "_negative_number_matcher"):
        parser._negative_number_matcher = _NEGATIVE_TOKEN


def _format_word(word) -> str:
    return ",".join(str(letter) for letter in word)


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return [line.strip() for line in handle if line.strip()]
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None


def _gather_inputs(args) -> list[str]:
    texts = list(args.classes)
    if args.input:
        texts.extend(_read_lines(args.input))
    if not texts:
        raise ValueError("no input classes given (pass them inline or via --input FILE)")
    return texts


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# -- subcommand handlers ---------------------------------------------------------

def _effective_certificate(divisor: DivisorClass, max_steps: int) -> Certificate:
    # Membership in the effective cone is scale-invariant, so rational classes
    # are decided by clearing denominators; the certificate scales back exactly.
    if divisor.is_integral():
        return effective_decompose(divisor, max_steps=max_steps)
    scale = math.lcm(divisor.d.denominator, *(x.denominator for x in divisor.m))
    cert = effective_decompose(divisor * scale, max_steps=max_steps)
    terms = tuple((generator, coefficient / scale) for generator, coefficient in cert.terms)
    rescaled = Certificate(cert.cone, divisor, cert.word, terms)
    rescaled.check()
    return rescaled


def _cmd_reduce(args) -> int:
    lines = []
    for text in _gather_inputs(args):
        divisor = DivisorClass.parse(text)
        result = to_standard_form(divisor, max_steps=args.max_steps)
        if args.format == "json":
            lines.append(
                json.dumps(
                    {
                        "input": str(divisor),
                        "standard": str(result.standard),
                        "word": list(result.word),
                        "steps": result.steps,
                    },
                    sort_keys=True,
                )
            )
        else:
            lines.append(
                f"{divisor} -> standard {result.standard}"
                f" (cremona steps: {result.steps}, word: {_format_word(result.word)})"
            )
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _classify_one(divisor: DivisorClass, max_steps: int) -> dict:
    record: dict = {"input": str(divisor)}
    certificates: dict = {}

    nef_ok, witness = is_nef(divisor)
    record["nef"] = nef_ok
    if nef_ok:
        certificates["nef"] = nef_decompose(divisor).to_dict()
    else:
        record["nef_witness"] = str(witness)

    try:
        certificates["eff"] = _effective_certificate(divisor, max_steps).to_dict()
        record["effective"] = True
    except NotEffective as exc:
        record["effective"] = False
        record["effective_reason"] = str(exc)

    try:
        certificates["mov"] = movable_decompose(divisor, max_steps=max_steps).to_dict()
        record["movable"] = True
    except NotMovable as exc:
        record["movable"] = False
        record["movable_reason"] = str(exc)

    if record["nef"]:
        record["verdict"] = "nef"
    elif record["movable"]:
        record["verdict"] = "movable"
    elif record["effective"]:
        record["verdict"] = "effective"
    else:
        record["verdict"] = "none"
    record["certificates"] = certificates
    return record


def _cmd_classify(args) -> int:
    lines = []
    for text in _gather_inputs(args):
        record = _classify_one(DivisorClass.parse(text), args.max_steps)
        if args.format == "json":
            lines.append(json.dumps(record, sort_keys=True))
        else:
            parts = [f"nef={str(record['nef']).lower()}"]
            parts.append(f"movable={str(record['movable']).lower()}")
            parts.append(f"effective={str(record['effective']).lower()}")
            lines.append(f"{record['input']}: {' '.join(parts)} verdict={record['verdict']}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_decompose(args) -> int:
    lines = []
    for text in _gather_inputs(args):
        try:
            if args.cone == CONE_CURVES:
                certificate = curve_decompose(CurveClass.parse(text))
            elif args.cone == CONE_NEF:
                certificate = nef_decompose(DivisorClass.parse(text))
            elif args.cone == CONE_EFF:
                certificate = effective_decompose(
                    DivisorClass.parse(text), max_steps=args.max_steps
                )
            else:
                certificate = movable_decompose(
                    DivisorClass.parse(text), max_steps=args.max_steps
                )
        except (NotNef, NotEffective, NotMovable, HypothesisViolated) as exc:
            if args.format == "json":
                lines.append(
                    json.dumps(
                        {"cone": args.cone, "input": text, "member": False, "reason": str(exc)},
                        sort_keys=True,
                    )
                )
            else:
                lines.append(f"{text}: not decomposable in {args.cone} cone: {exc}")
            continue
        if args.format == "json":
            lines.append(json.dumps(certificate.to_dict(), sort_keys=True))
        else:
            terms = " + ".join(
                f"{coefficient}*({generator})" for generator, coefficient in certificate.terms
            )
            word = _format_word(certificate.word)
            prefix = f"{certificate.target}"
            if word:
                prefix += f" --[word {word}]--> {certificate.reduced_target()}"
            lines.append(f"{prefix} = {terms if terms else '0'}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_orbit(args) -> int:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["class", "degree"])
    for divisor in exceptional_orbit(args.max_degree):
        writer.writerow([str(divisor), str(divisor.d)])
    _emit(args, buffer.getvalue())
    return EXIT_OK


def _cmd_accumulation(args) -> int:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["degree", "max_ray_distance", "approx"])
    for degree, distance in accumulation_report(args.max_degree):
        writer.writerow([degree, str(distance), f"{float(distance):.12g}"])
    _emit(args, buffer.getvalue())
    return EXIT_OK


def _cmd_check_minus_one(args) -> int:
    lines = []
    for text in _gather_inputs(args):
        divisor = DivisorClass.parse(text)
        word = minus_one_certificate(divisor, max_steps=args.max_steps)
        if args.format == "json":
            record = {"input": str(divisor), "minus_one": word is not None}
            if word is not None:
                record["word"] = list(word)
            lines.append(json.dumps(record, sort_keys=True))
        elif word is not None:
            lines.append(f"{divisor}: yes (word: {_format_word(word)})")
        else:
            lines.append(f"{divisor}: no")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    parse = CurveClass.parse if args.curves else DivisorClass.parse
    target = parse(args.target)
    generators = [parse(line) for line in _read_lines(args.generators)]
    problem = ConeProblem(target.vector(), tuple(g.vector() for g in generators))
    outcome = cone_member(problem)
    if isinstance(outcome, Feasible):
        record = {
            "outcome": "feasible",
            "coefficients": [str(c) for c in outcome.coefficients],
            "terms": [
                {"gen": str(generator), "coeff": str(coefficient)}
                for generator, coefficient in zip(generators, outcome.coefficients)
                if coefficient
            ],
        }
        human = "feasible; nonzero terms: " + ", ".join(
            f"{coefficient}*({generator})"
            for generator, coefficient in zip(generators, outcome.coefficients)
            if coefficient
        )
    else:
        record = {
            "outcome": "infeasible",
            "functional": [str(x) for x in outcome.functional],
        }
        human = "infeasible; separating functional: " + ",".join(
            str(x) for x in outcome.functional
        )
    if args.format == "json":
        _emit(args, json.dumps(record, sort_keys=True) + "\n")
    else:
        _emit(args, human + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    with open(args.certificate, "r", encoding="utf-8") as handle:
        text = handle.read()
    certificate = Certificate.from_json(text)
    try:
        certificate.check()
    except CertificateError as exc:
        _emit(args, f"invalid certificate: {exc}\n")
        return EXIT_OK
    _emit(
        args,
        f"valid {certificate.cone} certificate for {certificate.target}"
        f" ({len(certificate.terms)} terms)\n",
    )
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowupcones",
        description=(
            "Exact cone computations on the blowup of P^3 at eight very general points. "
            "Divisor classes are written d;m1,...,m8 (entries may be rationals p/q), "
            "curve classes a;c1,...,c8."
        ),
    )
    _accept_negative_classes(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, classes=True):
        _accept_negative_classes(p)
        if classes:
            p.add_argument("classes", nargs="*", metavar="CLASS", help="classes inline")
            p.add_argument("--input", help="file with one class per line")
        p.add_argument(
            "--format", choices=("human", "json"), default="human", help="output format"
        )
        p.add_argument("--output", help="write output to this path instead of stdout")
        p.add_argument(
            "--max-steps",
            type=int,
            default=DEFAULT_MAX_STEPS,
            help="cap on Cremona steps during reduction",
        )

    p = sub.add_parser("reduce", help="reduce classes to standard form with a Weyl word")
    add_common(p)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("classify", help="nef / movable / effective / none verdicts")
    add_common(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("decompose", help="decompose classes over one cone's generators")
    p.add_argument(
        "--cone",
        required=True,
        choices=(CONE_CURVES, CONE_NEF, CONE_EFF, CONE_MOV),
        help="which cone's generating set to use",
    )
    add_common(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser(
        "orbit",
        help="CSV of the exceptional orbit up to a degree bound",
        description="Enumerate the Weyl orbit of the exceptional classes. "
        "CSV columns: class (canonical text form), degree.",
    )
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--output", help="write output to this path instead of stdout")
    p.set_defaults(handler=_cmd_orbit)

    p = sub.add_parser(
        "accumulation",
        help="CSV of per-degree max ray distance to the -K/2 ray",
        description="Distances of normalized orbit rays to the ray of the "
        "half-anticanonical class. CSV columns: degree, max_ray_distance "
        "(exact rational), approx (float rendering for plotting).",
    )
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--output", help="write output to this path instead of stdout")
    p.set_defaults(handler=_cmd_accumulation)

    p = sub.add_parser("check-minus-one", help="decide membership in the exceptional orbit")
    add_common(p)
    p.set_defaults(handler=_cmd_check_minus_one)

    p = sub.add_parser("oracle", help="exact LP membership over generators from a file")
    _accept_negative_classes(p)
    p.add_argument("target", metavar="TARGET", help="target class")
    p.add_argument("--generators", required=True, help="file with one generator per line")
    p.add_argument("--curves", action="store_true", help="parse curve classes instead")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--output", help="write output to this path instead of stdout")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("verify", help="re-check a certificate file by exact arithmetic")
    p.add_argument("certificate", metavar="CERTFILE")
    p.add_argument("--output", help="write output to this path instead of stdout")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (StepLimitExceeded, ScaleExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: emit matrices, eigensystems, constants and the claims report."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import mpmath
import numpy as np

from .claims import DEFAULT_SEED, DEFAULT_TRIALS, run_claims
from .core import DimensionError, build_named_matrix, check_dim, dft_matrix, fifth_root_constants
from .ladder import (
    EigenSystem5,
    closed_form_spectrum,
    ground_state,
    ladder_eigensystem,
    mixing_parameters,
    newton_ladder,
    newton_vector,
    power_formula,
)
from .oracle import oracle_eigensystem
from .precision import PrecisionConfig, to_float
from .sparse import phi_x_product, split

EMIT_OBJECTS = (
    "dft", "circulant", "backward-identity", "reflection", "position", "derivative", "momentum",
    "lowering", "raising", "number", "partner-number", "phi-x", "split-symmetric", "split-antisymmetric",
)
FIVE_ONLY = ("phi-x", "split-symmetric", "split-antisymmetric")
METHODS = ("ladder", "power", "newton", "oracle")
CSV_IMAG_TOL = 1e-14

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# serialization


class Encoder:
    """Turns backend numbers into JSON values: floats for binary64, strings for extended."""

    def __init__(self, config: PrecisionConfig):
        self.config = config

    def real(self, x):
        if self.config.backend.extended:
            return mpmath.nstr(getattr(x, "real", x), self.config.digits)
        return float(getattr(x, "real", x))

    def complex(self, z) -> list:
        return [self.real(z), self.real(getattr(z, "imag", 0))]

    def vector(self, v) -> list:
        return [self.complex(z) for z in v]

    def matrix(self, m) -> list:
        return [self.vector(row) for row in m]


def csv_cell(z) -> str:
    re, im = to_float(z), float(getattr(z, "imag", 0))
    if abs(im) <= CSV_IMAG_TOL:
        return repr(re)
    return f"{re!r}{im:+}i"


def document(obj: str, n: int, config: PrecisionConfig, payload: dict) -> dict:
    return {"object": obj, "n": n, "precision": config.label, "payload": payload}


def _write_csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def emit_payload(obj: str, n: int, config: PrecisionConfig) -> dict:
    enc = Encoder(config)
    if obj not in EMIT_OBJECTS:
        raise UsageError(f"unknown object {obj!r}; choose from {', '.join(EMIT_OBJECTS)}")
    check_dim(n)
    if obj in FIVE_ONLY and n != 5:
        raise UsageError(f"{obj} is defined for n = 5 only")
    if obj.startswith("split-"):
        pair = split(obj.split("-", 1)[1], config)
        return {
            "annihilator": enc.matrix(pair.annihilator),
            "sparse": {
                "nnz": pair.sparse.nnz,
                "entries": [[r, c, enc.complex(v)] for r, c, v in pair.sparse.entries],
            },
        }
    if obj == "dft":
        m = dft_matrix(n, config)
    elif obj == "phi-x":
        m = phi_x_product(config)
    else:
        m = build_named_matrix(obj, n, config)
    return {"matrix": enc.matrix(m)}


def emit_csv(payload: dict) -> str:
    if "matrix" in payload:
        return _write_csv([[_cell_from_json(z) for z in row] for row in payload["matrix"]])
    rows = [["annihilator"]]
    rows += [[_cell_from_json(z) for z in row] for row in payload["annihilator"]]
    rows.append(["row", "col", "value"])
    rows += [[r, c, _cell_from_json(v)] for r, c, v in payload["sparse"]["entries"]]
    return _write_csv(rows)


def _cell_from_json(pair) -> str:
    re, im = (float(x) for x in pair)
    return csv_cell(complex(re, im))


def eigensystem_for(method: str, config: PrecisionConfig) -> tuple:
    """(lambdas, vectors) indexed by n for one construction path."""
    if method == "ladder":
        system = ladder_eigensystem(config)
        return system.lambdas, [p.vector for p in system.pairs]
    if method == "oracle":
        system: EigenSystem5 = oracle_eigensystem(config)
        return system.lambdas, [p.vector for p in system.pairs]
    if method == "power":
        vectors = [ground_state(config).vector] + [power_formula(n, config) for n in range(1, 5)]
    elif method == "newton":
        vectors = [newton_vector(n, config) for n in range(5)]
    else:
        raise UsageError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    number = build_named_matrix("number", 5, config)
    lambdas = tuple((np.conj(v) @ (number @ v)).real for v in vectors)
    return lambdas, vectors


def eigensystem_payload(method: str, config: PrecisionConfig) -> dict:
    enc = Encoder(config)
    lambdas, vectors = eigensystem_for(method, config)
    return {
        "method": method,
        "eigenvalues": [enc.real(x) for x in lambdas],
        "vectors": [enc.vector(v) for v in vectors],
        "parity": ["symmetric" if n % 2 == 0 else "antisymmetric" for n in range(5)],
        "dft_exponent": [n % 4 for n in range(5)],
    }


def eigensystem_csv(payload: dict) -> str:
    rows = [["n", "lambda", "parity", "dft_exponent"] + [f"f{k}" for k in range(5)]]
    for n in range(5):
        rows.append([n, payload["eigenvalues"][n], payload["parity"][n], payload["dft_exponent"][n]]
                    + [_cell_from_json(z) for z in payload["vectors"][n]])
    return _write_csv(rows)


def constants_payload(config: PrecisionConfig) -> dict:
    enc = Encoder(config)
    k = fifth_root_constants(config)
    eta, phi = mixing_parameters(config)
    return {
        "q": enc.complex(k.q),
        "s": [enc.real(x) for x in k.s],
        "c": [enc.real(x) for x in k.c],
        "xi0": enc.real(k.xi0),
        "xi1": enc.real(k.xi1),
        "lambda": [enc.real(x) for x in closed_form_spectrum(config).lambdas],
        "eta": enc.real(eta),
        "phi": enc.real(phi),
        "d": [enc.real(x) for x in newton_ladder(config).d],
    }


def constants_csv(payload: dict) -> str:
    rows = [["name", "value"], ["q", _cell_from_json(payload["q"])]]
    rows += [[f"s{n}", v] for n, v in enumerate(payload["s"])]
    rows += [[f"c{n}", v] for n, v in enumerate(payload["c"])]
    rows += [["xi0", payload["xi0"]], ["xi1", payload["xi1"]]]
    rows += [[f"lambda{n}", v] for n, v in enumerate(payload["lambda"])]
    rows += [["eta", payload["eta"]], ["phi_degrees", repr(math.degrees(float(payload["phi"])))]]
    rows += [[f"d{n}", v] for n, v in enumerate(payload["d"])]
    return _write_csv(rows)


def verify_csv(payload: dict) -> str:
    fields = ["claim_id", "paper_ref", "status", "residual", "threshold", "corrected_residual", "correction_note"]
    rows = [fields] + [[e[f] if e[f] is not None else "" for f in fields] for e in payload["entries"]]
    return _write_csv(rows)


# ---------------------------------------------------------------------------
# argument parsing


def _precision(text: str) -> PrecisionConfig:
    try:
        return PrecisionConfig.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _global_flags(with_defaults: bool) -> argparse.ArgumentParser:
    # subcommands get SUPPRESS defaults so a flag given before the subcommand survives
    def default(value):
        return value if with_defaults else argparse.SUPPRESS

    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--precision", type=_precision, default=default(PrecisionConfig()),
                       help="64 (binary64, default) or extended:<digits> (digits >= 30)")
    flags.add_argument("--tolerance", type=_positive_float, default=default(None),
                       help="base tolerance epsilon for claim thresholds")
    flags.add_argument("--seed", type=int, default=default(DEFAULT_SEED), help="seed for randomized trials")
    flags.add_argument("--format", choices=("json", "csv"), default=default("json"))
    return flags


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dftladder", parents=[_global_flags(True)],
                                     description="Eigenvectors of the 5-point DFT via sparse ladder operators.")
    common = _global_flags(False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("emit", parents=[common], help="emit a named matrix")
    p.add_argument("--object", required=True, help=", ".join(EMIT_OBJECTS))
    p.add_argument("--n", type=int, default=5)

    p = sub.add_parser("eigensystem", parents=[common], help="emit lambda_n and f_n")
    p.add_argument("--method", choices=METHODS, default="ladder")

    p = sub.add_parser("verify", parents=[common], help="run the claims report")
    p.add_argument("--trials", type=_positive_int, default=DEFAULT_TRIALS)

    sub.add_parser("constants", parents=[common], help="table of q, s_n, c_n, xi, lambda_n, eta, phi, d_n")
    return parser


def run(args: argparse.Namespace, out) -> int:
    config: PrecisionConfig = args.precision
    if args.tolerance is not None:
        config = config.with_epsilon(args.tolerance)

    if args.command == "emit":
        payload = emit_payload(args.object, args.n, config)
        doc, text_csv = document(args.object, args.n, config, payload), emit_csv
    elif args.command == "eigensystem":
        payload = eigensystem_payload(args.method, config)
        doc, text_csv = document("eigensystem", 5, config, payload), eigensystem_csv
    elif args.command == "constants":
        payload = constants_payload(config)
        doc, text_csv = document("constants", 5, config, payload), constants_csv
    else:
        report = run_claims(config, args.trials, args.seed)
        payload = report.to_dict()
        doc, text_csv = document("claims-report", 5, config, payload), verify_csv
        for entry in report.unexpected():
            print(f"unexpected {entry.status}: {entry.claim_id} (residual {entry.residual:.3e})", file=sys.stderr)

    if args.format == "csv":
        out.write(text_csv(payload))
    else:
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")

    if args.command == "verify":
        return report.exit_code()
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad usage
    try:
        return run(args, sys.stdout)
    except (UsageError, DimensionError) as exc:
        print(f"dftladder: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

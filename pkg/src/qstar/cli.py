"""``qstar`` command-line interface.

    qstar wigner    STATE            [--variant A|B]
    qstar tomogram  STATE            [--ntheta N] [--npsi M]
    qstar kernels                    [--variant A|B] [--ntheta N] [--npsi M]
    qstar roundtrip STATE | --seed S [--variant A|B] [--ntheta N] [--npsi M]
    qstar verify

STATE is ``bloch:x,y,z``, ``polar:a,c,xi`` or ``matrix:@file.json`` where the
file holds ``{"dim": 2, "re": [[...]], "im": [[...]]}``. Every command takes
``--format json|csv|text`` and ``--out FILE``.

Exit codes: 0 success, 1 usage error, 2 physicality error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .closed_forms import matrix_from_json, matrix_to_json
from .errors import PhysicalityError, QStarError
from .kernels import KernelTable, wigner_from_tomogram
from .linalg import (
    DensityMatrix,
    bloch_from_density,
    density_from_bloch,
    density_from_polar,
    random_bloch_vectors,
    validate_density,
)
from .phase_space import VARIANTS
from .quadrature import DEFAULT_N_PSI, DEFAULT_N_THETA, build_sphere_quadrature
from .tomography import SPIN_PROJECTIONS, Tomogram, density_from_tomogram
from .verify import all_labels, run_checks
from .wigner import density_from_wigner, wigner

EXIT_OK, EXIT_USAGE, EXIT_PHYSICALITY, EXIT_VERIFY = 0, 1, 2, 3
ROUNDTRIP_TOL = 1e-10


class UsageError(QStarError):
    pass


def parse_state(text: str) -> DensityMatrix:
    kind, sep, payload = text.partition(":")
    if not sep:
        raise UsageError(f"state {text!r} must look like bloch:x,y,z | polar:a,c,xi | matrix:@file.json")
    if kind in ("bloch", "polar"):
        try:
            nums = [float(p) for p in payload.split(",")]
        except ValueError:
            raise UsageError(f"could not parse numbers in {text!r}") from None
        if len(nums) != 3:
            raise UsageError(f"{kind} state needs exactly 3 numbers, got {len(nums)}")
        return density_from_bloch(*nums) if kind == "bloch" else density_from_polar(*nums)
    if kind == "matrix":
        if not payload.startswith("@"):
            raise UsageError("matrix states are given as matrix:@file.json")
        try:
            obj = json.loads(Path(payload[1:]).read_text())
            m = matrix_from_json(obj)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read matrix file {payload[1:]!r}: {exc}") from None
        return validate_density(m)
    raise UsageError(f"unknown state format {kind!r}")


def _state_payload(rho: DensityMatrix) -> dict:
    out = {"matrix": matrix_to_json(rho.matrix)}
    if rho.dim == 2:
        out["bloch"] = list(bloch_from_density(rho))
    return out


def _require_qubit(rho: DensityMatrix) -> None:
    if rho.dim != 2:
        raise UsageError("this command needs a one-qubit (2x2) state")


def _variants(args) -> tuple[str, ...]:
    return (args.variant,) if args.variant else VARIANTS


def cmd_wigner(args) -> dict:
    rho = parse_state(args.state)
    _require_qubit(rho)
    rows = [
        {"variant": v, "j": j, "k": k, "value": float(wigner(rho, v)[j, k])}
        for v in _variants(args)
        for j in (0, 1)
        for k in (0, 1)
    ]
    return {"command": "wigner", "state": _state_payload(rho), "rows": rows}


def cmd_tomogram(args) -> dict:
    rho = parse_state(args.state)
    _require_qubit(rho)
    quad = build_sphere_quadrature(args.ntheta, args.npsi)
    table = Tomogram(rho).table(quad)
    rows = [
        {"m": m, "theta": float(th), "psi": float(ps), "w": float(w)}
        for m, values in zip(SPIN_PROJECTIONS, table)
        for th, ps, w in zip(quad.theta, quad.psi, values)
    ]
    return {"command": "tomogram", "state": _state_payload(rho), "rows": rows}


def cmd_kernels(args) -> dict:
    quad = build_sphere_quadrature(args.ntheta, args.npsi)
    keys = ("variant", "dual", "m", "theta", "psi", "j", "k", "value")
    rows = [
        dict(zip(keys, row))
        for v in _variants(args)
        for dual in (False, True)
        for row in KernelTable(v, dual).rows(quad)
    ]
    return {"command": "kernels", "rows": rows}


def cmd_roundtrip(args) -> dict:
    if args.state and args.seed is not None:
        raise UsageError("give either a state or --seed, not both")
    if args.state:
        rho = parse_state(args.state)
    elif args.seed is not None:
        rho = density_from_bloch(*random_bloch_vectors(np.random.default_rng(args.seed), 1)[0])
    else:
        raise UsageError("roundtrip needs a state or --seed")
    _require_qubit(rho)
    quad = build_sphere_quadrature(args.ntheta, args.npsi)
    tomo = Tomogram(rho)
    rows = []
    residuals = {}
    for v in _variants(args):
        direct = wigner(rho, v)
        via_tomogram = wigner_from_tomogram(tomo, v, quad)
        rebuilt = density_from_wigner(via_tomogram)
        residuals[f"wigner_{v}"] = float(np.max(np.abs(via_tomogram.values - direct.values)))
        residuals[f"state_via_wigner_{v}"] = float(np.max(np.abs(rebuilt.matrix - rho.matrix)))
        rows.append({"variant": v, "direct": direct.to_dict()["values"], "via_tomogram": via_tomogram.to_dict()["values"]})
    residuals["state_via_tomogram"] = float(np.max(np.abs(density_from_tomogram(tomo, quad).matrix - rho.matrix)))
    max_res = max(residuals.values())
    return {
        "command": "roundtrip",
        "seed": args.seed,
        "quadrature": [quad.n_theta, quad.n_psi],
        "state": _state_payload(rho),
        "wigner": rows,
        "residuals": residuals,
        "max_residual": max_res,
        "tolerance": ROUNDTRIP_TOL,
        "passed": max_res <= ROUNDTRIP_TOL,
    }


def cmd_verify(args) -> dict:
    results = run_checks()
    return {
        "command": "verify",
        "labels": all_labels(),
        "checks": [r.to_dict() for r in results],
        "passed": all(r.passed for r in results),
    }


COMMANDS = {
    "wigner": cmd_wigner,
    "tomogram": cmd_tomogram,
    "kernels": cmd_kernels,
    "roundtrip": cmd_roundtrip,
    "verify": cmd_verify,
}


def run_command(name: str, args: argparse.Namespace) -> dict:
    if name not in COMMANDS:
        raise UsageError(f"unknown command {name!r}")
    return COMMANDS[name](args)


# -- rendering ---------------------------------------------------------------


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, float):
        return f"{v:.16e}"
    return str(v)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def render_csv(report: dict) -> str:
    if "rows" in report:
        rows = report["rows"]
    elif "checks" in report:
        rows = [{**c, "labels": " ".join(c["labels"])} for c in report["checks"]]
    else:
        rows = [{"quantity": k, "value": v} for k, v in report["residuals"].items()]
        rows.append({"quantity": "max_residual", "value": report["max_residual"]})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow(_csv_cell(v) for v in row.values())
    return buf.getvalue()


def render_text(report: dict) -> str:
    lines = [f"qstar {report['command']}"]
    if "checks" in report:
        for c in report["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            lines.append(f"{status}  {c['residual']!r:>24} <= {c['tolerance']!r:<8} [{', '.join(c['labels'])}] {c['name']}")
        lines.append(f"labels: {' '.join(report['labels'])}")
    elif "rows" in report:
        for row in report["rows"]:
            lines.append("  ".join(f"{k}={v!r}" for k, v in row.items()))
    else:
        for k, v in report["residuals"].items():
            lines.append(f"{k}: {v!r}")
        lines.append(f"max_residual: {report['max_residual']!r} (tolerance {report['tolerance']!r})")
    if "passed" in report:
        lines.append("all checks passed" if report["passed"] else "FAILED")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qstar", description="Qubit Wigner functions, spin tomograms and their kernels.")
    parser.add_argument("--version", action="version", version=f"qstar {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name in ("wigner", "tomogram"):
            p.add_argument("state")
        if name == "roundtrip":
            p.add_argument("state", nargs="?")
            p.add_argument("--seed", type=int)
        if name != "verify":
            p.add_argument("--variant", choices=VARIANTS)
            p.add_argument("--ntheta", type=int, default=DEFAULT_N_THETA)
            p.add_argument("--npsi", type=int, default=DEFAULT_N_PSI)
        p.add_argument("--format", choices=tuple(RENDERERS), default="json")
        p.add_argument("--out", type=Path)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run_command(args.command, args)
    except UsageError as exc:
        print(f"qstar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PhysicalityError as exc:
        print(f"qstar: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PHYSICALITY
    except QStarError as exc:
        print(f"qstar: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = RENDERERS[args.format](report)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    if report.get("passed") is False:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

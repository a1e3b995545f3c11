"""Command-line driver.

Exit status: 0 when every checked identity holds, 1 on an identity failure,
2 on a configuration, cap or truncation error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .checks import SUITES, run_suite
from .coeff import is_prime
from .export import TABLES, structure_table
from .quiver import Quiver
from .repcat import (DEFAULT_CAP_MATRICES, DEFAULT_CAP_SUBSPACES, CapExceeded, HallTables,
                     TruncationError, enumerate_catalog)

log = logging.getLogger("deltahall")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


@dataclass
class RunConfig:
    quiver: Path
    q: int
    max_dim: int
    check: str | None = None
    table: str | None = None
    twist: Path | None = None
    out: Path | None = None
    jobs: int = 1
    cap_matrices: int = DEFAULT_CAP_MATRICES
    cap_subspaces: int = DEFAULT_CAP_SUBSPACES

    def validate(self) -> None:
        if not is_prime(self.q):
            raise ValueError(f"--q {self.q} is not prime")
        if self.max_dim < 0:
            raise ValueError("--max-dim must be nonnegative")
        if self.jobs < 1 or self.cap_matrices < 1 or self.cap_subspaces < 1:
            raise ValueError("--jobs and caps must be positive")
        if self.check and self.table:
            raise ValueError("--check and --table are mutually exclusive")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="deltahall",
        description="Build Hall / Delta-Hall algebras of quiver representations over F_q and verify their identities.",
    )
    p.add_argument("--quiver", type=Path, required=True, help='quiver JSON: {"vertices": n, "arrows": [[s, t], ...]}')
    p.add_argument("--q", type=int, required=True, help="prime field size")
    p.add_argument("--max-dim", type=int, required=True, help="total-dimension bound D of the catalog")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--check", choices=SUITES, help="run an identity sweep")
    mode.add_argument("--table", choices=TABLES, help="export a structure-constant table")
    p.add_argument("--twist", type=Path, help='twist JSON {"T": [[...]]} for twisted tables and twist-assoc')
    p.add_argument("--out", type=Path, help="write JSON here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the Hall-table fill")
    p.add_argument("--cap-matrices", type=int, default=DEFAULT_CAP_MATRICES)
    p.add_argument("--cap-subspaces", type=int, default=DEFAULT_CAP_SUBSPACES)
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _emit(payload: dict, out: Path | None) -> None:
    text = json.dumps(payload, indent=1) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def load_twist(path: Path) -> list[list[int]]:
    obj = json.loads(path.read_text())
    return [[int(x) for x in row] for row in obj["T"]]


def cmd_catalog(cfg: RunConfig, quiver: Quiver) -> int:
    cat = enumerate_catalog(quiver, cfg.q, cfg.max_dim, cfg.cap_matrices)
    _emit(cat.to_json(), cfg.out)
    print(f"{len(cat)} classes", file=sys.stderr)
    return EXIT_OK


def cmd_table(cfg: RunConfig, tables: HallTables, twist) -> int:
    payload = structure_table(tables, cfg.table, twist)
    _emit(payload, cfg.out)
    print(f"{cfg.table}: {len(payload['entries'])} entries", file=sys.stderr)
    return EXIT_OK


def cmd_check(cfg: RunConfig, tables: HallTables, twist) -> int:
    report = run_suite(cfg.check, tables, twist=twist)
    payload = report.to_json()
    if hasattr(report, "relations"):
        payload["relations"] = report.relations
    _emit(payload, cfg.out)
    status = "PASS" if report.passed else "FAIL"
    print(f"{cfg.check}: {status} ({report.checked} checked, {len(report.failures)} failures)", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    cfg = RunConfig(args.quiver, args.q, args.max_dim, args.check, args.table, args.twist, args.out,
                    args.jobs, args.cap_matrices, args.cap_subspaces)
    try:
        cfg.validate()
        quiver = Quiver.load(cfg.quiver)
        twist = load_twist(cfg.twist) if cfg.twist else None
        if twist is not None and (len(twist) != quiver.vertex_count
                                  or any(len(r) != quiver.vertex_count for r in twist)):
            raise ValueError("twist matrix must be vertex_count x vertex_count")
        if not cfg.check and not cfg.table:
            return cmd_catalog(cfg, quiver)
        tables = HallTables.build(quiver, cfg.q, cfg.max_dim, cfg.jobs, cfg.cap_matrices, cfg.cap_subspaces)
        if cfg.table:
            return cmd_table(cfg, tables, twist)
        return cmd_check(cfg, tables, twist)
    except (ValueError, KeyError, OSError, CapExceeded, TruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

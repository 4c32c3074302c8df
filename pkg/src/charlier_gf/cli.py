"""Command-line front end.

Exit status: 0 pass, 1 verification failure, 2 bad arguments or budget.
Reports go to stdout, diagnostics to stderr.  Timing is left out unless
``--timing`` is given so identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .charlier import EnumerationCapError
from .configs import DEFAULT_CONFIG_CAP, enumerate_configs, enumerate_H
from .identities import IDENTITY_IDS, UnknownIdentityError, oracle_compare, verify

DEFAULT_SEED = 0


@dataclass(frozen=True)
class RunConfig:
    command: str
    identity: str | None = None
    order: int | None = None
    mode: str = "symbolic"
    points: int = 20
    seed: int = DEFAULT_SEED
    k: int = 2
    n: int | None = None
    cap: int = DEFAULT_CONFIG_CAP
    force: bool = False
    count_only: bool = False
    fmt: str = "text"
    timing: bool = False


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charlier-gf",
        description="Verify Charlier generating-function identities and run brute-force oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", dest="fmt", choices=["text", "json-like"], default="text")
        p.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")

    p = sub.add_parser("verify", help="compare both sides of an identity up to an order")
    p.add_argument("identity", help=f"one of: {', '.join(IDENTITY_IDS)}")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mode", choices=["symbolic", "random"], default="symbolic")
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--k", type=int, default=2)
    common(p)

    p = sub.add_parser("oracle", help="brute-force enumeration against the closed form")
    p.add_argument("kind", choices=["config", "h"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--force", action="store_true", help="ignore enumeration budgets")
    common(p)

    p = sub.add_parser("enumerate", help="list Charlier configurations or tuples of H")
    p.add_argument("kind", choices=["configs", "h"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--cap", type=int, default=DEFAULT_CONFIG_CAP)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--force", action="store_true", help="ignore enumeration budgets")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    fields = vars(args).copy()
    fields.pop("kind", None)
    cfg = {k: v for k, v in fields.items() if k in RunConfig.__dataclass_fields__}
    if args.command != "verify":
        cfg["identity"] = args.kind
    return RunConfig(**cfg)


def _emit(report, cfg: RunConfig, out) -> int:
    if cfg.fmt == "json-like":
        print(report.to_json(timing=cfg.timing), file=out)
    else:
        print(report.to_text(timing=cfg.timing), file=out)
    return 0 if report.verified else 1


def cmd_verify(cfg: RunConfig, out=None) -> int:
    try:
        report = verify(cfg.identity, cfg.order, mode=cfg.mode, points=cfg.points,
                        seed=cfg.seed, k=cfg.k)
    except UnknownIdentityError:
        print(f"error: unknown identity {cfg.identity!r}; choose from {', '.join(IDENTITY_IDS)}",
              file=sys.stderr)
        return 2
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _emit(report, cfg, out)


def cmd_oracle(cfg: RunConfig, out=None) -> int:
    try:
        if cfg.identity == "config":
            if cfg.n > DEFAULT_CONFIG_CAP and not cfg.force:
                raise EnumerationCapError(f"n={cfg.n} exceeds the configuration cap {DEFAULT_CONFIG_CAP}")
            report = oracle_compare("config", n=cfg.n)
        else:
            report = oracle_compare("H", k=cfg.k, n=cfg.n, force=cfg.force)
    except (EnumerationCapError, ValueError) as exc:
        print(f"error: {exc} (use --force to override)", file=sys.stderr)
        return 2
    return _emit(report, cfg, out)


def cmd_enumerate(cfg: RunConfig, out=None) -> int:
    try:
        if cfg.identity == "configs":
            cap = max(cfg.cap, cfg.n) if cfg.force else cfg.cap
            stream = enumerate_configs(range(1, cfg.n + 1), cap=cap)
        else:
            stream = enumerate_H(cfg.k, cfg.n, force=cfg.force)
        if cfg.count_only:
            print(sum(1 for _ in stream), file=out)
        else:
            for item in stream:
                print(item, file=out)
    except (EnumerationCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    cfg = _run_config(args)
    handler = {"verify": cmd_verify, "oracle": cmd_oracle, "enumerate": cmd_enumerate}[cfg.command]
    return handler(cfg)


if __name__ == "__main__":
    sys.exit(main())

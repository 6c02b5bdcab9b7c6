"""
Command-line entry point: coefficient tables, identity suites and root certificates.

Exit codes: 0 every check passed, 1 a check or certificate failed, 2 usage or
configuration error, 3 brute-force capacity exceeded.
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import List, Optional, Sequence, Union

from pydantic import ValidationError

from .core.derivpoly import (
    family_poly,
    family_table,
    special_values,
    verify_cvijovic,
    verify_transforms,
)
from .core.eulerian import eulerian_fast, eulerian_table, verify_oracle, verify_stembridge
from .core.rootcert import (
    Region,
    certify_real_rooted,
    check_compatibility,
    check_interleaving,
    sign_pattern_report,
    verify_sturm_oracle,
    zero_chain_report,
)
from .utils.config import Config
from .utils.exceptions import CapacityError, ConfigurationError, DomainError, EulerCertError
from .utils.serialization import write_certificates, write_report, write_table
from .utils.types import (
    Certificate,
    CheckKind,
    Command,
    CoxeterType,
    FamilyTag,
    Report,
    RunConfig,
    Suite,
    TableMethod,
)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

ORACLE_TRIALS = 200
FAMILIES = [t.value for t in CoxeterType] + [f.value for f in FamilyTag]


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="Single n (certify) or upper bound (table, verify).")
    common.add_argument("--n-max", type=int, dest="n_max", help="Largest n to process.")
    common.add_argument("--brute-cap", type=int, dest="brute_cap", help="Largest n enumerated by brute force.")
    common.add_argument("--series-order", type=int, dest="series_order", help="Truncation order of power series.")
    common.add_argument("--format", choices=["csv", "json"], dest="output_format")
    common.add_argument("--out", type=Path, dest="output_path", help="Output file (default: stdout).")
    common.add_argument("--seed", type=int, help="Seed for randomized checks.")
    common.add_argument("--jobs", type=int, help="Worker processes.")

    parser = argparse.ArgumentParser(
        prog="eulercert",
        description="Exact Eulerian and derivative polynomials with certified root statements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", parents=[common], help="Coefficient table of a family.")
    table.add_argument("--family", choices=FAMILIES)
    table.add_argument("--method", choices=[m.value for m in TableMethod], help="A/B/D only.")

    verify = sub.add_parser("verify", parents=[common], help="Run an identity suite.")
    verify.add_argument("--suite", choices=[s.value for s in Suite])

    certify = sub.add_parser("certify", parents=[common], help="Emit root-location certificates.")
    certify.add_argument("--check", choices=[c.value for c in CheckKind])
    certify.add_argument("--samples", type=int, help="Random combinations per compatibility claim.")

    return parser.parse_args(argv)


def _first(*values):  # type: ignore[no-untyped-def]
    for value in values:
        if value is not None:
            return value
    return None


def build_run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    """Merge flags over EULERCERT_* variables over config/suite_defaults.json."""
    command = Command(args.command)
    family = _first(getattr(args, "family", None), config.FAMILY)
    suite = _first(getattr(args, "suite", None), config.SUITE)
    check = _first(getattr(args, "check", None), config.CHECK)
    selector = {Command.TABLE: family, Command.VERIFY: suite, Command.CERTIFY: check}[command]

    if command is Command.CERTIFY:
        n = _first(args.n, config.N)
        n_max = _first(args.n_max, config.N_MAX, n, config.default_n_max(command.value, selector))
    else:
        n = None
        n_max = _first(args.n_max, args.n, config.N_MAX, config.N,
                       config.default_n_max(command.value, selector))
    if n_max is None:
        raise ConfigurationError(f"No n_max given and no default for {command.value} {selector}")

    return RunConfig(
        command=command,
        family=family,
        suite=suite,
        check=check,
        n=n,
        n_max=n_max,
        brute_cap=_first(args.brute_cap, config.BRUTE_CAP),
        series_order=_first(args.series_order, config.SERIES_ORDER),
        output_format=_first(args.output_format, config.FORMAT),
        output_path=_first(args.output_path, config.OUT),
        seed=_first(args.seed, config.SEED),
        jobs=_first(args.jobs, config.JOBS),
        samples=_first(getattr(args, "samples", None), config.SAMPLES),
        method=_first(getattr(args, "method", None), TableMethod.FAST.value),
    )


def cmd_table(cfg: RunConfig) -> int:
    assert cfg.family is not None
    if cfg.family in {t.value for t in CoxeterType}:
        rows = eulerian_table(
            CoxeterType(cfg.family),
            cfg.n_max,
            brute=cfg.method is TableMethod.BRUTE,
            cap=cfg.brute_cap,
            jobs=cfg.jobs,
        )
    else:
        rows = family_table(FamilyTag(cfg.family), cfg.n_max)
    write_table(cfg.family, rows, cfg.output_format.value, cfg.output_path)
    return EXIT_PASS


def run_suite(suite: Suite, cfg: RunConfig) -> Report:
    if suite is Suite.STEMBRIDGE:
        return verify_stembridge(cfg.n_max, cap=cfg.brute_cap, jobs=cfg.jobs)
    if suite is Suite.SPECIAL_VALUES:
        return special_values(cfg.n_max, series_order=cfg.series_order)
    if suite is Suite.CVIJOVIC:
        return verify_cvijovic(cfg.n_max, order=cfg.series_order)
    if suite is Suite.TRANSFORMS:
        return verify_transforms(cfg.n_max)
    if suite is Suite.ORACLE:
        report = verify_oracle(cfg.n_max, cap=cfg.brute_cap, jobs=cfg.jobs)
        return report.extend(verify_sturm_oracle(ORACLE_TRIALS, seed=cfg.seed))
    report = Report()
    for part in (Suite.STEMBRIDGE, Suite.SPECIAL_VALUES, Suite.CVIJOVIC, Suite.TRANSFORMS, Suite.ORACLE):
        report.extend(run_suite(part, cfg))
    return report


def cmd_verify(cfg: RunConfig) -> int:
    assert cfg.suite is not None
    report = run_suite(cfg.suite, cfg)
    write_report(report, cfg.output_format.value, cfg.output_path)
    if not report.passed:
        logger.warning(f"{len(report.failures)} of {len(report.checks)} check(s) failed")
        return EXIT_FAIL
    return EXIT_PASS


def certify_one(check: CheckKind, n: int, samples: int, seed: int) -> Union[List[Certificate], Report]:
    """All claims of one kind at one n."""
    if check is CheckKind.RZ:
        d_n = eulerian_fast(CoxeterType.D, n)
        return [certify_real_rooted(d_n, Region.negative_axis(), label=f"D_{n} in (-inf,0)")]
    if check is CheckKind.INTERLEAVE:
        p_n, p_prev = family_poly(FamilyTag.PTILDE, n), family_poly(FamilyTag.PTILDE, n - 1)
        q_n, q_prev = family_poly(FamilyTag.QTILDE, n), family_poly(FamilyTag.QTILDE, n - 1)
        a_n, a_prev = family_poly(FamilyTag.A, n), family_poly(FamilyTag.A, n - 1)
        b_n, b_prev = family_poly(FamilyTag.B, n), family_poly(FamilyTag.B, n - 1)
        return [
            check_interleaving(q_n, p_n, strict=True, names=(f"Qtilde_{n}", f"Ptilde_{n}")),
            check_interleaving(p_prev, p_n, names=(f"Ptilde_{n - 1}", f"Ptilde_{n}")),
            check_interleaving(q_prev, q_n, names=(f"Qtilde_{n - 1}", f"Qtilde_{n}")),
            certify_real_rooted(p_n, Region.closed_interval(-1, 1), label=f"Ptilde_{n} in [-1,1]"),
            certify_real_rooted(q_n, Region.open_interval(-1, 1), label=f"Qtilde_{n} in (-1,1)"),
            check_interleaving(a_prev, a_n, names=(f"a_{n - 1}", f"a_{n}")),
            check_interleaving(b_prev, b_n, names=(f"b_{n - 1}", f"b_{n}")),
            check_interleaving(b_n, a_n, strict=True, names=(f"b_{n}", f"a_{n}")),
        ]
    if check is CheckKind.COMPAT:
        small = [family_poly(FamilyTag.A, n - 1), family_poly(FamilyTag.B, n), family_poly(FamilyTag.D, n)]
        big = [
            eulerian_fast(CoxeterType.A, n - 1),
            eulerian_fast(CoxeterType.B, n),
            eulerian_fast(CoxeterType.D, n),
        ]
        return [
            check_compatibility(small, samples, seed, names=[f"a_{n - 1}", f"b_{n}", f"d_{n}"]),
            check_compatibility(big, samples, seed, names=[f"A_{n - 1}", f"B_{n}", f"D_{n}"]),
        ]
    if check is CheckKind.CHAINS:
        return zero_chain_report(n)
    return sign_pattern_report(n)


def cmd_certify(cfg: RunConfig) -> int:
    assert cfg.check is not None
    if cfg.n is not None:
        ns = [cfg.n]
    else:
        start = 1 if cfg.check in (CheckKind.CHAINS, CheckKind.SIGNS) else 2
        ns = list(range(start, cfg.n_max + 1))
    worker = partial(certify_one, cfg.check, samples=cfg.samples, seed=cfg.seed)
    if cfg.jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as executor:
            results = list(executor.map(worker, ns))
    else:
        results = [worker(n) for n in ns]

    if cfg.check in (CheckKind.CHAINS, CheckKind.SIGNS):
        report = Report()
        for part in results:
            assert isinstance(part, Report)
            report.extend(part)
        write_report(report, cfg.output_format.value, cfg.output_path)
        passed = report.passed
    else:
        certificates = [c for part in results for c in part]  # type: ignore[union-attr]
        write_certificates(certificates, cfg.output_format.value, cfg.output_path)
        passed = all(c.passed for c in certificates)
        for c in certificates:
            if not c.passed:
                logger.warning(f"Certificate failed: {c.label}")
    return EXIT_PASS if passed else EXIT_FAIL


COMMANDS = {Command.TABLE: cmd_table, Command.VERIFY: cmd_verify, Command.CERTIFY: cmd_certify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    try:
        config = Config()
        config.setup_logging()
        cfg = build_run_config(args, config)
        return COMMANDS[cfg.command](cfg)
    except CapacityError as e:
        logger.error(f"Capacity exceeded: {e.message}")
        return EXIT_CAPACITY
    except (ConfigurationError, DomainError) as e:
        logger.error(f"Usage error: {e.message}")
        return EXIT_USAGE
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE
    except EulerCertError as e:
        logger.error(f"Verification failed: {e.message}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

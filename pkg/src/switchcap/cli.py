"""Command-line front end.

Subcommands:

* ``table``  - print rate summaries for an (orders, dims) grid.
* ``sweep``  - write the same grid as CSV or JSON for plotting.
* ``verify`` - compare the brute-force switch output and sampled rate
  against the closed forms, emitting a machine-readable report.
* ``limit``  - print the large-M saturation value with a convergence column.

Exit codes: 0 success, 1 verification failure, 2 argument error, 3 I/O
error, 4 size guard.  All randomness is controlled by ``--seed``; output is
byte-stable for identical flags and seed, for any worker count.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .capacity import CapacityReport, analytic_output_state, asymptotic_limit, holevo
from .channels import check_completeness, weyl_basis
from .errors import DimensionOutOfRangeError, DomainError, SizeGuardError
from .switch import (
    ControlAmplitudes,
    OrderSet,
    all_orders,
    apply_switch,
    build_switch_kraus,
    cyclic_orders,
    cyclically_related,
    holevo_oracle,
    random_density_matrix,
)

ANALYTIC_DIM_RANGE = (2, 64)
ORDER_RANGE = (1, 10**6)

CSV_HEADER = "m_orders,dim,chi_bits,s_min_bits,s_control_bits"


def _validate_grid(dims: tuple[int, ...], orders: tuple[int, ...]) -> None:
    if not dims:
        raise DomainError("empty dimension list")
    if not orders:
        raise DomainError("empty order list")
    lo, hi = ANALYTIC_DIM_RANGE
    for d in dims:
        if not lo <= d <= hi:
            raise DomainError(f"dimension {d} outside [{lo}, {hi}]")
    lo, hi = ORDER_RANGE
    for m in orders:
        if not lo <= m <= hi:
            raise DomainError(f"order count {m} outside [{lo}, {hi}]")


@dataclass(frozen=True)
class SweepRequest:
    """Validated parameters of a capacity grid sweep."""

    dims: tuple[int, ...]
    orders: tuple[int, ...]
    output_path: str
    format: str

    def __post_init__(self) -> None:
        _validate_grid(self.dims, self.orders)
        if self.format not in ("csv", "json"):
            raise DomainError(f"unsupported sweep format {self.format!r}")


@dataclass
class VerifyReport:
    """Outcome of one oracle-versus-closed-form comparison case."""

    n_channels: int
    dim: int
    orders_mode: str
    orders: list[list[int]]
    max_block_residual: float
    divergent_pairs: list[dict]
    kraus_residual: float
    chi_analytic: float
    chi_oracle: float
    passed: bool | None
    status: str
    wall_time_s: float


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse a comma list whose items may be integers or ``a..b`` ranges."""
    values: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if ".." in item:
            lo_text, hi_text = item.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise DomainError(f"empty range {item!r}")
            values.extend(range(lo, hi + 1))
        else:
            values.append(int(item))
    if not values:
        raise DomainError(f"no integers in {text!r}")
    return tuple(values)


def parse_permutations(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse semicolon-separated permutations, e.g. ``0,1,2;1,0,2``."""
    perms = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            perms.append(tuple(int(v) for v in chunk.split(",")))
    if not perms:
        raise DomainError(f"no permutations in {text!r}")
    return tuple(perms)


def _grid_points(dims: tuple[int, ...], orders: tuple[int, ...]) -> list[tuple[int, int]]:
    points = {(m, d) for d in dims for m in orders}
    return sorted(points, key=lambda p: (p[1], p[0]))


def _capacity_row(point: tuple[int, int]) -> CapacityReport:
    m, d = point
    return holevo(m, d)


def _compute_grid(points: list[tuple[int, int]], jobs: int) -> list[CapacityReport]:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_capacity_row, points))
    return [_capacity_row(p) for p in points]


def _rows_as_dicts(rows: list[CapacityReport]) -> list[dict]:
    return [
        {
            "m_orders": r.m_orders,
            "dim": r.dim,
            "chi_bits": r.chi,
            "s_min_bits": r.s_min,
            "s_control_bits": r.s_control,
        }
        for r in rows
    ]


def _json_document(rows: list[dict], seed: int) -> str:
    return json.dumps({"rows": rows, "meta": {"seed": seed, "version": __version__}})


def _csv_lines(rows: list[CapacityReport]) -> list[str]:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.m_orders},{r.dim},{r.chi:.12g},{r.s_min:.12g},{r.s_control:.12g}"
        )
    return lines


def cmd_table(args: argparse.Namespace) -> int:
    dims = parse_int_list(args.dims)
    orders = parse_int_list(args.orders)
    _validate_grid(dims, orders)
    rows = _compute_grid(_grid_points(dims, orders), args.jobs)
    if args.format == "json":
        print(_json_document(_rows_as_dicts(rows), args.seed))
    elif args.format == "csv":
        print("\n".join(_csv_lines(rows)))
    else:
        print(f"{'m_orders':>8} {'dim':>4} {'chi_bits':>9} {'s_min_bits':>12} {'s_control_bits':>15}")
        for r in rows:
            print(f"{r.m_orders:>8} {r.dim:>4} {r.chi:>9.4f} {r.s_min:>12.6f} {r.s_control:>15.6f}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    request = SweepRequest(
        dims=parse_int_list(args.dims),
        orders=parse_int_list(args.orders),
        output_path=args.out,
        format=args.format,
    )
    rows = _compute_grid(_grid_points(request.dims, request.orders), args.jobs)
    if request.format == "json":
        payload = _json_document(_rows_as_dicts(rows), args.seed)
    else:
        payload = "\n".join(_csv_lines(rows)) + "\n"
    if request.output_path == "-":
        sys.stdout.write(payload)
    else:
        with open(request.output_path, "w", encoding="utf-8") as handle:
            handle.write(payload)
    return 0


def run_verify_case(
    n_channels: int,
    dim: int,
    mode: str,
    perms: tuple[tuple[int, ...], ...] | None,
    tol: float,
    chi_tol: float,
    samples: int,
    seed: int,
) -> VerifyReport:
    """Compare one switch configuration against the closed-form output.

    Every control block of the brute-force output is checked against the
    closed-form block for three inputs (a basis projector, a seeded random
    mixed state, the maximally mixed state).  Blocks whose pair of orders
    are cyclic shifts of each other must agree within ``tol``; other pairs
    are measured and reported, since the closed form is not claimed for
    them.  The sampled rate is enforced against the closed-form rate within
    ``chi_tol`` only when all order pairs are cyclically related.
    """
    started = time.perf_counter()
    if mode == "cyclic":
        orders = cyclic_orders(n_channels)
    elif mode == "all":
        orders = all_orders(n_channels)
    elif mode == "explicit":
        if not perms:
            raise DomainError("explicit mode needs --perms")
        orders = OrderSet(orders=perms)
    else:
        raise DomainError(f"unknown order mode {mode!r}")
    n_channels = orders.n_channels
    m = orders.m_orders
    basis = weyl_basis(dim)
    amplitudes = ControlAmplitudes.uniform(m)

    rng = np.random.default_rng(seed)
    pure = np.zeros((dim, dim), dtype=complex)
    pure[0, 0] = 1.0
    inputs = [pure, random_density_matrix(dim, rng), np.eye(dim, dtype=complex) / dim]

    enforced = [
        (i, j)
        for i in range(m)
        for j in range(m)
        if i == j or cyclically_related(orders.orders[i], orders.orders[j])
    ]
    free = [(i, j) for i in range(m) for j in range(m) if (i, j) not in set(enforced)]

    max_block_residual = 0.0
    divergence: dict[tuple[int, int], float] = {}
    for rho in inputs:
        produced = apply_switch(orders, basis, amplitudes, rho)
        predicted = analytic_output_state(rho, m, amplitudes)
        d = dim
        for i, j in enforced:
            delta = np.abs(
                produced.block(i, j) - predicted[i * d : (i + 1) * d, j * d : (j + 1) * d]
            ).max()
            max_block_residual = max(max_block_residual, float(delta))
        for i, j in free:
            delta = np.abs(
                produced.block(i, j) - predicted[i * d : (i + 1) * d, j * d : (j + 1) * d]
            ).max()
            divergence[(i, j)] = max(divergence.get((i, j), 0.0), float(delta))

    kraus_residual = check_completeness(build_switch_kraus(orders, basis))
    chi_oracle = holevo_oracle(orders, basis, n_samples=samples, seed=seed)
    chi_analytic = holevo(m, dim).chi

    fully_cyclic = not free
    divergent_pairs = [
        {"i": i, "j": j, "deviation": dev}
        for (i, j), dev in sorted(divergence.items())
        if dev > tol
    ]
    failed = max_block_residual >= tol or (
        fully_cyclic and abs(chi_analytic - chi_oracle) >= chi_tol
    )
    if failed:
        status = "fail"
    elif divergent_pairs:
        status = "divergent-block"
    else:
        status = "pass"
    return VerifyReport(
        n_channels=n_channels,
        dim=dim,
        orders_mode=mode,
        orders=[list(o) for o in orders.orders],
        max_block_residual=max_block_residual,
        divergent_pairs=divergent_pairs,
        kraus_residual=kraus_residual,
        chi_analytic=chi_analytic,
        chi_oracle=chi_oracle,
        passed=(not failed) if fully_cyclic else None,
        status=status,
        wall_time_s=time.perf_counter() - started,
    )


def _verify_case_worker(case: tuple) -> VerifyReport:
    return run_verify_case(*case)


def cmd_verify(args: argparse.Namespace) -> int:
    perms = parse_permutations(args.perms) if args.perms else None
    if args.mode == "explicit":
        if perms is None:
            raise DomainError("explicit mode needs --perms")
        channel_counts = (len(perms[0]),)
    else:
        channel_counts = parse_int_list(args.channels)
    dims = parse_int_list(args.dim)
    cases = [
        (n, d, args.mode, perms, args.tol, args.chi_tol, args.samples, args.seed)
        for n in channel_counts
        for d in dims
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_case_worker, cases))
    else:
        reports = [_verify_case_worker(c) for c in cases]
    rows = [dataclasses.asdict(r) for r in reports]
    print(_json_document(rows, args.seed))
    return 1 if any(r.status == "fail" for r in reports) else 0


def cmd_limit(args: argparse.Namespace) -> int:
    dim = args.dim
    if dim < 2:
        raise DomainError(f"target dimension must be >= 2, got {dim}")
    limit = asymptotic_limit(dim)
    print(f"dim: {dim}")
    print(f"asymptotic_chi_bits: {limit:.12g}")
    for m in (100, 10_000, 1_000_000):
        print(f"m={m:<8d} chi_bits={holevo(m, dim).chi:.12g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchcap",
        description="Communication rates of depolarizing channels in a quantum switch.",
    )
    parser.add_argument("--version", action="version", version=f"switchcap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print the rate grid")
    table.add_argument("--dims", default="2,3", help="target dimensions, e.g. 2,3 or 2..6")
    table.add_argument("--orders", default="2..6", help="order counts, e.g. 2..6")
    table.add_argument("--format", choices=("text", "csv", "json"), default="text")
    table.add_argument("--seed", type=int, default=42)
    table.add_argument("--jobs", type=int, default=1)
    table.set_defaults(func=cmd_table)

    sweep = sub.add_parser("sweep", help="write the rate grid to a file")
    sweep.add_argument("--dims", required=True, help="target dimensions, e.g. 2..6")
    sweep.add_argument("--orders", required=True, help="order counts, e.g. 2,3,6")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--out", default="-", help="output path, or - for stdout")
    sweep.add_argument("--seed", type=int, default=42)
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="brute-force versus closed-form check")
    verify.add_argument("--channels", default="2", help="channel counts, e.g. 2,3")
    verify.add_argument("--dim", default="2", help="target dimensions, e.g. 2,3")
    verify.add_argument("--mode", choices=("cyclic", "all", "explicit"), default="cyclic")
    verify.add_argument("--perms", default=None, help="explicit orders, e.g. 0,1,2;1,0,2")
    verify.add_argument("--tol", type=float, default=1e-10)
    verify.add_argument("--chi-tol", type=float, default=1e-6)
    verify.add_argument("--samples", type=int, default=64)
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--jobs", type=int, default=1)
    verify.set_defaults(func=cmd_verify)

    limit = sub.add_parser("limit", help="large-M saturation value")
    limit.add_argument("--dim", type=int, required=True)
    limit.set_defaults(func=cmd_limit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"switchcap: size guard: {exc}", file=sys.stderr)
        return 4
    except (DomainError, DimensionOutOfRangeError, ValueError) as exc:
        print(f"switchcap: invalid arguments: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"switchcap: i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

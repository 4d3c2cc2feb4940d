"""Command line surface: enumerate, decompose, verify, count, export.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 malformed
certificate, 4 resource bound exceeded.  Output is deterministic for
identical flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .decompose import (
    count_torsion_pairs,
    decompose as peel,
    enumerate_torsion_pairs,
    residuals_agree,
)
from .intervals import model_for
from .jsonio import CertificateError
from .oracle import BoundExceededError
from .quiver import STRONG_ONE, enumerate_partitions, linear_an
from .torsion import is_ntp, is_torsion_pair
from .tube import all_tube_modules, tau_inv_tube
from .tubepairs import enumerate_tube_tps, truncated_check

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CERTIFICATE = 3
EXIT_BOUND = 4

DEFAULT_MAX_N = 6
DEFAULT_CAP = 8


def _check_bound(value: int, bound: int, what: str) -> None:
    if value > bound:
        raise BoundExceededError(f"{what} {value} exceeds the bound {bound}")


def _load_certificate(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise CertificateError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CertificateError(f"{path} is not valid JSON: {exc}") from exc
    jsonio.certificate_kind(obj)
    return obj


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def cmd_enumerate(args) -> int:
    if args.an is not None:
        _check_bound(args.an, args.max_n, "n")
        q = linear_an(args.an)
        records = [jsonio.pair_certificate(q, tp) for tp in enumerate_torsion_pairs(q)]
    else:
        _check_bound(args.tube, args.max_n, "rank")
        records = [jsonio.tube_certificate(d) for d in enumerate_tube_tps(args.tube)]
    if args.format == "json":
        _emit(args, jsonio.dumps_canonical(records))
    else:
        lines = [f"{i}: {jsonio.dumps_canonical(r)}" for i, r in enumerate(records)]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_decompose(args) -> int:
    obj = _load_certificate(args.certificate)
    if jsonio.certificate_kind(obj) != "pair":
        raise CertificateError("decompose needs a torsion pair certificate")
    q, tp = jsonio.pair_from_obj(obj)
    check = is_torsion_pair(model_for(q), tp.torsion, tp.free)
    if not check:
        raise CertificateError(f"certificate fails the torsion pair axioms: {check.reason}")
    payload: dict = {}
    if args.side in ("left", "both"):
        payload["left"] = jsonio.decomposition_to_obj(peel(q, tp, "left"))
    if args.side in ("right", "both"):
        payload["right"] = jsonio.decomposition_to_obj(peel(q, tp, "right"))
    if args.side == "both":
        payload["residuals_agree"] = residuals_agree(q, tp)
    if args.side != "both":
        payload = payload[args.side]
    _emit(args, jsonio.dumps_canonical(payload))
    return EXIT_OK


def cmd_verify(args) -> int:
    obj = _load_certificate(args.certificate)
    kind = jsonio.certificate_kind(obj)
    if kind == "pair":
        q, tp = jsonio.pair_from_obj(obj)
        check = is_torsion_pair(model_for(q), tp.torsion, tp.free)
    elif kind == "ntp":
        q, ntp = jsonio.ntp_from_obj(obj)
        check = is_ntp(model_for(q), ntp.parts)
    else:
        data = jsonio.tube_pair_from_obj(obj)
        _check_bound(args.cap, args.max_cap, "cap")
        check = truncated_check(data, args.cap)
    if check:
        _emit(args, "PASS")
        return EXIT_OK
    _emit(args, f"FAIL: {check.reason} (witness: {check.witness})")
    return EXIT_VERIFY


def cmd_count(args) -> int:
    if args.an is not None:
        _check_bound(args.an, args.max_n, "n")
        value = count_torsion_pairs(args.an, check=args.check)
    else:
        _check_bound(args.tube, args.max_n, "rank")
        data = enumerate_tube_tps(args.tube)
        if args.check:
            from .quiver import STRONG_TWO, cyclic_an

            cycle = cyclic_an(args.tube)
            by_partition = sum(
                1
                for kind in (STRONG_ONE, STRONG_TWO)
                for S in enumerate_partitions(cycle, kind, complete=True)
                if S.parts[0]
            )
            if by_partition != len(data):
                raise RuntimeError(
                    f"partition count {by_partition} disagrees with {len(data)}"
                )
        value = len(data)
    _emit(args, str(value))
    return EXIT_OK


def _dot_ar_linear(n: int) -> str:
    q = linear_an(n)
    model = model_for(q)
    lines = ["digraph ar {"]
    for X in model.objects:
        lines.append(f'  "[{X.a},{X.b}]";')
    for X in model.objects:
        if X.b > X.a:  # drop the socle
            lines.append(f'  "[{X.a},{X.b}]" -> "[{X.a},{X.b - 1}]";')
        if X.a > 1:  # extend at the top
            lines.append(f'  "[{X.a},{X.b}]" -> "[{X.a - 1},{X.b}]";')
    lines.append("}")
    return "\n".join(lines)


def _dot_ar_tube(rank: int, cap: int) -> str:
    lines = ["digraph ar {"]
    for X in all_tube_modules(rank, cap):
        lines.append(f'  "U({X.socle},{X.length})";')
    for X in all_tube_modules(rank, cap):
        if X.length > 1:
            down = tau_inv_tube(X)
            lines.append(f'  "U({X.socle},{X.length})" -> "U({down.socle},{X.length - 1})";')
        if X.length < cap:
            lines.append(f'  "U({X.socle},{X.length})" -> "U({X.socle},{X.length + 1})";')
    lines.append("}")
    return "\n".join(lines)


def _dot_lattice(n: int) -> str:
    q = linear_an(n)
    classes = sorted(
        (tp.torsion for tp in enumerate_torsion_pairs(q)),
        key=lambda T: (len(T), tuple(sorted((X.a, X.b) for X in T))),
    )

    def label(T) -> str:
        return "{" + ",".join(f"[{X.a},{X.b}]" for X in sorted(T)) + "}"

    lines = ["digraph lattice {"]
    for T in classes:
        lines.append(f'  "{label(T)}";')
    for low in classes:
        for high in classes:
            if low < high and not any(low < mid < high for mid in classes):
                lines.append(f'  "{label(low)}" -> "{label(high)}";')
    lines.append("}")
    return "\n".join(lines)


def cmd_export(args) -> int:
    if args.an is not None:
        _check_bound(args.an, args.max_n, "n")
        text = _dot_ar_linear(args.an) if args.dot == "ar" else _dot_lattice(args.an)
    else:
        _check_bound(args.tube, args.max_n, "rank")
        if args.dot == "lattice":
            raise ValueError("lattice export is only available for linear quivers")
        text = _dot_ar_tube(args.tube, args.cap)
    _emit(args, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsionpairs",
        description="Enumerate, verify and decompose torsion pairs on A-type "
        "path algebras and tubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_target(p, tube_required=False):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--an", type=int, metavar="N", help="linear quiver with N vertices")
        group.add_argument("--tube", type=int, metavar="N", help="tube of rank N")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="size bound")

    p = sub.add_parser("enumerate", help="list all torsion pairs")
    add_target(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", help="peel a torsion pair certificate")
    p.add_argument("certificate")
    p.add_argument("--side", choices=("left", "right", "both"), default="left")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("certificate")
    p.add_argument("--cap", type=int, default=6, help="tube truncation cap")
    p.add_argument("--max-cap", type=int, default=DEFAULT_CAP, help="cap bound")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="count torsion pairs")
    add_target(p)
    p.add_argument("--check", action="store_true", help="cross-verify the count")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("export", help="DOT export of the AR quiver or the lattice")
    add_target(p)
    p.add_argument("--dot", choices=("ar", "lattice"), required=True)
    p.add_argument("--cap", type=int, default=4, help="tube truncation cap")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CertificateError as exc:
        print(f"certificate error: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATE
    except BoundExceededError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line interface.

Every subcommand reads a graph file (or ``-`` for stdin) in the plain text
format, takes the phase through ``--alpha``, and prints one JSON object on
stdout.  ``search-cospectral`` is the exception: it takes no graph file and
streams one JSON object per hit.

Exit codes: 0 success, 2 bad input of any sort, 1 a numerical check failed.
Floats are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

import numpy as np

from .cospectral import (
    CospectralReport,
    numeric_cospectral,
    search_cospectral,
)
from .errors import NumericalError
from .expansion import char_poly_expansion
from .graphs import EdgeKind, MixedGraph, parse_graph, serialize_graph
from .monographs import (
    AttachDirection,
    Attachment,
    MonographKind,
    extend_monograph,
    is_monograph,
    monograph_partition,
    radius_equality_analysis,
    transfer_eigenvectors,
)
from .phases import ALPHA_ONE, UnitPhase, make_alpha
from .spectra import (
    DEFAULT_TOL,
    EigenPair,
    build_hermitian,
    char_poly,
    eigen_decomposition,
    verify_eigenpair,
)

__all__ = ["main"]


def _round_floats(obj: Any) -> Any:
    """12 significant digits, applied recursively; bools stay bools."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _emit(obj: Any) -> None:
    print(json.dumps(_round_floats(obj)))


def _read_graph(path: str) -> MixedGraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _edges_json(graph: MixedGraph) -> list[list[Any]]:
    return [
        ["digon" if e.kind is EdgeKind.DIGON else "arc", e.u, e.v]
        for e in graph.sorted_edges
    ]


def _vector_json(vec: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in vec]


def _spectra_payload(graph: MixedGraph, alpha: UnitPhase) -> dict[str, Any]:
    matrix = build_hermitian(graph, alpha)
    spectrum, _ = eigen_decomposition(matrix)
    poly = char_poly(matrix)
    return {
        "alpha": str(alpha),
        "eigenvalues": list(spectrum.values),
        "char_poly": list(poly.coefficients),
        "spectral_radius": spectrum.radius,
    }


def _cmd_spectrum(args: argparse.Namespace) -> None:
    graph = _read_graph(args.graph)
    _emit(_spectra_payload(graph, make_alpha(args.alpha)))


def _cmd_charpoly(args: argparse.Namespace) -> None:
    graph = _read_graph(args.graph)
    alpha = make_alpha(args.alpha)
    payload = _spectra_payload(graph, alpha)
    if args.oracle:
        payload["char_poly"] = list(char_poly_expansion(graph, alpha).coefficients)
        payload["method"] = "expansion"
    else:
        payload["method"] = "faddeev-leverrier"
    _emit(payload)


def _kind(args: argparse.Namespace) -> MonographKind:
    return MonographKind.FIRST if args.kind == 1 else MonographKind.SECOND


def _cmd_monograph(args: argparse.Namespace) -> None:
    graph = _read_graph(args.graph)
    alpha = make_alpha(args.alpha)
    cert = is_monograph(graph, alpha, _kind(args))
    payload: dict[str, Any] = {
        "alpha": str(alpha),
        "kind": args.kind,
        "is_monograph": cert.verdict,
        "potential": None,
        "violation": None,
    }
    if cert.verdict:
        assert cert.potential is not None
        payload["potential"] = {
            str(v): str(p) for v, p in enumerate(cert.potential)
        }
    else:
        assert cert.violation is not None
        payload["violation"] = list(cert.violation.vertices)
    _emit(payload)


def _cmd_partition(args: argparse.Namespace) -> None:
    graph = _read_graph(args.graph)
    alpha = make_alpha(args.alpha)
    part = monograph_partition(graph, alpha, _kind(args))
    _emit(
        {
            "alpha": str(alpha),
            "kind": args.kind,
            "classes": {str(p): list(vs) for p, vs in part.classes.items()},
        }
    )


def _parse_basis(text: str, n: int) -> list[EigenPair]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"basis is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ValueError("basis must be a JSON array of {lambda, vector}")
    pairs = []
    for item in data:
        if not isinstance(item, dict) or "lambda" not in item or "vector" not in item:
            raise ValueError("each basis entry needs 'lambda' and 'vector'")
        raw = item["vector"]
        if len(raw) != n:
            raise ValueError(f"vector length {len(raw)} does not match n={n}")
        vec = np.empty(n, dtype=np.complex128)
        for i, entry in enumerate(raw):
            if isinstance(entry, (int, float)):
                vec[i] = complex(entry, 0.0)
            else:
                re_part, im_part = entry
                vec[i] = complex(float(re_part), float(im_part))
        pairs.append(EigenPair(float(item["lambda"]), vec))
    return pairs


def _cmd_transfer(args: argparse.Namespace) -> None:
    graph = _read_graph(args.graph)
    alpha = make_alpha(args.alpha)
    if args.basis is None:
        _, basis = eigen_decomposition(build_hermitian(graph, ALPHA_ONE))
        basis = list(basis)
    else:
        if args.basis == "-":
            if args.graph == "-":
                raise ValueError("graph and basis cannot both come from stdin")
            text = sys.stdin.read()
        else:
            with open(args.basis, "r", encoding="utf-8") as fh:
                text = fh.read()
        basis = _parse_basis(text, graph.n)
    moved = transfer_eigenvectors(graph, alpha, basis)
    residual = max(
        (verify_eigenpair(graph, alpha, pair) for pair in moved), default=0.0
    )
    _emit(
        {
            "alpha": str(alpha),
            "pairs": [
                {"lambda": pair.eigenvalue, "vector": _vector_json(pair.vector)}
                for pair in moved
            ],
            "max_residual": residual,
        }
    )


def _parse_int_list(text: str) -> list[int]:
    parts = [p for chunk in text.split(",") for p in chunk.split()]
    try:
        return [int(p) for p in parts if p]
    except ValueError:
        raise ValueError(f"expected a comma-separated vertex list, got {text!r}") from None


def _parse_attachment(text: str) -> Attachment:
    """Format: optional label, targets, direction, e.g. ``x: 0,1 out``."""
    body = text.split(":", 1)[1] if ":" in text else text
    tokens = body.split()
    if not tokens:
        raise ValueError(f"empty attachment spec {text!r}")
    direction_word = tokens[-1].lower()
    if direction_word not in ("out", "in"):
        raise ValueError(
            f"attachment {text!r} must end with 'out' or 'in', got {tokens[-1]!r}"
        )
    targets = _parse_int_list(" ".join(tokens[:-1]))
    if not targets:
        raise ValueError(f"attachment {text!r} names no target vertices")
    direction = AttachDirection.OUT if direction_word == "out" else AttachDirection.IN
    return Attachment(frozenset(targets), direction)


def _cmd_extend(args: argparse.Namespace) -> None:
    graph = _read_graph(args.graph)
    alpha = make_alpha(args.alpha)
    base = _parse_int_list(args.subgraph)
    attachments = [_parse_attachment(a) for a in args.attach]
    grown = extend_monograph(graph, alpha, base, attachments)
    _emit(
        {
            "alpha": str(alpha),
            "n": grown.n,
            "edges": _edges_json(grown),
            "text": serialize_graph(grown),
        }
    )


def _cmd_radius(args: argparse.Namespace) -> None:
    graph = _read_graph(args.graph)
    alpha = make_alpha(args.alpha)
    report = radius_equality_analysis(graph, alpha, tol=args.tol)
    _emit(
        {
            "alpha": str(alpha),
            "rho": report.rho,
            "delta": report.delta,
            "equal": report.equal,
            "regular": report.regular,
            "mono1": report.mono1,
            "mono2": report.mono2,
            "theorem_consistent": report.theorem_consistent,
        }
    )


def _report_json(report: CospectralReport) -> dict[str, Any]:
    return {
        "alpha1": str(report.alpha1),
        "alpha2": str(report.alpha2),
        "cospectral": report.cospectral,
        "max_gap": report.max_gap,
        "flags": report.flags.as_dict(),
    }


def _two_alphas(args: argparse.Namespace) -> tuple[UnitPhase, UnitPhase]:
    if len(args.alpha) != 2:
        raise ValueError("exactly two --alpha values are required")
    return make_alpha(args.alpha[0]), make_alpha(args.alpha[1])


def _cmd_cospectral(args: argparse.Namespace) -> None:
    graph = _read_graph(args.graph)
    a1, a2 = _two_alphas(args)
    _emit(_report_json(numeric_cospectral(graph, a1, a2, tol=args.tol)))


def _cmd_search(args: argparse.Namespace) -> None:
    a1, a2 = _two_alphas(args)
    hits = search_cospectral(
        args.n, a1, a2, mode=args.mode, count=args.count, seed=args.seed, tol=args.tol
    )
    for code, graph, report in hits:
        _emit(
            {
                "code": code,
                "n": graph.n,
                "edges": _edges_json(graph),
                "report": _report_json(report),
            }
        )


def _add_graph_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("graph", help="path to a graph file, or - for stdin")


def _add_alpha_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--alpha",
        required=True,
        help="phase spec: 1, i, gamma, omega, root:k/n or angle:<radians>",
    )


def _add_kind_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--kind", type=int, choices=(1, 2), required=True)


def _add_tol_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=DEFAULT_TOL)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermix",
        description="Spectra of mixed graphs through unit-phase Hermitian matrices.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("spectrum", help="eigenvalues, coefficients and radius")
    _add_alpha_arg(p)
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_spectrum)

    p = subs.add_parser("charpoly", help="characteristic polynomial")
    _add_alpha_arg(p)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="use the subgraph expansion instead of the trace recursion",
    )
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_charpoly)

    p = subs.add_parser("monograph", help="decide the monograph property")
    _add_alpha_arg(p)
    _add_kind_arg(p)
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_monograph)

    p = subs.add_parser("partition", help="vertex classes by potential")
    _add_alpha_arg(p)
    _add_kind_arg(p)
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_partition)

    p = subs.add_parser("transfer", help="move an eigenbasis onto the phase matrix")
    _add_alpha_arg(p)
    p.add_argument(
        "--basis",
        help="JSON array of {lambda, vector}; default: computed from the underlying graph",
    )
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_transfer)

    p = subs.add_parser("extend", help="attach new vertices to a monograph")
    _add_alpha_arg(p)
    p.add_argument("--subgraph", required=True, help="base vertices, e.g. 0,1")
    p.add_argument(
        "--attach",
        action="append",
        required=True,
        help="one new vertex: 'targets direction', e.g. 'x: 0,1 out' (repeatable)",
    )
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_extend)

    p = subs.add_parser("radius", help="spectral radius against the maximum degree")
    _add_alpha_arg(p)
    _add_tol_arg(p)
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_radius)

    p = subs.add_parser("cospectral", help="compare one graph under two phases")
    p.add_argument("--alpha", action="append", required=True)
    _add_tol_arg(p)
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_cospectral)

    p = subs.add_parser(
        "search-cospectral", help="find cospectral graphs, streamed as JSON lines"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", action="append", required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    _add_tol_arg(p)
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""The ``affine-cells`` command line tool.

Every subcommand prints one deterministic document: JSON (sorted keys) or a
short text rendering.  Exit codes are 0 on success, 1 when a ``verify`` suite
has a failing assertion and 2 for usage errors (bad partitions, malformed
words, frontier exceeded).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from .cells import (
    CellRecognitionError,
    cell_leading_matrices,
    cell_of,
    pi_by_paths,
    PiRepresentation,
    representation,
)
from .hecke import FrontierError, HeckeElem, KLCache, KLCacheError, cache_file, kl_basis
from .lambda_geometry import (
    is_dominant,
    lambda_data,
    lambda_weight_from_string,
    length_tau_conj,
    m_gamma,
    m_gamma_decomposition,
)
from .plancherel import default_truncation, factor_system, plancherel_pairing, series_sum
from .rings import LaurentQPoly, RingMatrix, dumps
from .satake import f_lambda
from .symfunc import SymmetryError, expand_in_monomials, is_invariant, schur
from .verify import VerifyConfig, run_suite, suite_names
from .weyl import (
    ExtAffineElement,
    Partition,
    element_to_string,
    element_word_string,
    elements_by_length,
    from_word,
    inverse,
    length,
    partition_from_string,
    perm_reduced_word,
    word_to_string,
)

CACHE_ENV = "AFFINE_CELLS_CACHE_DIR"


class UsageError(ValueError):
    """Bad command line input; reported with exit code 2."""


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_word(text: str, n: int) -> tuple[list[int], int]:
    """``"2,0,1,s2"`` -> ``([2, 0, 1], 2)``; an empty string or ``e`` is the identity."""
    cleaned = text.strip()
    if cleaned in ("", "e"):
        return [], 0
    letters: list[int] = []
    power = 0
    tokens = [t.strip() for t in cleaned.split(",")]
    for position, token in enumerate(tokens):
        if "s" in token:
            head, _, tail = token.partition("s")
            if position != len(tokens) - 1 or not tail.isdigit():
                raise UsageError(f"malformed word {text!r}: the s<k> suffix must come last")
            power = int(tail)
            token = head
            if not token:
                continue
        if not token.lstrip("-").isdigit():
            raise UsageError(f"malformed word {text!r}: {token!r} is not a generator index")
        index = int(token)
        if not 0 <= index <= n:
            raise UsageError(f"generator index {index} is outside 0..{n}")
        letters.append(index)
    return letters, power % (n + 1)


def resolve_rank(args: argparse.Namespace, need_lambda: bool = False) -> tuple[int, Partition | None]:
    lam = None
    if getattr(args, "lam", None):
        try:
            lam = partition_from_string(args.lam)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    n = args.n
    if n is None and lam is not None:
        n = lam.n
    if n is None:
        raise UsageError("--n is required (or give --lambda)")
    if n < 1:
        raise UsageError("--n must be at least 1")
    if lam is not None and lam.n != n:
        raise UsageError(f"partition {lam} is not a partition of n+1 = {n + 1}")
    if need_lambda and lam is None:
        raise UsageError("--lambda is required for this command")
    return n, lam


def element_from_args(args: argparse.Namespace, n: int, attribute: str = "word") -> ExtAffineElement:
    letters, power = parse_word(getattr(args, attribute) or "", n)
    return from_word(n, letters, power)


def parse_gamma(lam: Partition, text: str | None) -> tuple[int, ...]:
    if text is None:
        raise UsageError("--gamma is required for this command")
    try:
        weight = lambda_weight_from_string(lam, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return weight.a


def representation_for(lam: Partition, order_text: str | None) -> PiRepresentation:
    if not order_text:
        return representation(lam)
    n = lam.n
    order = []
    for chunk in order_text.split(";"):
        letters, power = parse_word(chunk, n)
        w = from_word(n, letters, power)
        if any(w.wt) or power:
            raise UsageError(f"basis entry {chunk!r} is not a finite permutation")
        order.append(w.lin)
    try:
        return PiRepresentation(lam, order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cache_dir_from(args: argparse.Namespace) -> str | None:
    return args.cache_dir or os.environ.get(CACHE_ENV) or None


def element_summary(w: ExtAffineElement) -> dict[str, Any]:
    return {
        "element": element_to_string(w),
        "word": element_word_string(w),
        "length": length(w),
        "inverse": element_word_string(inverse(w)),
    }


def matrix_payload(rep: PiRepresentation, matrix: RingMatrix) -> dict[str, Any]:
    return matrix.to_json(rep.labels(), rep.n)


# ---------------------------------------------------------------------------
# commands


def cmd_group(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    n, _lam = resolve_rank(args)
    payload: dict[str, Any] = {"n": n}
    text = []
    if args.word is not None:
        w = element_from_args(args, n)
        payload.update(element_summary(w))
        text.append(f"{payload['word']}  length {payload['length']}  element {payload['element']}")
    if args.max_length is not None:
        counts = [len(layer) for layer in elements_by_length(n, args.max_length)]
        payload["layer_sizes"] = counts
        payload["extended_count"] = sum(counts) * (n + 1)
        text.append("layer sizes " + " ".join(str(c) for c in counts))
    if len(payload) == 1:
        raise UsageError("group needs --word or --max-length")
    return payload, "\n".join(text)


def cmd_pi(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    n, lam = resolve_rank(args, need_lambda=True)
    assert lam is not None
    rep = representation_for(lam, args.order)
    letters, power = parse_word(args.word or "", n)
    if args.method == "paths":
        matrix = pi_by_paths(lam, letters, power, rep.order)
    else:
        matrix = rep.pi_word(letters, power)
    payload = matrix_payload(rep, matrix)
    payload["word"] = word_to_string(letters, power)
    return payload, matrix.to_text(rep.labels())


def cmd_leading(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    n, lam = resolve_rank(args, need_lambda=True)
    assert lam is not None
    rep = representation_for(lam, args.order)
    w = element_from_args(args, n)
    matrix = rep.leading_matrix(w)
    payload = matrix_payload(rep, matrix)
    payload["word"] = element_word_string(w)
    return payload, matrix.to_text(rep.labels())


def cmd_cell(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    n, _lam = resolve_rank(args)
    w = element_from_args(args, n)
    lam = cell_of(w)
    rep = representation(lam)
    leading = cell_leading_matrices(w)[lam]
    payload = element_summary(w)
    payload.update({"n": n, "cell": list(lam), "a": lambda_data(lam).a_lam, "leading": matrix_payload(rep, leading)})
    return payload, f"{payload['word']} lies in the cell of ({lam}), a = {payload['a']}"


def cmd_schur(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    _n, lam = resolve_rank(args, need_lambda=True)
    assert lam is not None
    a = parse_gamma(lam, args.gamma)
    if not is_dominant(lam, a):
        raise UsageError(f"lambda-weight {a} is not dominant")
    s = schur(lam, a)
    payload = {
        "lambda": list(lam),
        "gamma": list(a),
        "terms": s.to_json(),
        "invariant": is_invariant(s),
        "monomial_expansion": [{"gamma": list(k), "c": c} for k, c in expand_in_monomials(s).items()],
    }
    return payload, str(s)


def cmd_mgamma(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    _n, lam = resolve_rank(args, need_lambda=True)
    assert lam is not None
    a = parse_gamma(lam, args.gamma)
    if not is_dominant(lam, a):
        raise UsageError(f"lambda-weight {a} is not dominant")
    m = m_gamma(lam, a)
    x, g, y = m_gamma_decomposition(lam, a)
    payload = element_summary(m)
    payload.update(
        {
            "lambda": list(lam),
            "gamma": list(a),
            "conjugated_tau": element_word_string(g),
            "conjugated_tau_length": length(g),
            "formula_length": length_tau_conj(lam, a),
            "left": word_to_string(perm_reduced_word(x)),
            "right": word_to_string(perm_reduced_word(y)),
        }
    )
    return payload, f"m_gamma = {payload['word']}  length {payload['length']}"


def cmd_satake(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    n, lam = resolve_rank(args, need_lambda=True)
    assert lam is not None
    w = element_from_args(args, n)
    if args.kl:
        h = kl_basis(n, args.max_length or 12, cache_dir_from(args)).C(w)
    else:
        h = HeckeElem.T(w)
    value = f_lambda(h, lam)
    payload = value.to_json()
    payload.update({"word": element_word_string(w), "basis": "C" if args.kl else "T", "symmetric": value.is_symmetric})
    return payload, f"f_lambda = {value.value}"


def cmd_plancherel(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    n, lam = resolve_rank(args)
    truncation = args.truncation or default_truncation(n)
    u = element_from_args(args, n)
    v = element_from_args(args, n, "word2") if args.word2 is not None else u
    partitions = [lam] if lam is not None else _all_partitions(n)
    h1, h2 = HeckeElem.T(u), HeckeElem.T(v)
    series = {mu: plancherel_pairing(h1, h2, mu, truncation) for mu in partitions}
    per_lambda = []
    text = []
    for mu, value in series.items():
        poly = value.value
        per_lambda.append(
            {
                "lambda": list(mu),
                "series": poly.to_json(),
                "degree": None if poly.is_zero() else poly.deg(),
                "factors": factor_system(mu).to_json(),
            }
        )
        text.append(f"<T_u, T_v>_({mu}) = {poly} + O(q^-{truncation + 1})")
    payload: dict[str, Any] = {
        "u": element_word_string(u),
        "v": element_word_string(v),
        "truncation": truncation,
        "per_lambda": per_lambda,
    }
    if lam is None:
        total = series_sum(series, truncation)
        expected = LaurentQPoly.const(1) if u == v else LaurentQPoly()
        payload["sum"] = total.to_json()
        payload["delta_holds"] = total == expected
        text.append(f"sum = {total}  delta check {'holds' if total == expected else 'FAILS'}")
    return payload, "\n".join(text)


def _all_partitions(n: int) -> list[Partition]:
    from .weyl import partitions_of

    return partitions_of(n + 1)


def cmd_verify(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    if args.n is not None or args.lam:
        # the suites fix their own ranks; --n/--lambda only need to be consistent
        resolve_rank(args)
    config = VerifyConfig(
        max_length=args.max_length or VerifyConfig.max_length,
        truncation=args.truncation or VerifyConfig.truncation,
        height=args.height or VerifyConfig.height,
        cache_dir=cache_dir_from(args),
    )
    try:
        reports = run_suite(args.suite, config)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    lines = []
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        label = f"criterion {report.criterion}" if report.criterion else report.name
        lines.append(f"{status} {report.name} ({label}, {report.seconds:.1f}s)")
        for check in report.checks:
            lines.append(f"  {'ok  ' if check.passed else 'FAIL'} {check.name}" + (f": {check.detail}" if check.detail else ""))
        if not report.within_budget:
            lines.append(f"  FAIL runtime {report.seconds:.1f}s exceeds {report.budget:.0f}s")
    payload = {
        "suite": args.suite,
        "passed": all(r.passed for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    return payload, "\n".join(lines)


def cmd_cache(args: argparse.Namespace) -> tuple[dict[str, Any], str]:
    directory = cache_dir_from(args)
    if directory is None:
        raise UsageError(f"cache commands need --cache-dir or ${CACHE_ENV}")
    root = Path(directory)
    files = sorted(root.glob("klcache-n*.txt")) if root.exists() else []
    if args.action == "clear":
        for path in files:
            path.unlink()
        return {"cache_dir": str(root), "removed": [p.name for p in files]}, f"removed {len(files)} file(s)"
    entries = []
    for path in files:
        n = int(path.stem.split("-n")[-1])
        stats = KLCache(n, cache_file(root, n)).stats()
        entries.append({"file": path.name, "n": n, "bytes": path.stat().st_size, **stats})
    text = "\n".join(f"{e['file']}: {e['elements']} elements, {e['polynomials']} polynomials" for e in entries) or "empty"
    return {"cache_dir": str(root), "files": entries}, text


COMMANDS = {
    "group": cmd_group,
    "pi": cmd_pi,
    "leading": cmd_leading,
    "cell": cmd_cell,
    "schur": cmd_schur,
    "mgamma": cmd_mgamma,
    "satake": cmd_satake,
    "plancherel": cmd_plancherel,
    "verify": cmd_verify,
    "cache": cmd_cache,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank parameter: the group is of type A_n")
    common.add_argument("--lambda", dest="lam", help="partition of n+1, e.g. 2,2")
    common.add_argument("--word", help="generator indices 0..n, comma separated, optional s<k> suffix for sigma^k")
    common.add_argument("--max-length", type=int, help="length frontier")
    common.add_argument("--truncation", type=int, help="Plancherel truncation floor M (series exact to q^-M)")
    common.add_argument("--height", type=int, help="height bound for dominant lambda-weights")
    common.add_argument("--cache-dir", help=f"KL cache directory (default ${CACHE_ENV})")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--order", help="basis override: words of ^lam W separated by ';'")

    parser = argparse.ArgumentParser(prog="affine-cells", description="Exact computations with cells of extended affine type A.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("group", parents=[common], help="element data and length layers")
    pi = sub.add_parser("pi", parents=[common], help="matrix of pi_lam(T_w)")
    pi.add_argument("--method", choices=("generators", "paths"), default="generators")
    sub.add_parser("leading", parents=[common], help="leading matrix c_lam(w)")
    sub.add_parser("cell", parents=[common], help="two-sided cell of w")
    schur_parser = sub.add_parser("schur", parents=[common], help="G_lam-Schur function")
    schur_parser.add_argument("--gamma", help="lambda-weight coordinates, e.g. 5,1")
    mgamma = sub.add_parser("mgamma", parents=[common], help="the element m_gamma")
    mgamma.add_argument("--gamma", help="lambda-weight coordinates, e.g. 2,1")
    satake = sub.add_parser("satake", parents=[common], help="f_lam(T_w) or f_lam(C_w)")
    satake.add_argument("--kl", action="store_true", help="use the KL element C_w instead of T_w")
    plancherel = sub.add_parser("plancherel", parents=[common], help="truncated Plancherel pairing <T_u, T_v>")
    plancherel.add_argument("--word2", help="second element v (defaults to u)")
    verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=suite_names())
    cache = sub.add_parser("cache", parents=[common], help="KL cache management")
    cache.add_argument("action", choices=("stats", "clear"))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.truncation is not None and args.truncation < 1:
        parser.error("--truncation must be at least 1")
    try:
        payload, text = COMMANDS[args.command](args)
    except (UsageError, FrontierError, KLCacheError, CellRecognitionError, SymmetryError) as exc:
        print(f"affine-cells: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"affine-cells: error: {exc}", file=sys.stderr)
        return 2
    print(dumps(payload) if args.format == "json" else text)
    if args.command == "verify" and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a size limit
was hit. ``--format json`` prints ``{"status": ..., "payload": ...}`` with a
fixed key order; rationals are ``"p/q"`` strings and factored integers are
``"2^23 * 5"`` strings.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import _core
from .combinat import enumerate_monomials
from .exactnum import FactoredInteger, binom, format_rational
from .homobasis import MAX_HBASIS_SIZE, gram_h, h_poly, transition_check
from .hyperkahler import describe, hk_report, registry, torsion_report
from .lattices import (
    DegenerateLatticeError,
    Embedding,
    Lattice,
    complement_discriminant,
    discriminant,
    double_complement,
    orthogonal_complement,
    quotient_torsion,
    saturation,
)
from .linalg import SizeLimitError, det_exact
from .orthopoly import d_coeff, norm_hat, p_poly
from .symform import GramMatrix, induced_gram
from .theta import MAX_VERIFY_BASIS, det_closed_form, gram_exponent, theta, verify_maintheorem

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3


class VerificationFailed(Exception):
    def __init__(self, payload, text):
        super().__init__("verification failed")
        self.payload = payload
        self.text = text


def _rat(x) -> str:
    return format_rational(x)


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# subcommands: each returns (payload, text) or raises ------------------------


def cmd_theta(args):
    t = theta(args.d, args.k)
    payload = {
        "d": args.d,
        "k": args.k,
        "theta": str(t),
        "value": str(int(t)),
        "exponent_of_detG": gram_exponent(args.d, args.k),
    }
    # squarefree values read better as plain integers (105 rather than 3 * 5 * 7)
    squarefree = all(e == 1 for e in t.factors.values())
    text = str(int(t)) if squarefree else str(t)
    if args.value and not squarefree:
        text += f"\n{int(t)}"
    return payload, text


def _random_gram(rng: random.Random, n: int) -> GramMatrix:
    while True:
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-5, 5)
        if det_exact(rows) != 0:
            return GramMatrix(rows)


def cmd_verify(args):
    rng = random.Random(args.seed)
    theta_fn = theta
    if args.corrupt_theta:
        theta_fn = lambda d, k: theta(d, k) * 2  # noqa: E731
    for d in range(args.dmin, args.dmax + 1):
        for k in range(args.kmin, args.kmax + 1):
            if binom(k + d, d) > MAX_VERIFY_BASIS:
                raise SizeLimitError(
                    f"d={d}, k={k}: basis size {binom(k + d, d)} exceeds {MAX_VERIFY_BASIS}"
                )
    shapes = []
    lines = []
    all_ok = True
    for d in range(args.dmin, args.dmax + 1):
        for k in range(args.kmin, args.kmax + 1):
            samples = []
            for _ in range(args.samples):
                g = _random_gram(rng, d + 1)
                rep = verify_maintheorem(g, k, theta_fn)
                samples.append(
                    {
                        "gram": [[_rat(x) for x in row] for row in g.rows],
                        "lhs": _rat(rep.lhs),
                        "rhs": _rat(rep.rhs),
                        "equal": rep.equal,
                    }
                )
            ok = all(s["equal"] for s in samples)
            all_ok &= ok
            shapes.append({"d": d, "k": k, "equal": ok, "samples": samples})
            last = samples[-1] if samples else {"lhs": "-", "rhs": "-"}
            lines.append(
                f"d={d} k={k} samples={len(samples)} "
                f"{'PASS' if ok else 'FAIL'} lhs={last['lhs']} rhs={last['rhs']}"
            )
    payload = {"seed": args.seed, "all_equal": all_ok, "shapes": shapes}
    text = "\n".join(lines + [f"all equal: {all_ok}"])
    if not all_ok:
        raise VerificationFailed(payload, text)
    return payload, text


def cmd_sym_gram(args):
    g = GramMatrix.from_json(_load_json(args.gram))
    form = induced_gram(g, args.k)
    payload = {
        "d": form.d,
        "k": form.k,
        "basis": [str(a) for a in form.basis],
        "gram": {"size": form.size, "rows": [[_rat(x) for x in row] for row in form.gram]},
    }
    lines = ["basis: " + " ".join(str(a) for a in form.basis)]
    lines += [" ".join(_rat(x) for x in row) for row in form.gram]
    if args.det:
        lhs = det_exact(form.gram)
        rhs = det_closed_form(det_exact(g.tolist()), form.d, form.k)
        payload["det"] = _rat(lhs)
        payload["closed_form"] = _rat(rhs)
        payload["equal"] = lhs == rhs
        lines.append(f"det = {_rat(lhs)}")
        lines.append(f"closed form = {_rat(rhs)}")
        if lhs != rhs:
            raise VerificationFailed(payload, "\n".join(lines))
    return payload, "\n".join(lines)


def cmd_orthopoly(args):
    p = p_poly(args.n, args.m)
    payload = {
        "n": args.n,
        "m": args.m,
        "poly": str(p),
        "coefficients": [_rat(c) for c in p.coeffs],
    }
    lines = [str(p)]
    if 2 * args.n <= args.m - 1:
        payload["norm_hat"] = _rat(norm_hat(args.n, args.m))
        if args.n >= 1:
            payload["d_coeff"] = _rat(d_coeff(args.n, args.m))
        if args.norm:
            lines.append(f"norm_hat = {payload['norm_hat']}")
    return payload, "\n".join(lines)


def cmd_hbasis(args):
    d, k = args.d, args.k
    basis = enumerate_monomials(d, k)
    if binom(k + d, d) > MAX_HBASIS_SIZE:
        raise SizeLimitError(f"basis size {binom(k + d, d)} exceeds {MAX_HBASIS_SIZE}")
    payload = {"d": d, "k": k, "basis": [str(a) for a in basis]}
    lines = []
    failed = False
    if not (args.norms or args.gram or args.transition):
        payload["polys"] = [h_poly(a).to_json() for a in basis]
        lines += [f"h{a} = {h_poly(a)}" for a in basis]
    if args.norms or args.gram:
        rep = gram_h(d, k, check_offdiagonal=args.gram)
        payload["norms"] = [_rat(x) for x in rep.norms]
        lines += [f"<<h{a}, h{a}>> = {_rat(x)}" for a, x in zip(basis, rep.norms)]
        failed |= not rep.norms_consistent
        if args.gram:
            t = theta(d, k).value()
            payload["offdiagonal_zero"] = rep.offdiagonal_zero
            payload["D"] = _rat(rep.D)
            payload["theta"] = _rat(t)
            lines.append("diagonal: (" + ", ".join(_rat(x) for x in rep.norms) + ")")
            lines.append(f"product D = {_rat(rep.D)}  theta = {_rat(t)}")
            lines.append(f"off-diagonal zero: {rep.offdiagonal_zero}")
            failed |= not rep.offdiagonal_zero or rep.D != t
    if args.transition:
        tr = transition_check(d, k)
        payload["transition"] = [[_rat(x) for x in row] for row in tr.matrix]
        payload["lower_unitriangular"] = tr.lower_unitriangular
        payload["expansion_exact"] = tr.expansion_exact
        lines.append("T^-1:")
        lines += [" ".join(_rat(x) for x in row) for row in tr.matrix]
        lines.append(f"lower unitriangular: {tr.lower_unitriangular}")
        failed |= not (tr.lower_unitriangular and tr.expansion_exact)
    if failed:
        raise VerificationFailed(payload, "\n".join(lines))
    return payload, "\n".join(lines)


def cmd_lattice(args):
    data = _load_json(args.file)
    lines = []
    if "basis_rows" not in data:
        lat = Lattice(GramMatrix.from_json(data) if "rows" in data else data)
        disc = discriminant(lat)
        payload = {"rank": lat.rank, "discriminant": str(disc), "unimodular": lat.is_unimodular()}
        return payload, f"rank {lat.rank}\ndiscriminant {disc}"
    e = Embedding.from_json(data)
    target = e.target
    torsion = quotient_torsion(e)
    perp = orthogonal_complement(e)
    dperp = double_complement(e)
    payload = {
        "target_rank": target.rank,
        "target_unimodular": target.is_unimodular(),
        "rank": e.rank,
        "torsion": str(torsion),
        "complement_rows": perp.rows(),
        "double_complement_rows": dperp.rows(),
        "saturation_rows": saturation(e).rows(),
    }
    lines.append(f"rank {e.rank} in rank {target.rank}; torsion of M/L: {torsion}")
    try:
        disc = discriminant(e.source())
    except DegenerateLatticeError:
        disc = None
        lines.append("L is degenerate")
    payload["discriminant"] = str(disc) if disc else None
    if disc:
        lines.append(f"discr L = {disc}")
    if perp.rank:
        try:
            pd = discriminant(perp.source())
        except DegenerateLatticeError:
            pd = None
        payload["complement_discriminant"] = str(pd) if pd else None
        lines.append(f"L^perp rank {perp.rank}, discr {pd}")
    if disc and target.is_unimodular():
        predicted = complement_discriminant(disc, torsion)
        payload["predicted_complement_discriminant"] = str(predicted)
        lines.append(f"discr L / n^2 = {predicted}")
    return payload, "\n".join(lines)


def cmd_hk(args):
    m = registry(args.manifold, args.k)
    if args.torsion:
        rep = torsion_report(m, FactoredInteger.parse(args.torsion), args.include_cx)
    else:
        rep = hk_report(m, args.include_cx)
    payload = rep.to_json()
    payload["data"] = describe(m)
    lines = [
        f"{m.name} k={m.k} b2={m.b2} d2={m.d2} cX={_rat(m.cX)}",
        f"rank Sym^k H^2 = {rep.rank}",
        f"discriminant {rep.discriminant}",
        "prime set Z: {" + ", ".join(map(str, sorted(rep.prime_set))) + "}",
    ]
    if rep.sqrt_discriminant is not None:
        lines.append(f"sqrt discriminant {rep.sqrt_discriminant}")
    if rep.torsion is not None:
        lines.append(f"complement discriminant {rep.complement_discriminant}")
    return payload, "\n".join(lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symlat",
        description="Exact Gram determinants on symmetric powers, orthogonal polynomials, lattices.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--timing", action="store_true", help="report wall time on stderr")
    # the same options after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(parents=[common], name="theta", help="factored theta_{d,k}")
    p.add_argument("d", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--value", action="store_true", help="also print the integer value")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser(parents=[common], name="verify", help="brute-force check of the Gram determinant formula")
    p.add_argument("--dmin", type=int, default=0)
    p.add_argument("--dmax", type=int, default=2)
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt-theta", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(parents=[common], name="sym-gram", help="induced Gram matrix on Sym^k from a Gram JSON file")
    p.add_argument("--gram", required=True, help="GramMatrix JSON file ('-' for stdin)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--det", action="store_true")
    p.set_defaults(func=cmd_sym_gram)

    p = sub.add_parser(parents=[common], name="orthopoly", help="the polynomial p_n^m")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--norm", action="store_true")
    p.set_defaults(func=cmd_orthopoly)

    p = sub.add_parser(parents=[common], name="hbasis", help="homogeneous orthogonal basis h_alpha")
    p.add_argument("d", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--norms", action="store_true")
    p.add_argument("--gram", action="store_true")
    p.add_argument("--transition", action="store_true")
    p.set_defaults(func=cmd_hbasis)

    p = sub.add_parser(parents=[common], name="lattice", help="discriminant, torsion and complements from JSON")
    p.add_argument("file", help="Embedding or GramMatrix JSON ('-' for stdin)")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser(parents=[common], name="hk", help="discriminant of Sym^k H^2 for a hyperkahler class")
    p.add_argument("--manifold", required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--torsion", help="torsion order, e.g. '2^277 * 3^46'")
    p.add_argument("--include-cx", action="store_true", help="scale by the Fujiki constant")
    p.set_defaults(func=cmd_hk)
    return parser


def _emit(fmt: str, status: str, payload, text: str) -> None:
    if fmt == "json":
        print(json.dumps({"status": status, "payload": payload}, indent=2))
    elif text:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        payload, text = args.func(args)
        code = EXIT_OK
        _emit(args.format, "ok", payload, text)
    except VerificationFailed as exc:
        code = EXIT_FAIL
        _emit(args.format, "error", exc.payload, exc.text)
    except SizeLimitError as exc:
        code = EXIT_SIZE
        _emit(args.format, "error", {"error": str(exc)}, "")
        print(f"symlat: size limit: {exc}", file=sys.stderr)
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        code = EXIT_INPUT
        _emit(args.format, "error", {"error": str(exc)}, "")
        print(f"symlat: {exc}", file=sys.stderr)
    if args.timing:
        ms = (time.perf_counter() - start) * 1000
        print(f"symlat: {args.command} took {ms:.1f} ms ({_core.BACKEND} kernels)", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

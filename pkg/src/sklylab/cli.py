"""Command-line front end.

Every command prints a single JSON document (sorted keys) to stdout or to
--out.  Exit codes: 0 when all verdicts pass, 2 when a mathematical verdict
fails, 1 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from math import comb

import numpy as np

from . import geometry, heisenberg, poisson, singularity, skly, strata
from .errors import DisagreementAcrossPoints, SklylabError
from .mpoly import MPoly, VarTable, parse_poly
from .scalars import Field, PrimeField, RationalField, parse_field_spec
from .skly import SklyaninParams

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERDICT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, complex):
        return f"{obj.real:.12g}{obj.imag:+.12g}j"
    if isinstance(obj, (np.complexfloating,)):
        return _json_default(complex(obj))
    if isinstance(obj, np.ndarray):
        return [[_json_default(v) for v in row] for row in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, MPoly):
        return obj.to_str()
    raise TypeError(f"not JSON-serializable: {type(obj)!r}")


def _emit(report: dict, args) -> None:
    fmt = getattr(args, "format", "json") or "json"
    if fmt == "csv" and "csv_rows" in report:
        lines = [",".join(str(c) for c in row) for row in report["csv_rows"]]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(report, sort_keys=True, indent=2, default=_json_default) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _field_of(args) -> Field:
    return parse_field_spec(getattr(args, "field", None) or "rational")


def _params_of(args, field: Field) -> SklyaninParams:
    try:
        vals = [Fraction(args.alpha), Fraction(args.beta), Fraction(args.gamma)]
    except (ValueError, ZeroDivisionError) as exc:
        raise SklylabError(f"bad parameter value: {exc}") from exc
    return SklyaninParams.make(*vals, field)


# ---------------------------------------------------------------- commands

def _cmd_validate(args) -> int:
    p = _params_of(args, _field_of(args))
    rep = skly.validate_params(p)
    _emit({"command": "validate", "schema": SCHEMA_VERSION, **rep}, args)
    return EXIT_OK if rep["valid"] else EXIT_VERDICT


def _cmd_hilbert(args) -> int:
    p = _params_of(args, _field_of(args))
    dmax = args.max_deg
    t0 = time.time()
    dims = [skly.graded_dimension(p, d) for d in range(dmax + 1)]
    expected = [comb(d + 3, 3) for d in range(dmax + 1)]
    ok = dims == expected
    _emit(
        {
            "command": "hilbert",
            "schema": SCHEMA_VERSION,
            "field": p.field.spec_string(),
            "dims": dims,
            "expected": expected,
            "passed": ok,
            "seconds": round(time.time() - t0, 3),
        },
        args,
    )
    return EXIT_OK if ok else EXIT_VERDICT


def _cmd_center(args) -> int:
    p = _params_of(args, _field_of(args))
    dmax = args.max_deg
    t0 = time.time()
    g1, g2 = skly.g1_element(p), skly.g2_element(p)
    central = skly.is_central_up_to(p, g1, dmax) and skly.is_central_up_to(p, g2, dmax)
    A = skly.SklyaninAlgebra(p)
    qdims = [A.quotient_dimension([g1, g2], d) for d in range(dmax + 1)]
    expected = [1] + [4 * d for d in range(1, dmax + 1)]
    slice_dims = [len(skly.center_slice(p, d)) for d in range(3)]
    ok = central and qdims == expected and slice_dims == [1, 0, 2]
    _emit(
        {
            "command": "center",
            "schema": SCHEMA_VERSION,
            "g_central_up_to": dmax,
            "g_central": central,
            "quotient_dims": qdims,
            "quotient_expected": expected,
            "center_slice_dims": slice_dims,
            "passed": ok,
            "seconds": round(time.time() - t0, 3),
        },
        args,
    )
    return EXIT_OK if ok else EXIT_VERDICT


def _cmd_sigma_order(args) -> int:
    field = _field_of(args)
    if not isinstance(field, PrimeField):
        raise SklylabError("sigma-order needs --field fp:<p>")
    p = _params_of(args, field)
    ok = geometry.sigma_fixes_vertices(p)
    preserves, witness = geometry.sigma_preserves_E(p, args.samples * 4, seed=args.seed)
    try:
        order = geometry.sigma_order(p, samples=args.samples, cap=args.cap, seed=args.seed)
        disagreement = None
    except DisagreementAcrossPoints as exc:
        order, disagreement = None, str(exc)
    passed = ok and preserves and disagreement is None
    _emit(
        {
            "command": "sigma-order",
            "schema": SCHEMA_VERSION,
            "order": order if order is not None else "unknown",
            "fixes_vertices": ok,
            "preserves_curve": preserves,
            "witness": None if witness is None else list(witness.coords),
            "disagreement": disagreement,
            "passed": passed,
        },
        args,
    )
    return EXIT_OK if passed else EXIT_VERDICT


def _cmd_h4(args) -> int:
    p = _params_of(args, RationalField())
    tol = args.tol
    gens = heisenberg.build_generators(p)
    pres = heisenberg.verify_presentation(*gens, tol=tol)
    G = heisenberg.enumerate_group(*gens)
    R = skly.build_relations(heisenberg.complex_params(p))
    failures = [
        m.label for m in G.elements if not heisenberg.is_algebra_automorphism(m, R, tol * 10)
    ]
    acts = [heisenberg.induced_action_on_g(g, p, tol) for g in gens]
    expected = heisenberg.g_action_expected(p)
    g_resid = max(
        float(np.max(np.abs(a - e))) for a, e in zip(acts, expected)
    )
    passed = (
        pres["passed"] and len(G) == 64 and not failures and g_resid < tol
    )
    _emit(
        {
            "command": "h4",
            "schema": SCHEMA_VERSION,
            "relations": {"residuals": pres["residuals"]},
            "group_order": len(G),
            "automorphism_failures": failures,
            "g_action": {
                "e": acts[0],
                "e1": acts[1],
                "e2": acts[2],
                "max_residual_vs_closed_form": g_resid,
            },
            "passed": passed,
        },
        args,
    )
    return EXIT_OK if passed else EXIT_VERDICT


def _load_poisson_instance(args):
    if args.instance:
        try:
            with open(args.instance) as fh:
                data = json.load(fh)
            vt = singularity.presentation_vartab(int(data["n"]))
            fld = RationalField()
            F1 = parse_poly(data["F1"], vt, fld)
            F2 = parse_poly(data["F2"], vt, fld)
        except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
            raise SklylabError(f"bad instance file: {exc}") from exc
        return poisson.JacobianPoissonStructure.make(F1, F2), f"file:{args.instance}"
    name = args.preset or "odd3"
    if name == "odd3":
        P = singularity.odd_synthetic_n3()
    elif name == "even-rho1":
        P = singularity.even_rho1_surrogate()
    else:
        raise SklylabError(f"unknown preset {name!r} (odd3 | even-rho1)")
    return poisson.JacobianPoissonStructure.make(P.F1, P.F2), f"preset:{name}"


def _cmd_poisson(args) -> int:
    P, label = _load_poisson_instance(args)
    rng = random.Random(args.seed)
    fld = P.field_

    def rand_poly():
        terms = {}
        for _ in range(3):
            e = tuple(rng.randrange(3) for _ in range(6))
            terms[e] = fld.convert(rng.randrange(-4, 5))
        return MPoly(fld, P.vartab, terms)

    casimir_ok = all(
        poisson.bracket(P, MPoly.var(P.vartab, fld, nm), F).is_zero()
        for nm in ("z0", "z1", "z2", "z3")
        for F in (P.F1, P.F2)
    )
    jacobi_ok = all(
        poisson.jacobi_defect(P, rand_poly(), rand_poly(), rand_poly()).is_zero()
        for _ in range(args.trials)
    )
    table = {
        f"z{k},z{l}": entry for (k, l), entry in sorted(poisson.bracket_table(P).items())
    }
    ideal = poisson.symplectic_point_ideal(P)
    passed = casimir_ok and jacobi_ok
    _emit(
        {
            "command": "poisson",
            "schema": SCHEMA_VERSION,
            "instance": label,
            "casimir_ok": casimir_ok,
            "jacobi_ok": jacobi_ok,
            "jacobi_trials": args.trials,
            "nambu_global_sign": P.nambu_global_sign(),
            "table": table,
            "symplectic_ideal": {"generators": list(ideal.generators)},
            "passed": passed,
        },
        args,
    )
    return EXIT_OK if passed else EXIT_VERDICT


def _parse_pair(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise SklylabError(f"expected two comma-separated values, got {text!r}")
    return Fraction(parts[0]), Fraction(parts[1])


def _cmd_singloc(args) -> int:
    t0 = time.time()
    if args.parity == "even":
        if args.preset != "rho1":
            raise SklylabError("only the rho1 even preset is shipped")
        if args.s != 2:
            raise SklylabError("the shipped even preset has s = 2")
        P = singularity.even_rho1_surrogate()
        rep = singularity.verify_even_decomposition(P)
        gamma = _parse_pair(args.slice) if args.slice else (Fraction(1), Fraction(1))
        pts = singularity.slice_singular_points(P, *gamma)
        passed = rep["union_ok"] and rep["origin_only_intersection"]
        _emit(
            {
                "command": "singloc",
                "schema": SCHEMA_VERSION,
                "parity": "even",
                "surrogate": True,
                "union_ok": rep["union_ok"],
                "origin_only_intersection": rep["origin_only_intersection"],
                "slice": [str(gamma[0]), str(gamma[1])],
                "slice_points": [
                    {"point": [str(c) for c in pt], "multiplicity": m} for pt, m in pts
                ],
                "passed": passed,
                "seconds": round(time.time() - t0, 3),
            },
            args,
        )
        return EXIT_OK if passed else EXIT_VERDICT

    P = singularity.odd_synthetic_n3()
    if args.curve != "e0":
        raise SklylabError("the shipped odd preset has its apex at e0")
    direction = _parse_pair(args.direction)
    samples = [Fraction(t) for t in args.samples.split(",")] if args.samples else [1, 2, 3, 5]
    C = singularity.NodalCurveSpec(0, 0, direction)
    compat = singularity.curve_compatibility(P, C)
    nodal = singularity.nodal_curve_check(P, C, samples)
    gamma = _parse_pair(args.slice) if args.slice else (Fraction(0), Fraction(-1))
    pts = singularity.slice_singular_points(P, *gamma)
    passed = compat and nodal
    _emit(
        {
            "command": "singloc",
            "schema": SCHEMA_VERSION,
            "parity": "odd",
            "surrogate": True,
            "compatibility": compat,
            "nodal_curve_ok": nodal,
            "t_samples": [str(t) for t in samples],
            "slice": [str(gamma[0]), str(gamma[1])],
            "slice_points": [
                {"point": [str(c) for c in pt], "multiplicity": m} for pt, m in pts
            ],
            "passed": passed,
            "seconds": round(time.time() - t0, 3),
        },
        args,
    )
    return EXIT_OK if passed else EXIT_VERDICT


def _cmd_strata(args) -> int:
    n = args.n
    table = strata.irr_table(n)
    profile = strata.discriminant_profile(n)
    check = strata.consistency_check(n)
    report = {
        "command": "strata",
        "schema": SCHEMA_VERSION,
        "n": n,
        "parity": table.parity,
        "strata": [
            {
                "label": s.label,
                "irrep_count": s.irrep_count,
                "dims": list(s.dims),
                "d_value": s.d_value,
            }
            for s in table.strata
        ],
        "profile_ranges": [list(r) for r in profile["ranges"]],
        "consistency": check["verdicts"],
        "passed": check["passed"],
    }
    if args.profile:
        rows = [("level", "stratum")]
        for lo, hi, desc in profile["ranges"]:
            for level in range(lo, hi + 1):
                rows.append((level, desc))
        report["csv_rows"] = rows
    _emit(report, args)
    return EXIT_OK if check["passed"] else EXIT_VERDICT


def _cmd_full_verify(args) -> int:
    sections = {}
    seed = args.seed
    only = args.only

    def want(name):
        return only is None or only == name

    t_start = time.time()
    Q = RationalField()
    FP = PrimeField(10007)
    base_q = SklyaninParams.make(Fraction(-5, 7), 2, 3, Q)
    base_fp = SklyaninParams.make(Fraction(-5, 7), 2, 3, FP)

    if want("hilbert"):
        dims = [skly.graded_dimension(base_fp, d) for d in range(5)]
        sections["hilbert"] = dims == [comb(d + 3, 3) for d in range(5)]
    if want("center"):
        g1, g2 = skly.g1_element(base_fp), skly.g2_element(base_fp)
        A = skly.SklyaninAlgebra(base_fp)
        sections["center"] = (
            skly.is_central_up_to(base_fp, g1, 4)
            and skly.is_central_up_to(base_fp, g2, 4)
            and [A.quotient_dimension([g1, g2], d) for d in range(5)]
            == [1, 4, 8, 12, 16]
        )
    if want("sigma"):
        try:
            order = geometry.sigma_order(base_fp, samples=3, cap=5000, seed=seed)
            sections["sigma"] = geometry.sigma_fixes_vertices(base_fp) and (
                geometry.sigma_preserves_E(base_fp, 20, seed=seed)[0]
            )
        except DisagreementAcrossPoints:
            sections["sigma"] = False
    if want("h4"):
        gens = heisenberg.build_generators(base_q)
        G = heisenberg.enumerate_group(*gens)
        R = skly.build_relations(heisenberg.complex_params(base_q))
        sections["h4"] = (
            heisenberg.verify_presentation(*gens)["passed"]
            and len(G) == 64
            and all(heisenberg.is_algebra_automorphism(m, R, 1e-8) for m in G.elements)
        )
    if want("poisson"):
        ok = True
        rng = random.Random(seed)
        for preset in (singularity.odd_synthetic_n3(), singularity.even_rho1_surrogate()):
            P = poisson.JacobianPoissonStructure.make(preset.F1, preset.F2)
            for nm in ("z0", "z1", "z2", "z3"):
                ok &= poisson.bracket(P, MPoly.var(P.vartab, Q, nm), P.F1).is_zero()
            for _ in range(5):
                f, g, h = (
                    MPoly(
                        Q,
                        P.vartab,
                        {
                            tuple(rng.randrange(3) for _ in range(6)): Fraction(
                                rng.randrange(-3, 4)
                            )
                            for _ in range(3)
                        },
                    )
                    for _ in range(3)
                )
                ok &= poisson.jacobi_defect(P, f, g, h).is_zero()
        sections["poisson"] = ok
    if want("singloc"):
        odd = singularity.odd_synthetic_n3()
        C = singularity.NodalCurveSpec(0, 0, (0, -1))
        even = singularity.even_rho1_surrogate()
        rep = singularity.verify_even_decomposition(even)
        sections["singloc"] = (
            singularity.nodal_curve_check(odd, C, [1, 2, 3, 5])
            and len(singularity.slice_singular_points(odd, 0, -1)) == 2
            and len(singularity.slice_singular_points(even, 1, 1)) == 4
            and rep["union_ok"]
            and rep["origin_only_intersection"]
        )
    if want("strata"):
        sections["strata"] = all(
            strata.consistency_check(n)["passed"] for n in (3, 5, 6, 7, 9, 10, 11, 13)
        ) and all(strata.hs_quotient_multiplicity(k)[1] == k + 1 for k in range(51))

    if not sections:
        raise SklylabError(f"unknown section {only!r}")
    passed = all(sections.values())
    _emit(
        {
            "command": "full-verify",
            "schema": SCHEMA_VERSION,
            "seed": seed,
            "sections": sections,
            "passed": passed,
            "seconds": round(time.time() - t_start, 3),
        },
        args,
    )
    return EXIT_OK if passed else EXIT_VERDICT


# ---------------------------------------------------------------- parser

def _add_params(sp):
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--gamma", required=True)


def _add_common(sp):
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["json", "csv"], default="json")


def build_parser() -> _Parser:
    ap = _Parser(prog="sklylab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="check a parameter triple")
    _add_params(sp)
    sp.add_argument("--field", default="rational")
    _add_common(sp)
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("hilbert", help="graded dimensions of the algebra")
    _add_params(sp)
    sp.add_argument("--field", default="rational")
    sp.add_argument("--max-deg", type=int, default=4)
    _add_common(sp)
    sp.set_defaults(func=_cmd_hilbert)

    sp = sub.add_parser("center", help="central quadrics and quotient dimensions")
    _add_params(sp)
    sp.add_argument("--field", default="rational")
    sp.add_argument("--max-deg", type=int, default=4)
    _add_common(sp)
    sp.set_defaults(func=_cmd_center)

    sp = sub.add_parser("sigma-order", help="iteration order of the curve translation")
    _add_params(sp)
    sp.add_argument("--field", default="fp:10007")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=5)
    sp.add_argument("--cap", type=int, default=geometry.DEFAULT_ITERATION_CAP)
    _add_common(sp)
    sp.set_defaults(func=_cmd_sigma_order)

    sp = sub.add_parser("h4", help="order-64 symmetry group checks")
    sp.add_argument("action", nargs="?", default="verify", choices=["verify"])
    _add_params(sp)
    sp.add_argument("--tol", type=float, default=1e-9)
    _add_common(sp)
    sp.set_defaults(func=_cmd_h4)

    sp = sub.add_parser("poisson", help="bracket-table checks on an instance")
    sp.add_argument("action", nargs="?", default="check", choices=["check"])
    sp.add_argument("--instance")
    sp.add_argument("--preset", choices=["odd3", "even-rho1"])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=10)
    _add_common(sp)
    sp.set_defaults(func=_cmd_poisson)

    sp = sub.add_parser("singloc", help="singular-locus structure checks")
    sp.add_argument("parity", choices=["odd", "even"])
    sp.add_argument("--preset", default="rho1")
    sp.add_argument("--s", type=int, default=2)
    sp.add_argument("--curve", default="e0")
    sp.add_argument("--direction", default="0,-1")
    sp.add_argument("--samples", default="1,2,3,5")
    sp.add_argument("--slice")
    _add_common(sp)
    sp.set_defaults(func=_cmd_singloc)

    sp = sub.add_parser("strata", help="stratum tables and level profiles")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--profile", action="store_true")
    _add_common(sp)
    sp.set_defaults(func=_cmd_strata)

    sp = sub.add_parser("full-verify", help="run every verification section")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--only")
    _add_common(sp)
    sp.set_defaults(func=_cmd_full_verify)

    return ap


_VALUE_FLAGS = {"--alpha", "--beta", "--gamma", "--direction", "--slice", "--samples"}


def _merge_negative_values(argv):
    """Join flags with values that start with '-' (e.g. --alpha -5/7)."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            val = next(it, None)
            if val is None:
                out.append(tok)
            else:
                out.append(f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_negative_values(list(argv))
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except SklylabError as exc:
        sys.stderr.write(f"sklylab: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

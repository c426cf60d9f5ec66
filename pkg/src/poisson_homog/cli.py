"""
Command-line front end.

Every command prints one report (text or JSON) and exits with
0 when all checks pass, 1 when a check fails, 2 when an input cannot be
read or parsed, and 3 when two independent computations disagree.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import linalg as la
from .cohomology import (ComplexError, adjoint_module, build_relative_complex,
                         check_f_zero, cohomology_dims, descend_pairing, tensor_product,
                         top_module, trivial_module, validate_module, weight_module)
from .double import (FrameError, PointFrame, build_double, check_frame, check_pairing_invariance,
                     frame_from_group, frame_matrix, is_lagrangian, join)
from .drinfeld import (HomogeneousSpaceData, PreconditionError, check_drinfeld,
                       check_h0_closure, h0_closure_witness, l_algebra, modular_element,
                       verify_lambda_chi)
from .exterior import basis_keys, contract
from .fixtures import fixture_path, list_fixtures
from .io import (AlgebraSpec, FormatError, dumps, frame_from_json, load_algebra, load_json,
                 module_from_json, parse_h, parse_rational)
from .lie import NotASubalgebra, validate_lie
from .linalg import DimensionError, Subspace
from .twist import ConventionError, check_eq_gg, check_xi_h, delta_g_prime, g_prime, phi, point_pi_p

SCHEMA = "poisson-homog/report"
SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


def _js(x):
    """Exact values to JSON-safe values; rationals become strings."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _js(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_js(v) for v in x]
    if hasattr(x, "coords") and hasattr(x, "degree"):
        return {",".join(str(i) for i in k): str(c) for k, c in x.coords.items()}
    raise TypeError("cannot serialize %r" % (x,))


def _vecs(vs):
    return [[str(c) for c in v] for v in vs]


# ---------------------------------------------------------------------------
# input resolution
# ---------------------------------------------------------------------------

def _resolve(path: str, fixtures_dir) -> Path:
    p = Path(path)
    if p.is_file():
        return p
    try:
        return fixture_path(path, fixtures_dir)
    except FormatError:
        raise FormatError("no such file or fixture: %s" % path) from None


def _load(args) -> AlgebraSpec:
    return load_algebra(_resolve(args.path, args.fixtures))


def _label(args, spec: AlgebraSpec) -> str:
    return spec.name or Path(args.path).stem


def _space(spec: AlgebraSpec, h=None) -> HomogeneousSpaceData:
    h_vecs = spec.h if h is None else h
    return HomogeneousSpaceData.make(spec.bialg, h_vecs, spec.lam_or_zero)


# ---------------------------------------------------------------------------
# commands; each returns (report dict, exit code)
# ---------------------------------------------------------------------------

def cmd_validate(args):
    spec = _load(args)
    lie = validate_lie(spec.g)
    out = {"lie": {"ok": lie.ok, "violations": [v.as_dict() for v in lie.violations]}}
    ok = lie.ok
    if lie.ok:
        dbl = build_double(spec.bialg, check=False)
        inv = check_pairing_invariance(dbl)
        out["bialgebra"] = {"ok": dbl.jacobi.ok and inv.ok,
                            "violations": [v.as_dict() for v in dbl.jacobi.violations + inv.violations]}
        ok = ok and dbl.jacobi.ok and inv.ok
    else:
        out["bialgebra"] = {"ok": False, "skipped": "g is not a Lie algebra", "violations": []}
    return _label(args, spec), out, ok


def cmd_double(args):
    spec = _load(args)
    dbl = build_double(spec.bialg, check=False)
    inv = check_pairing_invariance(dbl)
    N = 2 * dbl.n
    brackets = {}
    for i, j in basis_keys(N, 2):
        v = dbl.d.bracket_basis(i, j)
        if not la.is_zero(v):
            brackets["%d,%d" % (i, j)] = [str(c) for c in v]
    out = {
        "dim": N,
        "basis": list(dbl.d.basis_names),
        "brackets": brackets,
        "pairing": _vecs(dbl.pairing),
        "jacobi": {"ok": dbl.jacobi.ok, "violations": [v.as_dict() for v in dbl.jacobi.violations]},
        "pairing_invariance": {"ok": inv.ok, "violations": [v.as_dict() for v in inv.violations]},
    }
    return _label(args, spec), out, dbl.jacobi.ok and inv.ok


def cmd_drinfeld(args):
    spec = _load(args)
    sp = _space(spec)
    l = sp.l
    dbl = sp.double
    rep = check_drinfeld(sp)
    c1, c2 = rep.lemma_conditions
    if rep.cond_a_infinitesimal != c1 or rep.cond_b != (c1 and c2):
        raise ConventionError("Drinfeld conditions disagree with the bivector conditions")
    hd = Subspace.span([dbl.embed_g(x) for x in sp.h.space.basis], 2 * sp.n)
    out = {
        "l_basis": _vecs(l.basis),
        "l_is_lagrangian": is_lagrangian(l, dbl),
        "l_meets_g_in_h": (l & dbl.g_subspace()) == hd,
        "cond_a_infinitesimal": rep.cond_a_infinitesimal,
        "cond_b": rep.cond_b,
        "lambda_condition_1": c1,
        "lambda_condition_2": c2,
        "witnesses": rep.witnesses,
        "h0_closure": check_h0_closure(sp),
    }
    w = h0_closure_witness(sp)
    if w is not None:
        out["h0_closure_witness"] = list(w)
    ok = rep.ok and out["h0_closure"] and out["l_is_lagrangian"] and out["l_meets_g_in_h"]
    if rep.ok:
        res = verify_lambda_chi(sp)
        me = modular_element(sp)
        out["lambda_chi_residual"] = [str(c) for c in res]
        out["modular_element"] = [str(c) for c in me.value]
        out["x_l"] = [str(c) for c in me.x_l]
        ok = ok and la.is_zero(res)
    return _label(args, spec), out, ok


def _parse_degrees(s, top):
    if s is None:
        return list(range(top + 1))
    out = set()
    for part in s.split(","):
        part = part.strip()
        try:
            if "-" in part:
                a, b = part.split("-")
                out.update(range(int(a), int(b) + 1))
            elif part:
                out.add(int(part))
        except ValueError:
            raise FormatError("bad degree list %r" % s) from None
    return sorted(k for k in out if 0 <= k <= top)


def _parse_h_flag(s, n):
    import json
    try:
        doc = json.loads(s)
    except json.JSONDecodeError:
        try:
            doc = [int(t) for t in s.split(",") if t.strip()]
        except ValueError:
            raise FormatError("bad --h value %r" % s) from None
    if isinstance(doc, int) and not isinstance(doc, bool):
        doc = [doc]
    return parse_h(doc, n)


def _module(args, l, h_in_l, space):
    spec = args.module or "trivial"
    if spec == "trivial":
        return trivial_module(l)
    if spec == "adjoint":
        return adjoint_module(l)
    if spec == "top":
        return top_module(l)
    if spec.startswith("weight:"):
        if space is None:
            raise FormatError("weight modules need --space")
        try:
            N = int(spec.split(":", 1)[1])
        except ValueError:
            raise FormatError("bad weight %r" % spec) from None
        return weight_module(space, N)
    return module_from_json(load_json(spec), l.dim)


def cmd_cohomology(args):
    spec = _load(args)
    space = None
    if args.space:
        space = _space(spec)
        rep = check_drinfeld(space)
        if not rep.ok:
            return _label(args, spec), {"error": "l is not a subalgebra compatible with h",
                                        "witnesses": rep.witnesses}, False
        l, h = l_algebra(space)
    else:
        l = spec.g
        h_vecs = _parse_h_flag(args.h, l.dim) if args.h is not None else spec.h
        h = Subspace.span(h_vecs, l.dim)
    lie = validate_lie(l)
    if not lie.ok:
        return _label(args, spec), {"error": "not a Lie algebra",
                                    "violations": [v.as_dict() for v in lie.violations]}, False
    V = _module(args, l, h, space)
    mrep = validate_module(V, l)
    if not mrep.ok:
        return _label(args, spec), {"error": "invalid module",
                                    "violations": [v.as_dict() for v in mrep.violations]}, False
    try:
        cx = build_relative_complex(l, h, V)
    except ComplexError as e:
        return _label(args, spec), {"error": str(e)}, False
    betti = cohomology_dims(cx)
    degrees = _parse_degrees(args.degrees, cx.top)
    d_squared = all(
        all(la.is_zero(r) for r in la.matmul(cx.diff[k + 1], cx.diff[k]))
        for k in range(cx.top - 1) if cx.diff[k] and cx.diff[k + 1])
    out = {
        "l_dim": l.dim,
        "h_dim": h.dim,
        "module_dim": V.dim,
        "top_degree": cx.top,
        "degrees": degrees,
        "cochain_dims": [cx.dim(k) for k in degrees],
        "betti": [betti[k] for k in degrees],
        "d_squared_zero": d_squared,
    }
    ok = d_squared
    if args.nu is not None:
        VV = tensor_product(V, V)
        cxVV = build_relative_complex(l, h, VV)
        nu = tuple(parse_rational(t.strip()) for t in args.nu.split(",") if t.strip())
        if len(nu) != cxVV.dim(cxVV.top):
            raise FormatError("nu needs %d coordinates" % cxVV.dim(cxVV.top))
        fz = check_f_zero(nu, cxVV)
        out["nu_vanishes_on_exact"] = fz
        ok = ok and fz
        if fz:
            out["pairing"] = {str(k): [[str(c) for c in r] for r in descend_pairing(nu, cx, cx, cxVV, k)]
                              for k in degrees}
    return _label(args, spec), out, ok


def cmd_twist(args):
    spec = _load(args)
    b = spec.bialg
    lam = spec.lam_or_zero
    dbl = build_double(b, check=False)
    gp = g_prime(lam)
    p = phi(b, lam, dbl)
    n = b.n
    # delta_{g'} on the basis g'_k = Lambda xi_k + xi_k
    dgp = {}
    for k in range(n):
        v = join(contract(lam, la.unit(n, k)), la.unit(n, k))
        dgp[str(k)] = _js(delta_g_prime(b, lam, v))
    out = {
        "g_prime_basis": _vecs(gp.basis),
        "g_prime_lagrangian": is_lagrangian(gp, dbl),
        "g_prime_complementary": (gp & dbl.g_subspace()).dim == 0,
        "phi": _js(p),
        "phi_three_ways_agree": True,
        "phi_is_zero": p.is_zero(),
        "delta_g_prime": dgp,
    }
    return _label(args, spec), out, out["g_prime_lagrangian"] and out["g_prime_complementary"]


def cmd_point(args):
    spec = _load(args)
    sp = _space(spec)
    dbl = build_double(spec.bialg, check=False)
    n = dbl.n
    raw = frame_from_json(load_json(args.frame), n) if args.frame else {}
    d_gens = raw.get("d_generators")
    if "Ad_g" in raw:
        frame = PointFrame.from_Ad_g(raw["Ad_g"], raw["piG"], raw.get("Ad_d"))
    else:
        frame = frame_from_group(dbl, raw.get("g_generators", ()), d_gens)
    if frame.Ad_d is None:
        frame = PointFrame(frame.Ad_g, frame.coAd, frame.piG, la.identity(2 * n))
    check_frame(frame, dbl)
    h_gens = raw.get("h_generators", ())
    if any(not sp.h.space.contains(z) for z in h_gens):
        raise FrameError("h_generators must lie in h")
    frame_h = frame_from_group(dbl, h_gens) if h_gens else PointFrame.identity(n)
    lam = sp.lam
    ad_gd = la.matmul(frame_matrix(frame), frame.Ad_d)
    gg = check_eq_gg(lam, frame.Ad_d, ad_gd)
    P = point_pi_p(frame, frame.Ad_d, lam, dbl)
    rank = P.rank
    xi_h = [check_xi_h(frame_h, lam, xi, sp.h.space) for xi in sp.h0.basis]
    implication = not (gg[0] and gg[1]) or rank == 2 * n
    out = {
        "eq_gg": {"g_prime_meets_Ad_d_g_trivially": gg[0], "g_star_meets_Ad_gd_g_trivially": gg[1]},
        "pi_p_rank": rank,
        "pi_p_size": 2 * n,
        "pi_p_antisymmetric": P.is_antisymmetric,
        "eq_gg_implies_full_rank": implication,
        "xi_h": xi_h,
    }
    return _label(args, spec), out, P.is_antisymmetric and implication and all(xi_h)


def cmd_list_fixtures(args):
    return "catalog", {"fixtures": list_fixtures(args.fixtures)}, True


# ---------------------------------------------------------------------------
# rendering and dispatch
# ---------------------------------------------------------------------------

def _render_text(report: dict) -> str:
    lines = []

    def walk(prefix, v):
        if isinstance(v, dict) and v and not all(isinstance(x, str) for x in v.values()):
            for k in sorted(v):
                walk("%s.%s" % (prefix, k) if prefix else k, v[k])
        elif isinstance(v, list) and v and all(isinstance(x, list) for x in v):
            lines.append("%s:" % prefix)
            for row in v:
                lines.append("  [%s]" % ", ".join(str(x) for x in row))
        elif isinstance(v, list):
            lines.append("%s: [%s]" % (prefix, ", ".join(str(x) for x in v)))
        elif isinstance(v, dict):
            body = ", ".join("%s: %s" % (k, v[k]) for k in sorted(v))
            lines.append("%s: {%s}" % (prefix, body))
        elif isinstance(v, bool):
            lines.append("%s: %s" % (prefix, "yes" if v else "no"))
        else:
            lines.append("%s: %s" % (prefix, v))

    walk("", report)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--fixtures", default=None, help="directory of algebra files to use as the catalog")
    p = argparse.ArgumentParser(prog="poisson-homog", parents=[common],
                                description="Exact checks for Lie bialgebras and Poisson homogeneous spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, path=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if path:
            sp.add_argument("path", help="algebra file, or the name of a catalog fixture")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "Lie axioms and the bialgebra (double Jacobi) check")
    add("double", cmd_double, "structure constants and pairing of the double")
    add("drinfeld", cmd_drinfeld, "Drinfeld conditions, characters and the modular element")
    c = add("cohomology", cmd_cohomology, "relative Lie algebra cohomology")
    c.add_argument("--module", default=None,
                   help="trivial, adjoint, top, weight:N (with --space) or a module file")
    c.add_argument("--h", default=None, help="h as basis indices '0,2' or JSON vectors")
    c.add_argument("--degrees", default=None, help="degrees to report, e.g. '0,1' or '0-2'")
    c.add_argument("--nu", default=None, help="functional on top cochains of V (x) V, comma separated")
    c.add_argument("--space", action="store_true",
                   help="use the Drinfeld subalgebra l and h of the file instead of g")
    add("twist", cmd_twist, "g', phi and delta on g'")
    pt = add("point", cmd_point, "pointwise nondegeneracy of pi_P")
    pt.add_argument("--frame", default=None, help="frame file (identity frames when omitted)")
    add("list-fixtures", cmd_list_fixtures, "names in the fixture catalog", path=False)
    return p


def _emit(args, command, label, body, code, stream):
    report = {"schema": SCHEMA, "schema_version": SCHEMA_VERSION, "command": command,
              "input": label, "ok": code == EXIT_OK, "exit_code": code}
    report.update(_js(body))
    if args is not None and getattr(args, "format", "text") == "json":
        stream.write(dumps(report))
    else:
        stream.write(_render_text(report))


def main(argv=None, stream=None) -> int:
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_PARSE
    command = args.command
    label = getattr(args, "path", None) or ""
    try:
        label, body, ok = args.func(args)
        code = EXIT_OK if ok else EXIT_FAIL
    except (FormatError, DimensionError) as e:
        body, code = {"error": str(e)}, EXIT_PARSE
    except ConventionError as e:
        body, code = {"error": str(e)}, EXIT_INTERNAL
    except (FrameError, NotASubalgebra, PreconditionError, ComplexError, ZeroDivisionError) as e:
        body, code = {"error": str(e)}, EXIT_FAIL
    _emit(args, command, label, body, code, stream)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: JSON config in, JSON verification report out.

Subcommands:
  build       construct the instance, print a metadata summary
  verify      construct and run the full verification suite (exit 0 iff pass)
  construct   construct and dump the instance tables as JSON
  rootgroups  emit root-group commutator tables / specialization reports
  report      summarize a previously written report file

Reports are deterministic for a fixed config and seed up to the wall_time
fields.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .composition import CompositionAlgebra, identity_suite
from .errors import ConfigParseError, QuadralgError, VerificationFailure
from .fields import FieldCtx, parse_scalar, scalar_str
from .jordan import (
    HermMat2,
    ReducedSpin,
    halfspace_invertibility_sample,
    jordan_identity_random,
    jordan_identity_symbolic,
    peirce_decompose,
    u_containments,
)
from .moufang import (
    RootSystemCtx,
    commutator_tables,
    specialize,
    w_group_report,
    word_assoc_report,
)
from .quadforms import PointedQuadSpace, QuadraticForm
from .quadrangular import (
    PseudoQuadraticSpace,
    construct_etype,
    etype_d2_nonzero,
    from_pseudoquadratic,
    verify_axioms,
    verify_jternary,
)


def _fail(msg):
    raise ConfigParseError(msg)


def _field_ctx(cfg):
    spec = cfg.get("field", {"kind": "rationals"})
    kind = spec.get("kind")
    if kind == "rationals":
        return FieldCtx.rationals()
    if kind == "function_field":
        names = spec.get("variables")
        if not names:
            _fail("field.variables must be a nonempty list")
        return FieldCtx.function_field(names)
    _fail(f"unknown field kind {kind!r} (at field.kind)")


def _scalars(ctx, values, where):
    try:
        return [parse_scalar(ctx, v) for v in values]
    except QuadralgError as e:
        _fail(f"bad scalar in {where}: {e}")


class Verification:
    """Normalized verification options with CLI overrides applied."""

    def __init__(self, cfg, args):
        v = dict(cfg.get("verification", {}))
        self.mode = args.mode or v.get("mode", "auto")
        self.seed = args.seed if args.seed is not None else v.get("seed", 0)
        self.trials = args.trials if args.trials is not None else v.get("trials", 200)
        self.d2_trials = v.get("d2_trials", 2000)
        self.h2_trials = v.get("h2_trials", 1000)
        self.coeff_bound = v.get("coeff_bound", 10)
        self.degree_bound = v.get("degree_bound", 0)
        self.search_bound = v.get("search_bound", 25)
        self.inv_trials = v.get("inv_trials", 10)
        self.lj_random_pairs = v.get("lj_random_pairs", 25)
        self.orbit_samples = v.get("orbit_samples", 5)
        self.require_anisotropic = v.get("require_anisotropic", False)

    def jsonable(self):
        return {k: v for k, v in self.__dict__.items()}


def load_config(path):
    try:
        with open(path) as f:
            return json.load(f)
    except FileNotFoundError:
        _fail(f"config file not found: {path}")
    except json.JSONDecodeError as e:
        _fail(f"malformed JSON at {path}:{e.lineno}:{e.colno}: {e.msg}")


def _timed(checks, name, fn):
    t0 = time.perf_counter()
    out = fn()
    dt = time.perf_counter() - t0
    if isinstance(out, list):
        for rec in out:
            rec.setdefault("wall_time", round(dt / max(1, len(out)), 6))
        checks.extend(out)
    elif isinstance(out, dict):
        out.setdefault("wall_time", round(dt, 6))
        checks.append(out)
    return out


def _verdict_warnings(instance, ver):
    warnings = []
    for name, v in instance.get("anisotropy", {}).items():
        if v.get("kind") == "unknown":
            warnings.append(f"anisotropy of {name} undecided (bounded evidence only)")
    return warnings


def run(config, args):
    """Execute the configured construction + verification; returns a Report dict."""
    ctx = _field_ctx(config)
    ver = Verification(config, args)
    con = config.get("construction")
    if not isinstance(con, dict) or "kind" not in con:
        _fail("construction.kind is required")
    kind = con["kind"]
    handlers = {
        "composition": _run_composition,
        "tensor": _run_tensor,
        "jordan": _run_jordan,
        "pseudo_quadratic": _run_pseudo_quadratic,
        "etype": _run_etype,
        "rootgroups": _run_rootgroups,
    }
    if kind not in handlers:
        _fail(f"unknown construction kind {kind!r}")
    checks = []
    instance = handlers[kind](ctx, con, ver, checks)
    failed = [c for c in checks if c.get("status") not in ("pass", "info")]
    warnings = _verdict_warnings(instance, ver)
    verdict = "fail" if failed else "pass"
    if warnings and ver.require_anisotropic:
        verdict = "fail"
    return {
        "tool": {"name": "quadralg", "version": __version__},
        "config": config,
        "verification": ver.jsonable(),
        "instance": instance,
        "checks": checks,
        "warnings": warnings,
        "verdict": verdict,
    }


def _run_composition(ctx, con, ver, checks):
    params = _scalars(ctx, con.get("params", []), "construction.params")
    alg = CompositionAlgebra(ctx, params)
    _timed(checks, "identity_suite",
           lambda: identity_suite(alg, mode="symbolic" if ver.mode in ("auto", "symbolic")
                                  else "random", seed=ver.seed, trials=ver.trials))
    division = alg.is_division(search_bound=ver.search_bound)
    return {"kind": "composition", "dim": alg.dim,
            "norm_diag": [scalar_str(ctx, d) for d in alg.norm_form.diag],
            "anisotropy": {"norm": division.to_json()}}


def _run_tensor(ctx, con, ver, checks):
    import random as _random

    from .tensoralg import TensorAlgebra, skew_pair

    c1 = CompositionAlgebra(ctx, _scalars(ctx, con["c1"], "construction.c1"))
    c2 = CompositionAlgebra(ctx, _scalars(ctx, con["c2"], "construction.c2"))
    T = TensorAlgebra(c1, c2)
    rng = _random.Random(ver.seed)

    def sandwich():
        for _ in range(ver.trials):
            s1 = T.random_skew(rng, ver.coeff_bound, ver.degree_bound).to_tensor()
            s2 = T.random_skew(rng, ver.coeff_bound, ver.degree_bound).to_tensor()
            x = T.random_element(rng, ver.coeff_bound, ver.degree_bound)
            if s1 * (s2 * s1) != (s1 * s2) * s1:
                raise VerificationFailure("skew flexibility failed")
            if ((s1 * s2) * s1) * x != s1 * (s2 * (s1 * x)):
                raise VerificationFailure("skew sandwich action failed")
            if (x * (s2 * s1)).involution() != (s2 * s1).involution() * x.involution():
                raise VerificationFailure("involution anti-automorphism failed")
        return {"name": "skew_sandwich_suite", "mode": "random",
                "trials": ver.trials, "seed": ver.seed, "status": "pass"}

    def inverses():
        done = 0
        while done < ver.trials:
            s = T.random_skew(rng, ver.coeff_bound, ver.degree_bound)
            if not s.albert():
                continue
            x = T.random_element(rng, ver.coeff_bound, ver.degree_bound)
            if s.to_tensor() * (s.inverse().to_tensor() * x) != x:
                raise VerificationFailure("s (s^-1 x) = x failed")
            done += 1
        return {"name": "skew_inverse_identity", "mode": "random",
                "trials": ver.trials, "seed": ver.seed, "status": "pass"}

    def pair_grading():
        for _ in range(ver.trials):
            x = T.random_element(rng, ver.coeff_bound, ver.degree_bound)
            y = T.random_element(rng, ver.coeff_bound, ver.degree_bound)
            skew_pair(x, y)  # strict grading assertion built in
        return {"name": "skew_pair_grading", "mode": "random",
                "trials": ver.trials, "seed": ver.seed, "status": "pass"}

    _timed(checks, "sandwich", sandwich)
    _timed(checks, "inverses", inverses)
    _timed(checks, "grading", pair_grading)
    return {"kind": "tensor", "dim": T.dim, "skew_dim": T.skew_dim,
            "anisotropy": {}}


def _jordan_from_spec(ctx, spec, where):
    kind = spec.get("kind")
    if kind == "reduced_spin":
        diag = _scalars(ctx, spec["form"], f"{where}.form")
        base = _scalars(ctx, spec["base"], f"{where}.base")
        return ReducedSpin(PointedQuadSpace(QuadraticForm(ctx, diag), base))
    if kind == "herm_mat2":
        L = CompositionAlgebra(ctx, _scalars(ctx, spec["L"], f"{where}.L"))
        return HermMat2(L)
    _fail(f"unknown jordan kind {kind!r} (at {where}.kind)")


def _run_jordan(ctx, con, ver, checks):
    spec = con.get("jordan")
    if not isinstance(spec, dict):
        _fail("construction.jordan must be an object like "
              '{"kind": "reduced_spin", "form": [...], "base": [...]}')
    J = _jordan_from_spec(ctx, spec, "construction.jordan")

    def identity():
        if ver.mode in ("auto", "symbolic") and J.dim <= 8:
            jordan_identity_symbolic(J)
            return {"name": "jordan_identity", "mode": "symbolic", "status": "pass"}
        jordan_identity_random(J, seed=ver.seed, trials=ver.trials,
                               coeff_bound=ver.coeff_bound, degree_bound=ver.degree_bound)
        return {"name": "jordan_identity", "mode": "random", "trials": ver.trials,
                "seed": ver.seed, "status": "pass"}

    def peirce():
        j0, jh, j1 = peirce_decompose(J, J.e1())
        u_containments(J)
        return {"name": "peirce_decomposition", "mode": "exact", "status": "pass",
                "dims": [len(j0), len(jh), len(j1)]}

    _timed(checks, "identity", identity)
    _timed(checks, "peirce", peirce)
    _timed(checks, "invertibility",
           lambda: halfspace_invertibility_sample(J, seed=ver.seed, trials=ver.trials,
                                                  coeff_bound=ver.coeff_bound,
                                                  degree_bound=ver.degree_bound))
    return {"kind": f"jordan_{J.kind}", "dim": J.dim, "anisotropy": {}}


def _pq_space(ctx, con, ver):
    L = CompositionAlgebra(ctx, _scalars(ctx, con["L"], "construction.L"))
    gamma = [L.element(_scalars(ctx, g, "construction.gamma"))
             for g in con.get("gamma", [])]
    if not gamma:
        _fail("construction.gamma must list at least one skew coefficient")
    return PseudoQuadraticSpace(L, gamma)


def _run_pseudo_quadratic(ctx, con, ver, checks):
    P = _pq_space(ctx, con, ver)
    qa = from_pseudoquadratic(P, mode=ver.mode, seed=ver.seed, trials=ver.trials,
                              h2_trials=ver.h2_trials, coeff_bound=ver.coeff_bound,
                              degree_bound=ver.degree_bound,
                              search_bound=ver.search_bound)
    checks.extend(qa.reports)
    _timed(checks, "axioms",
           lambda: verify_axioms(qa, mode=ver.mode, seed=ver.seed, trials=ver.trials,
                                 d2_trials=ver.d2_trials, inv_trials=ver.inv_trials,
                                 coeff_bound=ver.coeff_bound,
                                 degree_bound=ver.degree_bound))
    _timed(checks, "jternary",
           lambda: verify_jternary(qa.backend, _pq_x0_basis(qa.backend),
                                   seed=ver.seed, trials=max(20, ver.trials // 4),
                                   coeff_bound=min(6, ver.coeff_bound),
                                   degree_bound=ver.degree_bound))
    return {"kind": "pseudo_quadratic", "dims": {"V": qa.vdim, "X0": qa.x0_dim},
            "anisotropy": {"pi": qa.verdict.to_json()}}


def _pq_x0_basis(M):
    field = M.field
    basis = []
    for i in range(M.P.n):
        for t in range(M.P.L.dim):
            v = [field.zero()] * M.xdim
            v[M.idx(0, i, t)] = field.one()
            basis.append(v)
    return basis


def _run_etype(ctx, con, ver, checks):
    import random as _random

    from .jmodule import orbit_span
    from .quadrangular import _x0_coords_to_module

    kind = con.get("type")
    a = parse_scalar(ctx, con["a"])
    s = _scalars(ctx, con["s"], "construction.s")
    qa = construct_etype(ctx, kind, a, s, u_index=con.get("u_index", 0),
                         mode=ver.mode, seed=ver.seed, trials=ver.trials,
                         h2_trials=ver.h2_trials, coeff_bound=ver.coeff_bound,
                         degree_bound=ver.degree_bound, search_bound=ver.search_bound,
                         lj_random_pairs=ver.lj_random_pairs)
    checks.extend(qa.reports)
    _timed(checks, "axioms",
           lambda: verify_axioms(qa, mode=ver.mode, seed=ver.seed, trials=ver.trials,
                                 d2_trials=ver.d2_trials, inv_trials=ver.inv_trials,
                                 coeff_bound=ver.coeff_bound,
                                 degree_bound=ver.degree_bound,
                                 d2_nonzero=etype_d2_nonzero(qa.backend)))

    def orbits():
        rng = _random.Random(ver.seed + 7)
        u_elem = qa.backend.module.J.half_element(qa.space.base)
        for _ in range(ver.orbit_samples):
            xc = [ctx.scalar(rng.randint(-ver.coeff_bound, ver.coeff_bound))
                  for _ in range(qa.x0_dim)]
            if all(not c for c in xc):
                continue
            xv = _x0_coords_to_module(qa.backend, xc)
            d = orbit_span(qa.backend.module, u_elem, xv, x0_dim=qa.x0_dim)
            if d != qa.x0_dim:
                raise VerificationFailure(f"orbit span {d} != dim X0 {qa.x0_dim}")
        return {"name": "orbit_span_irreducibility", "mode": "random",
                "samples": ver.orbit_samples, "seed": ver.seed + 7, "status": "pass"}

    _timed(checks, "orbits", orbits)
    return {"kind": f"etype_{kind}", "dims": {"V": qa.vdim, "X0": qa.x0_dim},
            "anisotropy": {name: v.to_json() for name, v in
                           qa.backend.data.verdicts.items()}}


def _root_ctx(ctx, con, ver):
    target = con.get("target")
    if target == "quadratic_form":
        diag = _scalars(ctx, con["form"], "construction.form")
        base = _scalars(ctx, con["base"], "construction.base")
        rctx = RootSystemCtx.from_quadratic_form(
            PointedQuadSpace(QuadraticForm(ctx, diag), base))
        return rctx, target, None
    if target == "involutory":
        L = CompositionAlgebra(ctx, _scalars(ctx, con["L"], "construction.L"))
        return RootSystemCtx.from_involutory(L), target, None
    if target == "pseudo_quadratic":
        P = _pq_space(ctx, con, ver)
        return RootSystemCtx.from_pseudoquadratic(P), target, P
    if target == "etype":
        a = parse_scalar(ctx, con["a"])
        s = _scalars(ctx, con["s"], "construction.s")
        qa = construct_etype(ctx, con.get("type"), a, s, mode=ver.mode, seed=ver.seed,
                             trials=ver.trials, h2_trials=ver.h2_trials,
                             coeff_bound=ver.coeff_bound, degree_bound=ver.degree_bound,
                             search_bound=ver.search_bound,
                             lj_random_pairs=ver.lj_random_pairs)
        return RootSystemCtx.from_etype(qa), target, qa
    _fail(f"unknown rootgroups target {target!r}")


def _run_rootgroups(ctx, con, ver, checks):
    rctx, target, ref = _root_ctx(ctx, con, ver)
    _timed(checks, "w_group",
           lambda: w_group_report(rctx, seed=ver.seed, trials=ver.trials,
                                  coeff_bound=ver.coeff_bound,
                                  degree_bound=ver.degree_bound))
    _timed(checks, "specialize",
           lambda: specialize(rctx, target, ref=ref, seed=ver.seed,
                              coeff_bound=ver.coeff_bound,
                              degree_bound=ver.degree_bound))
    _timed(checks, "word_assoc",
           lambda: word_assoc_report(rctx, seed=ver.seed, trials=ver.trials,
                                     coeff_bound=min(5, ver.coeff_bound),
                                     degree_bound=ver.degree_bound))
    return {"kind": f"rootgroups_{target}",
            "dims": {"W": [rctx.x0_dim, 1], "V": rctx.vdim}, "anisotropy": {}}


# -- output helpers ---------------------------------------------------------------


def _strip_witnesses(obj):
    """Make report values JSON-serializable."""
    if isinstance(obj, dict):
        return {k: _strip_witnesses(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_strip_witnesses(v) for v in obj]
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    return repr(obj)


def write_report(report, path):
    text = json.dumps(_strip_witnesses(report), indent=2, sort_keys=True)
    if path == "-":
        print(text)
    else:
        with open(path, "w") as f:
            f.write(text + "\n")


def summarize(report, stream=None):
    stream = stream or sys.stdout
    inst = report.get("instance", {})
    print(f"instance: {inst.get('kind')}  dims: {inst.get('dims', inst.get('dim'))}",
          file=stream)
    for c in report.get("checks", []):
        name = c.get("name", c.get("axiom", "?"))
        mode = c.get("mode", "")
        status = c.get("status", "?")
        print(f"  [{status:>4}] {name} ({mode})", file=stream)
    for w in report.get("warnings", []):
        print(f"  warning: {w}", file=stream)
    print(f"verdict: {report.get('verdict')}", file=stream)


def main(argv=None):
    parser = argparse.ArgumentParser(prog="quadralg",
                                     description="exact verification of composition "
                                                 "algebras, quadrangular algebras and "
                                                 "Moufang root groups")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("build", "verify", "construct", "rootgroups"):
        p = sub.add_parser(name)
        p.add_argument("config", help="path to a JSON run configuration")
        p.add_argument("--mode", choices=["auto", "symbolic", "random"], default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--out", default=None, help="report path ('-' for stdout)")
    p = sub.add_parser("report")
    p.add_argument("path", help="previously written report JSON")
    args = parser.parse_args(argv)

    if args.command == "report":
        with open(args.path) as f:
            summarize(json.load(f))
        return 0

    try:
        config = load_config(args.config)
        if args.command == "rootgroups" and config.get("construction", {}).get("kind") != "rootgroups":
            _fail("rootgroups subcommand needs a rootgroups construction")
        if args.command == "build":
            ctx = _field_ctx(config)
            ver = Verification(config, args)
            con = config.get("construction", {})
            print(json.dumps(_strip_witnesses(
                {"field": config.get("field"), "construction": con}), indent=2))
            return 0
        report = run(config, args)
    except ConfigParseError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except QuadralgError as e:
        print(f"verification failure: {type(e).__name__}: {e}", file=sys.stderr)
        return 1

    out = args.out or config.get("output")
    if args.command == "construct":
        inst = report["instance"]
        print(json.dumps(_strip_witnesses(inst), indent=2, sort_keys=True))
    if args.command == "rootgroups":
        ctx = _field_ctx(config)
        ver = Verification(config, args)
        rctx, target, ref = _root_ctx(ctx, config["construction"], ver)
        tables = commutator_tables(rctx, seed=ver.seed,
                                   symbolic=ver.mode != "random")
        report["commutator_tables"] = tables
    if out:
        write_report(report, out)
    summarize(report)
    return 0 if report["verdict"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())

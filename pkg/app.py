"""z2harmonic 命令行入口

python app.py exists oneform --seifert 0,-1,2:1,3:1,5:1
python app.py neck index --delta 0.1
python app.py catalog verify
"""
import argparse
import dataclasses
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

import config
from z2harmonic import catalog, neck, orbifold, rates, seifert, spherical, surgery, torus, utils
from z2harmonic.commons import InvalidInputError, NumericalError
from z2harmonic.reports import (
    FORMATS, STATUS_CRITERION_FAILED, STATUS_DISCREPANCY, STATUS_INVALID_INPUT,
    STATUS_NUMERICAL_ERROR, STATUS_OK, Report, emit,
)

logger = logging.getLogger("z2harmonic.cli")

# ---------- 退出码 ----------
EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NUMERICAL = 3
EXIT_DISCREPANCY = 4


# ---------- 参数解析工具 ----------

# 逗号分隔的整数列表，例如 "2,3,5"
def parse_int_list(text):
    try:
        return [int(x) for x in str(text).split(",") if x.strip()]
    except ValueError:
        raise InvalidInputError(f"expected comma-separated integers, got {text!r}")


# 逗号分隔的浮点数列表
def parse_float_list(text):
    try:
        return [float(x) for x in str(text).split(",") if x.strip()]
    except ValueError:
        raise InvalidInputError(f"expected comma-separated numbers, got {text!r}")


# 覆盖剖面: "D" 表示奇异集非空且 dim H^1_- = D，"empty:B" 表示奇异集为空且 b1 = B
def parse_profile(text):
    text = str(text).strip()
    try:
        if text.startswith("empty:"):
            return surgery.CoverProfile(h1_minus=0, z_nonempty=False, b1=int(text.split(":", 1)[1]))
        return surgery.CoverProfile(h1_minus=int(text), z_nonempty=True)
    except ValueError:
        raise InvalidInputError(f"expected a profile 'D' or 'empty:B', got {text!r}")


def parse_complex(text):
    try:
        return complex(str(text).replace(" ", ""))
    except ValueError:
        raise InvalidInputError(f"expected a complex number, got {text!r}")


def section_count(count):
    if count is None:
        return None
    return {"kind": count.kind, "value": count.value}


# ---------- 曲面与线丛 ----------

def cmd_invariants(args, hps):
    surface = orbifold.OrbifoldSurface(args.genus, parse_int_list(args.cones))
    K = orbifold.canonical_bundle(surface)
    K2 = orbifold.tensor(K, K)
    outputs = {
        "surface": str(surface),
        "orb_euler_characteristic": orbifold.orb_euler_characteristic(surface),
        "spin_base": seifert.is_spin_base(surface),
        "canonical_bundle": str(K),
        "canonical_degree": orbifold.degree(K),
        "canonical_square": str(K2),
        "h0_canonical_square": section_count(orbifold.h0_dim(K2)),
    }
    if args.bundle_b is not None:
        betas = parse_int_list(args.bundle_betas) if args.bundle_betas else [0] * surface.n
        L = orbifold.OrbifoldLineBundle(surface, args.bundle_b, tuple(betas))
        outputs.update({
            "bundle": str(L),
            "degree": orbifold.degree(L),
            "desingularized_degree": orbifold.desingularized_degree(L),
            "trivial": orbifold.is_trivial(L),
            "dual": str(orbifold.dual_bundle(L)),
            "riemann_roch": orbifold.riemann_roch_rhs(L),
            "h0": section_count(orbifold.h0_dim(L)),
        })
    inputs = {"genus": args.genus, "cones": args.cones}
    if args.bundle_b is not None:
        inputs.update({"bundle_b": args.bundle_b, "bundle_betas": args.bundle_betas})
    return Report("invariants", inputs, outputs,
                  ["orbifold Euler characteristic 2 - 2g + sum(1/a_i - 1)",
                   "Kawasaki-Riemann-Roch: h0(L) - h0(L^-1 K) = 1 - g + deg|L|"])


# ---------- 存在性判据 ----------

def existence_outputs(report):
    out = {
        "exists": report.exists,
        "N": report.N,
        "dim_sections": section_count(report.dim_sections),
    }
    if report.kind != "oneform":
        out["twist_k"] = report.twist_k
        out["aux_degree"] = report.aux_degree
        out["convention"] = report.convention
    if report.singular_set is not None:
        out["singular_fibers"] = report.singular_set.fiber_count
        out["singular_set"] = report.singular_set.descriptor
    if report.metric is not None:
        out["volume_over_pi"] = report.metric.volume
        out["fiber_scale"] = report.metric.fiber_scale
        out["xi"] = report.metric.xi
        out["metric_valid"] = report.metric.valid
    if report.advisories:
        out["advisories"] = list(report.advisories)
    return out


def cmd_exists(args, hps):
    Y = seifert.parse_seifert(args.seifert)
    convention = args.convention or hps.seifert.sign_convention
    strict = args.strict or hps.seifert.strict
    inputs = {"seifert": str(Y)}
    if args.kind == "oneform":
        report = seifert.oneform_existence(Y)
        citations = ["1-forms exist iff 3g - 3 + n > 0 and 2g - 4 + n >= 0"]
    else:
        inputs.update({"k": args.k, "aux_degree": args.aux, "convention": convention, "strict": strict})
        run = seifert.spinor_existence if args.kind == "spinor" else seifert.spinc_existence
        report = run(Y, args.k, args.aux, convention=convention, strict=strict)
        citations = ["N = 2kb + 2g - 2 + sum floor((2k beta_i + a_i - 1)/a_i) + 2 deg(aux)",
                     "metric exists when N + 1 - g >= 0 and N >= 2g"]
    status = STATUS_OK if report.exists else STATUS_CRITERION_FAILED
    return Report(f"exists {args.kind}", inputs, existence_outputs(report), citations, status)


def cmd_brieskorn(args, hps):
    exponents = parse_int_list(args.exponents)
    Y = seifert.brieskorn_to_seifert(exponents)
    outputs = {
        "seifert": str(Y),
        "euler_number": seifert.euler_number(Y),
        "homology_sphere": seifert.is_homology_sphere(Y),
        "oneform_exists": seifert.oneform_existence(Y).exists,
    }
    return Report("brieskorn", {"exponents": exponents}, outputs,
                  ["Brieskorn sphere: euler number -1/(a_1 ... a_n)"])


# ---------- 连通和 ----------

def cmd_sum(args, hps):
    kind = args.kind
    if kind == "h1":
        p1, p2 = parse_profile(args.p1), parse_profile(args.p2)
        inputs = {"p1": args.p1, "p2": args.p2}
        outputs = {"h1_minus": surgery.h1_minus_connected_sum(p1, p2)}
        cites = ["H^1_- of a connected sum: direct sum plus one extra real line"]
    elif kind == "surgery":
        inputs = {"h1_minus": args.d, "null_homologous": not args.not_null_homologous}
        outputs = {"h1_minus": surgery.h1_minus_zero_surgery(args.d, not args.not_null_homologous)}
        cites = ["0-surgery along a knot with null-homologous lifts"]
    elif kind == "genus":
        inputs = {"g1": args.g1, "g2": args.g2}
        outputs = {"glued_genus": surgery.glued_cover_genus(args.g1, args.g2),
                   "branch_points": (4 * args.g1 - 4) + (4 * args.g2 - 4)}
        cites = ["Riemann-Hurwitz for the glued branched double cover"]
    elif kind == "zeros":
        profile = surgery.glued_zero_profile(args.g1, args.g2)
        inputs = {"g1": args.g1, "g2": args.g2}
        outputs = {"simple_zeros": profile.simple_zeros,
                   "even_zero_multiplicity": profile.even_zero_multiplicity,
                   "total_with_multiplicity": profile.total_with_multiplicity}
        cites = ["glued quadratic differential: 4(g1+g2)-8 simple zeros and 4 even ones"]
    elif kind == "dims":
        inputs = {"d1": args.d1, "d2": args.d2}
        outputs = {"representation_dim": surgery.representation_dim_sum(args.d1, args.d2)}
        cites = ["dim R(Y1 # Y2) = dim R(Y1) + dim R(Y2) + 6"]
    elif kind == "gap":
        gap = surgery.stratum_gap(args.k1, args.k2)
        inputs = {"k1": args.k1, "k2": args.k2}
        outputs = {"glued": gap.glued, "expected_top": gap.expected_top,
                   "gap": gap.gap, "hypothesis": gap.hypothesis}
        cites = ["glued stratum lies two dimensions below the top stratum"]
    else:
        cable = surgery.cable_descriptor(args.k)
        inputs = {"k": args.k}
        outputs = {"descriptor": cable.descriptor, "components": cable.components}
        cites = ["singular set of the torus sum: a (2k,0) cable link"]
    return Report(f"sum {kind}", inputs, outputs, cites)


# ---------- 颈部谱分析 ----------

def _mode_fit(job):
    d, k, cfg = job
    return neck.integrate_mode_ode(d, k, cfg)


def cmd_neck(args, hps):
    kind = args.kind
    handler = NECK_HANDLERS[kind]
    inputs, outputs, cites, status = handler(args, hps)
    return Report(f"neck {kind}", inputs, outputs, cites, status)


def neck_flow(args, hps):
    report = neck.spectral_flow(args.d)
    outputs = {
        "start_spectrum": report.start_spectrum,
        "end_spectrum": report.end_spectrum,
        "forbidden_weights": report.forbidden_weights,
        "windows": [[w.lower, w.upper, w.kernel, w.cokernel] for w in report.windows],
        "window_checks": list(report.window_checks),
    }
    status = STATUS_OK
    if any(not c["consistent"] for c in report.window_checks):
        status = STATUS_DISCREPANCY
    return {"d": args.d}, outputs, ["slice spectrum flows from Z - d/2 to Z + d/2"], status


def neck_kernel(args, hps):
    window = neck.fredholm_window(args.d, args.mu)
    outputs = {"kernel": window.kernel, "cokernel": window.cokernel,
               "window": [window.lower, window.upper]}
    return {"d": args.d, "mu": args.mu}, outputs, ["modes exp(ks) cosh(s)^(-d/2)"], STATUS_OK


def neck_ode(args, hps):
    cfg = neck.OdeSolveConfig.from_hparams(utils.section(hps, "ode"))
    if args.s_max is not None:
        cfg = dataclasses.replace(cfg, s_max=args.s_max)
    ks = list(range(-args.sweep, args.sweep + 1)) if args.sweep else [args.k]
    jobs = [(args.d, k, cfg) for k in ks]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            fits = list(pool.map(_mode_fit, jobs))
    else:
        fits = [_mode_fit(job) for job in jobs]
    rows = [{"k": f.k, "rate_plus": f.rate_plus, "rate_minus": f.rate_minus,
             "expected_plus": f.expected_plus, "expected_minus": f.expected_minus,
             "r_squared": f.r_squared, "max_rel_deviation": f.max_rel_deviation} for f in fits]
    outputs = rows[0] if len(rows) == 1 else {"modes": rows}
    inputs = {"d": args.d, "k": args.k, "sweep": args.sweep, "s_max": cfg.s_max}
    return inputs, outputs, ["(d/ds - k + (d/2) tanh s) u = 0"], STATUS_OK


def neck_bvp(args, hps):
    cfg = neck.BvpConfig.from_hparams(utils.section(hps, "bvp"))
    model = neck.NeckModel2D(args.d, args.mu, args.r0)
    result = neck.finite_cylinder_bvp(model, args.condition, args.modes, cfg)
    outputs = {
        "kernel_dim": result.kernel_dim,
        "cokernel_dim": result.cokernel_dim,
        "singular_gap": result.singular_gap,
        "kernel_modes": list(result.kernel_modes),
        "boundary_ratios": [[p.component, p.mode, p.boundary_ratio, p.expected_ratio]
                            for p in result.profiles],
    }
    inputs = {"d": args.d, "mu": args.mu, "r0": args.r0, "condition": args.condition}
    return inputs, outputs, ["finite cylinder with boundary conditions (i)/(ii)"], STATUS_OK


def neck_cokernel(args, hps):
    core = args.core if args.core is not None else hps.cokernel.core_radius
    profile = neck.cokernel_norm_profile(args.mu, args.r0, core)
    outputs = {"norm": profile.norm, "core_radius": profile.core_radius,
               "outer_fraction": profile.outer_fraction, "half_fraction": profile.half_fraction}
    return {"mu": args.mu, "r0": args.r0}, outputs, ["kappa-dagger normalized to O(1) weighted norm"], STATUS_OK


def neck_s2(args, hps):
    spectra = spherical.s2_neck_spectra(args.max_level)
    window = spherical.s2_fredholm_window(args.max_level)
    outputs = {
        "functions": list(spectra.functions),
        "oneforms": list(spectra.oneforms),
        "flows": [[f.lambda_sq, f.discriminant, list(f.at_minus), list(f.at_plus)] for f in spectra.flows],
        "mu0": window.mu0,
        "nearest_forbidden": window.nearest_forbidden,
    }
    return {"max_level": args.max_level}, outputs, ["eigenvalues H/2 -+ sqrt(lambda^2 + H^2/4)"], STATUS_OK


def neck_bessel(args, hps):
    problem = torus.ModeProblem3D(args.k, args.ell, args.delta)
    b = hps.bessel
    solution = torus.bessel_mode_solution(problem, parse_float_list(args.radii),
                                          scale_threshold=b.scale_threshold,
                                          series_max=b.series_max, uniform_order=b.uniform_order)
    if solution.residual >= b.residual_tol:
        raise NumericalError(f"Bessel system residual {solution.residual:.3g} above {b.residual_tol}")
    outputs = {"residual": solution.residual,
               "samples": [[s.R, s.alpha, s.beta, s.log_scale] for s in solution.samples]}
    inputs = {"k": args.k, "ell": args.ell, "delta": args.delta, "radii": args.radii}
    return inputs, outputs, ["cokernel modes (I_k, -sgn(ell) I_{k+1})"], STATUS_OK


def neck_asymptotics(args, hps):
    problem = torus.ModeProblem3D(args.k, args.ell, args.delta, args.mu)
    result = torus.cokernel_asymptotics(problem, args.r0, args.r)
    outputs = {"p": result.p, "p0": result.p0, "bessel_ratio": result.bessel_ratio,
               "geometric_factor": result.geometric_factor, "ratio": result.ratio,
               "deviation": result.deviation}
    if result.advisory:
        outputs["advisory"] = result.advisory
    inputs = {"k": args.k, "ell": args.ell, "delta": args.delta, "r0": args.r0, "r": args.r}
    return inputs, outputs, ["cokernel magnitude ~ e^{|ell| delta |R|}/|R| R^{2 mu}"], STATUS_OK


def neck_pairing(args, hps):
    window = tuple(hps.pairing.window)
    limit = hps.pairing.quad_limit
    c, d = parse_complex(args.spinor_c), parse_complex(args.spinor_d)
    xi = [parse_complex(x) for x in str(args.xi).split(",")]
    if len(xi) != 2:
        raise InvalidInputError(f"xi needs two components, got {args.xi!r}")
    result = torus.obstruction_pairing(args.ell, args.delta, args.r0, c, d, xi, window, limit)
    _, det, invertible = torus.pairing_matrix(args.ell, args.delta, args.r0, c, d, window, limit)
    outputs = {"psi": result.psi, "psi_bar": result.psi_bar, "magnitude": result.magnitude,
               "scale": result.scale, "determinant": det, "invertible": invertible}
    inputs = {"ell": args.ell, "delta": args.delta, "r0": args.r0,
              "c": args.spinor_c, "d": args.spinor_d, "xi": args.xi}
    return inputs, outputs, ["pairing ~ c conj(d)/sqrt(|ell|) (1 + O(1/|ell|))"], STATUS_OK


def neck_index(args, hps):
    count = torus.index_3d(args.delta)
    outputs = {"L": count.L, "index": count.index, "constraints": count.constraints,
               "consistent": count.constraints == -count.index}
    return {"delta": args.delta}, outputs, [
        "index of the torus-neck Dirac operator: -(4L+2) with L = floor(1/delta)"], STATUS_OK


def neck_rates(args, hps):
    constant = hps.rates.constant
    prediction = rates.error_rate(args.regime, args.param, args.mu, constant)
    outputs = {"predicted_norm_bound": prediction.predicted_norm_bound,
               "exponent": prediction.exponent, "vanishes": prediction.vanishes,
               "validity": prediction.validity}
    status = STATUS_OK
    if not prediction.vanishes:
        outputs["flag"] = "error does not vanish"
        status = STATUS_CRITERION_FAILED
    if args.check:
        fit = rates.error_rate_check(args.regime, parse_float_list(args.check), args.mu, hps.rates.pinch_c)
        outputs.update({"fitted_exponent": fit.fitted_exponent,
                        "predicted_exponent": fit.predicted_exponent,
                        "vanishes_numerically": fit.vanishes_numerically})
    inputs = {"regime": args.regime, "param": args.param, "mu": args.mu}
    return inputs, outputs, ["cutoff error bounds C/T, C delta^(1-mu), C delta^(-mu/2)/log(1/delta)"], status


NECK_HANDLERS = {
    "flow": neck_flow, "kernel": neck_kernel, "ode": neck_ode, "bvp": neck_bvp,
    "cokernel": neck_cokernel, "s2": neck_s2, "bessel": neck_bessel,
    "asymptotics": neck_asymptotics, "pairing": neck_pairing, "index": neck_index,
    "rates": neck_rates,
}


# ---------- 样例目录 ----------

def cmd_catalog(args, hps):
    if args.action == "list":
        records = []
        for name, manifold, expected in catalog.catalog(args.catalog):
            records.append({"name": name, "kind": expected.kind, "seifert": str(manifold),
                            "k": expected.twist_k, "aux_degree": expected.aux_degree,
                            "expected": catalog.summarize(expected)})
        return Report("catalog list", {"catalog": args.catalog}, {"records": records})

    convention = args.convention or hps.seifert.sign_convention
    entries = catalog.load_catalog(args.catalog)
    checks = catalog.verify_catalog(entries, convention, hps.seifert.strict, hps.seifert.sweep_k_max)
    records = []
    for check in checks:
        record = {"name": check.name, "status": check.status,
                  "expected": check.expected, "computed": check.computed}
        if check.sweep:
            record["sweep"] = check.sweep
        records.append(record)
    status = STATUS_OK
    if any(c.status == catalog.STATUS_DISCREPANCY for c in checks):
        status = STATUS_DISCREPANCY
    return Report("catalog verify", {"convention": convention}, {"records": records},
                  [c.citation for c in checks], status)


# ---------- 命令行定义 ----------

def build_parser():
    p = argparse.ArgumentParser(prog="z2harmonic",
                                description="Z2-harmonic spinors and 1-forms on Seifert manifolds.")
    p.add_argument("-c", "--config", default=config.DEFAULT_CONFIG_PATH, help="JSON config file")
    p.add_argument("--format", choices=FORMATS, default="plain", help="standard output format")
    p.add_argument("--output", help="write the structured report to this file")
    p.add_argument("--output-format", choices=("json", "csv"), default="json")
    p.add_argument("--log-dir", help="also log to <log-dir>/z2harmonic.log")
    sub = p.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="orbifold surface and line bundle arithmetic")
    inv.add_argument("--genus", type=int, default=0)
    inv.add_argument("--cones", default="", help="cone orders, e.g. 2,3,5")
    inv.add_argument("--bundle-b", type=int)
    inv.add_argument("--bundle-betas", default="")
    inv.set_defaults(handler=cmd_invariants)

    ex = sub.add_parser("exists", help="existence criteria on a Seifert manifold")
    ex.add_argument("kind", choices=("spinor", "spinc", "oneform"))
    ex.add_argument("--seifert", required=True, help="genus,b,a1:b1,...")
    ex.add_argument("--k", type=int, default=1)
    ex.add_argument("--aux", type=int, default=0)
    ex.add_argument("--convention", choices=seifert.CONVENTIONS)
    ex.add_argument("--strict", action="store_true", help="require N + 1 - g >= 1")
    ex.set_defaults(handler=cmd_exists)

    br = sub.add_parser("brieskorn", help="Seifert invariants of a Brieskorn sphere")
    br.add_argument("exponents", help="pairwise coprime exponents, e.g. 2,3,5")
    br.set_defaults(handler=cmd_brieskorn)

    sm = sub.add_parser("sum", help="connected-sum bookkeeping")
    sm.add_argument("kind", choices=("h1", "zeros", "genus", "dims", "gap", "cable", "surgery"))
    sm.add_argument("--p1", default="0")
    sm.add_argument("--p2", default="0")
    sm.add_argument("--g1", type=int, default=2)
    sm.add_argument("--g2", type=int, default=2)
    sm.add_argument("--d1", type=int, default=0)
    sm.add_argument("--d2", type=int, default=0)
    sm.add_argument("--k1", type=int, default=0)
    sm.add_argument("--k2", type=int, default=0)
    sm.add_argument("--k", type=int, default=1)
    sm.add_argument("--d", type=int, default=0)
    sm.add_argument("--not-null-homologous", action="store_true")
    sm.set_defaults(handler=cmd_sum)

    nk = sub.add_parser("neck", help="model-neck spectral checks")
    nk.add_argument("kind", choices=sorted(NECK_HANDLERS))
    nk.add_argument("--d", type=int, default=1)
    nk.add_argument("--k", type=int, default=0)
    nk.add_argument("--mu", type=float, default=0.0)
    nk.add_argument("--r0", type=float, default=50.0)
    nk.add_argument("--r", type=float, default=-18.0)
    nk.add_argument("--condition", choices=("i", "ii"), default="i")
    nk.add_argument("--modes", type=int, help="Fourier modes |j| <= MODES")
    nk.add_argument("--s-max", type=float)
    nk.add_argument("--sweep", type=int, default=0, help="fit all modes |k| <= SWEEP")
    nk.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    nk.add_argument("--core", type=float)
    nk.add_argument("--max-level", type=int, default=4)
    nk.add_argument("--ell", type=int, default=5)
    nk.add_argument("--delta", type=float, default=0.1)
    nk.add_argument("--radii", default="1,2,5,10")
    nk.add_argument("--spinor-c", default="1", help="spinor constant c of the pairing")
    nk.add_argument("--spinor-d", default="1", help="spinor constant d of the pairing")
    nk.add_argument("--xi", default="1,0")
    nk.add_argument("--regime", choices=[r.value for r in rates.RateRegime], default="spinor_neck_stretch")
    nk.add_argument("--param", type=float, default=100.0)
    nk.add_argument("--check", help="comma-separated parameters for the numerical scaling fit")
    nk.set_defaults(handler=cmd_neck)

    cat = sub.add_parser("catalog", help="named examples")
    cat.add_argument("action", choices=("verify", "list"))
    cat.add_argument("--catalog", default=config.CATALOG_PATH)
    cat.add_argument("--convention", choices=seifert.CONVENTIONS)
    cat.set_defaults(handler=cmd_catalog)
    return p


# ---------- 主流程 ----------

EXIT_CODES = {
    STATUS_OK: EXIT_OK,
    STATUS_CRITERION_FAILED: EXIT_OK,
    STATUS_DISCREPANCY: EXIT_DISCREPANCY,
    STATUS_NUMERICAL_ERROR: EXIT_NUMERICAL,
    STATUS_INVALID_INPUT: EXIT_INVALID_INPUT,
}


def command_name(args):
    for attr in ("kind", "action"):
        if getattr(args, attr, None):
            return f"{args.command} {getattr(args, attr)}"
    return args.command


def write_report(report, args):
    sys.stdout.write(emit(report, args.format).decode("utf-8"))
    if args.output:
        with open(args.output, "wb") as f:
            f.write(emit(report, args.output_format))


def run(argv=None):
    """解析参数、执行子命令并输出报告，返回退出码。"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INVALID_INPUT
    if args.log_dir:
        utils.get_logger(args.log_dir)

    try:
        hps = utils.get_hparams_from_file(args.config)
        report = args.handler(args, hps)
    except (OSError, ValueError) as e:
        # InvalidInputError 属于 ValueError
        logger.error("%s: %s", command_name(args), e)
        report = Report(command_name(args), {}, {"error": str(e)}, [], STATUS_INVALID_INPUT)
    except NumericalError as e:
        logger.error("%s: %s", command_name(args), e)
        report = Report(command_name(args), {}, {"error": str(e)}, [], STATUS_NUMERICAL_ERROR)

    write_report(report, args)
    return EXIT_CODES[report.status]


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end: solve, verify, distribution, weights, indicial."""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from . import bethe, heine, qsl, singular, weights, wilson
from .awop import QParam
from .heine import HeineBoundError, SolverOptions
from .poly import Poly

SCHEMA = "bethe-qsl/1"
INDETERMINATE = "indeterminate"
EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2
# residuals of solutions carrying these flags are not meaningful numbers
SINGULAR_FLAGS = {"root_at_boundary", "root_collision", "singular_point", "degenerate"}
LIST_OPTIONS = {"--spins", "--a", "--pi", "--phi", "--x", "--y", "--q", "--eta", "--eta-imag"}


class ConfigError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    text = text.strip()
    if ":" in text:
        re_part, im_part = text.split(":", 1)
        return complex(float(re_part), float(im_part))
    return complex(float(text))


def parse_list(text):
    if text is None:
        return None
    text = text.strip()
    if not text:
        return []
    try:
        return [parse_complex(v) for v in text.split(",")]
    except ValueError as exc:
        raise ConfigError(f"cannot parse list {text!r}") from exc


def _num(v):
    """Real scalar for JSON: finite float, -0.0 folded to 0.0."""
    v = float(v)
    if not math.isfinite(v):
        return INDETERMINATE
    return v + 0.0


def cjson(z):
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        return INDETERMINATE
    return [_num(z.real), _num(z.imag)]


def clist(values):
    return [cjson(v) for v in np.asarray(values, dtype=complex).ravel()]


@dataclass(frozen=True)
class RunConfig:
    """Everything a run depends on, in a canonical serializable form."""

    command: str = "solve"
    model: str = "xxz"
    q: complex | None = None
    eta: complex | None = None
    spins: tuple | None = None
    a: tuple | None = None
    L: int | None = None
    spin: float | None = None
    pi: tuple | None = None
    phi: tuple | None = None
    n: int = 0
    tolerance: float = 1e-10
    starts: int = 32
    seed: int = 0
    max_iter: int = 100
    format: str = "json"

    def solver_options(self) -> SolverOptions:
        return SolverOptions(tolerance=self.tolerance, starts=self.starts, seed=self.seed,
                             max_iter=self.max_iter)

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, complex):
                v = cjson(v)
            elif isinstance(v, tuple):
                v = [cjson(x) for x in v]
            out[f.name] = v
        return out

    @classmethod
    def from_dict(cls, data: dict) -> RunConfig:
        kwargs = {}
        names = {f.name for f in fields(cls)}
        for key, v in data.items():
            if key not in names:
                raise ConfigError(f"unknown config key {key!r}")
            if key in ("q", "eta") and v is not None:
                v = complex(*v)
            elif key in ("spins", "a", "pi", "phi") and v is not None:
                v = tuple(complex(*x) for x in v)
            kwargs[key] = v
        return cls(**kwargs)

    def canonical(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def config_from_args(args) -> RunConfig:
    eta = None
    if getattr(args, "eta", None) is not None or getattr(args, "eta_imag", None) is not None:
        re_part = parse_complex(args.eta) if args.eta is not None else 0j
        im_part = float(args.eta_imag) if args.eta_imag is not None else 0.0
        eta = re_part + 1j * im_part
    q = parse_complex(args.q) if getattr(args, "q", None) is not None else None

    def tup(name):
        v = parse_list(getattr(args, name, None))
        return tuple(v) if v is not None else None

    return RunConfig(
        command=args.command,
        model=getattr(args, "model", "xxz"),
        q=q,
        eta=eta,
        spins=tup("spins"),
        a=tup("a"),
        L=getattr(args, "L", None),
        spin=getattr(args, "spin", None),
        pi=tup("pi"),
        phi=tup("phi"),
        n=getattr(args, "n", 0) or 0,
        tolerance=args.tolerance,
        starts=args.starts,
        seed=args.seed,
        max_iter=args.max_iter,
        format=args.format,
    )


# -- model setup ---------------------------------------------------------------

def xxz_params(cfg: RunConfig) -> qsl.XxzParams:
    if cfg.spins is not None:
        if cfg.eta is None:
            if cfg.q is None:
                raise ConfigError("xxz model needs --eta/--eta-imag or --q")
            eta = QParam.from_q(cfg.q).eta
        else:
            eta = cfg.eta
        return qsl.XxzParams.from_spins(cfg.spins, eta)
    if cfg.a is not None:
        if cfg.q is not None:
            q = QParam.from_q(cfg.q)
        elif cfg.eta is not None:
            q = QParam.from_eta(cfg.eta)
        else:
            raise ConfigError("xxz model needs --q or --eta")
        return qsl.XxzParams(q, tuple(cfg.a))
    raise ConfigError("xxz model needs --spins or --a")


def _params_block(cfg: RunConfig, params=None, extra=None) -> dict:
    block = {}
    if params is not None:
        block["q"] = cjson(params.q.q)
        block["eta"] = cjson(params.q.eta)
        if params.s is not None:
            block["spins"] = clist(params.s)
        block["a"] = clist(params.a)
        block["N"] = params.N
    block["n"] = cfg.n
    if extra:
        block.update(extra)
    return block


def _residual_list(res, flags):
    if set(flags) & SINGULAR_FLAGS:
        return [INDETERMINATE] * len(res)
    return clist(res)


def solve_xxz(cfg: RunConfig):
    params = xxz_params(cfg)
    problem = qsl.QslProblem.from_params(params, cfg.n)
    sols, diag = qsl.heine_stieltjes_solve(problem, cfg.solver_options())
    out = []
    for sol in sols:
        if cfg.n:
            roots = bethe.extract_lambdas(sol.y)
            lam = roots.lambdas
            if params.s is not None:
                res = bethe.xxz_residuals(lam, params.s, params.q.eta)
            else:
                res = bethe.general_residuals(lam, problem.Pi, problem.Phi, params.q.eta)
        else:
            lam, res = np.zeros(0), np.zeros(0)
        out.append(_solution_json(sol, lam, res))
    report = _report(cfg, "xxz", _params_block(cfg, params), problem.Pi, problem.Phi, out, diag)
    return report, bool(sols)


def solve_xxx(cfg: RunConfig):
    if cfg.L is not None:
        params, form = wilson.xxx_ground_config(cfg.L, cfg.spin if cfg.spin is not None else 0.5)
        extra = {"L": cfg.L, "spin": _num(form.spin), "zero_root": form.zero_root,
                 "ground_sector_n": form.n_ground}
    elif cfg.spins is not None:
        params = wilson.XxxParams.from_spins(cfg.spins)
        extra = {}
    else:
        raise ConfigError("xxx model needs --L or --spins")
    problem = wilson.WilsonProblem.from_params(params, cfg.n)
    try:
        scale = wilson.display_normalization(problem.P, problem.Q)
    except ValueError:
        scale = 1.0
    sols, diag = wilson.xxx_heine_solve(problem, cfg.solver_options())
    out = []
    for sol in sols:
        y = np.sqrt(sol.roots.astype(complex))
        res = wilson.xxx_residuals(y, params.s, extra_factor=True)
        entry = _solution_json(sol, y, res)
        entry["eigenvalue"] = cjson(scale * sol.r.padded(problem.r_degree + 1)[-1])
        out.append(entry)
    block = {"spins": clist(params.s), "N": params.N, "n": cfg.n, "normalization": _num(scale)}
    block.update(extra)
    report = _report(cfg, "xxx", block, problem.P, problem.Q, out, diag)
    return report, bool(sols)


def solve_heine_ode(cfg: RunConfig):
    if cfg.pi is None or cfg.phi is None:
        raise ConfigError("heine-ode model needs --pi and --phi")
    Pi, Phi = Poly(list(cfg.pi)), Poly(list(cfg.phi))
    sols, diag = bethe.heine_ode_solve(Pi, Phi, cfg.n, cfg.solver_options())
    out = []
    for sol in sols:
        try:
            res = bethe.heine_ode_residuals(sol.roots, Pi, Phi)
        except ValueError:
            res = np.full(sol.roots.size, np.nan)
        out.append(_solution_json(sol, sol.roots, res))
    report = _report(cfg, "heine-ode", {"n": cfg.n}, Pi, Phi, out, diag)
    return report, bool(sols)


def _solution_json(sol, lambdas, residuals) -> dict:
    return {
        "y_coeffs": clist(sol.y.coeffs),
        "r_coeffs": clist(sol.r.coeffs),
        "lambdas": clist(lambdas),
        "residuals": _residual_list(residuals, sol.flags),
        "flags": list(sol.flags),
        "newton_iterations": int(sol.newton_iterations),
    }


def _report(cfg, model, params, Pi, Phi, solutions, diag) -> dict:
    return {
        "schema": SCHEMA,
        "model": model,
        "params": params,
        "pi_coeffs": clist(Pi.coeffs),
        "phi_coeffs": clist(Phi.coeffs),
        "solutions": solutions,
        "diagnostics": diag.as_dict(),
    }


SOLVERS = {"xxz": solve_xxz, "xxx": solve_xxx, "heine-ode": solve_heine_ode}


# -- output ----------------------------------------------------------------------

def _csv_rows(lambdas, residuals, flags):
    lines = ["index,re(lambda),im(lambda),re(residual),im(residual),flag"]
    for k, (lam, res) in enumerate(zip(lambdas, residuals)):
        lr = _fmt_pair(lam)
        rr = _fmt_pair(res)
        lines.append(f"{k},{lr[0]},{lr[1]},{rr[0]},{rr[1]},{flags[k] if k < len(flags) else ''}")
    return lines


def _fmt_pair(v):
    if v == INDETERMINATE:
        return (INDETERMINATE, INDETERMINATE)
    return (repr(v[0]), repr(v[1]))


def emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(report) -> str:
    return json.dumps(report, indent=2) + "\n"


def cmd_solve(cfg: RunConfig, args) -> int:
    solver = SOLVERS.get(cfg.model)
    if solver is None:
        raise ConfigError(f"unknown model {cfg.model!r}")
    try:
        report, ok = solver(cfg)
    except HeineBoundError as exc:
        sys.stderr.write(f"solver failure: {exc}\n")
        return EXIT_FAIL
    if cfg.format == "csv":
        lines = []
        for i, sol in enumerate(report["solutions"]):
            lines.append(f"# solution {i}")
            per_root = [",".join(sol["flags"])] * len(sol["lambdas"])
            lines.extend(_csv_rows(sol["lambdas"], sol["residuals"], per_root))
        emit("\n".join(lines) + "\n", args.out)
    else:
        emit(_dump(report), args.out)
    if not ok:
        sys.stderr.write(f"no solution met tolerance: {json.dumps(report['diagnostics'])}\n")
        return EXIT_FAIL
    return EXIT_OK


def read_roots(path, solution_index=0):
    """Roots from a solve report, a JSON list, or a text file of 're im' / 're,im' lines."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, dict):
        sols = data.get("solutions")
        if sols is None:
            raise ConfigError("report has no solutions")
        if not sols:
            return [], data
        if not 0 <= solution_index < len(sols):
            raise ConfigError("solution index out of range")
        return [complex(*v) for v in sols[solution_index]["lambdas"]], data
    if isinstance(data, list):
        return [complex(*v) if isinstance(v, list) else complex(v) for v in data], None
    roots = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) == 1:
            roots.append(complex(float(parts[0])))
        elif len(parts) == 2:
            roots.append(complex(float(parts[0]), float(parts[1])))
        else:
            raise ConfigError(f"cannot parse root line {line!r}")
    return roots, None


def _merge_report_params(cfg: RunConfig, report) -> RunConfig:
    if report is None:
        return cfg
    p = report.get("params", {})
    changes = {}
    if cfg.model == "xxz" and report.get("model") == "xxz":
        if cfg.spins is None and cfg.a is None:
            if "spins" in p:
                changes["spins"] = tuple(complex(*v) for v in p["spins"])
            elif "a" in p:
                changes["a"] = tuple(complex(*v) for v in p["a"])
        if cfg.eta is None and cfg.q is None and "eta" in p:
            changes["eta"] = complex(*p["eta"])
    if cfg.model == "xxx" and report.get("model") == "xxx" and cfg.spins is None and cfg.L is None:
        changes["spins"] = tuple(complex(*v) for v in p["spins"])
    if cfg.model == "heine-ode" and report.get("model") == "heine-ode" and cfg.pi is None:
        changes["pi"] = tuple(complex(*v) for v in report["pi_coeffs"])
        changes["phi"] = tuple(complex(*v) for v in report["phi_coeffs"])
    if not changes:
        return cfg
    return replace(cfg, **changes)


def residuals_for(cfg: RunConfig, roots) -> np.ndarray:
    roots = np.asarray(roots, dtype=complex)
    if cfg.model == "xxz":
        params = xxz_params(cfg)
        if params.s is not None:
            return bethe.xxz_residuals(roots, params.s, params.q.eta)
        Pi, Phi = qsl.build_pi_phi(params)
        return bethe.general_residuals(roots, Pi, Phi, params.q.eta)
    if cfg.model == "xxx":
        if cfg.L is not None:
            params, _ = wilson.xxx_ground_config(cfg.L, cfg.spin if cfg.spin is not None else 0.5)
        elif cfg.spins is not None:
            params = wilson.XxxParams.from_spins(cfg.spins)
        else:
            raise ConfigError("xxx model needs --L or --spins")
        return wilson.xxx_residuals(roots, params.s, extra_factor=True)
    if cfg.model == "heine-ode":
        if cfg.pi is None or cfg.phi is None:
            raise ConfigError("heine-ode model needs --pi and --phi")
        return bethe.heine_ode_residuals(roots, Poly(list(cfg.pi)), Poly(list(cfg.phi)))
    raise ConfigError(f"unknown model {cfg.model!r}")


def cmd_verify(cfg: RunConfig, args) -> int:
    try:
        roots, report = read_roots(args.roots, args.solution)
    except (OSError, ValueError, TypeError, KeyError) as exc:
        raise ConfigError(f"cannot read roots: {exc}") from exc
    cfg = _merge_report_params(cfg, report)
    res = residuals_for(cfg, roots) if roots else np.zeros(0, dtype=complex)
    mags = np.abs(res)
    finite = bool(np.all(np.isfinite(mags)))
    worst = float(np.max(mags)) if mags.size else 0.0
    ok = finite and worst < args.threshold
    flags = ["fail" if not (np.isfinite(m) and m < args.threshold) else "" for m in mags]
    if cfg.format == "csv":
        emit("\n".join(_csv_rows(clist(roots), clist(res), flags)) + "\n", args.out)
    else:
        out = {
            "schema": SCHEMA,
            "model": cfg.model,
            "roots": clist(roots),
            "residuals": clist(res),
            "max_residual": _num(worst) if finite else INDETERMINATE,
            "worst_index": int(np.argmax(np.nan_to_num(mags, nan=np.inf))) if mags.size else None,
            "threshold": args.threshold,
            "pass": ok,
        }
        emit(_dump(out), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def arcsine_ks(x) -> float:
    """Kolmogorov-Smirnov distance between the sample and the arcsine law on (-1, 1)."""
    x = np.sort(np.asarray(x, dtype=float))
    n = x.size
    if n == 0:
        return 0.0
    cdf = 0.5 + np.arcsin(np.clip(x, -1, 1)) / np.pi
    k = np.arange(1, n + 1)
    return float(max(np.max(k / n - cdf), np.max(cdf - (k - 1) / n)))


def cmd_distribution(cfg: RunConfig, args) -> int:
    params = xxz_params(cfg)
    if params.N != 2:
        raise ConfigError("distribution needs N = 2 (four spins)")
    s = params.spins()
    x = np.sort(qsl.aw_zeros(cfg.n, s, params.q.eta).astype(complex).real) if cfg.n else np.zeros(0)
    counts, edges = np.histogram(x, bins=args.bins, range=(-1.0, 1.0))
    ks = arcsine_ks(x)
    lam = 0.5 * np.arccos(x.astype(complex))
    res = bethe.xxz_residuals(lam, s, params.q.eta) if args.residuals else np.full(x.size, np.nan)
    gated = args.ks_threshold is not None
    ok = not gated or ks < args.ks_threshold
    if cfg.format == "csv":
        lines = _csv_rows(clist(lam), clist(res), [""] * x.size)
        lines.append(f"# ks_distance,{ks!r}")
        lines.append("# bin_edges," + ",".join(repr(float(e)) for e in edges))
        lines.append("# counts," + ",".join(str(int(c)) for c in counts))
        emit("\n".join(lines) + "\n", args.out)
    else:
        out = {
            "schema": SCHEMA,
            "model": "xxz",
            "params": _params_block(cfg, params),
            "x": [_num(v) for v in x],
            "lambdas": clist(lam),
            "residuals": clist(res),
            "histogram": {"edges": [_num(e) for e in edges], "counts": [int(c) for c in counts]},
            "ks_distance": _num(ks),
            "ks_threshold": args.ks_threshold,
            "pass": ok,
        }
        emit(_dump(out), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_weights(cfg: RunConfig, args) -> int:
    rows = []
    if cfg.model == "xxx":
        if cfg.L is not None:
            params, _ = wilson.xxx_ground_config(cfg.L, cfg.spin if cfg.spin is not None else 0.5)
        elif cfg.spins is not None:
            params = wilson.XxxParams.from_spins(cfg.spins)
        else:
            raise ConfigError("xxx weights need --L or --spins")
        ys = [v.real for v in (parse_list(args.y) or [0.5])]
        for y in ys:
            row = {"y": _num(y), "x": _num(y * y), "w": _num(weights.xxx_weight(y, params.s))}
            if cfg.L is not None and (cfg.spin is None or cfg.spin == 0.5):
                row["closed_form"] = _num(weights.xxx_weight_closed(y, cfg.L))
            rows.append(row)
        block = {"spins": clist(params.s), "N": params.N}
    elif cfg.model == "xxz":
        params = xxz_params(cfg)
        q = params.q.q
        if abs(q.imag) > 1e-15 or not 0 < q.real < 1:
            raise ConfigError("xxz weight needs 0 < q < 1")
        xs = [v.real for v in (parse_list(args.x) or list(np.linspace(-0.9, 0.9, 7)))]
        for x in xs:
            rows.append({"x": _num(x), "w": cjson(weights.xxz_weight(x, params))})
        block = _params_block(cfg, params)
    else:
        raise ConfigError("weights supports --model xxz or xxx")
    if cfg.format == "csv":
        keys = list(rows[0]) if rows else ["x", "w"]
        lines = [",".join(keys)]
        for row in rows:
            vals = []
            for k in keys:
                v = row[k]
                vals.extend([repr(v[0]), repr(v[1])] if isinstance(v, list) else [repr(v)])
            lines.append(",".join(vals))
        emit("\n".join(lines) + "\n", args.out)
    else:
        emit(_dump({"schema": SCHEMA, "model": cfg.model, "params": block, "rows": rows}), args.out)
    return EXIT_OK


def cmd_indicial(cfg: RunConfig, args) -> int:
    params = xxz_params(cfg)
    try:
        result = singular.indicial_exponents(params, args.pivot)
    except IndexError as exc:
        raise ConfigError(str(exc)) from exc
    ok = bool(np.all(result.residual < singular.RESIDUAL_TOL))
    if cfg.format == "csv":
        lines = ["index,re(t),im(t),residual"]
        for k, (t, r) in enumerate(zip(result.exponents, result.residual)):
            lines.append(f"{k},{_num(t.real)!r},{_num(t.imag)!r},{float(r)!r}")
        emit("\n".join(lines) + "\n", args.out)
    else:
        out = {
            "schema": SCHEMA,
            "model": "xxz",
            "params": _params_block(cfg, params),
            "pivot": args.pivot,
            "base_point": cjson(singular.base_point(params, args.pivot)),
            "exponents": clist(result.exponents),
            "residuals": [_num(r) for r in result.residual],
            "complete": result.complete,
        }
        emit(_dump(out), args.out)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "distribution": cmd_distribution,
    "weights": cmd_weights,
    "indicial": cmd_indicial,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--tolerance", type=float, default=1e-10)
    common.add_argument("--starts", type=int, default=32)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-iter", type=int, default=100)
    common.add_argument("--out", default=None, help="write output to FILE instead of stdout")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--model", choices=("xxz", "xxx", "heine-ode"), default="xxz")
    model.add_argument("--q", default=None, help="q as a real number or re:im")
    model.add_argument("--eta", default=None, help="real part of eta (or re:im)")
    model.add_argument("--eta-imag", default=None, help="imaginary part of eta")
    model.add_argument("--spins", default=None, help="comma-separated spins (re or re:im)")
    model.add_argument("--a", default=None, help="comma-separated parameters a_j")
    model.add_argument("--L", type=int, default=None, help="XXX chain length (ground configuration)")
    model.add_argument("--spin", type=float, default=None, help="XXX spin (default 1/2)")
    model.add_argument("--n", type=int, default=0)

    parser = argparse.ArgumentParser(prog="bethe-qsl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("solve", parents=[common, model], help="solve for polynomial eigenfunctions")
    p.add_argument("--pi", default=None, help="heine-ode: Pi coefficients, ascending powers")
    p.add_argument("--phi", default=None, help="heine-ode: Phi coefficients, ascending powers")

    p = sub.add_parser("verify", parents=[common, model], help="evaluate Bethe residuals of given roots")
    p.add_argument("--roots", required=True, help="solve report, JSON list or text file of roots")
    p.add_argument("--solution", type=int, default=0, help="solution index inside a report")
    p.add_argument("--threshold", type=float, default=1e-6)
    p.add_argument("--pi", default=None)
    p.add_argument("--phi", default=None)

    p = sub.add_parser("distribution", parents=[common, model], help="zero histogram and arcsine KS distance")
    p.add_argument("--bins", type=int, default=20)
    p.add_argument("--ks-threshold", type=float, default=None, help="fail when KS distance exceeds this")
    p.add_argument("--residuals", action="store_true", help="also evaluate Bethe residuals")

    p = sub.add_parser("weights", parents=[common, model], help="tabulate weight functions")
    p.add_argument("--x", default=None, help="xxz: comma-separated x in (-1, 1)")
    p.add_argument("--y", default=None, help="xxx: comma-separated y values")

    p = sub.add_parser("indicial", parents=[common, model], help="indicial exponents at a singular point")
    p.add_argument("--pivot", type=int, default=1, help="1-based index of the base parameter")
    return parser


def _join_negative_values(argv):
    """Let list options take values that start with '-', e.g. --spins -0.5,-0.7."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in LIST_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        cfg = config_from_args(args)
        return COMMANDS[args.command](cfg, args)
    except (ConfigError, ValueError, ZeroDivisionError, IndexError) as exc:
        sys.stderr.write(f"invalid configuration: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

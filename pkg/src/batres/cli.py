"""Command-line interface ``batres``.

Subcommands
-----------
verify        run verification suites and report PASS/FAIL per check
spectrum      resonance lattice ``E+-_nl`` and the hyperbolic family ``E_nl``
resonances    pole lattice of the continuum normalization (``--probe`` scans for it)
evolve        expand a test function in ``u-_nl`` and follow the decay semigroup
compare-reps  eigenvalue and analyticity contrast of both representations
eval          tabulate a built-in radial function on a grid

Every subcommand writes text (default), CSV or JSON.  Complex numbers are
two CSV columns ``<name>_re,<name>_im`` and ``{"re": .., "im": ..}`` in JSON.
Settings come from flags, then a ``key=value`` config file, then defaults.
Exit codes: 0 success, 1 failed check, 2 usage error.  ``BATRES_SEED`` is
reserved and ignored; ``BATRES_THREADS`` caps the worker count.
"""

import argparse
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, fields
from typing import Any, List, Optional

import numpy as np

from ._parallel import max_workers
from .continuum_spectrum import (
    ContinuumLabel,
    continuum_eigenfunction,
    normalization_constant,
    resonance_pole,
)
from .errors import BatresError, NonConvergent, PoleAtResonance
from .hyperbolic_rep import (
    HyperbolicLabel,
    hyperbolic_continuum,
    hyperbolic_discrete,
    hyperbolic_eigenvalue,
    hyperbolic_gram,
    representation_report,
)
from .inverted_oscillator import resonance_state
from .oscillator_basis import QuantumNumbers, RadialFunction, ho_radial
from .params_transforms import PhysicalParams, make_params
from .quadrature import gauss_laguerre_rule
from .resonance_engine import (
    bateman_resonance_energy,
    decay_curves,
    evolve,
    expand,
    pole_residue_coefficient,
    semigroup_factor,
)
from .verify import SUITES, run_suites

MAX_PRECISION = 15
COMMANDS = ("verify", "spectrum", "resonances", "evolve", "compare-reps", "eval")
EVAL_FAMILIES = ("ho", "iho_plus", "iho_minus", "continuum", "hyperbolic_disc", "hyperbolic_cont")
BUILTIN_PHI = ("chirp", "gaussian", "resonance")


class UsageError(Exception):
    """Bad arguments or configuration (exit code 2)."""


@dataclass
class RunConfig:
    """Resolved settings of one run."""

    command: str = ""
    gamma: float = 1.0
    omega: Optional[float] = None
    kappa: Optional[float] = None
    hbar: float = 1.0
    n_max: int = 3
    l_max: int = 2
    quad_points: int = 200
    tolerance: Optional[float] = None
    format: str = "text"
    output: Optional[str] = None
    precision: int = 6
    workers: int = 4
    suite: str = "all"
    probe: bool = False
    probes: int = 100
    t: Optional[float] = None
    t_grid: Optional[str] = None
    phi: str = "chirp"
    phi_expr: Optional[str] = None
    phi_l: int = 0
    family: str = "ho"
    at: str = "0:4:9"
    n: int = 0
    l: int = 0
    sign: str = "+"
    epsilon: str = "1"
    nu: str = "0"


_FIELD_TYPES = {
    "gamma": float, "omega": float, "kappa": float, "hbar": float,
    "n_max": int, "l_max": int, "quad_points": int, "tolerance": float,
    "format": str, "output": str, "precision": int, "workers": int,
    "suite": str, "probe": None, "probes": int, "t": float, "t_grid": str,
    "phi": str, "phi_expr": str, "phi_l": int, "family": str, "at": str,
    "n": int, "l": int, "sign": str, "epsilon": str, "nu": str,
}


@dataclass
class Table:
    """Rows of named columns plus the checks that decide the exit code."""

    columns: List[str]
    rows: List[List[Any]]
    checks: List[Any]
    notes: List[str]


# -- formatting ---------------------------------------------------------------

def _clean(x):
    # avoid printing -0.000000
    x = float(x)
    return 0.0 if x == 0.0 else x


def format_real(x, precision):
    """Fixed-point real with ``precision`` decimals."""
    x = _clean(x)
    text = f"{x:.{precision}f}"
    return "0" + text[2:] if text.startswith("-0") and float(text) == 0.0 else text


def format_complex(z, precision):
    """``a+bi`` with fixed decimals, e.g. ``2.000000+1.000000i``."""
    z = complex(z)
    re = format_real(z.real, precision)
    im = format_real(z.imag, precision)
    if not im.startswith("-"):
        im = "+" + im
    return f"{re}{im}i"


def format_error(x, precision):
    """Scientific notation for errors and tolerances."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    return f"{x:.{precision}e}" if x != 0.0 else "0"


def _csv_header(columns, rows):
    head = []
    for j, name in enumerate(columns):
        if rows and isinstance(rows[0][j], complex):
            head += [f"{name}_re", f"{name}_im"]
        else:
            head.append(name)
    return head


def format_float(x, precision):
    """Fixed point, or scientific below ``1e-3`` so small values keep their digits."""
    x = _clean(x)
    if x == 0.0 or abs(x) >= 1e-3 or not math.isfinite(x):
        return format_real(x, precision)
    return f"{x:.{precision}e}"


def _csv_cell(v, precision):
    if isinstance(v, complex):
        return [format_real(v.real, precision), format_real(v.imag, precision)]
    if isinstance(v, bool):
        return ["true" if v else "false"]
    if isinstance(v, float):
        return [format_float(v, precision)]
    return [str(v)]


def render_csv(table, precision):
    """CSV text: header row, complex values as re/im pairs, LF endings."""
    out = [",".join(_csv_header(table.columns, table.rows))]
    for row in table.rows:
        cells = []
        for v in row:
            cells += _csv_cell(v, precision)
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def _json_value(v, precision):
    if isinstance(v, complex):
        return {"re": round(_clean(v.real), precision), "im": round(_clean(v.imag), precision)}
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if not math.isfinite(v):
            return None
        return v if abs(v) < 1e-3 and v != 0.0 else round(_clean(v), precision)
    if isinstance(v, (int, np.integer)):
        return int(v)
    return v


def summarize(table):
    """``{passed, failed, max_error}`` over the checks (rows count when there are none)."""
    if not table.checks:
        return {"passed": len(table.rows), "failed": 0, "max_error": 0.0}
    errors = [float(c.error) for c in table.checks]
    finite = [e for e in errors if math.isfinite(e)]
    return {
        "passed": sum(c.passed for c in table.checks),
        "failed": sum(not c.passed for c in table.checks),
        "max_error": max(finite) if len(finite) == len(errors) else None,
    }


def render_json(table, config, precision):
    """JSON object ``{config, results, summary}`` with sorted keys."""
    results = [{name: _json_value(v, precision) for name, v in zip(table.columns, row)}
               for row in table.rows]
    doc = {"config": _config_dict(config), "results": results, "summary": summarize(table)}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _config_dict(config):
    out = {}
    for key, value in asdict(config).items():
        out[key] = value
    return out


def _text_cell(v, precision):
    if isinstance(v, complex):
        return format_complex(v, precision)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return format_float(v, precision)
    return str(v)


def render_text(table, precision):
    """Aligned plain-text table followed by notes and check lines."""
    buf = io.StringIO()
    if table.columns and table.rows:
        cells = [[_text_cell(v, precision) for v in row] for row in table.rows]
        widths = [max(len(c), *(len(r[j]) for r in cells)) for j, c in enumerate(table.columns)]
        buf.write("  ".join(c.ljust(w) for c, w in zip(table.columns, widths)).rstrip() + "\n")
        for r in cells:
            buf.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    for note in table.notes:
        buf.write(note + "\n")
    for c in table.checks:
        status = "PASS" if c.passed else "FAIL"
        buf.write(f"{status}  {c.name}  error={format_error(c.error, precision)}  "
                  f"tol={format_error(c.tolerance, precision)}\n")
    s = summarize(table)
    if table.checks:
        me = "n/a" if s["max_error"] is None else format_error(s["max_error"], precision)
        buf.write(f"summary: passed={s['passed']} failed={s['failed']} max_error={me}\n")
    return buf.getvalue()


# -- parsing helpers ----------------------------------------------------------

def parse_complex(text):
    """Parse ``"2"``, ``"1+0.5i"``, ``"3j"`` into a complex number."""
    t = str(text).strip().replace(" ", "").replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def parse_grid(text):
    """``"a:b:n"`` (``n`` evenly spaced points) or a comma list of reals."""
    t = str(text).strip()
    try:
        if ":" in t:
            parts = t.split(":")
            if len(parts) != 3:
                raise ValueError
            a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
            if n < 1:
                raise ValueError
            return np.linspace(a, b, n)
        values = np.array([float(x) for x in t.split(",") if x.strip()])
        if values.size == 0:
            raise ValueError
        return values
    except ValueError:
        raise UsageError(f"bad grid {text!r}; use start:stop:num or a comma list") from None


def read_config_file(path):
    """``key=value`` lines; ``#`` starts a comment, blank lines are skipped."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path!r}: {exc.strerror}") from None
    out = {}
    for number, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{number}: expected key=value")
        key, value = (p.strip() for p in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _FIELD_TYPES or key == "command":
            raise UsageError(f"{path}:{number}: unknown key {key!r}")
        out[key] = _coerce(key, value)
    return out


def _coerce(key, value):
    kind = _FIELD_TYPES[key]
    if kind is None:
        low = str(value).strip().lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise UsageError(f"{key} expects a boolean, got {value!r}")
    try:
        return kind(value)
    except ValueError:
        raise UsageError(f"{key} expects {kind.__name__}, got {value!r}") from None


# -- argument parser ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p):
    g = p.add_argument_group("parameters")
    g.add_argument("--gamma", type=float, help="damping constant gamma > 0")
    g.add_argument("--omega", type=float, help="frequency omega > 0 (or give --kappa)")
    g.add_argument("--kappa", type=float, help="spring constant, kappa > gamma^2")
    g.add_argument("--hbar", type=float)
    g.add_argument("--n-max", dest="n_max", type=int)
    g.add_argument("--l-max", dest="l_max", type=int)
    g.add_argument("--quad-points", dest="quad_points", type=int)
    g.add_argument("--tolerance", type=float)
    o = p.add_argument_group("output")
    o.add_argument("--format", choices=("text", "csv", "json"))
    o.add_argument("--output", "-o", help="write to this file instead of stdout")
    o.add_argument("--precision", type=int, help=f"decimals, default 6, at most {MAX_PRECISION}")
    o.add_argument("--workers", type=int, help="worker threads (capped by BATRES_THREADS)")
    o.add_argument("--config", help="key=value config file")


def build_parser():
    """The ``argparse`` parser; every option defaults to ``None`` so that
    config-file values can fill the gaps."""
    parser = _Parser(prog="batres", description=__doc__.split("\n\n")[0],
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", choices=sorted(SUITES) + ["all"])
    _common(p)

    p = sub.add_parser("spectrum", help="E+-_nl lattice and hyperbolic E_nl")
    _common(p)

    p = sub.add_parser("resonances", help="normalization poles eps_nl")
    p.add_argument("--probe", action="store_const", const=True,
                   help="scan the complex eps plane instead of listing the closed form")
    _common(p)

    p = sub.add_parser("evolve", help="decay curves |c_nl(t)|")
    p.add_argument("--t", type=float, help="a single time t >= 0")
    p.add_argument("--t-grid", dest="t_grid", help="times as start:stop:num or a comma list")
    p.add_argument("--phi", choices=BUILTIN_PHI, help="built-in test function")
    p.add_argument("--phi-expr", dest="phi_expr",
                   help="expression in rho (numpy names allowed), e.g. 'exp(-(0.1-0.5j)*rho**2)'")
    p.add_argument("--phi-l", dest="phi_l", type=int, help="angular index of --phi-expr")
    _common(p)

    p = sub.add_parser("compare-reps", help="elliptic vs hyperbolic representation")
    p.add_argument("--probes", type=int, help="number of nu-plane probe points")
    _common(p)

    p = sub.add_parser("eval", help="tabulate a radial function")
    p.add_argument("--family", choices=EVAL_FAMILIES)
    p.add_argument("--at", help="rho grid as start:stop:num or a comma list")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--sign", choices=("+", "-"))
    p.add_argument("--epsilon", help="continuum energy (complex allowed) or H_0 eigenvalue")
    p.add_argument("--nu", help="boost label nu (complex allowed)")
    _common(p)
    return parser


def resolve_config(argv):
    """Parse ``argv`` and merge flags > config file > defaults."""
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise UsageError(f"missing subcommand; choose from {', '.join(COMMANDS)}")
    values = {}
    if args.config:
        values.update(read_config_file(args.config))
    for key, value in vars(args).items():
        if key in ("config", "command") or value is None:
            continue
        values[key] = value
    config = RunConfig(command=args.command)
    names = {f.name for f in fields(RunConfig)}
    for key, value in values.items():
        if key in names:
            setattr(config, key, value)
    if not 0 <= config.precision <= MAX_PRECISION:
        raise UsageError(f"--precision must be between 0 and {MAX_PRECISION}")
    if config.format not in ("text", "csv", "json"):
        raise UsageError(f"unknown format {config.format!r}")
    if config.n_max < 0 or config.l_max < 0:
        raise UsageError("--n-max and --l-max must be >= 0")
    if config.quad_points < 1:
        raise UsageError("--quad-points must be >= 1")
    if config.tolerance is not None and not config.tolerance > 0:
        raise UsageError("--tolerance must be positive")
    if config.suite not in set(SUITES) | {"all"}:
        raise UsageError(f"unknown suite {config.suite!r}")
    return config


def make_run_params(config):
    """``PhysicalParams`` from ``gamma`` and either ``omega`` or ``kappa`` (default omega = 1)."""
    if config.omega is not None and config.kappa is not None:
        raise UsageError("give either --omega or --kappa, not both")
    try:
        if config.kappa is not None:
            return make_params(config.gamma, config.kappa, config.hbar)
        omega = 1.0 if config.omega is None else config.omega
        return PhysicalParams.from_omega(config.gamma, omega, config.hbar)
    except BatresError as exc:
        raise UsageError(str(exc)) from None


# -- subcommands --------------------------------------------------------------

@dataclass(frozen=True)
class _Check:
    name: str
    error: float
    tolerance: float

    @property
    def passed(self):
        return bool(self.error <= self.tolerance)


def cmd_verify(config, params):
    names = sorted(SUITES) if config.suite == "all" else [config.suite]
    ordered = [n for n in SUITES if n in names]
    results = run_suites(ordered, params, config.tolerance, max_workers(config.workers))
    rows, checks = [], []
    for suite, suite_checks in results:
        for c in suite_checks:
            rows.append([suite, c.name, float(c.error), float(c.tolerance), bool(c.passed)])
            checks.append(_Check(f"{suite}: {c.name}", float(c.error), float(c.tolerance)))
    if config.format == "text":
        # the PASS/FAIL lines carry everything
        return Table([], [], checks, [])
    return Table(["suite", "check", "error", "tolerance", "passed"], rows, checks, [])


def cmd_spectrum(config, params):
    rows, notes = [], []
    for n in range(config.n_max + 1):
        for l in range(-config.l_max, config.l_max + 1):
            qn = QuantumNumbers(n, l)
            ep = bateman_resonance_energy(qn, +1, params).value
            em = bateman_resonance_energy(qn, -1, params).value
            rows.append(["resonance", n, l, ep, em])
            p = config.precision
            notes.append(f"n={n},l={l},E+ = {format_complex(ep, p)}")
            notes.append(f"n={n},l={l},E- = {format_complex(em, p)}")
    for n in range(config.n_max + 1):
        for l in range(config.l_max + 1):
            eh = hyperbolic_eigenvalue(n, l, params).value
            rows.append(["hyperbolic", n, l, eh, eh])
            notes.append(f"n={n},l={l},Eh = {format_complex(eh, config.precision)}")
    table = Table(["family", "n", "l", "E_plus", "E_minus"], rows, [], [])
    if config.format == "text":
        table = Table([], [], [], notes)
    return table


def _probe_poles(config, params):
    """Scan ``eps = x + i y`` with ``y`` on a half-step lattice and ``x`` on a line grid."""
    gh = params.gamma * params.hbar
    top = 2 * config.n_max + config.l_max + 1
    ys = gh * 0.5 * np.arange(1, 2 * top + 1)
    xs = gh * np.linspace(-2.0, 2.0, 9)
    found, probed = [], 0
    for l in range(-config.l_max, config.l_max + 1):
        for y in ys:
            for x in xs:
                probed += 1
                try:
                    normalization_constant(ContinuumLabel(complex(x, y), l), params)
                except PoleAtResonance as exc:
                    if exc.n <= config.n_max:
                        found.append((exc.n, l, complex(x, y)))
    return found, probed


def cmd_resonances(config, params):
    lattice = {(n, l): resonance_pole(n, l, params)
               for n in range(config.n_max + 1) for l in range(-config.l_max, config.l_max + 1)}
    checks, notes = [], []
    if config.probe:
        found, probed = _probe_poles(config, params)
        detected = {(n, l): eps for n, l, eps in found}
        missing = sorted(set(lattice) - set(detected))
        spurious = sorted(k for k in detected if k not in lattice)
        offset = max([abs(detected[k] - lattice[k]) for k in detected if k in lattice] + [0.0])
        notes.append(f"probed {probed} points, detected {len(found)} poles")
        checks.append(_Check("every lattice pole detected", float(len(missing)), 0.0))
        checks.append(_Check("no off-lattice pole", float(len(spurious)), 0.0))
        checks.append(_Check("detected location vs i gamma hbar (|l|+2n+1)", offset, 1e-12))
        keys = sorted(detected)
        source = detected
    else:
        keys = sorted(lattice)
        source = lattice
    rows = []
    for n, l in keys:
        qn = QuantumNumbers(n, l)
        rows.append([n, l, complex(source[(n, l)]),
                     bateman_resonance_energy(qn, +1, params).value,
                     bateman_resonance_energy(qn, -1, params).value,
                     complex(pole_residue_coefficient(qn, params))])
    return Table(["n", "l", "epsilon", "E_plus", "E_minus", "residue_coefficient"], rows, checks, notes)


_EXPR_NAMES = {name: getattr(np, name) for name in (
    "exp", "sin", "cos", "tan", "sinh", "cosh", "tanh", "sqrt", "log", "abs", "pi", "e",
    "arctan", "where")}


def build_phi(config, params):
    """Test function for ``evolve``: a built-in choice or ``--phi-expr``."""
    k = params.gamma / params.hbar
    if config.phi_expr:
        expr = config.phi_expr
        try:
            code = compile(expr, "<phi-expr>", "eval")
        except SyntaxError as exc:
            raise UsageError(f"bad --phi-expr: {exc.msg}") from None
        for name in code.co_names:
            if name not in _EXPR_NAMES and name != "rho":
                raise UsageError(f"--phi-expr may not use {name!r}")

        def evaluate(rho):
            val = eval(code, {"__builtins__": {}}, dict(_EXPR_NAMES, rho=rho))
            return np.broadcast_to(np.asarray(val, dtype=np.complex128), np.shape(rho)).copy()

        return RadialFunction(evaluate, "generic", config.phi_l, {"expr": expr}, params)
    if config.phi == "chirp":
        # lies in the decay domain: its u- expansion converges geometrically
        beta = complex(0.1, -0.5) * k
        return RadialFunction(lambda r: np.exp(-beta * r * r), "generic", 0, {"beta": beta}, params)
    if config.phi == "gaussian":
        return RadialFunction(lambda r: np.exp(-0.5 * k * r * r), "generic", 0, {"beta": 0.5 * k}, params)
    if config.phi == "resonance":
        a = resonance_state(QuantumNumbers(0, 0), -1, params).radial
        b = resonance_state(QuantumNumbers(1, 0), -1, params).radial
        return RadialFunction(lambda r: a(r) + 0.5 * b(r), "generic", 0, {}, params)
    raise UsageError(f"unknown test function {config.phi!r}")


def cmd_evolve(config, params):
    if config.t is not None and config.t_grid is not None:
        raise UsageError("give either --t or --t-grid, not both")
    if config.t_grid is not None:
        ts = parse_grid(config.t_grid)
    elif config.t is not None:
        ts = np.array([config.t])
    else:
        ts = np.linspace(0.0, 3.0 / params.gamma, 7)
    if np.any(ts < 0):
        raise UsageError("the decay semigroup needs t >= 0")
    phi = build_phi(config, params)
    expansion = expand(phi, -1, (config.n_max, config.l_max), params,
                       workers=max_workers(config.workers))
    curves = decay_curves(expansion, ts)
    rows = []
    for key in sorted(expansion.coefficients):
        n, l = key
        c0 = abs(expansion.coefficients[key])
        for t, amp in zip(ts, curves[key]):
            ratio = abs(semigroup_factor(QuantumNumbers(n, l), -1, t, params))
            rows.append([n, l, float(t), float(c0), float(amp), float(ratio)])
    # the evolved expansion must agree with the closed-form curves
    worst = 0.0
    for t in ts:
        ev = evolve(expansion, float(t))
        for key, c in ev.coefficients.items():
            ref = curves[key][list(ts).index(t)]
            worst = max(worst, abs(abs(c) - ref) / max(ref, 1e-300))
    tol = 1e-12 if config.tolerance is None else config.tolerance
    checks = [_Check("evolve() matches closed-form decay", worst, tol)]
    notes = [f"reconstruction error at n_max={config.n_max}: "
             f"{format_error(expansion.reconstruction_error, config.precision)}"]
    return Table(["n", "l", "t", "abs_c0", "abs_ct", "amplitude_ratio"], rows, checks, notes)


def cmd_compare_reps(config, params):
    rep = representation_report(config.n_max, config.l_max, params, probes=config.probes)
    rows = [[r.n, r.l, r.e_plus, r.e_minus, r.e_hyperbolic, bool(r.match)] for r in rep.rows]
    rule = gauss_laguerre_rule(config.quad_points, 0.0)
    gram = max(float(np.max(np.abs(hyperbolic_gram(config.n_max, l, params, rule)
                                   - np.eye(config.n_max + 1))))
               for l in range(config.l_max + 1))
    tol = 1e-10 if config.tolerance is None else config.tolerance
    checks = [
        _Check("no hyperbolic eigenvalue on the resonance lattice", float(rep.matches), 0.0),
        _Check("elliptic poles found at every lattice point",
               float(rep.elliptic_lattice_size - rep.elliptic_poles), 0.0),
        _Check("no poles in the boost nu-plane probe", float(rep.hyperbolic_poles), 0.0),
        _Check("hyperbolic family orthonormal", gram, tol),
    ]
    notes = [
        f"matches: {rep.matches}",
        f"elliptic poles: {rep.elliptic_poles}/{rep.elliptic_lattice_size}",
        f"hyperbolic poles: {rep.hyperbolic_poles}/{rep.hyperbolic_probes}",
        f"by-hand boost Gram defect: {format_error(rep.by_hand_gram_defect, config.precision)}",
    ]
    return Table(["n", "l", "E_plus", "E_minus", "E_hyperbolic", "match"], rows, checks, notes)


def build_family(config, params):
    """The radial function requested by ``eval``."""
    family = config.family
    if family == "ho":
        f, _ = ho_radial(QuantumNumbers(config.n, config.l), params.gamma, params.hbar)
        return f
    if family in ("iho_plus", "iho_minus"):
        return resonance_state(QuantumNumbers(config.n, config.l),
                               +1 if family == "iho_plus" else -1, params).radial
    if family == "continuum":
        f, _ = continuum_eigenfunction(ContinuumLabel(parse_complex(config.epsilon), config.l), params)
        return f
    if family == "hyperbolic_disc":
        f, _ = hyperbolic_discrete(config.n, config.l, params)
        return f
    if family == "hyperbolic_cont":
        return hyperbolic_continuum(HyperbolicLabel(parse_complex(config.epsilon),
                                                    parse_complex(config.nu)), params)
    raise UsageError(f"unknown family {family!r}")


def cmd_eval(config, params):
    rho = parse_grid(config.at)
    if np.any(rho < 0):
        raise UsageError("rho grid must be >= 0")
    f = build_family(config, params)
    values = f(rho)
    rows = [[float(r), complex(v)] for r, v in zip(rho, values)]
    return Table(["rho", "value"], rows, [], [])


HANDLERS = {
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
    "resonances": cmd_resonances,
    "evolve": cmd_evolve,
    "compare-reps": cmd_compare_reps,
    "eval": cmd_eval,
}


def render(table, config):
    """Text, CSV or JSON rendering of ``table``."""
    if config.format == "csv":
        return render_csv(table, config.precision)
    if config.format == "json":
        return render_json(table, config, config.precision)
    return render_text(table, config.precision)


def run(argv=None, stdout=None, stderr=None):
    """Run the CLI and return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config = resolve_config(list(sys.argv[1:] if argv is None else argv))
        params = make_run_params(config)
        table = HANDLERS[config.command](config, params)
    except UsageError as exc:
        stderr.write(f"batres: error: {exc}\n")
        return 2
    except NonConvergent as exc:
        stderr.write(f"batres: expansion did not converge: {exc}\n")
        return 1
    except BatresError as exc:
        stderr.write(f"batres: {type(exc).__name__}: {exc}\n")
        return 2
    text = render(table, config)
    if config.output:
        try:
            with open(config.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            stderr.write(f"batres: cannot write {config.output!r}: {exc.strerror}\n")
            return 2
    else:
        stdout.write(text)
    return 1 if summarize(table)["failed"] else 0


def main(argv=None):
    """Console-script entry point."""
    try:
        code = run(argv)
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else 0
    sys.exit(code)


if __name__ == "__main__":
    main()

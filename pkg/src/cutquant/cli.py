"""Command-line front end.

Subcommands: solve, analytic, compare, hydrogen, star, sweep.  Every
run emits a JSON, CSV, or table artifact built from the same payload;
JSON output is byte-deterministic for identical configurations.  A JSON
config file can stand in for flags (flags override file values), and
the ``inputs`` object echoed in every JSON artifact is itself a valid
config file reproducing the run.

Exit codes: 0 success, 2 usage or input error, 3 non-converged numerics.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .analytic import (
    DeltaParameter,
    LambInputs,
    delta_parameter,
    hydrogen_delta,
    hydrogen_level,
    lamb_relative_deviation,
    lamb_shift,
    omega_bar,
    oscillator_levels,
    principal_number_substitution,
    relative_spacing_shift,
    rydberg_relative_correction,
    ddim_level,
)
from .coherence import (
    StarParameters,
    estimate_report,
    order_of_magnitude,
    report_for_star,
    sweep as run_sweep,
)
from .cutting import TabulatedCutting, cutting_for_length
from .dataio import csv_text, dumps_stable, read_two_column_csv
from .potentials import FreeBoxPotential, HarmonicPotential, TabulatedPotential
from .solver import (
    Grid1D,
    SpectralProblem,
    UnconfinedPotentialError,
    solve_converged,
    solve_with_reference,
)
from .units import OscillatorParams, PhysicalConstants, UnitSystem

COMMANDS = ("solve", "analytic", "compare", "hydrogen", "star", "sweep")

_CONSTANTS = PhysicalConstants()
DEFAULT_BETHE_RATIO = _CONSTANTS.electron_rest_energy_ev / _CONSTANTS.rydberg_infinity_ev

#: Config keys accepted as aliases for canonical field names.
CONFIG_ALIASES = {"D": "neutrons"}

_FLOAT_FIELDS = {
    "omega", "mass", "a", "rel_tol", "x_min", "x_max", "margin",
    "a_cm", "delta", "bethe_ratio",
    "neutrons", "radius_cm", "micro_length_cm",
}
_INT_FIELDS = {"levels", "max_refinements", "n_points", "dims", "n", "z"}
_STR_FIELDS = {"potential", "potential_csv", "cutting", "cutting_csv", "units",
               "label", "vary", "format", "output"}
_LIST_FIELDS = {"values"}
_ALL_FIELDS = _FLOAT_FIELDS | _INT_FIELDS | _STR_FIELDS | _LIST_FIELDS

_OSCILLATOR_FIELDS = {"potential", "potential_csv", "cutting", "cutting_csv", "a",
                      "omega", "mass", "levels", "units"}
_GRID_FIELDS = {"rel_tol", "max_refinements", "x_min", "x_max", "n_points", "margin"}
_OUTPUT_FIELDS = {"format", "output"}

#: Fields echoed in the ``inputs`` object, per subcommand.
_FIELDS_FOR = {
    "solve": _OSCILLATOR_FIELDS | _GRID_FIELDS | _OUTPUT_FIELDS,
    "compare": _OSCILLATOR_FIELDS | _GRID_FIELDS | _OUTPUT_FIELDS,
    "analytic": _OSCILLATOR_FIELDS | {"dims"} | _OUTPUT_FIELDS,
    "hydrogen": {"a_cm", "delta", "n", "z", "bethe_ratio"} | _OUTPUT_FIELDS,
    "star": {"neutrons", "radius_cm", "micro_length_cm", "delta", "label"} | _OUTPUT_FIELDS,
    "sweep": {"neutrons", "radius_cm", "micro_length_cm", "label", "vary", "values"}
    | _OUTPUT_FIELDS,
}


@dataclass
class RunConfig:
    subcommand: str
    potential: str = "harmonic"
    potential_csv: str | None = None
    cutting: str = "identity"
    cutting_csv: str | None = None
    a: float | None = None
    omega: float = 1.0
    mass: float = 1.0
    levels: int = 5
    rel_tol: float = 1e-8
    max_refinements: int = 6
    x_min: float | None = None
    x_max: float | None = None
    n_points: int = 2001
    margin: float = 6.0
    units: str = "dimensionless"
    dims: int = 1
    a_cm: float | None = None
    delta: float | None = None
    n: int = 3
    z: int = 1
    bethe_ratio: float = DEFAULT_BETHE_RATIO
    neutrons: float | None = None
    radius_cm: float | None = None
    micro_length_cm: float = _CONSTANTS.bohr_radius_cm
    label: str = ""
    vary: str | None = None
    values: list[float] = field(default_factory=list)
    format: str = "table"
    output: str | None = None

    def to_config_dict(self) -> dict:
        """Canonical config (usable via --config) reproducing this run."""
        out: dict = {"subcommand": self.subcommand}
        for name in sorted(_FIELDS_FOR[self.subcommand]):
            value = getattr(self, name)
            if value is None or (name == "values" and not value):
                continue
            out[name] = value
        return out


class CliError(ValueError):
    """Input error carrying a one-line actionable message."""


def _csv_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "table"), default=None,
                        help="output format (default table)")
    parser.add_argument("--output", default=None, metavar="PATH",
                        help="write the artifact to PATH instead of stdout")
    parser.add_argument("--config", default=None, metavar="PATH",
                        help="JSON config supplying defaults for any flag")


def _add_oscillator_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--potential", choices=("harmonic", "box", "table"), default=None)
    parser.add_argument("--potential-csv", dest="potential_csv", default=None, metavar="PATH")
    parser.add_argument("--cutting", choices=("identity", "gaussian", "table"), default=None)
    parser.add_argument("--cutting-csv", dest="cutting_csv", default=None, metavar="PATH")
    parser.add_argument("--a", type=float, default=None, help="cutting length (gaussian)")
    parser.add_argument("--omega", type=float, default=None)
    parser.add_argument("--mass", type=float, default=None)
    parser.add_argument("--levels", type=int, default=None, help="number of levels (default 5)")
    parser.add_argument("--units", choices=("dimensionless", "cgs"), default=None)


def _add_grid_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rel-tol", dest="rel_tol", type=float, default=None)
    parser.add_argument("--max-refinements", dest="max_refinements", type=int, default=None)
    parser.add_argument("--x-min", dest="x_min", type=float, default=None)
    parser.add_argument("--x-max", dest="x_max", type=float, default=None)
    parser.add_argument("--n-points", dest="n_points", type=int, default=None)
    parser.add_argument("--margin", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutquant",
        description="Spectra of cut quantizations, hydrogen corrections, and "
                    "coherence-amplification estimates.",
    )
    parser.add_argument("--version", action="version", version=f"cutquant {__version__}")
    sub = parser.add_subparsers(dest="subcommand")

    p = sub.add_parser("solve", help="numerical bound-state spectrum")
    _add_oscillator_flags(p)
    _add_grid_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("analytic", help="closed-form spectrum values")
    _add_oscillator_flags(p)
    p.add_argument("--dims", type=int, default=None, help="isotropic dimension (default 1)")
    _add_output_flags(p)

    p = sub.add_parser("compare", help="numerical spectrum with analytic residuals")
    _add_oscillator_flags(p)
    _add_grid_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("hydrogen", help="corrected hydrogen levels and Lamb shift")
    p.add_argument("--a-cm", dest="a_cm", type=float, default=None,
                   help="macroscopic cutting length in cm")
    p.add_argument("--delta", type=float, default=None, help="override delta directly")
    p.add_argument("--n", type=int, default=None, help="largest principal number (default 3)")
    p.add_argument("--z", type=int, default=None)
    p.add_argument("--bethe-ratio", dest="bethe_ratio", type=float, default=None,
                   help="rest energy / excitation energy inside the Lamb logarithm")
    _add_output_flags(p)

    p = sub.add_parser("star", help="coherence-amplification estimate")
    p.add_argument("--neutrons", type=float, default=None, help="particle count D")
    p.add_argument("--radius-cm", dest="radius_cm", type=float, default=None)
    p.add_argument("--micro-length-cm", dest="micro_length_cm", type=float, default=None,
                   help="microscopic length (default: Bohr radius)")
    p.add_argument("--delta", type=float, default=None, help="override delta directly")
    p.add_argument("--label", default=None)
    _add_output_flags(p)

    p = sub.add_parser("sweep", help="amplification sweep over one star parameter")
    p.add_argument("--neutrons", type=float, default=None)
    p.add_argument("--radius-cm", dest="radius_cm", type=float, default=None)
    p.add_argument("--micro-length-cm", dest="micro_length_cm", type=float, default=None)
    p.add_argument("--label", default=None)
    p.add_argument("--vary", choices=("radius_cm", "neutrons", "micro_length_cm"), default=None)
    p.add_argument("--values", type=_csv_floats, default=None,
                   help="comma-separated values for the varied parameter")
    _add_output_flags(p)

    return parser


def _load_config_file(path: str) -> dict:
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"--config: cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(f"--config: {path} is not valid JSON: {exc}")
    if not isinstance(raw, dict):
        raise CliError(f"--config: {path} must contain a JSON object")
    out: dict = {}
    for key, value in raw.items():
        key = CONFIG_ALIASES.get(key, key)
        if key == "subcommand":
            if value not in COMMANDS:
                raise CliError(f"--config: unknown subcommand {value!r}")
            out[key] = value
        elif key in _ALL_FIELDS:
            out[key] = value
        else:
            raise CliError(f"--config: unknown key {key!r}")
    return out


def _coerce(name: str, value):
    if value is None:
        return None
    try:
        if name in _FLOAT_FIELDS:
            return float(value)
        if name in _INT_FIELDS:
            as_float = float(value)
            if as_float != int(as_float):
                raise ValueError
            return int(as_float)
        if name in _LIST_FIELDS:
            if isinstance(value, str):
                return _csv_floats(value)
            return [float(v) for v in value]
        return str(value)
    except (TypeError, ValueError):
        raise CliError(f"--{name.replace('_', '-')}: cannot interpret {value!r}")


def parse_args(argv) -> RunConfig:
    """Parse flags (and an optional config file) into a validated RunConfig."""
    argv = list(argv)
    parser = build_parser()
    namespace = parser.parse_args(argv)
    cli_values = {k: v for k, v in vars(namespace).items() if k not in ("config", "subcommand")}

    file_values: dict = {}
    if namespace.config is not None:
        file_values = _load_config_file(namespace.config)

    subcommand = namespace.subcommand or file_values.get("subcommand")
    if subcommand is None:
        parser.error("a subcommand (or a --config file naming one) is required")
    if namespace.subcommand and "subcommand" in file_values \
            and file_values["subcommand"] != namespace.subcommand:
        raise CliError(
            f"--config names subcommand {file_values['subcommand']!r} but "
            f"{namespace.subcommand!r} was given on the command line"
        )

    config = RunConfig(subcommand=subcommand)
    for name, value in file_values.items():
        if name == "subcommand":
            continue
        setattr(config, name, _coerce(name, value))
    for name, value in cli_values.items():
        if value is not None:
            setattr(config, name, _coerce(name, value))

    _validate(config)
    return config


def _require_positive(config_value, flag: str, allow_inf: bool = False) -> None:
    ok = config_value is not None and config_value > 0.0
    if ok and not allow_inf and math.isinf(config_value):
        ok = False
    if not ok:
        raise CliError(f"{flag} must be positive{'' if allow_inf else ' and finite'}, "
                       f"got {config_value!r}")


def _validate(config: RunConfig) -> None:
    if config.subcommand in ("solve", "analytic", "compare"):
        _require_positive(config.omega, "--omega")
        _require_positive(config.mass, "--mass")
        if config.levels < 1:
            raise CliError(f"--levels must be a positive integer, got {config.levels!r}")
        if config.cutting == "gaussian":
            if config.a is None:
                raise CliError("--a is required for gaussian cutting")
            _require_positive(config.a, "--a", allow_inf=True)
        if config.cutting == "table" and not config.cutting_csv:
            raise CliError("--cutting-csv is required for a tabulated cutting function")
        if config.potential == "table" and not config.potential_csv:
            raise CliError("--potential-csv is required for a tabulated potential")
        if config.subcommand in ("solve", "compare"):
            if config.rel_tol <= 0.0:
                raise CliError(f"--rel-tol must be positive, got {config.rel_tol!r}")
            if config.n_points < 3:
                raise CliError(f"--n-points must be at least 3, got {config.n_points!r}")
            explicit = [config.x_min, config.x_max]
            if any(v is not None for v in explicit) and None in explicit:
                raise CliError("--x-min and --x-max must be given together")
        if config.subcommand == "analytic" and config.dims < 1:
            raise CliError(f"--dims must be a positive integer, got {config.dims!r}")
    elif config.subcommand == "hydrogen":
        if config.a_cm is None and config.delta is None:
            raise CliError("hydrogen needs --a-cm (or a --delta override)")
        if config.a_cm is not None:
            _require_positive(config.a_cm, "--a-cm")
        if config.delta is not None and config.delta < 0.0:
            raise CliError(f"--delta must be non-negative, got {config.delta!r}")
        if config.n < 1:
            raise CliError(f"--n must be a positive integer, got {config.n!r}")
        if config.z < 1:
            raise CliError(f"--z must be a positive integer, got {config.z!r}")
        if config.bethe_ratio <= 1.0:
            raise CliError(f"--bethe-ratio must exceed 1, got {config.bethe_ratio!r}")
    elif config.subcommand in ("star", "sweep"):
        if config.neutrons is None or config.neutrons < 1.0:
            raise CliError(f"--neutrons must be at least 1, got {config.neutrons!r}")
        if config.subcommand == "star":
            if config.delta is None:
                if config.radius_cm is None:
                    raise CliError("star needs --radius-cm (or a --delta override)")
                _require_positive(config.radius_cm, "--radius-cm")
                _require_positive(config.micro_length_cm, "--micro-length-cm")
            elif config.delta < 0.0:
                raise CliError(f"--delta must be non-negative, got {config.delta!r}")
        else:
            if config.delta is not None:
                raise CliError("sweep varies star parameters; --delta override is not allowed")
            if config.vary is None:
                raise CliError("--vary is required for sweep")
            if not config.values:
                raise CliError("--values is required for sweep")
            if config.radius_cm is None and config.vary != "radius_cm":
                raise CliError("sweep needs --radius-cm in its base parameters")


def _unit_system(config: RunConfig) -> UnitSystem:
    if config.units == "cgs":
        return UnitSystem.cgs(config.mass, config.omega)
    return UnitSystem.dimensionless()


def _internal_params(config: RunConfig, units: UnitSystem) -> OscillatorParams:
    if config.units == "cgs":
        a = math.inf
        if config.cutting == "gaussian" and config.a is not None and math.isfinite(config.a):
            a = units.length_to_internal(config.a)
        return OscillatorParams(mass=1.0, omega=1.0, cutting_length=a)
    a = math.inf
    if config.cutting == "gaussian" and config.a is not None:
        a = config.a
    return OscillatorParams(mass=config.mass, omega=config.omega, cutting_length=a)


def _build_problem(config: RunConfig, units: UnitSystem) -> SpectralProblem:
    params = _internal_params(config, units)
    to_x = units.length_to_internal
    to_e = units.energy_to_internal

    if config.potential == "harmonic":
        potential = HarmonicPotential(mass=params.mass, omega=params.omega)
    elif config.potential == "box":
        potential = FreeBoxPotential()
    else:
        xs, vs = read_two_column_csv(config.potential_csv)
        potential = TabulatedPotential([to_x(x) for x in xs], [to_e(v) for v in vs])

    if config.cutting == "table":
        xs, vs = read_two_column_csv(config.cutting_csv)
        cutting = TabulatedCutting([to_x(x) for x in xs], vs)
    else:
        cutting = cutting_for_length(params.cutting_length)

    grid = None
    if config.x_min is not None and config.x_max is not None:
        grid = Grid1D(to_x(config.x_min), to_x(config.x_max), config.n_points)

    return SpectralProblem(
        potential=potential,
        cutting=cutting,
        params=params,
        levels=config.levels,
        grid=grid,
        margin=config.margin,
        n_points=config.n_points,
    )


def _spectrum_results(config: RunConfig, result, units: UnitSystem) -> dict:
    payload = result.to_json_dict()
    if config.units == "cgs":
        from_e = units.energy_from_internal
        from_x = units.length_from_internal
        for key in ("eigenvalues", "convergence_estimate", "analytic_reference"):
            if payload[key] is not None:
                payload[key] = [from_e(v) for v in payload[key]]
        payload["grid"] = {
            "x_min": from_x(payload["grid"]["x_min"]),
            "x_max": from_x(payload["grid"]["x_max"]),
            "n_points": payload["grid"]["n_points"],
            "spacing": from_x(payload["grid"]["spacing"]),
        }
        payload["energy_unit"] = "erg"
        payload["length_unit"] = "cm"
    else:
        payload["energy_unit"] = "dimensionless"
        payload["length_unit"] = "dimensionless"
    return payload


def _spectrum_csv(payload: dict) -> str:
    rows = []
    reference = payload["analytic_reference"]
    residuals = payload["residuals"]
    for i, value in enumerate(payload["eigenvalues"]):
        rows.append([
            i,
            value,
            payload["convergence_estimate"][i],
            None if reference is None else reference[i],
            None if residuals is None else residuals[i],
        ])
    return csv_text(
        ["level", "eigenvalue", "convergence_estimate", "analytic_reference", "residual"],
        rows,
    )


def _spectrum_table(payload: dict, warnings: list[str]) -> str:
    lines = [
        f"grid: [{payload['grid']['x_min']:.6g}, {payload['grid']['x_max']:.6g}] "
        f"with {payload['grid']['n_points']} points "
        f"({payload['refinement_levels']} refinements, "
        f"{'converged' if payload['converged'] else 'NOT converged'})",
        f"{'level':>5} {'eigenvalue':>24} {'error est.':>12}"
        + ("" if payload["analytic_reference"] is None else f" {'analytic':>24} {'residual':>12}"),
    ]
    for i, value in enumerate(payload["eigenvalues"]):
        line = f"{i:>5} {value:>24.15g} {payload['convergence_estimate'][i]:>12.3g}"
        if payload["analytic_reference"] is not None:
            line += f" {payload['analytic_reference'][i]:>24.15g} {payload['residuals'][i]:>12.3g}"
        lines.append(line)
    lines.extend(f"warning: {w}" for w in warnings)
    return "\n".join(lines) + "\n"


def _run_solve(config: RunConfig, with_reference: bool):
    units = _unit_system(config)
    problem = _build_problem(config, units)
    if with_reference:
        result = solve_with_reference(problem, rel_tol=config.rel_tol,
                                      max_refinements=config.max_refinements)
    else:
        result = solve_converged(problem, rel_tol=config.rel_tol,
                                 max_refinements=config.max_refinements)
    warnings = []
    exit_code = 0
    if not result.converged:
        warnings.append(
            f"not converged after {result.refinement_levels} refinements; "
            "estimates attached"
        )
        exit_code = 3
    payload = _spectrum_results(config, result, units)
    return payload, warnings, exit_code, _spectrum_csv(payload), \
        _spectrum_table(payload, warnings)


def _run_analytic(config: RunConfig):
    units = _unit_system(config)
    params = _internal_params(config, units)
    hbar = 1.0
    if params.has_cutting:
        delta = delta_parameter(hbar, params.mass, params.omega, params.cutting_length)
    else:
        delta = DeltaParameter(0.0)
    wbar = omega_bar(params.omega, delta)
    from_e = units.energy_from_internal

    wbar_out = wbar * units.omega if config.units == "cgs" else wbar
    levels = [from_e(v) for v in oscillator_levels(config.levels, params, hbar)]
    payload: dict = {
        "delta": delta.value,
        "omega_bar": wbar_out,
        "spacing_shift_leading": relative_spacing_shift(delta),
        "spacing_shift_exact": math.expm1(0.5 * math.log1p(delta.value ** 2)),
        "levels": levels,
        "energy_unit": "erg" if config.units == "cgs" else "dimensionless",
    }
    if config.dims > 1:
        ddim = []
        for total in range(config.levels):
            degeneracy = math.comb(total + config.dims - 1, config.dims - 1)
            ddim.append({
                "quanta_total": total,
                "energy": from_e(ddim_level(total, config.dims, params, hbar)),
                "degeneracy": degeneracy,
            })
        payload["dims"] = config.dims
        payload["ddim_levels"] = ddim
        rows = [[e["quanta_total"], e["energy"], e["degeneracy"]] for e in ddim]
        csv_out = csv_text(["quanta_total", "energy", "degeneracy"], rows)
    else:
        csv_out = csv_text(["n", "energy"], [[i, v] for i, v in enumerate(levels)])

    lines = [
        f"delta = {delta.value:.12g}   omega_bar = {payload['omega_bar']:.12g}",
        f"spacing shift: leading {payload['spacing_shift_leading']:.6g}, "
        f"exact {payload['spacing_shift_exact']:.6g}",
    ]
    lines += [f"  E_{i} = {v:.15g}" for i, v in enumerate(levels)]
    if config.dims > 1:
        lines.append(f"isotropic levels in {config.dims} dimensions:")
        lines += [
            f"  N={e['quanta_total']}: {e['energy']:.15g}  (degeneracy {e['degeneracy']})"
            for e in payload["ddim_levels"]
        ]
    return payload, [], 0, csv_out, "\n".join(lines) + "\n"


def _run_hydrogen(config: RunConfig):
    if config.delta is not None:
        delta = DeltaParameter(config.delta)
    else:
        delta = hydrogen_delta(config.a_cm, _CONSTANTS)
    rydberg_correction = rydberg_relative_correction(delta)
    lamb_deviation = lamb_relative_deviation(delta)

    level_rows = []
    for n in range(1, config.n + 1):
        inputs = LambInputs(n=n, z=config.z, alpha=_CONSTANTS.fine_structure_alpha,
                            bethe_log_argument=config.bethe_ratio,
                            hartree_energy=_CONSTANTS.hartree_energy_ev, delta=delta)
        level_rows.append({
            "n": n,
            "effective_n": principal_number_substitution(n, delta),
            "energy_ev": hydrogen_level(n, delta, _CONSTANTS),
            "lamb_shift_ev": lamb_shift(inputs),
        })

    payload = {
        "delta": delta.value,
        "delta_order": order_of_magnitude(delta.value),
        "rydberg_relative_correction": rydberg_correction,
        "rydberg_correction_order": order_of_magnitude(abs(rydberg_correction))
        if rydberg_correction != 0.0 else None,
        "lamb_relative_deviation": lamb_deviation,
        "lamb_relative_deviation_leading": -1.5 * delta.value ** 2,
        "levels": level_rows,
    }
    csv_out = csv_text(
        ["n", "effective_n", "energy_ev", "lamb_shift_ev"],
        [[r["n"], r["effective_n"], r["energy_ev"], r["lamb_shift_ev"]] for r in level_rows],
    )
    lines = [
        f"delta = {delta.value:.12g}",
        f"relative Rydberg correction = {rydberg_correction:.6g}",
        f"relative Lamb-shift deviation = {lamb_deviation:.6g}",
        f"{'n':>3} {'effective n':>18} {'energy (eV)':>18} {'Lamb shift (eV)':>18}",
    ]
    lines += [
        f"{r['n']:>3} {r['effective_n']:>18.12g} {r['energy_ev']:>18.12g} "
        f"{r['lamb_shift_ev']:>18.12g}"
        for r in level_rows
    ]
    return payload, [], 0, csv_out, "\n".join(lines) + "\n"


_STAR_CSV_HEADER = [
    "label", "particle_count", "radius_cm", "micro_length_cm", "delta",
    "delta_squared", "amplification", "delta_order", "delta_squared_order",
    "amplification_order",
]


def _star_csv_row(report_dict: dict) -> list:
    return [report_dict[key] for key in _STAR_CSV_HEADER]


def _run_star(config: RunConfig):
    if config.delta is not None:
        report = estimate_report(
            particle_count=config.neutrons,
            delta=DeltaParameter(config.delta),
            radius_cm=config.radius_cm,
            micro_length_cm=config.micro_length_cm if config.radius_cm is not None else None,
            label=config.label,
            delta_overridden=True,
        )
    else:
        params = StarParameters(
            radius_cm=config.radius_cm,
            particle_count=config.neutrons,
            micro_length_cm=config.micro_length_cm,
            label=config.label,
        )
        report = report_for_star(params)
    payload = report.to_json_dict()
    csv_out = csv_text(_STAR_CSV_HEADER, [_star_csv_row(payload)])
    amp_order = payload["amplification_order"]
    lines = [
        f"particle count D = {payload['particle_count']:.6g}",
        f"delta = {payload['delta']:.12g}"
        + ("  (override)" if payload["delta_overridden"] else ""),
        f"delta^2 = {payload['delta_squared']:.12g}",
        f"amplification D*delta^2 = {payload['amplification']:.12g}"
        + (f"  (~1e{amp_order})" if amp_order is not None else ""),
    ]
    return payload, [], 0, csv_out, "\n".join(lines) + "\n"


def _run_sweep(config: RunConfig):
    # When the radius itself is swept the base value is a placeholder that
    # only has to satisfy the invariants; every entry replaces it.
    base_radius = config.radius_cm
    if base_radius is None:
        base_radius = 2.0 * config.micro_length_cm
    base = StarParameters(
        radius_cm=base_radius,
        particle_count=config.neutrons,
        micro_length_cm=config.micro_length_cm,
        label=config.label,
    )
    entries = run_sweep(base, config.vary, config.values)
    warnings = [
        f"{entry.varied_field}={entry.value!r}: {entry.error}"
        for entry in entries
        if entry.error is not None
    ]
    payload_entries = []
    rows = []
    for entry in entries:
        if entry.report is not None:
            report_dict = entry.report.to_json_dict()
            payload_entries.append({
                "varied_field": entry.varied_field,
                "value": entry.value,
                "report": report_dict,
                "error": None,
            })
            rows.append([entry.varied_field, entry.value, None] + _star_csv_row(report_dict))
        else:
            payload_entries.append({
                "varied_field": entry.varied_field,
                "value": entry.value,
                "report": None,
                "error": entry.error,
            })
            rows.append([entry.varied_field, entry.value, entry.error] + [None] * len(_STAR_CSV_HEADER))
    payload = {"vary": config.vary, "entries": payload_entries}
    csv_out = csv_text(["varied_field", "value", "error"] + _STAR_CSV_HEADER, rows)
    lines = [f"sweep over {config.vary}:"]
    for entry in entries:
        if entry.report is not None:
            lines.append(
                f"  {entry.value:.6g}: delta={entry.report.delta.value:.6g} "
                f"amplification={entry.report.amplification:.6g}"
            )
        else:
            lines.append(f"  {entry.value:.6g}: error: {entry.error}")
    return payload, warnings, 0, csv_out, "\n".join(lines) + "\n"


def run(config: RunConfig) -> int:
    """Execute a validated RunConfig; returns the process exit code."""
    handlers = {
        "solve": lambda: _run_solve(config, with_reference=False),
        "compare": lambda: _run_solve(config, with_reference=True),
        "analytic": lambda: _run_analytic(config),
        "hydrogen": lambda: _run_hydrogen(config),
        "star": lambda: _run_star(config),
        "sweep": lambda: _run_sweep(config),
    }
    results, warnings, exit_code, csv_out, table_out = handlers[config.subcommand]()

    if config.format == "json":
        text = dumps_stable({
            "tool_version": __version__,
            "inputs": config.to_config_dict(),
            "results": results,
            "warnings": warnings,
        })
    elif config.format == "csv":
        text = csv_out
    else:
        text = table_out

    if config.output is not None:
        Path(config.output).write_text(text)
    else:
        sys.stdout.write(text)
    return exit_code


def main(argv=None) -> int:
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse usage errors and --version
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return run(config)
    except (CliError, UnconfinedPotentialError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

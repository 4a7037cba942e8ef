"""Command-line entry points: verification sweeps, matchings, slope scenarios.

Exit codes: 0 when everything passes, 1 on a verification failure,
2 on a configuration or input error.
"""

from __future__ import annotations

import json
import sys

import click

from .monomial_box import dominance_matching
from .scenario import ScenarioError, evaluate_scenarios, load_scenarios
from .suites import ALL_SUITES, ConfigError, SuiteConfig, run_suite


@click.group()
def main() -> None:
    """Exact verification for truncated power algebra and slope bounds."""


def _parse_csv_ints(text: str, label: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        # UsageError exits with code 2, matching the config-error contract.
        raise click.UsageError(f"cannot parse {label} list {text!r}")


@main.command()
@click.option("--n-max", default=3, show_default=True, help="Largest ambient dimension.")
@click.option("--primes", default="2,3,5", show_default=True, help="Comma-separated primes.")
@click.option(
    "--suites",
    "suite_list",
    default=",".join(ALL_SUITES),
    show_default=True,
    help="Comma-separated subset of: " + ", ".join(ALL_SUITES),
)
@click.option("--seed", default=0, show_default=True, help="Seed for the randomized sweeps.")
@click.option("--max-sigma", default=12, show_default=True, help="Cap total for the matching sweep.")
@click.option("--matching-n-max", default=4, show_default=True, help="Max length of caps vectors.")
@click.option("--random-subspaces", default=100, show_default=True,
              help="Random subspaces per grade in the growth suite.")
@click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False, writable=True),
              help="Write the report here instead of stdout.")
def verify(n_max, primes, suite_list, seed, max_sigma, matching_n_max, random_subspaces, out_path):
    """Run verification suites over an (n, p) grid and emit a JSON report."""
    try:
        config = SuiteConfig(
            n_max=n_max,
            primes=_parse_csv_ints(primes, "primes"),
            max_sigma=max_sigma,
            matching_n_max=matching_n_max,
            random_subspaces_per_grade=random_subspaces,
            seed=seed,
            suites=tuple(s.strip() for s in suite_list.split(",") if s.strip()),
        )
        config.validate()
    except (ConfigError, click.ClickException) as exc:
        click.echo(f"configuration error: {exc}", err=True)
        sys.exit(2)
    report = run_suite(config)
    text = report.to_json()
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        click.echo(("PASS" if report.passed else "FAIL") + f": report written to {out_path}")
    else:
        click.echo(text)
    sys.exit(0 if report.passed else 1)


@main.command()
@click.option("--caps", required=True, help="Comma-separated caps, e.g. 2,2,3.")
@click.option("--ell", required=True, type=int, help="Degree of the source box.")
def matching(caps, ell):
    """Print the constructed dominance matching as explicit pairs."""
    caps_vec = _parse_csv_ints(caps, "caps")
    try:
        m = dominance_matching(caps_vec, ell)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    for v, w in m.pairs():
        click.echo(f"{','.join(map(str, v))} -> {','.join(map(str, w))}")


@main.command()
@click.option("--scenario", "scenario_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON scenario file.")
@click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False, writable=True),
              help="Write the evaluation here instead of stdout.")
def slopes(scenario_path, out_path):
    """Evaluate slope formulas and bounds for each scenario record."""
    try:
        scenarios = load_scenarios(scenario_path)
    except ScenarioError as exc:
        click.echo(f"scenario error: {exc}", err=True)
        sys.exit(2)
    result = evaluate_scenarios(scenarios)
    text = json.dumps(result, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        click.echo(f"evaluation written to {out_path}")
    else:
        click.echo(text)


if __name__ == "__main__":
    main()

# Copyright 2025 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import asyncio
import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import click

from app.app_utils.telemetry import log_report, setup_logging
from app.errors import StallingsError
from app.families import family_H, family_K, family_spec
from app.pullback import pullback_with_pairs
from app.stallings_graph import (
    StallingsGraph,
    basis,
    contains,
    core_trim,
    rank,
    subgroup,
    to_dot,
)
from app.subgroup_file import load_subgroup_file, resolve_alphabet
from app.verification import run_verification
from app.word_algebra import parse_word, render

logger = logging.getLogger(__name__)

_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)


class InputError(click.ClickException):
    """Bad input: parse errors, alphabet mismatches, range violations."""

    exit_code = 2


@contextmanager
def _input_errors() -> Iterator[None]:
    try:
        yield
    except StallingsError as e:
        raise InputError(str(e)) from e


def _load_subgroup(path: Path) -> StallingsGraph:
    source = load_subgroup_file(path)
    alphabet = resolve_alphabet(source)
    return subgroup(source.words(alphabet), alphabet)


def _write_dot(
    graph: StallingsGraph,
    path: Path,
    name: str = "G",
    vertex_labels: dict[int, str] | None = None,
) -> None:
    path.write_text(to_dot(graph, name, vertex_labels), encoding="utf-8")
    logger.info(f"DOT graph written to {path}")


@click.group()
@click.option(
    "--log-level",
    default=None,
    help="Log level (defaults to STALLINGS_LOG_LEVEL, else WARNING)",
)
def cli(log_level: str | None) -> None:
    """Stallings graphs for subgroups of free groups."""
    with _input_errors():
        setup_logging(log_level)


@cli.command("rank")
@click.argument("file", type=_FILE)
@click.option("--dot", "dot_out", type=click.Path(path_type=Path), default=None,
              help="Write the subgroup's core graph as DOT")
def rank_command(file: Path, dot_out: Path | None) -> None:
    """Print the rank of the subgroup generated by FILE."""
    with _input_errors():
        graph = _load_subgroup(file)
    if dot_out:
        _write_dot(graph, dot_out)
    click.echo(rank(graph))


@cli.command("basis")
@click.argument("file", type=_FILE)
def basis_command(file: Path) -> None:
    """Print a free basis of the subgroup generated by FILE, one word per line."""
    with _input_errors():
        graph = _load_subgroup(file)
    for word in basis(graph):
        click.echo(render(word))


@cli.command("intersect")
@click.argument("file_h", type=_FILE)
@click.argument("file_k", type=_FILE)
@click.option("--dot", "dot_out", type=click.Path(path_type=Path), default=None,
              help="Write the intersection graph as DOT")
@click.option("--basis", "show_basis", is_flag=True, help="Also print a free basis of H ∩ K")
@click.option("--untrimmed", is_flag=True,
              help="Write the DOT graph with its hanging trees kept")
def intersect_command(
    file_h: Path, file_k: Path, dot_out: Path | None, show_basis: bool, untrimmed: bool
) -> None:
    """Print the rank of the intersection of the subgroups in FILE_H and FILE_K."""
    with _input_errors():
        source_h, source_k = load_subgroup_file(file_h), load_subgroup_file(file_k)
        alphabet = resolve_alphabet(source_h, source_k)
        gH = subgroup(source_h.words(alphabet), alphabet)
        gK = subgroup(source_k.words(alphabet), alphabet)
        graph, pairs = pullback_with_pairs(gH, gK)
    core = core_trim(graph)
    if dot_out:
        labels = {i: f"({p.left},{p.right})" for i, p in enumerate(pairs)}
        _write_dot(graph if untrimmed else core, dot_out, name="intersection",
                   vertex_labels=labels)
    click.echo(rank(core))
    if show_basis:
        for word in basis(core):
            click.echo(render(word))


@cli.command("member")
@click.argument("file", type=_FILE)
@click.argument("word")
@click.pass_context
def member_command(ctx: click.Context, file: Path, word: str) -> None:
    """Exit 0 and print "yes" if WORD lies in the subgroup of FILE, else exit 1."""
    with _input_errors():
        source = load_subgroup_file(file)
        alphabet = resolve_alphabet(source)
        graph = subgroup(source.words(alphabet), alphabet)
        element = parse_word(word, alphabet)
    if contains(graph, element):
        click.echo("yes")
        return
    click.echo("no")
    ctx.exit(1)


@cli.command("family")
@click.argument("kind", type=click.Choice(["H", "K"], case_sensitive=False))
@click.argument("params", nargs=-1, type=int)
def family_command(kind: str, params: tuple[int, ...]) -> None:
    """Print generators: `family H M N K L` or `family K N`.

    Parameters must satisfy 0 ≤ k ≤ m−2, 0 ≤ ℓ ≤ n−1 and m, n ≥ 2.
    """
    expected = 4 if kind.upper() == "H" else 1
    if len(params) != expected:
        raise click.UsageError(
            f"family {kind.upper()} takes {expected} integer parameter(s), got {len(params)}"
        )
    with _input_errors():
        words = family_H(family_spec(*params)) if kind.upper() == "H" else family_K(params[0])
    for word in words:
        click.echo(render(word))


@cli.command("verify")
@click.option("--m-max", type=int, required=True, help="Largest rank m of H")
@click.option("--n-max", type=int, required=True, help="Largest rank n of K")
@click.option("--corollary", is_flag=True,
              help="Also check the maximal-rank pairs and every achievable rank")
@click.option("--neumann-trials", type=int, default=0,
              help="Number of random pairs for the Neumann bound checks")
@click.option("--seed", type=int, default=0, help="Seed for --neumann-trials (default: 0)")
@click.option("--csv", "csv_out", type=click.Path(path_type=Path), default=None,
              help="Write the per-case CSV report here")
@click.option("--workers", type=int, default=1, help="Worker processes for the sweep")
@click.option("--timeout", type=int, default=None,
              help="Wall-clock limit in seconds (default: STALLINGS_SWEEP_TIMEOUT_SECONDS)")
@click.pass_context
def verify_command(
    ctx: click.Context,
    m_max: int,
    n_max: int,
    corollary: bool,
    neumann_trials: int,
    seed: int,
    csv_out: Path | None,
    workers: int,
    timeout: int | None,
) -> None:
    """Check the intersection-rank formulas over the parameter box."""
    with _input_errors():
        report = asyncio.run(
            run_verification(
                m_max,
                n_max,
                corollary=corollary,
                neumann_trials=neumann_trials,
                seed=seed,
                workers=workers,
                timeout=timeout,
            )
        )
    if csv_out:
        csv_out.write_text(report.theorem.to_csv(), encoding="utf-8")
        logger.info(f"CSV report written to {csv_out}")
    log_report(report.model_dump(mode="json"))
    click.echo(report.summary())
    if not report.passed:
        ctx.exit(1)


if __name__ == "__main__":
    cli()

#!/usr/bin/env python3
"""
CLI entry point for the hypercube embedding toolkit.
Builds, verifies and analyses Hamiltonian embeddings of hypercubes.
"""
import sys
from pathlib import Path
from typing import Optional

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

import click

from src.hypercube_embedding import __version__
from src.hypercube_embedding.core.analysis import (exhaustive_search, intersection_consistency,
                                                   intersection_graph, intersection_profile,
                                                   necessary_conditions, random_search)
from src.hypercube_embedding.core.base_validator import EmbeddingContext
from src.hypercube_embedding.core.config_loader import ConfigLoader, load_config
from src.hypercube_embedding.core.construct import construct as build_embedding
from src.hypercube_embedding.core.embedding import trace_faces, verify_hamiltonian_embedding
from src.hypercube_embedding.core.exceptions import (ConfigurationError, DomainError,
                                                     EmbeddingFrameworkError, GraphSourceError,
                                                     NotPowerOfTwoError, ParseError,
                                                     ReporterError, ResourceBoundError)
from src.hypercube_embedding.core.verification_engine import VerificationEngine
from src.hypercube_embedding.formats import (read_decomposition, read_rotation,
                                             write_decomposition, write_rotation)
from src.hypercube_embedding.models.enums import ClauseType, ExitCode, ReporterType, SearchMode
from src.hypercube_embedding.models.reports import ReportDocument
from src.hypercube_embedding.reporters.reporter_factory import create_reporter
from src.hypercube_embedding.sources.source_factory import load_graph
from src.hypercube_embedding.utils.logger import configure_logging
from src.hypercube_embedding.utils.metrics import MetricsCollector


def exit_code_for(error: Exception) -> ExitCode:
    """Map an exception onto the process exit-code contract."""
    if isinstance(error, ParseError):
        return ExitCode.PARSE_FAILURE
    if isinstance(error, ResourceBoundError):
        return ExitCode.RESOURCE_BOUND
    if isinstance(error, ReporterError):
        return ExitCode.IO_FAILURE
    if isinstance(error, GraphSourceError):
        if isinstance(error.original_error, OSError):
            return ExitCode.IO_FAILURE
        return ExitCode.BAD_PARAMETERS
    if isinstance(error, (NotPowerOfTwoError, DomainError, ConfigurationError)):
        return ExitCode.BAD_PARAMETERS
    if isinstance(error, OSError):
        return ExitCode.IO_FAILURE
    return ExitCode.VERIFICATION_FAILURE


def _abort(error: Exception) -> None:
    code = exit_code_for(error)
    label = "Error" if isinstance(error, EmbeddingFrameworkError) else "Unexpected Error"
    click.secho(f"✗ {label}: {str(error)}", fg='red', err=True)
    sys.exit(int(code))


def _emit(document: ReportDocument, as_json: bool) -> None:
    reporter_type = ReporterType.JSON if as_json else ReporterType.TEXT
    create_reporter(reporter_type.value).report(document)


@click.group()
@click.version_option(version=__version__, prog_name='Hypercube Embedding')
@click.option('--config', '-c', 'config_path', type=click.Path(),
              help='YAML configuration file (defaults apply when omitted)')
@click.option('--log-level', '-l', default=None,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                                case_sensitive=False),
              help='Override the configured logging level')
@click.pass_context
def cli(ctx, config_path, log_level):
    """
    Hamiltonian embeddings of hypercubes.

    Constructs orientable Hamiltonian embeddings of Q_n for n a power of
    two, verifies embeddings read from files, and searches small graphs
    for Hamiltonian embeddings.
    """
    ctx.ensure_object(dict)
    try:
        config = load_config(config_path)
    except ConfigurationError as e:
        _abort(e)
    if log_level:
        config.settings.log_level = log_level.upper()
    configure_logging(config.settings)
    ctx.obj['config'] = config


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Cube dimension, a power of two')
@click.option('--out-decomposition', type=click.Path(), default=None,
              help='Decomposition file (default: Q<n>.decomposition)')
@click.option('--out-rotation', type=click.Path(), default=None,
              help='Rotation file (default: Q<n>.rotation)')
@click.option('--metrics', 'show_metrics', is_flag=True,
              help='Print timing metrics to stderr')
@click.pass_context
def construct(ctx, n, out_decomposition, out_rotation, show_metrics):
    """
    Construct a Hamiltonian embedding of Q_n and write it to files.

    Example:
        python run_embedding.py construct --n 4
    """
    config = ctx.obj['config']
    metrics = MetricsCollector()
    try:
        dec, rot = build_embedding(n, config, metrics)
        report = verify_hamiltonian_embedding(dec.graph, rot, dec.matchings)
        if not report.is_verified:
            click.secho(f"✗ Q{n}: traced faces are not the consecutive unions", fg='red', err=True)
            sys.exit(int(ExitCode.VERIFICATION_FAILURE))

        write_decomposition(out_decomposition or f"Q{n}.decomposition", dec)
        write_rotation(out_rotation or f"Q{n}.rotation", rot, dimension=n)
    except (EmbeddingFrameworkError, OSError) as e:
        _abort(e)

    if show_metrics:
        click.echo(metrics.get_summary(), err=True)
    click.echo(f"Q{n}: f={report.face_count} genus={report.genus} OK")


@cli.command()
@click.argument('rotation_file', type=click.Path())
@click.option('--decomposition', '-d', 'decomposition_file', type=click.Path(), default=None,
              help='Matching decomposition whose consecutive unions should be the faces')
@click.option('--json', 'as_json', is_flag=True, help='Emit the report as JSON')
@click.pass_context
def verify(ctx, rotation_file, decomposition_file, as_json):
    """
    Verify that a rotation system is a Hamiltonian embedding.

    ROTATION_FILE: Rotation file to verify

    Example:
        python run_embedding.py verify Q8.rotation --decomposition Q8.decomposition
    """
    config = ctx.obj['config']
    try:
        document = read_rotation(rotation_file)
        graph = document.graph()
        if decomposition_file is not None:
            blocks = read_decomposition(decomposition_file)
            if blocks.dimension != document.dimension:
                raise DomainError(
                    f"decomposition is over Q_{blocks.dimension}, rotation is over {graph.describe()}",
                    value=blocks.dimension)
            context = EmbeddingContext.from_edge_blocks(graph, blocks.blocks, document.rotation)
        else:
            context = EmbeddingContext(graph=graph, rotation=document.rotation)

        summary = VerificationEngine(config).run(context)

        embedding = None
        if context.faces is not None:
            perfect = summary.result_for(ClauseType.MATCHINGS_PERFECT)
            matchings = context.matchings() if perfect is not None and perfect.is_successful() else None
            embedding = verify_hamiltonian_embedding(graph, document.rotation,
                                                     matchings=matchings, faces=context.faces)
        _emit(ReportDocument(graph=graph.describe(), embedding=embedding, verification=summary),
              as_json)
    except (EmbeddingFrameworkError, OSError) as e:
        _abort(e)

    failure = summary.first_failure()
    if failure is not None:
        detail = failure.message or failure.error_message
        click.secho(f"✗ Verification failed: {failure.clause}: {detail}", fg='red', err=True)
    sys.exit(summary.get_exit_code())


@cli.command()
@click.argument('rotation_file', type=click.Path())
@click.option('--json', 'as_json', is_flag=True, help='Emit the report as JSON')
def analyze(rotation_file, as_json):
    """
    Report face intersections of an embedding and their consistency with
    the intersection predictions for hypercube embeddings.

    ROTATION_FILE: Rotation file to analyse

    Example:
        python run_embedding.py analyze Q4.rotation --json
    """
    try:
        document = read_rotation(rotation_file)
        graph = document.graph()
        faces = trace_faces(graph, document.rotation)
        embedding = verify_hamiltonian_embedding(graph, document.rotation, faces=faces)
        profile = intersection_profile(graph, faces)
        weighted = intersection_graph(profile)

        conditions = None
        degrees = set(document.rotation.degrees().tolist())
        if len(degrees) == 1:
            degree = degrees.pop()
            if graph.vertex_count >= 3 and 1 <= degree < graph.vertex_count:
                conditions = necessary_conditions(graph.vertex_count, degree)

        _emit(ReportDocument(
            graph=graph.describe(),
            embedding=embedding,
            intersections=profile,
            intersection_graph_shape=weighted.shape,
            consistency=intersection_consistency(profile, weighted.shape),
            conditions=conditions,
        ), as_json)
    except (EmbeddingFrameworkError, OSError) as e:
        _abort(e)


@cli.command()
@click.option('--order', type=int, required=True, help='Number of vertices n')
@click.option('--degree', type=int, required=True, help='Common vertex degree d')
@click.option('--json', 'as_json', is_flag=True, help='Emit the report as JSON')
def necessary(order, degree, as_json):
    """
    Evaluate the necessary conditions for a Hamiltonian embedding of a
    d-regular graph of order n.

    Example:
        python run_embedding.py necessary --order 16 --degree 4
    """
    try:
        _emit(ReportDocument(conditions=necessary_conditions(order, degree)), as_json)
    except EmbeddingFrameworkError as e:
        _abort(e)


@cli.command()
@click.option('--graph', 'graph_spec', required=True,
              help='hypercube:<n>, complete:<n>, cycle:<n> or an adjacency-list file')
@click.option('--mode', type=click.Choice([m.value for m in SearchMode], case_sensitive=False),
              default=SearchMode.EXHAUSTIVE.value, help='Search strategy')
@click.option('--budget', type=int, default=None,
              help='Maximum rotation systems (exhaustive) or samples (random)')
@click.option('--seed', type=int, default=None, help='Random search seed')
@click.option('--json', 'as_json', is_flag=True, help='Emit the report as JSON')
@click.pass_context
def search(ctx, graph_spec, mode, budget, seed, as_json):
    """
    Search the rotation systems of a graph for Hamiltonian embeddings.

    Example:
        python run_embedding.py search --graph hypercube:3 --mode exhaustive
    """
    settings = ctx.obj['config'].search

    def progress(candidates: int, found: int) -> None:
        click.echo(f"progress: candidates={candidates} found={found}", err=True)

    try:
        graph = load_graph(graph_spec)
        if SearchMode(mode.lower()) is SearchMode.EXHAUSTIVE:
            outcome = exhaustive_search(graph, budget=budget or settings.exhaustive_budget,
                                        progress=progress,
                                        progress_interval=settings.progress_interval)
        else:
            outcome = random_search(graph, budget=budget or settings.random_budget,
                                    seed=settings.default_seed if seed is None else seed,
                                    progress=progress,
                                    progress_interval=settings.progress_interval)
        _emit(ReportDocument(graph=graph.describe(), search=outcome), as_json)
    except (EmbeddingFrameworkError, OSError) as e:
        _abort(e)


@cli.command()
@click.argument('config_file', type=click.Path(exists=True))
def validate_config(config_file):
    """
    Validate a configuration file.

    CONFIG_FILE: Path to YAML configuration file

    Example:
        python run_embedding.py validate-config config/embedding_config.yaml
    """
    click.echo(f"Validating configuration: {config_file}")
    loader = ConfigLoader(config_file)
    if not loader.validate_only():
        click.secho("✗ Configuration is invalid!", fg='red', bold=True)
        sys.exit(int(ExitCode.BAD_PARAMETERS))

    config = loader.load()
    click.secho("✓ Configuration is valid!", fg='green', bold=True)
    click.echo()
    click.echo(f"Log level:        {config.settings.log_level}")
    click.echo(f"Max dimension:    {config.construction.max_dimension}")
    click.echo(f"Exhaustive budget: {config.search.exhaustive_budget}")
    click.echo(f"Random budget:    {config.search.random_budget}")


@cli.command()
def list_validators():
    """List all verification clauses in evaluation order."""
    from src.hypercube_embedding.validators.validator_factory import ValidatorFactory

    click.echo("Verification Clauses:")
    click.echo()
    for clause in ValidatorFactory.get_supported_types():
        click.echo(f"  • {clause}")


@cli.command()
def list_sources():
    """List all supported graph-spec kinds."""
    from src.hypercube_embedding.sources.source_factory import GraphSourceFactory

    click.echo("Supported Graph Sources:")
    click.echo()
    for kind in GraphSourceFactory.get_supported_types():
        click.echo(f"  • {kind}")


@cli.command()
def list_reporters():
    """List all supported reporter types."""
    from src.hypercube_embedding.reporters.reporter_factory import ReporterFactory

    click.echo("Supported Reporter Types:")
    click.echo()
    for reporter_type in ReporterFactory.get_supported_types():
        click.echo(f"  • {reporter_type}")


@cli.command()
def version():
    """Display toolkit version and information."""
    click.echo("Hypercube Embedding Toolkit")
    click.echo(f"Version: {__version__}")
    click.echo()
    click.echo("Commands:")
    click.echo("  • construct  build Q_n for n a power of two")
    click.echo("  • verify     check a rotation system and decomposition")
    click.echo("  • analyze    face intersections of an embedding")
    click.echo("  • necessary  conditions on order and degree")
    click.echo("  • search     exhaustive or random rotation search")


def main(argv: Optional[list] = None) -> None:
    cli(args=argv, obj={})


if __name__ == '__main__':
    main()

from __future__ import (
    absolute_import,
    unicode_literals,
)

import argparse
import functools
import json
import logging
import os
import sys
from typing import (
    Any,
    Callable,
    IO,
    Optional,
    Sequence,
)

from conformity.error import ValidationError
from conformity.validator import validate
import six

from dualeq.constants import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    FORMAT_DOT,
    FORMAT_JSON,
    OUTPUT_FORMATS,
)
from dualeq.error import (
    ClassificationError,
    DualEquivalenceError,
    UsageError,
)
from dualeq.fields import (
    PartitionString,
    ShapeString,
)
from dualeq.fixtures import (
    fixture_names,
    load_fixture,
)
from dualeq.graphs.axioms import check_axioms
from dualeq.graphs.core import (
    SignedColoredGraph,
    components,
    generating_function,
    standard_graph,
)
from dualeq.graphs.io import (
    graph_to_dot,
    graph_to_json,
    load_graph,
    load_qsym,
)
from dualeq.graphs.morphism import classify_component
from dualeq.involutions import (
    format_word,
    inversion_number,
)
from dualeq.llt import (
    conjecture_shapes,
    d_graph,
    llt_polynomial,
    sweep,
    verify_conjecture,
    verify_two_tuple,
)
from dualeq.ribbons import (
    twisted_class_expansion,
    twisted_classes,
)
from dualeq.settings import (
    RunSettings,
    build_settings,
    logging_config,
)
from dualeq.shapes import (
    Shape,
    TupleShape,
    format_partition,
    format_shape,
    parse_partition,
    parse_shape,
)
from dualeq.symfunc.lr import lr_coefficients
from dualeq.symfunc.qsym import (
    QSymExpansion,
    extract_schur,
)
from dualeq.tableaux import (
    format_signature,
    signature_of_word,
)
from dualeq.version import __version__


__all__ = (
    'build_parser',
    'deg_main',
    'dualeq_main',
    'llt_main',
    'run',
    'sym_main',
)


_logger = logging.getLogger(__name__)


FAMILIES = ('deg', 'sym', 'llt')

DEFAULT_SWEEP_SIZE = 6
DEFAULT_SWEEP_K = 3

_VERBOSITY_LEVELS = ('WARNING', 'INFO', 'DEBUG')


class _Output(object):
    """Collects the lines of one command and whether every verification passed."""

    def __init__(self, stream):  # type: (IO[six.text_type]) -> None
        self.stream = stream
        self.passed = True

    def line(self, text=''):  # type: (six.text_type) -> None
        self.stream.write(text + '\n')

    def record(self, data):  # type: (Any) -> None
        self.line(json.dumps(data, sort_keys=True))

    def fail(self):  # type: () -> None
        self.passed = False


def _shape_argument(text):  # type: (six.text_type) -> Shape
    try:
        validate(ShapeString(), text, 'shape')
    except ValidationError as e:
        raise UsageError(six.text_type(e.args[0]).strip())
    return parse_shape(text)


def _partition_argument(text):  # type: (six.text_type) -> Any
    try:
        validate(PartitionString(), text, 'partition')
    except ValidationError as e:
        raise UsageError(six.text_type(e.args[0]).strip())
    return parse_partition(text)


def _load_graph_argument(text, settings):  # type: (six.text_type, RunSettings) -> SignedColoredGraph
    """A path to a graph file, or the name of a fixture with or without its directory and extension."""
    if os.path.isfile(text):
        return load_graph(text)
    name = os.path.splitext(os.path.basename(text))[0]
    if name in fixture_names(settings['fixtures_path']):
        return load_fixture(name, settings['fixtures_path'])
    raise UsageError('No graph file or fixture named {!r}'.format(text))


def _emit_graph(out, graph, settings):  # type: (_Output, SignedColoredGraph, RunSettings) -> None
    if settings['format'] == FORMAT_JSON:
        out.stream.write(graph_to_json(graph))
    elif settings['format'] == FORMAT_DOT:
        out.stream.write(graph_to_dot(graph))
    else:
        out.line('type ({}, {}) with {} vertices'.format(graph.n, graph.N, len(graph)))
        for v in graph.vertices:
            stat = ' q^{}'.format(v.stat) if v.stat else ''
            out.line('{} {} {}{}'.format(v.id, format_signature(v.sigma), v.label or '', stat).rstrip())
        for i in graph.colors:
            pairs = graph.edges.get(i, ())
            out.line('{}: {}'.format(i, ' '.join('{}-{}'.format(a, b) for a, b in pairs)).rstrip())


def _emit_qsym(out, f, settings):  # type: (_Output, QSymExpansion, RunSettings) -> None
    expansion = extract_schur(f)
    if settings['format'] == FORMAT_JSON:
        out.record({'qsym': f.to_json(), 'schur': expansion.to_json()})
    else:
        out.line('Q: {}'.format(f))
        out.line('s: {}'.format(expansion))
        if not expansion.in_schur_span:
            out.line('residual: {}'.format(expansion.residual))
    if not expansion.in_schur_span:
        out.fail()


# deg


def _deg_standard(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    _emit_graph(out, standard_graph(_partition_argument(args.partition), max_cells=settings['max_cells']), settings)


def _deg_check(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    report = check_axioms(_load_graph_argument(args.graph, settings))
    if settings['format'] == FORMAT_JSON:
        out.record(report.as_dict())
    else:
        for text in report.summary_lines():
            out.line(text)
    if not report.passed:
        out.fail()


def _deg_classify(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    graph = _load_graph_argument(args.graph, settings)
    for c in components(graph):
        anchor = c.ids[0]
        try:
            result = classify_component(c, require_iso=settings['require_iso'])
        except ClassificationError as e:
            out.fail()
            if settings['format'] == FORMAT_JSON:
                out.record({'component': anchor, 'failure': e.failure.as_dict() if e.failure else six.text_type(e)})
            else:
                out.line('component {}: fail ({})'.format(anchor, e))
            continue
        if settings['format'] == FORMAT_JSON:
            record = result.as_dict()
            record['component'] = anchor
            out.record(record)
        else:
            shape = format_partition(result.partition, parenthesize=True)
            out.line('component {}: {} x{}'.format(anchor, shape, result.multiplicity))


def _deg_gf(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    _emit_qsym(out, generating_function(_load_graph_argument(args.graph, settings)), settings)


def _deg_dot(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    out.stream.write(graph_to_dot(_load_graph_argument(args.graph, settings)))


# sym


def _sym_extract(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    if not os.path.isfile(args.file):
        raise UsageError('No such file {!r}'.format(args.file))
    _emit_qsym(out, load_qsym(args.file), settings)


def _sym_lr(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    expansion = lr_coefficients(
        _partition_argument(args.mu),
        _partition_argument(args.nu),
        max_cells=settings['max_cells'],
    )
    if settings['format'] == FORMAT_JSON:
        out.record(expansion.to_json())
    else:
        out.line(six.text_type(expansion))


# llt


def _tuple_argument(shapes):  # type: (Sequence[six.text_type]) -> Shape
    parsed = [_shape_argument(text) for text in shapes]
    if len(parsed) == 1:
        return parsed[0]
    if any(isinstance(mu, TupleShape) for mu in parsed):
        raise UsageError('Give either one tuple of shapes or several single shapes')
    return TupleShape(tuple(parsed))


def _llt_poly(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    _emit_qsym(out, llt_polynomial(_tuple_argument(args.shape), max_cells=settings['max_cells']), settings)


def _llt_graph(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    _emit_graph(out, d_graph(_tuple_argument(args.shape), max_cells=settings['max_cells']), settings)


def _llt_verify2(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    report = verify_two_tuple(_tuple_argument(args.shape), max_cells=settings['max_cells'])
    if settings['format'] == FORMAT_JSON:
        out.record(report.as_dict())
    elif report.passed:
        out.line(six.text_type(report.expansion))
    else:
        for failure in report.check.failures:
            out.line('fail: {}'.format(failure.message))
        if report.axioms is not None:
            for text in report.axioms.summary_lines():
                out.line(text)
    if not report.passed:
        out.fail()


def _llt_conjecture(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    max_size = args.max_size or DEFAULT_SWEEP_SIZE
    shapes = conjecture_shapes(max_size, args.k, include_skew=args.skew)
    check = functools.partial(verify_conjecture, max_cells=max(max_size, settings['max_cells']))
    for report in sweep(shapes, check=check, jobs=settings['jobs']):
        if settings['format'] == FORMAT_JSON:
            out.record(report.as_dict())
        else:
            verdict = 'pass' if report.passed else 'fail'
            out.line('{}: {} {}'.format(format_shape(report.shape), verdict, report.expansion))
            for failure in report.check.failures:
                out.line('  {}: {}'.format(failure.message, json.dumps(failure.witness, sort_keys=True)))
        if not report.passed:
            out.fail()


def _llt_ribbon_classes(args, settings, out):  # type: (argparse.Namespace, RunSettings, _Output) -> None
    if args.n < 1:
        raise UsageError('The word length must be positive (got {})'.format(args.n))
    for cls in twisted_classes(args.n):
        expansion = twisted_class_expansion(cls)
        direct = extract_schur(QSymExpansion.from_signatures(args.n, (signature_of_word(w) for w in cls.members)))
        first = cls.members[0]
        if settings['format'] == FORMAT_JSON:
            out.record({
                'class': [format_word(w) for w in cls.members],
                'inv': inversion_number(first),
                'flag': first[0] > first[-1],
                'expansion': six.text_type(expansion),
                'agrees': expansion == direct,
            })
        else:
            out.line('{{{}}} inv={} flag={}: {}'.format(
                ','.join(format_word(w) for w in cls.members),
                inversion_number(first),
                '+' if first[0] > first[-1] else '-',
                expansion,
            ))
        if expansion != direct:
            _logger.warning('Ribbon expansion of the class of %s disagrees with direct extraction', format_word(first))
            out.fail()


_Handler = Callable[[argparse.Namespace, RunSettings, _Output], None]


def _add_common(parser):  # type: (argparse.ArgumentParser) -> None
    parser.add_argument('--format', choices=OUTPUT_FORMATS, default=None, help='Output format (default text).')
    parser.add_argument('--max-size', type=int, default=None, help='Largest number of cells to enumerate.')
    parser.add_argument('--jobs', type=int, default=None, help='Worker processes for sweeps.')
    parser.add_argument('--require-iso', action='store_true', default=None, help='Treat covers as failures.')
    parser.add_argument('--fixtures', default=None, help='Directory to read fixtures from.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='Log more (repeat for debug output).')


def _add_command(subparsers, name, handler, help_text, prints_graph=False):
    # type: (Any, six.text_type, _Handler, six.text_type, bool) -> argparse.ArgumentParser
    parser = subparsers.add_parser(name, help=help_text)
    _add_common(parser)
    parser.set_defaults(handler=handler, prints_graph=prints_graph)
    return parser


def build_parser(family):  # type: (six.text_type) -> argparse.ArgumentParser
    parser = argparse.ArgumentParser(prog=family)
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    if family == 'deg':
        _add_command(
            subparsers,
            'standard',
            _deg_standard,
            'Build the standard graph of a partition.',
            prints_graph=True,
        ).add_argument('partition')
        _add_command(subparsers, 'check', _deg_check, 'Check the six axioms on a graph.').add_argument('graph')
        classify = _add_command(subparsers, 'classify', _deg_classify, 'Map each component onto a standard graph.')
        classify.add_argument('graph')
        _add_command(subparsers, 'gf', _deg_gf, 'Print the generating function of a graph.').add_argument('graph')
        _add_command(subparsers, 'dot', _deg_dot, 'Render a graph as DOT.', prints_graph=True).add_argument('graph')
    elif family == 'sym':
        _add_command(subparsers, 'extract', _sym_extract, 'Expand a quasisymmetric function in Schur functions.') \
            .add_argument('file')
        lr = _add_command(subparsers, 'lr', _sym_lr, 'Multiply two Schur functions.')
        lr.add_argument('mu')
        lr.add_argument('nu')
    elif family == 'llt':
        _add_command(subparsers, 'poly', _llt_poly, 'Print an LLT polynomial.').add_argument('shape', nargs='+')
        _add_command(
            subparsers,
            'graph',
            _llt_graph,
            'Build the graph of the combined involutions.',
            prints_graph=True,
        ).add_argument('shape', nargs='+')
        _add_command(subparsers, 'verify2', _llt_verify2, 'Verify a tuple of at most two shapes.').add_argument(
            'shape', nargs='+',
        )
        conjecture = _add_command(subparsers, 'conjecture', _llt_conjecture, 'Sweep tuples of partitions.')
        conjecture.add_argument('--k', type=int, default=DEFAULT_SWEEP_K, help='Number of shapes per tuple.')
        conjecture.add_argument('--skew', action='store_true', help='Include skew components where allowed.')
        _add_command(subparsers, 'ribbon-classes', _llt_ribbon_classes, 'Expand the twisted classes of words.') \
            .add_argument('n', type=int)
    else:
        raise UsageError('Unknown command family {!r}; expected one of {}'.format(family, ', '.join(FAMILIES)))
    return parser


def _settings_from(args):  # type: (argparse.Namespace) -> RunSettings
    level = _VERBOSITY_LEVELS[min(args.verbose, len(_VERBOSITY_LEVELS) - 1)]
    return build_settings(
        max_cells=args.max_size if args.command != 'conjecture' else None,
        format=args.format,
        fixtures_path=args.fixtures,
        require_iso=args.require_iso,
        jobs=args.jobs,
        logging=logging_config(level),
    )


def run(argv, stdout=None):  # type: (Sequence[six.text_type], Optional[IO[six.text_type]]) -> int
    """
    Runs one command, `argv[0]` being the command family. Returns 0 when everything passed, 1 when a verification
    failed and 2 for usage or input errors.
    """
    stream = stdout or sys.stdout
    if not argv or argv[0] not in FAMILIES:
        sys.stderr.write('usage: dualeq {{{}}} ...\n'.format(','.join(FAMILIES)))
        return EXIT_USAGE
    try:
        args = build_parser(argv[0]).parse_args(list(argv[1:]))
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE
    try:
        settings = _settings_from(args)
    except RunSettings.ImproperlyConfigured as e:
        sys.stderr.write('error: {}\n'.format(e))
        return EXIT_USAGE
    settings.configure_logging()
    out = _Output(stream)
    handler = args.handler  # type: _Handler
    try:
        if settings['format'] == FORMAT_DOT and not args.prints_graph:
            raise UsageError('--format dot only applies to commands that print a graph')
        handler(args, settings, out)
    except (DualEquivalenceError, ValidationError, IOError, ValueError) as e:
        _logger.debug('Command %s failed', args.command, exc_info=True)
        sys.stderr.write('error: {}\n'.format(e))
        return EXIT_USAGE
    return EXIT_OK if out.passed else EXIT_VERIFICATION_FAILED


def _main(family):  # type: (six.text_type) -> None
    sys.exit(run([family] + sys.argv[1:]))


deg_main = functools.partial(_main, 'deg')
sym_main = functools.partial(_main, 'sym')
llt_main = functools.partial(_main, 'llt')


def dualeq_main():  # type: () -> None
    sys.exit(run(sys.argv[1:]))

"""Command line interface.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or input
error.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from hopflab import __version__
from hopflab.classifier import CLASS_CHAIN, HopfClassifier
from hopflab.config import CliConfig, load_config_file, make_config
from hopflab.descriptors import parse_descriptor, ulm_of_descriptor
from hopflab.exceptions import BoundExceeded, HopflabError
from hopflab.group import parse_elements, parse_group
from hopflab.hom import (Subgroup, count_homs, enumerate_homs,
                         enumerate_subgroups, is_surjective, quotient)
from hopflab.reports import ReportBundle
from hopflab.serializer import JSONSerializer
from hopflab.structure import is_pure
from hopflab.suites import SUITE_NAMES, run_suite
from hopflab.utils import is_prime

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_ULM_UPTO = 5

cli_logger = None


def logger() -> logging.Logger:
    global cli_logger
    if cli_logger is None:
        cli_logger = logging.getLogger(__name__)
    return cli_logger


def _common() -> argparse.ArgumentParser:
    # accepted before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        default=argparse.SUPPRESS,
                        help='Emit JSON instead of text')
    common.add_argument('--debug', action='store_true',
                        default=argparse.SUPPRESS,
                        help='Debug logging')
    common.add_argument('--config', default=argparse.SUPPRESS,
                        help='JSON file with flag values')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog='hopflab', parents=[common],
        description='Exact abelian group workbench: Hopfian-type classes, '
                    'Ulm invariants and verification suites.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('classify', parents=[common],
                       help='Classify a group descriptor')
    p.add_argument('descriptor')

    p = sub.add_parser('ulm', parents=[common],
                       help='Ulm invariants of a group descriptor')
    p.add_argument('descriptor')
    p.add_argument('-p', '--prime', type=int, required=True)
    p.add_argument('--upto', type=int, default=None,
                   help='Number of invariants f_0 .. f_(K-1) to print')

    p = sub.add_parser('quotient', parents=[common],
                       help='Quotient of a finite group by a subgroup')
    p.add_argument('factors')
    p.add_argument('--sub', default='',
                   help='Semicolon separated generators, e.g. "2,1;0,1"')

    p = sub.add_parser('homs', parents=[common],
                       help='Homomorphisms between finite groups')
    p.add_argument('source')
    p.add_argument('target')
    p.add_argument('--surjective-only', action='store_true')
    p.add_argument('--count', action='store_true')
    p.add_argument('--max-homs', type=int, default=None)

    p = sub.add_parser('subgroups', parents=[common],
                       help='Subgroups of a finite group')
    p.add_argument('factors')
    p.add_argument('--pure-only', action='store_true')

    p = sub.add_parser('verify', parents=[common],
                       help='Run a verification suite')
    p.add_argument('suite', help=f'one of {", ".join(SUITE_NAMES)}, or all')
    p.add_argument('--max-order', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--size', type=int, default=None)
    p.add_argument('--max-homs', type=int, default=None)
    p.add_argument('--workers', type=int, default=None)
    return parser


def resolve_config(args: argparse.Namespace) -> CliConfig:
    """resolve_config.
    Defaults, then the config file, then command line flags.
    """
    values: Dict[str, Any] = {}
    path = getattr(args, 'config', None)
    if path:
        values.update(load_config_file(path))
    for key in ('max_order', 'seed', 'size', 'max_homs', 'workers'):
        if getattr(args, key, None) is not None:
            values[key] = getattr(args, key)
    if getattr(args, 'json', False):
        values['json'] = True
    if getattr(args, 'debug', False):
        values['debug'] = True
    return make_config(values)


def _emit(config: CliConfig, data: Dict[str, Any], text: List[str]) -> None:
    if config.json_output:
        print(JSONSerializer.serialize(data))
    else:
        print('\n'.join(text))


def cmd_classify(args, config: CliConfig) -> int:
    d = parse_descriptor(args.descriptor)
    report = HopfClassifier(debug=config.debug).classify(d)
    text = [report.descriptor,
            '  '.join(f'{c.value:>3}' for c in CLASS_CHAIN),
            '  '.join(f'{v:>3}' for v in report.row()),
            'trace:']
    text += [f'  [{e.rule}] {e.hopf_class.value}={e.verdict.value} '
             f'on {e.subterm}  ({e.citation})' for e in report.trace]
    _emit(config, report.dump(), text)
    return EXIT_OK


def cmd_ulm(args, config: CliConfig) -> int:
    if not is_prime(args.prime):
        raise HopflabError(f'{args.prime} is not a prime')
    d = parse_descriptor(args.descriptor)
    u = ulm_of_descriptor(d, args.prime)
    upto = args.upto
    if upto is None:
        upto = u.length if u.length else DEFAULT_ULM_UPTO
    values = u.upto(upto)
    data = {'descriptor': str(d), 'prime': args.prime,
            'f': [v.dump() for v in values], 'f_inf': u.f_inf.dump(),
            'ulm': u.dump()}
    text = [f'f_{k} = {v}' for k, v in enumerate(values)]
    text.append(f'f_inf = {u.f_inf}')
    _emit(config, data, text)
    return EXIT_OK


def cmd_quotient(args, config: CliConfig) -> int:
    G = parse_group(args.factors)
    gens = [g for g in parse_elements(args.sub) if g] if args.sub else []
    H = Subgroup.generated(G, gens)
    Q, _ = quotient(G, H)
    data = {'group': list(G.moduli), 'subgroup': [list(b) for b in H.basis()],
            'subgroup_order': H.order(), 'subgroup_type': list(
                H.to_group().invariant_factors),
            'quotient': list(Q.invariant_factors), 'pure': is_pure(G, H)}
    text = [f'G = {G}', f'H = {H} (order {H.order()}, ~ {H.to_group()})',
            f'G/H ~ {Q}', f'pure: {"yes" if data["pure"] else "no"}']
    _emit(config, data, text)
    return EXIT_OK


def cmd_homs(args, config: CliConfig) -> int:
    G, K = parse_group(args.source), parse_group(args.target)
    max_homs = args.max_homs or config.bounds.max_homs
    total = count_homs(G, K)
    if args.count and not args.surjective_only:
        _emit(config, {'source': list(G.moduli), 'target': list(K.moduli),
                       'count': total}, [str(total)])
        return EXIT_OK
    if total > max_homs:
        raise BoundExceeded(
            f'|Hom({G}, {K})| = {total} exceeds --max-homs {max_homs}',
            bound=max_homs)
    homs = [h for h in enumerate_homs(G, K)
            if not args.surjective_only or is_surjective(h)]
    data = {'source': list(G.moduli), 'target': list(K.moduli),
            'count': len(homs)}
    if args.count:
        _emit(config, data, [str(len(homs))])
        return EXIT_OK
    data['homs'] = [[list(y) for y in h.images] for h in homs]
    _emit(config, data, [str(h) for h in homs])
    return EXIT_OK


def cmd_subgroups(args, config: CliConfig) -> int:
    G = parse_group(args.factors)
    subs = [H for H in enumerate_subgroups(
        G, config.bounds.max_subgroup_order)
        if not args.pure_only or is_pure(G, H)]
    data = {'group': list(G.moduli), 'count': len(subs),
            'subgroups': [{'generators': [list(b) for b in H.basis()],
                           'order': H.order(),
                           'type': list(H.to_group().invariant_factors)}
                          for H in subs]}
    text = [f'{H.order():>5}  {H.to_group()!s:<20} <{H.literal()}>'
            for H in subs]
    _emit(config, data, text)
    return EXIT_OK


def cmd_verify(args, config: CliConfig) -> int:
    names = SUITE_NAMES if args.suite == 'all' else [args.suite]
    bundle = ReportBundle(reports=[
        run_suite(n, config.bounds, config.corpus, debug=config.debug)
        for n in names])
    text = []
    for r in bundle.reports:
        status = 'PASS' if r.passed else 'FAIL'
        text.append(f'{r.suite}: {status} ({r.instances_checked} checks, '
                    f'{len(r.failures)} failures, {r.sampled} sampled, '
                    f'{r.elapsed} ms)')
        text += [f'  failure: {f.instance}: expected {f.expected}, '
                 f'got {f.actual}' for f in r.failures]
        text += [f'  control {c.name}: {"ok" if c.passed else "FAILED"}'
                 for c in r.controls]
    if len(bundle.reports) == 1:
        data = bundle.reports[0].dump()
    else:
        data = bundle.dump()
    _emit(config, data, text)
    return EXIT_OK if bundle.passed else EXIT_FAILED


COMMANDS = {
    'classify': cmd_classify,
    'ulm': cmd_ulm,
    'quotient': cmd_quotient,
    'homs': cmd_homs,
    'subgroups': cmd_subgroups,
    'verify': cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """main.

    Args:
        argv (Optional[List[str]]): arguments without the program name
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = resolve_config(args)
        logging.basicConfig(
            level=logging.DEBUG if config.debug else logging.WARNING)
        return COMMANDS[args.command](args, config)
    except HopflabError as exc:
        logger().debug(f'{args.command} failed', exc_info=True)
        print(f'hopflab: error: {exc}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())

"""
Command-line interface for the toric stacks toolkit

Every subcommand takes a fan: a path to a fan file or the name of a bundled
example fan (see fans/). Results go to standard output, logs to standard
error. Negative comma-separated vectors need the '=' form, e.g. --k=-1,0,2.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 reproduction mismatch.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.cohomology import ext, h_all
from src.config import Config
from src.constructions import (
    frobenius_morphism,
    resolve_2d,
    rigidification,
    root_stack_divisors,
    root_stack_line_bundles,
    substack,
    weighted_blowup,
)
from src.data import dump_fan, example_fan_path, load_fan, save_fan
from src.errors import ToricError
from src.exceptional import ext_table, find_exceptional_ordering, fullness_rank_proxy, scan_subsets
from src.fans import (
    LineBundle,
    StackyFan,
    bundle,
    canonical_class,
    divisor,
    parse_bundle,
    pic_description,
    render,
    validate,
)
from src.frobenius import pushforward_by_characters, pushforward_by_lattice, sorted_bundles, stable_summands
from src.geometry import is_nef, nef_summands
from src.pipelines.reproduce import EXAMPLES, reproduce

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class Outcome:
    """What a subcommand produced: text lines, a JSON payload and an exit code."""

    def __init__(self, command: str, fan: Optional[StackyFan]):
        self.command = command
        self.fan = fan
        self.lines: List[str] = []
        self.result: Dict[str, Any] = {}
        self.expected: Optional[Any] = None
        self.match: Optional[bool] = None
        self.code = EXIT_OK

    def say(self, line: str = ''):
        self.lines.append(line)

    def to_json(self) -> str:
        payload = {
            'command': self.command,
            'fan': self.fan.to_dict() if self.fan is not None else None,
            'result': self.result,
        }
        if self.expected is not None:
            payload['expected'] = self.expected
        if self.match is not None:
            payload['match'] = self.match
        return json.dumps(payload, indent=2, sort_keys=True)


def parse_csv(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from e


def resolve_fan_path(name_or_path: str) -> Path:
    path = Path(name_or_path)
    if path.exists():
        return path
    bundled = example_fan_path(name_or_path)
    if bundled.exists():
        return bundled
    return path


def _names(bundles) -> List[str]:
    return [render(L) for L in sorted_bundles(bundles)]


def _bundle_from_args(fan: StackyFan, args) -> LineBundle:
    if getattr(args, 'bundle', None):
        return parse_bundle(fan, args.bundle)
    if getattr(args, 'k', None) is not None:
        return bundle(fan, args.k, args.l)
    raise ToricError("give a line bundle with --k (and --l) or --bundle")


def cmd_validate(args, out: Outcome):
    fan = load_fan(resolve_fan_path(args.fan), check=False)
    out.fan = fan
    violations = validate(fan)
    out.result = {'valid': not violations, 'violations': violations}
    if violations:
        out.say(f"invalid stacky fan ({len(violations)} violation(s)):")
        for v in violations:
            out.say(f"  - {v}")
        out.code = EXIT_DOMAIN
    else:
        out.say(f"valid stacky fan: rank {fan.n}, torsion {list(fan.torsion)}, {fan.s} rays, "
                f"{len(fan.max_cones)} maximal cones")


def cmd_picard(args, out: Outcome):
    fan = out.fan
    K = canonical_class(fan)
    divisors = {f'D{i}': render(divisor(fan, i)) for i in range(1, fan.s + 1)}
    out.result = {'pic': pic_description(fan), 'canonical_class': render(K), 'divisors': divisors}
    out.say(f"Pic = {pic_description(fan)}")
    out.say(f"K = {render(K)}")
    for name, rendered in divisors.items():
        out.say(f"  cl({name}) = {rendered}")


def cmd_summands(args, out: Outcome):
    fan = out.fan
    if args.stable:
        summands = _names(stable_summands(fan))
        out.result = {'stable_summands': summands, 'count': len(summands)}
        out.say(f"stable summand set ({len(summands)} classes):")
        for name in summands:
            out.say(f"  {name}")
        return

    L = _bundle_from_args(fan, args) if (args.k is not None or args.bundle) else bundle(fan, [0] * fan.s)
    multiset = pushforward_by_characters(fan, L, args.m)
    lattice = pushforward_by_lattice(fan, L, args.m)
    characters = multiset.support()
    only_characters = _names(characters - lattice)
    only_lattice = _names(lattice - characters)
    out.result = {
        'bundle': render(L),
        'm': args.m,
        'summands': {render(M): multiset[M] for M in sorted_bundles(characters)},
        'total_rank': multiset.total_rank(),
        'only_by_characters': only_characters,
        'only_by_lattice': only_lattice,
    }
    out.say(f"F_{args.m},* {render(L)}: {len(characters)} classes, total rank {multiset.total_rank()}")
    for M in sorted_bundles(characters):
        out.say(f"  {render(M)}  x{multiset[M]}")
    if only_characters or only_lattice:
        out.say(f"formulas disagree: characters only {only_characters}, lattice only {only_lattice}")
        out.code = EXIT_DOMAIN
    else:
        out.say("character and lattice formulas agree")


def cmd_cohomology(args, out: Outcome):
    fan = out.fan
    L = _bundle_from_args(fan, args)
    dims = h_all(fan, L)
    out.result = {'bundle': render(L), 'h': list(dims)}
    out.say(f"h^*({render(L)}) = {tuple(dims)}")


def cmd_ext(args, out: Outcome):
    fan = out.fan
    L1, L2 = parse_bundle(fan, args.first), parse_bundle(fan, args.second)
    dims = ext(fan, L1, L2)
    out.result = {'first': render(L1), 'second': render(L2), 'ext': list(dims)}
    out.say(f"ext^*({render(L1)}, {render(L2)}) = {tuple(dims)}")


def cmd_nef(args, out: Outcome):
    fan = out.fan
    if args.k is not None or args.bundle:
        L = _bundle_from_args(fan, args)
        nef = is_nef(fan, L)
        out.result = {'bundle': render(L), 'nef': nef}
        out.say(f"{render(L)} is {'nef' if nef else 'not nef'}")
        return
    summands = stable_summands(fan)
    nef = nef_summands(fan)
    out.result = {'nef_summands': _names(nef), 'excluded': _names(summands - nef)}
    out.say(f"nef summands ({len(nef)} of {len(summands)}):")
    for name in _names(nef):
        out.say(f"  {name}")
    for name in _names(summands - nef):
        out.say(f"  excluded: {name}")


def _collection(fan: StackyFan, texts: Sequence[str]) -> List[LineBundle]:
    if texts:
        return [parse_bundle(fan, t) for t in texts]
    return sorted_bundles(stable_summands(fan))


def cmd_check_collection(args, out: Outcome):
    fan = out.fan
    bundles = _collection(fan, args.bundles)
    table = ext_table(fan, bundles)
    ordering = find_exceptional_ordering(table, strong=args.strong)
    frame = table.to_frame()
    out.result = {
        'bundles': [render(L) for L in bundles],
        'ext_table': {row: frame.loc[row].to_dict() for row in frame.index},
        'strong': args.strong,
        'ordering': [render(L) for L in ordering] if ordering is not None else None,
    }
    out.say(frame.to_string())
    kind = 'strong exceptional' if args.strong else 'exceptional'
    if ordering is None:
        out.say(f"no {kind} ordering")
    else:
        out.say(f"{kind} ordering: " + ', '.join(render(L) for L in ordering))

    try:
        proxy = fullness_rank_proxy(fan, bundles)
    except ToricError as e:
        out.say(f"rank proxy unavailable: {e}")
        return
    out.result['rank_proxy'] = {'passes': proxy.passes, 'k_rank': proxy.k_rank, 'size': proxy.size}
    out.say(f"rank proxy (necessary for fullness, not sufficient): size {proxy.size} vs rk K {proxy.k_rank}: "
            f"{'passes' if proxy.passes else 'fails'}")


def cmd_scan(args, out: Outcome):
    fan = out.fan
    pool = _collection(fan, args.pool)
    found = scan_subsets(fan, pool, args.size, strong=args.strong)
    subsets = [_names(s) for s in found]
    out.result = {'size': args.size, 'strong': args.strong, 'pool': _names(pool), 'subsets': subsets}
    out.say(f"{len(subsets)} {'strong ' if args.strong else ''}exceptional subset(s) of size {args.size} "
            f"in a pool of {len(set(pool))}:")
    for names in subsets:
        out.say('  {' + ', '.join(names) + '}')


def cmd_construct(args, out: Outcome):
    fan = out.fan
    morphism = None
    if args.kind == 'root':
        new_fan, morphism = root_stack_divisors(fan, args.c)
    elif args.kind == 'rootlb':
        bundles = [parse_bundle(fan, t) for t in args.bundles]
        new_fan, morphism = root_stack_line_bundles(fan, bundles, args.e)
    elif args.kind == 'rigidify':
        new_fan, morphism = rigidification(fan)
    elif args.kind == 'substack':
        new_fan = substack(fan, [i - 1 for i in args.tau])
    elif args.kind == 'blowup':
        step = weighted_blowup(fan, [i - 1 for i in args.cone], args.ray)
        new_fan, morphism = step.fan, step.morphism
        out.result['b_new'] = step.b_new
    elif args.kind == 'resolve':
        steps = resolve_2d(fan)
        new_fan = steps[-1].fan if steps else fan
        out.result['inserted_rays'] = [list(step.v_new) for step in steps]
        out.say(f"{len(steps)} weighted blow-up(s), inserted rays {[step.v_new for step in steps]}")
    else:
        new_fan, morphism = fan, frobenius_morphism(fan, args.m)

    out.result['fan'] = new_fan.to_dict()
    if morphism is not None:
        out.result['morphism'] = morphism.to_dict()
    out.say(dump_fan(new_fan).rstrip())
    if morphism is not None:
        for name, rows in morphism.to_dict().items():
            out.say(f"{name} = {rows}")
    if args.output:
        save_fan(new_fan, args.output)


def cmd_reproduce(args, out: Outcome):
    report = reproduce(args.example)
    out.fan = report.fan
    frame = report.to_frame()
    out.result = report.to_dict()
    out.expected = {c.label: c.expected for c in report.checks if c.expected is not None}
    out.match = report.match
    out.say(f"example {args.example}")
    out.say(frame.to_string(index=False))
    out.say('MATCH' if report.match else 'MISMATCH')
    if not report.match:
        out.code = EXIT_MISMATCH


COMMANDS = {
    'validate': cmd_validate,
    'picard': cmd_picard,
    'summands': cmd_summands,
    'cohomology': cmd_cohomology,
    'ext': cmd_ext,
    'nef': cmd_nef,
    'check-collection': cmd_check_collection,
    'scan': cmd_scan,
    'construct': cmd_construct,
    'reproduce': cmd_reproduce,
}


def _add_bundle_options(p: argparse.ArgumentParser):
    p.add_argument('--k', type=parse_csv, help='divisor coefficients, e.g. --k=0,0,-3,-1,1')
    p.add_argument('--l', type=parse_csv, default=None, help='torsion twist coefficients')
    p.add_argument('--bundle', help="line bundle in text form, e.g. 'O(-2 D3 - D4)'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Exact computations on toric Deligne-Mumford stacks')
    parser.add_argument('--json', action='store_true', help='machine-readable output')
    parser.add_argument('--log-level', default=Config.LOG_LEVEL, type=str.upper,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='logging level (default from TORIC_LOG_LEVEL)')
    sub = parser.add_subparsers(dest='command', required=True)

    def fan_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('fan', help='fan file, or the name of a bundled example fan')
        return p

    fan_command('validate', 'check stacky-fan invariants')
    fan_command('picard', 'Picard group and divisor classes')

    p = fan_command('summands', 'Frobenius push-forward summands')
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument('--m', type=int, help='one push-forward by both formulas')
    mode.add_argument('--stable', action='store_true', help='the stabilized summand set')
    _add_bundle_options(p)

    p = fan_command('cohomology', 'all cohomology of a line bundle')
    _add_bundle_options(p)

    p = fan_command('ext', 'Ext groups between two line bundles')
    p.add_argument('first')
    p.add_argument('second')

    p = fan_command('nef', 'nefness of a bundle, or the nef summand set')
    _add_bundle_options(p)

    p = fan_command('check-collection', 'Ext table and exceptional ordering')
    p.add_argument('bundles', nargs='*', help='line bundles (default: the stable summands)')
    p.add_argument('--strong', action='store_true')

    p = fan_command('scan', 'exhaustive scan for exceptional subsets')
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--pool', nargs='*', default=[], help='line bundles (default: the stable summands)')
    p.add_argument('--strong', action='store_true')

    p = fan_command('construct', 'root stacks, rigidification, substacks, blow-ups, Frobenius')
    p.add_argument('kind', choices=['root', 'rootlb', 'rigidify', 'substack', 'blowup', 'resolve', 'frobenius'])
    p.add_argument('--c', type=parse_csv, help='root orders, one per ray (root)')
    p.add_argument('--bundles', nargs='*', default=[], help='line bundles to root (rootlb)')
    p.add_argument('--e', type=parse_csv, help='root orders, one per bundle (rootlb)')
    p.add_argument('--tau', type=parse_csv, help='1-based rays of the cone (substack)')
    p.add_argument('--cone', type=parse_csv, help='1-based rays of the maximal cone (blowup)')
    p.add_argument('--ray', type=parse_csv, help='new primitive ray (blowup)')
    p.add_argument('--m', type=int, default=2, help='Frobenius degree (frobenius)')
    p.add_argument('-o', '--output', help='write the new fan to this file')

    p = sub.add_parser('reproduce', help='reproduce a worked example')
    p.add_argument('--example', required=True, choices=sorted(EXAMPLES))
    return parser


def _check_construct_args(args):
    needed = {'root': ['c'], 'rootlb': ['bundles', 'e'], 'substack': ['tau'], 'blowup': ['cone', 'ray']}
    for name in needed.get(args.kind, []):
        if not getattr(args, name):
            raise ToricError(f"construct {args.kind} needs --{name}")


def run(args) -> Outcome:
    out = Outcome(args.command, None)
    if args.command not in ('validate', 'reproduce'):
        out.fan = load_fan(resolve_fan_path(args.fan))
    if args.command == 'construct':
        _check_construct_args(args)
    COMMANDS[args.command](args, out)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one subcommand and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=args.log_level,
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        out = run(args)
    except ToricError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception as e:
        logger.error(f"{args.command} failed: {e}")
        logger.exception("Full traceback:")
        return EXIT_DOMAIN

    if args.json:
        print(out.to_json())
    else:
        print('\n'.join(out.lines))
    return out.code

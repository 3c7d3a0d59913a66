"""Reproduce the worked examples: computed sets next to the expected ones"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional

import pandas as pd

from src.cohomology import ext, h_all, supp_complex
from src.constructions import root_stack_divisors
from src.errors import ToricError
from src.exceptional import ext_table, find_exceptional_ordering, fullness_rank_proxy, scan_subsets
from src.fans import (
    LineBundle,
    StackyFan,
    bundle,
    divisor,
    fan_from_rays,
    parse_bundle,
    product_of_lines,
    projective_plane,
    render,
    structure_sheaf,
    weighted_projective,
)
from src.frobenius import degree_window_check, sorted_bundles, stable_summands
from src.geometry import k_rank, nef_summands

logger = logging.getLogger(__name__)


@dataclass
class Check:
    """One computed quantity; expected None means informational only."""

    label: str
    computed: Any
    expected: Any = None

    @property
    def match(self) -> bool:
        return self.expected is None or self.computed == self.expected


@dataclass
class ExampleReport:
    example: str
    fan: Optional[StackyFan]
    checks: List[Check] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return all(c.match for c in self.checks)

    def add(self, label: str, computed: Any, expected: Any = None):
        self.checks.append(Check(label, computed, expected))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{'check': c.label, 'computed': _show(c.computed), 'expected': _show(c.expected), 'match': c.match}
             for c in self.checks]
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'example': self.example,
            'fan': self.fan.to_dict() if self.fan is not None else None,
            'checks': [{'check': c.label, 'computed': c.computed, 'expected': c.expected, 'match': c.match}
                       for c in self.checks],
            'match': self.match,
        }


def _show(value: Any) -> str:
    if value is None:
        return '-'
    if isinstance(value, list):
        return '{' + ', '.join(map(str, value)) + '}'
    return str(value)


def names(bundles: Iterable[LineBundle]) -> List[str]:
    """Rendered classes in canonical order."""
    return [render(L) for L in sorted_bundles(bundles)]


def _expected(fan: StackyFan, texts: Iterable[str]) -> List[str]:
    return names(parse_bundle(fan, t) for t in texts)


def _has_strong_ordering(fan: StackyFan, bundles: Iterable[LineBundle]) -> bool:
    return find_exceptional_ordering(ext_table(fan, sorted_bundles(bundles)), strong=True) is not None


def example_p2() -> ExampleReport:
    fan = projective_plane()
    report = ExampleReport('p2', fan)
    D = stable_summands(fan)
    report.add('stable summands', names(D), _expected(fan, ['O', 'O(-D1)', 'O(-2 D1)']))
    report.add('strong exceptional ordering', _has_strong_ordering(fan, D), True)
    report.add('k-rank', k_rank(fan).rank, 3)
    report.add('h^*(O(-3 D1))', list(h_all(fan, bundle(fan, [-3, 0, 0]))), [0, 0, 1])
    return report


def root_of_plane_expected(fan: StackyFan, c: int) -> List[str]:
    """O(i(D1 - D3) + j(D2 - D3) + k D3) for i, j in [0, c), k in {0, -1, -2}."""
    classes = [bundle(fan, [i, j, k - i - j])
               for i in range(c) for j in range(c) for k in (0, -1, -2)]
    return names(classes)


def example_root_p2(c: int = 2) -> ExampleReport:
    fan, _ = root_stack_divisors(projective_plane(), (c, c, c))
    report = ExampleReport(f'root-p2-c{c}', fan)
    D = stable_summands(fan)
    report.add('stable summands', names(D), root_of_plane_expected(fan, c))
    report.add('number of classes', len(D), 3 * c * c)
    return report


WPS_WEIGHTS = ((1, 1, 1), (1, 1, 2), (1, 2, 3))


def example_wps() -> ExampleReport:
    report = ExampleReport('wps', None)
    for weights in WPS_WEIGHTS:
        fan = weighted_projective(weights)
        D = stable_summands(fan)
        label = f'P{weights}'
        report.add(f'{label}: degree window violations', names(degree_window_check(fan)), [])
        report.add(f'{label}: strong exceptional ordering', _has_strong_ordering(fan, D), True)
        report.add(f'{label}: nef summands are all summands', nef_summands(fan) == D, True)
        if weights == (1, 1, 1):
            O1 = divisor(fan, 1)
            report.add(f'{label}: stable summands', names(D),
                       names([structure_sheaf(fan), -O1, -2 * O1]))
    return report


EXAMPLE2_SUMMANDS = ['O', 'O(-D3)', 'O(-2 D3)', 'O(D3 - D4)', 'O(-D4)', 'O(-D3 - D4)', 'O(-2 D3 - D4)']


def example2_fan() -> StackyFan:
    return fan_from_rays([(1, 0), (0, 1), (-2, 2), (0, -1)])


def example_hirzebruch_ex2() -> ExampleReport:
    fan = example2_fan()
    report = ExampleReport('hirzebruch-ex2', fan)
    D = stable_summands(fan)
    nef = nef_summands(fan)
    report.add('stable summands', names(D), _expected(fan, EXAMPLE2_SUMMANDS))
    report.add('nef summands', names(nef),
               _expected(fan, [t for t in EXAMPLE2_SUMMANDS if t != 'O(D3 - D4)']))
    report.add('strong exceptional ordering of nef summands', _has_strong_ordering(fan, nef), True)
    proxy = fullness_rank_proxy(fan, list(nef))
    report.add('k-rank', proxy.k_rank, 6)
    report.add('rank proxy passes (necessary only)', proxy.passes, True)
    return report


EXAMPLE3_SUMMANDS = [
    'O', 'O(-D3 - D4)', 'O(-2 D3 - D4)', 'O(D3 - D5)', 'O(-D5)',
    'O(-2 D3 - D4 - D5)', 'O(-D3 - D4 - D5)', 'O(-D4 - D5)', 'O(D3 - D4 - D5)',
]
EXAMPLE3_NOT_NEF = ['O(D3 - D5)', 'O(-D3 - D4)', 'O(D3 - D4 - D5)']
EXAMPLE3_OBSTRUCTED = ['O(-2 D3 - D4)', 'O(-2 D3 - D4 - D5)']
# Ext^* between not-nef and obstructed summands; each equals H^* of the
# pushed-forward bundle on the coarse surface (rays (1,0), (0,1), (-1,1), (-1,0), (0,-1))
EXAMPLE3_EXT = {
    ('O(D3 - D5)', 'O(-2 D3 - D4)'): (0, 1, 0),
    ('O(D3 - D5)', 'O(-2 D3 - D4 - D5)'): (0, 1, 0),
    ('O(-D3 - D4)', 'O(-2 D3 - D4)'): (0, 0, 0),
    ('O(-D3 - D4)', 'O(-2 D3 - D4 - D5)'): (0, 1, 0),
    ('O(D3 - D4 - D5)', 'O(-2 D3 - D4)'): (0, 1, 0),
    ('O(D3 - D4 - D5)', 'O(-2 D3 - D4 - D5)'): (0, 2, 0),
}
# a pair inside S with nonzero ext^1, so S is exceptional but not strong
EXAMPLE3_S_OBSTRUCTION = (('O(-D3 - D4)', 'O(-D5)'), (0, 1, 0))
# the exceptional 7-subsets drop O(-2 D3 - D4 - D5) and one of these
EXAMPLE3_SECOND_REMOVAL = ['O(D3 - D5)', 'O(-D5)', 'O(-D3 - D4)', 'O(-2 D3 - D4)']


def example3_fan() -> StackyFan:
    return fan_from_rays([(1, 0), (0, 1), (-2, 2), (-1, 0), (0, -1)])


def example3_exceptional_sevens(fan: StackyFan) -> List[List[str]]:
    """Expected exceptional 7-subsets of the stable summands, rendered."""
    D = {parse_bundle(fan, t) for t in EXAMPLE3_SUMMANDS}
    last = parse_bundle(fan, 'O(-2 D3 - D4 - D5)')
    return sorted(names(D - {last, parse_bundle(fan, t)}) for t in EXAMPLE3_SECOND_REMOVAL)


def example_example3() -> ExampleReport:
    fan = example3_fan()
    report = ExampleReport('example3', fan)
    D = stable_summands(fan)
    nef = nef_summands(fan)
    report.add('stable summands', names(D), _expected(fan, EXAMPLE3_SUMMANDS))
    report.add('excluded from nef summands', names(D - nef), _expected(fan, EXAMPLE3_NOT_NEF))

    rank, on_boundary = k_rank(fan)
    report.add('k-rank', rank, 7)
    report.add('ray images on hull boundary', on_boundary, True)

    obstructed = {parse_bundle(fan, t) for t in EXAMPLE3_OBSTRUCTED}
    S = D - obstructed
    S_table = ext_table(fan, sorted_bundles(S))
    report.add('exceptional ordering of S', find_exceptional_ordering(S_table) is not None, True)
    report.add('strong exceptional ordering of S', find_exceptional_ordering(S_table, strong=True) is not None, False)
    (first, second), triple = EXAMPLE3_S_OBSTRUCTION
    A, B = parse_bundle(fan, first), parse_bundle(fan, second)
    report.add(f'ext({render(A)}, {render(B)})', ext(fan, A, B), triple)
    report.add('rank proxy for S passes (necessary only)', fullness_rank_proxy(fan, list(S)).passes, True)
    report.add('rank proxy for nef summands passes', fullness_rank_proxy(fan, list(nef)).passes, False)

    nonvanishing = []
    for (first, second), triple in EXAMPLE3_EXT.items():
        L, bad = parse_bundle(fan, first), parse_bundle(fan, second)
        computed = ext(fan, L, bad)
        report.add(f'ext({render(L)}, {render(bad)})', computed, triple)
        nonvanishing.append(computed[1] != 0)
    report.add('ext^1 nonzero for every not-nef/obstructed pair', all(nonvanishing))

    report.add('components of Supp(-1, 0, -1, 0, 1)', supp_complex(fan, [-1, 0, -1, 0, 1]).components(), 2)

    report.add('strong size-7 subsets', len(scan_subsets(fan, D, 7, strong=True)), 0)
    report.add('strong size-6 subsets', len(scan_subsets(fan, D, 6, strong=True)), 2)
    sevens = sorted(names(s) for s in scan_subsets(fan, D, 7))
    report.add('exceptional size-7 subsets', sevens, example3_exceptional_sevens(fan))
    report.add('S among the exceptional size-7 subsets', names(S) in sevens, True)
    return report


def example_p1xp1_root(orders=(2, 3, 2, 3)) -> ExampleReport:
    fan, _ = root_stack_divisors(product_of_lines(), orders)
    report = ExampleReport('p1xp1-root', fan)
    D = stable_summands(fan)
    report.add('number of stable summands', len(D))
    report.add('nef summands are all summands', nef_summands(fan) == D, True)
    return report


EXAMPLES: Dict[str, Callable[[], ExampleReport]] = {
    'p2': example_p2,
    'root-p2-c2': lambda: example_root_p2(2),
    'root-p2-c3': lambda: example_root_p2(3),
    'wps': example_wps,
    'hirzebruch-ex2': example_hirzebruch_ex2,
    'example3': example_example3,
    'p1xp1-root': example_p1xp1_root,
}


def reproduce(name: str) -> ExampleReport:
    """Run one named example."""
    if name not in EXAMPLES:
        raise ToricError(f"unknown example '{name}', choose from {', '.join(EXAMPLES)}")
    logger.info(f"reproducing example {name}")
    report = EXAMPLES[name]()
    if report.match:
        logger.info(f"{name}: all {len(report.checks)} checks match")
    else:
        failed = [c.label for c in report.checks if not c.match]
        logger.warning(f"{name}: mismatched checks {failed}")
    return report

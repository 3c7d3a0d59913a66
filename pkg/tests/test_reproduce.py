import pytest

from src.errors import ToricError
from src.pipelines import EXAMPLES, reproduce
from src.pipelines.reproduce import Check, ExampleReport


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_example_matches(name):
    report = reproduce(name)
    failed = [(c.label, c.computed, c.expected) for c in report.checks if not c.match]
    assert failed == []
    assert report.match


def test_unknown_example():
    with pytest.raises(ToricError, match='unknown example'):
        reproduce('p3')


def test_informational_checks_always_match():
    assert Check('count', 17).match
    assert not Check('count', 17, 18).match


def test_report_frame_and_dict(p2):
    report = ExampleReport('demo', p2)
    report.add('k-rank', 3, 3)
    report.add('names', ['O', 'O(-D3)'])
    frame = report.to_frame()
    assert list(frame.columns) == ['check', 'computed', 'expected', 'match']
    assert frame.loc[1, 'computed'] == '{O, O(-D3)}'
    assert frame.loc[1, 'expected'] == '-'
    data = report.to_dict()
    assert data['match'] is True
    assert data['fan']['rank'] == 2

"""Reading and writing stacky fans as JSON fan files"""
import json
import logging
from pathlib import Path
from typing import Union

from src.config import Config
from src.errors import FanFileError, FanValidationError
from src.fans.stackyfan import StackyFan, make_fan

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ('rank', 'torsion', 'B', 'cones')


def _int_list(value, field: str, source: str):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise FanFileError(f"{source}: field '{field}' must be a list of integers")
    return value


def parse_fan(text: str, source: str = '<string>', check: bool = True) -> StackyFan:
    """
    Parse fan-file JSON into a validated StackyFan.

    Args:
        text: JSON object with rank, torsion, B (one list per row) and 1-based cones
        source: name used in error messages
        check: raise FanValidationError on invalid fans

    Returns:
        StackyFan
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FanFileError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise FanFileError(f"{source}: top level must be a JSON object")
    missing = [f for f in REQUIRED_FIELDS if f not in data]
    if missing:
        raise FanFileError(f"{source}: missing field(s) {', '.join(missing)}")
    unknown = sorted(set(data) - set(REQUIRED_FIELDS))
    if unknown:
        logger.warning(f"{source}: ignoring unknown field(s) {', '.join(unknown)}")

    rank = data['rank']
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
        raise FanFileError(f"{source}: field 'rank' must be a nonnegative integer")
    torsion = _int_list(data['torsion'], 'torsion', source)
    if not isinstance(data['B'], list):
        raise FanFileError(f"{source}: field 'B' must be a list of rows")
    B = [_int_list(row, f'B[{i}]', source) for i, row in enumerate(data['B'])]
    if len(B) != rank + len(torsion):
        raise FanFileError(f"{source}: field 'B' has {len(B)} rows, expected rank + len(torsion) = {rank + len(torsion)}")
    if len({len(row) for row in B}) > 1:
        raise FanFileError(f"{source}: rows of 'B' have different lengths")
    if not isinstance(data['cones'], list):
        raise FanFileError(f"{source}: field 'cones' must be a list of cones")
    cones = [_int_list(c, f'cones[{i}]', source) for i, c in enumerate(data['cones'])]

    try:
        return make_fan(rank, torsion, B, [[i - 1 for i in cone] for cone in cones], check=check)
    except FanValidationError as e:
        raise FanValidationError([f"{source}: {v}" for v in e.violations]) from e


def load_fan(path: Union[str, Path], check: bool = True) -> StackyFan:
    path = Path(path)
    if not path.exists():
        raise FanFileError(f"fan file {path} does not exist")
    logger.debug(f"loading fan from {path}")
    return parse_fan(path.read_text(), source=str(path), check=check)


def dump_fan(fan: StackyFan) -> str:
    """Fan-file JSON, one B row per line."""
    data = fan.to_dict()
    rows = ',\n    '.join(json.dumps(row) for row in data['B'])
    return (
        '{\n'
        f'  "rank": {data["rank"]},\n'
        f'  "torsion": {json.dumps(data["torsion"])},\n'
        f'  "B": [\n    {rows}\n  ],\n'
        f'  "cones": {json.dumps(data["cones"])}\n'
        '}\n'
    )


def save_fan(fan: StackyFan, path: Union[str, Path]):
    Path(path).write_text(dump_fan(fan))
    logger.info(f"wrote fan to {path}")


def example_fan_path(name: str) -> Path:
    """Bundled fan file for a named example."""
    return Config.EXAMPLES_DIR / f'{name}.json'

"""
Picard group of a toric DM stack

Pic = Z^{s+r} / <rows of (B|A)>: the first s coordinates are the toric
divisors D_i, the last r the twists g*_j. A line bundle O(kD)_l is stored by
its canonical coset representative, obtained by reducing k (+) l against the
Hermite normal form of the relation lattice.
"""
import functools
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from src.algebra import (
    FgAbGroup,
    GroupElement,
    cokernel,
    hermite_normal_form,
    reduce_by_hermite,
)
from src.errors import DimensionMismatchError, UnsupportedFanError
from src.fans.stackyfan import StackyFan

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PicardGroup:
    """DG(beta) together with the data to canonicalize representatives."""

    group: FgAbGroup
    relations: np.ndarray
    hermite: np.ndarray
    pivots: Tuple[int, ...]

    def describe(self) -> str:
        return self.group.describe()


@functools.lru_cache(maxsize=512)
def picard_group(fan: StackyFan) -> PicardGroup:
    """Pic of the stack, computed once per fan object."""
    relations = np.hstack([fan.B, fan.A]) if fan.r else fan.B.copy()
    relations = relations.reshape(fan.n + fan.r, fan.s + fan.r)
    group, _ = cokernel(relations.T)
    H, pivots = hermite_normal_form(relations)
    logger.debug(f"Pic = {group.describe()} from {relations.shape} relation matrix")
    return PicardGroup(group=group, relations=relations, hermite=H, pivots=tuple(pivots))


@dataclass(frozen=True, eq=False)
class LineBundle:
    """O(kD)_l with (k, l) the canonical representative of its class."""

    fan: StackyFan
    k: Tuple[int, ...]
    l: Tuple[int, ...]
    cls: GroupElement

    def __eq__(self, other) -> bool:
        if not isinstance(other, LineBundle):
            return NotImplemented
        return self.fan is other.fan and self.cls == other.cls

    def __hash__(self) -> int:
        return hash(self.cls)

    def __add__(self, other: 'LineBundle') -> 'LineBundle':
        return bundle(self.fan, np.add(self.k, other.k), np.add(self.l, other.l))

    def __neg__(self) -> 'LineBundle':
        return bundle(self.fan, [-x for x in self.k], [-x for x in self.l])

    def __sub__(self, other: 'LineBundle') -> 'LineBundle':
        return self + (-other)

    def __rmul__(self, c: int) -> 'LineBundle':
        return bundle(self.fan, [c * x for x in self.k], [c * x for x in self.l])

    @property
    def representative(self) -> Tuple[int, ...]:
        return self.k + self.l

    def sort_key(self) -> Tuple[int, ...]:
        return self.representative

    def __lt__(self, other: 'LineBundle') -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return render(self)


def canonical_representative(fan: StackyFan, k: Sequence[int], l: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    pic = picard_group(fan)
    v = reduce_by_hermite(list(k) + list(l), pic.hermite, pic.pivots)
    v = tuple(int(x) for x in v)
    return v[:fan.s], v[fan.s:]


def bundle(fan: StackyFan, k: Sequence[int], l: Optional[Sequence[int]] = None) -> LineBundle:
    """
    The line bundle O(kD)_l.

    Args:
        fan: the stacky fan
        k: divisor coefficients, length s
        l: twist coefficients, length r (defaults to zero)

    Returns:
        LineBundle carrying its class and canonical representative
    """
    k = [int(x) for x in k]
    l = [0] * fan.r if l is None else [int(x) for x in l]
    if len(k) != fan.s or len(l) != fan.r:
        raise DimensionMismatchError(
            f"bundle needs k of length {fan.s} and l of length {fan.r}, got {len(k)} and {len(l)}")
    pic = picard_group(fan)
    k_can, l_can = canonical_representative(fan, k, l)
    return LineBundle(fan=fan, k=k_can, l=l_can, cls=pic.group.project(k + l))


def bundle_from_class(fan: StackyFan, element: GroupElement) -> LineBundle:
    """Line bundle with the given class in normal coordinates."""
    v = picard_group(fan).group.lift(element)
    return bundle(fan, v[:fan.s], v[fan.s:])


def structure_sheaf(fan: StackyFan) -> LineBundle:
    return bundle(fan, [0] * fan.s)


def divisor(fan: StackyFan, i: int) -> LineBundle:
    """O(D_i), 1-based."""
    k = [0] * fan.s
    k[i - 1] = 1
    return bundle(fan, k)


def canonical_class(fan: StackyFan) -> LineBundle:
    """K = O(-D_1 - ... - D_s)."""
    return bundle(fan, [-1] * fan.s)


def generic_stabilizer_order(fan: StackyFan) -> int:
    order = 1
    for a in fan.torsion:
        order *= a
    return order


def _degree_sign(fan: StackyFan) -> int:
    group = picard_group(fan).group
    values = [group.project(list(np.eye(fan.s + fan.r, dtype=int)[i])).free_part[0] for i in range(fan.s)]
    if all(v > 0 for v in values):
        return 1
    if all(v < 0 for v in values):
        return -1
    raise UnsupportedFanError(f"toric divisors have degrees of mixed sign {values}; fan is not complete")


def degree(fan: StackyFan, L: LineBundle) -> int:
    """
    Degree on a stack with Pic of free rank one.

    The positive generator is the one on which every nonzero effective
    toric divisor has positive degree.
    """
    group = picard_group(fan).group
    if group.free_rank != 1:
        raise UnsupportedFanError(f"degree needs Picard free rank 1, got {group.free_rank}")
    return _degree_sign(fan) * L.cls.free_part[0]


def _format_terms(coeffs: Iterable[int], symbol: str) -> str:
    out = ''
    for i, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        magnitude = '' if abs(c) == 1 else f'{abs(c)} '
        if not out:
            out = ('-' if c < 0 else '') + f'{magnitude}{symbol}{i}'
        else:
            out += (' - ' if c < 0 else ' + ') + f'{magnitude}{symbol}{i}'
    return out


def render(L: LineBundle) -> str:
    """Canonical text form, e.g. O(-2 D3 - D4) or O(D1; g1)."""
    divisor_part = _format_terms(L.k, 'D')
    twist_part = _format_terms(L.l, 'g')
    if not divisor_part and not twist_part:
        return 'O'
    if twist_part:
        return f'O({divisor_part or "0"}; {twist_part})'
    return f'O({divisor_part})'


_TERM = re.compile(r'([+-]?)\s*(\d*)\s*([Dg])(\d+)')


def parse_bundle(fan: StackyFan, text: str) -> LineBundle:
    """Inverse of render; accepts 'O', 'O(D1 - 2 D3)', 'O(0; g1)'."""
    text = text.strip()
    if text == 'O':
        return structure_sheaf(fan)
    match = re.fullmatch(r'O\((.*)\)', text)
    if not match:
        raise DimensionMismatchError(f"cannot parse line bundle '{text}'")
    k, l = [0] * fan.s, [0] * fan.r
    parts = [part.strip() for part in match.group(1).split(';')]
    # a bare 0 stands for an empty divisor part, as in O(0; g1)
    body = ' '.join('' if part == '0' else part for part in parts)
    if len(parts) > 2 or _TERM.sub('', body).strip():
        raise DimensionMismatchError(f"cannot parse line bundle '{text}'")
    for sign, mag, symbol, idx in _TERM.findall(body):
        coeff = int(mag or 1) * (-1 if sign == '-' else 1)
        target = k if symbol == 'D' else l
        position = int(idx) - 1
        if not 0 <= position < len(target):
            raise DimensionMismatchError(f"{symbol}{idx} out of range in '{text}'")
        target[position] += coeff
    return bundle(fan, k, l)


def pic_description(fan: StackyFan) -> str:
    return picard_group(fan).describe()


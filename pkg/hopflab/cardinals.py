"""Cardinals in N + {w} and the height value INFINITY."""

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Union


@total_ordering
@dataclass(frozen=True)
class ExtCard:
    """ExtCard.
    A finite cardinal or w (countable infinity). value None means w.
    Compares and adds with plain ints.
    """
    value: Optional[int] = 0

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError(f'Negative cardinal {self.value}')

    @classmethod
    def of(cls, v: Union['ExtCard', int]) -> 'ExtCard':
        if isinstance(v, ExtCard):
            return v
        return cls(int(v))

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: Union['ExtCard', int]) -> 'ExtCard':
        other = ExtCard.of(other)
        if self.value is None or other.value is None:
            return OMEGA
        return ExtCard(self.value + other.value)

    __radd__ = __add__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        if isinstance(other, ExtCard):
            return self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other) -> bool:
        other = ExtCard.of(other)
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return 'w' if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f'ExtCard({self})'

    def dump(self) -> Union[int, str]:
        return 'w' if self.value is None else self.value


OMEGA = ExtCard(None)
ZERO = ExtCard(0)
ONE = ExtCard(1)


@total_ordering
class _Infinity:
    """Height of an element lying in every p^kG."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash('INFINITY')

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return other is not self

    def __repr__(self) -> str:
        return 'INFINITY'

    def __str__(self) -> str:
        return 'inf'


INFINITY = _Infinity()

Height = Union[int, _Infinity]

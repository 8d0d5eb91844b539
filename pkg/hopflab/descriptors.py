"""Symbolic descriptors of fully split abelian groups.

A descriptor denotes

    Z^f + Q^r + sum over p of ( sum_n Z(p^n)^(m_n) [+ tail] + Z(p^inf)^(d_p) )

with multiplicities in N + {w}. A tail is either the standard group
B(p^N) = Z(p^N) + Z(p^(N+1)) + ... or its w-fold power.
"""

import enum
import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple, Union

from hopflab.cardinals import OMEGA, ONE, ZERO, ExtCard
from hopflab.exceptions import DescriptorError, ParseError
from hopflab.group import FiniteAbelianGroup
from hopflab.structure import UlmInvariants
from hopflab.utils import is_prime

Card = Union[int, ExtCard]


class TailKind(enum.Enum):
    ALL_ONES = 'all_ones'
    ALL_OMEGA = 'all_omega'


@dataclass(frozen=True)
class Tail:
    """Tail.
    f_n(p-part) contributes `value` copies of Z(p^n) for every n >= start.
    """
    kind: TailKind
    start: int = 1

    def __post_init__(self):
        if self.start < 1:
            raise DescriptorError(
                f'Tail must start at n >= 1, got {self.start}')

    @property
    def value(self) -> ExtCard:
        return ONE if self.kind == TailKind.ALL_ONES else OMEGA

    def dump(self) -> dict:
        return {'kind': self.kind.value, 'from': self.start}


@dataclass(frozen=True)
class PrimaryPart:
    """PrimaryPart.
    The p-primary component. Build through PrimaryPart.build so that the
    stored form is canonical.
    """
    prime: int
    cyclic_mults: Tuple[Tuple[int, ExtCard], ...] = ()
    tail: Optional[Tail] = None
    divisible_rank: ExtCard = ZERO

    @classmethod
    def build(cls, prime: int,
              cyclic_mults: Optional[Dict[int, Card]] = None,
              tail: Optional[Tail] = None,
              divisible_rank: Card = 0) -> 'PrimaryPart':
        mults = {int(n): ExtCard.of(m)
                 for n, m in (cyclic_mults or {}).items()}
        if any(n < 1 for n in mults):
            raise DescriptorError(f'Cyclic exponents must be >= 1: {mults}')
        if tail is not None and tail.kind == TailKind.ALL_ONES:
            top = max((n for n, m in mults.items()
                       if n >= tail.start and not m.is_zero), default=None)
            if top is not None:
                for n in range(tail.start, top + 1):
                    mults[n] = mults.get(n, ZERO) + ONE
                tail = Tail(TailKind.ALL_ONES, top + 1)
        elif tail is not None:
            mults = {n: m for n, m in mults.items() if n < tail.start}
        if tail is not None:
            start = tail.start
            while start > 1 and mults.get(start - 1) == tail.value:
                del mults[start - 1]
                start -= 1
            tail = Tail(tail.kind, start)
        kept = tuple(sorted((n, m) for n, m in mults.items() if not m.is_zero))
        return cls(prime, kept, tail, ExtCard.of(divisible_rank))

    @property
    def mults(self) -> Dict[int, ExtCard]:
        return dict(self.cyclic_mults)

    def mult(self, n: int) -> ExtCard:
        """Multiplicity of Z(p^n), tail included."""
        if self.tail is not None and n >= self.tail.start:
            return self.tail.value
        return self.mults.get(n, ZERO)

    def is_zero(self) -> bool:
        return not self.cyclic_mults and self.tail is None and \
            self.divisible_rank.is_zero

    def is_reduced(self) -> bool:
        return self.divisible_rank.is_zero

    def is_finite(self) -> bool:
        return self.tail is None and self.divisible_rank.is_zero and \
            all(m.is_finite for _, m in self.cyclic_mults)

    def is_bounded(self) -> bool:
        return self.tail is None and self.divisible_rank.is_zero

    def semi_standard(self) -> bool:
        """Every f_k with k finite is finite."""
        return all(m.is_finite for _, m in self.cyclic_mults) and \
            (self.tail is None or self.tail.kind == TailKind.ALL_ONES)

    def reduced(self) -> 'PrimaryPart':
        return PrimaryPart(self.prime, self.cyclic_mults, self.tail, ZERO)

    def divisible(self) -> 'PrimaryPart':
        return PrimaryPart(self.prime, (), None, self.divisible_rank)

    def elementary_divisors(self) -> List[int]:
        if not self.is_finite():
            raise DescriptorError(f'p-part at {self.prime} is infinite')
        p = self.prime
        return [p ** n for n, m in self.cyclic_mults for _ in range(m.value)]


@dataclass(frozen=True)
class GroupDescriptor:
    """GroupDescriptor.
    Structural equality is isomorphism inside the descriptor universe.
    """
    free_rank: ExtCard = ZERO
    q_rank: ExtCard = ZERO
    primary: Tuple[PrimaryPart, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'free_rank', ExtCard.of(self.free_rank))
        object.__setattr__(self, 'q_rank', ExtCard.of(self.q_rank))
        parts = sorted((pp for pp in self.primary if not pp.is_zero()),
                       key=lambda pp: pp.prime)
        if len({pp.prime for pp in parts}) != len(parts):
            raise DescriptorError('Duplicate primary components')
        object.__setattr__(self, 'primary', tuple(parts))

    @classmethod
    def trivial(cls) -> 'GroupDescriptor':
        return cls()

    def part(self, p: int) -> PrimaryPart:
        for pp in self.primary:
            if pp.prime == p:
                return pp
        return PrimaryPart(p)

    def primes(self) -> Tuple[int, ...]:
        return tuple(pp.prime for pp in self.primary)

    def is_trivial(self) -> bool:
        return self.free_rank.is_zero and self.q_rank.is_zero and \
            not self.primary

    def is_finite(self) -> bool:
        return self.free_rank.is_zero and self.q_rank.is_zero and \
            all(pp.is_finite() for pp in self.primary)

    def is_torsion(self) -> bool:
        return self.free_rank.is_zero and self.q_rank.is_zero

    def is_torsion_free(self) -> bool:
        return not self.primary

    def is_reduced(self) -> bool:
        return self.q_rank.is_zero and \
            all(pp.is_reduced() for pp in self.primary)

    def is_divisible(self) -> bool:
        return self.free_rank.is_zero and \
            all(pp.reduced().is_zero() for pp in self.primary)

    def is_p_group(self, p: int) -> bool:
        return self.is_torsion() and self.primes() in ((), (p,))

    def torsion_part(self) -> 'GroupDescriptor':
        return GroupDescriptor(primary=self.primary)

    def torsion_free_part(self) -> 'GroupDescriptor':
        return GroupDescriptor(self.free_rank, self.q_rank)

    def reduced_part(self) -> 'GroupDescriptor':
        return GroupDescriptor(
            self.free_rank, ZERO, tuple(pp.reduced() for pp in self.primary))

    def divisible_part(self) -> 'GroupDescriptor':
        return GroupDescriptor(
            ZERO, self.q_rank, tuple(pp.divisible() for pp in self.primary))

    def primary_component(self, p: int) -> 'GroupDescriptor':
        return GroupDescriptor(primary=(self.part(p),))

    def __str__(self) -> str:
        return format_descriptor(self)

    def dump(self) -> dict:
        return {
            'free_rank': self.free_rank.dump(),
            'q_rank': self.q_rank.dump(),
            'primary': {
                str(pp.prime): {
                    'cyclic': {str(n): m.dump() for n, m in pp.cyclic_mults},
                    'tail': None if pp.tail is None else pp.tail.dump(),
                    'divisible_rank': pp.divisible_rank.dump(),
                } for pp in self.primary},
        }


def _sum_parts(p: int, parts: List[PrimaryPart]) -> PrimaryPart:
    mults: Dict[int, ExtCard] = {}
    div = ZERO
    tails = []
    for pp in parts:
        for n, m in pp.cyclic_mults:
            mults[n] = mults.get(n, ZERO) + m
        div = div + pp.divisible_rank
        if pp.tail is not None:
            tails.append(pp.tail)
    ones = [t for t in tails if t.kind == TailKind.ALL_ONES]
    omegas = [t for t in tails if t.kind == TailKind.ALL_OMEGA]
    if not omegas:
        if len(ones) > 1:
            raise DescriptorError(
                f'B(p) + B(p) at p={p} has multiplicity 2 on a tail and is '
                f'not representable')
        return PrimaryPart.build(p, mults, ones[0] if ones else None, div)
    start = min(t.start for t in omegas)
    for t in ones:
        for n in range(t.start, start):
            mults[n] = mults.get(n, ZERO) + ONE
    return PrimaryPart.build(p, mults, Tail(TailKind.ALL_OMEGA, start), div)


def direct_sum(*descriptors: GroupDescriptor) -> GroupDescriptor:
    """direct_sum.

    Raises:
        DescriptorError: if two all-ones tails meet at one prime
    """
    free = sum((d.free_rank for d in descriptors), ZERO)
    q = sum((d.q_rank for d in descriptors), ZERO)
    primes = sorted({p for d in descriptors for p in d.primes()})
    parts = tuple(_sum_parts(p, [d.part(p) for d in descriptors])
                  for p in primes)
    return GroupDescriptor(free, q, parts)


def cyclic(p: int, n: int, mult: Card = 1) -> GroupDescriptor:
    return GroupDescriptor(primary=(PrimaryPart.build(p, {n: mult}),))


def quasicyclic(p: int, mult: Card = 1) -> GroupDescriptor:
    return GroupDescriptor(
        primary=(PrimaryPart.build(p, divisible_rank=mult),))


def standard(p: int, start: int = 1, omega: bool = False) -> GroupDescriptor:
    kind = TailKind.ALL_OMEGA if omega else TailKind.ALL_ONES
    return GroupDescriptor(
        primary=(PrimaryPart.build(p, tail=Tail(kind, start)),))


def free(rank: Card) -> GroupDescriptor:
    return GroupDescriptor(free_rank=rank)


def rationals(rank: Card) -> GroupDescriptor:
    return GroupDescriptor(q_rank=rank)


class _Scanner:
    """Whitespace-insensitive scanner tracking positions in the source."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def at_end(self) -> bool:
        return self.peek() == ''

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.peek() or 'end of input'
            raise ParseError(f'Expected {token!r}, found {found!r}',
                             position=self.pos)

    def number(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError('Expected a number', position=start)
        return int(self.text[start:self.pos])

    def mult(self) -> ExtCard:
        if self.accept('w'):
            return OMEGA
        return ExtCard(self.number())

    def prime(self) -> int:
        self.skip()
        at = self.pos
        p = self.number()
        if not is_prime(p):
            raise ParseError(f'{p} is not a prime', position=at)
        return p


def _parse_term(sc: _Scanner) -> GroupDescriptor:
    at = sc.pos
    if sc.accept('0'):
        return GroupDescriptor.trivial()
    if sc.accept('Q'):
        return rationals(sc.mult() if sc.accept('^') else ONE)
    if sc.accept('B'):
        sc.expect('(')
        p = sc.prime()
        start = sc.number() if sc.accept('^') else 1
        if start < 1:
            raise ParseError('Tail exponent must be >= 1', position=at)
        sc.expect(')')
        mult = sc.mult() if sc.accept('^') else ONE
        if mult not in (ONE, OMEGA):
            raise ParseError(
                f'Tail multiplicity must be 1 or w, got {mult}', position=at)
        return standard(p, start, omega=mult.is_infinite)
    if sc.accept('Z'):
        if not sc.accept('('):
            return free(sc.mult() if sc.accept('^') else ONE)
        p = sc.prime()
        divisible = False
        n = 1
        if sc.accept('^'):
            if sc.accept('inf'):
                divisible = True
            else:
                n = sc.number()
                if n < 1:
                    raise ParseError('Exponent must be >= 1', position=at)
        sc.expect(')')
        mult = sc.mult() if sc.accept('^') else ONE
        return quasicyclic(p, mult) if divisible else cyclic(p, n, mult)
    found = sc.peek() or 'end of input'
    raise ParseError(f'Unexpected {found!r}', position=sc.pos)


def parse_descriptor(text: str) -> GroupDescriptor:
    """parse_descriptor.

    Args:
        text (str): e.g. "Z^2 + Z(2^3)^4 + Z(5^inf) + Q" or "B(2)"

    Raises:
        ParseError: on malformed input, with the offending position
    """
    sc = _Scanner(text)
    terms = []
    while True:
        at = sc.pos
        terms.append((at, _parse_term(sc)))
        if not sc.accept('+'):
            break
    if not sc.at_end():
        raise ParseError(f'Trailing input {sc.text[sc.pos:]!r}',
                         position=sc.pos)
    acc = GroupDescriptor.trivial()
    for at, term in terms:
        try:
            acc = direct_sum(acc, term)
        except DescriptorError as exc:
            raise ParseError(str(exc), position=at)
    return acc


def _power(base: str, mult: ExtCard) -> str:
    return base if mult == ONE else f'{base}^{mult}'


def format_descriptor(d: GroupDescriptor) -> str:
    """format_descriptor.
    Canonical text; parse_descriptor(format_descriptor(d)) == d.
    """
    terms = []
    if not d.free_rank.is_zero:
        terms.append(_power('Z', d.free_rank))
    for pp in d.primary:
        p = pp.prime
        for n, m in pp.cyclic_mults:
            terms.append(_power(f'Z({p})' if n == 1 else f'Z({p}^{n})', m))
        if pp.tail is not None:
            base = f'B({p})' if pp.tail.start == 1 else \
                f'B({p}^{pp.tail.start})'
            terms.append(_power(base, pp.tail.value))
        if not pp.divisible_rank.is_zero:
            terms.append(_power(f'Z({p}^inf)', pp.divisible_rank))
    if not d.q_rank.is_zero:
        terms.append(_power('Q', d.q_rank))
    return ' + '.join(terms) if terms else '0'


def ulm_of_descriptor(d: GroupDescriptor, p: int) -> UlmInvariants:
    """ulm_of_descriptor.
    f_k = multiplicity of Z(p^(k+1)), tail-aware; f_inf = rank of the
    divisible p-part.
    """
    pp = d.part(p)
    tail = pp.tail
    return UlmInvariants.build(
        p, {n - 1: m for n, m in pp.cyclic_mults},
        f_inf=pp.divisible_rank,
        tail_start=None if tail is None else tail.start - 1,
        tail_value=ZERO if tail is None else tail.value)


def _has_p_torsion(L: GroupDescriptor, p: int) -> bool:
    return not L.part(p).is_zero()


def hom_vanishes(K: GroupDescriptor, L: GroupDescriptor) -> bool:
    """hom_vanishes.
    Decide Hom(K, L) = 0 summand by summand: Z(p^n) maps nontrivially iff L
    has p-torsion, Z(p^inf) iff L has a Z(p^inf) summand, Z iff L != 0,
    Q iff L has a nonzero divisible part.
    """
    if not K.free_rank.is_zero and not L.is_trivial():
        return False
    if not K.q_rank.is_zero and not L.divisible_part().is_trivial():
        return False
    for pp in K.primary:
        if not pp.reduced().is_zero() and _has_p_torsion(L, pp.prime):
            return False
        if not pp.divisible_rank.is_zero and \
                not L.part(pp.prime).divisible_rank.is_zero:
            return False
    return True


# component keys: ('Z',), ('Q',), ('C', p, n), ('T', p), ('D', p)
_Components = Dict[tuple, Union[ExtCard, Tail]]


def _components(d: GroupDescriptor) -> _Components:
    out: _Components = {}
    if not d.free_rank.is_zero:
        out[('Z',)] = d.free_rank
    for pp in d.primary:
        for n, m in pp.cyclic_mults:
            out[('C', pp.prime, n)] = m
        if pp.tail is not None:
            out[('T', pp.prime)] = pp.tail
        if not pp.divisible_rank.is_zero:
            out[('D', pp.prime)] = pp.divisible_rank
    if not d.q_rank.is_zero:
        out[('Q',)] = d.q_rank
    return out


def _assemble(comps: _Components) -> GroupDescriptor:
    terms = [GroupDescriptor.trivial()]
    for key, val in comps.items():
        if isinstance(val, ExtCard) and val.is_zero:
            continue
        if key[0] == 'Z':
            terms.append(free(val))
        elif key[0] == 'Q':
            terms.append(rationals(val))
        elif key[0] == 'C':
            terms.append(cyclic(key[1], key[2], val))
        elif key[0] == 'D':
            terms.append(quasicyclic(key[1], val))
        else:
            terms.append(GroupDescriptor(
                primary=(PrimaryPart.build(key[1], tail=val),)))
    return direct_sum(*terms)


def _card_choices(m: ExtCard) -> List[ExtCard]:
    if m.is_infinite:
        return [ZERO, ONE, ExtCard(2), OMEGA]
    seen: List[ExtCard] = []
    for v in (0, 1, m.value - 1, m.value):
        c = ExtCard(v)
        if 0 <= v <= m.value and c not in seen:
            seen.append(c)
    return seen


def _tail_choices(p: int, tail: Tail) -> List[GroupDescriptor]:
    N = tail.start
    if tail.kind == TailKind.ALL_ONES:
        out = [cyclic(p, n) for n in (N, N + 1, N + 3)]
        out.append(standard(p, N + 1))
    else:
        out = [cyclic(p, N, OMEGA), cyclic(p, N + 2, 3), standard(p, N),
               standard(p, N + 1, omega=True)]
    return [GroupDescriptor.trivial()] + out


def summand_descriptors(d: GroupDescriptor) -> Iterator[GroupDescriptor]:
    """summand_descriptors.
    Direct summands of d: d itself, 0, each component alone, and d with one
    component decreased (infinite multiplicities and tails are sampled).
    Duplicates are yielded once.
    """
    comps = _components(d)
    seen = set()

    def fresh(candidate: GroupDescriptor) -> bool:
        if candidate in seen:
            return False
        seen.add(candidate)
        return True

    for cand in (d, GroupDescriptor.trivial()):
        if fresh(cand):
            yield cand
    for key, val in comps.items():
        alone = _assemble({key: val})
        if fresh(alone):
            yield alone
    for key, val in comps.items():
        rest = {k: v for k, v in comps.items() if k != key}
        if isinstance(val, Tail):
            options = [direct_sum(_assemble(rest), t)
                       for t in _tail_choices(key[1], val)]
        else:
            options = [_assemble({**rest, key: c}) for c in _card_choices(val)]
        for cand in options:
            if fresh(cand):
                yield cand


def descriptor_of_group(G: FiniteAbelianGroup) -> GroupDescriptor:
    parts = []
    for p, powers in G.primary_decomposition().items():
        mults: Dict[int, int] = {}
        for q in powers:
            n = 0
            while q > 1:
                q //= p
                n += 1
            mults[n] = mults.get(n, 0) + 1
        parts.append(PrimaryPart.build(p, mults))
    return GroupDescriptor(primary=tuple(parts))


def group_of_descriptor(d: GroupDescriptor) -> FiniteAbelianGroup:
    """group_of_descriptor.

    Raises:
        DescriptorError: if d does not denote a finite group
    """
    if not d.is_finite():
        raise DescriptorError(f'{format_descriptor(d)} is not finite')
    return FiniteAbelianGroup.canonical(itertools.chain.from_iterable(
        pp.elementary_divisors() for pp in d.primary))

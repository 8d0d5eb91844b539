"""Finite abelian groups given by a cyclic decomposition.

A group is presented as Z(m_1) + ... + Z(m_k) with every m_i >= 2; elements
are coordinate tuples relative to that presentation. The canonical
invariant factors d_1 | d_2 | ... | d_r are derived from it, and two groups
are isomorphic iff their invariant factors agree.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import (Dict, Iterable, Iterator, List, Optional, Sequence,
                    Tuple)

from hopflab.exceptions import InfiniteQuotient, InvalidElement, InvalidGroup
from hopflab.matrix import IntMatrix, smith_normal_form
from hopflab.utils import factorize, partitions, prime_power, valuation

GroupElement = Tuple[int, ...]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """FiniteAbelianGroup.

    Args:
        moduli (Tuple[int, ...]): cyclic orders of the presentation; the
            empty tuple is the trivial group.
    """
    moduli: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'moduli', tuple(int(m) for m in self.moduli))
        bad = [m for m in self.moduli if m < 2]
        if bad:
            raise InvalidGroup(
                f'Cyclic orders must be >= 2, got {list(self.moduli)}',
                errors=bad)

    @classmethod
    def canonical(cls, factors: Iterable[int]) -> 'FiniteAbelianGroup':
        """canonical.
        Group presented by its own invariant factors.

        Args:
            factors (Iterable[int]): any cyclic orders; 1s are dropped
        """
        return cls(invariant_factors_of([f for f in factors if f != 1]))

    @property
    def rank(self) -> int:
        """Number of cyclic factors in the presentation."""
        return len(self.moduli)

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return _invariant_factors(self.moduli)

    @property
    def is_canonical(self) -> bool:
        return self.moduli == self.invariant_factors

    def order(self) -> int:
        return prod(self.moduli)

    def exponent(self) -> int:
        e = 1
        for m in self.moduli:
            e = _lcm(e, m)
        return e

    def is_trivial(self) -> bool:
        return not self.moduli

    def primes(self) -> Tuple[int, ...]:
        return tuple(factorize(self.order()).keys())

    def zero(self) -> GroupElement:
        return (0,) * len(self.moduli)

    def generators(self) -> List[GroupElement]:
        n = len(self.moduli)
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]

    def validate(self, x: Sequence[int]) -> GroupElement:
        x = tuple(x)
        if len(x) != len(self.moduli) or \
                any(not 0 <= c < m for c, m in zip(x, self.moduli)):
            raise InvalidElement(
                f'{x} is not an element of {self}', errors=x)
        return x

    def reduce(self, x: Sequence[int]) -> GroupElement:
        """Reduce an integer vector into the coordinate box."""
        if len(x) != len(self.moduli):
            raise InvalidElement(f'{tuple(x)} has wrong length for {self}')
        return tuple(c % m for c, m in zip(x, self.moduli))

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x: GroupElement) -> GroupElement:
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    def scale(self, n: int, x: GroupElement) -> GroupElement:
        return tuple((n * a) % m for a, m in zip(x, self.moduli))

    def combine(self, coeffs: Sequence[int],
                elems: Sequence[GroupElement]) -> GroupElement:
        """Linear combination sum(c_i * e_i)."""
        acc = [0] * len(self.moduli)
        for c, e in zip(coeffs, elems):
            if c:
                for i, v in enumerate(e):
                    acc[i] += c * v
        return self.reduce(acc)

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic coordinate order."""
        return itertools.product(*(range(m) for m in self.moduli))

    def torsion_elements(self, d: int) -> Tuple[GroupElement, ...]:
        """Elements y with d*y = 0, lexicographic; cached per (group, d)."""
        return _torsion_elements(self.moduli, d)

    def primary_decomposition(self) -> Dict[int, List[int]]:
        """primary_decomposition.
        Elementary divisors grouped by prime.

        Returns:
            Dict[int, List[int]]: p -> prime powers, descending.
        """
        out: Dict[int, List[int]] = {}
        for m in self.moduli:
            for p, e in factorize(m).items():
                out.setdefault(p, []).append(p ** e)
        return {p: sorted(v, reverse=True) for p, v in sorted(out.items())}

    def p_exponents(self, p: int) -> List[int]:
        """Exponents a_i of the p-power elementary divisors, descending."""
        return sorted((valuation(m, p) for m in self.moduli if m % p == 0),
                      reverse=True)

    def p_rank(self, p: int) -> int:
        """Dimension of the socle G[p] over Z/p."""
        return sum(1 for m in self.moduli if m % p == 0)

    def is_p_group(self, p: Optional[int] = None) -> bool:
        if self.is_trivial():
            return True
        ps = self.primes()
        return len(ps) == 1 and (p is None or ps[0] == p)

    def __str__(self) -> str:
        if not self.moduli:
            return '0'
        return ' + '.join(f'Z({m})' for m in self.moduli)

    def literal(self) -> str:
        """Comma separated cyclic orders, as accepted by the CLI."""
        return ','.join(str(m) for m in self.moduli)


@lru_cache(maxsize=4096)
def _torsion_elements(moduli: Tuple[int, ...],
                      d: int) -> Tuple[GroupElement, ...]:
    # y_i must be a multiple of m_i / gcd(d, m_i)
    steps = [m // gcd(d, m) for m in moduli]
    return tuple(itertools.product(
        *(range(0, m, s) for m, s in zip(moduli, steps))))


def invariant_factors_of(orders: Sequence[int]) -> Tuple[int, ...]:
    """invariant_factors_of.
    Invariant factors of Z(o_1) + ... + Z(o_k).

    Args:
        orders (Sequence[int]): positive cyclic orders
    """
    return _invariant_factors(tuple(orders))


@lru_cache(maxsize=8192)
def _invariant_factors(orders: Tuple[int, ...]) -> Tuple[int, ...]:
    by_prime: Dict[int, List[int]] = {}
    for o in orders:
        if o < 1:
            raise InvalidGroup(f'Cyclic order must be positive, got {o}')
        for p, e in factorize(o).items():
            by_prime.setdefault(p, []).append(p ** e)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for p, powers in by_prime.items():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            factors[length - 1 - i] *= q
    return tuple(factors)


@dataclass(frozen=True)
class RelationQuotient:
    """RelationQuotient.
    Result of Z^n / <relations>: the canonical group and the change of basis
    sending an integer vector to its class.

    Attributes:
        group: canonical quotient group
        basis: n x k integer matrix; x maps to (x * basis) reduced mod the
            invariant factors
    """
    group: FiniteAbelianGroup
    basis: Tuple[Tuple[int, ...], ...]

    def project(self, x: Sequence[int]) -> GroupElement:
        k = len(self.group.moduli)
        acc = [0] * k
        for xi, row in zip(x, self.basis):
            if xi:
                for j in range(k):
                    acc[j] += xi * row[j]
        return self.group.reduce(acc)


def group_from_relations(n_generators: int,
                         relations: IntMatrix) -> RelationQuotient:
    """group_from_relations.
    Quotient of Z^n by the row lattice of the relation matrix.

    Args:
        n_generators (int): n
        relations (IntMatrix): r x n relation rows

    Raises:
        InfiniteQuotient: if the relation lattice has infinite index
    """
    if relations.cols != n_generators:
        raise ValueError(
            f'Relations have {relations.cols} columns, '
            f'expected {n_generators}')
    snf = smith_normal_form(relations)
    diag = list(snf.diagonal) + [0] * max(0, n_generators - relations.rows)
    if any(d == 0 for d in diag[:n_generators]):
        raise InfiniteQuotient(
            f'Relation lattice has infinite index in Z^{n_generators}',
            errors=diag)
    keep = [j for j in range(n_generators) if diag[j] != 1]
    group = FiniteAbelianGroup(tuple(diag[j] for j in keep))
    basis = tuple(tuple(snf.V[i, j] for j in keep)
                  for i in range(n_generators))
    return RelationQuotient(group=group, basis=basis)


def element_order(G: FiniteAbelianGroup, x: Sequence[int]) -> int:
    """element_order.
    Least n >= 1 with n*x = 0; the identity has order 1.
    """
    x = G.validate(x)
    o = 1
    for c, m in zip(x, G.moduli):
        o = _lcm(o, m // gcd(c, m))
    return o


def is_isomorphic(G: FiniteAbelianGroup, K: FiniteAbelianGroup) -> bool:
    return G.invariant_factors == K.invariant_factors


def direct_sum(*groups: FiniteAbelianGroup) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(
        itertools.chain.from_iterable(g.moduli for g in groups)))


def parse_group(text: str) -> FiniteAbelianGroup:
    """parse_group.
    Finite group literal: comma separated cyclic orders, "" or "0" for the
    trivial group.
    """
    text = text.strip()
    if text in ('', '0', 'trivial'):
        return FiniteAbelianGroup(())
    try:
        orders = tuple(int(t) for t in text.split(','))
    except ValueError:
        raise InvalidGroup(f'Bad group literal {text!r}')
    return FiniteAbelianGroup(orders)


def parse_elements(text: str) -> List[Tuple[int, ...]]:
    """Semicolon separated coordinate tuples, e.g. "2,1;0,1"."""
    out = []
    for chunk in text.split(';'):
        chunk = chunk.strip().strip('()')
        if not chunk:
            out.append(())
            continue
        try:
            out.append(tuple(int(t) for t in chunk.split(',')))
        except ValueError:
            raise InvalidElement(f'Bad element literal {chunk!r}')
    return out


def p_groups_of_order(p: int, e: int) -> Iterator[FiniteAbelianGroup]:
    """All groups of order p^e, canonical presentations."""
    for part in partitions(e):
        yield FiniteAbelianGroup.canonical(p ** a for a in part)


def enumerate_groups(max_order: int,
                     primes: Optional[Sequence[int]] = None,
                     max_generators: Optional[int] = None,
                     include_trivial: bool = False
                     ) -> List[FiniteAbelianGroup]:
    """enumerate_groups.
    Every finite abelian group up to isomorphism of order <= max_order,
    sorted by order and then invariant factors.

    Args:
        max_order (int): order bound
        primes (Optional[Sequence[int]]): restrict to p-groups for these p
        max_generators (Optional[int]): bound on the number of invariant
            factors
        include_trivial (bool): include the trivial group
    """
    out: List[FiniteAbelianGroup] = []
    if include_trivial:
        out.append(FiniteAbelianGroup(()))
    for n in range(2, max_order + 1):
        if primes is not None:
            pp = prime_power(n)
            if pp is None or pp[0] not in primes:
                continue
        choices = [list(p_groups_of_order(p, e))
                   for p, e in factorize(n).items()]
        for combo in itertools.product(*choices):
            g = FiniteAbelianGroup.canonical(
                itertools.chain.from_iterable(c.moduli for c in combo))
            if max_generators is None or g.rank <= max_generators:
                out.append(g)
    out.sort(key=lambda g: (g.order(), g.moduli))
    return out

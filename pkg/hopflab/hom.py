"""Homomorphisms and subgroups of finite abelian groups.

A Subgroup of G = Z(m_1) + ... + Z(m_n) corresponds to the lattice L with
diag(m) Z^n <= L <= Z^n spanned by its generators and the relations of G.
The row Hermite form of L is its canonical matrix: subgroups are equal iff
their canonical matrices are, and |H| = prod(m_i) / prod(h_ii).
"""

import itertools
import logging
import random
from dataclasses import InitVar, dataclass, field
from math import gcd, prod
from typing import (Dict, Iterable, Iterator, List, NamedTuple, Optional,
                    Sequence, Tuple)

from hopflab.exceptions import BoundExceeded, InvalidElement, InvalidGroup
from hopflab.group import (FiniteAbelianGroup, GroupElement, direct_sum,
                           group_from_relations)
from hopflab.matrix import IntMatrix, hermite_normal_form, smith_normal_form
from hopflab.utils import valuation

DEFAULT_SUBGROUP_BOUND = 2 ** 12

h_logger = None


def logger() -> logging.Logger:
    global h_logger
    if h_logger is None:
        h_logger = logging.getLogger(__name__)
    return h_logger


@dataclass(frozen=True)
class Subgroup:
    """Subgroup.
    Build with Subgroup.generated(); the canonical matrix decides equality.
    """
    ambient: FiniteAbelianGroup
    canonical_matrix: Tuple[Tuple[int, ...], ...]
    generators: Tuple[GroupElement, ...] = field(default=(), compare=False)

    @classmethod
    def generated(cls, G: FiniteAbelianGroup,
                  gens: Iterable[Sequence[int]]) -> 'Subgroup':
        gens = tuple(G.validate(g) for g in gens)
        n = G.rank
        relations = [tuple(m if i == j else 0 for j in range(n))
                     for i, m in enumerate(G.moduli)]
        hnf = hermite_normal_form(list(gens) + relations, n) if n else ()
        return cls(ambient=G, canonical_matrix=hnf, generators=gens)

    @classmethod
    def trivial(cls, G: FiniteAbelianGroup) -> 'Subgroup':
        return cls.generated(G, [])

    @classmethod
    def whole(cls, G: FiniteAbelianGroup) -> 'Subgroup':
        return cls.generated(G, G.generators())

    @classmethod
    def from_elements(cls, G: FiniteAbelianGroup,
                      elems: Iterable[GroupElement]) -> 'Subgroup':
        """Subgroup generated by elems, keeping a short generating set."""
        current = cls.trivial(G)
        for x in elems:
            if not current.contains(x):
                current = cls.generated(G, current.basis() + (x,))
        return current

    def basis(self) -> Tuple[GroupElement, ...]:
        """Nonzero canonical rows, as elements of the ambient group."""
        G = self.ambient
        rows = (G.reduce(row) for row in self.canonical_matrix)
        return tuple(r for r in rows if any(r))

    def order(self) -> int:
        G = self.ambient
        return prod(G.moduli) // prod(
            self.canonical_matrix[i][i] for i in range(G.rank))

    def index(self) -> int:
        return self.ambient.order() // self.order()

    def is_trivial(self) -> bool:
        return self.order() == 1

    def _solve(self, x: Sequence[int]) -> Optional[List[int]]:
        """Coefficients of x in the canonical rows, None if x is outside."""
        r = list(x)
        coeffs = []
        for j, row in enumerate(self.canonical_matrix):
            c, rem = divmod(r[j], row[j])
            if rem:
                return None
            coeffs.append(c)
            if c:
                for k in range(j, len(r)):
                    r[k] -= c * row[k]
        return coeffs

    def contains(self, x: Sequence[int]) -> bool:
        return self._solve(self.ambient.validate(x)) is not None

    __contains__ = contains

    def elements(self) -> Iterator[GroupElement]:
        G = self.ambient
        rows = self.canonical_matrix
        ranges = [range(m // rows[j][j]) for j, m in enumerate(G.moduli)]
        for coeffs in itertools.product(*ranges):
            yield G.combine(coeffs, rows)

    def join(self, other: 'Subgroup') -> 'Subgroup':
        return Subgroup.generated(self.ambient, self.basis() + other.basis())

    def intersection(self, other: 'Subgroup') -> 'Subgroup':
        small, big = (self, other) if self.order() <= other.order() \
            else (other, self)
        return Subgroup.from_elements(
            self.ambient, (x for x in small.elements() if big.contains(x)))

    def multiple(self, n: int) -> 'Subgroup':
        """The subgroup nH."""
        G = self.ambient
        return Subgroup.generated(G, [G.scale(n, b) for b in self.basis()])

    def is_subgroup_of(self, other: 'Subgroup') -> bool:
        return all(other.contains(b) for b in self.basis())

    def to_group(self) -> FiniteAbelianGroup:
        """Isomorphism type of H, canonical presentation."""
        G = self.ambient
        n = G.rank
        if n == 0:
            return FiniteAbelianGroup(())
        # relations of G written in the canonical basis of H
        rel_rows = []
        for i, m in enumerate(G.moduli):
            coeffs = self._solve(tuple(m if i == j else 0 for j in range(n)))
            rel_rows.append(coeffs)
        return group_from_relations(
            n, IntMatrix.from_rows(rel_rows, n)).group

    def literal(self) -> str:
        return ';'.join(','.join(str(c) for c in b) for b in self.basis())

    def __str__(self) -> str:
        gens = ', '.join(str(b) for b in self.basis())
        return f'<{gens}> <= {self.ambient}'


@dataclass(frozen=True)
class Homomorphism:
    """Homomorphism.
    images[i] is the image of the i-th generator of the domain.
    """
    domain: FiniteAbelianGroup
    codomain: FiniteAbelianGroup
    images: Tuple[GroupElement, ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        images = tuple(tuple(y) for y in self.images)
        object.__setattr__(self, 'images', images)
        if not check:
            return
        if len(self.images) != self.domain.rank:
            raise InvalidElement(
                f'Expected {self.domain.rank} generator images, '
                f'got {len(self.images)}')
        for m, y in zip(self.domain.moduli, self.images):
            self.codomain.validate(y)
            if any(self.codomain.scale(m, y)):
                raise InvalidElement(
                    f'Image {y} is not killed by {m}; map is not well defined',
                    errors=y)

    @classmethod
    def identity(cls, G: FiniteAbelianGroup) -> 'Homomorphism':
        return cls(G, G, tuple(G.generators()))

    @classmethod
    def zero(cls, G: FiniteAbelianGroup,
             K: FiniteAbelianGroup) -> 'Homomorphism':
        return cls(G, K, tuple(K.zero() for _ in G.moduli))

    @classmethod
    def multiplication(cls, G: FiniteAbelianGroup, n: int) -> 'Homomorphism':
        return cls(G, G, tuple(G.scale(n, e) for e in G.generators()))

    def __call__(self, x: Sequence[int]) -> GroupElement:
        return apply(self, x)

    def compose(self, inner: 'Homomorphism') -> 'Homomorphism':
        """self after inner."""
        return Homomorphism(inner.domain, self.codomain,
                            tuple(self(y) for y in inner.images))

    def image(self) -> Subgroup:
        return image(self)

    def kernel(self) -> Subgroup:
        return kernel(self)

    def is_surjective(self) -> bool:
        return is_surjective(self)

    def __str__(self) -> str:
        maps = ', '.join(f'e{i}->{y}' for i, y in enumerate(self.images))
        return f'[{maps}] : {self.domain} -> {self.codomain}'


class Quotient(NamedTuple):
    group: FiniteAbelianGroup
    projection: Homomorphism


def apply(h: Homomorphism, x: Sequence[int]) -> GroupElement:
    x = h.domain.validate(x)
    return h.codomain.combine(x, h.images)


def candidate_images(G: FiniteAbelianGroup,
                     K: FiniteAbelianGroup) -> List[Tuple[GroupElement, ...]]:
    """Possible images of each generator of G: the d-torsion of K."""
    return [K.torsion_elements(m) for m in G.moduli]


def enumerate_homs(G: FiniteAbelianGroup,
                   K: FiniteAbelianGroup) -> Iterator[Homomorphism]:
    """enumerate_homs.
    Every homomorphism G -> K exactly once, lexicographic on image
    coordinates.
    """
    for imgs in itertools.product(*candidate_images(G, K)):
        yield Homomorphism(G, K, imgs, check=False)


def count_homs(G: FiniteAbelianGroup, K: FiniteAbelianGroup) -> int:
    """Size of the candidate space, equal to |Hom(G, K)|."""
    return prod(len(c) for c in candidate_images(G, K))


def sample_homs(G: FiniteAbelianGroup, K: FiniteAbelianGroup,
                count: int, seed: int = 0) -> Iterator[Homomorphism]:
    """sample_homs.
    count uniformly drawn homomorphisms, reproducible for a given seed.
    """
    rng = random.Random(seed)
    cands = candidate_images(G, K)
    for _ in range(count):
        yield Homomorphism(G, K, tuple(rng.choice(c) for c in cands),
                           check=False)


def homs_within(G: FiniteAbelianGroup, K: FiniteAbelianGroup,
                max_homs: int, seed: int = 0
                ) -> Tuple[Iterator[Homomorphism], bool]:
    """homs_within.
    Exhaustive stream when |Hom(G, K)| <= max_homs, otherwise a seeded
    sample of max_homs maps.

    Returns:
        Tuple[Iterator[Homomorphism], bool]: stream and whether it is
            exhaustive
    """
    if count_homs(G, K) <= max_homs:
        return enumerate_homs(G, K), True
    logger().debug(f'Hom({G}, {K}) exceeds {max_homs}; sampling')
    return sample_homs(G, K, max_homs, seed), False


EchelonRows = Tuple[Tuple[int, Tuple[int, ...]], ...]


def _echelon_insert(rows: EchelonRows, v: Sequence[int],
                    p: int) -> Optional[EchelonRows]:
    """Add v to a mod p echelon basis; None if v is already in its span.

    Each stored row is monic at its pivot and zero at the pivots of the
    rows before it.
    """
    v = [x % p for x in v]
    for piv, r in rows:
        c = v[piv]
        if c:
            v = [(a - c * b) % p for a, b in zip(v, r)]
    piv = next((i for i, x in enumerate(v) if x), None)
    if piv is None:
        return None
    inv = pow(v[piv], -1, p)
    return rows + ((piv, tuple(x * inv % p for x in v)),)


def surjective_endomorphisms(P: FiniteAbelianGroup, p: int
                             ) -> Iterator[Tuple[Homomorphism, bool]]:
    """surjective_endomorphisms.
    Every surjective endomorphism of the p-group P exactly once, paired with
    whether it is injective on the socle P[p].

    A map is onto iff its generator images span P/pP, so branches whose
    images are dependent mod p are cut. A nonzero kernel always meets
    P[p], so the flag is False exactly when the kernel is nonzero.

    Raises:
        InvalidGroup: unless every cyclic order of P is a power of p
    """
    if any(m != p ** valuation(m, p) for m in P.moduli):
        raise InvalidGroup(f'{P} is not presented by powers of {p}',
                           errors=P.moduli)
    cands = candidate_images(P, P)
    images: List[GroupElement] = []

    def extend(top: EchelonRows, socle: EchelonRows,
               injective: bool) -> Iterator[Tuple[Homomorphism, bool]]:
        i = len(images)
        if i == P.rank:
            yield Homomorphism(P, P, tuple(images), check=False), injective
            return
        scale = P.moduli[i] // p
        for y in cands[i]:
            top_y = _echelon_insert(top, y, p)
            if top_y is None:
                continue
            s = [c // (m // p) for c, m in zip(P.scale(scale, y), P.moduli)]
            socle_y = _echelon_insert(socle, s, p)
            images.append(y)
            yield from extend(top_y, socle if socle_y is None else socle_y,
                              injective and socle_y is not None)
            images.pop()

    return extend((), (), True)


def image(h: Homomorphism) -> Subgroup:
    return Subgroup.generated(h.codomain, h.images)


def is_surjective(h: Homomorphism) -> bool:
    return subgroup_order(image(h)) == h.codomain.order()


def kernel(h: Homomorphism) -> Subgroup:
    """kernel.
    Left null space of the block matrix [images; relations of codomain],
    read off the Smith transform U and projected onto the domain part.
    """
    G, K = h.domain, h.codomain
    n, k = G.rank, K.rank
    if k == 0:
        return Subgroup.whole(G)
    if n == 0:
        return Subgroup.trivial(G)
    rows = [list(y) for y in h.images]
    rows += [[m if i == j else 0 for j in range(k)]
             for i, m in enumerate(K.moduli)]
    snf = smith_normal_form(IntMatrix.from_rows(rows, k))
    rank = sum(1 for d in snf.diagonal if d)
    gens = [G.reduce(snf.U.entries[r][:n]) for r in range(rank, n + k)]
    return Subgroup.generated(G, gens)


def quotient(G: FiniteAbelianGroup, H: Subgroup) -> Quotient:
    """quotient.
    G/H with its canonical projection.
    """
    n = G.rank
    if n == 0:
        Q = FiniteAbelianGroup(())
        return Quotient(Q, Homomorphism(G, Q, ()))
    rows = list(H.canonical_matrix)
    rows += [tuple(m if i == j else 0 for j in range(n))
             for i, m in enumerate(G.moduli)]
    rq = group_from_relations(n, IntMatrix.from_rows(rows, n))
    proj = Homomorphism(G, rq.group,
                        tuple(rq.project(e) for e in G.generators()))
    return Quotient(rq.group, proj)


def subgroup_order(H: Subgroup) -> int:
    return H.order()


def membership(H: Subgroup, x: Sequence[int]) -> bool:
    return H.contains(x)


def cyclic_subgroups(G: FiniteAbelianGroup) -> Dict[Subgroup, GroupElement]:
    """Distinct cyclic subgroups with their first generator found."""
    out: Dict[Subgroup, GroupElement] = {}
    for x in G.elements():
        c = Subgroup.generated(G, [x])
        if c not in out:
            out[c] = x
    return out


def enumerate_subgroups(G: FiniteAbelianGroup,
                        max_order: int = DEFAULT_SUBGROUP_BOUND
                        ) -> Iterator[Subgroup]:
    """enumerate_subgroups.
    Every subgroup exactly once, ordered by (order, canonical matrix).
    Cyclic subgroups are closed under join; each (subgroup, cyclic) join
    is computed at most once.

    Raises:
        BoundExceeded: if |G| > max_order
    """
    if G.order() > max_order:
        raise BoundExceeded(
            f'|G| = {G.order()} exceeds the subgroup enumeration bound '
            f'{max_order}', bound=max_order)
    cyclic = cyclic_subgroups(G)
    seen: Dict[Subgroup, None] = dict.fromkeys(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for A in frontier:
            for C, x in cyclic.items():
                if A.contains(x):
                    continue
                J = A.join(C)
                if J not in seen:
                    seen[J] = None
                    nxt.append(J)
        frontier = nxt
    yield from sorted(seen, key=lambda s: (s.order(), s.canonical_matrix))


def power_subgroup(T: FiniteAbelianGroup, p: int,
                   k: int) -> Tuple[FiniteAbelianGroup, Homomorphism]:
    """power_subgroup.
    The group p^kT with its embedding into T.

    Z(m) has p^k Z(m) ~ Z(m / gcd(p^k, m)), generated by gcd(p^k, m).
    """
    pk = p ** k
    moduli, images = [], []
    n = T.rank
    for i, m in enumerate(T.moduli):
        g = gcd(pk, m)
        if m // g > 1:
            moduli.append(m // g)
            images.append(tuple(g if i == j else 0 for j in range(n)))
    P = FiniteAbelianGroup(tuple(moduli))
    return P, Homomorphism(P, T, tuple(images))


def find_split_surjection(G: FiniteAbelianGroup, A: FiniteAbelianGroup,
                          max_homs: int) -> Optional[Homomorphism]:
    """find_split_surjection.
    Exhaustive search for a surjection G -> G + A.

    Raises:
        BoundExceeded: if |Hom(G, G + A)| > max_homs
    """
    target = direct_sum(G, A)
    if count_homs(G, target) > max_homs:
        raise BoundExceeded(
            f'|Hom({G}, {target})| exceeds {max_homs}', bound=max_homs)
    for h in enumerate_homs(G, target):
        if is_surjective(h):
            return h
    return None

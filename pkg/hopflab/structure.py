"""Heights, purity and Ulm invariants of finite abelian groups, plus the
constructive steps behind the height-zero splitting and the extension of
epimorphisms from p^kT to T.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from hopflab.cardinals import INFINITY, ZERO, ExtCard, Height
from hopflab.exceptions import (BoundExceeded, ConstructionError,
                                PreconditionViolated)
from hopflab.group import (FiniteAbelianGroup, GroupElement, direct_sum,
                           is_isomorphic)
from hopflab.hom import (DEFAULT_SUBGROUP_BOUND, Homomorphism, Subgroup,
                         is_surjective, power_subgroup, quotient)
from hopflab.utils import valuation

s_logger = None


def logger() -> logging.Logger:
    global s_logger
    if s_logger is None:
        s_logger = logging.getLogger(__name__)
    return s_logger


@dataclass(frozen=True)
class UlmInvariants:
    """UlmInvariants.
    f_k for finite k, stored sparsely (zeros dropped), an optional constant
    tail f_k = tail_value for k >= tail_start, and f_inf, the rank of the
    divisible p-part.
    """
    prime: int
    values: Tuple[Tuple[int, ExtCard], ...] = ()
    f_inf: ExtCard = ZERO
    tail_start: Optional[int] = None
    tail_value: ExtCard = ZERO

    @classmethod
    def build(cls, prime: int,
              values: Dict[int, Union[int, ExtCard]],
              f_inf: Union[int, ExtCard] = 0,
              tail_start: Optional[int] = None,
              tail_value: Union[int, ExtCard] = 0) -> 'UlmInvariants':
        tail_value = ExtCard.of(tail_value)
        if tail_start is None or tail_value.is_zero:
            tail_start, tail_value = None, ZERO
        vals = tuple(sorted(
            (k, ExtCard.of(v)) for k, v in values.items()
            if not ExtCard.of(v).is_zero and
            (tail_start is None or k < tail_start)))
        return cls(prime, vals, ExtCard.of(f_inf), tail_start, tail_value)

    def f(self, k: int) -> ExtCard:
        if self.tail_start is not None and k >= self.tail_start:
            return self.tail_value
        return dict(self.values).get(k, ZERO)

    def upto(self, K: int) -> List[ExtCard]:
        return [self.f(k) for k in range(K)]

    @property
    def length(self) -> Optional[int]:
        """1 + largest k with f_k != 0; None when a tail never ends."""
        if self.tail_start is not None:
            return None
        return max((k for k, _ in self.values), default=-1) + 1

    def semi_standard(self) -> bool:
        """All f_k with k finite are finite."""
        return all(v.is_finite for _, v in self.values) and \
            self.tail_value.is_finite

    def dump(self) -> dict:
        return {
            'prime': self.prime,
            'f': {str(k): v.dump() for k, v in self.values},
            'f_inf': self.f_inf.dump(),
            'tail': None if self.tail_start is None else
            {'from': self.tail_start, 'value': self.tail_value.dump()},
        }


def p_height(G: FiniteAbelianGroup, x: Sequence[int], p: int) -> Height:
    """p_height.
    Largest k with x in p^kG; INFINITY when x lies in every p^kG
    (for a p-group exactly when x = 0).
    """
    x = G.validate(x)
    h: Height = INFINITY
    for c, m in zip(x, G.moduli):
        a = valuation(m, p) if m % p == 0 else 0
        if c == 0 or a == 0:
            continue
        v = valuation(c, p)
        if v < a:
            h = min(h, v)
    return h


def min_height(G: FiniteAbelianGroup, H: Subgroup, p: int) -> Height:
    """min_height.
    Minimum p-height over the nonzero elements of H; INFINITY for H = 0.
    """
    best: Height = INFINITY
    for x in H.elements():
        if any(x):
            best = min(best, p_height(G, x, p))
            if best == 0:
                break
    return best


def is_pure(G: FiniteAbelianGroup, H: Subgroup) -> bool:
    """is_pure.
    H cap p^kG = p^kH for every prime p dividing |G| and every
    k up to the p-length of G.
    """
    whole = Subgroup.whole(G)
    for p in G.primes():
        top = max(G.p_exponents(p), default=0)
        for k in range(1, top + 1):
            pk = p ** k
            if H.intersection(whole.multiple(pk)) != H.multiple(pk):
                return False
    return True


def ulm_invariants(G: FiniteAbelianGroup, p: int) -> UlmInvariants:
    """ulm_invariants.
    f_k = number of elementary divisors p^(k+1); the non-p-part is ignored.
    """
    counts: Dict[int, int] = {}
    for a in G.p_exponents(p):
        counts[a - 1] = counts.get(a - 1, 0) + 1
    return UlmInvariants.build(p, counts)


def brute_ulm(G: FiniteAbelianGroup, p: int,
              max_order: int = DEFAULT_SUBGROUP_BOUND) -> UlmInvariants:
    """brute_ulm.
    rank((p^kG)[p] / (p^(k+1)G)[p]) computed from explicit element sets.

    Raises:
        BoundExceeded: if |G| > max_order
    """
    if G.order() > max_order:
        raise BoundExceeded(
            f'|G| = {G.order()} exceeds the brute force bound {max_order}',
            bound=max_order)
    layer = set(G.elements())
    socles = []
    while True:
        socle = {x for x in layer if not any(G.scale(p, x))}
        socles.append(len(socle))
        if len(socle) == 1:
            break
        layer = {G.scale(p, x) for x in layer}
    counts = {k: valuation(socles[k] // socles[k + 1], p)
              for k in range(len(socles) - 1)
              if socles[k] != socles[k + 1]}
    return UlmInvariants.build(p, counts)


class HeightZeroSplit(NamedTuple):
    N: Subgroup
    A: FiniteAbelianGroup
    X: FiniteAbelianGroup


def hzero_split_construct(G: FiniteAbelianGroup, H: Subgroup,
                          p: int) -> HeightZeroSplit:
    """hzero_split_construct.
    N = H cap pG, A = H/N (nonzero, killed by p), X = (G/N)/A ~ G/H, and
    G/N ~ X + A because A is pure and bounded in G/N.

    Raises:
        PreconditionViolated: if min_height(G, H, p) != 0
        ConstructionError: if one of the isomorphism checks fails
    """
    if min_height(G, H, p) != 0:
        raise PreconditionViolated(
            f'min height of {H} at p={p} is not 0')
    N = H.intersection(Subgroup.whole(G).multiple(p))
    Q, pi = quotient(G, N)
    A_sub = Subgroup.generated(Q, [pi(b) for b in H.basis()])
    A = A_sub.to_group()
    X, _ = quotient(Q, A_sub)
    if A.is_trivial() or any(m != p for m in A.moduli):
        raise ConstructionError(f'H/N = {A} is not a nonzero p-bounded group')
    if not is_isomorphic(Q, direct_sum(X, A)):
        raise ConstructionError(f'G/N = {Q} does not split as {X} + {A}')
    if not is_isomorphic(X, quotient(G, H).group):
        raise ConstructionError(f'(G/N)/A = {X} differs from G/H')
    return HeightZeroSplit(N, A, X)


def _prime_of(T: FiniteAbelianGroup, p: Optional[int]) -> Optional[int]:
    if p is not None:
        if not T.is_p_group(p):
            raise PreconditionViolated(f'{T} is not a {p}-group')
        return p
    if T.is_trivial():
        return None
    if not T.is_p_group():
        raise PreconditionViolated(f'{T} is not a p-group')
    return T.primes()[0]


def extend_epi(T: FiniteAbelianGroup, k: int, phi: Homomorphism,
               p: Optional[int] = None,
               max_candidates: int = 1 << 16) -> Homomorphism:
    """extend_epi.
    Extend an epimorphism phi of p^kT (the group returned by
    power_subgroup(T, p, k)) to an epimorphism of T.

    One level at a time: on p^(j-1)T, the Z(p) summands are fixed and every
    other generator g goes to phi(pg) / p. When that does not verify, a
    bounded search over all extensions agreeing on p^kT takes over.

    Raises:
        PreconditionViolated: if T is not a p-group, k < 0, or phi is not an
            epimorphism of p^kT
    """
    if k < 0:
        raise PreconditionViolated(f'level k={k} is negative')
    p = _prime_of(T, p)
    if p is None:
        if not phi.domain.is_trivial() or not phi.codomain.is_trivial():
            raise PreconditionViolated('phi must act on the trivial group')
        return Homomorphism.identity(T)
    P, emb = power_subgroup(T, p, k)
    if phi.domain != P or phi.codomain != P:
        raise PreconditionViolated(
            f'phi must be an endomorphism of p^{k}T = {P}, got {phi}')
    if not is_surjective(phi):
        raise PreconditionViolated(f'phi is not an epimorphism: {phi}')

    exps = [valuation(m, p) for m in T.moduli]
    kept = [i for i, a in enumerate(exps) if a > k]
    targets = {i: emb(phi.images[pos]) for pos, i in enumerate(kept)}

    gamma = _extend_by_levels(T, p, k, exps, dict(targets))
    if gamma is not None and _extends(gamma, targets, p, k):
        return gamma
    logger().debug(f'level construction did not verify on {T}; searching')
    gamma = _search_extension(T, p, k, exps, targets, max_candidates)
    if gamma is None:
        raise ConstructionError(f'no extending epimorphism found for {phi}')
    return gamma


def _extend_by_levels(T: FiniteAbelianGroup, p: int, k: int,
                      exps: List[int],
                      level: Dict[int, GroupElement]
                      ) -> Optional[Homomorphism]:
    # level[i] is the image of p^j e_i, for generators with exps[i] > j
    n = T.rank
    for j in range(k, 0, -1):
        lower: Dict[int, GroupElement] = {}
        for i, a in enumerate(exps):
            if a > j:
                lower[i] = tuple(c // p for c in level[i])
            elif a == j:
                lower[i] = tuple(p ** (j - 1) if i == l else 0
                                 for l in range(n))
        level = lower
    try:
        gamma = Homomorphism(T, T, tuple(level[i] for i in range(n)))
    except Exception as exc:
        logger().debug(f'level construction is not well defined: {exc}')
        return None
    return gamma


def _extends(gamma: Homomorphism, targets: Dict[int, GroupElement],
             p: int, k: int) -> bool:
    T = gamma.domain
    for i, t in targets.items():
        g = tuple(p ** k if i == l else 0 for l in range(T.rank))
        if gamma(T.reduce(g)) != t:
            return False
    return is_surjective(gamma)


def _search_extension(T: FiniteAbelianGroup, p: int, k: int,
                      exps: List[int], targets: Dict[int, GroupElement],
                      max_candidates: int) -> Optional[Homomorphism]:
    pk = p ** k
    cands = []
    for i, a in enumerate(exps):
        tors = T.torsion_elements(p ** a)
        if i in targets:
            tors = tuple(y for y in tors if T.scale(pk, y) == targets[i])
        cands.append(tors)
    for count, imgs in enumerate(itertools.product(*cands)):
        if count >= max_candidates:
            raise BoundExceeded(
                f'extension search exceeded {max_candidates} candidates',
                bound=max_candidates)
        gamma = Homomorphism(T, T, imgs, check=False)
        if is_surjective(gamma):
            return gamma
    return None

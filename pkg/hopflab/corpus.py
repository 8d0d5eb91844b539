"""Descriptor corpora: the fixed showcase set, the golden verdict table and
seeded random corpora.
"""

import random
from typing import Dict, List, Tuple

from sympy import primerange

from hopflab.cardinals import OMEGA, ExtCard
from hopflab.config import CorpusSpec
from hopflab.descriptors import (GroupDescriptor, PrimaryPart, Tail, TailKind,
                                 parse_descriptor)

SHOWCASE_TEXT: Tuple[str, ...] = (
    'Z(2^inf)', 'Z(3^inf)',
    'B(2)', 'B(3)',
    'Z^w',
    'Z(2)^w', 'Z(3)^w',
    'Q', 'Q^3',
    'Z^2 + Z(2^2)^5',
    'Z(2) + Z(3^2)',
    'Z(2^3)^4 + Z(3)',
    'Z(2^inf) + Q',
)

# verdicts (H, RH, WH, DF)
GOLDEN_TABLE: Dict[str, Tuple[str, str, str, str]] = {
    'Z(2^inf)': ('no', 'yes', 'yes', 'yes'),
    'Z(3^inf)': ('no', 'yes', 'yes', 'yes'),
    'B(2)': ('no', 'no', 'yes', 'yes'),
    'B(3)': ('no', 'no', 'yes', 'yes'),
    'Z^w': ('no', 'no', 'no', 'no'),
    'Z(2)^w': ('no', 'no', 'no', 'no'),
    'Z(3)^w': ('no', 'no', 'no', 'no'),
    'Q^3': ('yes', 'yes', 'yes', 'yes'),
    'Q': ('yes', 'yes', 'yes', 'yes'),
    'Z^2 + Z(2^2)^5': ('yes', 'yes', 'yes', 'yes'),
    'Z(2) + Z(3^2)': ('yes', 'yes', 'yes', 'yes'),
    'Z(2^3)^4 + Z(3)': ('yes', 'yes', 'yes', 'yes'),
}


def showcase() -> List[GroupDescriptor]:
    return [parse_descriptor(t) for t in SHOWCASE_TEXT]


def _mult(rng: random.Random, spec: CorpusSpec) -> ExtCard:
    if rng.random() < spec.infinite_mult_probability:
        return OMEGA
    return ExtCard(rng.randint(1, spec.max_finite_mult))


def _primary(rng: random.Random, spec: CorpusSpec, p: int) -> PrimaryPart:
    exps = rng.sample(range(1, spec.max_exponent + 1),
                      rng.randint(0, spec.max_exponent))
    mults = {n: _mult(rng, spec) for n in sorted(exps)}
    tail = None
    roll = rng.random()
    if roll < 0.2:
        tail = Tail(TailKind.ALL_ONES, rng.randint(1, spec.max_exponent))
    elif roll < 0.25 and spec.infinite_mult_probability > 0:
        tail = Tail(TailKind.ALL_OMEGA, rng.randint(1, spec.max_exponent))
    divisible = _mult(rng, spec) if rng.random() < 0.3 else ExtCard(0)
    part = PrimaryPart.build(p, mults, tail, divisible)
    if part.is_zero():
        part = PrimaryPart.build(p, {rng.randint(1, spec.max_exponent): 1})
    return part


def random_descriptor(rng: random.Random, spec: CorpusSpec) -> GroupDescriptor:
    primes = [int(p) for p in primerange(2, spec.max_prime + 1)]
    chosen = sorted(rng.sample(primes, rng.randint(0, min(3, len(primes)))))
    free_rank = _mult(rng, spec) if rng.random() < 0.3 else ExtCard(0)
    q_rank = _mult(rng, spec) if rng.random() < 0.25 else ExtCard(0)
    parts = tuple(_primary(rng, spec, p) for p in chosen)
    return GroupDescriptor(free_rank, q_rank, parts)


def generate_corpus(spec: CorpusSpec) -> List[GroupDescriptor]:
    """generate_corpus.
    The showcase set followed by spec.size seeded random descriptors.

    Args:
        spec (CorpusSpec): generation parameters
    """
    rng = random.Random(spec.seed)
    return showcase() + [random_descriptor(rng, spec)
                         for _ in range(spec.size)]

import time
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from sympy import factorint, isprime, multiplicity
from sympy.utilities.iterables import partitions as _sympy_partitions


def gen_timestamp() -> int:
    """gen_timestamp.
    Generate a timestamp.

    Returns:
        int: Timestamp in milliseconds, integer representation.
    """
    return time.time_ns() // 1000000


def monotonic_ms() -> int:
    """monotonic_ms.
    Monotonic clock reading in milliseconds, used for elapsed fields.
    """
    return time.perf_counter_ns() // 1000000


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


@lru_cache(maxsize=None)
def factorize(n: int) -> Dict[int, int]:
    """factorize.
    Prime factorisation of a positive integer.

    Args:
        n (int): Positive integer.

    Returns:
        Dict[int, int]: prime -> exponent, primes ascending. Empty for 1.
    """
    if n < 1:
        raise ValueError(f'Cannot factorize {n}')
    return {int(p): int(e) for p, e in sorted(factorint(n).items())}


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """prime_power.
    Split n = p^e.

    Returns:
        Optional[Tuple[int, int]]: (p, e) if n is a prime power > 1,
            otherwise None.
    """
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    return next(iter(fac.items()))


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError('valuation of 0 is infinite')
    return int(multiplicity(p, abs(n)))


def partitions(n: int,
               largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """partitions.
    Integer partitions of n as non-increasing tuples, in reverse
    lexicographic order.

    Args:
        n (int): Integer to partition.
        largest (Optional[int]): Upper bound on the parts.
    """
    for part in _sympy_partitions(n, k=largest):
        yield tuple(a for a in sorted(part, reverse=True)
                    for _ in range(part[a]))

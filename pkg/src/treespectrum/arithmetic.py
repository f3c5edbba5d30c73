"""Integer factorisation and the divisor-counting function sigma_0.

Trial division by all primes below ``TRIAL_BOUND`` (done in blocks with a gcd
against the block's prime product), then Brent's variant of Pollard rho on
whatever is left.  Miller-Rabin with the first twelve prime bases is
deterministic below 3.18e23, which covers every 64-bit input; above that a
further batch of random bases makes it a strong probable-prime test.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import gcd, isqrt, prod

TRIAL_BOUND = 10**6
DEFAULT_RHO_ITERATIONS = 2_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 318_665_857_834_031_151_167_461
_BLOCK = 256


class FactorizationFailed(RuntimeError):
    """The randomized splitter ran out of iterations."""


@lru_cache(maxsize=None)
def _primes_below(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * bound
    sieve[:2] = b"\x00\x00"
    for p in range(2, isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, bound, p)))
    return tuple(i for i in range(bound) if sieve[i])


@lru_cache(maxsize=None)
def _prime_blocks(bound: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    primes = _primes_below(bound)
    return tuple(
        (primes[i:i + _BLOCK], prod(primes[i:i + _BLOCK]))
        for i in range(0, len(primes), _BLOCK)
    )


def is_probable_prime(n: int, rng: random.Random | None = None, extra_rounds: int = 16) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a: int) -> bool:
        x = pow(a, d, n)
        if x in (1, n - 1):
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    if any(witness(a) for a in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    rng = rng or random.Random(n)
    return not any(witness(rng.randrange(2, n - 1)) for _ in range(extra_rounds))


def _brent(n: int, rng: random.Random, max_iterations: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    spent = 0
    while spent < max_iterations:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r
            r *= 2
            if spent >= max_iterations and g == 1:
                break
        if g == n:
            # overshot: step back one at a time from the saved point
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    raise FactorizationFailed(f"no factor of {n} found in {max_iterations} rho iterations")


def factorize(
    n: int,
    seed: int | None = None,
    max_iterations: int = DEFAULT_RHO_ITERATIONS,
) -> dict[int, int]:
    """Prime factorisation as ``{prime: exponent}`` with primes increasing.

    >>> factorize(168)
    {2: 3, 3: 1, 7: 1}
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n!r}")
    factors: dict[int, int] = {}

    def add(p: int, e: int = 1) -> None:
        factors[p] = factors.get(p, 0) + e

    # every prime below `cleared` has been divided out
    cleared = 2
    for primes, block_product in _prime_blocks(TRIAL_BOUND):
        if cleared * cleared > n:
            break
        g = gcd(n, block_product)
        for p in primes:
            if p > g:
                break
            if g % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                add(p, e)
        cleared = primes[-1] + 1

    if 1 < n < cleared * cleared:
        add(n)
    elif n > 1:
        rng = random.Random(seed if seed is not None else n)
        stack = [n]
        while stack:
            x = stack.pop()
            if is_probable_prime(x, rng):
                add(x)
                continue
            r = isqrt(x)
            if r * r == x:
                stack += [r, r]
                continue
            d = _brent(x, rng, max_iterations)
            stack += [d, x // d]
    return dict(sorted(factors.items()))


def sigma0(n: int, **kwargs) -> int:
    """Number of positive divisors of ``n``."""
    return prod(e + 1 for e in factorize(n, **kwargs).values())

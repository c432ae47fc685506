"""Primes, deterministic primality, and the divisibility order on primes.

The order is generated by q << p iff q divides p - 1, i.e. q indexes a
symmetry of the multiplicative group mod p.  Certificate trees record the
full recursive factorization of p - 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# deterministic Miller-Rabin witnesses, valid for every n < 2^64
_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# smallest-prime-factor table size; covers p - 1 for every sieveable prime
_SPF_LIMIT = 1 << 20


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, increasing."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p::p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def first_primes(k: int) -> list[int]:
    """The first k primes."""
    if k <= 0:
        return []
    if k < 6:
        return [2, 3, 5, 7, 11][:k]
    # overshoot bound from p_k < k(log k + log log k), valid for k >= 6
    bound = int(k * (math.log(k) + math.log(math.log(k)))) + 10
    ps = primes_up_to(bound)
    while len(ps) < k:
        bound *= 2
        ps = primes_up_to(bound)
    return ps[:k]


def is_prime(n: int) -> bool:
    """Deterministic verdict for any n < 2^64."""
    if n < 2:
        return False
    if n >> 64:
        raise ValueError("primality verdict is defined for n < 2^64 only")
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _spf() -> np.ndarray:
    """Smallest prime factor for every index below _SPF_LIMIT."""
    spf = np.zeros(_SPF_LIMIT, dtype=np.int32)
    for p in range(2, math.isqrt(_SPF_LIMIT - 1) + 1):
        if spf[p] == 0:
            sl = spf[p::p]
            sl[sl == 0] = p
    rest = np.nonzero(spf == 0)[0]
    spf[rest] = rest  # untouched entries beyond sqrt are prime
    spf[:2] = (0, 1)
    return spf


@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    return tuple(primes_up_to(1 << 12))


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n, deterministic parameter walk."""
    c = 1
    while True:
        y, r, q = 2, 1, 1
        d = 1
        x = ys = y
        while d == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and d == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                d = math.gcd(q, n)
                k += 128
            r <<= 1
        if d == n:
            # backtrack one step at a time from the last saved position
            d = 1
            while d == 1:
                ys = (ys * ys + c) % n
                d = math.gcd(abs(x - ys), n)
        if d != n:
            return d
        c += 1


def _split(m: int, out: dict[int, int]) -> None:
    if is_prime(m):
        out[m] = out.get(m, 0) + 1
        return
    d = _brent_rho(m)
    _split(d, out)
    _split(m // d, out)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} of n >= 1, keys increasing."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    m = n
    if 1 < m < _SPF_LIMIT:
        spf = _spf()
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
        return out
    for p in _trial_primes():
        if p * p > m:
            break
        while m % p == 0:
            m //= p
            out[p] = out.get(p, 0) + 1
    if m > 1:
        _split(m, out)
    return dict(sorted(out.items()))


def factor_string(n: int) -> str:
    """Compact rendering like 2^2*79 with primes increasing."""
    if n == 1:
        return "1"
    return "*".join(str(p) if e == 1 else f"{p}^{e}"
                    for p, e in sorted(factorize(n).items()))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def poset_predecessors(p: int) -> set[int]:
    """Primes q with q | p - 1; empty exactly for p = 2."""
    _require_prime(p)
    return set(factorize(p - 1))


def is_poset_related(q: int, p: int) -> bool:
    """True iff q | p - 1 (q below p in the divisibility order)."""
    _require_prime(q)
    _require_prime(p)
    return (p - 1) % q == 0


@dataclass(frozen=True)
class PrattTree:
    """Certificate node: children are the prime factors of prime - 1."""

    prime: int
    edges: tuple[tuple["PrattTree", int], ...]

    def predecessor_product(self) -> int:
        """Product of child.prime^exponent; equals prime - 1 when prime > 2."""
        out = 1
        for child, e in self.edges:
            out *= child.prime ** e
        return out

    def iter_edges(self):
        """Depth-first (parent, child, exponent) triples."""
        for child, e in self.edges:
            yield (self.prime, child.prime, e)
            yield from child.iter_edges()


@lru_cache(maxsize=None)
def pratt_tree(p: int) -> PrattTree:
    """Certificate tree by recursive factorization of p - 1."""
    _require_prime(p)
    if p == 2:
        return PrattTree(2, ())
    fac = factorize(p - 1)
    edges = tuple((pratt_tree(q), e) for q, e in sorted(fac.items()))
    return PrattTree(p, edges)


@dataclass(frozen=True)
class EuclidCandidate:
    factors: tuple[int, ...]
    candidate: int
    is_prime: bool


def euclid_generate(factors) -> EuclidCandidate:
    """Candidate 2*q1*...*qr + 1 from distinct odd primes, with verdict.

    A prime candidate sits above every listed factor (and 2) in the
    divisibility order, since candidate - 1 = 2*q1*...*qr by construction.
    """
    fs = tuple(factors)
    if not fs:
        raise ValueError("need at least one factor")
    if len(set(fs)) != len(fs):
        raise ValueError("factors must be distinct")
    for q in fs:
        if q == 2 or not is_prime(q):
            raise ValueError(f"factor {q} is not an odd prime")
    fs = tuple(sorted(fs))
    prod = 2
    for q in fs:
        prod *= q
        if prod > (1 << 64) - 2:
            raise OverflowError("candidate exceeds the 64-bit range")
    cand = prod + 1
    return EuclidCandidate(fs, cand, is_prime(cand))

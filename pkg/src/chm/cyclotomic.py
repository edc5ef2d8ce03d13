"""Exact arithmetic with roots of unity.

A sum of L-th roots of unity is represented by its integer coefficient
vector c, meaning sum_t c[t] * zeta_L^t.  The sum vanishes exactly when the
polynomial sum_t c[t] x^t is divisible by the L-th cyclotomic polynomial.
Also provides the modular machinery (primes p with p = 1 mod L and an
element of order L in F_p) used for certified exact rank computations.
"""

from __future__ import annotations

from functools import lru_cache

# Largest common denominator for which the exact zero test is attempted.
MAX_EXACT_ORDER = 360


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("order must be >= 1")
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _poly_divide_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1] // den[-1]
        out[k] = coeff
        if coeff:
            for j, c in enumerate(den):
                num[k + j] -= coeff * c
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def root_sum_is_zero(coeffs, order: int) -> bool:
    """Exact test of sum_t coeffs[t] * zeta_order^t == 0."""
    rem = list(coeffs)
    if len(rem) < order:
        rem += [0] * (order - len(rem))
    # Fold exponents mod order first, then reduce modulo Phi_order.
    folded = [0] * order
    for t, c in enumerate(rem):
        folded[t % order] += c
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    for k in range(order - 1, deg - 1, -1):
        coeff = folded[k]
        if coeff:
            folded[k] = 0
            for j in range(deg):
                folded[k - deg + j] -= coeff * phi[j]
    return not any(folded[:deg])


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_one_mod(order: int, start: int):
    """Yield primes p = 1 (mod order) with p >= start, in increasing order."""
    p = start + (-(start - 1)) % order
    if p < start:
        p += order
    while True:
        if is_probable_prime(p):
            yield p
        p += order


def _factorize(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def element_of_order(order: int, p: int) -> int:
    """An element of multiplicative order `order` in F_p (needs p = 1 mod order)."""
    if (p - 1) % order != 0:
        raise ValueError(f"{p} is not 1 mod {order}")
    cofactor = (p - 1) // order
    prime_factors = _factorize(order) if order > 1 else []
    for a in range(2, p):
        g = pow(a, cofactor, p)
        if g == 1:
            continue
        if all(pow(g, order // q, p) != 1 for q in prime_factors):
            return g
    raise ArithmeticError(f"no element of order {order} mod {p}")

"""Dense univariate polynomial arithmetic over GF(p).

A polynomial is a tuple of coefficients in [0, p), ascending degree, with
no trailing zeros; () is the zero polynomial.  Irreducibility follows the
x^(p^d) - x gcd test; factorization is distinct-degree splitting followed
by Cantor-Zassenhaus equal-degree splitting with a fixed-seed generator,
so results are reproducible.  Degrees are capped at desk scale.
"""

from __future__ import annotations

import random

from .errors import FactorizationLimitError
from .primes import prime_factors

DEGREE_CAP = 16

Poly = tuple[int, ...]

X: Poly = (0, 1)


def trim(coeffs: list[int] | tuple[int, ...], p: int) -> Poly:
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def deg(f: Poly) -> int:
    """Degree, with deg(0) = -1."""
    return len(f) - 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def neg(f: Poly, p: int) -> Poly:
    return tuple((-c) % p for c in f)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    return add(f, neg(g, p), p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out, p)


def scale(f: Poly, c: int, p: int) -> Poly:
    return trim([a * c for a in f], p)


def divmod_(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    inv_lead = pow(g[-1], p - 2, p)
    while len(rem) >= len(g) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        shift = len(rem) - len(g)
        c = rem[-1] * inv_lead % p
        q[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] = (rem[shift + i] - c * b) % p
    return trim(q, p), trim(rem, p)


def mod(f: Poly, g: Poly, p: int) -> Poly:
    return divmod_(f, g, p)[1]


def divides(g: Poly, f: Poly, p: int) -> bool:
    return not mod(f, g, p)


def monic(f: Poly, p: int) -> Poly:
    if not f or f[-1] == 1:
        return f
    return scale(f, pow(f[-1], p - 2, p), p)


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def pow_mod(base: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = mod(base, m, p)
    while e > 0:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def derivative(f: Poly, p: int) -> Poly:
    return trim([i * c for i, c in enumerate(f)][1:], p)


def is_irreducible(f: Poly, p: int, cap: int | None = DEGREE_CAP) -> bool:
    """Rabin test: x^(p^d) = x mod f, and no proper p^(d/t) fixed part."""
    d = deg(f)
    if d < 1:
        return False
    if cap is not None and d > cap:
        raise FactorizationLimitError(f"degree {d} exceeds cap {cap}")
    if d == 1:
        return True
    if pow_mod(X, p**d, f, p) != mod(X, f, p):
        return False
    for t in prime_factors(d):
        h = sub(pow_mod(X, p ** (d // t), f, p), mod(X, f, p), p)
        if deg(gcd(h, f, p)) != 0:
            return False
    return True


def _equal_degree_split(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    """Split a squarefree product of degree-d irreducibles."""
    n = deg(f)
    if n == d:
        return [monic(f, p)]
    while True:
        h = trim([rng.randrange(p) for _ in range(n)], p)
        if deg(h) < 1:
            continue
        if p == 2:
            # Trace map h + h^2 + h^4 + ... over GF(2^d).
            t: Poly = ()
            cur = mod(h, f, p)
            for _ in range(d):
                t = add(t, cur, p)
                cur = mod(mul(cur, cur, p), f, p)
            g = gcd(t, f, p)
        else:
            g = gcd(sub(pow_mod(h, (p**d - 1) // 2, f, p), (1,), p), f, p)
        if 0 < deg(g) < n:
            left = _equal_degree_split(g, d, p, rng)
            right = _equal_degree_split(divmod_(f, g, p)[0], d, p, rng)
            return left + right


def _squarefree_factor(f: Poly, p: int, rng: random.Random, out: dict[Poly, int], mult: int) -> None:
    """Distinct-degree then equal-degree splitting of squarefree monic f."""
    d = 1
    w = mod(X, f, p)
    while deg(f) >= 2 * d:
        w = pow_mod(w, p, f, p)
        g = gcd(sub(w, mod(X, f, p), p), f, p)
        if deg(g) > 0:
            for irr in _equal_degree_split(g, d, p, rng):
                out[irr] = out.get(irr, 0) + mult
            f = divmod_(f, g, p)[0]
            w = mod(w, f, p)
        d += 1
    if deg(f) > 0:
        f = monic(f, p)
        out[f] = out.get(f, 0) + mult


def _factor_monic(f: Poly, p: int, rng: random.Random, out: dict[Poly, int], mult: int) -> None:
    if deg(f) < 1:
        return
    df = derivative(f, p)
    if not df:
        # f = g(x^p) = g(x)^p since Frobenius fixes GF(p).
        g = trim([f[i] for i in range(0, len(f), p)], p)
        _factor_monic(g, p, rng, out, mult * p)
        return
    g = gcd(f, df, p)
    if deg(g) == 0:
        _squarefree_factor(f, p, rng, out, mult)
        return
    _factor_monic(g, p, rng, out, mult)
    _factor_monic(divmod_(f, g, p)[0], p, rng, out, mult)


def factor(f: Poly, p: int, cap: int | None = DEGREE_CAP) -> list[tuple[Poly, int]]:
    """Monic irreducible factors of f != 0 with multiplicities, sorted."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if cap is not None and deg(f) > cap:
        raise FactorizationLimitError(f"degree {deg(f)} exceeds cap {cap}")
    out: dict[Poly, int] = {}
    _factor_monic(monic(f, p), p, random.Random(0xC0FFEE), out, 1)
    return sorted(out.items(), key=lambda kv: (deg(kv[0]), kv[0]))


def irreducibles(p: int):
    """Yield monic irreducibles in (degree, coefficient) order."""
    d = 1
    while True:
        for tail in _tuples(p, d):
            f = tail + (1,)
            if is_irreducible(f, p, cap=None):
                yield f
        d += 1


def _tuples(p: int, length: int):
    if length == 0:
        yield ()
        return
    for rest in _tuples(p, length - 1):
        for c in range(p):
            yield rest + (c,)


def poly_str(f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    parts = []
    for i, c in enumerate(f):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else str(c) + "*"
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(reversed(parts))

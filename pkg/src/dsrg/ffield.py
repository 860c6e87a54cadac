"""Table-driven arithmetic for the finite field GF(p^e).

Elements are dense indices 0..q-1.  The index encodes the coefficient
vector of the element's polynomial representative in base p with the
degree-0 coefficient as the least significant digit, so index 0 is the
field zero and index 1 the field one.  All arithmetic is precomputed
into q x q tables; the downstream incidence constructions enumerate
whole fields anyway, so the table cost is negligible and every lookup
is O(1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotPrimePowerError, TooLargeError

MAX_ORDER = 4096


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, or raise NotPrimePowerError."""
    if q < 2:
        raise NotPrimePowerError(f"field order must be at least 2, got {q}")
    n = q
    p = None
    for d in range(2, q + 1):
        if d * d > n:
            if n > 1:
                p = n if p is None else p
                if n != p:
                    raise NotPrimePowerError(f"{q} has two distinct prime divisors")
            break
        if n % d == 0:
            p = d
            while n % d == 0:
                n //= d
            if n != 1:
                raise NotPrimePowerError(f"{q} has two distinct prime divisors")
            break
    e = 0
    n = q
    while n > 1:
        n //= p
        e += 1
    assert p ** e == q
    return p, e


def _digits(value: int, p: int, width: int) -> tuple[int, ...]:
    """Base-p digits of value, least significant first, padded to width."""
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return tuple(out)


def _poly_mul_mod_p(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_rem(a: list[int], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return tuple(c % p for c in a[:dm])


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in range(p ** d):
            divisor = _digits(tail, p, d) + (1,)
            rem = _poly_rem(list(poly), divisor, p)
            if not any(rem):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over Z_p.

    Candidates are compared by their low-degree-first coefficient
    sequence read as a base-p integer, so the search is a plain counter.
    """
    if e == 1:
        return (0, 1)
    for tail in range(p ** e):
        poly = _digits(tail, p, e) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {e} over Z_{p}")


@dataclass(frozen=True)
class FiniteField:
    """GF(q) with q = p^e, fully tabulated.

    Immutable after construction; safe for concurrent reads.
    """

    p: int
    e: int
    q: int
    modulus_poly: tuple[int, ...]
    add_table: tuple[tuple[int, ...], ...] = field(repr=False)
    mul_table: tuple[tuple[int, ...], ...] = field(repr=False)
    inv_table: tuple[int, ...] = field(repr=False)

    def elements(self) -> range:
        """All element indices, 0..q-1 in increasing order."""
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        row = self.add_table[a]
        return row.index(0)

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg(b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def __repr__(self) -> str:  # tables are huge; keep repr readable
        return f"FiniteField(q={self.q}, p={self.p}, e={self.e}, modulus={self.modulus_poly})"


def make_field(q: int) -> FiniteField:
    """Build GF(q) for a prime power q, 2 <= q <= 4096.

    Deterministic: the modulus is the lexicographically smallest monic
    irreducible of degree e, so two calls yield identical tables.
    """
    if q > MAX_ORDER:
        raise TooLargeError(f"field order {q} exceeds cap {MAX_ORDER}")
    p, e = _factor_prime_power(q)
    modulus = _smallest_irreducible(p, e)

    if e == 1:
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
        inv = tuple(0 if a == 0 else pow(a, p - 2, p) for a in range(p))
        return FiniteField(p, e, q, modulus, add, mul, inv)

    vecs = [_digits(i, p, e) for i in range(q)]

    def index_of(vec: tuple[int, ...]) -> int:
        val = 0
        for c in reversed(vec):
            val = val * p + c
        return val

    def mul_raw(a: int, b: int) -> int:
        prod = _poly_mul_mod_p(vecs[a], vecs[b], p)
        return index_of(_poly_rem(list(prod), modulus, p))

    # discrete log tables off a primitive element keep table construction
    # at O(q) polynomial products instead of O(q^2)
    exp = log = None
    for g in range(2, q):
        powers = [1]
        x = g
        while x != 1:
            powers.append(x)
            x = mul_raw(x, g)
        if len(powers) == q - 1:
            exp = powers
            log = [0] * q
            for i, val in enumerate(powers):
                log[val] = i
            break
    assert exp is not None, "no primitive element found"

    add_rows = []
    mul_rows = []
    for a in range(q):
        va = vecs[a]
        add_rows.append(tuple(index_of(tuple((x + y) % p for x, y in zip(va, vecs[b])))
                              for b in range(q)))
        if a == 0:
            mul_rows.append((0,) * q)
            continue
        la = log[a]
        mul_rows.append(tuple(0 if b == 0 else exp[(la + log[b]) % (q - 1)]
                              for b in range(q)))

    inv = [0] * q
    for a in range(1, q):
        inv[a] = exp[(q - 1 - log[a]) % (q - 1)]

    return FiniteField(p, e, q, modulus, tuple(add_rows), tuple(mul_rows), tuple(inv))


def field_elements(f: FiniteField) -> list[int]:
    """Element indices of f in increasing order."""
    return list(f.elements())

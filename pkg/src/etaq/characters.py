"""Real Dirichlet characters: Kronecker symbols times trivial characters.

Every character we need factors as (the trivial character modulo M) times
(the Kronecker symbol of a discriminant d), so a character is stored
symbolically as that pair plus its effective modulus.  Evaluation is exact
integer arithmetic throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, lcm


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            if a % 8 in (3, 5):
                result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _squarefree_part(d: int) -> tuple[int, int]:
    """Write d = e * c^2 with e squarefree (sign kept on e); returns (e, c)."""
    if d == 0:
        raise ValueError("discriminant 0 has no squarefree part")
    sign = -1 if d < 0 else 1
    d = abs(d)
    e, c = 1, 1
    p = 2
    while p * p <= d:
        k = 0
        while d % p == 0:
            d //= p
            k += 1
        c *= p ** (k // 2)
        if k % 2:
            e *= p
        p += 1 if p == 2 else 2
    return sign * e * d, c


def _conductor_of_disc(e: int) -> int:
    """Modulus on which the Kronecker symbol of squarefree e is periodic."""
    if e == 1:
        return 1
    return abs(e) if e % 4 == 1 else 4 * abs(e)


@dataclass(frozen=True)
class Character:
    """Trivial character mod `trivial_part` times the Kronecker symbol of `disc`."""

    trivial_part: int
    disc: int

    def __post_init__(self) -> None:
        if self.trivial_part < 1:
            raise ValueError("trivial part must be a positive modulus")
        e, _ = _squarefree_part(self.disc)
        if e != self.disc:
            raise ValueError(f"discriminant {self.disc} is not squarefree; reduce it first")

    @property
    def modulus(self) -> int:
        return lcm(self.trivial_part, _conductor_of_disc(self.disc))

    def __call__(self, n: int) -> int:
        if gcd(n, self.trivial_part) > 1:
            return 0
        return kronecker(self.disc, n)

    def is_trivial(self) -> bool:
        """True for every principal character 1_M, whatever its modulus."""
        return self.disc == 1

    def parity(self) -> int:
        """chi(-1), which is +1 for even characters and -1 for odd ones."""
        return self(-1)

    def __mul__(self, other: "Character") -> "Character":
        e, c = _squarefree_part(self.disc * other.disc)
        m = lcm(self.trivial_part, other.trivial_part)
        if c > 1:
            # the square part survives only as a trivial-character factor
            m = lcm(m, c)
        return Character(m, e)

    def describe(self) -> str:
        parts = []
        if self.disc == 1 or self.trivial_part > 1:
            parts.append(f"1_{self.trivial_part}")
        if self.disc != 1:
            parts.append(f"kron({self.disc})")
        return " * ".join(parts)

    def __repr__(self) -> str:
        return f"Character({self.describe()})"


TRIVIAL = Character(1, 1)

_TOKEN = re.compile(r"^(?:1_(\d+)|kron\((-?\d+)\))$")


def trivial_mod(m: int) -> Character:
    return Character(m, 1)


def kronecker_character(d: int) -> Character:
    """The Kronecker symbol of d as a character (square part folded in)."""
    e, c = _squarefree_part(d)
    return Character(c if c > 1 else 1, e)


def parse_character(text: str) -> Character:
    """Parse strings like "1_12", "kron(-3)", or "1_2 * kron(-3)"."""
    chi = TRIVIAL
    for raw in text.split("*"):
        token = raw.strip()
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"bad character token {token!r}")
        if m.group(1) is not None:
            chi = chi * trivial_mod(int(m.group(1)))
        else:
            chi = chi * kronecker_character(int(m.group(2)))
    return chi

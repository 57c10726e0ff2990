"""Integer polynomials in ``q`` for point counts."""

from __future__ import annotations

from itertools import zip_longest


class QPoly:
    """Dense integer polynomial, coefficients lowest degree first.

    Trailing zeros are stripped, so equal polynomials have equal ``coeffs``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, a: int) -> "QPoly":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "QPoly":
        if k < 0:
            raise ValueError("negative degree")
        return cls((0,) * k + (a,))

    @classmethod
    def q_integer(cls, m: int) -> "QPoly":
        """``1 + q + ... + q^(m-1)``."""
        return cls((1,) * m)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = QPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, q):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * q + a
        return acc

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            mag = abs(a)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not terms:
                terms.append(body if a > 0 else f"-{body}")
            else:
                terms.append(("+ " if a > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def to_json(self) -> list:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data) -> "QPoly":
        return cls(data)


Q = QPoly.monomial(1)

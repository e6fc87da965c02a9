"""Truncated formal power series over exact rationals.

An ExactSeries holds coefficients c[0..order] as `fractions.Fraction` values.
All arithmetic is exact; binary operations truncate to the smaller of the two
operand orders, so a result is trustworthy through its own order provided the
inputs were.  No floating point enters until `evaluate`.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import DomainError

__all__ = ["ExactSeries"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact series coefficients must be rational, got {type(x).__name__}")


class ExactSeries:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str = "x"):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = coeffs
        self.var = var

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, order: int, var: str = "x") -> "ExactSeries":
        return cls((_ZERO,) * (order + 1), var)

    @classmethod
    def one(cls, order: int, var: str = "x") -> "ExactSeries":
        return cls((_ONE,) + (_ZERO,) * order, var)

    @classmethod
    def identity(cls, order: int, var: str = "x") -> "ExactSeries":
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return cls((_ZERO, _ONE) + (_ZERO,) * (order - 1), var)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if len(self.coeffs) > 6 else ""
        return f"ExactSeries([{head}{tail}], var={self.var!r}, order={self.order})"

    # -- basic arithmetic -----------------------------------------------------

    def truncate(self, order: int) -> "ExactSeries":
        if order < 0:
            raise ValueError("order must be nonnegative")
        if order >= self.order:
            return self
        return ExactSeries(self.coeffs[: order + 1], self.var)

    def pad(self, order: int) -> "ExactSeries":
        """Extend with zero coefficients (the tail is *assumed*, not known)."""
        if order <= self.order:
            return self.truncate(order)
        return ExactSeries(self.coeffs + (_ZERO,) * (order - self.order), self.var)

    def __neg__(self) -> "ExactSeries":
        return ExactSeries(tuple(-c for c in self.coeffs), self.var)

    def __add__(self, other):
        if isinstance(other, ExactSeries):
            n = min(self.order, other.order)
            return ExactSeries(
                tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), self.var
            )
        c = _as_fraction(other)
        return ExactSeries((self.coeffs[0] + c,) + self.coeffs[1:], self.var)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, ExactSeries) else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ExactSeries):
            n = min(self.order, other.order)
            out = [_ZERO] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if a == 0:
                    continue
                for j in range(0, n + 1 - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return ExactSeries(out, self.var)
        c = _as_fraction(other)
        return ExactSeries(tuple(a * c for a in self.coeffs), self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExactSeries):
            return self * other.reciprocal()
        c = _as_fraction(other)
        if c == 0:
            raise ZeroDivisionError("division of a series by zero")
        return self * (1 / c)

    def reciprocal(self) -> "ExactSeries":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise DomainError("reciprocal requires a nonzero constant term")
        inv0 = 1 / a0
        n = self.order
        out = [inv0] + [_ZERO] * n
        for m in range(1, n + 1):
            s = _ZERO
            for j in range(1, m + 1):
                if self.coeffs[j] != 0:
                    s += self.coeffs[j] * out[m - j]
            out[m] = -inv0 * s
        return ExactSeries(out, self.var)

    # -- calculus -------------------------------------------------------------

    def derivative(self) -> "ExactSeries":
        if self.order == 0:
            return ExactSeries.zero(0, self.var)
        return ExactSeries(
            tuple(n * c for n, c in enumerate(self.coeffs) if n >= 1), self.var
        )

    def integral(self, constant=0) -> "ExactSeries":
        out = [_as_fraction(constant)]
        out.extend(c / (n + 1) for n, c in enumerate(self.coeffs))
        return ExactSeries(out, self.var)

    # -- exp / log ------------------------------------------------------------

    def exp(self) -> "ExactSeries":
        """Series exponential; requires a zero constant term."""
        if self.coeffs[0] != 0:
            raise DomainError("exp requires a zero constant term")
        n = self.order
        out = [_ONE] + [_ZERO] * n
        for m in range(1, n + 1):
            s = _ZERO
            for j in range(1, m + 1):
                if self.coeffs[j] != 0:
                    s += j * self.coeffs[j] * out[m - j]
            out[m] = s / m
        return ExactSeries(out, self.var)

    def log(self) -> "ExactSeries":
        """Series logarithm; requires constant term one."""
        if self.coeffs[0] != 1:
            raise DomainError("log requires constant term one")
        return (self.derivative() * self.truncate(max(self.order - 1, 0)).reciprocal()).integral(0).truncate(self.order)

    # -- composition ----------------------------------------------------------

    def compose(self, inner: "ExactSeries") -> "ExactSeries":
        """self(inner(x)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise DomainError("composition requires the inner series to vanish at 0")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = ExactSeries.zero(n, self.var) + self.coeffs[min(self.order, n)]
        for k in range(min(self.order, n) - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return ExactSeries(acc.coeffs, self.var)

    def reversion(self) -> "ExactSeries":
        """Compositional inverse g with self(g(x)) = x, by Newton iteration.

        Requires zero constant term and nonzero linear coefficient.  The
        number of correct coefficients doubles each step.
        """
        if self.coeffs[0] != 0:
            raise DomainError("reversion requires a zero constant term")
        if self.order < 1 or self.coeffs[1] == 0:
            raise DomainError("reversion requires a nonzero linear coefficient")
        n = self.order
        f = self
        fprime = f.derivative().pad(n)
        g = ExactSeries((_ZERO, 1 / f.coeffs[1]), self.var)
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            gp = g.pad(prec)
            fg = f.truncate(prec).compose(gp)
            ident = ExactSeries.identity(prec, self.var)
            dfg = fprime.truncate(prec).compose(gp)
            g = (gp - (fg - ident) * dfg.reciprocal()).truncate(prec)
        return ExactSeries(g.pad(n).coeffs, self.var)

    # -- structure helpers ----------------------------------------------------

    def shift_up(self, k: int = 1) -> "ExactSeries":
        """Multiply by x^k (order grows by k)."""
        return ExactSeries((_ZERO,) * k + self.coeffs, self.var)

    def shift_down(self, k: int = 1) -> "ExactSeries":
        """Divide by x^k; the k lowest coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise DomainError("shift_down requires the low coefficients to vanish")
        return ExactSeries(self.coeffs[k:], self.var)

    def dilate(self, k: int) -> "ExactSeries":
        """Substitute x -> x^k (spreads coefficients k apart)."""
        if k < 1:
            raise ValueError("dilate needs k >= 1")
        out = [_ZERO] * (self.order * k + 1)
        for n, c in enumerate(self.coeffs):
            out[n * k] = c
        return ExactSeries(out, self.var)

    def is_even(self) -> bool:
        return all(c == 0 for n, c in enumerate(self.coeffs) if n % 2 == 1)

    def is_odd(self) -> bool:
        return all(c == 0 for n, c in enumerate(self.coeffs) if n % 2 == 0)

    # -- numeric evaluation and serialization ----------------------------------

    def evaluate(self, x) -> complex:
        """Horner evaluation of the truncated series at a complex point."""
        x = complex(x)
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * x + (c.numerator / c.denominator)
        return acc

    def float_coeffs(self):
        return [c.numerator / c.denominator for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(
            {"var": self.var, "order": self.order, "coeffs": [str(c) for c in self.coeffs]}
        )

    @classmethod
    def from_json(cls, text: str) -> "ExactSeries":
        data = json.loads(text)
        s = cls([Fraction(c) for c in data["coeffs"]], var=data.get("var", "x"))
        if s.order != data["order"]:
            raise ValueError("inconsistent order in serialized series")
        return s

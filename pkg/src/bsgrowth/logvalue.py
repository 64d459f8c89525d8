"""Positive reals carried as their natural logarithm."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class LogValue:
    """A non-negative real ``exp(ln)``, or exact zero when ``is_zero`` is set.

    Products and quotients are sums and differences of logs; sums use the
    log-sum-exp form so nothing overflows on the way.
    """

    ln: float
    is_zero: bool = False

    @classmethod
    def zero(cls) -> LogValue:
        return cls(-math.inf, True)

    @classmethod
    def from_float(cls, x: float) -> LogValue:
        if x < 0:
            raise ValueError("LogValue cannot hold a negative number")
        if x == 0:
            return cls.zero()
        return cls(math.log(x))

    @classmethod
    def from_int(cls, x: int) -> LogValue:
        if x < 0:
            raise ValueError("LogValue cannot hold a negative number")
        if x == 0:
            return cls.zero()
        return cls(math.log(x))

    def __mul__(self, other: LogValue) -> LogValue:
        if self.is_zero or other.is_zero:
            return LogValue.zero()
        return LogValue(self.ln + other.ln)

    def __truediv__(self, other: LogValue) -> LogValue:
        if other.is_zero:
            raise ZeroDivisionError("division by LogValue zero")
        if self.is_zero:
            return self
        return LogValue(self.ln - other.ln)

    def __add__(self, other: LogValue) -> LogValue:
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        hi, lo = (self.ln, other.ln) if self.ln >= other.ln else (other.ln, self.ln)
        return LogValue(hi + math.log1p(math.exp(lo - hi)))

    def __pow__(self, exponent: float) -> LogValue:
        if self.is_zero:
            if exponent <= 0:
                raise ZeroDivisionError("zero to a non-positive power")
            return self
        return LogValue(self.ln * exponent)

    def __lt__(self, other: LogValue) -> bool:
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.ln < other.ln

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogValue):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.ln == other.ln

    def __hash__(self) -> int:
        return hash((self.is_zero, None if self.is_zero else self.ln))

    def __float__(self) -> float:
        if self.is_zero:
            return 0.0
        try:
            return math.exp(self.ln)
        except OverflowError:
            return math.inf

    @property
    def log10(self) -> float:
        return -math.inf if self.is_zero else self.ln / math.log(10)

    def to_json(self) -> dict:
        return {"ln": None if self.is_zero else self.ln}

    def __repr__(self) -> str:
        return "LogValue(0)" if self.is_zero else f"LogValue(ln={self.ln!r})"

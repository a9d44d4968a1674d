"""The (A, X, B, Y, C, Z) candidate record.

A BealTriple is a plain value object: construction does not require the
equation to hold, since classification commands accept arbitrary inputs and
verification reports failures as data.  Canonical form (reduced bases,
A**X <= B**Y) is produced explicitly via canonical().
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact_arith import reduce_base


@dataclass(frozen=True)
class BealTriple:
    A: int
    X: int
    B: int
    Y: int
    C: int
    Z: int

    def __post_init__(self):
        for name in ("A", "X", "B", "Y", "C", "Z"):
            value = getattr(self, name)
            if value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value}")

    @classmethod
    def parse(cls, text: str) -> "BealTriple":
        """Parse 'A,X,B,Y,C,Z' with six comma-separated positive integers."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 6:
            raise ValueError(f"expected six comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    @property
    def ax(self) -> int:
        return self.A ** self.X

    @property
    def by(self) -> int:
        return self.B ** self.Y

    @property
    def cz(self) -> int:
        return self.C ** self.Z

    @property
    def equation_holds(self) -> bool:
        return self.ax + self.by == self.cz

    @property
    def gcd_abc(self) -> int:
        return math.gcd(self.A, self.B, self.C)

    def canonical(self) -> "BealTriple":
        """Reduce all bases and order the left side so A**X <= B**Y."""
        a, x = reduce_base(self.A, self.X) if self.A >= 2 else (self.A, self.X)
        b, y = reduce_base(self.B, self.Y) if self.B >= 2 else (self.B, self.Y)
        c, z = reduce_base(self.C, self.Z) if self.C >= 2 else (self.C, self.Z)
        if a ** x > b ** y:
            a, x, b, y = b, y, a, x
        return BealTriple(a, x, b, y, c, z)

    def __str__(self) -> str:
        return f"{self.A}^{self.X} + {self.B}^{self.Y} = {self.C}^{self.Z}"

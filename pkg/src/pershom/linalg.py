"""Prime fields and exact linear algebra mod p used by the homology kernels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MR_BASES = (2, 3, 5, 7, 11, 13, 17)  # deterministic below 3.4e14


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17):
        if n == small:
            return True
        if n % small == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


@dataclass(frozen=True)
class PrimeField:
    """The field with p elements; any prime 2 <= p < 2**31 is accepted."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p < 2**31):
            raise ValueError(f"characteristic out of range: {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)


GF2 = PrimeField(2)
GF3 = PrimeField(3)


def gf_rank(matrix: np.ndarray, field: PrimeField) -> int:
    """Rank of an integer matrix over F_p by fraction-free row elimination."""
    if matrix.size == 0:
        return 0
    p = field.p
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        pivot = None
        for r in range(rank, rows):
            if a[r, col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = a[rank] * field.inv(int(a[rank, col])) % p
        below = a[rank + 1 :, col] != 0
        if below.any():
            a[rank + 1 :][below] = (
                a[rank + 1 :][below] - np.outer(a[rank + 1 :, col][below], a[rank])
            ) % p
        rank += 1
        if rank == rows:
            break
    return rank


__all__ = ["PrimeField", "GF2", "GF3", "is_prime", "gf_rank"]

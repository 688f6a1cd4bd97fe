"""Completely depolarizing channels built from an orthogonal unitary basis.

The channel is realized by Kraus summation over the d^2 Heisenberg-Weyl
(clock-and-shift) operators.  Any orthogonal unitary operator basis would do;
the Weyl operators are deterministic and dimension-generic, which keeps
cross-term behavior reproducible in regression tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import DimensionMismatchError, DimensionOutOfRangeError
from .linalg import dagger

MIN_DIM = 2
MAX_DIM = 16


@dataclass(frozen=True)
class UnitaryBasis:
    """An orthogonal basis of d^2 unitary operators on a d-level system.

    ``ops`` has shape (d^2, d, d).  Orthogonality means
    Tr(U_i^dagger U_j) = d * delta_ij.
    """

    dim: int
    ops: np.ndarray

    def __post_init__(self) -> None:
        d = self.dim
        if self.ops.shape != (d * d, d, d):
            raise DimensionMismatchError(
                f"expected {(d * d, d, d)} operators, got shape {self.ops.shape}"
            )
        self.ops.setflags(write=False)

    def __len__(self) -> int:
        return self.ops.shape[0]

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.ops)


def weyl_basis(dim: int) -> UnitaryBasis:
    """The d^2 clock-and-shift operators X^a Z^b, a, b in {0..d-1}.

    X cycles the computational basis (X|k> = |k+1 mod d>) and Z applies the
    phase ladder (Z|k> = w^k |k> with w = exp(2 pi i / d)).  The element at
    (a=0, b=0) is the identity.
    """
    if not MIN_DIM <= dim <= MAX_DIM:
        raise DimensionOutOfRangeError(
            f"dimension {dim} outside supported range [{MIN_DIM}, {MAX_DIM}]"
        )
    omega = np.exp(2j * np.pi / dim)
    ops = np.zeros((dim * dim, dim, dim), dtype=complex)
    for a in range(dim):
        for b in range(dim):
            op = ops[a * dim + b]
            # (X^a Z^b)|k> = w^(b k) |k + a mod d>
            for k in range(dim):
                op[(k + a) % dim, k] = omega ** (b * k)
    return UnitaryBasis(dim=dim, ops=ops)


def depolarize(basis: UnitaryBasis, rho: np.ndarray) -> np.ndarray:
    """Apply the completely depolarizing channel by explicit Kraus summation.

    Returns (1/d^2) * sum_i U_i rho U_i^dagger, which equals
    Tr(rho) * I / d for any input.  The sum is evaluated literally so the
    result can serve as a brute-force reference for the closed form.
    """
    rho = np.asarray(rho, dtype=complex)
    d = basis.dim
    if rho.shape != (d, d):
        raise DimensionMismatchError(
            f"state has shape {rho.shape}, basis dimension is {d}"
        )
    return np.einsum("kij,jl,kml->im", basis.ops, rho, basis.ops.conj()) / (d * d)


def check_completeness(kraus: Iterable[np.ndarray]) -> float:
    """Max-norm residual of the trace-preservation condition.

    Returns ``max |sum_i K_i^dagger K_i - I|`` over matrix entries.  A value
    below ~1e-12 certifies the operators form a valid channel.
    """
    operators = [np.asarray(k, dtype=complex) for k in kraus]
    if not operators:
        raise ValueError("empty Kraus list")
    dim = operators[0].shape[0]
    for k in operators:
        if k.shape != (dim, dim):
            raise DimensionMismatchError(
                f"Kraus operators must share a square shape, got {k.shape}"
            )
    acc = np.zeros((dim, dim), dtype=complex)
    for k in operators:
        acc += dagger(k) @ k
    return float(np.abs(acc - np.eye(dim)).max())

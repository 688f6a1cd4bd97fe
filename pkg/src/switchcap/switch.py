"""Exact brute-force simulation of a quantum switch of depolarizing channels.

A switch routes the target system through N channels in a coherent
superposition of M causal orders, steered by an M-level control ancilla.
Each causal order is a permutation of the channel slots; the order
(s0, s1, ..., s_{N-1}) composes channel s0's unitary leftmost, i.e. applied
last.  With Kraus index tuple t = (t_0, ..., t_{N-1}) assigning basis element
U_{t_k} to channel k, the switch Kraus operator is

    K_t = (1/d^N) * sum_l |l><l| (x) U_{t_{s_l(0)}} U_{t_{s_l(1)}} ... U_{t_{s_l(N-1)}}

summed over the M orders l.  The joint output on (control (x) target) is the
Kraus sum over all d^(2N) index tuples.  Everything is summed in a fixed
deterministic sequence, so results are bit-stable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .channels import UnitaryBasis
from .errors import (
    DimensionMismatchError,
    DomainError,
    InvalidStateError,
    SizeGuardError,
)
from .linalg import hermitian_spectrum, validate_density_matrix, von_neumann_entropy

# Brute-force summation budget in elementary operations; keeps a verify run
# under about a minute at desk scale.
OPERATION_BUDGET = 10**9

# Largest channel count for full permutation enumeration.
MAX_FACTORIAL_CHANNELS = 5

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class OrderSet:
    """A list of M distinct causal orders over N channel slots."""

    orders: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise ValueError("an order set needs at least one order")
        n = len(self.orders[0])
        if n < 2:
            raise ValueError("orders must involve at least two channels")
        reference = tuple(range(n))
        for order in self.orders:
            if tuple(sorted(order)) != reference:
                raise ValueError(f"{order!r} is not a permutation of 0..{n - 1}")
        if len(set(self.orders)) != len(self.orders):
            raise ValueError("duplicate causal orders")

    @property
    def n_channels(self) -> int:
        return len(self.orders[0])

    @property
    def m_orders(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class ControlAmplitudes:
    """Nonnegative control amplitudes c_i with sum of squares equal to 1."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise InvalidStateError("empty amplitude vector")
        if min(self.values) < 0.0:
            raise InvalidStateError("amplitudes must be nonnegative")
        total = sum(v * v for v in self.values)
        if abs(total - 1.0) > 1e-12:
            raise InvalidStateError(f"squared amplitudes sum to {total!r}, expected 1")

    @classmethod
    def uniform(cls, m: int) -> "ControlAmplitudes":
        if m < 1:
            raise DomainError(f"need at least one order, got {m}")
        return cls(values=tuple([1.0 / math.sqrt(m)] * m))

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


@dataclass
class SwitchOutput:
    """Joint control (x) target output state with its block decomposition."""

    m_orders: int
    dim: int
    state: np.ndarray

    def __post_init__(self) -> None:
        expected = self.m_orders * self.dim
        if self.state.shape != (expected, expected):
            raise DimensionMismatchError(
                f"state has shape {self.state.shape}, expected ({expected}, {expected})"
            )
        validate_density_matrix(self.state)
        self.state.setflags(write=False)

    def block(self, i: int, j: int) -> np.ndarray:
        """Read-only view of the (i, j) control sector, a dim x dim matrix."""
        d = self.dim
        return self.state[i * d : (i + 1) * d, j * d : (j + 1) * d]

    @property
    def control_blocks(self) -> list[list[np.ndarray]]:
        m = self.m_orders
        return [[self.block(i, j) for j in range(m)] for i in range(m)]


def cyclic_orders(n_channels: int) -> OrderSet:
    """The N cyclic shifts of (0, 1, ..., N-1), identity first."""
    if n_channels < 2:
        raise DomainError(f"need at least two channels, got {n_channels}")
    orders = tuple(
        tuple((shift + i) % n_channels for i in range(n_channels))
        for shift in range(n_channels)
    )
    return OrderSet(orders=orders)


def all_orders(n_channels: int) -> OrderSet:
    """All N! permutations in lexicographic order."""
    if n_channels < 2:
        raise DomainError(f"need at least two channels, got {n_channels}")
    if n_channels > MAX_FACTORIAL_CHANNELS:
        raise SizeGuardError(
            f"{n_channels}! orders exceeds the enumeration guard "
            f"(max {MAX_FACTORIAL_CHANNELS} channels)"
        )
    return OrderSet(orders=tuple(itertools.permutations(range(n_channels))))


def cyclically_related(a: Permutation, b: Permutation) -> bool:
    """True when one order is a cyclic shift of the other."""
    n = len(a)
    if len(b) != n:
        return False
    return any(tuple(a[(i + k) % n] for i in range(n)) == tuple(b) for k in range(n))


def check_size_guard(orders: OrderSet, dim: int) -> None:
    """Reject brute-force requests above the operation budget."""
    m = orders.m_orders
    n = orders.n_channels
    cost = m * m * dim ** (2 * n) * (m * dim) ** 2
    if cost > OPERATION_BUDGET:
        raise SizeGuardError(
            f"N={n}, d={dim}, M={m} needs ~{cost:.2e} operations "
            f"(budget {OPERATION_BUDGET:.0e})"
        )


def _tuple_indices(n_channels: int, basis_size: int) -> np.ndarray:
    """All Kraus index tuples as an integer array of shape (basis_size^N, N)."""
    return np.array(
        list(itertools.product(range(basis_size), repeat=n_channels)), dtype=np.intp
    )


def _order_products(
    order_list: Sequence[Permutation], basis: UnitaryBasis, tuples: np.ndarray
) -> np.ndarray:
    """Per-tuple composed unitaries, shape (tuples, orders, d, d)."""
    stacked = []
    for order in order_list:
        prod = basis.ops[tuples[:, order[0]]]
        for slot in order[1:]:
            prod = prod @ basis.ops[tuples[:, slot]]
        stacked.append(prod)
    return np.stack(stacked, axis=1)


def _raw_block(products: np.ndarray, i: int, j: int, rho: np.ndarray, scale: float) -> np.ndarray:
    """(1/d^2N) sum_t P_i(t) rho P_j(t)^dagger for precomputed products."""
    return np.einsum("tab,bc,tdc->ad", products[:, i], rho, products[:, j].conj()) / scale


def _output_matrix(
    products: np.ndarray, amplitudes: np.ndarray, rho: np.ndarray, dim: int, scale: float
) -> np.ndarray:
    m = products.shape[1]
    out = np.zeros((m * dim, m * dim), dtype=complex)
    for i in range(m):
        for j in range(i, m):
            blk = amplitudes[i] * amplitudes[j] * _raw_block(products, i, j, rho, scale)
            out[i * dim : (i + 1) * dim, j * dim : (j + 1) * dim] = blk
            if j != i:
                out[j * dim : (j + 1) * dim, i * dim : (i + 1) * dim] = blk.conj().T
    return out


def build_switch_kraus(orders: OrderSet, basis: UnitaryBasis) -> list[np.ndarray]:
    """The d^(2N) switch Kraus operators, each of shape (M*d, M*d).

    Operator t is block-diagonal over the control index, with block l equal
    to the basis unitaries for tuple t composed in the l-th causal order,
    scaled by 1/d^N overall.
    """
    check_size_guard(orders, basis.dim)
    d = basis.dim
    n = orders.n_channels
    m = orders.m_orders
    tuples = _tuple_indices(n, d * d)
    products = _order_products(orders.orders, basis, tuples)
    kraus = np.zeros((len(tuples), m * d, m * d), dtype=complex)
    for l in range(m):
        kraus[:, l * d : (l + 1) * d, l * d : (l + 1) * d] = products[:, l]
    kraus /= float(d**n)
    return list(kraus)


def apply_switch(
    orders: OrderSet,
    basis: UnitaryBasis,
    amplitudes: ControlAmplitudes | Sequence[float],
    rho: np.ndarray,
) -> SwitchOutput:
    """Exact Kraus-sum output of the switch on (sum_i c_i |i>) control.

    The input target state ``rho`` must match the basis dimension.  The
    result satisfies the density-matrix invariants by construction and is
    validated before being returned.
    """
    if not isinstance(amplitudes, ControlAmplitudes):
        amplitudes = ControlAmplitudes(values=tuple(float(v) for v in amplitudes))
    rho = np.asarray(rho, dtype=complex)
    d = basis.dim
    if rho.shape != (d, d):
        raise DimensionMismatchError(
            f"target state has shape {rho.shape}, basis dimension is {d}"
        )
    if len(amplitudes) != orders.m_orders:
        raise DimensionMismatchError(
            f"{len(amplitudes)} amplitudes for {orders.m_orders} orders"
        )
    check_size_guard(orders, d)
    tuples = _tuple_indices(orders.n_channels, d * d)
    products = _order_products(orders.orders, basis, tuples)
    scale = float(d ** (2 * orders.n_channels))
    state = _output_matrix(products, amplitudes.as_array(), rho, d, scale)
    return SwitchOutput(m_orders=orders.m_orders, dim=d, state=state)


def cross_term(
    orders: OrderSet, basis: UnitaryBasis, i: int, j: int, rho: np.ndarray
) -> np.ndarray:
    """Raw (i, j) control block before amplitude scaling.

    Returns (1/d^2N) sum over index tuples of P_i(t) rho P_j(t)^dagger.  For
    cyclically related orders this collapses to rho / d^2; other pairs are
    summed faithfully and simply reported, whatever their structure.
    """
    m = orders.m_orders
    if i == j or not (0 <= i < m and 0 <= j < m):
        raise DomainError(f"need two distinct block indices below {m}, got ({i}, {j})")
    rho = np.asarray(rho, dtype=complex)
    d = basis.dim
    if rho.shape != (d, d):
        raise DimensionMismatchError(
            f"target state has shape {rho.shape}, basis dimension is {d}"
        )
    check_size_guard(orders, d)
    tuples = _tuple_indices(orders.n_channels, d * d)
    products = _order_products([orders.orders[i], orders.orders[j]], basis, tuples)
    return _raw_block(products, 0, 1, rho, float(d ** (2 * orders.n_channels)))


def haar_random_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure state vector from complex Gaussian entries."""
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_density_matrix(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Full-rank random density matrix A A^dagger / Tr(A A^dagger)."""
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def holevo_oracle(
    orders: OrderSet,
    basis: UnitaryBasis,
    n_samples: int = 64,
    seed: int = 42,
) -> float:
    """Sampled lower bound on the switch Holevo quantity, in bits.

    Evaluates S(output on the maximally mixed input) minus the smallest
    output entropy over the sample set, using uniform control amplitudes.
    The sample set always contains the d computational basis states, then
    ``n_samples - d`` Haar-random pure states drawn from the seeded
    generator; for cyclic order sets the minimum is attained at pure basis
    states, so the bound is tight there.  Adding samples can only lower the
    reported minimum, never raise it.
    """
    if n_samples < 1:
        raise DomainError(f"need at least one sample, got {n_samples}")
    d = basis.dim
    check_size_guard(orders, d)
    tuples = _tuple_indices(orders.n_channels, d * d)
    products = _order_products(orders.orders, basis, tuples)
    scale = float(d ** (2 * orders.n_channels))
    amplitudes = ControlAmplitudes.uniform(orders.m_orders).as_array()

    def output_entropy(rho: np.ndarray) -> float:
        state = _output_matrix(products, amplitudes, rho, d, scale)
        return von_neumann_entropy(hermitian_spectrum(state))

    mixed_entropy = output_entropy(np.eye(d, dtype=complex) / d)

    rng = np.random.default_rng(seed)
    vectors = [np.eye(d, dtype=complex)[k] for k in range(d)]
    for _ in range(max(0, n_samples - d)):
        vectors.append(haar_random_state(d, rng))
    min_entropy = min(output_entropy(np.outer(v, v.conj())) for v in vectors)
    return mixed_entropy - min_entropy

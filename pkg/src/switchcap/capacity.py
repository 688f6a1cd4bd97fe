"""Closed-form communication rates for depolarizing channels in a switch.

All quantities depend on the number of superposed causal orders M and the
target dimension d alone; the number of channels enters only through the
brute-force oracle.  Control amplitudes are uniform (1/sqrt(M)) throughout,
and every entropy is in bits.

The joint output state for a target state rho is the M x M block matrix with
I/d (1/M-weighted) on the diagonal and rho/d^2 (1/M-weighted) off the
diagonal.  Its spectrum splits into two families driven by the eigenvalues
p of rho:

    1/(M d) + (M - 1) p / (M d^2)   once per p,
    1/(M d) -           p / (M d^2)   with multiplicity M - 1 per p.

The reduced control state has the single eigenvalue (M - 1 + d^2) / (M d^2)
plus (d^2 - 1) / (M d^2) with multiplicity M - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionOutOfRangeError, DomainError, InvalidSpectrumError, InvalidStateError
from .linalg import DENSITY_PSD_TOL, hermitian_spectrum
from .switch import ControlAmplitudes

# Largest joint dimension M*d accepted by the determinant check.
MAX_DETERMINANT_DIM = 256


@dataclass(frozen=True)
class CapacityReport:
    """Communication-rate summary for one (M, d) point, all values in bits."""

    m_orders: int
    dim: int
    s_min: float
    s_control: float
    chi: float


def _check_point(m_orders: int, dim: int) -> None:
    if m_orders < 1:
        raise DomainError(f"number of orders must be >= 1, got {m_orders}")
    if dim < 2:
        raise DomainError(f"target dimension must be >= 2, got {dim}")


def output_spectrum(m_orders: int, dim: int, rho_spectrum: np.ndarray) -> np.ndarray:
    """Spectrum of the joint output state for a target with the given spectrum.

    Returns the M*d values sorted in descending order; they sum to 1.
    """
    _check_point(m_orders, dim)
    p = np.asarray(rho_spectrum, dtype=float).ravel()
    if p.size != dim:
        raise InvalidSpectrumError(f"expected {dim} eigenvalues, got {p.size}")
    if float(p.min()) < -DENSITY_PSD_TOL or float(p.max()) > 1.0 + DENSITY_PSD_TOL:
        raise InvalidSpectrumError("eigenvalues outside [0, 1]")
    if abs(float(p.sum()) - 1.0) > 1e-8:
        raise InvalidSpectrumError(f"eigenvalues sum to {p.sum()!r}, expected 1")
    base = 1.0 / (m_orders * dim)
    plus = base + (m_orders - 1) * p / (m_orders * dim * dim)
    minus = base - p / (m_orders * dim * dim)
    values = np.concatenate([plus, np.tile(minus, m_orders - 1)])
    return np.sort(values)[::-1]


def s_min(m_orders: int, dim: int) -> float:
    """Smallest output entropy over target states, attained at pure inputs."""
    _check_point(m_orders, dim)
    m, d = m_orders, dim
    if m == 1:
        return math.log2(d)
    md2 = m * d * d
    top = (d + m - 1) / md2
    low = (d - 1) / md2
    return -(
        top * math.log2(top)
        + (m - 1) * (d - 1) / md2 * math.log2(low)
        + (d - 1) / d * math.log2(1.0 / (m * d))
    )


def control_entropy(m_orders: int, dim: int) -> float:
    """Entropy of the reduced control state after the switch."""
    _check_point(m_orders, dim)
    m, d = m_orders, dim
    if m == 1:
        return 0.0
    md2 = m * d * d
    top = (m - 1 + d * d) / md2
    rest = (d * d - 1) / md2
    return -(top * math.log2(top) + (m - 1) * rest * math.log2(rest))


def holevo(m_orders: int, dim: int) -> CapacityReport:
    """Holevo quantity log2(d) + S(control) - S_min for M superposed orders.

    A single order (M=1) transmits nothing: chi is exactly 0.
    """
    _check_point(m_orders, dim)
    smin = s_min(m_orders, dim)
    scontrol = control_entropy(m_orders, dim)
    chi = math.log2(dim) + scontrol - smin
    return CapacityReport(
        m_orders=m_orders, dim=dim, s_min=smin, s_control=scontrol, chi=chi
    )


def asymptotic_limit(dim: int) -> float:
    """The M -> infinity limit of the Holevo quantity, in bits.

    The log2(M) terms of the control entropy and the min-entropy cancel,
    leaving

        (2d - 1)/d * log2(d)
        - (d^2 - 1)/d^2 * log2(d + 1)
        - (d - 1)/d * log2(d - 1).

    For d = 2 this is (3/2) - (3/4) log2(3) ~ 0.3113 bits: adding causal
    orders saturates short of a full bit.
    """
    if dim < 2:
        raise DomainError(f"target dimension must be >= 2, got {dim}")
    d = float(dim)
    return (
        (2.0 * d - 1.0) / d * math.log2(d)
        - (d * d - 1.0) / (d * d) * math.log2(d + 1.0)
        - (d - 1.0) / d * math.log2(d - 1.0)
    )


def analytic_output_state(
    rho: np.ndarray,
    m_orders: int,
    amplitudes: ControlAmplitudes | None = None,
) -> np.ndarray:
    """Closed-form joint output state as an (M*d) x (M*d) matrix.

    Block (i, i) is c_i^2 * I/d and block (i, j) is c_i c_j * rho/d^2.
    Defaults to uniform amplitudes.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"expected a square state, got shape {rho.shape}")
    if m_orders < 1:
        raise DomainError(f"number of orders must be >= 1, got {m_orders}")
    if amplitudes is None:
        amplitudes = ControlAmplitudes.uniform(m_orders)
    if len(amplitudes) != m_orders:
        raise DomainError(f"{len(amplitudes)} amplitudes for {m_orders} orders")
    c = amplitudes.as_array()
    d = rho.shape[0]
    diag_block = np.eye(d, dtype=complex) / d
    off_block = rho / (d * d)
    out = np.zeros((m_orders * d, m_orders * d), dtype=complex)
    for i in range(m_orders):
        for j in range(m_orders):
            block = diag_block if i == j else off_block
            out[i * d : (i + 1) * d, j * d : (j + 1) * d] = c[i] * c[j] * block
    return out


def _log_det_psd(matrix: np.ndarray) -> float:
    """log of the determinant of a positive definite Hermitian matrix."""
    values = hermitian_spectrum(matrix)
    if float(values[-1]) <= 0.0:
        raise InvalidStateError(
            f"matrix is not positive definite (smallest eigenvalue {values[-1]:.3e})"
        )
    return float(np.log(values).sum())


def det_factorization_residual(
    m_orders: int,
    basis_dim: int,
    rho: np.ndarray,
    amplitudes: ControlAmplitudes,
) -> float:
    """Relative mismatch of the block determinant factorization.

    The determinant of the joint output state factors into the determinant
    of (I/d + (M-1) rho/d^2)/M times the determinant of (I/d - rho/d^2)/M
    repeated M-1 times.  Both sides are evaluated in log space (sums of log
    eigenvalues) because the full determinant underflows fixed precision
    once M*d grows past ~50.  The factorization holds for uniform amplitudes
    only, so any other amplitude vector is rejected.
    """
    _check_point(m_orders, basis_dim)
    if m_orders * basis_dim > MAX_DETERMINANT_DIM:
        raise DimensionOutOfRangeError(
            f"joint dimension {m_orders * basis_dim} exceeds {MAX_DETERMINANT_DIM}"
        )
    uniform = 1.0 / math.sqrt(m_orders)
    if len(amplitudes) != m_orders or any(
        abs(v - uniform) > 1e-12 for v in amplitudes.values
    ):
        raise DomainError("the determinant factorization requires uniform amplitudes")
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (basis_dim, basis_dim):
        raise DomainError(
            f"state has shape {rho.shape}, expected ({basis_dim}, {basis_dim})"
        )

    log_full = _log_det_psd(analytic_output_state(rho, m_orders, amplitudes))
    d = basis_dim
    eye = np.eye(d, dtype=complex)
    plus_factor = (eye / d + (m_orders - 1) * rho / (d * d)) / m_orders
    minus_factor = (eye / d - rho / (d * d)) / m_orders
    log_factored = _log_det_psd(plus_factor)
    if m_orders > 1:
        log_factored += (m_orders - 1) * _log_det_psd(minus_factor)
    return abs(math.expm1(log_factored - log_full))

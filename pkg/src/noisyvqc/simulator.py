"""Exact density-matrix evolution of two-qubit circuits.

States are 4x4 complex density matrices evolved instruction by
instruction: unitaries act as ``rho -> U rho U^dag`` and noise
instructions through their Kraus sums.  Expectation values are computed
analytically (no shot sampling), so repeated runs are exactly
reproducible and training curves carry no statistical noise.

Readout is the Pauli-Z expectation of qubit 0 only, i.e.
``Tr(rho (Z kron I))``.
"""

from __future__ import annotations

import numpy as np

from .channels import apply_channel, build_channel, embed_kraus
from .circuit import (
    CNOT,
    RX,
    RY,
    RZ,
    ChannelOp,
    Circuit,
    GateOp,
    Rot,
    cnot_matrix,
    rot_matrix,
    rx_matrix,
    ry_matrix,
    rz_matrix,
)
from .linalg import I2, dagger, is_hermitian, kron, min_eigenvalue

TRACE_TOL = 1e-10
HERMITICITY_TOL = 1e-10
PSD_TOL = 1e-10
#: imaginary residue beyond this in an expectation value signals a bug upstream
IMAG_RESIDUE_LIMIT = 1e-8


def init_state() -> np.ndarray:
    """Density matrix of |00>, i.e. ``diag(1, 0, 0, 0)``."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0
    return rho


def full_unitary(op: GateOp) -> np.ndarray:
    """The 4x4 register unitary realizing a unitary instruction."""
    if isinstance(op, RX):
        local = rx_matrix(op.angle)
    elif isinstance(op, RY):
        local = ry_matrix(op.angle)
    elif isinstance(op, RZ):
        local = rz_matrix(op.angle)
    elif isinstance(op, Rot):
        local = rot_matrix(op.phi, op.theta, op.omega)
    elif isinstance(op, CNOT):
        return cnot_matrix(op.control, op.target)
    else:
        raise ValueError(f"not a unitary instruction: {op!r}")
    return kron(local, I2) if op.target == 0 else kron(I2, local)


def apply_unitary(rho: np.ndarray, op: GateOp) -> np.ndarray:
    """Conjugate ``rho`` by the register unitary of ``op``."""
    if isinstance(op, ChannelOp):
        raise ValueError("channel instructions must go through apply_instruction")
    u = full_unitary(op)
    return u @ rho @ dagger(u)


def apply_instruction(rho: np.ndarray, op: GateOp) -> np.ndarray:
    """Advance ``rho`` by one instruction of either variant."""
    if isinstance(op, ChannelOp):
        return apply_channel(rho, build_channel(op.kind, op.probability), op.target)
    return apply_unitary(rho, op)


def expectation_z0(rho: np.ndarray) -> float:
    """Pauli-Z expectation of qubit 0: ``Tr(rho (Z kron I))``."""
    value = rho[0, 0] + rho[1, 1] - rho[2, 2] - rho[3, 3]
    if abs(value.imag) > IMAG_RESIDUE_LIMIT:
        raise ValueError(f"expectation has imaginary residue {value.imag:g}")
    return float(value.real)


def validate_density_matrix(
    rho: np.ndarray,
    trace_tol: float = TRACE_TOL,
    herm_tol: float = HERMITICITY_TOL,
    psd_tol: float = PSD_TOL,
) -> None:
    """Raise if ``rho`` is not trace-1, Hermitian, and PSD within tolerance."""
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"trace deviates from 1 by {abs(tr - 1.0):g}")
    if not is_hermitian(rho, herm_tol):
        raise ValueError("state is not Hermitian within tolerance")
    lo = min_eigenvalue(rho, herm_tol)
    if lo < -psd_tol:
        raise ValueError(f"state has negative eigenvalue {lo:g}")


def run(circuit: Circuit, check: bool = False) -> float:
    """Fold |00><00| through all instructions and read out <Z> on qubit 0.

    With ``check=True`` the density-matrix invariants are validated
    after every instruction; leave it off in hot loops.
    """
    rho = init_state()
    for op in circuit.ops:
        rho = apply_instruction(rho, op)
        if check:
            validate_density_matrix(rho)
    return expectation_z0(rho)


__all__ = [
    "init_state",
    "full_unitary",
    "apply_unitary",
    "apply_instruction",
    "expectation_z0",
    "validate_density_matrix",
    "run",
    "embed_kraus",
]

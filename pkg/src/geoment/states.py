"""Pure states, product states and density matrices over qubits.

Index convention: qubit 1 is the most significant bit of a basis index, so
amplitude ``k`` of an n-qubit vector belongs to the bitstring
``format(k, f"0{n}b")``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

NORM_TOL = 1e-12
PSD_TOL = 1e-10


class DomainError(ValueError):
    """Raised when a family point lies outside the simplex x, y >= 0, x + y <= 1."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector of length 2**n_qubits."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _frozen(np.ravel(self.amplitudes))
        n = int(round(np.log2(amps.size))) if amps.size else 0
        if amps.size < 2 or 2**n != amps.size:
            raise ValueError(f"amplitude length {amps.size} is not a power of two")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (norm = {norm!r})")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_qubits(self) -> int:
        return int(round(np.log2(self.amplitudes.size)))

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to ``(2,) * n_qubits``, axis i being qubit i + 1."""
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def projector(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def overlap(self, other: "PureState | ProductState") -> complex:
        """<other|self>."""
        if isinstance(other, ProductState):
            other = other.to_pure()
        return complex(np.vdot(other.amplitudes, self.amplitudes))

    @classmethod
    def from_unnormalized(cls, amplitudes) -> "PureState":
        amps = np.asarray(amplitudes, dtype=complex).ravel()
        return cls(amps / np.linalg.norm(amps))


@dataclass(frozen=True)
class ProductState:
    """One normalized complex 2-vector per qubit."""

    site_coefficients: tuple

    def __post_init__(self):
        sites = tuple(_frozen(c) for c in self.site_coefficients)
        if not sites:
            raise ValueError("a product state needs at least one site")
        for i, c in enumerate(sites):
            if c.shape != (2,):
                raise ValueError(f"site {i} vector has shape {c.shape}, expected (2,)")
            if abs(np.linalg.norm(c) - 1.0) > NORM_TOL:
                raise ValueError(f"site {i} vector is not normalized")
        object.__setattr__(self, "site_coefficients", sites)

    @property
    def n_qubits(self) -> int:
        return len(self.site_coefficients)

    def to_pure(self) -> PureState:
        amps = self.site_coefficients[0]
        for c in self.site_coefficients[1:]:
            amps = np.kron(amps, c)
        return PureState(amps)

    @classmethod
    def from_unnormalized(cls, sites: Sequence) -> "ProductState":
        return cls(tuple(np.asarray(c, dtype=complex) / np.linalg.norm(c) for c in sites))

    @classmethod
    def basis(cls, bits: Sequence[int]) -> "ProductState":
        return cls(tuple(np.eye(2)[b] for b in bits))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, trace-one, positive semidefinite 2**n x 2**n matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.matrix)
        dim = m.shape[0]
        if m.ndim != 2 or m.shape != (dim, dim) or dim < 2 or dim & (dim - 1):
            raise ValueError(f"bad density matrix shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > NORM_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > NORM_TOL:
            raise ValueError("density matrix trace differs from 1")
        if np.linalg.eigvalsh(m)[0] < -PSD_TOL:
            raise ValueError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "matrix", m)

    @property
    def n_qubits(self) -> int:
        return int(round(np.log2(self.matrix.shape[0])))

    @classmethod
    def maximally_mixed(cls, n_qubits: int) -> "DensityMatrix":
        dim = 2**n_qubits
        return cls(np.eye(dim) / dim)


@dataclass(frozen=True)
class FamilyPoint:
    """Mixture weights (x, y) of GHZ and W; the inverted-W weight is 1 - x - y.

    ``phases`` optionally decorates the three pure-state coefficients with
    e^{i phi_k}; it is only meaningful for the pure-state constructor.
    """

    x: float
    y: float
    phases: tuple[float, float, float] | None = None

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (np.isfinite(x) and np.isfinite(y)):
            raise DomainError("x and y must be finite")
        if x < 0 or y < 0:
            raise DomainError(f"negative weight: x={x}, y={y}")
        if x + y > 1 + 1e-12:
            raise DomainError(f"x + y exceeds 1: x={x}, y={y}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if self.phases is not None:
            if len(self.phases) != 3:
                raise ValueError("phases must be a triple")
            object.__setattr__(self, "phases", tuple(float(p) for p in self.phases))

    @property
    def z(self) -> float:
        """Inverted-W weight, clamped at 0 against rounding on the x + y = 1 edge."""
        return max(0.0, 1.0 - self.x - self.y)

    @property
    def r(self) -> float:
        """Coordinate with y = (1 - x) r; taken as 1/2 at the GHZ corner."""
        return 0.5 if self.x >= 1.0 else self.y / (1.0 - self.x)

    @classmethod
    def from_xr(cls, x: float, r: float) -> "FamilyPoint":
        if not 0.0 <= r <= 1.0:
            raise DomainError(f"r must lie in [0, 1], got {r}")
        return cls(x, (1.0 - x) * r)


def _basis_sum(bitstrings: Sequence[str]) -> np.ndarray:
    v = np.zeros(2 ** len(bitstrings[0]), dtype=complex)
    for b in bitstrings:
        v[int(b, 2)] = 1.0
    return v / np.sqrt(len(bitstrings))


_GHZ = _basis_sum(["000", "111"])
_W = _basis_sum(["001", "010", "100"])
_W_TILDE = _basis_sum(["110", "101", "011"])


def make_ghz() -> PureState:
    return PureState(_GHZ)


def make_w() -> PureState:
    return PureState(_W)


def make_w_tilde() -> PureState:
    return PureState(_W_TILDE)


def family_pure_state(point: FamilyPoint) -> PureState:
    """sqrt(x) e^{i phi1}|GHZ> + sqrt(y) e^{i phi2}|W> + sqrt(1-x-y) e^{i phi3}|W~>."""
    phases = point.phases or (0.0, 0.0, 0.0)
    weights = np.sqrt([point.x, point.y, point.z]) * np.exp(1j * np.asarray(phases))
    amps = weights[0] * _GHZ + weights[1] * _W + weights[2] * _W_TILDE
    # x + y may overshoot 1 by the domain slack; renormalize that away.
    return PureState(amps / np.linalg.norm(amps))


def family_density_matrix(point: FamilyPoint) -> DensityMatrix:
    """x|GHZ><GHZ| + y|W><W| + (1-x-y)|W~><W~|."""
    if point.phases is not None:
        raise ValueError("the mixed family carries no phases")
    total = point.x + point.y + point.z
    m = sum(
        (w / total) * np.outer(v, v.conj())
        for w, v in ((point.x, _GHZ), (point.y, _W), (point.z, _W_TILDE))
    )
    return DensityMatrix(m)


def phase_unitary(k: int, n_qubits: int = 3) -> np.ndarray:
    """|0> -> |0>, |1> -> g^k |1> on every qubit, g = exp(2 pi i / 3)."""
    g = np.exp(2j * np.pi / 3)
    weights = np.array([bin(b).count("1") for b in range(2**n_qubits)])
    return np.diag(g ** (k * weights))


def twirl(rho: DensityMatrix) -> DensityMatrix:
    """Average of U_k rho U_k^dagger over k = 1, 2, 3."""
    if rho.n_qubits != 3:
        raise ValueError("twirl is defined for three qubits")
    acc = np.zeros_like(rho.matrix)
    for k in (1, 2, 3):
        u = phase_unitary(k)
        acc = acc + u @ rho.matrix @ u.conj().T
    return DensityMatrix(acc / 3)


def permute_qubits(rho: DensityMatrix, order: Sequence[int]) -> DensityMatrix:
    """Relabel qubits so that new qubit i is old qubit ``order[i]`` (0-based)."""
    n = rho.n_qubits
    if sorted(order) != list(range(n)):
        raise ValueError(f"{order} is not a permutation of range({n})")
    t = rho.matrix.reshape((2,) * (2 * n))
    t = t.transpose(list(order) + [n + o for o in order])
    return DensityMatrix(t.reshape(2**n, 2**n))


def apply_local_unitaries(psi: PureState, unitaries: Sequence[np.ndarray]) -> PureState:
    """Apply one 2x2 unitary per qubit."""
    if len(unitaries) != psi.n_qubits:
        raise ValueError("need one unitary per qubit")
    t = psi.tensor()
    for axis, u in enumerate(unitaries):
        t = np.moveaxis(np.tensordot(u, t, axes=([1], [axis])), 0, axis)
    return PureState(t.ravel())

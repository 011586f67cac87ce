"""Occupation-number (Fock) bases and second-quantized operators.

Conventions used throughout the package:

* Modes are labelled 1..L.  An occupation state is a plain tuple of
  non-negative integers ``(n_1, ..., n_L)``.
* The basis ket ``|n_1 ... n_L>`` stands for the canonically ordered
  operator string ``(c_1^+)^{n_1} ... (c_L^+)^{n_L} |0>``, with bosonic
  kets carrying the usual ``1/sqrt(n_i!)`` normalization.  Under this
  convention ket labels are sign-free and every fermionic sign lives in
  the operator application rules below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np


class Statistics(Enum):
    """Exchange statistics of the identical particles."""

    BOSONS = "bosons"
    FERMIONS = "fermions"

    @property
    def exclusive(self) -> bool:
        """True when at most one particle may occupy a mode."""
        return self is Statistics.FERMIONS

    @classmethod
    def from_name(cls, name: str) -> "Statistics":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown statistics {name!r}; use 'bosons' or 'fermions'")


def _occupation_vectors(n_modes: int, n_particles: int, cap: int):
    """Yield occupation tuples in lexicographically ascending order."""
    if n_modes == 1:
        if n_particles <= cap:
            yield (n_particles,)
        return
    for first in range(min(cap, n_particles) + 1):
        for rest in _occupation_vectors(n_modes - 1, n_particles - first, cap):
            yield (first,) + rest


class FockBasis:
    """Complete N-particle basis on L modes for one statistics.

    States are enumerated once, in lexicographic order on the occupation
    tuple, so indices are stable across runs.  Two bases with the same
    (N, L, statistics) compare equal.
    """

    def __init__(self, n_particles: int, n_modes: int, stats: Statistics):
        if n_particles < 0:
            raise ValueError("particle number must be non-negative")
        if n_modes < 1:
            raise ValueError("need at least one mode")
        if stats.exclusive and n_particles > n_modes:
            raise ValueError(
                f"no fermionic states with {n_particles} particles on {n_modes} modes"
            )
        self.n_particles = n_particles
        self.n_modes = n_modes
        self.stats = stats
        cap = 1 if stats.exclusive else n_particles
        self.states: tuple[tuple[int, ...], ...] = tuple(
            _occupation_vectors(n_modes, n_particles, cap)
        )
        self._index = {occ: i for i, occ in enumerate(self.states)}

    def __len__(self) -> int:
        return len(self.states)

    @property
    def size(self) -> int:
        return len(self.states)

    def index(self, occ) -> int:
        """Position of an occupation tuple in the enumeration."""
        return self._index[tuple(occ)]

    def __contains__(self, occ) -> bool:
        return tuple(occ) in self._index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FockBasis)
            and self.n_particles == other.n_particles
            and self.n_modes == other.n_modes
            and self.stats is other.stats
        )

    def __hash__(self) -> int:
        return hash((self.n_particles, self.n_modes, self.stats))

    def __repr__(self) -> str:
        return (
            f"FockBasis(N={self.n_particles}, L={self.n_modes}, "
            f"{self.stats.value}, dim={len(self.states)})"
        )


def enumerate_basis(n_particles: int, n_modes: int, stats: Statistics) -> FockBasis:
    """Enumerate the complete occupation-number basis.

    Dimension is C(L+N-1, N) for bosons and C(L, N) for fermions.
    """
    return FockBasis(n_particles, n_modes, stats)


def _check_mode(occ, mode: int) -> None:
    if not 1 <= mode <= len(occ):
        raise ValueError(f"mode {mode} out of range 1..{len(occ)}")


def apply_creation(occ, mode: int, stats: Statistics):
    """Apply c_mode^+ to a basis ket.

    Returns ``(factor, new_occ)`` or ``None`` when the result vanishes
    (fermionic mode already occupied).  Bosons pick up sqrt(n+1); the
    fermionic factor is (-1)^(number of occupied modes left of `mode`),
    fixed by the canonical operator ordering in the ket convention.
    """
    _check_mode(occ, mode)
    i = mode - 1
    if stats.exclusive:
        if occ[i]:
            return None
        sign = -1.0 if sum(occ[:i]) % 2 else 1.0
        return sign, occ[:i] + (1,) + occ[i + 1 :]
    return math.sqrt(occ[i] + 1.0), occ[:i] + (occ[i] + 1,) + occ[i + 1 :]


def apply_annihilation(occ, mode: int, stats: Statistics):
    """Apply c_mode to a basis ket; adjoint of :func:`apply_creation`.

    Returns ``(factor, new_occ)`` or ``None`` when the mode is empty.
    """
    _check_mode(occ, mode)
    i = mode - 1
    if occ[i] == 0:
        return None
    if stats.exclusive:
        sign = -1.0 if sum(occ[:i]) % 2 else 1.0
        return sign, occ[:i] + (0,) + occ[i + 1 :]
    return math.sqrt(occ[i]), occ[:i] + (occ[i] - 1,) + occ[i + 1 :]


@dataclass
class ManyBodyState:
    """Complex amplitude vector over an enumerated Fock basis."""

    basis: FockBasis
    amp: np.ndarray

    def __post_init__(self):
        self.amp = np.asarray(self.amp, dtype=complex)
        if self.amp.shape != (len(self.basis),):
            raise ValueError(
                f"amplitude vector has shape {self.amp.shape}, basis has {len(self.basis)} states"
            )

    def norm(self) -> float:
        return float(np.linalg.norm(self.amp))

    def normalized(self) -> "ManyBodyState":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero state")
        return ManyBodyState(self.basis, self.amp / n)

    def overlap(self, other: "ManyBodyState") -> complex:
        """<self|other> on a shared basis."""
        if self.basis != other.basis:
            raise ValueError("states live on different bases")
        return complex(np.vdot(self.amp, other.amp))

    @classmethod
    def basis_ket(cls, basis: FockBasis, occ) -> "ManyBodyState":
        amp = np.zeros(len(basis), dtype=complex)
        amp[basis.index(occ)] = 1.0
        return cls(basis, amp)


@dataclass
class DensityMatrix:
    """Hermitian density matrix over a labelled tensor-product space.

    ``dims`` lists the subsystem dimensions (length 1 for an unfactored
    space such as a full Fock basis).
    """

    dims: tuple[int, ...]
    mat: np.ndarray

    def __post_init__(self):
        self.dims = tuple(int(d) for d in self.dims)
        self.mat = np.asarray(self.mat, dtype=complex)
        d = int(np.prod(self.dims))
        if self.mat.shape != (d, d):
            raise ValueError(f"matrix shape {self.mat.shape} does not match dims {self.dims}")
        if np.abs(self.mat - self.mat.conj().T).max() > 1e-12:
            raise ValueError("density matrix is not Hermitian within 1e-12")

    def trace(self) -> float:
        return float(self.mat.trace().real)

    @classmethod
    def from_state(cls, state: ManyBodyState) -> "DensityMatrix":
        """Pure-state projector on the full Fock basis."""
        return cls((len(state.basis),), np.outer(state.amp, state.amp.conj()))


def build_monomial_state(basis: FockBasis, coeffs, init) -> ManyBodyState:
    """Expand a product of dressed creation operators on the basis.

    Builds ``prod_p (sum_s coeffs[p, s] c_s^+)^{n_p} |0> / sqrt(prod_p n_p!)``
    where ``n_p`` runs over the occupations of ``init`` and the factors
    are applied in descending mode order so that identity coefficients
    reproduce ``|init>`` with amplitude one.  The result is normalized
    whenever the rows of ``coeffs`` for occupied sites are orthonormal
    (in particular for any unitary ``coeffs``).
    """
    init = tuple(init)
    if len(init) != basis.n_modes or sum(init) != basis.n_particles:
        raise ValueError("initial occupation does not match the basis")
    if basis.stats.exclusive and any(n > 1 for n in init):
        raise ValueError("fermionic occupations must be 0 or 1")
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.shape != (basis.n_modes, basis.n_modes):
        raise ValueError("coefficient matrix must be L x L")

    L = basis.n_modes
    terms: dict[tuple[int, ...], complex] = {(0,) * L: 1.0 + 0.0j}
    for p in range(L, 0, -1):
        for _ in range(init[p - 1]):
            new: dict[tuple[int, ...], complex] = {}
            row = coeffs[p - 1]
            for occ, amp in terms.items():
                for s in range(1, L + 1):
                    c = row[s - 1]
                    if c == 0:
                        continue
                    res = apply_creation(occ, s, basis.stats)
                    if res is None:
                        continue
                    factor, occ2 = res
                    new[occ2] = new.get(occ2, 0.0j) + amp * c * factor
            terms = new

    norm = math.sqrt(math.prod(math.factorial(n) for n in init))
    amp = np.zeros(len(basis), dtype=complex)
    for occ, value in terms.items():
        amp[basis.index(occ)] = value / norm
    return ManyBodyState(basis, amp)

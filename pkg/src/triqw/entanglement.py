"""Tripartite entanglement measures under local particle-number superselection.

Two quantities are computed for a three-party split of the modes:

* ``entanglement_of_particles`` -- projects the state onto fixed local
  particle-number sectors, applies the tripartite negativity to each
  sector on its local tensor-product basis and averages with the sector
  probabilities.  Sectors in which some party has a one-dimensional
  local space are biseparable and contribute exactly zero.
* ``geometric_measure`` -- the mode-entanglement tensor norm built from
  triple products of su(d) generators on the occupation-qubit
  isomorphism, minus its value on fully factorized kets.

Fermionic bookkeeping: a global ket maps onto the blocked local basis
with the parity sign of the permutation that reorders its creation
string from party-blocked order to globally ascending order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import DensityMatrix, FockBasis, ManyBodyState, Statistics, _occupation_vectors

PROBABILITY_FLOOR = 1e-14
NEGATIVITY_TRACE_TOL = 1e-10


@dataclass(frozen=True)
class Partition:
    """Three disjoint mode groups (1-based indices) covering the lattice.

    Party mode order is preserved as given; the canonical presentation
    is ascending, but permuted orders are accepted and only change the
    local basis convention, not any entanglement value.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(m) for m in self.a))
        object.__setattr__(self, "b", tuple(int(m) for m in self.b))
        object.__setattr__(self, "c", tuple(int(m) for m in self.c))
        all_modes = self.a + self.b + self.c
        if not all_modes or min(all_modes) < 1:
            raise ValueError("mode indices must be positive")
        if len(set(all_modes)) != len(all_modes):
            raise ValueError("parties must be disjoint")
        if not (self.a and self.b and self.c):
            raise ValueError("every party needs at least one mode")

    @property
    def parties(self) -> tuple[tuple[int, ...], ...]:
        return (self.a, self.b, self.c)

    @property
    def n_modes(self) -> int:
        return len(self.a) + len(self.b) + len(self.c)

    def validate_cover(self, n_modes: int) -> None:
        covered = set(self.a) | set(self.b) | set(self.c)
        if covered != set(range(1, n_modes + 1)):
            raise ValueError(f"partition {self} does not cover modes 1..{n_modes}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the pipe syntax, e.g. ``"1,2|3,4|5,6"``."""
        groups = text.split("|")
        if len(groups) != 3:
            raise ValueError(f"expected three '|'-separated groups, got {text!r}")
        parts = []
        for group in groups:
            try:
                modes = tuple(int(tok) for tok in group.split(",") if tok.strip())
            except ValueError:
                raise ValueError(f"malformed mode list {group!r}")
            parts.append(modes)
        return cls(*parts)

    def __str__(self) -> str:
        return "|".join(",".join(str(m) for m in p) for p in self.parties)


def _local_patterns(n_modes: int, n_particles: int, stats: Statistics):
    cap = 1 if stats.exclusive else n_particles
    return tuple(_occupation_vectors(n_modes, n_particles, cap))


def _inversion_parity(seq) -> float:
    inv = sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    )
    return -1.0 if inv % 2 else 1.0


@dataclass(frozen=True)
class Sector:
    """One fixed local-particle-number block of a partitioned basis.

    ``matrix`` maps global amplitude vectors into the local product
    basis (party A x party B x party C); its entries are the +-1
    fermionic reordering signs (all +1 for bosons).
    """

    counts: tuple[int, int, int]
    dims: tuple[int, int, int]
    local_bases: tuple[tuple[tuple[int, ...], ...], ...]
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.dims[0] * self.dims[1] * self.dims[2]


@dataclass
class SectorState:
    """Projection result: sector probability and normalized block state."""

    counts: tuple[int, int, int]
    dims: tuple[int, int, int]
    prob: float
    rho: DensityMatrix | None


class SectorDecomposition:
    """All local-particle-number sectors of a basis for one partition."""

    def __init__(self, basis: FockBasis, partition: Partition):
        partition.validate_cover(basis.n_modes)
        self.basis = basis
        self.partition = partition

        patterns: dict[tuple[int, int], dict[tuple[int, ...], int]] = {}
        bookkeeping: dict[tuple[int, int, int], list[tuple[int, int, float]]] = {}
        for gi, occ in enumerate(basis.states):
            locals_ = tuple(
                tuple(occ[m - 1] for m in party) for party in partition.parties
            )
            counts = tuple(sum(pat) for pat in locals_)
            idx = []
            dims = []
            for party_no, (party, pat) in enumerate(zip(partition.parties, locals_)):
                key = (party_no, counts[party_no])
                if key not in patterns:
                    pats = _local_patterns(len(party), counts[party_no], basis.stats)
                    patterns[key] = {p: i for i, p in enumerate(pats)}
                idx.append(patterns[key][pat])
                dims.append(len(patterns[key]))
            flat = (idx[0] * dims[1] + idx[1]) * dims[2] + idx[2]
            sign = 1.0
            if basis.stats.exclusive:
                blocked = [
                    m for party in partition.parties for m in party if occ[m - 1]
                ]
                sign = _inversion_parity(blocked)
            bookkeeping.setdefault(counts, []).append((gi, flat, sign))

        self.sectors: dict[tuple[int, int, int], Sector] = {}
        for counts in sorted(bookkeeping):
            dims = tuple(
                len(patterns[(party_no, counts[party_no])]) for party_no in range(3)
            )
            local_bases = tuple(
                tuple(patterns[(party_no, counts[party_no])]) for party_no in range(3)
            )
            mat = np.zeros((int(np.prod(dims)), len(basis)))
            for gi, flat, sign in bookkeeping[counts]:
                mat[flat, gi] = sign
            self.sectors[counts] = Sector(counts, dims, local_bases, mat)

    def sector_amplitudes(self, amps: np.ndarray) -> dict[tuple[int, int, int], np.ndarray]:
        """Map (batches of) pure-state amplitudes into every sector.

        ``amps`` has the basis dimension on its last axis; the result
        keeps leading axes, so grids of states project in one call.
        """
        return {counts: amps @ s.matrix.T for counts, s in self.sectors.items()}

    def project_state(self, state: ManyBodyState) -> list[SectorState]:
        if state.basis != self.basis:
            raise ValueError("state basis does not match the decomposition")
        out = []
        for counts, vec in self.sector_amplitudes(state.amp).items():
            prob = float(np.vdot(vec, vec).real)
            rho = None
            if prob > PROBABILITY_FLOOR:
                sector = self.sectors[counts]
                rho = DensityMatrix(sector.dims, np.outer(vec, vec.conj()) / prob)
            out.append(SectorState(counts, self.sectors[counts].dims, prob, rho))
        return out

    def project_density(self, dm: DensityMatrix) -> list[SectorState]:
        if dm.mat.shape != (len(self.basis), len(self.basis)):
            raise ValueError("density matrix does not match the basis dimension")
        out = []
        for counts, sector in self.sectors.items():
            block = sector.matrix @ dm.mat @ sector.matrix.T
            prob = float(block.trace().real)
            rho = None
            if prob > PROBABILITY_FLOOR:
                rho = DensityMatrix(sector.dims, block / prob)
            out.append(SectorState(counts, sector.dims, prob, rho))
        return out


def project_sector(
    state, partition: Partition, counts, basis: FockBasis | None = None
) -> SectorState:
    """Project onto one fixed local-particle-number sector.

    ``state`` is a ManyBodyState, or a DensityMatrix over the full Fock
    basis with ``basis`` passed explicitly.  Counts that admit no legal
    local pattern (e.g. two fermions on a single-mode party) are legal
    input and yield probability zero.
    """
    counts = tuple(int(n) for n in counts)
    if isinstance(state, ManyBodyState):
        basis = state.basis
        dec = SectorDecomposition(basis, partition)
        results = dec.project_state(state)
    elif isinstance(state, DensityMatrix):
        if basis is None:
            raise TypeError("a DensityMatrix input needs the Fock basis")
        dec = SectorDecomposition(basis, partition)
        results = dec.project_density(state)
    else:
        raise TypeError("expected a ManyBodyState or a DensityMatrix")
    if sum(counts) != basis.n_particles:
        raise ValueError(
            f"sector counts {counts} do not sum to N={basis.n_particles}"
        )
    for sec in results:
        if sec.counts == counts:
            return sec
    return SectorState(counts, (0, 0, 0), 0.0, None)


# ---------------------------------------------------------------------------
# negativities


def hermitian_eigenvalues(mat: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending.

    The input is checked against Hermiticity within ``tol`` and
    symmetrized before the backward-stable dense solve.
    """
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("expected a square matrix")
    if np.abs(mat - mat.conj().T).max() > tol:
        raise ValueError(f"matrix is not Hermitian within {tol}")
    return np.linalg.eigvalsh(0.5 * (mat + mat.conj().T))


def _partial_transpose(mat: np.ndarray, dims, party: int) -> np.ndarray:
    dims = tuple(dims)
    n = len(dims)
    tensor = mat.reshape(dims + dims)
    tensor = np.swapaxes(tensor, party, party + n)
    return tensor.reshape(mat.shape)


def partial_transpose(rho: DensityMatrix, party: int) -> DensityMatrix:
    """Transpose the indices of one party; an involution."""
    if not 0 <= party < len(rho.dims):
        raise ValueError(f"party {party} out of range for dims {rho.dims}")
    return DensityMatrix(rho.dims, _partial_transpose(rho.mat, rho.dims, party))


def bipartite_negativity(rho: DensityMatrix, party: int) -> float:
    """Sum of absolute partial-transpose eigenvalues minus one, floored at 0."""
    if abs(rho.trace() - 1.0) > NEGATIVITY_TRACE_TOL:
        raise ValueError("negativity expects a trace-one density matrix")
    eig = hermitian_eigenvalues(_partial_transpose(rho.mat, rho.dims, party))
    return max(0.0, float(np.abs(eig).sum() - 1.0))


def tripartite_negativity(rho: DensityMatrix) -> float:
    """Geometric mean of the three one-versus-rest negativities."""
    if len(rho.dims) != 3:
        raise ValueError("tripartite negativity needs dims (d_A, d_B, d_C)")
    product = 1.0
    for party in range(3):
        n = bipartite_negativity(rho, party)
        if n == 0.0:
            return 0.0
        product *= n
    return float(np.cbrt(product))


# ---------------------------------------------------------------------------
# entanglement of particles


@dataclass(frozen=True)
class SectorRecord:
    counts: tuple[int, int, int]
    prob: float
    n_a_bc: float
    n_b_ac: float
    n_c_ab: float
    tpn: float


@dataclass
class EntanglementReport:
    """Per-sector negativities and the particle-number-weighted total."""

    partition: Partition
    sectors: tuple[SectorRecord, ...]
    eps_t: float

    def sector(self, counts) -> SectorRecord | None:
        counts = tuple(int(n) for n in counts)
        for rec in self.sectors:
            if rec.counts == counts:
                return rec
        return None


def entanglement_of_particles(
    state, partition: Partition, basis: FockBasis | None = None
) -> EntanglementReport:
    """Sector-averaged tripartite negativity of a state or density matrix.

    ``state`` is a ManyBodyState, or a DensityMatrix on the full Fock
    basis with ``basis`` passed explicitly.  Sectors with probability
    below 1e-14 are skipped.  Sectors in which any party has a
    one-dimensional local space (no particles, or no room left by
    exclusion) are biseparable across that cut, so their tripartite
    negativity is exactly zero; short-circuiting them keeps the cube
    root from amplifying eigensolver noise on the zero factor.
    """
    if isinstance(state, ManyBodyState):
        dec = SectorDecomposition(state.basis, partition)
        sector_states = dec.project_state(state)
    elif isinstance(state, DensityMatrix):
        if basis is None:
            raise TypeError("a DensityMatrix input needs the Fock basis")
        dec = SectorDecomposition(basis, partition)
        sector_states = dec.project_density(state)
    else:
        raise TypeError("expected a ManyBodyState or a DensityMatrix")

    records = []
    total = 0.0
    for sec in sector_states:
        if sec.prob <= PROBABILITY_FLOOR:
            continue
        if min(sec.dims) == 1:
            records.append(SectorRecord(sec.counts, sec.prob, 0.0, 0.0, 0.0, 0.0))
            continue
        negs = [bipartite_negativity(sec.rho, party) for party in range(3)]
        tpn = 0.0 if 0.0 in negs else float(np.cbrt(negs[0] * negs[1] * negs[2]))
        records.append(SectorRecord(sec.counts, sec.prob, *negs, tpn))
        total += sec.prob * tpn
    return EntanglementReport(partition, tuple(records), total)


# ---------------------------------------------------------------------------
# geometric mode-entanglement measure


def su_generators(dim: int) -> np.ndarray:
    """The d^2-1 generalized Gell-Mann matrices, Pauli-normalized.

    Symmetric, antisymmetric and diagonal families, scaled so that
    Tr(g_a g_b) = d * delta_ab.  For dim=2 this is exactly the Pauli
    triple; for dim=4 the normalization makes the fully factorized
    three-party tensor norm below come out at its separable value.
    """
    if dim < 2:
        raise ValueError("generators need dimension >= 2")
    mats = []
    for j in range(dim):
        for k in range(j + 1, dim):
            sym = np.zeros((dim, dim), dtype=complex)
            sym[j, k] = sym[k, j] = 1.0
            mats.append(sym)
            asym = np.zeros((dim, dim), dtype=complex)
            asym[j, k] = -1.0j
            asym[k, j] = 1.0j
            mats.append(asym)
    for l in range(1, dim):
        diag = np.zeros((dim, dim), dtype=complex)
        for j in range(l):
            diag[j, j] = 1.0
        diag[l, l] = -l
        mats.append(math.sqrt(2.0 / (l * (l + 1))) * diag)
    return math.sqrt(dim / 2.0) * np.array(mats)


# (prefactor inside the root, separable norm) per party mode count; the
# separable norm equals the tensor norm of any fully factorized ket.
_TENSOR_NORM_CONSTANTS = {1: (1.0, 1.0), 2: (8.0, 6.0 * math.sqrt(6.0))}


def mode_qubit_tensor(state: ManyBodyState, partition: Partition) -> np.ndarray:
    """Map a hard-core state onto the three-party occupation-qubit tensor.

    Each mode becomes a qubit (sign-free under the canonical ket
    convention); the qubits of one party combine in the party's mode
    order into a 2^m-level subsystem.  Fails if any ket with more than
    one particle in a mode carries amplitude.
    """
    partition.validate_cover(state.basis.n_modes)
    sizes = {len(p) for p in partition.parties}
    if len(sizes) != 1:
        raise ValueError("parties must have equal mode counts")
    m = sizes.pop()
    d = 2**m
    psi = np.zeros((d, d, d), dtype=complex)
    for gi, occ in enumerate(state.basis.states):
        amp = state.amp[gi]
        if amp == 0.0:
            continue
        if any(n > 1 for n in occ):
            raise ValueError(
                "occupation-qubit mapping needs occupations of at most one"
            )
        idx = []
        for party in partition.parties:
            value = 0
            for mode in party:
                value = 2 * value + occ[mode - 1]
            idx.append(value)
        psi[tuple(idx)] += amp
    return psi


def tensor_norm_squared(psis: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Batched sum_{ijk} |<psi| g_i x g_j x g_k |psi>|^2.

    ``psis`` carries arbitrary leading axes over (d, d, d) state
    tensors; contraction is staged party by party so the generator
    triple is never materialized.
    """
    t1 = np.einsum("...abc,iax->...ixbc", psis.conj(), gens)
    t2 = np.einsum("...ixbc,jby->...ijxyc", t1, gens)
    t3 = np.einsum("kcz,...xyz->...kxyc", gens, psis)
    corr = np.einsum("...ijxyc,...kxyc->...ijk", t2, t3)
    return np.sum(np.abs(corr) ** 2, axis=(-3, -2, -1))


def geometric_measure(state: ManyBodyState, partition: Partition) -> float:
    """Mode-entanglement tensor norm minus its fully-separable value.

    Supports parties of one mode (Pauli triple, separable norm 1) and
    two modes (fifteen su(4) generators, prefactor 8 inside the root,
    separable norm 6*sqrt(6)).  Defined here for pure states only.
    """
    m = len(partition.a)
    if m not in _TENSOR_NORM_CONSTANTS or {len(p) for p in partition.parties} != {m}:
        raise ValueError("geometric measure supports equal party sizes of 1 or 2 modes")
    prefactor, sep_norm = _TENSOR_NORM_CONSTANTS[m]
    psi = mode_qubit_tensor(state, partition)
    total = float(tensor_norm_squared(psi, su_generators(2**m)))
    return math.sqrt(prefactor * total) - sep_norm

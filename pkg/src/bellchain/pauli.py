"""Bit-indexed state vectors and Pauli-string algebra.

Conventions used throughout the package:

* Sites are 1-based.  Site ``s`` lives at bit position ``s - 1`` of the
  basis index, so site 1 is the least-significant bit.
* Human-readable bit strings list site 1 first: the string ``"110"``
  means site 1 and site 2 excited, site 3 down, i.e. basis index 3.
* A Pauli string is stored as two N-bit masks (X part, Z part) plus a
  phase exponent k with phase = i**k, so application costs O(2^N) with
  no matrix materialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, ValidationError

_NORM_TOL = 1e-10
_HERM_TOL = 1e-12

# letter <-> (x bit, z bit); Y carries both masks and a bookkeeping i
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}
_PHASES = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


def _phase_exponent(phase: complex) -> int:
    for k, p in enumerate(_PHASES):
        if abs(complex(phase) - p) < 1e-12:
            return k
    raise ValidationError(f"phase must be one of +1, -1, +i, -i, got {phase!r}")


def _parity(values: np.ndarray) -> np.ndarray:
    """Bit parity of each entry of an integer array, vectorized."""
    out = values.astype(np.int64, copy=True)
    for shift in (32, 16, 8, 4, 2, 1):
        out ^= out >> shift
    return out & 1


@dataclass(frozen=True)
class PauliString:
    """A phase in {+1, -1, +i, -i} and one letter of {I, X, Y, Z} per site.

    The operator is i**phase_power times the literal tensor product of
    the letters encoded in ``x_mask`` / ``z_mask``: bit pattern (0,0)
    is I, (1,0) is X, (0,1) is Z and (1,1) is Y.
    """

    n_sites: int
    x_mask: int
    z_mask: int
    phase_power: int = 0

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValidationError("PauliString needs at least one site")
        top = 1 << self.n_sites
        if not (0 <= self.x_mask < top and 0 <= self.z_mask < top):
            raise ValidationError("mask exceeds the declared number of sites")
        object.__setattr__(self, "phase_power", self.phase_power % 4)

    @classmethod
    def identity(cls, n_sites: int) -> "PauliString":
        return cls(n_sites, 0, 0, 0)

    @classmethod
    def from_letters(cls, letters: str | Sequence[str], phase: complex = 1.0) -> "PauliString":
        """Build from a site-ordered letter sequence, e.g. ``"YYI"``."""
        x_mask = z_mask = 0
        for pos, letter in enumerate(letters):
            try:
                xb, zb = _LETTER_BITS[letter.upper()]
            except KeyError:
                raise ValidationError(f"unknown Pauli letter {letter!r}") from None
            x_mask |= xb << pos
            z_mask |= zb << pos
        return cls(len(letters), x_mask, z_mask, _phase_exponent(phase))

    @classmethod
    def single(cls, n_sites: int, site: int, letter: str, phase: complex = 1.0) -> "PauliString":
        """A single non-identity letter on one site of an N-site chain."""
        _check_site(site, n_sites)
        letters = ["I"] * n_sites
        letters[site - 1] = letter
        return cls.from_letters(letters, phase)

    @property
    def letters(self) -> str:
        return "".join(
            _BITS_LETTER[((self.x_mask >> p) & 1, (self.z_mask >> p) & 1)]
            for p in range(self.n_sites)
        )

    @property
    def phase(self) -> complex:
        return _PHASES[self.phase_power]

    @property
    def is_hermitian(self) -> bool:
        # Y count equals popcount(x & z); P dagger = P iff phase is real
        return self.phase_power % 2 == 0

    @property
    def weight(self) -> int:
        """Number of non-identity letters."""
        return (self.x_mask | self.z_mask).bit_count()

    def dense(self) -> np.ndarray:
        """Materialize as a 2^N x 2^N matrix via the mask action."""
        dim = 1 << self.n_sites
        idx = np.arange(dim, dtype=np.int64)
        ph = _PHASES[(self.phase_power + (self.x_mask & self.z_mask).bit_count()) % 4]
        signs = 1.0 - 2.0 * _parity(idx & self.z_mask)
        mat = np.zeros((dim, dim), dtype=complex)
        mat[idx ^ self.x_mask, idx] = ph * signs
        return mat

    def __mul__(self, other: "PauliString") -> "PauliString":
        return pauli_mul(self, other)

    def __str__(self) -> str:
        pretty = {0: "+", 1: "+i ", 2: "-", 3: "-i "}[self.phase_power]
        return f"{pretty}{self.letters}"


class StateVector:
    """A unit-norm vector of 2^N amplitudes over an odd-length chain.

    Basis index encodes site k at bit position k - 1.  The amplitude
    array is held read-only; all operations return new instances.
    """

    __slots__ = ("n_sites", "_amps")

    def __init__(self, amplitudes: Iterable[complex], *, normalize: bool = False):
        amps = np.array(amplitudes, dtype=complex).ravel()
        n = int(amps.size).bit_length() - 1
        if amps.size != (1 << n):
            raise ValidationError(f"amplitude count {amps.size} is not a power of two")
        if n < 3 or n % 2 == 0:
            raise ValidationError(f"chain length must be odd and >= 3, got {n}")
        norm = float(np.linalg.norm(amps))
        if normalize:
            if norm == 0.0:
                raise ValidationError("cannot normalize the zero vector")
            amps = amps / norm
        elif abs(norm - 1.0) > _NORM_TOL:
            raise ValidationError(f"state norm {norm!r} deviates from 1 beyond {_NORM_TOL}")
        amps.setflags(write=False)
        self.n_sites = n
        self._amps = amps

    @classmethod
    def zero_state(cls, n_sites: int) -> "StateVector":
        """|00..0> on an N-site chain."""
        amps = np.zeros(1 << n_sites, dtype=complex)
        amps[0] = 1.0
        return cls(amps)

    @classmethod
    def from_bits(cls, bits: str) -> "StateVector":
        """Z-basis product state from a site-ordered bit string."""
        index = 0
        for pos, b in enumerate(bits):
            if b not in "01":
                raise ValidationError(f"bit string must be over 0/1, got {bits!r}")
            index |= (b == "1") << pos
        amps = np.zeros(1 << len(bits), dtype=complex)
        amps[index] = 1.0
        return cls(amps)

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    @property
    def dim(self) -> int:
        return self._amps.size

    def inner(self, other: "StateVector") -> complex:
        """<self|other>."""
        if other.n_sites != self.n_sites:
            raise DimensionMismatchError("states live on different chain lengths")
        return complex(np.vdot(self._amps, other._amps))

    def dominant_components(self, tol: float = 1e-12) -> list[tuple[str, complex]]:
        """Basis components with |amplitude| > tol, largest first.

        Ties are broken by basis index so the output is deterministic.
        """
        entries = [
            (bit_label(idx, self.n_sites), complex(a))
            for idx, a in enumerate(self._amps)
            if abs(a) > tol
        ]
        entries.sort(key=lambda e: (-abs(e[1]), e[0]))
        return entries

    def __repr__(self) -> str:
        return f"StateVector(n_sites={self.n_sites})"


def bit_label(index: int, n_sites: int) -> str:
    """Site-ordered bit string for a basis index (site 1 first)."""
    return "".join("1" if (index >> p) & 1 else "0" for p in range(n_sites))


def _check_site(site: int, n_sites: int) -> None:
    if not 1 <= site <= n_sites:
        raise ValidationError(f"site {site} outside chain 1..{n_sites}")


def pauli_apply(pauli: PauliString, state: StateVector) -> StateVector:
    """Apply a Pauli string: permutes and phases basis amplitudes."""
    if pauli.n_sites != state.n_sites:
        raise DimensionMismatchError(
            f"operator acts on {pauli.n_sites} sites, state has {state.n_sites}"
        )
    out = StateVector.__new__(StateVector)
    out.n_sites = state.n_sites
    amps = _apply_masks(pauli, state.amplitudes)
    amps.setflags(write=False)
    out._amps = amps
    return out


def _apply_masks(pauli: PauliString, amps: np.ndarray) -> np.ndarray:
    """Raw mask action on an amplitude array (no wrapping, no checks)."""
    dim = amps.size
    idx = np.arange(dim, dtype=np.int64)
    ph = _PHASES[(pauli.phase_power + (pauli.x_mask & pauli.z_mask).bit_count()) % 4]
    signs = 1.0 - 2.0 * _parity(idx & pauli.z_mask)
    out = np.empty(dim, dtype=complex)
    out[idx ^ pauli.x_mask] = ph * signs * amps
    return out


def pauli_mul(left: PauliString, right: PauliString) -> PauliString:
    """Product of two Pauli strings with exact phase bookkeeping."""
    if left.n_sites != right.n_sites:
        raise DimensionMismatchError("cannot multiply strings of different lengths")
    x3 = left.x_mask ^ right.x_mask
    z3 = left.z_mask ^ right.z_mask
    # move every letter to X^x Z^z form, commute Z^z1 past X^x2, fold back
    k = (
        left.phase_power
        + right.phase_power
        + (left.x_mask & left.z_mask).bit_count()
        + (right.x_mask & right.z_mask).bit_count()
        + 2 * (left.z_mask & right.x_mask).bit_count()
        - (x3 & z3).bit_count()
    ) % 4
    return PauliString(left.n_sites, x3, z3, k)


def gate_apply(state: StateVector, site: int, gate: np.ndarray) -> StateVector:
    """Apply a single-qubit unitary to one site's tensor factor."""
    _check_site(site, state.n_sites)
    gate = np.asarray(gate, dtype=complex)
    if gate.shape != (2, 2):
        raise ValidationError(f"gate must be 2x2, got {gate.shape}")
    if np.max(np.abs(gate.conj().T @ gate - np.eye(2))) > _HERM_TOL:
        raise ValidationError("gate is not unitary within 1e-12")
    lower = 1 << (site - 1)
    upper = state.dim // (2 * lower)
    block = state.amplitudes.reshape(upper, 2, lower)
    new = np.einsum("ab,ibj->iaj", gate, block).reshape(state.dim)
    out = StateVector.__new__(StateVector)
    out.n_sites = state.n_sites
    new.setflags(write=False)
    out._amps = new
    return out


def expectation(state: StateVector, pauli: PauliString) -> float:
    """<v|P|v> for a Hermitian Pauli string."""
    if not pauli.is_hermitian:
        raise ValidationError(f"expectation needs a Hermitian string, got phase {pauli.phase}")
    value = complex(np.vdot(state.amplitudes, _apply_masks(pauli, state.amplitudes)))
    if abs(value.imag) >= _NORM_TOL:
        raise ValidationError(f"imaginary residue {value.imag!r} exceeds 1e-10")
    return float(value.real)


@dataclass(frozen=True)
class DensityMatrix:
    """Reduced density matrix on an ordered list of 1 or 2 sites.

    Row index orders the listed sites most-significant first, so for
    sites (p, q) the basis runs |0_p 0_q>, |0_p 1_q>, |1_p 0_q>, |1_p 1_q>.
    """

    sites: tuple[int, ...]
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        dim = 1 << len(self.sites)
        if mat.shape != (dim, dim):
            raise ValidationError(f"matrix shape {mat.shape} does not fit sites {self.sites}")
        if np.max(np.abs(mat - mat.conj().T)) > _HERM_TOL:
            raise ValidationError("density matrix is not Hermitian within 1e-12")
        if abs(np.trace(mat).real - 1.0) > _HERM_TOL or abs(np.trace(mat).imag) > _HERM_TOL:
            raise ValidationError("density matrix trace deviates from 1 beyond 1e-12")
        if np.min(np.linalg.eigvalsh(mat)) < -_HERM_TOL:
            raise ValidationError("density matrix has an eigenvalue below -1e-12")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)


def reduced_density(state: StateVector, sites: Sequence[int]) -> DensityMatrix:
    """Partial trace down to 1 or 2 sites of a pure chain state."""
    sites = tuple(int(s) for s in sites)
    if len(sites) not in (1, 2):
        raise ValidationError("reduced_density supports 1 or 2 sites")
    if len(set(sites)) != len(sites):
        raise ValidationError(f"duplicate sites in {sites}")
    for s in sites:
        _check_site(s, state.n_sites)
    n = state.n_sites
    tensor = state.amplitudes.reshape((2,) * n)
    # axis n - s holds site s; listed sites become the leading axes
    kept = [n - s for s in sites]
    rest = [a for a in range(n) if a not in kept]
    mat = np.transpose(tensor, kept + rest).reshape(1 << len(sites), -1)
    return DensityMatrix(sites, mat @ mat.conj().T)

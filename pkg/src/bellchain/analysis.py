"""Entanglement measures, fidelities, and the field-robustness study.

The robustness study perturbs the three-site chain with local Z fields
expressed as ratios of the first-bond coupling J_Y1 = lam * sqrt(2),
evolves for t*, and compares against the unperturbed result.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Sequence

import numpy as np

from .chain import ChainSpec, Pattern, build_hamiltonian
from .errors import ValidationError
from .evolve import Propagator, matryoshka_time
from .pauli import DensityMatrix, StateVector

# Hardware-motivated operating point for the three-site robustness
# study: per-site field strengths over the first-bond coupling.
REFERENCE_FIELD_RATIOS = (7.8 / 270.0, 19.6 / 270.0, 12.6 / 270.0)

_EIG_CUTOFF = 1e-12


def _density_array(rho: DensityMatrix | np.ndarray, dim: int | None = None) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        mat = rho.matrix
    else:
        mat = np.asarray(rho, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValidationError(f"density matrix must be square, got shape {mat.shape}")
        if np.max(np.abs(mat - mat.conj().T)) > 1e-12:
            raise ValidationError("density matrix is not Hermitian within 1e-12")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > 1e-12:
            raise ValidationError(f"density matrix trace {trace} deviates from 1")
        if np.min(np.linalg.eigvalsh(mat)) < -1e-12:
            raise ValidationError("density matrix has an eigenvalue below -1e-12")
    if dim is not None and mat.shape != (dim, dim):
        raise ValidationError(f"expected a {dim}x{dim} density matrix, got {mat.shape}")
    return mat


def purity(rho: DensityMatrix | np.ndarray) -> float:
    """tr(rho^2): 1 for pure states, 1/2^k for maximally mixed ones."""
    mat = _density_array(rho)
    return float(np.real(np.trace(mat @ mat)))


def concurrence(rho: DensityMatrix | np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Square-rooted eigenvalues of rho (Y x Y) rho* (Y x Y) are sorted
    descending and combined as max(0, l1 - l2 - l3 - l4).  Eigenvalues
    below 1e-12 are treated as exact zeros before the square root;
    otherwise rounding noise in near-pure inputs is amplified to the
    1e-8 scale by the root.
    """
    mat = _density_array(rho, dim=4)
    yy = np.zeros((4, 4), dtype=complex)
    yy[0, 3] = yy[3, 0] = -1.0
    yy[1, 2] = yy[2, 1] = 1.0
    spun = mat @ yy @ mat.conj() @ yy
    eigenvalues = np.real(np.linalg.eigvals(spun))
    eigenvalues[eigenvalues < _EIG_CUTOFF] = 0.0
    roots = np.sqrt(np.sort(eigenvalues)[::-1])
    return float(min(1.0, max(0.0, roots[0] - roots[1] - roots[2] - roots[3])))


def state_fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|, manifestly invariant under global phases."""
    return abs(a.inner(b))


@dataclass(frozen=True)
class SweepResult:
    """One B3 slice of the robustness surface.

    ``grid`` holds (b1_ratio, b2_ratio, fidelity) rows in row-major
    order (b1 outer, b2 inner).  ``runtime`` is wall-clock seconds for
    the slice and is deliberately excluded from serialized artifacts
    so identical configurations produce identical files.
    """

    b3_ratio: float
    grid: tuple[tuple[float, float, float], ...] = field(repr=False)
    min_fidelity: float
    runtime: float

    def mean_fidelity(self) -> float:
        return float(np.mean([row[2] for row in self.grid]))


def _sweep_slice(args: tuple) -> SweepResult:
    base, b3_ratio, ratios, t_star, reference_amps = args
    start = time.perf_counter()
    j_edge = base.lam * math.sqrt(base.n_sites - 1)
    reference = StateVector(reference_amps)
    rows = []
    for b1 in ratios:
        for b2 in ratios:
            perturbed = ChainSpec(
                base.n_sites,
                base.lam,
                base.pattern,
                tuple(r * j_edge for r in (b1, b2, b3_ratio)),
            )
            propagator = Propagator(build_hamiltonian(perturbed))
            evolved = propagator.evolve(StateVector.zero_state(base.n_sites), t_star)
            rows.append((float(b1), float(b2), state_fidelity(reference, evolved)))
    best = min(row[2] for row in rows)
    return SweepResult(float(b3_ratio), tuple(rows), best, time.perf_counter() - start)


def field_sweep(
    base: ChainSpec,
    grid_points: int = 21,
    b3_ratios: Sequence[float] = (0.0, 0.05, 0.1),
    t_star: float | None = None,
    workers: int = 1,
) -> list[SweepResult]:
    """Fidelity surface over B1/J, B2/J in [0, 0.1] per B3/J slice.

    The reference state is the unperturbed evolution of |000> for t*,
    so the origin fidelity is 1 by construction.  Slices come back
    sorted by b3 ratio regardless of worker count.
    """
    if base.n_sites != 3:
        raise ValidationError("the field study is defined on the three-site chain")
    if base.pattern is not Pattern.MATRYOSHKA_ALTERNATING:
        raise ValidationError("field_sweep requires the matryoshka coupling pattern")
    if any(b != 0.0 for b in base.fields_b):
        raise ValidationError("base spec must carry zero fields; the sweep adds its own")
    if grid_points < 2:
        raise ValidationError("grid needs at least 2 points per axis")
    ratios_b3 = tuple(float(b) for b in b3_ratios)
    if not ratios_b3:
        raise ValidationError("need at least one b3 ratio")
    if any(not 0.0 <= b <= 0.1 for b in ratios_b3):
        raise ValidationError("b3 ratios must lie in [0, 0.1]")
    if workers < 1:
        raise ValidationError("workers must be >= 1")
    if t_star is None:
        t_star = matryoshka_time(base.lam)
    axis = tuple(np.linspace(0.0, 0.1, grid_points))
    reference = Propagator(build_hamiltonian(base)).evolve(
        StateVector.zero_state(base.n_sites), t_star
    )
    jobs = [
        (base, b3, axis, t_star, np.array(reference.amplitudes))
        for b3 in sorted(ratios_b3)
    ]
    if workers == 1 or len(jobs) == 1:
        return [_sweep_slice(job) for job in jobs]
    with Pool(min(workers, len(jobs))) as pool:
        return pool.map(_sweep_slice, jobs)


def sweep_to_csv(result: SweepResult, config_comment: str | None = None) -> str:
    """CSV text for one slice: fixed header, 12 significant digits."""
    lines = []
    if config_comment is not None:
        lines.append(f"# {config_comment}")
    lines.append("b1_ratio,b2_ratio,b3_ratio,fidelity")
    for b1, b2, fid in result.grid:
        lines.append(f"{b1:.11e},{b2:.11e},{result.b3_ratio:.11e},{fid:.11e}")
    return "\n".join(lines) + "\n"


def sweep_summary(results: Sequence[SweepResult]) -> dict:
    """JSON-ready min/mean fidelity per slice."""
    return {
        "slices": [
            {
                "b3_ratio": r.b3_ratio,
                "min_fidelity": r.min_fidelity,
                "mean_fidelity": r.mean_fidelity(),
            }
            for r in results
        ],
        "min_fidelity": min(r.min_fidelity for r in results),
    }


def reference_point_fidelity(
    scale: float = 1.0, lam: float = 1.0, t_star: float | None = None
) -> float:
    """Fidelity at the reference operating point, optionally rescaled.

    Builds the three-site chain with fields at ``scale`` times the
    REFERENCE_FIELD_RATIOS of the first-bond coupling and returns the
    overlap with the unperturbed evolution.
    """
    if scale < 0:
        raise ValidationError("field scale must be nonnegative")
    if t_star is None:
        t_star = matryoshka_time(lam)
    j_edge = lam * math.sqrt(2.0)
    base = ChainSpec(3, lam)
    perturbed = ChainSpec(3, lam, fields_b=tuple(scale * r * j_edge for r in REFERENCE_FIELD_RATIOS))
    start = StateVector.zero_state(3)
    ideal = Propagator(build_hamiltonian(base)).evolve(start, t_star)
    actual = Propagator(build_hamiltonian(perturbed)).evolve(start, t_star)
    return state_fidelity(ideal, actual)

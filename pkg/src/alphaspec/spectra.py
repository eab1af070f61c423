"""A_alpha matrices, a cyclic Jacobi eigensolver and eigenvalue interval counting."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import AlphaRangeError, IntervalError, InvalidOrderError, NumericInputError
from .graph import Graph

BOUNDARY_TOL = 1e-8
EIG_TOL = 1e-12
CLUSTER_GAP = 1e-7


def check_alpha(alpha: float, lo: float = 0.0, hi: float = 1.0) -> float:
    a = float(alpha)
    if not (lo <= a <= hi):
        raise AlphaRangeError(f"alpha must lie in [{lo:g}, {hi:g}], got {alpha!r}")
    return a


class SymMatrix:
    """Dense real symmetric matrix backed by a read-only numpy array."""

    __slots__ = ("entries",)

    def __init__(self, entries) -> None:
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NumericInputError(f"expected a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise NumericInputError("matrix has non-finite entries")
        if not np.array_equal(a, a.T):
            raise NumericInputError("matrix is not exactly symmetric")
        a.flags.writeable = False
        self.entries = a

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @property
    def scale(self) -> float:
        return max(1.0, float(np.abs(self.entries).max())) if self.order else 1.0

    def principal(self, rows: Sequence[int]) -> SymMatrix:
        idx = np.asarray(rows, dtype=int)
        return SymMatrix(self.entries[np.ix_(idx, idx)])

    def __repr__(self) -> str:
        return f"SymMatrix(order={self.order})"


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order.

    ``residual_bound`` is ``max ||M v - lambda v||`` over the computed pairs
    (zero for closed forms). ``note`` carries warnings such as a hypothesis
    that was not met by the input.
    """

    eigenvalues: tuple[float, ...]
    residual_bound: float = 0.0
    note: str = ""

    @property
    def order(self) -> int:
        return len(self.eigenvalues)

    def __getitem__(self, k: int) -> float:
        return self.eigenvalues[k]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def as_array(self) -> np.ndarray:
        return np.array(self.eigenvalues)

    def scaled(self, factor: float) -> Spectrum:
        vals = sorted((factor * x for x in self.eigenvalues), reverse=True)
        return Spectrum(tuple(vals), abs(factor) * self.residual_bound, self.note)


def _spectrum_from(values) -> Spectrum:
    return Spectrum(tuple(sorted((float(v) for v in values), reverse=True)))


@dataclass(frozen=True)
class IntervalSpec:
    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True
    boundary_tol: float = BOUNDARY_TOL

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise IntervalError(f"interval lower end {self.lo} exceeds upper end {self.hi}")

    @classmethod
    def closed(cls, lo: float, hi: float, tol: float = BOUNDARY_TOL) -> IntervalSpec:
        return cls(lo, hi, True, True, tol)

    @classmethod
    def closed_open(cls, lo: float, hi: float, tol: float = BOUNDARY_TOL) -> IntervalSpec:
        return cls(lo, hi, True, False, tol)

    @classmethod
    def open_closed(cls, lo: float, hi: float, tol: float = BOUNDARY_TOL) -> IntervalSpec:
        return cls(lo, hi, False, True, tol)

    @classmethod
    def whole_line(cls) -> IntervalSpec:
        return cls(-math.inf, math.inf, False, False)

    def contains(self, x: float) -> bool:
        tol = self.boundary_tol
        # an eigenvalue within tol of an endpoint is treated as lying on it
        near_lo = abs(x - self.lo) <= tol
        near_hi = abs(x - self.hi) <= tol
        if near_lo and near_hi:
            return self.lo_closed and self.hi_closed
        if near_lo:
            return self.lo_closed
        if near_hi:
            return self.hi_closed
        return self.lo < x < self.hi

    def describe(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo:.17g}, {self.hi:.17g}{right}"

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "lo_closed": self.lo_closed, "hi_closed": self.hi_closed}


def build_a_alpha(g: Graph, alpha: float) -> SymMatrix:
    """``alpha*D(G) + (1-alpha)*A(G)`` in vertex order."""
    a = check_alpha(alpha)
    m = np.zeros((g.n, g.n))
    off = 1.0 - a
    for u, v in g.edges:
        m[u, v] = m[v, u] = off
    m[np.diag_indices(g.n)] = [a * d for d in g.degrees]
    return SymMatrix(m)


def build_adjacency(g: Graph) -> SymMatrix:
    return build_a_alpha(g, 0.0)


def build_signless_laplacian(g: Graph) -> SymMatrix:
    m = np.zeros((g.n, g.n))
    for u, v in g.edges:
        m[u, v] = m[v, u] = 1.0
    m[np.diag_indices(g.n)] = g.degrees
    return SymMatrix(m)


def internal_non_quasipendant(g: Graph) -> list[int]:
    deg = g.degrees
    return [
        v for v in range(g.n)
        if deg[v] >= 2 and not any(deg[u] == 1 for u in g.adjacency[v])
    ]


def build_n_alpha(g: Graph, alpha: float) -> tuple[SymMatrix, list[int]]:
    """Principal submatrix of A_alpha on internal vertices with no pendant neighbor."""
    verts = internal_non_quasipendant(g)
    return build_a_alpha(g, alpha).principal(verts), verts


def eig_sym(m: SymMatrix, tol_eig: float = EIG_TOL, max_sweeps: int = 100) -> Spectrum:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps visit the strict upper triangle in row-major order and stop once
    the largest off-diagonal magnitude is at most ``tol_eig * scale`` with
    ``scale = max(1, max|entry|)``.
    """
    if not isinstance(m, SymMatrix):
        m = SymMatrix(m)
    n = m.order
    if n == 0:
        return Spectrum(())
    a = m.entries.copy()
    v = np.eye(n)
    thresh = tol_eig * m.scale
    iu = np.triu_indices(n, 1)

    for _ in range(max_sweeps):
        if n == 1 or np.abs(a[iu]).max() <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                new_p = c * col_p - s * col_q
                new_q = s * col_p + c * col_q
                a[:, p] = new_p
                a[:, q] = new_q
                a[p, :] = new_p
                a[q, :] = new_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                v[:, p] = c * vp - s * v[:, q]
                v[:, q] = s * vp + c * v[:, q]
    else:
        raise NumericInputError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")

    lam = np.diag(a).copy()
    resid = np.linalg.norm(m.entries @ v - v * lam, axis=0)
    order = np.argsort(-lam, kind="stable")
    return Spectrum(tuple(float(x) for x in lam[order]), float(resid.max()))


def count_in_interval(s: Spectrum, interval: IntervalSpec) -> int:
    return sum(1 for x in s.eigenvalues if interval.contains(x))


def clusters(s: Spectrum, gap: float = CLUSTER_GAP) -> list[list[float]]:
    """Group the (sorted) eigenvalues into runs whose consecutive gaps are <= gap."""
    out: list[list[float]] = []
    for x in s.eigenvalues:
        if out and out[-1][-1] - x <= gap:
            out[-1].append(x)
        else:
            out.append([x])
    return out


def multiplicity_at(s: Spectrum, a: float, tol: float = BOUNDARY_TOL) -> int:
    """Multiplicity of ``a``: size of every eigenvalue cluster that comes within ``tol`` of it."""
    return sum(len(c) for c in clusters(s) if any(abs(x - a) <= tol for x in c))


def star_spectrum(n: int, alpha: float) -> Spectrum:
    if n < 2:
        raise InvalidOrderError(f"star spectrum needs n >= 2, got {n}")
    a = check_alpha(alpha)
    root = math.sqrt(a * a * n * n + 4.0 * (n - 1) * (1.0 - 2.0 * a))
    return _spectrum_from([(a * n + root) / 2.0] + [a] * (n - 2) + [(a * n - root) / 2.0])


def complete_spectrum(n: int, alpha: float) -> Spectrum:
    if n < 1:
        raise InvalidOrderError(f"complete-graph spectrum needs n >= 1, got {n}")
    a = check_alpha(alpha)
    return _spectrum_from([n - 1.0] + [a * n - 1.0] * (n - 1))


def corona_k1_spectrum(h: Graph, alpha: float, tol_eig: float = EIG_TOL) -> Spectrum:
    """Spectrum of ``A_alpha(h o K_1)`` from the spectrum of ``A_alpha(h)``.

    Each eigenvalue ``lam`` of ``A_alpha(h)`` contributes the two roots of
    ``x^2 - (2*alpha + lam)*x + alpha*(lam + alpha) - (1 - alpha)^2``.
    """
    from .invariants import connectivity

    a = check_alpha(alpha)
    base = eig_sym(build_a_alpha(h, a), tol_eig)
    vals = []
    for lam in base.eigenvalues:
        root = math.sqrt(4.0 * (a - 1.0) ** 2 + lam * lam)
        vals.append((2.0 * a + lam + root) / 2.0)
        vals.append((2.0 * a + lam - root) / 2.0)
    note = "" if connectivity(h)[0] else "base graph is disconnected"
    spec = _spectrum_from(vals)
    return Spectrum(spec.eigenvalues, base.residual_bound, note)


def psi(n: int, alpha: float) -> float:
    """Lower end ``alpha - (1-alpha)*sqrt(ceil(n/2)*floor(n/2))`` of the pendant interval."""
    if n < 1:
        raise InvalidOrderError(f"psi needs n >= 1, got {n}")
    a = check_alpha(alpha)
    return a - (1.0 - a) * math.sqrt(((n + 1) // 2) * (n // 2))


def hamiltonian_threshold(alpha: float) -> float:
    """Largest A_alpha eigenvalue of the 3-vertex star, valid for alpha in [1/2, 1]."""
    a = check_alpha(alpha, 0.5, 1.0)
    return (3.0 * a + math.sqrt(9.0 * a * a - 16.0 * a + 8.0)) / 2.0


def is_positive_semidefinite(m: SymMatrix, tol: float = 1e-10, tol_eig: float = EIG_TOL) -> bool:
    if m.order == 0:
        return True
    return eig_sym(m, tol_eig).eigenvalues[-1] >= -tol * m.scale

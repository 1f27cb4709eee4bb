"""Shape representations: star-shaped Fourier boundaries and rasterized grids.

FourierShape is the optimizer's state, a planar domain with boundary
r(theta) = r0 (1 + sum a_k cos k theta + b_k sin k theta).  GridShape is
the quadrature substrate for both N=2 and N=3: a finite set of occupied
cells of a uniform lattice, identified by integer indices, with a real
origin offset so the physical center of cell i is origin + (i + 1/2) h.
"""

from __future__ import annotations

import json
import re
import math
from dataclasses import dataclass, field

import numpy as np

_POSITIVITY_GRID = 4096


@dataclass(frozen=True)
class FourierShape:
    """Star-shaped planar domain r(theta) = r0 (1 + sum a_k cos k t + b_k sin k t)."""

    base_radius: float
    cos_coeffs: tuple[float, ...] = ()
    sin_coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cos_coeffs", tuple(float(a) for a in self.cos_coeffs))
        object.__setattr__(self, "sin_coeffs", tuple(float(b) for b in self.sin_coeffs))
        if self.base_radius <= 0:
            raise ValueError("base_radius must be positive")
        theta = np.linspace(0.0, 2.0 * np.pi, _POSITIVITY_GRID, endpoint=False)
        if np.any(self.radius(theta) <= 0.0):
            raise ValueError("r(theta) must be positive on the check grid")

    @property
    def n_modes(self) -> int:
        return max(len(self.cos_coeffs), len(self.sin_coeffs))

    def radius(self, theta):
        theta = np.asarray(theta, dtype=float)
        r = np.ones_like(theta)
        for k, a in enumerate(self.cos_coeffs, start=1):
            r += a * np.cos(k * theta)
        for k, b in enumerate(self.sin_coeffs, start=1):
            r += b * np.sin(k * theta)
        return self.base_radius * r

    def radius_deriv(self, theta):
        theta = np.asarray(theta, dtype=float)
        dr = np.zeros_like(theta)
        for k, a in enumerate(self.cos_coeffs, start=1):
            dr -= a * k * np.sin(k * theta)
        for k, b in enumerate(self.sin_coeffs, start=1):
            dr += b * k * np.cos(k * theta)
        return self.base_radius * dr

    def area(self) -> float:
        """Exact enclosed area (1/2) int r^2 dtheta = pi r0^2 (1 + sum(a^2+b^2)/2)."""
        ss = sum(a * a for a in self.cos_coeffs) + sum(b * b for b in self.sin_coeffs)
        return math.pi * self.base_radius**2 * (1.0 + 0.5 * ss)

    def with_area(self, m: float) -> "FourierShape":
        """Rescale r0 (coefficients untouched) so the enclosed area is m; exact."""
        if m <= 0:
            raise ValueError("target area must be positive")
        r0 = self.base_radius * math.sqrt(m / self.area())
        return FourierShape(r0, self.cos_coeffs, self.sin_coeffs)

    def to_json(self) -> str:
        """Flat-list format: [r0, K, a_1..a_K, b_1..b_K]."""
        K = self.n_modes
        a = list(self.cos_coeffs) + [0.0] * (K - len(self.cos_coeffs))
        b = list(self.sin_coeffs) + [0.0] * (K - len(self.sin_coeffs))
        return json.dumps([self.base_radius, K] + a + b)

    @classmethod
    def from_json(cls, text: str) -> "FourierShape":
        data = json.loads(text)
        r0, K = float(data[0]), int(data[1])
        if len(data) != 2 + 2 * K:
            raise ValueError("malformed FourierShape list: expected [r0, K, a_1..a_K, b_1..b_K]")
        return cls(r0, tuple(data[2 : 2 + K]), tuple(data[2 + K : 2 + 2 * K]))


@dataclass(frozen=True)
class GridShape:
    """Rasterized indicator on a uniform lattice; cell i occupies
    origin + [i h, (i+1) h)^N."""

    dimension: int
    cell_size: float
    cells: np.ndarray  # (M, N) int64, unique rows
    origin: np.ndarray = None

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise ValueError("dimension must be 2 or 3")
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")
        cells = np.ascontiguousarray(np.asarray(self.cells, dtype=np.int64))
        if cells.ndim != 2 or cells.shape[1] != self.dimension or cells.shape[0] == 0:
            raise ValueError("cells must be a nonempty (M, N) index array")
        origin = self.origin
        if origin is None:
            origin = np.zeros(self.dimension)
        origin = np.asarray(origin, dtype=float)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "origin", origin)

    @property
    def n_cells(self) -> int:
        return self.cells.shape[0]

    @property
    def measure(self) -> float:
        return self.n_cells * self.cell_size**self.dimension

    def centers(self) -> np.ndarray:
        return self.origin + (self.cells + 0.5) * self.cell_size

    def diameter_bound(self) -> float:
        """Upper bound on the diameter from the cell bounding box."""
        span = self.cells.max(axis=0) - self.cells.min(axis=0) + 1
        return float(np.linalg.norm(span)) * self.cell_size

    def translated(self, offset) -> "GridShape":
        """Shift all cells by a constant integer lattice offset."""
        offset = np.asarray(offset, dtype=np.int64)
        return GridShape(self.dimension, self.cell_size, self.cells + offset, self.origin)

    def to_runlength(self) -> str:
        """Compact text format: header 'N h origin...', then one line per
        lattice row: leading indices, colon, comma-separated start-end ranges
        of the last index."""
        lines = [
            f"{self.dimension} {float(self.cell_size)!r} "
            + " ".join(repr(float(x)) for x in self.origin)
        ]
        order = np.lexsort(self.cells.T[::-1])  # lexicographic by (i0, i1, ..)
        cells = self.cells[order]
        prefix = None
        run_start = run_end = None
        runs: list[str] = []

        def flush():
            if prefix is not None:
                head = " ".join(str(int(x)) for x in prefix)
                lines.append(f"{head} : " + ",".join(runs))

        for row in cells:
            p, last = tuple(row[:-1]), int(row[-1])
            if p != prefix:
                flush()
                prefix, runs = p, []
                run_start = run_end = None
            if run_end is not None and last == run_end + 1:
                run_end = last
                runs[-1] = f"{run_start}-{run_end}"
            else:
                run_start = run_end = last
                runs.append(f"{run_start}-{run_end}")
        flush()
        return "\n".join(lines) + "\n"

    @classmethod
    def from_runlength(cls, text: str) -> "GridShape":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        dim = int(head[0])
        h = float(head[1])
        origin = np.array([float(x) for x in head[2 : 2 + dim]])
        rows = []
        for ln in lines[1:]:
            left, right = ln.split(":")
            prefix = [int(x) for x in left.split()]
            for rng in right.strip().split(","):
                m = re.fullmatch(r"(-?\d+)-(-?\d+)", rng)
                if m is None:
                    raise ValueError(f"bad run {rng!r}")
                lo, hi = int(m.group(1)), int(m.group(2))
                for last in range(lo, hi + 1):
                    rows.append(prefix + [last])
        return cls(dim, h, np.array(rows, dtype=np.int64), origin)


def rasterize(shape: FourierShape, h: float) -> GridShape:
    """Occupy the cells whose centers lie strictly inside the shape (N=2)."""
    if h <= 0:
        raise ValueError("h must be positive")
    rmax = shape.base_radius * (
        1.0 + sum(abs(a) for a in shape.cos_coeffs) + sum(abs(b) for b in shape.sin_coeffs)
    )
    n = int(math.ceil(rmax / h)) + 1
    ax = np.arange(-n, n, dtype=np.int64)
    I, J = np.meshgrid(ax, ax, indexing="ij")
    idx = np.stack([I.ravel(), J.ravel()], axis=1)
    c = (idx + 0.5) * h
    rho = np.hypot(c[:, 0], c[:, 1])
    theta = np.arctan2(c[:, 1], c[:, 0])
    mask = rho < shape.radius(theta)
    if not mask.any():
        raise ValueError("shape rasterizes to zero cells at this h")
    return GridShape(2, h, idx[mask])


def rasterize_ball(N: int, radius: float, h: float) -> GridShape:
    """Rasterized ball of the given radius centered at the origin."""
    if N not in (2, 3):
        raise ValueError("dimension must be 2 or 3")
    if radius <= 0 or h <= 0:
        raise ValueError("radius and h must be positive")
    n = int(math.ceil(radius / h)) + 1
    ax = np.arange(-n, n, dtype=np.int64)
    grids = np.meshgrid(*([ax] * N), indexing="ij")
    idx = np.stack([g.ravel() for g in grids], axis=1)
    c = (idx + 0.5) * h
    mask = (c**2).sum(axis=1) < radius**2
    return GridShape(N, h, idx[mask])

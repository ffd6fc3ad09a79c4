"""Exact ground truth on finite abelian groups Z_N1 x ... x Z_Nm.

The sample lattice of an n-torus grid is itself a finite abelian group, so
everything the continuum pipeline claims can be cross-checked here without
any analysis: all characters of a finite group can be enumerated, the
multiplicative law can be verified over literally every pair of elements,
and identification can be done both by the DFT and by brute-force inner
products against the enumerated tables.  This module is the anchor for the
rest of the package's tests.

A character of the group is chi_k(m) = exp(2*pi*i * sum_j k_j m_j / N_j)
with k_j in [0, N_j); there are exactly prod N_j of them.  The index k uses
that non-negative box internally; :func:`to_symmetric_freq` /
:func:`from_symmetric_freq` convert to and from the symmetric frequency box
the spectral code uses.

All operations are pure; enumeration order and tie-breaking are fixed, so
results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np
from numpy.lib.stride_tricks import as_strided

from .circle import root_of_unity_powers
from .samples import IntVector, _as_vector

#: Largest group size enumerate_characters accepts.
ENUMERATION_CAP = 1 << 20

#: Largest group size verified over literally all pairs; seeded random pairs
#: are used above it to keep the check bounded.
ALL_PAIRS_CAP = 1 << 16

#: Number of sampled pairs used beyond ALL_PAIRS_CAP.
SAMPLED_PAIRS = 1 << 20

#: A table passes the multiplicative check when its worst defect is below this.
HOM_TOL = 1e-12


@dataclass(frozen=True)
class FiniteGroupSpec:
    """The group Z_N1 x ... x Z_Nm; order-1 factors are allowed."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = (
            (int(self.orders),)
            if np.isscalar(self.orders)
            else tuple(int(n) for n in self.orders)
        )
        if len(orders) < 1:
            raise ValueError("group needs at least one factor")
        if any(n < 1 for n in orders):
            raise ValueError(f"factor orders must be >= 1, got {orders}")
        object.__setattr__(self, "orders", orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """A candidate character: one unit-circle value per group element,
    row-major over the factor orders."""

    group: FiniteGroupSpec
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.complex128)
        orders = self.group.orders
        if vals.shape == (self.group.size,):
            vals = vals.reshape(orders)
        elif vals.shape != orders:
            raise ValueError(
                f"table shape {vals.shape} does not match group orders {orders}"
            )
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)


def character_table(g: FiniteGroupSpec, k: IntVector) -> CharacterTable:
    """The character chi_k with k_j in [0, N_j)."""
    kk = _as_vector(k, len(g.orders), "k")
    kk = tuple(int(x) for x in kk)
    for kj, nj in zip(kk, g.orders):
        if not 0 <= kj < nj:
            raise ValueError(f"character index {kk} outside box {g.orders}")
    values = reduce(
        np.multiply.outer, (root_of_unity_powers(kj, nj) for kj, nj in zip(kk, g.orders))
    )
    return CharacterTable(g, values)


def enumerate_characters(
    g: FiniteGroupSpec, cap: int = ENUMERATION_CAP
) -> list[CharacterTable]:
    """All prod(N_j) characters, in row-major order of the index k."""
    if g.size > cap:
        raise ValueError(f"group size {g.size} exceeds enumeration cap {cap}")
    axis_rows = [
        [root_of_unity_powers(kj, nj) for kj in range(nj)] for nj in g.orders
    ]
    out = []
    for k in np.ndindex(*g.orders):
        values = reduce(
            np.multiply.outer, (rows[kj] for rows, kj in zip(axis_rows, k))
        )
        out.append(CharacterTable(g, values))
    return out


def _worst_defect_all_pairs(values: np.ndarray) -> float:
    """max |t(a+b) - t(a) t(b)| over every pair of group elements.

    Addition is per-axis modular; t(a+b) is read through a zero-copy strided
    view of the doubled array.  The defect is symmetric in (a, b), so for
    larger tables only first-axis blocks with b1 >= block start are touched,
    which covers every unordered pair.
    """
    orders = values.shape
    size = values.size
    doubled = values
    for ax in range(values.ndim):
        doubled = np.concatenate([doubled, doubled], axis=ax)
    st = doubled.strides
    hank = as_strided(doubled, shape=orders + orders, strides=st + st)
    ndim = values.ndim
    pad = (1,) * ndim

    if size * size <= 1 << 14:
        o = values.reshape(orders + pad) * values
        np.subtract(hank, o, out=o)
        m2 = o.real**2 + o.imag**2
        return float(np.sqrt(m2.max()))

    n1 = orders[0]
    rest = size // n1
    block = max(1, (1 << 20) // (rest * size))
    worst = 0.0
    body = (slice(None),) * (ndim - 1)
    for r0 in range(0, n1, block):
        r1 = min(r0 + block, n1)
        va = values[r0:r1]
        vb = values[r0:]
        o = va.reshape(va.shape + pad) * vb
        np.subtract(hank[(slice(r0, r1),) + body + (slice(r0, None),) + body], o, out=o)
        m2 = o.real**2 + o.imag**2
        worst = max(worst, float(m2.max()))
    return float(np.sqrt(worst))


def _worst_defect_sampled(values: np.ndarray, pairs: int, seed: int) -> float:
    rng = np.random.default_rng(seed)
    orders = np.asarray(values.shape)
    ndim = values.ndim
    a = rng.integers(0, orders, size=(pairs, ndim))
    b = rng.integers(0, orders, size=(pairs, ndim))
    zero = np.zeros((1, ndim), dtype=a.dtype)
    a = np.concatenate([zero, a])
    b = np.concatenate([zero, b])
    ab = (a + b) % orders
    defect = values[tuple(ab.T)] - values[tuple(a.T)] * values[tuple(b.T)]
    return float(np.abs(defect).max())


def is_homomorphism_exhaustive(
    t: CharacterTable,
    tol: float = HOM_TOL,
    all_pairs_cap: int = ALL_PAIRS_CAP,
    seed: int = 0,
) -> tuple[bool, float]:
    """Verify t(a+b) = t(a) t(b), returning (passes, worst defect).

    Literally every pair is checked up to ``all_pairs_cap`` group elements;
    beyond that, a seeded sample of pairs (always including (0, 0)) bounds
    the cost, and the result is explicitly a sampled verdict.
    """
    if t.group.size <= all_pairs_cap:
        worst = _worst_defect_all_pairs(t.values)
    else:
        worst = _worst_defect_sampled(t.values, SAMPLED_PAIRS, seed)
    return worst <= tol, worst


def identify_finite(
    t: CharacterTable, floor: float = 0.9
) -> tuple[int, ...] | None:
    """Identify a table by its DFT spike.

    A character has coefficient exactly 1 at its own k and 0 elsewhere, by
    discrete orthogonality.  For non-characters the argmax bin is returned
    only when its magnitude reaches ``floor``; ties take the lexicographically
    smallest k.
    """
    mags = np.abs(np.fft.fftn(t.values)) / t.group.size
    flat = int(np.argmax(mags))
    if float(mags.flat[flat]) < floor:
        return None
    return tuple(int(i) for i in np.unravel_index(flat, t.group.orders))


def identify_finite_brute(
    t: CharacterTable,
    characters: list[CharacterTable] | None = None,
    floor: float = 0.9,
) -> tuple[int, ...] | None:
    """Identify a table by inner products against every enumerated character.

    The independent route for :func:`identify_finite`: no fast transform,
    just |<t, chi_k>| / |G| maximized over the full character list.
    """
    if characters is None:
        characters = enumerate_characters(t.group)
    flat = t.values.ravel()
    size = t.group.size
    best_k: tuple[int, ...] | None = None
    best = -1.0
    for k, chi in zip(np.ndindex(*t.group.orders), characters):
        mag = abs(np.vdot(chi.values.ravel(), flat)) / size
        if mag > best:
            best = mag
            best_k = tuple(int(i) for i in k)
    return best_k if best >= floor else None


def to_symmetric_freq(k: IntVector, orders: IntVector) -> tuple[int, ...]:
    """Map a character index from the box prod [0, N_j) to the symmetric
    box prod [-N_j//2, N_j - N_j//2) used by the spectral code."""
    oo = (int(orders),) if np.isscalar(orders) else tuple(int(n) for n in orders)
    kk = _as_vector(k, len(oo), "k")
    return tuple(((int(kj) + n // 2) % n) - n // 2 for kj, n in zip(kk, oo))


def from_symmetric_freq(k: IntVector, orders: IntVector) -> tuple[int, ...]:
    """Inverse of :func:`to_symmetric_freq`: reduce each component mod N_j."""
    oo = (int(orders),) if np.isscalar(orders) else tuple(int(n) for n in orders)
    kk = _as_vector(k, len(oo), "k")
    return tuple(int(kj) % n for kj, n in zip(kk, oo))

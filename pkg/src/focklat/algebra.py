"""SU(1,1) generators, exponential phase operators and reordering maps.

The generator triple (K0, K+, K-) is realised at Bargmann index 1/2,
where the ladder matrix elements are integers:

    <n+1|K+|n> = n + 1,   <n-1|K-|n> = n,   K0 = diag(n + 1/2).

The exponential phase operators V, Vdag are the one-sided shifts on the
Fock ladder.  The reordering maps convert between the two orderings of
the exponential triple product

    exp(a+ K+) exp(ln a0 K0) exp(a- K-)  =  exp(b- K-) exp(ln b0 K0) exp(b+ K+)

and ``verify_bch`` measures the identity at the matrix level.
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import fock
from .errors import BranchError, DimensionError, RangeError, SingularParameterError
from .fock import TruncatedOperator


@dataclass(frozen=True)
class Su11Generators:
    k0: TruncatedOperator
    kplus: TruncatedOperator
    kminus: TruncatedOperator
    bargmann_k: float = 0.5


@dataclass(frozen=True)
class PhaseOperators:
    v: TruncatedOperator
    vdag: TruncatedOperator


class Ordering(Enum):
    """Which ladder exponential stands leftmost in the triple product."""

    NORMAL_FIRST = "normal-first"        # K+ leftmost ("A side")
    ANTINORMAL_FIRST = "antinormal-first"  # K- leftmost ("B side")


@dataclass(frozen=True)
class BCHParams:
    plus: complex
    zero: complex
    minus: complex
    ordering: Ordering

    def __post_init__(self):
        if self.zero == 0:
            raise BranchError("zero-parameter must be nonzero (its logarithm is taken)")


def su11_generators(dim):
    """Build (K0, K+, K-) at Bargmann index 1/2 on an N-level space."""
    n = np.arange(1, dim)
    kp = np.zeros((dim, dim), dtype=complex)
    km = np.zeros((dim, dim), dtype=complex)
    kp[n, n - 1] = n
    km[n - 1, n] = n
    k0 = np.diag(np.arange(dim) + 0.5).astype(complex)
    return Su11Generators(
        k0=TruncatedOperator(k0, edge_band=0),
        kplus=TruncatedOperator(kp, edge_band=1),
        kminus=TruncatedOperator(km, edge_band=0),
    )


def phase_operators(dim):
    """Exponential phase operators: V|n> = |n-1>, Vdag|n> = |n+1>."""
    n = np.arange(1, dim)
    v = np.zeros((dim, dim), dtype=complex)
    vd = np.zeros((dim, dim), dtype=complex)
    v[n - 1, n] = 1.0
    vd[n, n - 1] = 1.0
    return PhaseOperators(
        v=TruncatedOperator(v, edge_band=0),
        vdag=TruncatedOperator(vd, edge_band=1),
    )


def bch_antinormal_to_normal(b):
    """Map antinormal-ordered parameters (B side) to the normal ordering.

        A+- = B+- B0 / (1 - B+ B0 B-),   A0 = B0 / (1 - B+ B0 B-)^2
    """
    if b.ordering is not Ordering.ANTINORMAL_FIRST:
        raise SingularParameterError("expected antinormal-first parameters")
    den = 1.0 - b.plus * b.zero * b.minus
    if abs(den) < 1e-150:
        raise SingularParameterError("1 - B+ B0 B- vanishes; ordering map is singular")
    return BCHParams(
        plus=b.plus * b.zero / den,
        zero=b.zero / den**2,
        minus=b.minus * b.zero / den,
        ordering=Ordering.NORMAL_FIRST,
    )


def bch_normal_to_antinormal(a):
    """Map normal-ordered parameters (A side) to the antinormal ordering.

        B+- = A+- / (A0 - A+ A-),   B0 = (A0 - A+ A-)^2 / A0

    The denominator A0 - A+ A- (rather than 1 - A+ A-) is what makes the
    map the exact inverse of :func:`bch_antinormal_to_normal`; the pair
    round-trips to machine precision.
    """
    if a.ordering is not Ordering.NORMAL_FIRST:
        raise SingularParameterError("expected normal-first parameters")
    den = a.zero - a.plus * a.minus
    if abs(den) < 1e-150:
        raise SingularParameterError("A0 - A+ A- vanishes; ordering map is singular")
    return BCHParams(
        plus=a.plus / den,
        zero=den**2 / a.zero,
        minus=a.minus / den,
        ordering=Ordering.ANTINORMAL_FIRST,
    )


def _triple_product(params, gen):
    ln0 = cmath.log(params.zero)  # principal branch
    e0 = fock.expm(gen.k0, ln0)
    if params.ordering is Ordering.NORMAL_FIRST:
        return fock.expm(gen.kplus, params.plus) @ e0 @ fock.expm(gen.kminus, params.minus)
    return fock.expm(gen.kminus, params.minus) @ e0 @ fock.expm(gen.kplus, params.plus)


def _block_residual(lhs, rhs, keep):
    lb = lhs[:keep, :keep]
    rb = rhs[:keep, :keep]
    dev = np.abs(lb - rb).max()
    scale = max(np.abs(lb).max(), np.abs(rb).max())
    return float(dev / max(1.0, scale))


def _default_guard(params, retained):
    # The antinormal-ordered product's (m, n) entry is an infinite sum
    # whose terms peak near k = max(m, n) / (1 - sqrt(|X+ X-|)); enlarge
    # the working space so that sum has converged on the retained block.
    q = math.sqrt(abs(params.plus * params.minus))
    if q >= 0.999:
        q = 0.999
    return int(math.ceil(retained * q / (1.0 - q))) + 16


def verify_bch(params, dim, edge_exclude=None, guard=None):
    """Residual of the reordering identity, measured at matrix level.

    Both ordered triple products are built with the matrix exponential in
    a working space enlarged by ``guard`` levels, and compared entrywise
    on the leading (dim - edge_exclude) block.  The returned deviation is
    normalised by the largest entry magnitude on that block (floored at
    one), since the products' entries can span many orders of magnitude.

    The principal logarithm of the zero-parameter is used on both sides;
    sweeps crossing arg = +-pi must unwrap externally.
    """
    dim = int(dim)
    if dim < 2:
        raise DimensionError(f"need dimension >= 2, got {dim}")
    b = math.ceil(dim / 4) if edge_exclude is None else int(edge_exclude)
    if not 0 <= b < dim:
        raise DimensionError(f"edge exclusion {b} outside [0, {dim})")
    if guard is None:
        guard = _default_guard(params, dim - b)
    gen = su11_generators(dim + int(guard))
    if params.ordering is Ordering.NORMAL_FIRST:
        a_side, b_side = params, bch_normal_to_antinormal(params)
    else:
        a_side, b_side = bch_antinormal_to_normal(params), params
    lhs = _triple_product(a_side, gen)
    rhs = _triple_product(b_side, gen)
    return _block_residual(lhs.mat, rhs.mat, dim - b)


def rotation_conjugation_check(alpha, dim, edge_exclude=None):
    """Residual of the quarter-turn conjugation identity

        exp(-i pi n/2) exp(i a (Vdag + V)) exp(i pi n/2) = exp(a (Vdag - V))

    for real ``alpha``, compared entrywise on the leading block with the
    same normalisation as :func:`verify_bch`.
    """
    dim = int(dim)
    alpha = float(alpha)
    if abs(alpha) > dim / 8:
        raise RangeError(f"|alpha| = {abs(alpha)} too large for dimension {dim} (need <= dim/8)")
    b = math.ceil(dim / 4) if edge_exclude is None else int(edge_exclude)
    ph = phase_operators(dim)
    rot = np.exp(-0.5j * np.pi * np.arange(dim))
    mid = fock.expm(ph.vdag + ph.v, 1j * alpha).mat
    lhs = (rot[:, None] * mid) * rot.conj()[None, :]
    rhs = fock.expm(ph.vdag - ph.v, alpha).mat
    return _block_residual(lhs, rhs, dim - b)

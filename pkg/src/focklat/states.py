"""Constructors for the coherent-state families and their residual checks.

Each family comes in a direct amplitude form and, where applicable, an
ordered-exponential form built with the matrix exponential in an enlarged
working space ("guard" levels) so truncation does not contaminate the
retained amplitudes.  ``eigen_residual`` gives a uniform way to test the
eigenvalue relations the states satisfy.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import fock, specfun
from .algebra import phase_operators, su11_generators
from .errors import BesselRootError, DimensionError, RangeError
from .fock import TruncatedOperator

MAX_ALPHA = 20.0  # keeps Bessel arguments 2|alpha| inside the table range

_TWO_PI = 2.0 * math.pi


class StateFamily(Enum):
    PHASE = "phase"
    BARUT_GIRARDELLO = "bg"
    LONDON = "london"
    SU11_PERELOMOV = "su11"


@dataclass(frozen=True)
class StateSpec:
    """Family, parameter and space size, as accepted by the CLI."""

    family: StateFamily
    param: complex
    dim: int
    bargmann_k: float = 0.5


def _check_dim(dim):
    if not isinstance(dim, (int, np.integer)) or dim < 2:
        raise DimensionError(f"state needs dimension >= 2, got {dim!r}")
    return int(dim)


def _check_alpha(alpha):
    if abs(alpha) > MAX_ALPHA:
        raise RangeError(f"|alpha| = {abs(alpha)} exceeds supported maximum {MAX_ALPHA}")
    return alpha


def phase_state(phi, dim):
    """Phase state amplitudes c_j = exp(i phi (j + 1/2)) / sqrt(2 pi).

    Deliberately not normalised: the squared norm is N / (2 pi), which the
    eigenvalue examples rely on.
    """
    dim = _check_dim(dim)
    j = np.arange(dim)
    return np.exp(1j * phi * (j + 0.5)) / math.sqrt(_TWO_PI)


def phase_state_perelomov(phi, dim, guard=96):
    """Phase state built as an ordered product of group exponentials,

        (1/sqrt(2 pi)) exp(e^{i phi} K+) exp(i phi K0) exp(-e^{-i phi} K-) |0>,

    evaluated with three matrix exponentials in dim + guard levels and cut
    back to dim.  Agrees with :func:`phase_state` on the retained block.
    """
    dim = _check_dim(dim)
    if guard < 1:
        raise DimensionError(f"guard must be positive, got {guard}")
    gen = su11_generators(dim + int(guard))
    u = fock.vacuum(dim + int(guard))
    u = fock.expm(gen.kminus, -np.exp(-1j * phi)).apply(u)
    u = fock.expm(gen.k0, 1j * phi).apply(u)
    u = fock.expm(gen.kplus, np.exp(1j * phi)).apply(u)
    return u[:dim] / math.sqrt(_TWO_PI)


def bg_state(alpha, dim):
    """Lowering-operator eigenstate with amplitudes

        c_j = alpha^j / (j! sqrt(I_0(2|alpha|))),

    an eigenstate of K- with eigenvalue alpha.
    """
    dim = _check_dim(dim)
    alpha = _check_alpha(complex(alpha))
    c = np.empty(dim, dtype=complex)
    c[0] = 1.0
    for j in range(1, dim):
        c[j] = c[j - 1] * alpha / j
    return c / math.sqrt(specfun.bessel_i(0, 2.0 * abs(alpha)))


def bg_state_ordered(alpha, dim, guard=None):
    """Same state via the ordered product

        I_0(2|alpha|)^{-1/2} exp(alpha Vdag) exp(-conj(alpha) V) |0>,

    built with matrix exponentials in dim + guard levels.  The default
    guard keeps the discarded tail below the comparison tolerances for
    the supported |alpha| range.
    """
    dim = _check_dim(dim)
    alpha = _check_alpha(complex(alpha))
    if guard is None:
        guard = int(math.ceil(2.0 * abs(alpha) * math.e)) + 32
    ph = phase_operators(dim + int(guard))
    u = fock.vacuum(dim + int(guard))
    u = fock.expm(ph.v, -np.conj(alpha)).apply(u)
    u = fock.expm(ph.vdag, alpha).apply(u)
    return u[:dim] / math.sqrt(specfun.bessel_i(0, 2.0 * abs(alpha)))


def london_state(alpha, dim):
    """Shift-operator coherent state with amplitudes

        c_j = (j + 1) J_{j+1}(2 alpha) / alpha,   alpha real,

    continued to the vacuum at alpha = 0 (the amplitudes are 0/0 there,
    but the limit is regular).
    """
    dim = _check_dim(dim)
    if complex(alpha).imag != 0.0:
        raise RangeError("london_state takes a real parameter")
    alpha = float(np.real(alpha))
    _check_alpha(alpha)
    if alpha == 0.0:
        return fock.vacuum(dim)
    j = np.arange(dim)
    jv = specfun.bessel_j_all(dim, 2.0 * alpha)
    return ((j + 1) * jv[1:] / alpha).astype(complex)


def london_state_ordered(alpha, dim, guard=None):
    """London state via exp(alpha (Vdag - V)) |0> in a guarded space."""
    dim = _check_dim(dim)
    if complex(alpha).imag != 0.0:
        raise RangeError("london_state takes a real parameter")
    alpha = float(np.real(alpha))
    _check_alpha(alpha)
    if guard is None:
        guard = int(math.ceil(2.0 * abs(alpha) * math.e)) + 32
    ph = phase_operators(dim + int(guard))
    u = fock.expm(ph.vdag - ph.v, alpha).apply(fock.vacuum(dim + int(guard)))
    return u[:dim]


def deformed_annihilation(alpha, dim, root_tol=1e-10):
    """Lowering operator whose eigenstate is :func:`london_state`,

        <n|C|n+1> = alpha J_{n+1}(2 alpha) / ((n+2) J_{n+2}(2 alpha)) * (n+1).

    Raises :class:`BesselRootError` when some J_{n+2}(2 alpha) sits on a
    root: the ratio test compares it against its neighbouring orders, so
    the benign super-exponential decay of high orders at small argument
    does not trip the guard.
    """
    dim = _check_dim(dim)
    if complex(alpha).imag != 0.0:
        raise RangeError("deformed_annihilation takes a real parameter")
    alpha = float(np.real(alpha))
    _check_alpha(alpha)
    jv = specfun.bessel_j_all(dim + 1, 2.0 * alpha) if alpha != 0.0 else np.zeros(dim + 2)
    for n in range(dim - 1):
        neighbour = max(abs(jv[n + 1]), abs(jv[n + 3])) if n + 3 <= dim + 1 else abs(jv[n + 1])
        if abs(jv[n + 2]) <= root_tol * neighbour:
            raise BesselRootError(
                f"2*alpha = {2 * alpha} is too close to a root of J_{n + 2}; "
                f"the deformed lowering operator is singular at level n = {n}",
                level=n,
            )
    n = np.arange(dim - 1)
    sub = alpha * jv[n + 1] / ((n + 2) * jv[n + 2]) * (n + 1)
    mat = np.zeros((dim, dim), dtype=complex)
    mat[n, n + 1] = sub
    return TruncatedOperator(mat, edge_band=0)


def su11_perelomov_state(alpha, k, dim):
    """Group-displaced vacuum at Bargmann index k,

        c_m = (1 - |mu|^2)^k sqrt(Gamma(2k + m) / (m! Gamma(2k))) mu^m

    with mu = (alpha/|alpha|) tanh|alpha| (mu = 0 at alpha = 0).  Gamma
    ratios go through log-gamma differences so large m cannot overflow.
    """
    dim = _check_dim(dim)
    alpha = _check_alpha(complex(alpha))
    if not k > 0:
        raise RangeError(f"Bargmann index must be positive, got {k}")
    if alpha == 0:
        return fock.vacuum(dim)
    mu = (alpha / abs(alpha)) * math.tanh(abs(alpha))
    m = np.arange(dim)
    lg = np.array([math.lgamma(2 * k + mm) - math.lgamma(mm + 1) for mm in m])
    lg -= math.lgamma(2 * k)
    return (1.0 - abs(mu) ** 2) ** k * np.exp(0.5 * lg) * mu**m


def eigen_residual(op, vec, eigenvalue, exclude_top=0):
    """Relative eigenvalue defect ||(op v - lambda v)|_{kept}|| / ||v||.

    The top ``exclude_top`` components are dropped before taking the norm,
    since the truncated ladder always breaks the relation at the boundary.
    """
    v = np.asarray(vec, dtype=complex)
    if v.shape[0] != op.dim:
        raise DimensionError(f"state dimension {v.shape[0]} does not match operator {op.dim}")
    keep = op.dim - int(exclude_top)
    r = op.apply(v) - complex(eigenvalue) * v
    return float(np.linalg.norm(r[:keep]) / np.linalg.norm(v))


def build_state(spec):
    """Construct the amplitudes described by a :class:`StateSpec`."""
    if spec.family is StateFamily.PHASE:
        if complex(spec.param).imag != 0.0:
            raise RangeError("phase-state angle must be real")
        return phase_state(float(np.real(spec.param)), spec.dim)
    if spec.family is StateFamily.BARUT_GIRARDELLO:
        return bg_state(spec.param, spec.dim)
    if spec.family is StateFamily.LONDON:
        return london_state(spec.param, spec.dim)
    if spec.family is StateFamily.SU11_PERELOMOV:
        return su11_perelomov_state(spec.param, spec.bargmann_k, spec.dim)
    raise RangeError(f"unknown state family {spec.family!r}")

"""Joint qubit-field state of the dispersive interaction and its partial traces.

The atom starts in (|e> + |g>)/sqrt(2) and the field in a coherent state
|beta>. Dispersive evolution rotates the field phase by -chi*t for the
excited component and +chi*t for the ground one, so the joint state is

    |psi> = |e>|c> + |g>|s>,  |c> = |beta e^{-i chi t}>/sqrt2,
                              |s> = |beta e^{+i chi t}>/sqrt2.

The joint density matrix is stored as the 2x2 block array of field dyads,
qubit index 0 = excited, 1 = ground.
"""

from dataclasses import dataclass, field
import cmath
import math

import numpy as np

from . import fock
from .errors import TruncationError
from .fock import Tolerances


@dataclass(frozen=True)
class ModelParams:
    beta: complex
    chi: float = 1.0
    t: float = 0.0
    dim: int | None = None
    tol: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self):
        object.__setattr__(self, "beta", complex(self.beta))
        if self.dim is None:
            object.__setattr__(self, "dim", fock.default_dim(self.beta))
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if not (math.isfinite(self.chi) and math.isfinite(self.t)):
            raise ValueError("chi and t must be finite")
        tail = fock.coherent_tail_mass(self.beta, self.dim)
        if tail > self.tol.tail_tol:
            raise TruncationError(
                f"dim={self.dim} leaves coherent tail mass {tail:.3e} for |beta|={abs(self.beta)}; "
                f"use dim >= {fock.default_dim(self.beta)}"
            )

    @classmethod
    def from_chit(cls, beta, chit, dim=None, tol=None):
        """Parameters at dimensionless interaction time ``chi*t`` (chi = 1)."""
        return cls(beta=beta, chi=1.0, t=chit, dim=dim, tol=tol or Tolerances())

    @property
    def chit(self):
        return self.chi * self.t


@dataclass(frozen=True)
class JointState:
    c: np.ndarray
    s: np.ndarray
    blocks: tuple  # ((|c><c|, |c><s|), (|s><c|, |s><s|))

    @property
    def dim(self):
        return self.c.shape[0]

    @property
    def kets(self):
        return (self.c, self.s)

    def matrix(self):
        """The assembled (2 dim) x (2 dim) density matrix, qubit index major."""
        return np.block([[self.blocks[0][0], self.blocks[0][1]],
                         [self.blocks[1][0], self.blocks[1][1]]])


def build_joint(p: ModelParams) -> JointState:
    rot = cmath.exp(1j * p.chit)
    c = fock.coherent_state(p.beta / rot, p.dim, p.tol.tail_tol) / math.sqrt(2)
    s = fock.coherent_state(p.beta * rot, p.dim, p.tol.tail_tol) / math.sqrt(2)
    kets = (c, s)
    blocks = tuple(tuple(fock.op_from_dyad(u, v) for v in kets) for u in kets)
    for row in blocks:
        for b in row:
            b.setflags(write=False)
    return JointState(c=c, s=s, blocks=blocks)


def reduce_atom(j: JointState) -> np.ndarray:
    """Tr_B of the joint state: entry [a, a'] is <x_a'|x_a> with x = (c, s)."""
    k = j.kets
    return np.array([[fock.inner(k[b], k[a]) for b in range(2)] for a in range(2)])


def reduce_field(j: JointState) -> np.ndarray:
    return j.blocks[0][0] + j.blocks[1][1]


def field_power(j: JointState, n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    return np.linalg.matrix_power(reduce_field(j), n)


def weighted_atom_trace(j: JointState, q) -> np.ndarray:
    """Tr_A{rho (q x 1_field)} = sum_{a,a'} q[a', a] * block[a][a']."""
    q = np.asarray(q)
    out = np.zeros((j.dim, j.dim), dtype=complex)
    for a in range(2):
        for b in range(2):
            out += q[b, a] * j.blocks[a][b]
    return out


def weighted_field_trace(j: JointState, f) -> np.ndarray:
    """Tr_B{rho (1_atom x f)}; entry [a, a'] is Tr(block[a][a'] f)."""
    f = np.asarray(f)
    if f.shape != (j.dim, j.dim):
        raise ValueError(f"field operator shape {f.shape} does not match dim {j.dim}")
    return np.array([[np.trace(j.blocks[a][b] @ f) for b in range(2)] for a in range(2)])

"""Per-qubit unitaries: tensor-product operators and the single-qubit Clifford group.

A :class:`LocalUnitary` is a global scalar phase times one 2x2 factor per
qubit.  The 24-element single-qubit Clifford group is generated by closure
from {H, S}, canonicalized up to global phase, and its Pauli conjugation
table is derived from dense 2x2 algebra rather than written by hand.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

import numpy as np

ATOL = 1e-9

PAULI_MATS: dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PHASE_S = np.array([[1, 0], [0, 1j]], dtype=complex)


def pauli_rotation(letter: str, angle: float) -> np.ndarray:
    """exp(i * angle * P) for a single-qubit Pauli P."""
    p = PAULI_MATS[letter]
    return np.cos(angle) * PAULI_MATS["I"] + 1j * np.sin(angle) * p


def _frozen(mat: np.ndarray) -> np.ndarray:
    out = np.array(mat, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    """global_phase * (factors[0] x factors[1] x ... ), position 0 leftmost."""

    global_phase: complex
    factors: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        if abs(abs(self.global_phase) - 1.0) > ATOL:
            raise ValueError("global phase must have unit modulus")
        if not self.factors:
            raise ValueError("need at least one factor")
        frozen = []
        for q, f in enumerate(self.factors):
            f = np.asarray(f, dtype=complex)
            if f.shape != (2, 2):
                raise ValueError(f"factor on qubit {q} is not 2x2")
            if np.max(np.abs(f @ f.conj().T - np.eye(2))) > ATOL:
                raise ValueError(f"factor on qubit {q} is not unitary")
            frozen.append(_frozen(f))
        object.__setattr__(self, "factors", tuple(frozen))
        object.__setattr__(self, "global_phase", complex(self.global_phase))

    @classmethod
    def identity(cls, n: int) -> "LocalUnitary":
        return cls(1.0, tuple(PAULI_MATS["I"] for _ in range(n)))

    @classmethod
    def embed(cls, n: int, placed: Mapping[int, np.ndarray], global_phase: complex = 1.0) -> "LocalUnitary":
        """Identity everywhere except the given position -> matrix entries."""
        facs = [placed.get(q, PAULI_MATS["I"]) for q in range(n)]
        return cls(global_phase, tuple(facs))

    @property
    def n(self) -> int:
        return len(self.factors)

    def compose(self, other: "LocalUnitary") -> "LocalUnitary":
        """self applied after other (operator product self @ other)."""
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        facs = tuple(a @ b for a, b in zip(self.factors, other.factors))
        return LocalUnitary(self.global_phase * other.global_phase, facs)

    def inverse(self) -> "LocalUnitary":
        return LocalUnitary(self.global_phase.conjugate(),
                            tuple(f.conj().T for f in self.factors))

    def dense(self) -> np.ndarray:
        """Full 2^n x 2^n matrix; intended for n <= 12."""
        if self.n > 12:
            raise ValueError("dense form limited to 12 qubits")
        out = np.array([[self.global_phase]], dtype=complex)
        for f in self.factors:
            out = np.kron(out, f)
        return out


def local_unitary_to_dict(u: LocalUnitary) -> dict:
    def c(v: complex) -> list[float]:
        return [float(v.real), float(v.imag)]

    return {
        "global_phase": c(u.global_phase),
        "factors": [[[c(f[0, 0]), c(f[0, 1])], [c(f[1, 0]), c(f[1, 1])]] for f in u.factors],
    }


# --- single-qubit Clifford group ---

def canonical_phase(mat: np.ndarray) -> np.ndarray:
    """Rescale so the first non-negligible entry (row-major) is real positive."""
    flat = mat.reshape(-1)
    for v in flat:
        if abs(v) > 1e-6:
            return mat * (abs(v) / v)
    raise ValueError("zero matrix has no canonical phase")


def _key(mat: np.ndarray) -> tuple:
    return tuple(np.round(mat, 9).reshape(-1).view(float))


@lru_cache(maxsize=1)
def single_qubit_cliffords() -> tuple[np.ndarray, ...]:
    """The 24 single-qubit Cliffords, canonical up to global phase.

    Enumeration order is fixed: breadth-first closure from the identity under
    left multiplication by H then S, deduplicated after phase canonicalization.
    """
    start = canonical_phase(PAULI_MATS["I"])
    found = [start]
    keys = {_key(start)}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for g in (HADAMARD, PHASE_S):
            v = canonical_phase(g @ u)
            k = _key(v)
            if k not in keys:
                keys.add(k)
                found.append(v)
                queue.append(v)
    if len(found) != 24:
        raise RuntimeError(f"Clifford closure produced {len(found)} elements")
    return tuple(_frozen(m) for m in found)


def clifford_pauli_action(mat: np.ndarray) -> tuple[tuple[int, str], tuple[int, str]] | None:
    """((sign, letter) for U X U+, same for U Z U+), or None if not Clifford.

    Signs are +-1; matching tolerance 1e-9.
    """
    out = []
    for src in ("X", "Z"):
        img = mat @ PAULI_MATS[src] @ mat.conj().T
        hit = None
        for letter in ("X", "Y", "Z"):
            for sign in (1, -1):
                if np.max(np.abs(img - sign * PAULI_MATS[letter])) <= ATOL:
                    hit = (sign, letter)
                    break
            if hit:
                break
        if hit is None:
            return None
        out.append(hit)
    return out[0], out[1]


@lru_cache(maxsize=1)
def clifford_conjugation_table() -> tuple[tuple[tuple[int, str], tuple[int, str]], ...]:
    """Conjugation action of each canonical Clifford, in enumeration order."""
    table = []
    for mat in single_qubit_cliffords():
        action = clifford_pauli_action(mat)
        if action is None:
            raise RuntimeError("canonical Clifford failed its own conjugation check")
        table.append(action)
    return tuple(table)


def iter_clifford_assignments(n: int) -> Iterator[tuple[int, ...]]:
    """Lexicographic index tuples into the canonical 24-element list."""
    import itertools

    return itertools.product(range(24), repeat=n)

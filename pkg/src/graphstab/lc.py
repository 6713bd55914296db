"""Local-complementation unitaries, LC-orbit enumeration, and brute-force
local-Clifford equivalence search between dense states.

The search space per qubit is the canonical 24-element single-qubit Clifford
list from :mod:`graphstab.localops`; assignments are scanned in lexicographic
order over positions, so witnesses are deterministic across runs.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import Graph, canonical_key, local_complement
from .localops import LocalUnitary, PAULI_MATS, pauli_rotation, single_qubit_cliffords
from .states import ATOL, StateVector, apply_local, build_graph_state, equal_up_to_global_phase

MAX_SEARCH_QUBITS = 6
MAX_ORBIT_QUBITS = 12
_BATCH_TAIL = 3  # qubits handled by one fully vectorized block


def tau_unitary(g: Graph, a: str) -> LocalUnitary:
    """The local unitary implementing local complementation at `a`.

    Global phase e^{i pi/4}, factor e^{i pi/4 X} on `a`, e^{-i pi/4 Z} on each
    neighbor, identity elsewhere.  With this fixed phase convention the map
    |g> -> |tau_a(g)> is exact for degree-2 vertices and holds up to a global
    phase (i * e^{-i pi deg(a)/4}) otherwise.
    """
    pos = g.position(a)
    placed = {pos: pauli_rotation("X", math.pi / 4)}
    row = g.rows[pos]
    for j in range(g.n):
        if row >> j & 1:
            placed[j] = pauli_rotation("Z", -math.pi / 4)
    return LocalUnitary.embed(g.n, placed, complex(math.cos(math.pi / 4), math.sin(math.pi / 4)))


@dataclass(frozen=True)
class OrbitMember:
    graph: Graph
    witness: LocalUnitary
    path: tuple[str, ...]


@dataclass(frozen=True)
class OrbitReport:
    seed: Graph
    members: tuple[OrbitMember, ...]
    truncated: bool


def enumerate_orbit(seed: Graph, max_members: int | None = None,
                    verify: bool | None = None) -> OrbitReport:
    """Breadth-first closure of `seed` under local complementation.

    Members are deduplicated by canonical key and each carries the composed
    witness unitary plus the complementation path (first move first).  When
    `verify` is true (default for n <= 6) every witness is checked against
    the dense engine, up to global phase.
    """
    if seed.n > MAX_ORBIT_QUBITS:
        raise ValueError(f"orbit enumeration limited to {MAX_ORBIT_QUBITS} vertices")
    if max_members is not None and max_members < 1:
        raise ValueError("max_members must be positive")
    if verify is None:
        verify = seed.n <= MAX_SEARCH_QUBITS

    members = [OrbitMember(seed, LocalUnitary.identity(seed.n), ())]
    seen = {canonical_key(seed)}
    queue = deque(members)
    truncated = False
    while queue and not truncated:
        parent = queue.popleft()
        for a in seed.names:
            child = local_complement(parent.graph, a)
            key = canonical_key(child)
            if key in seen:
                continue
            if max_members is not None and len(members) >= max_members:
                truncated = True
                break
            seen.add(key)
            witness = tau_unitary(parent.graph, a).compose(parent.witness)
            member = OrbitMember(child, witness, parent.path + (a,))
            members.append(member)
            queue.append(member)

    report = OrbitReport(seed, tuple(members), truncated)
    if verify:
        _verify_orbit(report)
    return report


def _verify_orbit(report: OrbitReport) -> None:
    seed_state = build_graph_state(report.seed)
    for member in report.members:
        got = apply_local(member.witness, seed_state)
        want = build_graph_state(member.graph)
        if not equal_up_to_global_phase(got, want):
            raise RuntimeError(f"orbit witness for path {member.path} failed the dense check")


@dataclass(frozen=True)
class EquivalenceWitness:
    found: bool
    unitary: LocalUnitary | None = None


@lru_cache(maxsize=4)
def _tail_ops(t: int) -> np.ndarray:
    """Stack of all 24^t Kronecker products over t qubits, lexicographic order."""
    cliffs = single_qubit_cliffords()
    dim = 2**t
    out = np.empty((24**t, dim, dim), dtype=complex)
    for k, combo in enumerate(itertools.product(cliffs, repeat=t)):
        m = np.array([[1.0]], dtype=complex)
        for f in combo:
            m = np.kron(m, f)
        out[k] = m
    out.setflags(write=False)
    return out


def _apply_at(amps: np.ndarray, mat: np.ndarray, pos: int, n: int) -> np.ndarray:
    t = amps.reshape([2] * n)
    t = np.tensordot(mat, t, axes=([1], [pos]))
    return np.moveaxis(t, 0, pos).reshape(-1)


def lc_search(source: StateVector, target: StateVector,
              atol: float = ATOL) -> EquivalenceWitness:
    """Exhaustive scan of per-qubit Clifford assignments mapping source to target.

    Returns the first match in canonical (lexicographic) enumeration order,
    with the witness global phase fixed so the map is exact, or found=False
    after all 24^n candidates.
    """
    if source.n != target.n:
        raise ValueError("qubit counts differ")
    n = source.n
    if n > MAX_SEARCH_QUBITS:
        raise ValueError(f"search limited to {MAX_SEARCH_QUBITS} qubits (24^n candidates)")
    cliffs = single_qubit_cliffords()
    t = min(n, _BATCH_TAIL)
    tail = _tail_ops(t)
    target_block = target.amps.reshape(2 ** (n - t), 2**t)

    def scan(pos: int, amps: np.ndarray, prefix: tuple[int, ...]):
        if pos == n - t:
            block = amps.reshape(2 ** (n - t), 2**t)
            cross = target_block.conj().T @ block  # (2^t, 2^t)
            overlaps = np.tensordot(tail, cross, axes=([1, 2], [0, 1]))
            hits = np.flatnonzero(np.abs(np.abs(overlaps) - 1.0) <= atol)
            if hits.size:
                k = int(hits[0])
                digits = []
                for _ in range(t):
                    digits.append(k % 24)
                    k //= 24
                return prefix + tuple(reversed(digits)), overlaps[int(hits[0])]
            return None
        for c in range(24):
            found = scan(pos + 1, _apply_at(amps, cliffs[c], pos, n), prefix + (c,))
            if found is not None:
                return found
        return None

    hit = scan(0, source.amps, ())
    if hit is None:
        return EquivalenceWitness(False, None)
    assignment, ov = hit
    phase = ov.conjugate() / abs(ov)
    witness = LocalUnitary(phase, tuple(cliffs[c] for c in assignment))
    return EquivalenceWitness(True, witness)

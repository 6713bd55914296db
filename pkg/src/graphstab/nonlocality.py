"""GHZ-argument machinery: outcome-correlation constraints from stabilizer
elements, their quantum predictions, and exact local-hidden-variable
satisfiability by two independent routes.

A constraint says ``prod over terms of m_axis^qubit = sign`` for deterministic
outcomes m = +-1.  The LHV universe is every (qubit, axis in {x, z}) pair for
each qubit that appears, including pairs no constraint measures; deterministic
assignments suffice because a mixture satisfies sign constraints only if one
of its deterministic components does.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .pauli import PauliString, multiply
from .states import ATOL, StateVector, expectation

AXES = ("x", "z")
MAX_UNIVERSE = 16
_NULLSPACE_SCAN_CAP = 16  # enumerate 2^dim dependency combinations up to here

LhvAssignment = Mapping[tuple[str, str], int]


@dataclass(frozen=True)
class CorrelationConstraint:
    terms: tuple[tuple[str, str], ...]
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        labels = [q for q, _ in self.terms]
        if len(set(labels)) != len(labels):
            raise ValueError("at most one term per qubit")
        for q, axis in self.terms:
            if axis not in AXES:
                raise ValueError(f"axis must be one of {AXES}, got {axis!r} on {q!r}")

    def evaluate(self, assignment: LhvAssignment) -> bool:
        prod = 1
        for term in self.terms:
            prod *= assignment[term]
        return prod == self.sign

    def to_text(self) -> str:
        if not self.terms:
            return f"1 = {self.sign:+d}"
        prod = " ".join(f"m_{axis}^{q}" for q, axis in self.terms)
        return f"{'-' if self.sign < 0 else ''}{prod} = 1"


def constraint_from_pauli(p: PauliString, labels: Sequence[str]) -> CorrelationConstraint:
    """One term per non-identity factor; the constraint sign is the Pauli's sign.

    Only X/Z factors are meaningful here; a Y factor or an imaginary phase
    is rejected.
    """
    if len(labels) != p.n:
        raise ValueError("label count must match qubit count")
    sign = p.sign  # raises on imaginary phase
    terms = []
    for q in range(p.n):
        letter = p.letter(q)
        if letter == "I":
            continue
        if letter == "Y":
            raise ValueError(f"Y factor on {labels[q]!r} has no x/z measurement axis")
        terms.append((labels[q], letter.lower()))
    return CorrelationConstraint(tuple(terms), sign)


@dataclass(frozen=True)
class CorrelationCheck:
    constraint: CorrelationConstraint
    origin: PauliString
    expectation: float
    satisfied: bool


@dataclass(frozen=True)
class CorrelationReport:
    entries: tuple[CorrelationCheck, ...]

    @property
    def all_satisfied(self) -> bool:
        return all(e.satisfied for e in self.entries)


def quantum_check(s: StateVector, constraints: Sequence[CorrelationConstraint],
                  origins: Sequence[PauliString], atol: float = ATOL) -> CorrelationReport:
    """Dense-engine expectation of each origin observable; satisfied iff +1."""
    if len(constraints) != len(origins):
        raise ValueError("constraints and origins must pair up")
    entries = []
    for c, p in zip(constraints, origins):
        val = expectation(p, s)
        entries.append(CorrelationCheck(c, p, val, abs(val - 1.0) <= atol))
    return CorrelationReport(tuple(entries))


def _universe(constraints: Sequence[CorrelationConstraint]) -> list[tuple[str, str]]:
    labels = sorted({q for c in constraints for q, _ in c.terms})
    return [(q, axis) for q in labels for axis in AXES]


def lhv_solve_exhaustive(
    constraints: Sequence[CorrelationConstraint],
) -> tuple[bool, dict[tuple[str, str], int] | None]:
    """Scan all 2^k deterministic assignments in canonical order.

    Canonical order: pairs sorted by (label, axis); assignment index counts
    up from the all-(+1) assignment, bit j flipping pair j to -1.
    """
    pairs = _universe(constraints)
    k = len(pairs)
    if k > MAX_UNIVERSE:
        raise ValueError(f"LHV universe has {k} pairs, limit is {MAX_UNIVERSE}")
    for mask in range(2**k):
        assignment = {pair: -1 if mask >> j & 1 else 1 for j, pair in enumerate(pairs)}
        if all(c.evaluate(assignment) for c in constraints):
            return True, assignment
    return False, None


def lhv_contradiction_certificate(
    constraints: Sequence[CorrelationConstraint],
) -> tuple[bool, tuple[int, ...]]:
    """GF(2) elimination on term-incidence vectors with sign tracking.

    A dependent subset whose signs multiply to -1 certifies unsatisfiability
    (every outcome squares to +1, so the subset's product forces 1 = -1).
    Returns a minimal such subset, smallest first by size then by index;
    (False, ()) when the sign functional is +1 on the whole null space, which
    happens exactly when the system is satisfiable.
    """
    pairs = _universe(constraints)
    index = {pair: j for j, pair in enumerate(pairs)}
    pivots: list[tuple[int, int, int]] = []  # (incidence, combo, signbit)
    null_basis: list[tuple[int, int]] = []  # (combo, signbit)
    for i, c in enumerate(constraints):
        inc = 0
        for term in c.terms:
            inc |= 1 << index[term]
        combo, sbit = 1 << i, 0 if c.sign > 0 else 1
        for pinc, pcombo, psbit in pivots:
            if inc >> (pinc.bit_length() - 1) & 1:
                inc ^= pinc
                combo ^= pcombo
                sbit ^= psbit
        if inc:
            pivots.append((inc, combo, sbit))
            pivots.sort(key=lambda row: -row[0].bit_length())
        else:
            null_basis.append((combo, sbit))

    if not any(sbit for _, sbit in null_basis):
        return False, ()
    dim = len(null_basis)
    best: tuple[int, int] | None = None  # (popcount, combo)
    if dim <= _NULLSPACE_SCAN_CAP:
        for pick in range(1, 2**dim):
            combo = sbit = 0
            for j in range(dim):
                if pick >> j & 1:
                    combo ^= null_basis[j][0]
                    sbit ^= null_basis[j][1]
            if sbit:
                cand = (combo.bit_count(), combo)
                if best is None or cand < best:
                    best = cand
    else:
        for combo, sbit in null_basis:
            if sbit:
                cand = (combo.bit_count(), combo)
                if best is None or cand < best:
                    best = cand
    assert best is not None
    combo = best[1]
    return True, tuple(i for i in range(len(constraints)) if combo >> i & 1)


def certificate_pauli_product(constraints: Sequence[CorrelationConstraint],
                              origins: Sequence[PauliString],
                              subset: Sequence[int]) -> tuple[PauliString, int]:
    """Product of the subset's origin Paulis and the subset's sign product."""
    paulis = [origins[i] for i in subset]
    product = paulis[0]
    if len(paulis) > 1:
        product = multiply(paulis[0], paulis[1], *paulis[2:])
    sign_product = 1
    for i in subset:
        sign_product *= constraints[i].sign
    return product, sign_product

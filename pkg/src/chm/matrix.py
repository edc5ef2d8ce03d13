"""Square matrices of unimodular phases, orthogonality checks, and JSON I/O.

The JSON interchange format is {"d": n, "entries": [[entry, ...], ...]} where
an entry is {"num": k, "den": m} for the exact phase e^{2*pi*i*k/m} or
{"rad": theta} for a float phase.  Writers always emit num/den when the
entry is exact.
"""

from __future__ import annotations

import json
import math
import random
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import MAX_EXACT_ORDER, root_sum_is_zero
from .phases import ONE, Phase

DEFAULT_TOL = 1e-9


class CHMError(ValueError):
    """Domain error (bad input matrix, unknown name, failed precondition)."""


class CHMatrix:
    """A d x d matrix of unimodular phases.

    Entries are unimodular by construction; orthogonality of the columns is
    a property checked by :func:`is_hadamard`, not an invariant of the type.
    Instances are immutable and safe to share between threads.
    """

    __slots__ = ("d", "entries", "_complex", "_exponents")

    def __init__(self, entries: Sequence[Sequence[Phase]]):
        rows = tuple(tuple(row) for row in entries)
        d = len(rows)
        if d == 0 or any(len(row) != d for row in rows):
            raise CHMError("matrix must be square and non-empty")
        self.d = d
        self.entries = rows
        self._complex = None
        self._exponents = None

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CHMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    @property
    def is_exact(self) -> bool:
        return all(p.is_exact for row in self.entries for p in row)

    def common_order(self) -> int:
        """lcm of the denominators of an exact matrix."""
        L = 1
        for row in self.entries:
            for p in row:
                if not p.is_exact:
                    raise CHMError("matrix has float entries")
                L = L * p.den // gcd(L, p.den)
        return L

    def exponents(self) -> tuple[int, np.ndarray]:
        """(L, E) with entry (i,j) equal to zeta_L^E[i,j], for exact matrices."""
        if self._exponents is None:
            L = self.common_order()
            E = np.array(
                [[p.num * (L // p.den) for p in row] for row in self.entries],
                dtype=np.int64,
            )
            self._exponents = (L, E)
        return self._exponents

    def to_complex(self) -> np.ndarray:
        if self._complex is None:
            self._complex = np.array(
                [[p.to_complex() for p in row] for row in self.entries],
                dtype=np.complex128,
            )
        return self._complex.copy()

    def transpose(self) -> "CHMatrix":
        return CHMatrix(tuple(zip(*self.entries)))

    def conjugate(self) -> "CHMatrix":
        return CHMatrix(tuple(tuple(p.conj() for p in row) for row in self.entries))

    def scale_rows(self, phases: Sequence[Phase]) -> "CHMatrix":
        return CHMatrix(
            tuple(tuple(f * p for p in row) for f, row in zip(phases, self.entries))
        )

    def scale_cols(self, phases: Sequence[Phase]) -> "CHMatrix":
        return CHMatrix(
            tuple(tuple(f * p for f, p in zip(phases, row)) for row in self.entries)
        )

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> "CHMatrix":
        """Reorder so new entry (i, j) is old entry (row_order[i], col_order[j])."""
        return CHMatrix(
            tuple(
                tuple(self.entries[r][c] for c in col_order) for r in row_order
            )
        )


def from_rows(rows: Iterable[Iterable[Phase]]) -> CHMatrix:
    return CHMatrix(tuple(tuple(row) for row in rows))


def fourier(d: int) -> CHMatrix:
    """The d x d Fourier matrix, entry (j, k) = e^{2*pi*i*jk/d}."""
    if d < 1:
        raise CHMError(f"dimension must be >= 1, got {d}")
    return CHMatrix(
        tuple(
            tuple(Phase.exact(j * k % d, d) for k in range(d)) for j in range(d)
        )
    )


def kron(a: CHMatrix, b: CHMatrix) -> CHMatrix:
    """Tensor product; phases multiply entrywise blockwise."""
    rows = []
    for i in range(a.d):
        for k in range(b.d):
            rows.append(
                tuple(a.entries[i][j] * b.entries[k][l] for j in range(a.d) for l in range(b.d))
            )
    return CHMatrix(tuple(rows))


def is_hadamard(H: CHMatrix, tol: float = DEFAULT_TOL) -> bool:
    """True iff all column pairs are orthogonal: |<C_i, C_j>| <= tol * d.

    Exact matrices whose common denominator is at most MAX_EXACT_ORDER are
    checked by exact cyclotomic summation (zero tolerance); anything else
    falls back to floating point.
    """
    if tol <= 0:
        raise CHMError("tolerance must be positive")
    if H.is_exact:
        L = H.common_order()
        if L <= MAX_EXACT_ORDER:
            _, E = H.exponents()
            for i in range(H.d):
                for j in range(i + 1, H.d):
                    diff = (E[:, j] - E[:, i]) % L
                    counts = np.bincount(diff, minlength=L)
                    if not root_sum_is_zero(counts.tolist(), L):
                        return False
            return True
    Z = H.to_complex()
    gram = Z.conj().T @ Z
    np.fill_diagonal(gram, 0.0)
    return bool(np.max(np.abs(gram)) <= tol * H.d)


def dephase(H: CHMatrix) -> CHMatrix:
    """Equivalent matrix with first row and first column all ones.

    Entry (i, j) becomes H_ij * conj(H_0j) * conj(H_i0) * H_00; the map is
    idempotent and preserves Hadamardness.
    """
    h00 = H.entries[0][0]
    row0 = H.entries[0]
    col0 = [H.entries[i][0] for i in range(H.d)]
    return CHMatrix(
        tuple(
            tuple(
                H.entries[i][j] * row0[j].conj() * col0[i].conj() * h00
                for j in range(H.d)
            )
            for i in range(H.d)
        )
    )


def random_equivalence(
    H: CHMatrix, rng: random.Random, exact: bool = True, max_den: int = 12
) -> CHMatrix:
    """Apply a random equivalence move D1 P1 H P2 D2.

    With exact=True the diagonal phases are random rationals of a turn with
    denominator at most max_den, so exact matrices stay exact.
    """
    d = H.d
    rows = list(range(d))
    cols = list(range(d))
    rng.shuffle(rows)
    rng.shuffle(cols)

    def rand_phase() -> Phase:
        if exact:
            den = rng.randint(1, max_den)
            return Phase.exact(rng.randrange(den), den)
        return Phase.radians(rng.uniform(0.0, 2.0 * math.pi))

    left = [rand_phase() for _ in range(d)]
    right = [rand_phase() for _ in range(d)]
    return H.permute(rows, cols).scale_rows(left).scale_cols(right)


def to_json_obj(H: CHMatrix) -> dict:
    entries = []
    for row in H.entries:
        out_row = []
        for p in row:
            if p.is_exact:
                out_row.append({"num": p.num, "den": p.den})
            else:
                out_row.append({"rad": p.theta})
        entries.append(out_row)
    return {"d": H.d, "entries": entries}


def from_json_obj(obj: dict) -> CHMatrix:
    try:
        d = obj["d"]
        raw = obj["entries"]
    except (TypeError, KeyError) as exc:
        raise CHMError(f"matrix JSON needs 'd' and 'entries': {exc}") from exc
    if not isinstance(d, int) or d < 1:
        raise CHMError(f"bad dimension {d!r}")
    if len(raw) != d or any(len(row) != d for row in raw):
        raise CHMError(f"'entries' must be a {d}x{d} array")
    rows = []
    for i, row in enumerate(raw):
        out = []
        for j, cell in enumerate(row):
            if not isinstance(cell, dict):
                raise CHMError(f"entry ({i},{j}) is not an object")
            if "num" in cell:
                num, den = cell["num"], cell.get("den", 1)
                if not isinstance(num, int) or not isinstance(den, int) or den < 1:
                    raise CHMError(f"entry ({i},{j}) has a bad num/den pair")
                out.append(Phase.exact(num, den))
            elif "rad" in cell:
                theta = cell["rad"]
                if not isinstance(theta, (int, float)):
                    raise CHMError(f"entry ({i},{j}) has a non-numeric angle")
                out.append(Phase.radians(float(theta)))
            else:
                raise CHMError(f"entry ({i},{j}) needs 'num'/'den' or 'rad'")
        rows.append(tuple(out))
    return CHMatrix(tuple(rows))


def dump(H: CHMatrix, path) -> None:
    with open(path, "w") as fh:
        json.dump(to_json_obj(H), fh)
        fh.write("\n")


def load(path) -> CHMatrix:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CHMError(f"{path}: {exc}") from exc
    return from_json_obj(obj)


def from_signs(rows: Sequence[Sequence[int]]) -> CHMatrix:
    """Build an exact matrix from +-1 integer rows (real Hadamard input)."""
    table = {1: ONE, -1: Phase.exact(1, 2)}
    try:
        return CHMatrix(tuple(tuple(table[v] for v in row) for row in rows))
    except KeyError as exc:
        raise CHMError(f"sign matrices may only contain +-1, got {exc}") from exc


def from_turn_fractions(rows: Sequence[Sequence[Fraction | int]]) -> CHMatrix:
    return CHMatrix(
        tuple(tuple(Phase.from_turns(Fraction(v)) for v in row) for row in rows)
    )

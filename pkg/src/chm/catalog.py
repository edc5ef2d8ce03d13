"""Built-in catalog of complex Hadamard matrices.

Names: "F<d>" for the Fourier matrix of any requested dimension, plus the
fixed entries H8, H12, H10w and D12.  All fixed entries are stored with
exact phases; H10w uses w = e^{2*pi*i/3} (so w^2 + w + 1 = 0).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .matrix import CHMatrix, CHMError, fourier
from .phases import Phase

_TOKENS = {
    "1": Phase.exact(0, 1),
    "-1": Phase.exact(1, 2),
    "i": Phase.exact(1, 4),
    "-i": Phase.exact(3, 4),
    "w": Phase.exact(1, 3),
    "w2": Phase.exact(2, 3),
    "-w": Phase.exact(5, 6),
    "-w2": Phase.exact(1, 6),
}


def _parse(table: str) -> CHMatrix:
    rows = []
    for line in table.strip().splitlines():
        rows.append(tuple(_TOKENS[tok] for tok in line.split()))
    return CHMatrix(tuple(rows))


_H8 = _parse(
    """
    1  1  1  1  1  1  1  1
    1  1 -1  1 -1 -1  1 -1
    1  1  1 -1 -1 -1 -1  1
    1 -1  1  1 -1  1 -1 -1
    1 -1  1 -1  1 -1  1 -1
    1 -1 -1  1  1 -1 -1  1
    1  1 -1 -1  1  1 -1 -1
    1 -1 -1 -1 -1  1  1  1
    """
)

_H12 = _parse(
    """
    1  1  1  1  1  1  1  1  1  1  1  1
    1  1  1  1  1  1 -1 -1 -1 -1 -1 -1
    1 -1  1  1 -1 -1  1  1 -1  1 -1 -1
    1 -1  1 -1  1 -1 -1  1  1 -1  1 -1
    1 -1 -1  1 -1  1 -1  1  1 -1 -1  1
    1  1  1 -1 -1 -1  1 -1  1 -1 -1  1
    1  1 -1 -1  1 -1 -1  1 -1  1 -1  1
    1  1 -1  1 -1 -1 -1 -1  1  1  1 -1
    1 -1  1 -1 -1  1 -1 -1 -1  1  1  1
    1  1 -1 -1 -1  1  1  1 -1 -1  1 -1
    1 -1 -1 -1  1  1  1 -1  1  1 -1 -1
    1 -1 -1  1  1 -1  1 -1 -1 -1  1  1
    """
)

_H10W = _parse(
    """
    1   1   1   1   1   1   1   1   1   1
    1   1   1   w   w2 -1  -1   1   w2  w
    1   1   1   w2  w  -1   1  -1   w   w2
    1   w   w2  1   1  -1   w2  w  -1   1
    1   w2  w   1   1  -1   w   w2  1  -1
    1   w2  w   1  -1   1  -w  -w2 -1  -1
    1  -1   1   w   w2  1  -1  -1  -w2 -w
    1   1  -1   w2  w   1  -1  -1  -w  -w2
    1   w   w2 -1   1   1  -w2 -w  -1  -1
    1  -1  -1  -1  -1  -1   1   1   1   1
    """
)

_D12 = _parse(
    """
    1  1  1  1  1  1  1  1  1  1  1  1
    1  i  i  i -i -i -i -1  1  1 -1 -1
    1  i  i -i  i -i -i  1 -1 -1  1 -1
    1  i -i  i -i  i -i  1 -1 -1 -1  1
    1 -i  i -i  i  i -i -1  1 -1 -1  1
    1 -i -i  i  i  i -i -1 -1  1  1 -1
    1 -i -i  i  i -i  i  1  1 -1 -1 -1
    1 -i  i  i -i -i  i -1 -1 -1  1  1
    1  i -i -i  i -i  i -1 -1  1 -1  1
    1  i -i -i -i  i  i -1  1 -1  1 -1
    1 -i  i -i -i  i  i  1 -1  1 -1 -1
    1 -1 -1 -1 -1 -1 -1  1  1  1  1  1
    """
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matrix: CHMatrix
    notes: str


_FIXED = {
    "H8": CatalogEntry("H8", _H8, "real Hadamard matrix of order 8 (unique up to equivalence)"),
    "H12": CatalogEntry("H12", _H12, "real Hadamard matrix of order 12 (unique up to equivalence)"),
    "H10w": CatalogEntry(
        "H10w", _H10W, "order-10 matrix over {+-1, +-w, +-w^2} with w a primitive cube root of unity"
    ),
    "D12": CatalogEntry("D12", _D12, "order-12 matrix over {+-1, +-i}"),
}

_FOURIER_RE = re.compile(r"^F(\d+)$")


def catalog_names() -> list[str]:
    return sorted(_FIXED) + ["F<d>"]


def catalog_entry(name: str) -> CatalogEntry:
    if name in _FIXED:
        return _FIXED[name]
    m = _FOURIER_RE.match(name)
    if m:
        d = int(m.group(1))
        if d < 1:
            raise CHMError(f"bad Fourier dimension in {name!r}")
        return CatalogEntry(name, fourier(d), f"Fourier matrix of dimension {d}")
    raise CHMError(f"unknown catalog name {name!r} (try F<d>, H8, H12, H10w, D12)")


def catalog_get(name: str) -> CHMatrix:
    """Look up a matrix by catalog name; unknown names raise CHMError."""
    return catalog_entry(name).matrix

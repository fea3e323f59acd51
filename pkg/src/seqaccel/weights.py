"""Exact weight tables for the one-step extrapolation.

Row j of the table, applied to partial sums s_0..s_n, extracts the j-th
inverse-power coefficient of the sequence's asymptotic expansion in
1/(i+1).  Rows come from two independent routes:

* closed_form_weights: the transcribed polynomial formulas (rows 0..10),
  each weight w_{j,i}(n) = (-1)^(n-i) (i+1)^n / (i! (n-i)!) * P_j(i,n).
* oracle_weights: rows of the exact inverse of the power-basis matrix
  M_{ij} = (1/(i+1))^j, computed by fraction-exact Gauss-Jordan
  elimination with partial pivoting.

certify_weights compares the two exactly.  The transcription carried one
sign ambiguity (row 8, the i^0 n^6 monomial); the oracle fixed it, and the
certification report carries a permanent note for that row.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from ._polytables import POLY_TERMS, PREFACTORS

MAX_CLOSED_FORM_ROW = 10

# rows whose transcription required an oracle adjudication, and what was fixed
ADJUDICATED_ROWS = {
    8: "sign of the 49594888 n^6 monomial was ambiguous in the transcription "
    "source; fixed to -49594888 by exact comparison with the linear-system oracle",
}


class UnsupportedClosedFormError(ValueError):
    """Raised for closed-form requests beyond row 10; use the oracle instead."""


def poly_P(j: int, i: int, n: int) -> Fraction:
    """Exact value of the row-j weight polynomial at integer (i, n)."""
    if not 0 <= j <= MAX_CLOSED_FORM_ROW:
        raise UnsupportedClosedFormError(f"no closed-form polynomial for row {j}")
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    total = 0
    for coef, ip, np_ in POLY_TERMS[j]:
        total += coef * i**ip * n**np_
    return Fraction(total, PREFACTORS[j])


# write-once caches; duplicate concurrent inserts compute identical values,
# so last-writer-wins is harmless
_row_lock = threading.Lock()
_closed_rows: dict[tuple[int, int], tuple[Fraction, ...]] = {}
_oracle_tables: dict[int, list[list[Fraction]]] = {}

# rows that failed certification route to the oracle permanently
_corrupted_rows: set[int] = set()


def closed_form_weights(n: int, j: int) -> list[Fraction]:
    """Weight row j at order n from the transcribed polynomials, exact."""
    if j > MAX_CLOSED_FORM_ROW:
        raise UnsupportedClosedFormError(f"closed-form rows stop at j=10, got {j}")
    if not 0 <= j <= n:
        raise ValueError(f"row j={j} is not defined at order n={n}")
    key = (n, j)
    row = _closed_rows.get(key)
    if row is None:
        row = tuple(
            Fraction((-1) ** (n - i) * (i + 1) ** n, factorial(i) * factorial(n - i))
            * poly_P(j, i, n)
            for i in range(n + 1)
        )
        with _row_lock:
            row = _closed_rows.setdefault(key, row)
    return list(row)


def _eliminate(n: int) -> list[list[Fraction]]:
    """Exact inverse of the (n+1)x(n+1) power-basis matrix by Gauss-Jordan."""
    size = n + 1
    aug = [
        [Fraction(1, i + 1) ** jj for jj in range(size)]
        + [Fraction(1 if c == i else 0) for c in range(size)]
        for i in range(size)
    ]
    for col in range(size):
        pivot_row = max(range(col, size), key=lambda r: abs(aug[r][col]))
        if aug[pivot_row][col] == 0:
            raise ArithmeticError("singular system; abscissas must be distinct")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [[aug[r][size + c] for c in range(size)] for r in range(size)]


def oracle_weights(n: int, j: int) -> list[Fraction]:
    """Row j of the exact inverse power-basis matrix at order n."""
    if not 0 <= j <= n:
        raise ValueError(f"row j={j} is not defined at order n={n}")
    table = _oracle_tables.get(n)
    if table is None:
        table = _eliminate(n)
        with _row_lock:
            table = _oracle_tables.setdefault(n, table)
    return list(table[j])


def transform_weights(n: int, j: int) -> list[Fraction]:
    """Dispatch: certified closed form when available, oracle otherwise."""
    if j > MAX_CLOSED_FORM_ROW or j in _corrupted_rows:
        return oracle_weights(n, j)
    return closed_form_weights(n, j)


def weight_condition(n: int, j: int) -> Fraction:
    """Lambda_j(n) = sum of absolute weights; measures cancellation."""
    return sum(abs(w) for w in transform_weights(n, j))


@dataclass(frozen=True)
class WeightTable:
    order: int
    rows: dict[int, tuple[Fraction, ...]]
    source: str  # "closed_form" or "oracle"


def weight_table(n: int, j_max: int, source: str = "closed_form") -> WeightTable:
    if source not in ("closed_form", "oracle"):
        raise ValueError(f"unknown source {source!r}")
    fn = closed_form_weights if source == "closed_form" else oracle_weights
    rows = {j: tuple(fn(n, j)) for j in range(min(j_max, n) + 1)}
    return WeightTable(order=n, rows=rows, source=source)


def weight_table_csv(table: WeightTable) -> str:
    """Exact CSV export: one (j, i) row with numerator and denominator strings."""
    lines = ["j,i,numerator,denominator"]
    for j in sorted(table.rows):
        for i, w in enumerate(table.rows[j]):
            lines.append(f"{j},{i},{w.numerator},{w.denominator}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Mismatch:
    n: int
    j: int
    i: int
    closed_form: Fraction
    oracle: Fraction


@dataclass(frozen=True)
class CertificationReport:
    n_max: int
    mismatches: tuple[Mismatch, ...]
    notes: dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        lines = [f"weight certification up to order {self.n_max}"]
        if self.ok:
            lines.append("all closed-form rows match the exact oracle")
        for m in self.mismatches:
            lines.append(
                f"MISMATCH n={m.n} j={m.j} i={m.i}: "
                f"closed form {m.closed_form} vs oracle {m.oracle}"
            )
        for j, note in sorted(self.notes.items()):
            lines.append(f"row {j} note: {note}")
        return "\n".join(lines)


def certify_weights(n_max: int) -> CertificationReport:
    """Compare closed-form rows against the oracle, exactly, for n <= n_max.

    A mismatching row is flagged corrupted and permanently routed to the
    oracle by transform_weights.
    """
    if n_max < 10:
        raise ValueError("certification needs n_max >= 10 to cover every closed-form row")
    mismatches = []
    for n in range(n_max + 1):
        for j in range(min(n, MAX_CLOSED_FORM_ROW) + 1):
            cf = closed_form_weights(n, j)
            orc = oracle_weights(n, j)
            for i, (a, b) in enumerate(zip(cf, orc)):
                if a != b:
                    mismatches.append(Mismatch(n=n, j=j, i=i, closed_form=a, oracle=b))
                    _corrupted_rows.add(j)
    return CertificationReport(
        n_max=n_max, mismatches=tuple(mismatches), notes=dict(ADJUDICATED_ROWS)
    )


def row_identity_defect(n: int, j: int, j_prime: int) -> Fraction:
    """sum_i w_{j,i}(n) (1/(i+1))^j' minus the Kronecker delta, exact."""
    row = transform_weights(n, j)
    total = sum(w * Fraction(1, i + 1) ** j_prime for i, w in enumerate(row))
    return total - (1 if j == j_prime else 0)

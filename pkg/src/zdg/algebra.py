"""Cayley tables of finite commutative semigroups with zero.

Elements are indexed 0..n-1, with index 0 reserved for the zero element,
always named "0". The product is stored as a dense n x n matrix of element
indices. Tables are immutable; commutativity, zero absorption and
associativity are *checked* by :func:`validate` rather than enforced
structurally, so defective tables can be represented and reported on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

ZERO_NAME = "0"


def _check_name(name: str) -> None:
    if not name or any(ch.isspace() for ch in name) or "," in name:
        raise InputError(
            f"bad element name {name!r}: names are nonempty tokens "
            "without whitespace or commas"
        )


@dataclass(frozen=True)
class Element:
    """A table element: small index plus display name. Index 0 is the zero."""

    index: int
    name: str


@dataclass(frozen=True)
class AssociativityFailure:
    """A triple (i, j, k) with (i*j)*k != i*(j*k), with both evaluated products."""

    i: int
    j: int
    k: int
    left: int
    right: int

    def describe(self, table: "CayleyTable") -> str:
        nm = table.names
        return (
            f"({nm[self.i]}*{nm[self.j]})*{nm[self.k]} = {nm[self.left]} but "
            f"{nm[self.i]}*({nm[self.j]}*{nm[self.k]}) = {nm[self.right]}"
        )


@dataclass(frozen=True)
class ValidationReport:
    commutative: bool
    zero_ok: bool
    associative: bool
    first_failure: AssociativityFailure | None
    failures: tuple[AssociativityFailure, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.commutative and self.zero_ok and self.associative


class CayleyTable:
    """Immutable multiplication table over named elements, zero first."""

    __slots__ = ("names", "rows", "_index")

    def __init__(self, names: Sequence[str], rows: Sequence[Sequence[int]]):
        names = tuple(names)
        if not names:
            raise InputError("a table needs at least the zero element")
        if names[0] != ZERO_NAME:
            raise InputError('element 0 must be the zero element, named "0"')
        seen = set()
        for name in names:
            _check_name(name)
            if name in seen:
                raise InputError(f"duplicate element name {name!r}")
            seen.add(name)
        n = len(names)
        if len(rows) != n:
            raise InputError(f"table is not square: {len(rows)} rows for {n} elements")
        packed = []
        for i, row in enumerate(rows):
            row = tuple(row)
            if len(row) != n:
                raise InputError(f"row {i} has {len(row)} entries, expected {n}")
            for j, value in enumerate(row):
                if not isinstance(value, int) or not 0 <= value < n:
                    raise InputError(f"cell ({i},{j}) holds {value!r}, not an element index")
            packed.append(row)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "rows", tuple(packed))
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CayleyTable is immutable")

    # --- basic views -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(i, name) for i, name in enumerate(self.names))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown element {name!r}") from None

    def mul_index(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def mul(self, x: str, y: str) -> str:
        return self.names[self.rows[self.index(x)][self.index(y)]]

    def with_cell(self, x: str, y: str, value: str) -> "CayleyTable":
        """New table with both (x,y) and (y,x) set to ``value``."""
        i, j, v = self.index(x), self.index(y), self.index(value)
        rows = [list(row) for row in self.rows]
        rows[i][j] = v
        rows[j][i] = v
        return CayleyTable(self.names, rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CayleyTable)
            and self.names == other.names
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.names, self.rows))

    def __repr__(self) -> str:
        return f"CayleyTable(order={self.order}, names={self.names!r})"


def same_products(t1: CayleyTable, t2: CayleyTable) -> bool:
    """Equality of tables by element *names*, ignoring element order."""
    if set(t1.names) != set(t2.names):
        return False
    for x in t1.names:
        for y in t1.names:
            if t1.mul(x, y) != t2.mul(x, y):
                return False
    return True


# --- validation ----------------------------------------------------------


def validate(table: CayleyTable, all_failures: bool = False) -> ValidationReport:
    """Exhaustively check commutativity, zero absorption and associativity.

    The associativity scan visits all n^3 triples in lexicographic order;
    ``first_failure`` is the least failing triple. With ``all_failures`` the
    full failure list is gathered instead of stopping at the first.
    """
    rows = table.rows
    n = table.order
    commutative = all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))
    zero_ok = all(rows[0][j] == 0 and rows[j][0] == 0 for j in range(n))
    first: AssociativityFailure | None = None
    failures: list[AssociativityFailure] = []
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            ij = ri[j]
            row_ij = rows[ij]
            rj = rows[j]
            for k in range(n):
                left = row_ij[k]
                right = ri[rj[k]]
                if left != right:
                    fail = AssociativityFailure(i, j, k, left, right)
                    if first is None:
                        first = fail
                    if not all_failures:
                        return ValidationReport(commutative, zero_ok, False, first)
                    failures.append(fail)
    associative = first is None
    return ValidationReport(
        commutative,
        zero_ok,
        associative,
        first,
        tuple(failures) if all_failures else None,
    )


# --- algebraic predicates ------------------------------------------------


def idempotents(table: CayleyTable) -> set[str]:
    """All x with x*x = x. Nonempty for every finite semigroup (0 qualifies)."""
    return {name for i, name in enumerate(table.names) if table.rows[i][i] == i}


def idempotent_power(table: CayleyTable, x: str) -> str:
    """The idempotent power of x, built constructively.

    Walks x, x^2, x^3, ... until the first repetition x^n = x^m (m < n),
    takes r = n - m and the smallest k with k*r >= m; x^(k*r) is idempotent.
    """
    i = table.index(x)
    powers = [i]  # powers[t] = x^(t+1)
    seen = {i: 1}
    while True:
        nxt = table.rows[powers[-1]][i]
        exponent = len(powers) + 1
        if nxt in seen:
            m = seen[nxt]
            r = exponent - m
            k = 1
            while k * r < m:
                k += 1
            result = powers[k * r - 1]
            return table.names[result]
        seen[nxt] = exponent
        powers.append(nxt)


def annihilator(table: CayleyTable, x: str) -> set[str]:
    """Ann(x) = {y : x*y = 0}; always contains 0."""
    i = table.index(x)
    return {name for j, name in enumerate(table.names) if table.rows[i][j] == 0}


def closure_violation(
    table: CayleyTable, subset: Iterable[str]
) -> tuple[str, str, str] | None:
    """First (x, y, x*y) with x, y in the subset but x*y outside, or None."""
    idx = sorted(table.index(name) for name in subset)
    members = set(idx)
    for i in idx:
        for j in idx:
            p = table.rows[i][j]
            if p not in members:
                return (table.names[i], table.names[j], table.names[p])
    return None


def is_subsemigroup(table: CayleyTable, subset: Iterable[str]) -> bool:
    return closure_violation(table, subset) is None


def ideal_violation(
    table: CayleyTable, subset: Iterable[str]
) -> tuple[str, str, str] | None:
    """First (s, t, s*t) with s in the subset, t anywhere, s*t outside."""
    idx = sorted(table.index(name) for name in subset)
    members = set(idx)
    for i in idx:
        for j in range(table.order):
            p = table.rows[i][j]
            if p not in members:
                return (table.names[i], table.names[j], table.names[p])
    return None


def is_ideal(table: CayleyTable, subset: Iterable[str]) -> bool:
    return ideal_violation(table, subset) is None


# --- file format ----------------------------------------------------------
#
# CSV, UTF-8, comma-separated, no quoting.  First row is `*` followed by all
# element names with `0` first; each subsequent row is an element name
# followed by product names in header order.


def parse_table_csv(text: str) -> CayleyTable:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InputError("empty table file")
    header = lines[0].split(",")
    if header[0] != "*":
        raise InputError("row 0: header must start with '*'")
    names = header[1:]
    if not names or names[0] != ZERO_NAME:
        raise InputError('row 0: first element must be "0"')
    n = len(names)
    if len(lines) != n + 1:
        raise InputError(f"expected {n} body rows, found {len(lines) - 1}")
    index = {}
    for i, name in enumerate(names):
        _check_name(name)
        if name in index:
            raise InputError(f"row 0, column {i + 1}: duplicate element name {name!r}")
        index[name] = i
    rows = []
    for r, line in enumerate(lines[1:]):
        fields = line.split(",")
        if len(fields) != n + 1:
            raise InputError(f"row {r + 1}: expected {n + 1} fields, found {len(fields)}")
        if fields[0] != names[r]:
            raise InputError(
                f"row {r + 1}: row label {fields[0]!r} does not match header order "
                f"(expected {names[r]!r})"
            )
        row = []
        for c, field in enumerate(fields[1:]):
            if field not in index:
                raise InputError(f"row {r + 1}, column {c + 1}: unknown element {field!r}")
            row.append(index[field])
        rows.append(row)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise InputError(
                    f"row {i + 1}, column {j + 1}: table is not symmetric at "
                    f"({names[i]},{names[j]})"
                )
    for j in range(n):
        if rows[0][j] != 0:
            raise InputError(f"row 1, column {j + 1}: zero row must be all 0")
        if rows[j][0] != 0:
            raise InputError(f"row {j + 1}, column 1: zero column must be all 0")
    return CayleyTable(names, rows)


def emit_table_csv(table: CayleyTable) -> str:
    lines = ["*," + ",".join(table.names)]
    for name, row in zip(table.names, table.rows):
        lines.append(name + "," + ",".join(table.names[v] for v in row))
    return "\n".join(lines) + "\n"

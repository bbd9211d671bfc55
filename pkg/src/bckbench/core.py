"""Finite BCK-algebras as operation tables.

A BCK-algebra here is a finite set {0, .., n-1} with a binary difference
operation given by a Cayley table; `table[a][b]` encodes a-b and element 0
is the constant.  Validation enforces the defining laws (see LAWS), the
induced partial order is a <= b iff a-b = 0, and isomorphism is decided by
a permutation-minimal canonical form.
"""

from __future__ import annotations

import json
import operator
from itertools import permutations
from typing import NamedTuple

from bckbench import kernels

#: Laws checked by `validate`, keyed by the id carried in AxiomViolation.
#: Laws 5-7 are consequences of 1-4 but are checked anyway: the redundancy is
#: cheap and catches checker bugs.  Every entry parses with
#: `bckbench.terms.parse`, which is how the generic sentence checker
#: cross-validates the table validator.
LAWS = {
    1: "((x-y)-(x-z))-(z-y) = 0",
    2: "x-0 = x",
    3: "0-x = 0",
    4: "x-y = 0 & y-x = 0 => x = y",
    5: "x-x = 0",
    6: "(x-(x-y))-y = 0",
    7: "(x-y)-z = (x-z)-y",
}

#: Canonicalization is factorial in the size; beyond this it is refused.
CANONICAL_MAX_SIZE = 8


class BckError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(BckError, ValueError):
    """A table is not square or holds an entry outside 0..n-1."""


class SizeGuardExceeded(BckError):
    """A size guard stopped a combinatorial computation."""


class FormatError(BckError, ValueError):
    """Malformed algebra file."""


class AxiomViolation(BckError):
    """A table failed one of the defining laws.

    `law` indexes LAWS; `witness` is the tuple of element indices at which
    the law fails (one element per distinct variable of the law).
    """

    def __init__(self, law, witness):
        self.law = law
        self.witness = tuple(witness)
        names = "xyz"[: len(self.witness)]
        at = ", ".join(f"{v}={e}" for v, e in zip(names, self.witness))
        super().__init__(f'law "{LAWS[law]}" fails at {at}')


class FiniteBckAlgebra:
    """A validated operation table; construction re-checks every law, so no
    unvalidated instance can exist.  Instances are immutable and safe to
    share across workers."""

    __slots__ = ("size", "table")

    def __init__(self, table):
        try:
            rows = tuple(tuple(operator.index(v) for v in row) for row in table)
        except TypeError:
            raise RangeError("table entries must be integers") from None
        n = len(rows)
        if n == 0:
            raise RangeError("table must have at least one row")
        for row in rows:
            if len(row) != n:
                raise RangeError(f"table must be {n}x{n}")
            for v in row:
                if not 0 <= v < n:
                    raise RangeError(f"entry {v} outside 0..{n - 1}")
        flat = [v for row in rows for v in row]
        bad = kernels.violation(flat, n)
        if bad is not None:
            raise AxiomViolation(*bad)
        self.size = n
        self.table = rows

    def diff(self, a, b):
        """The difference a-b."""
        return self.table[a][b]

    @property
    def flat(self):
        """Row-major flattening of the table."""
        return tuple(v for row in self.table for v in row)

    def __eq__(self, other):
        return isinstance(other, FiniteBckAlgebra) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteBckAlgebra({[list(r) for r in self.table]!r})"


def validate(table) -> FiniteBckAlgebra:
    """Build a FiniteBckAlgebra, raising RangeError or AxiomViolation (which
    names the first violated law with a witness)."""
    return FiniteBckAlgebra(table)


#: The stock algebras: the two-element chain and the two three-element
#: chains, with element order 0, 1/2, 1.  L3 has 1 - 1/2 = 1/2 and H3 has
#: 1 - 1/2 = 1.
BUILTIN_TABLES = {
    "C2": ((0, 0), (1, 0)),
    "L3": ((0, 0, 0), (1, 0, 0), (2, 1, 0)),
    "H3": ((0, 0, 0), (1, 0, 0), (2, 2, 0)),
}


def builtin(name: str) -> FiniteBckAlgebra:
    """One of the stock algebras C2, L3, H3."""
    try:
        table = BUILTIN_TABLES[name]
    except KeyError:
        raise ValueError(f"unknown builtin algebra {name!r}") from None
    return FiniteBckAlgebra(table)


class OrderRelation:
    """The partial order a <= b iff a-b = 0 induced by a validated table.

    Reflexivity, antisymmetry and transitivity follow from the laws; 0 is
    the least element.
    """

    __slots__ = ("size", "leq")

    def __init__(self, size, leq):
        self.size = size
        self.leq = leq

    def le(self, a, b):
        return self.leq[a][b]

    @property
    def is_chain(self):
        n = self.size
        return all(
            self.leq[a][b] or self.leq[b][a] for a in range(n) for b in range(a + 1, n)
        )

    def hasse(self):
        """Cover pairs (a, b): a < b with nothing strictly between."""
        n = self.size
        lt = [[self.leq[a][b] and a != b for b in range(n)] for a in range(n)]
        return [
            (a, b)
            for a in range(n)
            for b in range(n)
            if lt[a][b] and not any(lt[a][c] and lt[c][b] for c in range(n))
        ]

    def __repr__(self):
        return f"OrderRelation(size={self.size}, covers={self.hasse()!r})"


def order(algebra: FiniteBckAlgebra) -> OrderRelation:
    """Derive the order relation of a validated algebra."""
    n = algebra.size
    leq = tuple(tuple(algebra.table[a][b] == 0 for b in range(n)) for a in range(n))
    return OrderRelation(n, leq)


class CanonicalForm(NamedTuple):
    """Lexicographically least flattened table over all relabellings fixing
    element 0.  Two algebras are isomorphic iff their canonical forms are
    equal (0 is definable from the laws, so fixing it loses nothing)."""

    size: int
    flat: tuple

    @property
    def table(self):
        n = self.size
        return tuple(tuple(self.flat[a * n + b] for b in range(n)) for a in range(n))


def canonical_form(algebra: FiniteBckAlgebra) -> CanonicalForm:
    n = algebra.size
    if n > CANONICAL_MAX_SIZE:
        raise SizeGuardExceeded(
            f"canonicalization of size {n} exceeds the guard ({CANONICAL_MAX_SIZE})"
        )
    return CanonicalForm(n, tuple(kernels.canonical(list(algebra.flat), n)))


def find_embeddings(big: FiniteBckAlgebra, small: FiniteBckAlgebra):
    """All injections of `small` into `big` preserving the difference and 0.

    Returned as tuples m with m[i] the image of element i, in lexicographic
    order; empty when no embedding exists.
    """
    na, nb = big.size, small.size
    ta, tb = big.table, small.table
    out = []
    for perm in permutations(range(1, na), nb - 1):
        m = (0,) + perm
        if all(
            ta[m[a]][m[b]] == m[tb[a][b]] for a in range(nb) for b in range(nb)
        ):
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# file formats

def loads_algebra(text: str) -> FiniteBckAlgebra:
    """Parse an algebra from either accepted format.

    Text format: first line the size n, then n lines of n space-separated
    entries (row a lists a-0, a-1, ...).  JSON format: an object
    {"size": n, "table": [[...], ...]}.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"bad JSON: {e}") from None
        if not isinstance(obj, dict) or "size" not in obj or "table" not in obj:
            raise FormatError('JSON algebra requires "size" and "table" fields')
        if not isinstance(obj["table"], list) or len(obj["table"]) != obj["size"]:
            raise FormatError('"size" disagrees with the table')
        return validate(obj["table"])
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty algebra file")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the size, got {lines[0]!r}") from None
    if n < 1 or len(lines) != n + 1:
        raise FormatError(f"expected {n} table rows after the size line")
    table = []
    for ln in lines[1:]:
        try:
            table.append([int(tok) for tok in ln.split()])
        except ValueError:
            raise FormatError(f"bad table row {ln!r}") from None
    return validate(table)


def dumps_text(algebra: FiniteBckAlgebra) -> str:
    rows = (" ".join(str(v) for v in row) for row in algebra.table)
    return "\n".join([str(algebra.size), *rows]) + "\n"


def dumps_json(algebra: FiniteBckAlgebra) -> str:
    return json.dumps(
        {"size": algebra.size, "table": [list(r) for r in algebra.table]},
        separators=(",", ":"),
    )


def load_algebra(path) -> FiniteBckAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_algebra(fh.read())

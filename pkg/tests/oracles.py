"""Independent reference computations used to freeze expected values.

Everything here is deliberately naive and shares no code with the package:
candidate tables are filtered by a direct transcription of the defining
conditions, and isomorphism is decided by trying every bijection.  Slow on
purpose; usable up to size 4.
"""

from itertools import permutations, product


def passes(t, n):
    """Direct check of the defining conditions on a complete table whose
    row 0 and column 0 are already forced by the unit laws."""
    for x in range(n):
        for y in range(n):
            if x != y and t[x][y] == 0 and t[y][x] == 0:
                return False
    for x in range(n):
        for y in range(n):
            a = t[x][y]
            for z in range(n):
                if t[t[a][t[x][z]]][t[z][y]] != 0:
                    return False
    return True


def brute_force_tables(n):
    """Every valid table of size n, by filling the (n-1)^2 unforced cells
    with all value combinations and filtering."""
    free = [(a, b) for a in range(1, n) for b in range(1, n)]
    found = []
    for vals in product(range(n), repeat=len(free)):
        t = [[0] * n for _ in range(n)]
        for a in range(n):
            t[a][0] = a
        for (a, b), v in zip(free, vals):
            t[a][b] = v
        if passes(t, n):
            found.append(tuple(map(tuple, t)))
    return found


def isomorphic(t1, t2):
    """Whether two tables are isomorphic: some bijection fixing 0 carries
    one onto the other."""
    n = len(t1)
    if len(t2) != n:
        return False
    for perm in permutations(range(1, n)):
        p = (0,) + perm
        if all(p[t1[a][b]] == t2[p[a]][p[b]] for a in range(n) for b in range(n)):
            return True
    return False


def iso_classes(tables):
    """Greedy pairwise dedup into isomorphism-class representatives."""
    reps = []
    for t in tables:
        if not any(isomorphic(t, r) for r in reps):
            reps.append(t)
    return reps


def power_table(base_table, m):
    """The m-th direct power as an explicit table over lexicographically
    sorted element tuples; returns (table, elements)."""
    n = len(base_table)
    elems = sorted(product(range(n), repeat=m))
    idx = {e: i for i, e in enumerate(elems)}
    table = [
        [idx[tuple(base_table[x[i]][y[i]] for i in range(m))] for y in elems]
        for x in elems
    ]
    return table, elems


def generated_subuniverse(table, gens):
    """Fixpoint closure of gens (plus 0) under the operation, as sorted
    element indices."""
    seen = set(gens) | {0}
    while True:
        new = {
            table[x][y]
            for x in seen
            for y in seen
            if table[x][y] not in seen
        }
        if not new:
            return sorted(seen)
        seen |= new

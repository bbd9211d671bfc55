"""Pure-Python table kernels: validation, canonicalization, table search.

Reference implementations of the three hot loops.  `bckbench.kernels`
swaps in the compiled versions from `_kernels_cy` when that extension is
importable; both backends must agree bit for bit (see tests/test_kernels.py).

Tables are flat row-major sequences of length n*n.  During search the value
-1 marks an unassigned cell.
"""

from itertools import permutations

_PERMS = {}


def _perms(n):
    ps = _PERMS.get(n)
    if ps is None:
        ps = tuple((0,) + p for p in permutations(range(1, n)))
        _PERMS[n] = ps
    return ps


def violation(t, n):
    """First failed law of a complete table, as (law_id, witness), else None.

    Law ids index bckbench.core.LAWS.  Check order: unit laws (2), (3), then
    x-x=0 (5), the four-variable law (1), antisymmetry (4), and the derived
    laws (6), (7).
    """
    for a in range(n):
        if t[a * n] != a:
            return (2, (a,))
    for b in range(n):
        if t[b] != 0:
            return (3, (b,))
    for a in range(n):
        if t[a * n + a] != 0:
            return (5, (a,))
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            for z in range(n):
                if t[t[xy * n + t[x * n + z]] * n + t[z * n + y]] != 0:
                    return (1, (x, y, z))
    for a in range(n):
        for b in range(a + 1, n):
            if t[a * n + b] == 0 and t[b * n + a] == 0:
                return (4, (a, b))
    for x in range(n):
        for y in range(n):
            if t[t[x * n + t[x * n + y]] * n + y] != 0:
                return (6, (x, y))
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            for z in range(n):
                if t[xy * n + z] != t[t[x * n + z] * n + y]:
                    return (7, (x, y, z))
    return None


def canonical(t, n):
    """Lexicographically least relabelling of a valid flat table over all
    permutations of 1..n-1 (element 0 stays fixed)."""
    best = None
    for p in _perms(n):
        cand = [0] * (n * n)
        for a in range(n):
            ra = a * n
            pa = p[a] * n
            for b in range(n):
                cand[pa + p[b]] = p[t[ra + b]]
        cand = tuple(cand)
        if best is None or cand < best:
            best = cand
    return best


def _ax1_ok(t, n, x, y, z):
    # ((x-y)-(x-z))-(z-y) = 0 where every consulted cell is assigned;
    # an unassigned cell defers the check.
    xy = t[x * n + y]
    if xy < 0:
        return True
    xz = t[x * n + z]
    if xz < 0:
        return True
    d = t[xy * n + xz]
    if d < 0:
        return True
    zy = t[z * n + y]
    if zy < 0:
        return True
    r = t[d * n + zy]
    return r <= 0


def search(n, pin=-1):
    """Valid tables of size n covering every isomorphism class, as flat tuples.

    Row 0, column 0 and the diagonal are forced by the laws and never
    explored.  The search is restricted to order-compatible labelings: since
    a-b always sits below a in the induced order, every class has a
    representative whose labeling extends the order, so cell (a, b) only
    takes values <= a, nonzero when a > b.  Emitted tables are exactly the
    valid tables in that restricted space (a superset of one representative
    per class); callers deduplicate via `canonical`.

    `pin`, when >= 0, fixes the value of the first open cell so the search
    tree can be split across workers; merging the results for all pin values
    0..n-1 reproduces search(n).
    """
    t = [-1] * (n * n)
    for a in range(n):
        t[a * n] = a
        t[a * n + a] = 0
        t[a] = 0
    cells = [(a, b) for a in range(1, n) for b in range(1, n) if a != b]
    out = []

    if not cells:
        if violation(t, n) is None:
            out.append(tuple(t))
        return out

    def ok(a, b, v):
        # antisymmetry against the mirror cell
        if v == 0 and t[b * n + a] == 0:
            return False
        # law (1) on the triples whose outermost cells involve (a, b)
        for z in range(n):
            if not _ax1_ok(t, n, a, b, z):
                return False
            if not _ax1_ok(t, n, a, z, b):
                return False
            if not _ax1_ok(t, n, z, b, a):
                return False
        # law (7): (a-b)-w = (a-w)-b whenever both sides are assigned
        for w in range(n):
            aw = t[a * n + w]
            if aw < 0:
                continue
            lhs = t[v * n + w]
            rhs = t[aw * n + b]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        # law (6): (a-(a-b))-b = 0 when assigned
        av = t[a * n + v]
        if av >= 0 and t[av * n + b] > 0:
            return False
        return True

    ncells = len(cells)

    def rec(d):
        if d == ncells:
            if violation(t, n) is None:
                out.append(tuple(t))
            return
        a, b = cells[d]
        i = a * n + b
        lo = 0 if a < b else 1
        vals = range(lo, a + 1)
        if d == 0 and pin >= 0:
            vals = (pin,) if lo <= pin <= a else ()
        for v in vals:
            t[i] = v
            if ok(a, b, v):
                rec(d + 1)
        t[i] = -1

    rec(0)
    return out

"""Independent oracles used to cross-check the package's counting code.

The subgroup counter here enumerates coset tables directly (backtracking
with first-appearance coset numbering), a different algorithm from the
package's hom-count recursion.
"""


def count_subgroups_coset_tables(presentation, n):
    """Number of index-n subgroups by canonical coset table enumeration.

    A subgroup of index n corresponds to a transitive action on n cosets
    with a marked basepoint; numbering new cosets in first-scan order picks
    one table per subgroup.  Tables are filled slot by slot in scan order;
    a relator trace that closes on the wrong coset prunes the branch.
    """
    ngen = len(presentation.generators)
    rels = [tuple(rel) for rel in presentation.relators]
    # columns: 2*g for generator g+1, 2*g+1 for its inverse
    ncols = 2 * ngen

    def col(signed):
        g = abs(signed) - 1
        return 2 * g if signed > 0 else 2 * g + 1

    def invcol(c):
        return c ^ 1

    table = [[None] * ncols]  # one row per coset
    count = 0

    def relators_consistent():
        for start in range(len(table)):
            for rel in rels:
                c = start
                complete = True
                for x in rel:
                    c = table[c][col(x)]
                    if c is None:
                        complete = False
                        break
                if complete and c != start:
                    return False
        return True

    def next_slot():
        for c in range(len(table)):
            for x in range(ncols):
                if table[c][x] is None:
                    return c, x
        return None

    def rec():
        nonlocal count
        slot = next_slot()
        if slot is None:
            if len(table) == n:
                count += 1
            return
        c, x = slot
        # candidates: existing cosets whose inverse slot is free, or a new one
        for d in range(len(table)):
            if table[d][invcol(x)] is None:
                table[c][x] = d
                table[d][invcol(x)] = c
                if relators_consistent():
                    rec()
                table[c][x] = None
                table[d][invcol(x)] = None
        if len(table) < n:
            d = len(table)
            table.append([None] * ncols)
            table[c][x] = d
            table[d][invcol(x)] = c
            if relators_consistent():
                rec()
            table.pop()
            table[c][x] = None

    rec()
    return count


def _smith_diagonal(rows, ncols):
    """Nonzero diagonal of the Smith normal form of an integer matrix."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    diag = []
    r = c = 0
    while r < nrows and c < ncols:
        while True:
            # pivot: entry of minimal nonzero absolute value in the block
            pivot = None
            for i in range(r, nrows):
                for j in range(c, ncols):
                    v = abs(mat[i][j])
                    if v and (pivot is None or v < abs(mat[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return diag
            i, j = pivot
            mat[r], mat[i] = mat[i], mat[r]
            for row in mat:
                row[c], row[j] = row[j], row[c]
            # one reduction sweep; remainders shrink, so this terminates
            clean = True
            for i in range(r + 1, nrows):
                if mat[i][c]:
                    q = mat[i][c] // mat[r][c]
                    for j in range(c, ncols):
                        mat[i][j] -= q * mat[r][j]
                    clean = clean and mat[i][c] == 0
            for j in range(c + 1, ncols):
                if mat[r][j]:
                    q = mat[r][j] // mat[r][c]
                    for i in range(r, nrows):
                        mat[i][j] -= q * mat[i][c]
                    clean = clean and mat[r][j] == 0
            if clean:
                break
        diag.append(abs(mat[r][c]))
        r += 1
        c += 1
    return diag


def abelian_hom_count(presentation, n):
    """|Hom(G, Z/n)| from the abelianization, via Smith normal form."""
    from math import gcd
    ngen = len(presentation.generators)
    rows = []
    for rel in presentation.relators:
        row = [0] * ngen
        for x in rel:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    diag = _smith_diagonal(rows, ngen)
    free = ngen - len(diag)
    out = n ** free
    for d in diag:
        out *= gcd(d, n)
    return out

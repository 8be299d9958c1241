"""Independent slow oracles used to check the package's fast paths.

Everything here works on plain lists and itertools so that it shares no
code with the implementations it checks.
"""

from itertools import permutations

from pautkit import LinearCode, Word


def naive_rref(rows: list[list[int]]) -> list[list[int]]:
    """Textbook Gaussian elimination on 0/1 row lists."""
    mat = [row[:] for row in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col]:
                mat[r] = [a ^ b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
    return [row for row in mat[:pivot_row]]


def word_list(w: Word) -> list[int]:
    return [w.bit(i) for i in range(w.n)]


def apply_perm_list(images, row: list[int]) -> list[int]:
    out = [0] * len(row)
    for i, v in enumerate(row):
        out[images[i]] = v
    return out


def codeword_set(code: LinearCode) -> frozenset[int]:
    n, k = code.n, code.k
    seen = set()
    for mask in range(1 << k):
        v = 0
        for i in range(k):
            if mask >> i & 1:
                v ^= code.rows[i]
        seen.add(v)
    return frozenset(seen)


def brute_automorphism_images(code: LinearCode):
    """Every automorphism image table, by filtering all of S_n."""
    n = code.n
    words = codeword_set(code)
    for images in permutations(range(n)):
        ok = True
        for row in code.rows:
            out = 0
            b = row
            while b:
                low = b & -b
                out |= 1 << images[low.bit_length() - 1]
                b ^= low
            if out not in words:
                ok = False
                break
        if ok:
            yield images

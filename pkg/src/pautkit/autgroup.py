"""Exact permutation automorphism groups of binary codes at small length.

The search assigns coordinate images one coordinate at a time, in
lexicographic order.  Two prunes keep the tree small:

* per-coordinate weight signatures: coordinate i can only map to a
  coordinate whose vector of (weight t, bit set) codeword counts is
  identical, a cheap necessary condition;
* linear consistency: the partial pairing of generator-matrix columns
  chosen so far must extend to an invertible change of basis, which is
  tracked incrementally with two small echelon bases over the stacked
  (target column, source column) vectors.

With the consistency prune, every leaf of the tree is an automorphism
and every automorphism is a leaf, so the stream is exact.  Orders of
potentially huge groups are tracked with an incremental Schreier-Sims
stabilizer chain instead of materializing the element set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _sym_images
from math import factorial
from typing import Iterable, Iterator

from .errors import InvalidInput, TooLarge
from .gf2 import LinearCode
from .perm import Perm, _apply_bits, _fpf_prime_order_images

LENGTH_GUARD = 12
GROUP_CODE_GUARD = 8


def is_automorphism(code: LinearCode, p: Perm) -> bool:
    """True iff the coordinate permutation maps the code onto itself."""
    if len(p.images) != code.n:
        raise InvalidInput("length mismatch")
    return _is_automorphism_images(code, p.images)


def _is_automorphism_images(code: LinearCode, images: tuple[int, ...]) -> bool:
    return all(code._contains_bits(_apply_bits(images, row)) for row in code.rows)


def _weight_signatures(code: LinearCode) -> list[tuple[int, ...]]:
    """For each coordinate, the per-weight counts of codewords with a 1 there."""
    n = code.n
    sig = [[0] * (n + 1) for _ in range(n)]
    for bits in code._codeword_bits():
        w = bits.bit_count()
        b = bits
        while b:
            low = b & -b
            sig[low.bit_length() - 1][w] += 1
            b ^= low
    return [tuple(s) for s in sig]


def _columns(code: LinearCode) -> list[int]:
    """Generator matrix columns as k-bit ints (bit r = row r's entry)."""
    cols = [0] * code.n
    for r, row in enumerate(code.rows):
        b = row
        while b:
            low = b & -b
            cols[low.bit_length() - 1] |= 1 << r
            b ^= low
    return cols


def _automorphism_images(code: LinearCode) -> Iterator[tuple[int, ...]]:
    """All automorphism image tables in lexicographic order."""
    n, k = code.n, code.k
    if n > LENGTH_GUARD:
        raise TooLarge(f"automorphism search limited to length {LENGTH_GUARD}")
    if k == 0 or k == n:
        yield from _sym_images(range(n))
        return

    cols = _columns(code)
    sigs = _weight_signatures(code)
    cands = [
        tuple(t for t in range(n) if sigs[t] == sigs[i]) for i in range(n)
    ]
    low_mask = (1 << k) - 1
    images = [0] * n
    used = [False] * n

    def insert(basis: list[int], v: int) -> list[int] | None:
        # reduced-echelon insert; None signals an inconsistent pairing
        # (a combination with zero low half but nonzero high half)
        for b in basis:
            if v & (b & -b):
                v ^= b
        if not v:
            return basis
        if not v & low_mask:
            return None
        piv = v & -v
        nb = [b ^ v if b & piv else b for b in basis]
        nb.append(v)
        return nb

    def rec(i: int, fwd: list[int], bwd: list[int]) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(images)
            return
        ci = cols[i]
        for t in cands[i]:
            if used[t]:
                continue
            f2 = insert(fwd, cols[t] | (ci << k))
            if f2 is None:
                continue
            b2 = insert(bwd, ci | (cols[t] << k))
            if b2 is None:
                continue
            images[i] = t
            used[t] = True
            yield from rec(i + 1, f2, b2)
            used[t] = False

    yield from rec(0, [], [])


def automorphisms(code: LinearCode) -> Iterator[Perm]:
    """Stream the full automorphism group, lexicographically by image table."""
    for imgs in _automorphism_images(code):
        yield Perm(imgs)


def find_automorphism_outside(
    code: LinearCode, allowed: Iterable[Perm]
) -> Perm | None:
    """First automorphism (in lexicographic order) not in ``allowed``."""
    skip = {p.images for p in allowed}
    for imgs in _automorphism_images(code):
        if imgs not in skip:
            return Perm(imgs)
    return None


def _mult(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p, then q
    return tuple(q[x] for x in p)


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


class StabilizerChain:
    """Incremental Schreier-Sims structure over the fixed base 0..n-1.

    Exact membership tests and order computation for subgroups of S_n
    fed one element at a time; fine for the tiny degrees used here.
    Level i uses every strong generator fixing the points below i, and
    a rebuild runs until every Schreier generator sifts to the
    identity; each appended residue strictly grows some orbit, so the
    loop terminates.
    """

    def __init__(self, n: int):
        self.n = n
        self.identity = tuple(range(n))
        self.strong: list[tuple[int, ...]] = []
        self.trans: list[dict[int, tuple[int, ...]]] = [
            {i: self.identity} for i in range(n)
        ]

    def order(self) -> int:
        out = 1
        for t in self.trans:
            out *= len(t)
        return out

    def _strip(self, g: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        for i in range(self.n):
            x = g[i]
            if x == i:
                continue
            t = self.trans[i].get(x)
            if t is None:
                return g, i
            g = _mult(g, _inv(t))
        return g, self.n

    def contains(self, g: tuple[int, ...]) -> bool:
        return self._strip(g)[1] == self.n

    def add(self, g: tuple[int, ...]) -> bool:
        """Sift in a permutation; True if the group grew."""
        h, lvl = self._strip(g)
        if lvl == self.n:
            return False
        self.strong.append(h)
        self._rebuild()
        return True

    def _level_gens(self, lvl: int) -> list[tuple[int, ...]]:
        return [
            g for g in self.strong if all(g[i] == i for i in range(lvl))
        ]

    def _rebuild(self) -> None:
        n = self.n
        while True:
            level_gens = [self._level_gens(lvl) for lvl in range(n)]
            for lvl in range(n):
                T = {lvl: self.identity}
                queue = [lvl]
                qi = 0
                while qi < len(queue):
                    x = queue[qi]
                    qi += 1
                    tx = T[x]
                    for s in level_gens[lvl]:
                        y = s[x]
                        if y not in T:
                            T[y] = _mult(tx, s)
                            queue.append(y)
                self.trans[lvl] = T
            fresh = None
            for lvl in range(n):
                T = self.trans[lvl]
                for x in sorted(T):
                    tx = T[x]
                    for s in level_gens[lvl]:
                        r = _mult(_mult(tx, s), _inv(T[s[x]]))
                        h, m = self._strip(r)
                        if m != n:
                            fresh = h
                            break
                    if fresh:
                        break
                if fresh:
                    break
            if fresh is None:
                return
            self.strong.append(fresh)


@dataclass(frozen=True)
class PAutReport:
    """Summary of a full automorphism group computation."""

    order: int
    generators: tuple[Perm, ...]
    is_cyclic_of_order_2: bool
    has_fpf_involution: bool
    has_fixed_point_involution: bool


def _symmetric_report(n: int) -> PAutReport:
    gens: list[Perm] = []
    if n >= 2:
        gens.append(Perm(tuple([1, 0] + list(range(2, n)))))
    if n >= 3:
        gens.append(Perm(tuple(list(range(1, n)) + [0])))
    return PAutReport(
        order=factorial(n),
        generators=tuple(gens),
        is_cyclic_of_order_2=(n == 2),
        has_fpf_involution=(n >= 2 and n % 2 == 0),
        has_fixed_point_involution=(n >= 3),
    )


def _stabilizer_report(n: int, row: int) -> PAutReport:
    """Group fixing a single nonzero word: independent shuffles of its
    support and of its complement."""
    support = [i for i in range(n) if row >> i & 1]
    rest = [i for i in range(n) if not row >> i & 1]
    gens: list[Perm] = []
    for part in (support, rest):
        if len(part) >= 2:
            imgs = list(range(n))
            imgs[part[0]], imgs[part[1]] = part[1], part[0]
            gens.append(Perm(tuple(imgs)))
        if len(part) >= 3:
            imgs = list(range(n))
            for a, b in zip(part, part[1:] + part[:1]):
                imgs[a] = b
            gens.append(Perm(tuple(imgs)))
    d = len(support)
    order = factorial(d) * factorial(n - d)
    return PAutReport(
        order=order,
        generators=tuple(gens),
        is_cyclic_of_order_2=(order == 2),
        has_fpf_involution=(d % 2 == 0 and (n - d) % 2 == 0),
        has_fixed_point_involution=(n >= 3 and max(d, n - d) >= 2),
    )


def paut(code: LinearCode) -> PAutReport:
    """Exact order, generators and involution flags of the automorphism group.

    Runs the full search for 2 <= k <= n-2 (and for every k at n <= 8,
    so the search itself is exercised against closed forms there).  The
    degenerate dimensions at larger n use closed forms because those
    groups can have order near n!.
    """
    n, k = code.n, code.k
    if n > LENGTH_GUARD:
        raise TooLarge(f"exact PAut limited to length {LENGTH_GUARD}")
    if n > 8 and k in (0, n):
        return _symmetric_report(n)
    if n > 8 and k in (1, n - 1):
        # PAut(C) = PAut(dual(C)), so the co-dimension-1 case reduces to
        # the stabilizer of the dual's single generator
        row = (code if k == 1 else code.dual()).rows[0]
        return _stabilizer_report(n, row)

    chain = StabilizerChain(n)
    gens: list[Perm] = []
    count = 0
    has_fpf = False
    has_fix = False
    ident = tuple(range(n))
    for imgs in _automorphism_images(code):
        count += 1
        if imgs != ident and all(imgs[x] == i for i, x in enumerate(imgs)):
            if all(x != i for i, x in enumerate(imgs)):
                has_fpf = True
            else:
                has_fix = True
        if not chain.contains(imgs):
            chain.add(imgs)
            gens.append(Perm(imgs))
    if chain.order() != count:
        raise RuntimeError("stabilizer chain disagrees with the element stream")
    return PAutReport(
        order=count,
        generators=tuple(gens),
        is_cyclic_of_order_2=(count == 2),
        has_fpf_involution=has_fpf,
        has_fixed_point_involution=has_fix,
    )


def _free_closure(
    base: frozenset, gen: tuple[int, ...], n: int, cap: int
) -> frozenset | None:
    """Closure of base + {gen} under composition, rejected (None) as soon
    as it exceeds ``cap`` elements or contains a non-identity element
    with a fixed point."""
    ident = tuple(range(n))
    elems = set(base)
    elems.add(gen)
    if len(elems) > cap:
        return None
    changed = True
    while changed:
        changed = False
        cur = list(elems)
        for a in cur:
            for b in cur:
                c = _mult(a, b)
                if c not in elems:
                    if c != ident and any(c[i] == i for i in range(n)):
                        return None
                    elems.add(c)
                    if len(elems) > cap:
                        return None
                    changed = True
    return frozenset(elems)


def _has_regular_subgroup(elements: list[tuple[int, ...]], n: int) -> bool:
    """Does the listed group contain an order-n subgroup all of whose
    non-identity elements are fixed point free (transitive + free)?"""
    if n == 1:
        return True
    ident = tuple(range(n))
    by_first: dict[int, list[tuple[int, ...]]] = {}
    for g in elements:
        if all(g[i] != i for i in range(n)):
            by_first.setdefault(g[0], []).append(g)
    if any(j not in by_first for j in range(1, n)):
        return False
    seen: set[frozenset] = set()

    def grow(sub: frozenset) -> bool:
        if len(sub) == n:
            return True
        covered = {g[0] for g in sub}
        j = min(x for x in range(n) if x not in covered)
        for g in by_first[j]:
            nxt = _free_closure(sub, g, n, n)
            if nxt is None or nxt in seen:
                continue
            seen.add(nxt)
            if n % len(nxt) == 0 and grow(nxt):
                return True
        return False

    return grow(frozenset({ident}))


def is_group_code(code: LinearCode) -> bool:
    """True iff some subgroup of PAut acts regularly on the coordinates."""
    n = code.n
    if n > GROUP_CODE_GUARD:
        raise TooLarge(f"regular subgroup search limited to length {GROUP_CODE_GUARD}")
    return _has_regular_subgroup(list(_automorphism_images(code)), n)


def _primes_dividing(n: int) -> list[int]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def quasi_group_witness(code: LinearCode) -> Perm | None:
    """A fixed point free prime-order automorphism, if one exists.

    Such an element generates a nontrivial free subgroup, and every
    nontrivial free subgroup contains one, so this decides the quasi
    group property exactly.
    """
    n = code.n
    if n > LENGTH_GUARD:
        raise TooLarge(f"quasi group test limited to length {LENGTH_GUARD}")
    for p in _primes_dividing(n):
        for imgs in _fpf_prime_order_images(n, p):
            if _is_automorphism_images(code, imgs):
                return Perm(imgs)
    return None


def is_quasi_group_code(code: LinearCode) -> bool:
    """True iff PAut contains a nontrivial free (semiregular) subgroup."""
    return quasi_group_witness(code) is not None

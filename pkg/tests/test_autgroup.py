import random
from math import factorial

import pytest

from pautkit import (
    LinearCode,
    Perm,
    TooLarge,
    Word,
    automorphisms,
    find_automorphism_outside,
    is_automorphism,
    is_group_code,
    is_quasi_group_code,
    paut,
    quasi_group_witness,
    rref,
)
from pautkit.autgroup import StabilizerChain
from pautkit.perm import (
    compose,
    conjugate,
    generate,
    image_code,
    is_fixed_point_free,
    is_involution,
)

from bruteforce import brute_automorphism_images


def P(text, n):
    return Perm.from_cycles(text, n)


def rand_code(rng, n, rows=None):
    count = rows or rng.randrange(1, n + 1)
    return rref([Word(n, rng.getrandbits(n)) for _ in range(count)])


PROP34_CODE = LinearCode.from_strings(["0010", "1100"])


def test_is_automorphism_examples():
    assert is_automorphism(PROP34_CODE, Perm.identity(4))
    assert is_automorphism(PROP34_CODE, P("(1,2)", 4))
    # 0010 maps to 0001 under (3,4), which is outside the code
    assert not is_automorphism(PROP34_CODE, P("(3,4)", 4))


def test_paut_examples():
    assert paut(LinearCode.full(4)).order == 24

    rng = random.Random(0)
    for _ in range(20):
        n = rng.randrange(2, 8)
        v = rng.getrandbits(n) or 1
        d = v.bit_count()
        assert paut(LinearCode(n, (v,))).order == factorial(d) * factorial(n - d)

    r = paut(PROP34_CODE)
    assert r.order == 2
    assert [str(g) for g in r.generators] == ["(1,2)"]
    assert r.is_cyclic_of_order_2
    assert not r.has_fpf_involution
    assert r.has_fixed_point_involution


def test_paut_matches_bruteforce_randomized():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randrange(1, 7)
        c = rand_code(rng, n)
        brute = sum(1 for _ in brute_automorphism_images(c))
        assert paut(c).order == brute


def test_paut_matches_bruteforce_on_invariant_codes():
    # structured pairing-invariant inputs, not just random ones
    from pautkit.census import enumerate_sigma_invariant

    rng = random.Random(99)
    codes = [c for k in range(2, 7) for c in enumerate_sigma_invariant(8, k)]
    for c in rng.sample(codes, 15):
        brute = sum(1 for _ in brute_automorphism_images(c))
        assert paut(c).order == brute


def test_automorphism_stream_is_exact_and_sorted():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randrange(1, 7)
        c = rand_code(rng, n)
        mine = [p.images for p in automorphisms(c)]
        assert mine == sorted(mine)
        assert mine == list(brute_automorphism_images(c))


def test_paut_generators_generate_the_group():
    rng = random.Random(29)
    for _ in range(25):
        n = rng.randrange(2, 7)
        c = rand_code(rng, n)
        r = paut(c)
        if r.order > 2000:
            continue
        closure = generate(list(r.generators) or [Perm.identity(n)])
        assert len(closure) == r.order
        for g in closure:
            assert is_automorphism(c, g)


def test_paut_flags_match_element_scan():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randrange(2, 7)
        c = rand_code(rng, n)
        r = paut(c)
        elems = list(automorphisms(c))
        invols = [p for p in elems if is_involution(p)]
        assert r.has_fpf_involution == any(is_fixed_point_free(p) for p in invols)
        assert r.has_fixed_point_involution == any(
            not is_fixed_point_free(p) for p in invols
        )
        assert r.is_cyclic_of_order_2 == (r.order == 2)


def test_paut_degenerate_dimensions_match_search():
    # closed forms at n > 8 agree with the searched values at n <= 8
    for n in (4, 6, 8):
        assert paut(LinearCode.zero(n)).order == factorial(n)
        assert paut(LinearCode.full(n)).order == factorial(n)
    r = paut(LinearCode.zero(10))
    assert r.order == factorial(10)
    assert r.has_fpf_involution and r.has_fixed_point_involution
    v = Word.from_string("1110000000")
    r = paut(rref([v]))
    assert r.order == factorial(3) * factorial(7)
    assert not r.has_fpf_involution  # both 3 and 7 are odd
    c = rref([v]).dual()
    assert paut(c).order == factorial(3) * factorial(7)


def test_paut_guard():
    with pytest.raises(TooLarge):
        paut(LinearCode.zero(13))


def test_paut_equals_dual_paut():
    rng = random.Random(37)
    for _ in range(30):
        n = rng.randrange(1, 7)
        c = rand_code(rng, n)
        assert paut(c).order == paut(c.dual()).order
    for _ in range(5):
        n = rng.randrange(7, 11)
        c = rand_code(rng, n, rows=rng.randrange(2, n - 1))
        if 2 <= c.k <= n - 2:
            assert paut(c).order == paut(c.dual()).order


def test_paut_transport_under_equivalence():
    rng = random.Random(41)
    for _ in range(20):
        n = rng.randrange(2, 7)
        c = rand_code(rng, n)
        imgs = list(range(n))
        rng.shuffle(imgs)
        b = Perm(tuple(imgs))
        moved = image_code(c, b)
        assert paut(moved).order == paut(c).order
        for g in paut(c).generators:
            assert is_automorphism(moved, conjugate(g, b))


def test_find_automorphism_outside():
    sigma = P("(1,2)(3,4)", 4)
    ident = Perm.identity(4)
    c = rref([Word.from_string("1100"), Word.from_string("0011")])
    extra = find_automorphism_outside(c, (ident, sigma))
    assert extra is not None and is_automorphism(c, extra)
    assert find_automorphism_outside(PROP34_CODE, (ident, P("(1,2)", 4))) is None


def test_stabilizer_chain_against_closure():
    rng = random.Random(43)
    for _ in range(30):
        n = rng.randrange(2, 8)
        gens = []
        for _ in range(rng.randrange(1, 3)):
            imgs = list(range(n))
            rng.shuffle(imgs)
            gens.append(Perm(tuple(imgs)))
        chain = StabilizerChain(n)
        for g in gens:
            chain.add(g.images)
        closure = generate(gens)
        assert chain.order() == len(closure)
        for g in closure:
            assert chain.contains(g.images)
        outside = Perm(tuple(rng.sample(range(n), n)))
        assert chain.contains(outside.images) == (outside in closure)


def test_group_code_examples():
    # repetition codes: the full symmetric group contains a regular cycle
    for n in (2, 4, 6, 8):
        rep = rref([Word(n, (1 << n) - 1)])
        assert is_group_code(rep)
    assert is_group_code(LinearCode.zero(4))
    # single word of weight strictly between 0 and n: never a group code
    rng = random.Random(47)
    for _ in range(20):
        n = rng.randrange(2, 8)
        v = rng.getrandbits(n)
        if v == 0 or v == (1 << n) - 1:
            continue
        assert not is_group_code(rref([Word(n, v)]))
    with pytest.raises(TooLarge):
        is_group_code(LinearCode.zero(9))


def test_quasi_group_code_examples():
    # even weight below n gives a quasi group code
    c = rref([Word.from_string("110000")])
    assert is_quasi_group_code(c)
    # power-of-two length with odd weight: not quasi
    c = rref([Word.from_string("11100000")])
    assert not is_quasi_group_code(c)
    # the length-4 characterization code has only (1,2) available
    assert not is_quasi_group_code(PROP34_CODE)


def test_quasi_group_witness_is_validated():
    rng = random.Random(53)
    seen = 0
    for _ in range(40):
        n = rng.randrange(2, 9)
        c = rand_code(rng, n)
        w = quasi_group_witness(c)
        if w is None:
            continue
        seen += 1
        assert is_fixed_point_free(w)
        assert is_automorphism(c, w)
        # prime order: repeated composition hits the identity at a prime
        order = 1
        cur = w
        while cur != Perm.identity(n):
            cur = compose(cur, w)
            order += 1
        assert order in (2, 3, 5, 7)
    assert seen > 0


def test_quasi_group_matches_subgroup_definition_small():
    # brute force the definition: some nontrivial subgroup acting freely
    rng = random.Random(59)
    for _ in range(12):
        n = rng.randrange(2, 6)
        c = rand_code(rng, n)
        elems = [Perm(im) for im in brute_automorphism_images(c)]
        free_subgroup_exists = False
        for g in elems:
            if g == Perm.identity(n):
                continue
            sub = generate([g])
            if all(
                is_fixed_point_free(h) for h in sub if h != Perm.identity(n)
            ):
                free_subgroup_exists = True
                break
        assert is_quasi_group_code(c) == free_subgroup_exists

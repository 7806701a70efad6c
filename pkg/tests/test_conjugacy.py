import random

import pytest
from hypothesis import given

from conftest import random_element, word, words
from product_laws import random_word
from garside import (Conjugate, DomainError, NotConjugate, ResourceError, StructureMismatch,
                     are_conjugate, braid_structure, cycling, decycling, delta_power, gn_make,
                     gn_parts, gn_structure, identity, invert, multiply, summit_representative,
                     summit_set, tau_iter, uss_membership)
from garside.oracle import brute_conjugacy

B3 = braid_structure(3)
B4 = braid_structure(4)
A, B = B3.atoms
DELTA = delta_power(B3, 1)


def shifted_delta(k):
    """σ1^{-k} σ2 σ1^{k+2}."""
    return word(B3, *([-1] * k + [2] + [1] * (k + 2)))


def test_representative_examples():
    h, u = summit_representative(word(B3, -1, 2, 1, 1, 1))
    assert h == DELTA
    assert summit_representative(delta_power(B3, 3)) == (delta_power(B3, 3), identity(B3))
    x = multiply(word(B3, 1, 2), word(B3, 2))
    assert x.factors == (B3.mul(A, B), B)
    assert summit_representative(x) == (DELTA, word(B3, 1, 2))


@given(words(B4, 10))
def test_representative_conjugator(x):
    for kind in ("super", "ultra"):
        h, u = summit_representative(x, kind)
        assert multiply(multiply(invert(u), x), u) == h


def test_summit_set_examples():
    assert summit_set(DELTA).members == {DELTA}
    assert summit_set(word(B3, 1)).members == {word(B3, 1), word(B3, 2)}
    assert summit_set(identity(B3)).members == {identity(B3)}


def test_uss_membership_examples():
    assert uss_membership(delta_power(B3, 2))
    assert uss_membership(word(B3, 1))
    with pytest.raises(DomainError):
        uss_membership(word(B3, -1, 2, 1, 1, 1))


def test_uss_membership_diagonal_lift():
    G2 = gn_structure(B3, 2)
    rng = random.Random(6)
    for _ in range(10):
        g = summit_representative(random_element(B3, rng, 8), "ultra")[0]
        assert uss_membership(gn_make(G2, 0, (g, g)))


def test_summit_set_invariants():
    rng = random.Random(1)
    for _ in range(25):
        x = random_element(B4, rng, 10)
        for kind in ("super", "ultra"):
            s = summit_set(x, kind)
            for h, u in s.conjugators.items():
                assert (h.inf, h.sup) == (s.inf_s, s.sup_s)
                assert multiply(multiply(invert(u), x), u) == h
                assert cycling(h)[0] in s and tau_iter(h, 1) in s
                if kind == "super":
                    assert decycling(h)[0] in s
                    # τ commutes with cycling and decycling on summit members
                    assert tau_iter(cycling(h)[0], 1) == cycling(tau_iter(h, 1))[0]
                    assert tau_iter(decycling(h)[0], 1) == decycling(tau_iter(h, 1))[0]
                else:
                    assert uss_membership(h)
            # any member regenerates the same set
            other = max(s.members, key=str)
            assert summit_set(other, kind).members == s.members


def test_summit_cap():
    with pytest.raises(ResourceError):
        summit_set(word(B4, 1, 2, -3), "super", cap=1)


def test_are_conjugate_examples():
    cert = are_conjugate(word(B3, 1), word(B3, 2))
    assert isinstance(cert, Conjugate)
    assert multiply(multiply(invert(cert.conjugator), word(B3, 1)), cert.conjugator) == word(B3, 2)
    assert isinstance(are_conjugate(shifted_delta(1), DELTA), Conjugate)
    cert = are_conjugate(word(B3, 1), word(B3, 1, 2))
    assert isinstance(cert, NotConjugate)
    assert cert.fingerprint_a != cert.fingerprint_b


def test_are_conjugate_mismatch():
    with pytest.raises(StructureMismatch):
        are_conjugate(word(B3, 1), word(B4, 1))


def test_conjugacy_against_brute():
    rng = random.Random(9)
    for _ in range(30):
        x = random_element(B3, rng, 6)
        u = random_element(B3, rng, 3)
        y = multiply(multiply(invert(u), x), u)
        z = random_element(B3, rng, 6)
        for kind in ("super", "ultra"):
            assert isinstance(are_conjugate(x, y, kind), Conjugate)
            assert isinstance(are_conjugate(y, x, kind), Conjugate)
        if brute_conjugacy(x, z, 3):
            assert isinstance(are_conjugate(x, z), Conjugate)
        if isinstance(are_conjugate(x, z), NotConjugate):
            assert brute_conjugacy(x, z, 3) is None


def test_diagonal_in_ultra_summit_set():
    G2 = gn_structure(B3, 2)
    rng = random.Random(12)
    for _ in range(10):
        g = random_element(B3, rng, 6)
        for k in (0, 1, 2):
            s = summit_set(gn_make(G2, k, (g, g)), "ultra")
            diag = [m for m in s.members if len(set(gn_parts(m)[1])) == 1]
            assert diag


def test_diagonal_lift_of_summit_element_is_summit():
    G2 = gn_structure(B3, 2)
    rng = random.Random(13)
    for _ in range(10):
        g = summit_representative(random_element(B3, rng, 8))[0]
        for k in range(g.inf - 1, g.sup + 2):
            alpha = gn_make(G2, k, (g, g))
            assert alpha.inf == min(k, g.inf) and alpha.sup == max(k, g.sup)
            h = summit_representative(alpha)[0]
            assert (h.inf, h.sup) == (alpha.inf, alpha.sup)


@pytest.mark.parametrize("k", [1, 3])
def test_conjugacy_transfer(k):
    G2 = gn_structure(B3, 2)
    rng = random.Random(20 + k)
    for _ in range(8):
        gs = [random_word(B3, rng, 3) for _ in range(2)]
        if rng.random() < 0.5:
            u = random_element(B3, rng, 3)
            prod = multiply(multiply(invert(u), multiply(*gs)), u)
            hs = [prod, identity(B3)] if rng.random() < 0.5 else [random_word(B3, rng, 2), None]
            if hs[1] is None:
                hs[1] = multiply(invert(hs[0]), prod)
        else:
            hs = [random_word(B3, rng, 3) for _ in range(2)]
        in_g = isinstance(are_conjugate(multiply(*gs), multiply(*hs)), Conjugate)
        in_gn = isinstance(are_conjugate(gn_make(G2, k, gs), gn_make(G2, k, hs)), Conjugate)
        assert in_g == in_gn

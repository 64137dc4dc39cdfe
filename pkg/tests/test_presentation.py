import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ternary_pathsets import (
    NotRightResolvingError,
    Presentation,
    PresentationError,
    build_translate_presentation,
    canonical_form,
    determinize,
    is_right_resolving,
    isomorphic,
    label_product,
    minimize,
    scc_decomposition,
    trim,
    verify_automorphism,
)
from ternary_pathsets.presentation import initial_words, is_covering, is_trimmed, tarjan_scc


def loop0():
    return Presentation(("0",), 0, frozenset({(0, 0, 0)}))


@st.composite
def presentations(draw, max_vertices=5, deterministic=False):
    n = draw(st.integers(1, max_vertices))
    edges = set()
    for u in range(n):
        for d in (0, 1, 2):
            if deterministic:
                if draw(st.booleans()):
                    edges.add((u, draw(st.integers(0, n - 1)), d))
            else:
                for v in draw(st.lists(st.integers(0, n - 1), max_size=2, unique=True)):
                    edges.add((u, v, d))
    return Presentation(tuple(str(i) for i in range(n)), 0, frozenset(edges))


def test_validation():
    with pytest.raises(PresentationError):
        Presentation(("a", "a"), 0, frozenset())
    with pytest.raises(PresentationError):
        Presentation(("a",), 3, frozenset())
    with pytest.raises(PresentationError):
        Presentation(("a",), 0, frozenset({(0, 1, 0)}))


def test_trim_removes_sinks_and_unreachable():
    p = Presentation(("a", "b", "c", "d"), 0, frozenset({(0, 0, 0), (0, 1, 1), (2, 0, 0), (1, 3, 0)}))
    t = trim(p)
    assert t.labels == ("a",)
    assert t.edges == frozenset({(0, 0, 0)})
    assert is_trimmed(t)


def test_trim_all_dead_is_empty():
    p = Presentation(("a", "b"), 0, frozenset({(0, 1, 0)}))
    assert trim(p).is_empty


def test_tarjan_simple():
    comps = tarjan_scc(4, [[1], [0, 2], [3], [2]])
    assert sorted(map(sorted, comps)) == [[0, 1], [2, 3]]


def test_scc_chain_for_19():
    scc = scc_decomposition(build_translate_presentation([1, 19]))
    assert scc.is_chain()
    assert sum(len(c) for c in scc.components) == 8


def test_canonical_form_requires_right_resolving():
    p = Presentation(("a", "b"), 0, frozenset({(0, 0, 0), (0, 1, 0), (1, 1, 0)}))
    with pytest.raises(NotRightResolvingError):
        canonical_form(p)
    assert canonical_form(Presentation.empty()) == b""


@pytest.mark.parametrize("m", [4, 7, 19, 73, 163])
def test_canonical_form_permutation_invariant(m):
    p = build_translate_presentation([1, m])
    rng = random.Random(m)
    for _ in range(5):
        perm = list(range(p.num_vertices))
        rng.shuffle(perm)
        assert canonical_form(p.permuted(perm)) == canonical_form(p)


def test_non_isomorphic_distinguished():
    assert not isomorphic(build_translate_presentation([1, 7]), build_translate_presentation([1, 19]))
    # same vertex count, different graphs
    assert not isomorphic(build_translate_presentation([1, 16]), build_translate_presentation([1, 4, 7]))


@settings(max_examples=60, deadline=None)
@given(presentations())
def test_determinize_preserves_words(p):
    d = determinize(p)
    assert is_right_resolving(d)
    for n in range(5):
        assert initial_words(d, n) == initial_words(p, n)


@settings(max_examples=60, deadline=None)
@given(presentations(deterministic=True))
def test_minimize_preserves_words_and_is_idempotent(p):
    q = minimize(trim(p))
    for n in range(6):
        assert initial_words(q, n) == initial_words(p, n)
    assert canonical_form(minimize(q)) == canonical_form(q)


@settings(max_examples=40, deadline=None)
@given(presentations(max_vertices=4, deterministic=True), presentations(max_vertices=4, deterministic=True))
def test_label_product_words_lie_in_both(p, q):
    # prefixes of the intersection of infinite path sets: contained in, not
    # always equal to, the intersection of the prefix sets
    r = label_product(p, q)
    for n in range(5):
        assert initial_words(r, n) <= initial_words(p, n) & initial_words(q, n)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 80), st.integers(1, 80))
def test_label_product_matches_joint_transducer(a, b):
    r = label_product(build_translate_presentation([1, a]), build_translate_presentation([1, b]))
    direct = build_translate_presentation([1, a, b])
    assert canonical_form(minimize(r)) == canonical_form(minimize(direct))


def test_label_product_small_fixture():
    r = label_product(build_translate_presentation([1, 4]), build_translate_presentation([1, 7]))
    direct = build_translate_presentation([1, 4, 7])
    assert canonical_form(minimize(r)) == canonical_form(minimize(direct))


def test_automorphism_rejects_wrong_map():
    p = build_translate_presentation([1, 7])
    ok, quotient = verify_automorphism(p, list(range(p.num_vertices)), (1, 0, 2))
    assert not ok and quotient is None


def test_covering_of_loop():
    two = Presentation(("a", "b"), 0, frozenset({(0, 1, 0), (1, 0, 0)}))
    assert is_covering(two, loop0(), {0: 0, 1: 0}, degree=2)
    assert not is_covering(two, loop0(), {0: 0, 1: 0}, degree=3)


def test_initial_words_exhaustive():
    p = build_translate_presentation([1, 4])
    words = initial_words(p, 3)
    x_ok = {w for w in itertools.product((0, 1), repeat=3)
            if all(c != 2 for c in _low_digits(4 * sum(d * 3**i for i, d in enumerate(w)), 3))}
    assert words == x_ok


def _low_digits(y, n):
    out = []
    for _ in range(n):
        y, r = divmod(y, 3)
        out.append(r)
    return out

import json

import pytest

from pathcrystals.cactus import (
    act,
    compose,
    identity_perm,
    theta_image,
    verify_cactus_relations,
    xi,
    xi_perm,
)
from pathcrystals.cartan import (
    DynkinType,
    all_nodes,
    connected_subdiagrams,
    w0J_apply,
)
from pathcrystals.crystal import generate, levi
from pathcrystals.errors import DomainError

A1 = DynkinType("A", 1)
A2 = DynkinType("A", 2)
A3 = DynkinType("A", 3)
C2 = DynkinType("C", 2)
C3 = DynkinType("C", 3)
G2 = DynkinType("G", 2)


def test_xi_sends_highest_to_lowest():
    g = generate(C2, (1, 0))
    full = all_nodes(C2)
    view = levi(g, full)
    comp = view.components[0]
    assert xi(g, full, view.highest_of(comp)) == view.lowest_of(comp)


def test_xi_on_a1_string_reverses():
    g = generate(A1, (2,))
    # vertices 0,1,2 form a single lowering string
    for k in range(3):
        assert xi(g, {1}, k) == 2 - k


def test_xi_singleton_reverses_every_string():
    g = generate(C2, (1, 1))
    for i in C2.nodes:
        perm = xi_perm(g, {i})
        view = levi(g, {i})
        for comp in view.components:
            top, bottom = view.highest_of(comp), view.lowest_of(comp)
            cur, mirrored = top, bottom
            while cur is not None:
                assert perm[cur] == mirrored
                cur = g.f(cur, i)
                mirrored = g.e(mirrored, i) if mirrored is not None else None


def test_xi_full_on_a2_fundamental():
    # the 3-vertex model: 0 -> 1 (color 1) -> 2 (color 2); the full involution
    # swaps the ends and must fix the middle (an involution on an odd set
    # always has a fixed point)
    g = generate(A2, (1, 0))
    assert xi_perm(g, {1, 2}) == (2, 1, 0)


def test_xi_rejects_disconnected_or_empty():
    g = generate(A3, (1, 0, 0))
    with pytest.raises(DomainError):
        xi_perm(g, {1, 3})
    with pytest.raises(DomainError):
        xi_perm(g, set())


@pytest.mark.parametrize(
    "t,lam",
    [(A2, (1, 0)), (A1, (2,)), (C2, (1, 0)), (C2, (0, 1)), (G2, (1, 0)), (A3, (1, 0, 1))],
)
def test_xi_involution_weight_twist_intertwining(t, lam):
    g = generate(t, lam)
    ident = identity_perm(g)
    from pathcrystals.cartan import theta as diagram_theta

    for sub in connected_subdiagrams(t):
        perm = xi_perm(g, sub)
        assert compose(perm, perm) == ident
        twist = diagram_theta(t, sub)
        for v in range(len(g)):
            assert g.weight(perm[v]) == w0J_apply(t, sub, g.weight(v))
            for j in sub:
                w = g.f(v, j)
                image = g.e(perm[v], twist[j])
                if w is None:
                    assert image is None
                else:
                    assert perm[w] == image


@pytest.mark.parametrize("t,lam", [(C2, (1, 1)), (A3, (0, 1, 0)), (G2, (1, 0))])
def test_xi_word_independence(t, lam):
    g = generate(t, lam)
    for sub in connected_subdiagrams(t):
        assert xi_perm(g, sub) == xi_perm(g, sub, descending=True)


def test_act_empty_word_is_identity():
    g = generate(C2, (1, 0))
    assert act(g, []) == identity_perm(g)


def test_act_generator_squared_is_identity():
    g = generate(C2, (1, 0))
    for sub in connected_subdiagrams(C2):
        assert act(g, [sub, sub]) == identity_perm(g)


def test_act_is_associative_composition():
    g = generate(A3, (0, 1, 0))
    word = [frozenset({1}), frozenset({1, 2}), frozenset({3})]
    left = compose(act(g, word[:1]), act(g, word[1:]))
    assert act(g, word) == left


def test_theta_image_examples():
    assert theta_image(A3, all_nodes(A3), frozenset({1})) == frozenset({3})
    assert theta_image(C3, all_nodes(C3), frozenset({1, 2})) == frozenset({1, 2})
    full = all_nodes(A2)
    assert theta_image(A2, full, full) == full


def test_theta_image_requires_nesting():
    with pytest.raises(DomainError):
        theta_image(A3, frozenset({1, 2}), frozenset({3}))


@pytest.mark.parametrize(
    "t,lam",
    [(A3, (0, 1, 0)), (C2, (1, 1)), (G2, (1, 0)), (DynkinType("D", 4), (1, 0, 0, 0))],
)
def test_cactus_relations_pass(t, lam):
    assert verify_cactus_relations(generate(t, lam)) == []


def test_relation_three_needs_the_twist():
    # on the A2 fundamental model, the full generator conjugates the color-1
    # generator to the color-2 one; dropping the twist breaks the relation
    g = generate(A2, (1, 0))
    full = xi_perm(g, {1, 2})
    one = xi_perm(g, {1})
    two = xi_perm(g, {2})
    assert compose(full, one) == compose(two, full)
    assert compose(full, one) != compose(one, full)


def test_report_records_are_json_serializable():
    g = generate(C2, (1, 0))
    report = verify_cactus_relations(g)
    assert json.loads(json.dumps(report)) == report

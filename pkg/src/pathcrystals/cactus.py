"""Partial Schutzenberger-Lusztig involutions and the cactus-group action.

The involution for a connected color set J sends a vertex b, written as a
lowering word applied to the highest vertex of its J-component, to the
twisted raising word applied to the lowest vertex of that component.  The
verifier checks, by exhaustive permutation arithmetic, that these involutions
satisfy the defining relations of the cactus group of the diagram.
"""

from __future__ import annotations

from .cartan import (
    components,
    connected_subdiagrams,
    is_connected,
    node_mask,
    theta,
)
from .crystal import CrystalGraph, levi
from .errors import DomainError, ModelIntegrityError


def _apply_raising_word(graph, start, word, twist):
    cur = start
    for color in word:
        cur = graph.e(cur, twist[color])
        if cur is None:
            raise ModelIntegrityError(
                "raising word left the component; inconsistent twist data"
            )
    return cur


def xi(graph: CrystalGraph, colors, b: int, descending=False) -> int:
    """Image of vertex b under the partial involution for a connected color
    set.  The descending flag only changes which lowering word is used; the
    result is word-independent (and the tests check that)."""
    colors = frozenset(colors)
    if not colors or not is_connected(graph.rtype, colors):
        raise DomainError("xi needs a nonempty connected color set")
    view = levi(graph, colors)
    comp = view.component_of(b)
    twist = theta(graph.rtype, colors)
    word = view.f_word(comp, b, descending)
    return _apply_raising_word(graph, view.lowest_of(comp), word, twist)


def xi_perm(graph: CrystalGraph, colors, descending=False) -> tuple:
    """The partial involution as a permutation of all vertex ids."""
    colors = frozenset(colors)
    if not colors or not is_connected(graph.rtype, colors):
        raise DomainError("xi_perm needs a nonempty connected color set")
    view = levi(graph, colors)
    twist = theta(graph.rtype, colors)
    out = [None] * len(graph)
    for comp in view.components:
        lowest = view.lowest_of(comp)
        for b in comp:
            word = view.f_word(comp, b, descending)
            out[b] = _apply_raising_word(graph, lowest, word, twist)
    if sorted(out) != list(range(len(graph))):
        raise ModelIntegrityError("involution image is not a permutation")
    return tuple(out)


def compose(p: tuple, q: tuple) -> tuple:
    """Permutation composition (p after q)."""
    return tuple(p[x] for x in q)


def identity_perm(graph: CrystalGraph) -> tuple:
    return tuple(range(len(graph)))


def act(graph: CrystalGraph, word, perms=None) -> tuple:
    """Permutation of a word of generators, rightmost letter applied first.

    Each letter is a connected node set.  An optional dict caches the
    per-letter permutations across calls.
    """
    cache = perms if perms is not None else {}
    total = identity_perm(graph)
    for letter in word:
        letter = frozenset(letter)
        perm = cache.get(letter)
        if perm is None:
            perm = xi_perm(graph, letter)
            cache[letter] = perm
        total = compose(total, perm)
    return total


def theta_image(t, outer, inner) -> frozenset:
    """Image of a connected subset under the diagram automorphism of a
    connected superset."""
    outer = frozenset(outer)
    inner = frozenset(inner)
    if not inner <= outer:
        raise DomainError("theta_image needs nested node sets")
    twist = theta(t, outer)
    image = frozenset(twist[j] for j in inner)
    if not is_connected(t, image):
        raise ModelIntegrityError("automorphism image of a connected set is disconnected")
    return image


def _first_difference(p, q):
    for v, (a, b) in enumerate(zip(p, q)):
        if a != b:
            return v
    return None


def verify_cactus_relations(graph: CrystalGraph) -> list:
    """Check the three cactus-group relations as permutation identities over
    all pairs of connected subdiagrams.  Returns violation records; empty
    means the generators define a group action on this crystal."""
    t = graph.rtype
    subs = connected_subdiagrams(t)
    perms = {s: xi_perm(graph, s) for s in subs}
    ident = identity_perm(graph)
    violations = []

    def record(relation, outer, inner, witness):
        violations.append(
            {
                "relation": relation,
                "I": sorted(outer),
                "J": sorted(inner),
                "witness_vertex": witness,
            }
        )

    for s in subs:
        square = compose(perms[s], perms[s])
        if square != ident:
            record(1, s, s, _first_difference(square, ident))
    for a in subs:
        for b in subs:
            if node_mask(a) >= node_mask(b):
                continue
            if len(components(t, a | b)) < 2:
                continue
            left = compose(perms[a], perms[b])
            right = compose(perms[b], perms[a])
            if left != right:
                record(2, a, b, _first_difference(left, right))
    for outer in subs:
        for inner in subs:
            if not inner <= outer:
                continue
            left = compose(perms[outer], perms[inner])
            right = compose(perms[theta_image(t, outer, inner)], perms[outer])
            if left != right:
                record(3, outer, inner, _first_difference(left, right))
    return violations

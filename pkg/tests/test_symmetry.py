"""Automorphisms: explicit maps, the full group, decomposition, transitivity."""

from math import factorial

import pytest

from idealgraph import (
    NotAPermutationError,
    TooLargeError,
    automorphism_group,
    build_boolean,
    build_from_family,
    complement_automorphism,
    compose,
    decompose_boolean,
    enumerate_left_ideals,
    null_semigroup,
    relabel_automorphism,
    transitivity,
)


def mask_map(n, auto):
    masks = tuple(build_boolean(n).vertices())
    return dict(auto.mask_pairs(masks))


def test_relabel_identity():
    a = relabel_automorphism(3, [0, 1, 2])
    assert a.images == tuple(range(6))
    assert a.complemented is False


def test_relabel_transposition_n3():
    a = relabel_automorphism(3, [1, 0, 2])  # swap the first two elements
    m = mask_map(3, a)
    assert m[0b001] == 0b010 and m[0b010] == 0b001
    assert m[0b101] == 0b110 and m[0b110] == 0b101
    assert m[0b100] == 0b100 and m[0b011] == 0b011


def test_relabel_preserves_adjacency():
    for n in (3, 4):
        g = build_boolean(n)
        a = relabel_automorphism(n, list(range(1, n)) + [0])
        vs = list(g.vertices())
        m = mask_map(n, a)
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                assert g.adjacent(vs[i], vs[j]) == g.adjacent(m[vs[i]], m[vs[j]])


def test_relabel_four_cycle_has_order_four():
    a = relabel_automorphism(4, [1, 2, 3, 0])
    p = a
    for _ in range(3):
        p = compose(a, p)
        # not yet identity at powers 2 and 3
    assert p.images == tuple(range(14))
    assert compose(a, a).images != tuple(range(14))


def test_relabel_rejects_non_permutation():
    with pytest.raises(NotAPermutationError):
        relabel_automorphism(3, [0, 0, 1])
    with pytest.raises(NotAPermutationError):
        relabel_automorphism(3, [0, 1])


def test_complement_examples():
    c = complement_automorphism(3)
    m = mask_map(3, c)
    assert m[0b001] == 0b110 and m[0b110] == 0b001
    assert m[0b011] == 0b100


def test_complement_is_involution_and_commutes():
    for n in (3, 4, 5):
        c = complement_automorphism(n)
        ident = tuple(range(2 ** n - 2))
        assert compose(c, c).images == ident
        for sigma in ([1, 0] + list(range(2, n)), list(range(1, n)) + [0]):
            s = relabel_automorphism(n, sigma)
            assert compose(s, c).images == compose(c, s).images


def test_automorphism_group_orders():
    expected = {2: 2, 3: 12, 4: 48, 5: 240, 6: 1440}
    for n, want in expected.items():
        report = automorphism_group(build_boolean(n))
        assert report.order == want
        if n >= 3:
            assert report.structure == f"S{n} x Z2"


def test_generators_decompose_and_generate():
    for n in (3, 4, 5):
        report = automorphism_group(build_boolean(n))
        assert all(a.base_perm is not None for a in report.generators)
        # closure of the generators reproduces the reported order
        perms = {tuple(range(2 ** n - 2))}
        frontier = [tuple(range(2 ** n - 2))]
        gens = [a.images for a in report.generators]
        while frontier:
            nxt = []
            for p in frontier:
                for q in gens:
                    r = tuple(p[i] for i in q)
                    if r not in perms:
                        perms.add(r)
                        nxt.append(r)
            frontier = nxt
        assert len(perms) == report.order


def test_explicit_generators_span_group():
    for n in (3, 4, 5, 6):
        swap = relabel_automorphism(n, [1, 0] + list(range(2, n)))
        cycle = relabel_automorphism(n, list(range(1, n)) + [0])
        comp = complement_automorphism(n)
        seen = {tuple(range(2 ** n - 2))}
        frontier = list(seen)
        gens = [swap.images, cycle.images, comp.images]
        while frontier:
            nxt = []
            for p in frontier:
                for q in gens:
                    r = tuple(p[i] for i in q)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        assert len(seen) == 2 * factorial(n)


def test_decomposition_is_group_isomorphism():
    # Composition of decomposed automorphisms multiplies the element
    # permutations and xors the complement flags.
    n = 4
    masks = tuple(build_boolean(n).vertices())
    report = automorphism_group(build_boolean(n))
    gens = list(report.generators)
    for a in gens[:6]:
        for b in gens[:6]:
            ab = compose(a, b)
            sigma, complemented = decompose_boolean(n, ab.images, masks)
            want_sigma = tuple(a.base_perm[b.base_perm[i]] for i in range(n))
            assert sigma == want_sigma
            assert complemented == (a.complemented ^ b.complemented)


def test_every_automorphism_fixes_or_mirrors_popcount():
    for n in (3, 4):
        masks = tuple(build_boolean(n).vertices())
        report = automorphism_group(build_boolean(n))
        # expand the whole group from generators (small here)
        perms = {tuple(range(len(masks)))}
        frontier = list(perms)
        gens = [a.images for a in report.generators]
        while frontier:
            nxt = []
            for p in frontier:
                for q in gens:
                    r = tuple(p[i] for i in q)
                    if r not in perms:
                        perms.add(r)
                        nxt.append(r)
            frontier = nxt
        assert len(perms) == report.order
        for p in perms:
            behaviors = {
                (masks[i].bit_count(), masks[p[i]].bit_count())
                for i in range(len(masks))
            }
            preserves = all(a == b for a, b in behaviors)
            mirrors = all(b == n - a for a, b in behaviors)
            assert preserves or mirrors


def test_vertex_orbits_are_mirrored_layers():
    for n in (4, 5, 6):
        masks = tuple(build_boolean(n).vertices())
        report = automorphism_group(build_boolean(n))
        parent = list(range(len(masks)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in report.generators:
            for i, j in enumerate(a.images):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        orbits = {}
        for i in range(len(masks)):
            orbits.setdefault(find(i), set()).add(masks[i])
        want = {}
        for m in masks:
            k = min(m.bit_count(), n - m.bit_count())
            want.setdefault(k, set()).add(m)
        assert sorted(map(sorted, orbits.values())) == sorted(map(sorted, want.values()))


def test_transitivity():
    assert transitivity(build_boolean(2)) == (True, True)
    assert transitivity(build_boolean(3)) == (True, True)
    assert transitivity(build_boolean(4)) == (False, False)
    assert transitivity(build_boolean(5)) == (False, False)


def test_generic_graph_group():
    # The 3-vertex path has exactly the identity and the leaf swap.
    g = build_from_family(enumerate_left_ideals(null_semigroup(3)))
    report = automorphism_group(g)
    assert report.order == 2
    assert report.structure == "other"
    assert all(a.base_perm is None for a in report.generators)


def test_aut_cap():
    with pytest.raises(TooLargeError):
        automorphism_group(build_boolean(8), cap=100)


def test_raw_graph_orders_match_known_groups():
    import networkx as nx

    from idealgraph import dense_from_edges

    cases = [
        (nx.petersen_graph(), 120),
        (nx.cycle_graph(5), 10),
        (nx.cycle_graph(8), 16),
        (nx.complete_graph(5), 120),
        (nx.complete_bipartite_graph(3, 3), 72),
        (nx.hypercube_graph(3), 48),
        (nx.disjoint_union(nx.complete_graph(3), nx.complete_graph(3)), 72),
        (nx.path_graph(4), 2),
        (nx.star_graph(4), 24),
        (nx.bull_graph(), 2),
        (nx.empty_graph(5), 120),
    ]
    for G, want in cases:
        G = nx.convert_node_labels_to_integers(G)
        g = dense_from_edges(G.number_of_nodes(), list(G.edges()))
        assert automorphism_group(g).order == want

import random

import pytest

from bettishift import (InputError, SimplicialComplex, SubcomplexFamily,
                        from_stanley_reisner, intersect_family, parse_ideal,
                        stanley_reisner_ideal, union_family)
from bettishift.complexes import (from_faces, parse_facet_complex,
                                  render_facet_complex, _subsets_of)


def brute_faces(delta):
    """Face set straight from the membership predicate, full 2^n scan."""
    return {s for s in range(1 << delta.n) if delta.is_face(s)}


HOLLOW_TRIANGLE = from_stanley_reisner(parse_ideal("x1*x2*x3"))
THREE_POINTS = from_stanley_reisner(parse_ideal("x1*x2; x2*x3; x1*x3"))


class TestStanleyReisner:
    def test_hollow_triangle(self):
        d = HOLLOW_TRIANGLE
        assert d.vertex_mask == 0b111
        assert d.is_face(0b011) and d.is_face(0b101) and d.is_face(0b110)
        assert not d.is_face(0b111)
        assert d.dimension() == 1

    def test_edge_ideal_gives_isolated_points(self):
        d = THREE_POINTS
        assert d.dimension() == 0
        assert len(d.faces) == 4  # empty set + 3 vertices

    def test_singleton_generator_excludes_vertex(self):
        d = from_stanley_reisner(parse_ideal("vars x1,x2; x1"))
        assert d.vertex_mask == 0b10
        assert not d.is_face(0b01)
        assert d.is_face(0b10)

    def test_non_squarefree_rejected(self):
        with pytest.raises(InputError):
            from_stanley_reisner(parse_ideal("x^2"))

    def test_roundtrip_with_ideal(self):
        for text in ("x1*x2*x3", "x1*x2; x2*x3; x1*x3", "vars x1,x2; x1"):
            I = parse_ideal(text)
            d = from_stanley_reisner(I)
            J = stanley_reisner_ideal(d, I.var_names)
            assert set(J.gens) == set(I.gens)


class TestInduced:
    def test_identity(self):
        d = HOLLOW_TRIANGLE
        assert d.induced((1 << d.n) - 1).faces == d.faces

    def test_edge_of_triangle(self):
        e = HOLLOW_TRIANGLE.induced(0b011)
        assert e.faces == {0, 0b001, 0b010, 0b011}

    def test_empty_subset(self):
        e = HOLLOW_TRIANGLE.induced(0)
        assert e.faces == {0}
        assert e.dimension() == -1

    def test_composition_is_intersection(self):
        rng = random.Random(11)
        d = HOLLOW_TRIANGLE
        for _ in range(20):
            w = rng.randrange(8)
            v = rng.randrange(8)
            assert d.induced(w).induced(v).faces == d.induced(w & v).faces


class TestVoidAndEmpty:
    def test_distinct(self):
        void = SimplicialComplex.make_void(3)
        empty = SimplicialComplex.empty(3)
        assert void.faces == frozenset()
        assert empty.faces == {0}
        assert void.dimension() is None
        assert empty.dimension() == -1

    def test_full_simplex_dimension(self):
        assert SimplicialComplex.full_simplex(4).dimension() == 3


class TestFamilies:
    def test_union_of_two_edges_is_path(self):
        e12 = from_faces(3, _subsets_of(0b011))
        e23 = from_faces(3, _subsets_of(0b110))
        path = union_family(SubcomplexFamily((e12, e23)))
        assert path.faces == set(_subsets_of(0b011)) | set(_subsets_of(0b110))

    def test_union_with_void_is_identity(self):
        d = HOLLOW_TRIANGLE
        u = union_family(SubcomplexFamily((d, SimplicialComplex.make_void(3))))
        assert u.faces == d.faces

    def test_intersection_self(self):
        d = HOLLOW_TRIANGLE
        assert intersect_family(SubcomplexFamily((d, d))).faces == d.faces

    def test_triangle_cap_edge(self):
        edge = from_faces(3, _subsets_of(0b011))
        got = intersect_family(SubcomplexFamily((HOLLOW_TRIANGLE, edge)))
        assert got.faces == set(_subsets_of(0b011))

    def test_mismatched_n_rejected(self):
        with pytest.raises(InputError):
            SubcomplexFamily((HOLLOW_TRIANGLE, SimplicialComplex.empty(4)))

    def test_induced_intersection_identity_exhaustive(self):
        # intersect(induced(D, W\B_i)) == induced(D, W \ union(B_i))
        d = from_stanley_reisner(parse_ideal("x1*x2; x3*x4*x5"))
        rng = random.Random(5)
        for _ in range(40):
            w = rng.randrange(1 << 5)
            bs = [rng.randrange(1 << 5) & w for _ in range(rng.randint(1, 3))]
            fam = SubcomplexFamily(tuple(d.induced(w & ~b) for b in bs))
            union_b = 0
            for b in bs:
                union_b |= b
            assert intersect_family(fam).faces == d.induced(w & ~union_b).faces

    def test_family_ops_match_brute_force(self):
        rng = random.Random(7)
        base = from_stanley_reisner(parse_ideal("x1*x2*x3; x2*x4; x5*x1"))
        for _ in range(25):
            members = tuple(base.induced(rng.randrange(1 << 5))
                            for _ in range(rng.randint(1, 4)))
            fam = SubcomplexFamily(members)
            expect_u = set().union(*(brute_faces(m) for m in members))
            expect_i = set.intersection(*(brute_faces(m) for m in members))
            assert brute_faces(union_family(fam)) == expect_u
            assert brute_faces(intersect_family(fam)) == expect_i


class TestFacetFixtures:
    def test_parse(self):
        d = parse_facet_complex("facets: 1 2 3; 2 4")
        assert d.n == 4
        assert d.is_face(0b0111)
        assert d.is_face(0b1010)
        assert not d.is_face(0b1100)

    def test_roundtrip(self):
        d = parse_facet_complex("facets: 1 2 3; 2 4")
        assert parse_facet_complex(render_facet_complex(d)).faces == d.faces

    def test_bad_label(self):
        with pytest.raises(InputError):
            parse_facet_complex("facets: 1 0")

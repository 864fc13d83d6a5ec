import pytest
from itertools import combinations
from hypothesis import given, settings as hypothesis_settings, strategies as st
from pydantic import ValidationError
from src.complexes.dsl import parse_subcomplex
from src.complexes.subcomplex import (
    AtMostSInS,
    ComplexIntersection,
    ComplexUnion,
    FullSimplex,
    Induced,
    Rainbow,
    Skeleton,
    contains_face,
    intersection_of,
    non_uniform_complex,
    rainbow_split,
)
from src.core.errors import DSLParseError, TverbergInputError

N_VERTICES = 6
COLOR_OF = [v % 3 for v in range(N_VERTICES)]
ALL_FACES = [
    face
    for size in range(1, N_VERTICES + 1)
    for face in combinations(range(N_VERTICES), size)
]


def _atoms(nonempty=False):
    vertex_sets = st.frozensets(st.integers(0, N_VERTICES - 1), min_size=1 if nonempty else 0)
    return st.one_of(
        st.builds(Skeleton, k=st.integers(-1, 4)),
        st.builds(Induced, vertices=vertex_sets),
        st.builds(AtMostSInS, s=st.integers(0, 3), vertices=vertex_sets),
        st.builds(FullSimplex, n=st.one_of(st.none(), st.integers(0, N_VERTICES - 1))),
        st.just(Rainbow()),
    )


def _complexes(nonempty=False):
    return st.recursive(
        _atoms(nonempty),
        lambda children: st.one_of(
            st.builds(ComplexUnion, left=children, right=children),
            st.builds(ComplexIntersection, left=children, right=children),
        ),
        max_leaves=6,
    )


class TestMembership:
    """Test membership predicates of the constructors"""

    def test_skeleton(self):
        assert Skeleton(k=1).contains((0, 1)) is True
        assert Skeleton(k=1).contains((0, 1, 2)) is False
        assert Skeleton(k=-1).contains((0,)) is False

    def test_full_simplex(self):
        assert FullSimplex().contains((0, 9)) is True
        assert FullSimplex(n=4).contains((0, 4)) is True
        assert FullSimplex(n=4).contains((5,)) is False

    def test_induced(self):
        sigma = Induced(vertices=frozenset({0, 1}))
        assert sigma.contains((0, 1)) is True
        assert sigma.contains((0, 2)) is False

    def test_at_most_s_in_s(self):
        sigma = AtMostSInS(s=1, vertices=frozenset({0, 1, 2}))
        assert sigma.contains((0, 3, 4)) is True
        assert sigma.contains((0, 1)) is False

    def test_rainbow_with_classes(self):
        sigma = Rainbow(classes=((0, 1), (2, 3)))
        assert sigma.contains((0, 2)) is True
        assert sigma.contains((0, 1)) is False
        # Vertices outside every class never clash.
        assert sigma.contains((0, 4, 5)) is True

    def test_rainbow_uses_configuration_coloring(self):
        assert Rainbow().contains((0, 2), color_of=[0, 0, 1]) is True
        assert Rainbow().contains((0, 1), color_of=[0, 0, 1]) is False

    def test_rainbow_without_coloring(self):
        with pytest.raises(TverbergInputError, match="coloring"):
            Rainbow().contains((0, 1))

    def test_rainbow_classes_disjoint(self):
        with pytest.raises(ValidationError, match="must be disjoint"):
            Rainbow(classes=((0, 1), (1, 2)))

    def test_union_and_intersection(self):
        union = ComplexUnion(left=Skeleton(k=0), right=Induced(vertices=frozenset({0, 1})))
        assert union.contains((0, 1)) is True
        assert union.contains((2,)) is True
        assert union.contains((1, 2)) is False

        meet = ComplexIntersection(left=Skeleton(k=1), right=Induced(vertices=frozenset({0, 1, 2})))
        assert meet.contains((0, 2)) is True
        assert meet.contains((0, 1, 2)) is False

    def test_contains_face_normalizes(self):
        assert contains_face(Skeleton(k=1), [3, 1, 3], n_vertices=4) is True

    def test_contains_face_errors(self):
        with pytest.raises(TverbergInputError, match="nonempty"):
            contains_face(Skeleton(k=1), [])
        with pytest.raises(TverbergInputError, match="out of range"):
            contains_face(Skeleton(k=1), [0, 4], n_vertices=4)

    def test_non_uniform_complex(self):
        sigma = non_uniform_complex(N=5, r=2, k=1, s=1)
        assert sigma.contains((5,)) is True
        assert sigma.contains((0, 4)) is True
        assert sigma.contains((0, 5)) is False
        assert sigma.contains((0, 1, 2)) is False

    def test_rainbow_split(self):
        sigma = rainbow_split([[0, 1], [2, 3]])
        assert sigma.contains((0, 2, 4)) is True
        assert sigma.contains((0, 1)) is False

    def test_intersection_of_nothing_is_full(self):
        assert intersection_of([]) == FullSimplex()

    @given(sigma=_complexes())
    @hypothesis_settings(max_examples=1000, deadline=None)
    def test_downward_closed(self, sigma):
        """Every facet of a member face is a member"""
        for face in ALL_FACES:
            if len(face) < 2 or not sigma.contains(face, COLOR_OF):
                continue
            for vertex in face:
                facet = tuple(v for v in face if v != vertex)
                assert sigma.contains(facet, COLOR_OF)


class TestDSL:
    """Test the subcomplex expression language"""

    @pytest.mark.parametrize("text,expected", [
        ("full", FullSimplex()),
        ("full(4)", FullSimplex(n=4)),
        ("skeleton(1)", Skeleton(k=1)),
        ("skeleton(-1)", Skeleton(k=-1)),
        ("induced(0..2,5)", Induced(vertices=frozenset({0, 1, 2, 5}))),
        ("atmost(1; 0..4)", AtMostSInS(s=1, vertices=frozenset(range(5)))),
        ("rainbow", Rainbow()),
        ("rainbow(0,1; 2..3)", Rainbow(classes=((0, 1), (2, 3)))),
    ])
    def test_parse_atoms(self, text, expected):
        assert parse_subcomplex(text) == expected

    def test_intersection_binds_tighter(self):
        sigma = parse_subcomplex("skeleton(0) | induced(0..1) & skeleton(1)")
        assert isinstance(sigma, ComplexUnion)
        assert isinstance(sigma.right, ComplexIntersection)

    def test_parentheses(self):
        sigma = parse_subcomplex("(skeleton(0) | induced(0..1)) & skeleton(1)")
        assert isinstance(sigma, ComplexIntersection)
        assert sigma.to_dsl() == "(skeleton(0) | induced(0..1)) & skeleton(1)"

    def test_whitespace_and_case_ignored(self):
        assert parse_subcomplex("  SKELETON ( 2 ) ") == Skeleton(k=2)

    @pytest.mark.parametrize("text,message", [
        ("skeleton(", "Expected an integer at position 9"),
        ("foo(1)", "Unknown subcomplex 'foo' at position 0"),
        ("induced(3..1)", "Empty vertex range at position 8"),
        ("skeleton(1) skeleton(2)", "Unexpected 'skeleton' at position 12"),
        ("rainbow(0,1; 1,2)", "Rainbow classes overlap at position 0"),
        ("induced(0) $", "Unexpected character '$' at position 11"),
        ("skeleton(-2)", "skeleton needs k >= -1 at position 9"),
        ("", "Expected a subcomplex, found end of input at position 0"),
    ])
    def test_parse_errors(self, text, message):
        with pytest.raises(DSLParseError) as excinfo:
            parse_subcomplex(text)
        assert str(excinfo.value) == message

    def test_parse_error_position(self):
        with pytest.raises(DSLParseError) as excinfo:
            parse_subcomplex("skeleton(1) & ")
        assert excinfo.value.position == 14

    def test_parse_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_subcomplex("skeleton(x)")

    def test_rendering(self):
        assert Induced(vertices=frozenset({0, 1, 2, 5, 7, 8})).to_dsl() == "induced(0..2,5,7..8)"
        assert non_uniform_complex(5, 2, 1, 1).to_dsl() == "skeleton(0) | induced(0..4) & skeleton(1)"

    @given(sigma=_complexes(nonempty=True))
    @hypothesis_settings(max_examples=300, deadline=None)
    def test_round_trip_preserves_membership(self, sigma):
        """Parsing the rendered text gives the same complex"""
        text = sigma.to_dsl()
        parsed = parse_subcomplex(text)
        assert parsed.to_dsl() == text
        for face in ALL_FACES:
            assert parsed.contains(face, COLOR_OF) == sigma.contains(face, COLOR_OF)

from fractions import Fraction

import pytest

from prehomog import liealg
from prehomog.errors import (ClosureError, ContextError,
                             DegenerateCharacterError, DegenerateDualError,
                             DomainError, NotInvariantError)
from prehomog.fixtures import get_fixture
from prehomog.liealg import (CharacterData, GeneratorSet, annihilator_basis,
                             character, character_of_combination, classify,
                             discriminant, dual_character_check,
                             dual_generators, infinitesimal_apply, is_special,
                             matrix_columns_determinant, validate_algebra)
from prehomog.polyring import MultiPoly


def diag_gens(n):
    return GeneratorSet(
        [[[1 if (i == k and j == k) else 0 for j in range(n)] for i in range(n)]
         for k in range(n)])


class TestGeneratorSet:
    def test_count_must_match_dimension(self):
        with pytest.raises(ContextError):
            GeneratorSet([[[1, 0], [0, 1]]])  # one 2x2 generator

    def test_shape_validated(self):
        with pytest.raises(ContextError):
            GeneratorSet([[[1, 0]], [[0, 1]]])

    def test_independence_required(self):
        with pytest.raises(DomainError):
            GeneratorSet([[[1, 0], [0, 1]], [[2, 0], [0, 2]]])

    def test_variable_count(self):
        with pytest.raises(ContextError):
            GeneratorSet([[[1]]], variables=("x", "y"))

    def test_default_variables(self):
        g = diag_gens(3)
        assert g.variables == ("x1", "x2", "x3")

    def test_matrix_returns_copy(self):
        g = diag_gens(2)
        m = g.matrix(0)
        m[0][0] = 99
        assert g.matrix(0)[0][0] == 1

    def test_immutable(self):
        g = diag_gens(2)
        with pytest.raises(AttributeError):
            g.n = 5


class TestStructure:
    def test_diagonal_algebra_closed(self):
        rep = validate_algebra(diag_gens(3))
        assert rep.closed
        assert rep.failing_pair is None
        # abelian: all structure constants vanish
        assert all(all(v == 0 for v in cs)
                   for row in rep.structure_constants for cs in row)

    def test_open_bracket_detected(self):
        g = GeneratorSet([[[0, 1], [0, 0]], [[0, 0], [1, 0]]])
        rep = validate_algebra(g)
        assert not rep.closed
        assert rep.failing_pair == (0, 1)

    def test_binary_cubic_closed(self):
        rep = validate_algebra(get_fixture("binary-cubic").generators())
        assert rep.closed


class TestInfinitesimalAction:
    def test_single_field(self):
        p = MultiPoly(("x", "y"), {(1, 1): 1})  # xy
        a = [[1, 0], [0, 0]]  # x d/dx
        assert infinitesimal_apply(a, p) == p

    def test_shear(self):
        x, y = MultiPoly.gens(("x", "y"))
        a = [[0, 1], [0, 0]]  # field y d/dx
        assert infinitesimal_apply(a, x * x) == 2 * x * y

    def test_linearity(self):
        x, y = MultiPoly.gens(("x", "y"))
        p = x ** 2 * y + 3 * y
        a = [[1, 2], [0, 1]]
        b = [[0, 0], [5, 0]]
        lhs = infinitesimal_apply([[1, 2], [5, 1]], p)
        assert lhs == infinitesimal_apply(a, p) + infinitesimal_apply(b, p)

    def test_size_mismatch(self):
        with pytest.raises(ContextError):
            infinitesimal_apply([[1]], MultiPoly.gens(("x", "y"))[0])


class TestDiscriminant:
    def test_normal_crossings(self):
        g = diag_gens(3)
        f = discriminant(g)
        assert f == MultiPoly(g.variables, {(1, 1, 1): 1})

    def test_binary_cubic_matches_catalogue(self):
        g = get_fixture("binary-cubic").generators()
        f = discriminant(g)
        table = MultiPoly(g.variables, {
            (0, 2, 2, 0): 1, (1, 0, 3, 0): -4, (0, 3, 0, 1): -4,
            (1, 1, 1, 1): 18, (2, 0, 0, 2): -27})
        assert f == table * -3

    def test_degenerate_columns_give_zero(self):
        e11 = [[1, 0], [0, 0]]
        e12 = [[0, 1], [0, 0]]
        # both image columns lie on the first axis, so the det vanishes
        f = matrix_columns_determinant([e11, e12], ("x", "y"))
        assert f.is_zero
        f2 = matrix_columns_determinant([e11, [[2, 0], [0, 0]]], ("x", "y"))
        assert f2.is_zero

    def test_degree_equals_dimension(self):
        for name in ("binary-cubic", "det22-squared", "star-2111"):
            g = get_fixture(name).generators()
            f = discriminant(g)
            assert f.is_homogeneous()
            assert f.degree() == g.n


class TestCharacter:
    def test_star_values(self):
        g = get_fixture("star-2111").generators()
        c = character(g, discriminant(g))
        assert c.values == (3, 0, 0, 3, -2, -2)
        assert c.trace_values == (3, 0, 0, 3, -2, -2)
        assert is_special(c)

    def test_not_invariant_detected(self):
        g = diag_gens(2)
        x, y = MultiPoly.gens(g.variables)
        with pytest.raises(NotInvariantError):
            character(g, x + y)

    def test_combination_linearity(self):
        c = CharacterData([1, 2, 3], [1, 1, 1])
        assert character_of_combination(c, [1, 1, 1]) == 6
        assert character_of_combination(c, [Fraction(1, 2), 0, 0]) == Fraction(1, 2)

    def test_zero_discriminant_rejected(self):
        g = diag_gens(2)
        with pytest.raises(DomainError):
            character(g, MultiPoly.zero(g.variables))

    def test_nonspecial_fixture(self):
        g = get_fixture("quadric-cone-3").generators()
        c = character(g, discriminant(g))
        assert c.values == (3, 2, 0)
        assert c.trace_values == (3, 3, 0)
        assert not is_special(c)


class TestAnnihilator:
    def test_diagonal(self):
        g = diag_gens(3)
        c = character(g, discriminant(g))
        assert c.values == (1, 1, 1)
        basis = annihilator_basis(g, c)
        assert len(basis) == 2
        for B in basis:
            d = infinitesimal_apply(B, discriminant(g))
            assert d.is_zero

    def test_degenerate_character(self):
        g = diag_gens(2)
        c = CharacterData([0, 0], [1, 1])
        with pytest.raises(DegenerateCharacterError):
            annihilator_basis(g, c)


class TestDual:
    def test_dual_generators(self):
        g = diag_gens(2)
        d = dual_generators(g)
        assert d.variables == ("x1*", "x2*")
        assert d.matrix(0) == [[-1, 0], [0, 0]]

    def test_difference_formula_on_fixtures(self):
        for name in ("nc-3", "binary-cubic", "star-2111", "quadric-cone-3"):
            assert dual_character_check(get_fixture(name).generators())

    def test_degenerate_dual(self):
        # triangular pair: f = x^2 but the dual determinant vanishes
        g = GeneratorSet([[[1, 0], [0, 0]], [[0, 0], [1, 0]]])
        assert discriminant(g) == MultiPoly(g.variables, {(2, 0): 1})
        assert discriminant(dual_generators(g)).is_zero
        with pytest.raises(DegenerateDualError):
            dual_character_check(g)


class TestClassify:
    def test_star_is_linear_free_divisor(self):
        cls = classify(get_fixture("star-2111").generators())
        assert cls.kind == "linear-free-divisor"
        assert cls.reduced and cls.special and cls.closed_under_bracket

    def test_det_squared_not_reduced(self):
        cls = classify(get_fixture("det22-squared").generators())
        assert cls.kind == "prehomogeneous-determinant"
        assert not cls.reduced
        assert cls.special

    def test_closure_failure_raises(self):
        g = GeneratorSet([[[0, 1], [0, 0]], [[0, 0], [1, 0]]])
        with pytest.raises(ClosureError):
            classify(g)

    def test_not_prehomogeneous(self):
        # both image columns live in the first coordinate axis
        g = GeneratorSet([[[1, 0], [0, 0]], [[0, 1], [0, 0]]])
        cls = classify(g)
        assert cls.kind == "not-prehomogeneous"
        assert cls.discriminant.is_zero

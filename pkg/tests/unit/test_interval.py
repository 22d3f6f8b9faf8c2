"""
Unit tests for the interval algebra.
Normal forms are compared against evaluation in the four-element De Morgan algebra.
"""
from hypothesis import given

from app.kernel.interval import (
    I0,
    I1,
    Endpoint,
    iv_const,
    iv_eq,
    iv_is_end,
    iv_join,
    iv_meet,
    iv_name,
    iv_rev,
    iv_subst,
)
from app.kernel.names import Name
from tests.oracle import dm4
from tests.strategies import intervals

i, j = Name("i"), Name("j")


class TestIntervalConstants:
    """Test the endpoints and their recognition."""

    def test_constants(self):
        """Test that iv_const maps bits to the endpoints."""
        assert iv_const(0) == I0
        assert iv_const(1) == I1

    def test_is_end(self):
        """Test endpoint classification of constants and names."""
        assert iv_is_end(I0) is Endpoint.IS0
        assert iv_is_end(I1) is Endpoint.IS1
        assert iv_is_end(iv_name(i)) is Endpoint.NEITHER

    def test_meet_with_reverse_is_not_zero(self):
        """Test that i /\\ ~i stays a proper element, as in any De Morgan algebra."""
        r = iv_meet(iv_name(i), iv_rev(iv_name(i)))
        assert iv_is_end(r) is Endpoint.NEITHER
        assert not iv_eq(r, I0)

    def test_reverse_of_constants(self):
        """Test that ~0 = 1 and ~1 = 0."""
        assert iv_rev(I0) == I1
        assert iv_rev(I1) == I0

    def test_de_morgan_example(self):
        """Test ~(i \\/ j) = ~i /\\ ~j."""
        lhs = iv_rev(iv_join(iv_name(i), iv_name(j)))
        rhs = iv_meet(iv_rev(iv_name(i)), iv_rev(iv_name(j)))
        assert iv_eq(lhs, rhs)

    def test_substitution_of_name(self):
        """Test that substituting 0 for i in i \\/ j gives j."""
        r = iv_join(iv_name(i), iv_name(j))
        assert iv_eq(iv_subst(r, {i: I0}), iv_name(j))
        assert iv_eq(iv_subst(r, {i: I1}), I1)

    def test_str(self):
        """Test that interval elements print in surface syntax."""
        assert str(I0) == "0"
        assert str(I1) == "1"
        assert str(iv_name(i)) == "i"


class TestIntervalLaws:
    """Test the lattice and De Morgan laws on generated elements."""

    @given(intervals(), intervals(), intervals())
    def test_lattice_laws(self, a, b, c):
        """Test associativity, commutativity, absorption and distributivity."""
        assert iv_eq(iv_join(a, iv_join(b, c)), iv_join(iv_join(a, b), c))
        assert iv_eq(iv_meet(a, iv_meet(b, c)), iv_meet(iv_meet(a, b), c))
        assert iv_eq(iv_join(a, b), iv_join(b, a))
        assert iv_eq(iv_meet(a, b), iv_meet(b, a))
        assert iv_eq(iv_join(a, iv_meet(a, b)), a)
        assert iv_eq(iv_meet(a, iv_join(a, b)), a)
        assert iv_eq(iv_meet(a, iv_join(b, c)), iv_join(iv_meet(a, b), iv_meet(a, c)))

    @given(intervals(), intervals())
    def test_de_morgan_laws(self, a, b):
        """Test involution and the two De Morgan laws."""
        assert iv_eq(iv_rev(iv_rev(a)), a)
        assert iv_eq(iv_rev(iv_join(a, b)), iv_meet(iv_rev(a), iv_rev(b)))
        assert iv_eq(iv_rev(iv_meet(a, b)), iv_join(iv_rev(a), iv_rev(b)))

    @given(intervals())
    def test_bounds(self, a):
        """Test that 0 and 1 are the bounds."""
        assert iv_eq(iv_join(a, I0), a)
        assert iv_eq(iv_meet(a, I1), a)
        assert iv_eq(iv_join(a, I1), I1)
        assert iv_eq(iv_meet(a, I0), I0)

    @given(intervals(), intervals())
    def test_equality_agrees_with_dm4(self, a, b):
        """Test that normal-form equality is equality in every DM4 valuation."""
        assert iv_eq(a, b) == dm4.equal(a, b)

    @given(intervals(), intervals())
    def test_operations_agree_with_dm4(self, a, b):
        """Test that each operation commutes with DM4 evaluation."""
        for env in dm4.assignments(a.names | b.names):
            assert dm4.evaluate(iv_join(a, b), env) == dm4.join(dm4.evaluate(a, env), dm4.evaluate(b, env))
            assert dm4.evaluate(iv_meet(a, b), env) == dm4.meet(dm4.evaluate(a, env), dm4.evaluate(b, env))
            assert dm4.evaluate(iv_rev(a), env) == dm4.rev(dm4.evaluate(a, env))

    @given(intervals(), intervals())
    def test_substitution_agrees_with_dm4(self, a, b):
        """Test that substituting b for i evaluates like assigning b's value to i."""
        substituted = iv_subst(a, {i: b})
        for env in dm4.assignments(a.names | b.names | {i}):
            expected = dm4.evaluate(a, {**env, i: dm4.evaluate(b, env)})
            assert dm4.evaluate(substituted, env) == expected

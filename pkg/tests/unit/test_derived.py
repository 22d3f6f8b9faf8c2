"""
Unit tests for the derived constructions the reduction rules unfold into.
"""
from app.kernel.checker import Checker, Ctx
from app.kernel.derived import equiv_type, fill, id_equiv, is_contr, pred_term, transp
from app.kernel.evaluator import eval_nat
from app.kernel.faces import face_atom
from app.kernel.interval import I0, I1
from app.kernel.names import Name, NameCtx
from app.kernel.substitution import subst_name
from app.kernel.syntax import App, Branch, Comp, Nat, Pair, Sigma, Universe, numeral

i, k = Name("i"), Name("k")
CTX_I = NameCtx((i,))


class TestPredecessor:
    """Test the predecessor function used by composition at N."""

    def test_pred_of_successor(self):
        """Test pred 3 = 2."""
        assert eval_nat(NameCtx(), App(pred_term(), numeral(3))) == 2

    def test_pred_of_zero(self):
        """Test pred 0 = 0."""
        assert eval_nat(NameCtx(), App(pred_term(), numeral(0))) == 0

    def test_fresh_binders(self):
        """Test that each call builds new binder names."""
        assert pred_term().var != pred_term().var


class TestFill:
    """Test the filler of a composition problem."""

    def test_fill_is_a_comp(self):
        """Test that fill adds the (i=0) constraint on the base."""
        t = fill(k, Nat(), (Branch(face_atom(i, 0), numeral(2)),), numeral(2))
        assert isinstance(t, Comp)
        assert face_atom(k, 0) in [b.face for b in t.branches]

    def test_fill_at_zero_is_base(self):
        """Test that the filler at k=0 evaluates to the base."""
        t = fill(k, Nat(), (Branch(face_atom(i, 0), numeral(2)),), numeral(2))
        assert eval_nat(CTX_I, subst_name(t, k, I0)) == 2

    def test_fill_at_one_is_comp(self):
        """Test that the filler at k=1 agrees with the composition."""
        bs = (Branch(face_atom(i, 1), numeral(3)),)
        assert eval_nat(CTX_I, subst_name(fill(k, Nat(), bs, numeral(3)), k, I1)) == 3

    def test_transport_at_nat(self):
        """Test that transport along a constant N line is the identity."""
        assert eval_nat(NameCtx(), transp(k, Nat(), numeral(4))) == 4


class TestEquivalences:
    """Test that the equivalence encoding type checks."""

    def test_equiv_type_is_a_type(self):
        """Test Equiv N N : U."""
        Checker().check(Ctx(), equiv_type(Nat(), Nat()), Universe())

    def test_is_contr_shape(self):
        """Test that isContr is a Sigma over the type."""
        t = is_contr(Nat())
        assert isinstance(t, Sigma)
        assert t.dom == Nat()

    def test_id_equiv_checks(self):
        """Test idEquiv N : Equiv N N."""
        Checker().check(Ctx(), id_equiv(Nat()), equiv_type(Nat(), Nat()))

    def test_id_equiv_forward_map(self):
        """Test that the forward map of idEquiv is the identity."""
        e = id_equiv(Nat())
        assert isinstance(e, Pair)
        assert eval_nat(NameCtx(), App(e.left, numeral(5))) == 5

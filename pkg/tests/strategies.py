"""Hypothesis strategies for interval elements, faces, name substitutions and terms."""
from hypothesis import strategies as st

from app.kernel.faces import F0, F1, face_atom, face_join, face_meet
from app.kernel.interval import I0, I1, iv_join, iv_meet, iv_name, iv_rev
from app.kernel.names import Name, NameCtx
from app.kernel.substitution import NameSubst
from app.kernel.syntax import (
    App,
    Base,
    Branch,
    Comp,
    Fst,
    Fwd,
    Hcomp,
    Inc,
    InhElim,
    Lam,
    Loop,
    Nat,
    Natrec,
    PAbs,
    PApp,
    Pair,
    S1Elim,
    Snd,
    Squash,
    Suc,
    SystemE,
    Var,
    numeral,
)

I, J, K = Name("i"), Name("j"), Name("k")
CTX = NameCtx((I, J))
NAMES = (I, J, K)

X, Y, P, R, A, Z = (Name(n) for n in ("x", "y", "p", "r", "a", "z"))


def intervals(names=NAMES, max_leaves: int = 8):
    leaves = st.sampled_from([I0, I1]) | st.sampled_from(names).map(iv_name)
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.builds(iv_join, sub, sub),
            st.builds(iv_meet, sub, sub),
            st.builds(iv_rev, sub),
        ),
        max_leaves=max_leaves,
    )


def faces(names=NAMES, max_leaves: int = 8):
    atoms = st.builds(face_atom, st.sampled_from(names), st.sampled_from([0, 1]))
    return st.recursive(
        st.sampled_from([F0, F1]) | atoms,
        lambda sub: st.one_of(st.builds(face_join, sub, sub), st.builds(face_meet, sub, sub)),
        max_leaves=max_leaves,
    )


@st.composite
def name_substs(draw, domain: NameCtx = CTX, max_names: int = 2):
    """f : J -> domain with J a fresh context of up to max_names names."""
    codomain = NameCtx(tuple(Name(f"k{n}") for n in range(draw(st.integers(0, max_names)))))
    points = intervals(codomain.names, max_leaves=4) if codomain.names else st.sampled_from([I0, I1])
    images = {n: draw(points) for n in domain}
    return NameSubst(domain, codomain, images)



_succ = Lam(P, Nat(), Lam(R, Nat(), Suc(Var(R))))
_inc_case = Lam(A, Nat(), Var(A))


def _nat_extend(sub, points, face_st, squash: bool):
    forms = [
        st.builds(Suc, sub),
        st.builds(lambda c: App(Lam(X, Nat(), Suc(Var(X))), c), sub),
        st.builds(lambda u, v: Fst(Pair(u, v)), sub, sub),
        st.builds(lambda u, v: Snd(Pair(u, v)), sub, sub),
        st.builds(lambda c, r: PApp(PAbs(K, c), r), sub, points),
        st.builds(lambda phi, u: SystemE((Branch(phi, u), Branch(F1, u))), face_st, sub),
        st.builds(lambda n, z: Natrec(X, Nat(), n, z, _succ), sub, sub),
        st.builds(lambda phi, u: Comp(K, Nat(), (Branch(phi, u),), u), face_st, sub),
        st.builds(lambda r, b: S1Elim(X, Nat(), Loop(r), b, PAbs(K, b)), points, sub),
        st.builds(lambda u, r: InhElim(Z, Nat(), Fwd(K, Nat(), r, Inc(u)), _inc_case, Var(Y)), sub, points),
        st.builds(
            lambda phi, u: InhElim(Z, Nat(), Hcomp(Nat(), K, (Branch(phi, Inc(u)),), Inc(u)), _inc_case, Var(Y)),
            face_st,
            sub,
        ),
    ]
    if squash:
        # the squash case is a free variable: these terms get stuck once it is needed
        forms.append(
            st.builds(
                lambda u, v, r: InhElim(Z, Nat(), Squash(Inc(u), Inc(v), r), _inc_case, Var(Y)), sub, sub, points
            )
        )
    return st.one_of(*forms)


def nat_terms(max_leaves: int = 6):
    """Well-formed terms of N-shape over the names i, j; some contain the free variable v."""
    leaves = st.integers(0, 3).map(numeral) | st.just(Var(Name("v")))
    points = intervals((I, J), max_leaves=3)
    face_st = faces((I, J), max_leaves=3)
    return st.recursive(leaves, lambda sub: _nat_extend(sub, points, face_st, True), max_leaves=max_leaves)


def closed_nat_terms(max_leaves: int = 6):
    leaves = st.integers(0, 3).map(numeral)
    points = intervals((I, J), max_leaves=3)
    face_st = faces((I, J), max_leaves=3)
    return st.recursive(leaves, lambda sub: _nat_extend(sub, points, face_st, False), max_leaves=max_leaves)


def any_terms(max_leaves: int = 6):
    """nat_terms plus introduced circle and truncation forms."""
    points = intervals((I, J), max_leaves=3)
    return st.one_of(
        nat_terms(max_leaves),
        st.builds(Loop, points),
        st.just(Base()),
        st.builds(lambda r: Squash(Inc(numeral(0)), Inc(numeral(1)), r), points),
    )

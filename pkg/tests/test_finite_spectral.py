import pytest
from hypothesis import given, settings, strategies as hst

from zrspace import finite_spectral as fs
from zrspace.errors import DomainError, InvalidPosetError, InvalidSubsetError

CHAIN = fs.FinitePoset.chain(["a", "b"])
VEE = fs.FinitePoset(["a", "b", "c"], [("a", "b"), ("a", "c")])


def S(*xs):
    return frozenset(xs)


def test_sp_closure_examples():
    assert fs.sp_closure(CHAIN, {"a"}) == S("a", "b")
    assert fs.sp_closure(CHAIN, set()) == S()
    assert fs.sp_closure(VEE, {"b"}) == S("b")


def test_gen_closure_examples():
    assert fs.gen_closure(CHAIN, {"b"}) == S("a", "b")
    assert fs.gen_closure(CHAIN, set()) == S()
    assert fs.gen_closure(VEE, {"b", "c"}) == S("a", "b", "c")


def test_three_closures():
    assert fs.cl_zar(CHAIN, {"a"}) == S("a", "b")
    assert fs.cl_inv(CHAIN, {"a"}) == S("a")
    assert fs.cl_cons(CHAIN, {"a"}) == S("a")
    assert fs.cl_inv(VEE, {"a"}) == S("a")
    assert fs.cl_zar(VEE, {"a"}) == S("a", "b", "c")
    full = set(VEE.elements)
    for op in (fs.cl_zar, fs.cl_inv, fs.cl_cons):
        assert op(VEE, full) == frozenset(full)


def test_dual():
    D = fs.dual(CHAIN)
    assert D.le("b", "a") and not D.le("a", "b")
    anti = fs.FinitePoset.antichain(["x", "y", "z"])
    assert fs.dual(anti) == anti


def test_principal_limit():
    assert fs.principal_limit(CHAIN, {"a"}, "a") == "a"
    with pytest.raises(InvalidSubsetError):
        fs.principal_limit(CHAIN, {"a"}, "b")


def test_invalid_inputs():
    with pytest.raises(InvalidSubsetError):
        fs.sp_closure(CHAIN, {"z"})
    with pytest.raises(InvalidPosetError):
        fs.FinitePoset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(InvalidPosetError):
        fs.FinitePoset(["a"], [("a", "q")])
    with pytest.raises(InvalidPosetError):
        fs.FinitePoset.from_json({"leq": []})


def test_transitive_closure_is_computed():
    P = fs.FinitePoset.from_json({"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]})
    assert P.le("a", "c")
    assert fs.FinitePoset.from_json(P.to_json()) == P


def test_spec_zn():
    R, P = fs.spec_zn(12)
    assert R.primes == (2, 3) and set(P.elements) == {"2", "3"} and len(P.leq) == 2
    assert fs.spec_zn(7)[0].primes == (7,)
    assert fs.spec_zn(30)[0].primes == (2, 3, 5)
    with pytest.raises(DomainError):
        fs.spec_zn(1)


def _brute_prime(n, Y, y):
    # independent scan: a is in P_U iff y divides a mod n
    ideal = [a for a in range(n) if y in {q for q in Y if a % q == 0}]
    for q in sorted(Y | {y}):
        if ideal == list(range(0, n, q)):
            return q
    return None


def test_ultrafilter_prime_examples():
    R, _ = fs.spec_zn(12)
    assert fs.ultrafilter_prime(R, {2, 3}, 3) == 3
    assert fs.ultrafilter_prime(R, {2}, 2) == 2
    R7, _ = fs.spec_zn(7)
    assert fs.ultrafilter_prime(R7, {7}, 7) == 7
    with pytest.raises(DomainError):
        fs.ultrafilter_prime(R, {2}, 3)
    with pytest.raises(DomainError):
        fs.ultrafilter_prime(R, {5}, 5)


@pytest.mark.parametrize("n", [6, 30, 210, 360, 1001])
def test_ultrafilter_prime_matches_pure_scan(n):
    R, _ = fs.spec_zn(n)
    for y in R.primes:
        assert fs.ultrafilter_prime(R, set(R.primes), y) == _brute_prime(n, set(R.primes), y) == y


def test_poset_counts():
    # number of unlabelled posets on n points
    assert [len(fs.posets_up_to_isomorphism(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]


@hst.composite
def posets(draw, max_size=7):
    n = draw(hst.integers(1, max_size))
    labels = [str(i) for i in range(n)]
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if draw(hst.booleans())]
    return fs.FinitePoset(labels, pairs)


@given(posets(), hst.data())
@settings(max_examples=150, deadline=None)
def test_closure_operator_laws(P, data):
    Y = data.draw(hst.sets(hst.sampled_from(P.elements)))
    for op in (fs.cl_zar, fs.cl_inv, fs.cl_cons):
        C = op(P, Y)
        assert frozenset(Y) <= C
        assert op(P, C) == C
    assert fs.cl_zar(P, Y) == fs.sp_closure(P, fs.cl_cons(P, Y))
    assert fs.cl_inv(P, Y) == fs.gen_closure(P, fs.cl_cons(P, Y))


@given(posets())
@settings(max_examples=100, deadline=None)
def test_dual_is_involution_and_swaps_closures(P):
    D = fs.dual(P)
    assert fs.dual(D) == P
    for x in P.elements:
        assert fs.sp_closure(D, {x}) == fs.gen_closure(P, {x})

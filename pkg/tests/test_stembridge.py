import pytest

from spinblocks.abacus import block_enum, core_weight, ell
from spinblocks.chars import CharSpace, CharVector
from spinblocks.exceptions import DomainError, ShapeError
from spinblocks.partitions import STRICT, enumerate_partitions
from spinblocks.rouquier import generate, rho_extension
from spinblocks.sqrt2 import Sqrt2Scalar
from spinblocks.stembridge import (
    enumerate_tableaux,
    f_coeff,
    induce,
    rock_branch,
    rock_branch_refined,
    satisfies_lattice,
    skew_boxes,
)


def project_to_block(v, rho, p, d):
    space = CharSpace.block(rho, p, d)
    out = {}
    for lam, c in v.coeffs:
        if core_weight(lam, p) == (rho, d):
            out[lam] = c
    return CharVector.make(space, out)


def test_f_coeff_examples():
    assert f_coeff((6, 2), (2, 1), (5,)) == 1
    assert f_coeff((6, 2), (2, 1), (3, 2)) == 0
    assert f_coeff((6, 2), (2, 1), (4, 1)) == 1


def test_f_coeff_straight_shapes_are_delta():
    # with an empty inner shape only the content shape itself survives
    for n in range(1, 8):
        for lam in enumerate_partitions(n, STRICT):
            for nu in enumerate_partitions(n, STRICT):
                assert f_coeff(lam, (), nu) == (1 if lam == nu else 0)


def test_f_coeff_shape_errors():
    with pytest.raises(ShapeError):
        f_coeff((3, 1), (2, 1), (5,))  # size mismatch
    with pytest.raises(ShapeError):
        f_coeff((5, 2), (3, 2, 1), (1,))  # mu not inside lam


def test_word_reads_bottom_up():
    boxes = skew_boxes((3, 1), (1,))
    tabs = list(enumerate_tableaux(boxes, (2, 1)))
    for tab in tabs:
        w = tab.word()
        assert len(w) == 3
        # first letter of the word comes from the bottom row (row 2)
        by_box = dict(zip(tab.boxes, tab.entries))
        assert w[0] == by_box[(2, 2)]


def test_lattice_property_small_words():
    # trailing letter of the word must be a 1 (or 1'); a bare "2" start fails
    assert satisfies_lattice(((1, False),))
    assert not satisfies_lattice(((2, False),))
    assert satisfies_lattice(((1, False), (1, False)))
    assert not satisfies_lattice(((1, False), (2, False)))
    # two-letter words have content (1,1), and the return scan kills them
    assert not satisfies_lattice(((2, False), (1, False)))
    # the unique hook-strip filling for content (4,1): 2 / 1' 1 1 1
    assert satisfies_lattice(
        ((2, False), (1, True), (1, False), (1, False), (1, False))
    )


def test_induce_examples():
    v = induce((2, 1), (5,))
    assert v.as_dict() == {
        (5, 2, 1): Sqrt2Scalar(1, 0),
        (6, 2): Sqrt2Scalar(2, 0),
        (7, 1): Sqrt2Scalar(2, 0),
    }
    v = induce((), (4, 1))
    assert v.as_dict() == {(4, 1): Sqrt2Scalar(1, 0)}
    v = induce((2, 1), (3, 2))
    assert v.coefficient((5, 2, 1)) == 1
    assert all(len(set(lam)) == len(lam) for lam in v.support())


def test_rock_branch_induce_examples():
    v = rock_branch((2, 1), 5, 0, "induce")
    assert v.as_dict() == {
        (5, 2, 1): Sqrt2Scalar(1, 0),
        (6, 2): Sqrt2Scalar(2, 0),
        (7, 1): Sqrt2Scalar(2, 0),
    }
    v = rock_branch((2, 1), 5, 2, "induce")
    assert v.as_dict() == {(5, 2, 1): Sqrt2Scalar(1, 0)}


def test_rock_branch_restrict_example():
    v = rock_branch((5, 2, 1), 5, direction="restrict")
    mu = (2, 1)
    assert v.as_dict() == {
        (mu, 0): Sqrt2Scalar(1, 0),
        (mu, 1): Sqrt2Scalar(2, 0),
        (mu, 2): Sqrt2Scalar(2, 0),
    }


def test_rock_branch_outside_block():
    with pytest.raises(DomainError):
        rock_branch((), 5, 0, "induce")  # empty core is not Rouquier
    with pytest.raises(DomainError):
        rock_branch((2, 1), 5, direction="restrict")  # weight 0


@pytest.mark.parametrize("p", [3, 5])
def test_cross_oracle_full_support(p):
    """Project-then-compare on the whole expansion for the smaller primes."""
    L = ell(p)
    for parity in ("even", "odd"):
        rho = generate(p, 1, parity, 1)[0]
        for j in range(L + 1):
            nu = (p - j, j) if j else (p,)
            lhs = project_to_block(induce(rho, nu), rho, p, 1)
            rhs = rock_branch(rho, p, j, "induce")
            assert lhs.as_dict() == rhs.as_dict(), (p, parity, j)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_cross_oracle_tableaux_vs_abacus(p):
    """Tableau enumeration and the abacus closed form agree on blocks."""
    L = ell(p)
    for parity in ("even", "odd"):
        for d in (1, 2):
            rho = generate(p, d, parity, 1)[0]
            block = block_enum(rho, p, d)
            space = CharSpace.block(rho, p, d)
            for mu in block_enum(rho, p, d - 1):
                for j in range(L + 1):
                    nu = (p - j, j) if j else (p,)
                    lhs = CharVector.make(
                        space, induce(mu, nu, support=block).as_dict()
                    )
                    rhs = rock_branch(mu, p, j, "induce")
                    assert lhs.as_dict() == rhs.as_dict(), (p, parity, d, mu, j)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_hook_strip_law(p):
    L = ell(p)
    for parity in ("even", "odd"):
        rho = generate(p, 1, parity, 1)[0]
        for i in range(L + 1):
            lam = rho_extension(rho, p, i)
            for j in range(L + 1):
                nu = (p - j, j) if j else (p,)
                assert f_coeff(lam, rho, nu) == (1 if i + j <= L else 0)


def test_refined_branching_convention():
    plus = rock_branch_refined((2, 1), 5, 0, +1)
    minus = rock_branch_refined((2, 1), 5, 0, -1)
    exceptional = (5, 2, 1)
    assert plus.coefficient((exceptional, 1)) == 1
    assert plus.coefficient((exceptional, -1)) == 0
    assert minus.coefficient((exceptional, -1)) == 1
    assert plus.coefficient(((6, 2), 0)) == 1
    # the two halves sum back to the equal-split refinement
    total = plus + minus
    assert total.as_dict() == rock_branch((2, 1), 5, 0, "induce").refine().as_dict()


def test_refined_branching_sign_argument():
    with pytest.raises(ValueError):
        rock_branch_refined((2, 1), 5, 0, 0)  # odd label needs a sign
    with pytest.raises(ValueError):
        rock_branch_refined((2, 1), 5, 1, +1)  # even label has no sign
    even = rock_branch_refined((2, 1), 5, 1, 0)
    assert even.as_dict() == rock_branch((2, 1), 5, 1, "induce").refine().as_dict()

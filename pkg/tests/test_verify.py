import json

import pytest

from spinblocks.abacus import ell
from spinblocks.chars import CharSpace, CharVector
from spinblocks.exceptions import DomainError, SpaceMismatch
from spinblocks.rouquier import generate
from spinblocks.sqrt2 import Sqrt2Scalar
from spinblocks.verify import (
    check_htoj,
    htoj_sides,
    hyp_coeffs,
    nmv_basis,
    phi,
    run_check,
)


def refined_unit(space, label, sign):
    return CharVector.make(space, {(label, sign): 1}, basis="refined")


def test_phi_examples():
    space = CharSpace.l_space((2, 1), 5, 1)
    assert phi(refined_unit(space, (0,), 1)) == 1
    assert phi(CharVector.unit(space, (1,))) == -2
    assert phi(CharVector.unit(space, (2,))) == 2


def test_phi_space_guard():
    H = CharSpace.h_space((2, 1), 5, 1)
    with pytest.raises(SpaceMismatch):
        phi(CharVector.unit(H, ((2, 1), 0)))


def test_nmv_generators_weight_one_example():
    space = CharSpace.l_space((2, 1), 5, 1)
    lattice = nmv_basis(space)
    got = {g.coeffs for g in lattice.generators}
    one = Sqrt2Scalar(1, 0)
    expected = {
        CharVector.make(
            space, {((0,), 1): one, ((0,), -1): one, ((1,), 0): one}, "refined"
        ).coeffs,
        CharVector.make(space, {((1,), 0): one, ((2,), 0): one}, "refined").coeffs,
    }
    assert got == expected


def test_nmv_generator_families_h_space():
    # mu even: the 0-1 edge splits into two sign choices
    rho = generate(5, 1, "even", 1)[0]
    space = CharSpace.h_space(rho, 5, 1)
    lattice = nmv_basis(space)
    signatures = sorted(
        tuple(sorted((label[1], c.a) for label, c in g.coeffs))
        for g in lattice.generators
    )
    # edges: (0,1) twice signed, (1,2) twice signed matched
    assert len(lattice.generators) == 4


@pytest.mark.parametrize("p,d", [(5, 1), (5, 2), (3, 2), (7, 1)])
def test_phi_kills_lattice(p, d):
    for parity in ("even", "odd"):
        rho = generate(p, d, parity, 1)[0]
        report = run_check("phi-kernel", rho=rho, p=p, d=d)
        assert report.passed, report.describe()


def test_htoj_worked_example():
    lhs, rhs = htoj_sides((5, 2, 1), 5)
    mu = (2, 1)
    assert lhs.as_dict() == {
        (mu, 0): Sqrt2Scalar(5, 0),
        (mu, 1): Sqrt2Scalar(6, 0),
        (mu, 2): Sqrt2Scalar(2, 0),
    }
    assert rhs.as_dict() == {(mu, 0): Sqrt2Scalar(1, 0)}
    # the difference is 4 g1 + 2 g2 in the generator basis
    space = lhs.space
    lattice = nmv_basis(space)
    diff = lhs - rhs
    g1 = CharVector.make(
        space,
        {((mu, 0), 1): 1, ((mu, 0), -1): 1, ((mu, 1), 0): 1},
        basis="refined",
    )
    g2 = CharVector.make(
        space, {((mu, 1), 0): 1, ((mu, 2), 0): 1}, basis="refined"
    )
    assert diff.refine().as_dict() == (g1.scale(4) + g2.scale(2)).as_dict()
    assert lattice.member(diff)
    assert lattice.member_oracle(diff)


def test_htoj_detects_perturbation():
    lhs, rhs = htoj_sides((5, 2, 1), 5)
    lattice = nmv_basis(lhs.space)
    diff = lhs - rhs
    # knocking one unit off a single supercharacter leaves the lattice
    bad = diff - CharVector.unit(diff.space, ((2, 1), 2))
    assert not lattice.member(bad)
    assert not lattice.member_oracle(bad)


def test_check_htoj_reports():
    report = check_htoj((5, 2, 1), 5, oracle=True)
    assert report.passed
    payload = report.to_json()
    assert payload["verdict"] == "pass"
    json.dumps(payload)  # machine readable


def test_hyp_coeffs_examples():
    v = hyp_coeffs((2, 1), 5, (1, 0, 0))
    assert v.as_dict() == {(5, 2, 1): Sqrt2Scalar(1, 0)}
    v = hyp_coeffs((2, 1), 5, (0, 1, 0))
    assert v.as_dict() == {(6, 2): Sqrt2Scalar(1, 0)}
    v = hyp_coeffs((12, 7, 6, 2, 1), 5, (0, 2, 0))
    assert v.as_dict() == {
        (12, 11, 7, 6, 2): Sqrt2Scalar(1, 0),
        (16, 12, 7, 2, 1): Sqrt2Scalar(1, 0),
    }
    v = hyp_coeffs((12, 7, 6, 2, 1), 5, (2, 0, 0))
    assert v.as_dict() == {(12, 10, 7, 6, 2, 1): Sqrt2Scalar(2, 0)}


def test_hyp_coeffs_square_sum_ties_to_factorials():
    """eps^2-weighted squares of the closed-form coefficients recover the
    reduced dimension identity: sum eps_lam^2 c_lam^2 = eps_tuple^2 * prod d_i!."""
    from math import factorial

    from spinblocks.verify import compositions

    for parity in ("even", "odd"):
        for d in (1, 2, 3):
            rho = generate(5, d, parity, 1)[0]
            for dcomp in compositions(d, 3):
                vec = hyp_coeffs(rho, 5, dcomp)
                space = vec.space
                total = 0
                for lam, c in vec.coeffs:
                    total += 2 ** space.eps_exponent(lam) * c.a * c.a
                tuple_exp = (
                    CharSpace.l_space(rho, 5, d).eps_exponent(
                        tuple(
                            j for j in range(3) for _ in range(dcomp[j])
                        )
                    )
                )
                expected = 2 ** tuple_exp
                for x in dcomp:
                    expected *= factorial(x)
                assert total == expected, (parity, d, dcomp)


def test_hyp_coeffs_domain_error():
    with pytest.raises(DomainError):
        hyp_coeffs((2, 1), 5, (0, 2, 0))  # (2,1) is not 2-Rouquier


def test_hyp_refined_symmetric_under_involution():
    for dcomp in ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 2)):
        rho = generate(5, sum(dcomp), "odd", 1)[0]
        refined = hyp_coeffs(rho, 5, dcomp).refine()
        d = refined.as_dict()
        for (label, sign), c in d.items():
            if sign:
                assert d[(label, -sign)] == c


def test_named_checks_pass():
    assert run_check("dim-sqd", n=4).passed
    assert run_check("dim-sqd", n=7).passed
    assert run_check(
        "dim-reduced", rho=(12, 7, 6, 2, 1), p=5, dcomp=(0, 2, 0)
    ).passed
    assert run_check("block-count", rho=(2, 1), p=5, d=1).passed
    assert run_check("htog-adjoint", rho=(2, 1), p=5, d=1).passed
    assert run_check("restrict-recursion", rho=(12, 7, 6, 2, 1), p=5, d=2).passed
    assert run_check("hyp-nonneg", rho=(12, 7, 6, 2, 1), p=5, d=2).passed


def test_strict_mode_raises_check_failure():
    from spinblocks.exceptions import CheckFailure

    report = run_check("dim-sqd", n=5)
    assert report.passed
    # a deliberately broken instance: lie about n via a fabricated report
    import spinblocks.verify as V

    broken = V.CheckReport("dim-sqd", {"n": 1}, False, 2, 1, {"expected": 1})
    V.CHECKS["__broken__"] = lambda: broken
    try:
        with pytest.raises(CheckFailure) as err:
            run_check("__broken__", strict=True)
        assert err.value.report is broken
    finally:
        del V.CHECKS["__broken__"]


def test_unknown_check_name():
    with pytest.raises(ValueError):
        run_check("nope")


def test_dim_reduced_census_match():
    """The reduced dimension identity factors through the quotient census."""
    rho = generate(5, 3, "even", 1)[0]
    L = ell(5)
    from spinblocks.verify import compositions

    for dcomp in compositions(3, L + 1):
        assert run_check("dim-reduced", rho=rho, p=5, dcomp=dcomp).passed

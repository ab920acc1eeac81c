############################################
# imports
############################################

import pytest

from hurwitz import HurwitzAlgebra, AlgebraElement


############################################
# Tests
############################################


def test_hurwitz_algebra(capsys):
    quaternions = HurwitzAlgebra(4)
    out = capsys.readouterr().out
    assert "quaternions (dimension 4)" in out, "error: construction should be announced"

    u, v = quaternions.basis("u"), quaternions.basis(2)
    uv = quaternions.multiply(u, v)

    assert uv == quaternions.basis("uv"), "error: u times v should be uv"
    assert quaternions.format(quaternions.multiply(v, u)) == "-uv", "error: v times u should be -uv"
    assert quaternions.conjugate(u) == -u, "error: conj(u) should be -u"
    assert quaternions.inverse(u) == -u, "error: inverse of u should be -u"

    with pytest.raises(ValueError):
        quaternions.element([1, 2])
    with pytest.raises(ValueError):
        quaternions.basis("w")


def test_hurwitz_algebra_checks():
    octonions = HurwitzAlgebra(8, verbose=0)

    assert all(report.passed for report in octonions.verify(trials=100)), "error: octonions compose norms"
    assert not octonions.classify().associative, "error: octonions are not associative"
    assert octonions.zero_divisors().passed, "error: octonions have no zero divisors"

    reports = octonions.run_suite(trials=20)
    assert all(report.passed for report in reports), "error: all propositions should hold"

    assert octonions.render().splitlines()[0].split() == [
        "1", "u", "v", "uv", "w", "uw", "vw", "(uv)w",
    ], "error: first table row should list the basis"

    with pytest.raises(ValueError):
        HurwitzAlgebra(1, verbose=0).run_suite()


def test_hurwitz_algebra_dim_16():
    with pytest.warns(UserWarning):
        sedenions = HurwitzAlgebra(16, verbose=0)

    assert not sedenions.zero_divisors().passed, "error: dim 16 has zero divisors"
    assert not sedenions.verify(trials=20)[0].passed, "error: dim 16 does not compose norms"

    with pytest.raises(ValueError):
        sedenions.inverse(AlgebraElement.basis(16, 1))

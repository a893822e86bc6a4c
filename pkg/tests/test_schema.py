import pytest

from baolab import PreconditionError, check_crpa2_schema, full_set_algebra


def test_corrected_reading_holds_on_small_squares():
    for universe in (2, 3):
        alg, _ = full_set_algebra(universe, 2)
        for verdict in check_crpa2_schema(alg, "corrected"):
            assert verdict.holds
            assert verdict.counterexample is None
        assert {(v.i, v.j) for v in check_crpa2_schema(alg, "corrected")} == \
            {(0, 1), (1, 0)}


def test_literal_reading_fails_with_first_counterexample():
    # regression pin: the first nonzero element in enumeration order is the
    # singleton of atom 0 = tuple (0,0), and no nonzero replacement image
    # fits below it
    alg, tuples = full_set_algebra(2, 2)
    for verdict in check_crpa2_schema(alg, "literal"):
        assert not verdict.holds
        assert verdict.counterexample == (0,)
        assert tuples[verdict.counterexample[0]] == (0, 0)


def test_literal_counterexample_is_genuine():
    alg, _ = full_set_algebra(2, 2)
    y = alg.atom(0)
    for a in alg.atoms():
        image = alg.replace(0, 1, a)
        assert not (image and alg.leq(image, y)), \
            "some image does fit below y, the verdict would be wrong"
    # yet the corrected reading is satisfied by the very same y
    assert any(alg.replace(0, 1, a) & y for a in alg.atoms())


def test_schema_rejects_wrong_dimension():
    alg, _ = full_set_algebra(2, 3)
    with pytest.raises(PreconditionError):
        check_crpa2_schema(alg, "corrected")


def test_schema_rejects_unknown_variant():
    alg, _ = full_set_algebra(2, 2)
    with pytest.raises(ValueError):
        check_crpa2_schema(alg, "middle")

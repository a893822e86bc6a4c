import itertools
import random

from baolab import (AdditivityWitness, FinCofSet, PartitionAlgebra,
                    additivity_failure_certificate, check_complete_additivity,
                    concrete_partition, pa_complement, pa_leq, pa_s01,
                    pa_transposition, pa_union)
from baolab.partition import (DIAG_BLOCK, is_symmetric_block,
                              pointwise_replacement01_on,
                              pointwise_transposition_on)


def _random_element(rng):
    support = rng.sample(range(10), rng.randint(0, 4))
    if rng.random() < 0.5:
        return FinCofSet.finite(support)
    return FinCofSet.cofinite(support)


def test_replacement_collapses_by_polarity():
    alg = PartitionAlgebra(3)
    rng = random.Random(31)
    for _ in range(300):
        a = _random_element(rng)
        image = alg.s01(a)
        if a.is_cofinite:
            assert image.is_universe
        else:
            assert image.is_empty
    assert pa_s01(FinCofSet.finite([0])) == FinCofSet.empty()
    assert pa_s01(FinCofSet.universe()) == FinCofSet.universe()


def test_replacement_not_additive_over_the_atom_family():
    # the pointwise sup of the atom images is strictly below the image of
    # the sup: the split that the certificate records
    alg = PartitionAlgebra(3)
    sup, reason = alg.sup_of_atoms()
    assert sup.is_universe
    assert "unit" in reason
    assert alg.s01(sup).is_universe
    for k in range(50):
        assert alg.s01(alg.atom(k)).is_empty


def test_failure_certificate_contents():
    cert = additivity_failure_certificate(3)
    assert cert.op == "s_0^1"
    assert cert.sup.is_universe
    assert cert.op_of_sup.is_universe
    assert cert.sup_of_images.is_empty
    assert cert.separating_y.is_empty
    # separating element witnesses the gap: bounds every image, not the op of sup
    assert pa_leq(cert.sup_of_images, cert.separating_y)
    assert not pa_leq(cert.op_of_sup, cert.separating_y)
    blob = cert.to_json()
    assert blob["check"] == "complete-additivity-failure"
    assert blob["sup"] == {"polarity": "cofinite", "support": []}


def test_checker_agrees_with_certificate():
    witness = check_complete_additivity("s_0^1", PartitionAlgebra(3))
    assert isinstance(witness, AdditivityWitness)
    cert = additivity_failure_certificate(3)
    assert witness.sup == cert.sup
    assert witness.op_of_sup == cert.op_of_sup
    assert witness.sup_of_images == cert.sup_of_images


def test_transpositions_fix_everything():
    rng = random.Random(32)
    alg = PartitionAlgebra(3)
    for _ in range(100):
        a = _random_element(rng)
        for i in range(3):
            for j in range(3):
                assert alg.transposition(a, i, j) == a
    assert pa_transposition(FinCofSet.finite([2]), 0, 2) == FinCofSet.finite([2])


def test_boolean_wrappers():
    a = FinCofSet.finite([1, 2])
    b = FinCofSet.cofinite([2, 3])
    assert pa_union(a, b) == a | b
    assert pa_complement(a) == ~a
    assert pa_leq(a, FinCofSet.cofinite([3]))


def test_denotation_commutes_with_boolean_structure():
    """The extended index set (with the reserved diagonal block) is what the
    element 'really' collects; union and complement must look the same
    before and after reading off the denotation."""
    alg = PartitionAlgebra(3)
    rng = random.Random(33)
    for _ in range(200):
        a = _random_element(rng)
        b = _random_element(rng)
        assert alg.denotation(alg.union(a, b)) == \
            alg.denotation(a) | alg.denotation(b)
        assert alg.denotation(alg.complement(a)) == ~alg.denotation(a)
        assert alg.leq(a, b) == (alg.denotation(a) <= alg.denotation(b))
        # the reserved diagonal block tags exactly the cofinite side
        assert (DIAG_BLOCK in alg.denotation(a)) == a.is_cofinite


def test_concrete_partition_structure():
    for universe, dimension, blocks in ((3, 2, 2), (4, 2, 3), (4, 3, 3), (5, 3, 4)):
        space = set(itertools.product(range(universe), repeat=dimension))
        parts = concrete_partition(universe, dimension, blocks)
        assert len(parts) == blocks
        union = set()
        for p in parts:
            assert not (union & p)
            union |= p
        assert union == space
        for p in parts:
            assert is_symmetric_block(p, dimension)
        # block 0 holds every tuple with a repeated value
        assert parts[0] == frozenset(t for t in space if len(set(t)) < dimension)


def test_pointwise_operators_against_comprehensions():
    space = list(itertools.product(range(4), repeat=3))
    parts = concrete_partition(4, 3, 3)
    for p in parts:
        direct = frozenset(s for s in space if ((s[1],) + s[1:]) in p)
        assert pointwise_replacement01_on(space, p) == direct
        for i in range(3):
            for j in range(3):
                swapped = frozenset(
                    s for s in space
                    if tuple(s[j] if k == i else s[i] if k == j else s[k]
                             for k in range(3)) in p)
                assert pointwise_transposition_on(space, p, i, j) == swapped
        # symmetric blocks are fixed by every transposition
        assert pointwise_transposition_on(space, p, 0, 2) == p


def test_partition_with_too_few_symmetric_classes_is_rejected():
    # universe 3 at dimension 3 has a single injective orbit, which cannot
    # feed two non-diagonal blocks
    try:
        concrete_partition(3, 3, 3)
    except ValueError as exc:
        assert "symmetric classes" in str(exc)
    else:
        raise AssertionError("expected a ValueError")


def test_concrete_replacement_image_by_block():
    # the preimage construction lands on: full space for any block containing
    # the diagonal tuples produced by the merge, empty otherwise at dim 2
    space = list(itertools.product(range(4), repeat=2))
    parts = concrete_partition(4, 2, 3)
    image0 = pointwise_replacement01_on(space, parts[0])
    assert image0 == frozenset(space)
    for p in parts[1:]:
        assert pointwise_replacement01_on(space, p) == frozenset()

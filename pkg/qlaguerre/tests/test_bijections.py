"""Tests for the bijections Phi_k and Gamma^(n1,n2).
"""
import pytest

from qlaguerre import bijections
from qlaguerre.errors import NotInDomain
from qlaguerre.permstats import Permutation, all_permutations, cr, \
    enumerate_class, wex

PHI_SIGMA = Permutation.parse("6,7,15,8,11,10,13,14,1,4,12,5,3,9,2")
PHI_IMAGE = Permutation.parse("5,8,7,10,11,13,1,9,2,15,6,14,3,4,12")
GAMMA_SIGMA = Permutation.parse("15,4,6,13,3,8,2,14,1,7,12,5,10,9,11")
GAMMA_IMAGE = Permutation.parse("15,5,13,6,3,1,8,14,2,7,12,4,10,9,11")


def test_phi_worked_example():
    assert bijections.phi(PHI_SIGMA, 3) == PHI_IMAGE
    assert bijections.phi_inverse(PHI_IMAGE, 3) == PHI_SIGMA


def test_gamma_worked_example():
    assert bijections.gamma(GAMMA_SIGMA, 3, 4) == GAMMA_IMAGE
    assert bijections.gamma(GAMMA_IMAGE, 4, 3) == GAMMA_SIGMA


def test_phi_domain_errors():
    with pytest.raises(NotInDomain):
        bijections.phi(Permutation([1, 2, 3]), 1)
    with pytest.raises(NotInDomain):
        bijections.phi(Permutation([2, 3, 1]), 4)
    with pytest.raises(NotInDomain):
        bijections.phi_inverse(Permutation([2, 1, 3]), 1)


def test_gamma_domain_errors():
    with pytest.raises(NotInDomain):
        # 1 -> 2 joins two points of the first block
        bijections.gamma(Permutation([2, 1, 3, 4]), 2, 2)
    with pytest.raises(NotInDomain):
        bijections.gamma(Permutation([3, 4, 1, 2]), 2, 3)
    with pytest.raises(NotInDomain):
        bijections.gamma(Permutation([3, 4, 1, 2]), 0, 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_phi_properties(n):
    for k in range(1, n):
        images = set()
        for sigma in bijections.phi_domain(n, k):
            image = bijections.phi(sigma, k)
            assert bijections.in_phi_codomain(image, k)
            assert (wex(image), cr(image)) == (wex(sigma), cr(sigma))
            assert bijections.phi_inverse(image, k) == sigma
            images.add(image)
        codomain = [s for s in all_permutations(n)
                    if bijections.in_phi_codomain(s, k)]
        assert images == set(codomain)


@pytest.mark.parametrize("n", range(2, 7))
def test_gamma_properties(n):
    for n1 in range(1, n):
        for n2 in range(1, n - n1 + 1):
            images = set()
            for sigma in bijections.gamma_domain(n, n1, n2):
                image = bijections.gamma(sigma, n1, n2)
                assert bijections.in_gamma_domain(image, n2, n1)
                assert (wex(image), cr(image)) == (wex(sigma), cr(sigma))
                assert bijections.gamma(image, n2, n1) == sigma
                images.add(image)
            assert len(images) == sum(1 for _ in
                                      bijections.gamma_domain(n, n2, n1))


@pytest.mark.parametrize("n", range(2, 7))
def test_crossing_decompositions(n):
    for k in range(1, n):
        for sigma in bijections.phi_domain(n, k):
            left = bijections.crossing_decomposition_L(sigma, k)
            assert sum(left[:3]) == cr(sigma)
            assert left[2] == left[3]
            assert bijections.crossing_decomposition_R(
                bijections.phi(sigma, k), k) == left[:3]


@pytest.mark.parametrize("n", range(2, 7))
def test_gamma_crossings(n):
    for n1 in range(1, n):
        for n2 in range(1, n - n1 + 1):
            for sigma in bijections.gamma_domain(n, n1, n2):
                counts = bijections.crossing_decomposition_G(sigma, n1, n2)
                assert sum(counts) == cr(sigma)
                assert bijections.g5_closed(sigma, n1, n2) == counts[4]


def test_class_mapping():
    sizes = (2, 1, 3)
    phi_images = set(bijections.phi(s, 2) for s in enumerate_class(sizes))
    assert phi_images == set(enumerate_class((1, 3, 2)))
    gamma_images = set(bijections.gamma(s, 2, 1)
                       for s in enumerate_class(sizes))
    assert gamma_images == set(enumerate_class((1, 2, 3)))


@pytest.mark.parametrize("n", range(6))
def test_a_identity(n):
    for sigma in all_permutations(n):
        for i in range(1, n + 1):
            assert len(set(bijections.a_counts(sigma, i))) == 1


def test_decomposition_rows():
    rows = bijections.decomposition_rows(PHI_SIGMA, k=3)
    assert rows[0] == ("sigma", "L1", "L2", "L3", "L4")
    assert rows[1][0] == str(PHI_SIGMA)
    assert sum(rows[1][1:4]) == cr(PHI_SIGMA)

    rows = bijections.decomposition_rows(GAMMA_SIGMA, n1=3, n2=4)
    assert rows[0] == ("sigma", "G1", "G2", "G3", "G4", "G5")
    assert sum(rows[1][1:]) == cr(GAMMA_SIGMA)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])

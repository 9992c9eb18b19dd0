import pytest

from hilbcert.errors import DomainError
from hilbcert.genus_bounds import Region, fd2, genus_cap, gmax, region_of


def gmax_scaled(d, s):
    # integer-only evaluation of 2s*G(d, s); independent of the Fraction path
    nu = d % s
    num = d * d + s * (s - 4) * d + 2 * s - (s - 1) * nu * (s - nu)
    assert num % (2 * s) == 0
    return num // (2 * s)


@pytest.mark.parametrize("d, s, expected", [(95, 8, 752), (96, 8, 769), (147, 8, 1639), (57, 8, 315)])
def test_gmax_values(d, s, expected):
    assert gmax(d, s) == expected == gmax_scaled(d, s)


def test_gmax_validity_boundary():
    gmax(57, 8)
    with pytest.raises(DomainError):
        gmax(56, 8)
    with pytest.raises(DomainError):
        gmax(10, 1)


def test_gmax_agrees_with_integer_oracle():
    for s in range(2, 11):
        for d in range(s * (s - 1) + 1, 400):
            assert gmax(d, s) == gmax_scaled(d, s)


def test_fd2():
    assert fd2(95, 22) == 1533
    assert fd2(95, 1) == 0
    assert fd2(95, 48) == 2209 == (95 - 1) ** 2 // 4
    assert max(fd2(95, x) for x in range(200)) == 2209


def test_fd2_symmetry():
    for d in range(1, 60):
        for x in range(-5, d + 6):
            assert fd2(d, x) == fd2(d, d + 1 - x)


@pytest.mark.parametrize("d, g, region", [
    (95, 753, Region.A),
    (95, 752, Region.OUTSIDE),
    (95, 766, Region.A),
    (95, 767, Region.OUTSIDE),
    (147, 2000, Region.B),
    (147, 1639, Region.OUTSIDE),
    (147, (146 ** 2) // 8, Region.B),
    (147, (146 ** 2) // 8 + 1, Region.OUTSIDE),
    (94, 800, Region.OUTSIDE),
])
def test_region_of(d, g, region):
    assert region_of(d, g) is region


def test_region_implies_strict_genus_bound():
    for d in range(95, 200):
        for g in range(gmax(d, 8) - 3, genus_cap(d) + 3):
            if region_of(d, g).admissible:
                assert gmax(d, 8) < g


def test_gmax_nondecreasing():
    for s in (3, 5, 8):
        values = [gmax(d, s) for d in range(s * (s - 1) + 1, 500)]
        assert all(a <= b for a, b in zip(values, values[1:]))

from math import comb

import pytest

from hilbcert.line_ideal import (closed_form_vanishing, count_monomials_vanishing, dims_table,
                                 h0_conormal_twist, h0_line_ideal, tangent_dim_Q)


def test_paper_constants():
    assert h0_line_ideal(4, 2) == 22
    assert h0_line_ideal(4, 1) == 30
    assert h0_line_ideal(4, 0) == comb(7, 3) == 35
    assert h0_conormal_twist(4) == 8
    assert h0_conormal_twist(1) == 2
    assert h0_line_ideal(4, 1) - h0_conormal_twist(4) == h0_line_ideal(4, 2)
    assert tangent_dim_Q() == 25


def test_dims_table():
    assert list(dims_table().values()) == [30, 22, 8, 25, 25, 29]


def test_enumeration_matches_closed_form():
    for n in range(13):
        for k in range(n + 2):
            assert count_monomials_vanishing(n, k) == closed_form_vanishing(n, k)


def test_consecutive_differences():
    for n in range(13):
        for k in range(n + 1):
            assert h0_line_ideal(n, k) - h0_line_ideal(n, k + 1) == (k + 1) * (n - k + 1)


def test_beyond_order_vanishes_entirely():
    assert h0_line_ideal(3, 5) == 0
    with pytest.raises(Exception):
        h0_conormal_twist(0)

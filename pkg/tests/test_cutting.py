import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutquant.cutting import (
    GaussianCutting,
    IdentityCutting,
    TabulatedCutting,
    cutting_for_length,
    laplacian_ratio,
)
from cutquant.dataio import read_two_column_csv


class TestGaussian:
    def test_laplacian_ratio_at_origin(self):
        f = GaussianCutting(a=2.0)
        assert laplacian_ratio(f, 0.0) == pytest.approx(-0.25, abs=1e-15)

    def test_laplacian_ratio_vanishes_at_cutting_length(self):
        f = GaussianCutting(a=2.0)
        assert laplacian_ratio(f, 2.0) == pytest.approx(0.0, abs=1e-15)

    def test_laplacian_ratio_multi_dimensional(self):
        f = GaussianCutting(a=2.0)
        # r^2/a^4 - dims/a^2 at r = 1
        assert laplacian_ratio(f, 1.0, dims=3) == pytest.approx(1.0 / 16.0 - 3.0 / 4.0)

    @settings(max_examples=100)
    @given(
        x=st.floats(min_value=-50.0, max_value=50.0),
        a=st.floats(min_value=0.1, max_value=100.0),
    )
    def test_value_matches_closed_form(self, x, a):
        f = GaussianCutting(a=a)
        assert f.value(x) == pytest.approx(math.exp(-x * x / (2 * a * a)), rel=1e-14)

    def test_vectorized_matches_scalar(self):
        f = GaussianCutting(a=1.5)
        xs = np.linspace(-3.0, 3.0, 7)
        np.testing.assert_allclose(
            f.laplacian_ratio(xs), [f.laplacian_ratio(float(x)) for x in xs], rtol=1e-15
        )
        np.testing.assert_allclose(f.value(xs), [f.value(float(x)) for x in xs], rtol=1e-15)

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            GaussianCutting(a=0.0)
        with pytest.raises(ValueError):
            GaussianCutting(a=math.inf)


class TestIdentity:
    def test_laplacian_ratio_is_zero_everywhere(self):
        f = IdentityCutting()
        assert laplacian_ratio(f, 0.0) == 0.0
        assert laplacian_ratio(f, 123.4, dims=3) == 0.0
        np.testing.assert_array_equal(f.laplacian_ratio(np.array([-1.0, 5.0])), [0.0, 0.0])

    def test_value_is_one(self):
        f = IdentityCutting()
        assert f.value(17.0) == 1.0


class TestCuttingForLength:
    def test_infinite_length_means_no_cutting(self):
        assert isinstance(cutting_for_length(math.inf), IdentityCutting)

    def test_finite_length_is_gaussian(self):
        f = cutting_for_length(2.5)
        assert isinstance(f, GaussianCutting)
        assert f.a == 2.5


def _gaussian_table(a: float, half_width: float, n: int) -> TabulatedCutting:
    xs = np.linspace(-half_width, half_width, n)
    return TabulatedCutting(xs, np.exp(-xs * xs / (2 * a * a)))


class TestTabulated:
    def test_matches_analytic_gaussian_at_node(self):
        f = _gaussian_table(a=2.0, half_width=4.0, n=1601)
        exact = GaussianCutting(a=2.0)
        for x in (0.0, 0.5, 2.0):
            assert f.laplacian_ratio(x) == pytest.approx(exact.laplacian_ratio(x), abs=2e-6)

    def test_second_difference_converges_quadratically(self):
        # x = 0.5 is a table node at each of these sizes, so the pure
        # truncation error of the central stencil is what is measured
        exact = GaussianCutting(a=2.0).laplacian_ratio(0.5)
        errors = []
        for n in (161, 321, 641):
            f = _gaussian_table(a=2.0, half_width=4.0, n=n)
            errors.append(abs(f.laplacian_ratio(0.5) - exact))
        # halving the spacing should shrink the error about fourfold
        assert errors[0] / errors[1] == pytest.approx(4.0, rel=0.15)
        assert errors[1] / errors[2] == pytest.approx(4.0, rel=0.15)

    def test_interior_stencil_required(self):
        f = _gaussian_table(a=2.0, half_width=4.0, n=11)
        xs = f.abscissae
        with pytest.raises(ValueError, match="stencil"):
            f.laplacian_ratio(xs[0])
        with pytest.raises(ValueError, match="stencil"):
            f.laplacian_ratio(xs[-1] - 1e-12)
        # value() itself is fine all the way to the table edge
        assert f.value(xs[0]) == pytest.approx(f.values[0])

    def test_outside_table_raises(self):
        f = _gaussian_table(a=2.0, half_width=4.0, n=11)
        with pytest.raises(ValueError, match="outside"):
            f.value(4.5)
        with pytest.raises(ValueError):
            f.laplacian_ratio(-7.0)

    def test_rejects_non_positive_values(self):
        xs = np.linspace(-1, 1, 5)
        with pytest.raises(ValueError, match="positive"):
            TabulatedCutting(xs, [1.0, 0.5, 0.0, 0.5, 1.0])
        with pytest.raises(ValueError, match="positive"):
            TabulatedCutting(xs, [1.0, 0.5, -0.2, 0.5, 1.0])

    def test_rejects_unsorted_abscissae(self):
        with pytest.raises(ValueError, match="increasing"):
            TabulatedCutting([0.0, 1.0, 0.5], [1.0, 1.0, 1.0])

    def test_rejects_multi_dimensional_request(self):
        f = _gaussian_table(a=2.0, half_width=4.0, n=11)
        with pytest.raises(ValueError, match="dims=1"):
            f.laplacian_ratio(0.0, dims=2)

    def test_uniform_stencil_reduces_to_plain_second_difference(self):
        xs = np.array([0.0, 1.0, 2.0])
        vs = np.array([1.0, 2.0, 4.0])
        f = TabulatedCutting(xs, vs)
        assert f.laplacian_ratio(1.0) == pytest.approx((1.0 - 4.0 + 4.0) / 2.0)

    def test_vectorized_evaluation(self):
        f = _gaussian_table(a=2.0, half_width=4.0, n=801)
        xs = np.linspace(-3.0, 3.0, 13)
        np.testing.assert_allclose(
            f.laplacian_ratio(xs), [f.laplacian_ratio(float(x)) for x in xs], rtol=1e-13
        )


class TestCsvLoading:
    def test_with_header(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text("x,f\n-1.0,0.5\n0.0,1.0\n1.0,0.5\n")
        xs, vs = read_two_column_csv(path)
        np.testing.assert_array_equal(xs, [-1.0, 0.0, 1.0])
        np.testing.assert_array_equal(vs, [0.5, 1.0, 0.5])
        TabulatedCutting(xs, vs)  # loadable straight into a cutting function

    def test_without_header(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text("-1.0,0.5\n0.0,1.0\n1.0,0.5\n")
        xs, _ = read_two_column_csv(path)
        assert xs.size == 3

    def test_rejects_unsorted(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text("0.0,1.0\n-1.0,0.5\n")
        with pytest.raises(ValueError, match="increasing"):
            read_two_column_csv(path)

    def test_rejects_wrong_columns(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text("0.0,1.0,2.0\n1.0,0.5,2.0\n")
        with pytest.raises(ValueError, match="two columns"):
            read_two_column_csv(path)

    def test_rejects_non_numeric_data_row(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text("x,f\n0.0,1.0\nbad,0.5\n")
        with pytest.raises(ValueError, match="not numeric"):
            read_two_column_csv(path)

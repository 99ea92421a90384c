import pytest

from zetamap.errors import TableFormatError
from zetamap.reference_data import (
    ZeroTable,
    compare_zeros,
    load_zero_table,
    save_zero_table,
    table_estimates,
)
from zetamap.zeros import ZeroEstimate, estimate_zero, solve_zero


def _write(tmp_path, text, name="z.txt"):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_bare_format(tmp_path):
    table = load_zero_table(_write(tmp_path, "14.134725142\n21.022039639\n"))
    assert table.values == (14.134725142, 21.022039639)
    assert table.first_index == 1
    assert table.source_label == "z.txt"


def test_indexed_format(tmp_path):
    table = load_zero_table(_write(tmp_path, "1 14.134725142\n2 21.022039639\n"))
    assert table.zero(1) == 14.134725142
    assert len(table) == 2


def test_comments_and_blank_lines(tmp_path):
    table = load_zero_table(_write(tmp_path, "# header\n\n14.1\n   \n# mid\n21.0\n"))
    assert table.values == (14.1, 21.0)


def test_indexed_table_starting_later(tmp_path):
    table = load_zero_table(_write(tmp_path, "100 236.524229666\n101 237.769820481\n"))
    assert table.first_index == 100
    assert table.zero(101) == 237.769820481
    with pytest.raises(IndexError):
        table.zero(1)


def test_csv_with_header(tmp_path):
    table = load_zero_table(_write(tmp_path, "n,t_hat\n1,14.5\n2,20.6\n# count=2\n"))
    assert table.values == (14.5, 20.6)


def test_decreasing_values_rejected(tmp_path):
    with pytest.raises(TableFormatError) as info:
        load_zero_table(_write(tmp_path, "21.0\n14.1\n"))
    assert info.value.lineno == 2
    assert "increasing" in str(info.value)


def test_unparsable_line_reports_line_number(tmp_path):
    with pytest.raises(TableFormatError) as info:
        load_zero_table(_write(tmp_path, "14.1\n\nabc\n"))
    assert info.value.lineno == 3
    assert "3" in str(info.value)


def test_empty_file_rejected(tmp_path):
    with pytest.raises(TableFormatError):
        load_zero_table(_write(tmp_path, "# nothing\n\n"))


def test_index_gap_rejected(tmp_path):
    with pytest.raises(TableFormatError):
        load_zero_table(_write(tmp_path, "1 14.1\n3 21.0\n"))


def test_nonpositive_rejected(tmp_path):
    with pytest.raises(TableFormatError):
        load_zero_table(_write(tmp_path, "-1.0\n"))


def test_missing_file():
    with pytest.raises(OSError):
        load_zero_table("/nonexistent/zeros.txt")


def test_reference_table_shape(zeros10k):
    assert len(zeros10k) == 10000
    assert zeros10k.zero(1) == pytest.approx(14.134725141734693, abs=1e-11)
    assert zeros10k.zero(10000) == pytest.approx(9877.782654004, abs=1e-8)


def test_round_trip_lossless(tmp_path, zeros10k):
    path = tmp_path / "rt.csv"
    save_zero_table(zeros10k, path)
    again = load_zero_table(path)
    assert again.values == zeros10k.values
    assert again.first_index == zeros10k.first_index


def test_compare_identity(zeros10k):
    stats = compare_zeros(table_estimates(zeros10k), zeros10k)
    assert stats.count == 10000
    assert stats.max_abs_diff == 0.0
    assert stats.rms_diff == 0.0


def test_compare_invariants(zeros10k):
    computed = [estimate_zero(n) for n in range(1, 501)]
    stats = compare_zeros(computed, zeros10k)
    assert stats.count == len(stats.per_n_diff) == 500
    assert stats.max_abs_diff == max(abs(d) for d in stats.per_n_diff)
    assert stats.indices == list(range(1, 501))


def test_compare_antisymmetric(zeros10k):
    head = zeros10k.head(300)
    est = ZeroTable(tuple(estimate_zero(n).t for n in range(1, 301)))
    forward = compare_zeros(table_estimates(est), head)
    backward = compare_zeros(table_estimates(head), est)
    assert forward.per_n_diff == [-d for d in backward.per_n_diff]


def test_compare_out_of_range(zeros10k):
    with pytest.raises(IndexError):
        compare_zeros([ZeroEstimate(n=10001, t=9878.0, method="estimator_eq9")], zeros10k)


def test_estimator_error_envelope(zeros10k):
    # Measured: worst |t_hat - t| over the first 10,000 zeros is 0.9937 at n = 34,
    # with 4615 sign changes; the error never reaches one mean spacing.
    stats = compare_zeros([estimate_zero(n) for n in range(1, 10001)], zeros10k)
    assert stats.max_abs_diff == pytest.approx(0.99371085, abs=1e-6)
    assert abs(stats.per_n_diff[33]) == stats.max_abs_diff
    assert stats.sign_changes == 4615


def test_map_against_reference(zeros10k):
    computed = [solve_zero(1, 0.0921796), solve_zero(10000, 0.2639143)]
    stats = compare_zeros(computed, zeros10k)
    assert stats.max_abs_diff < 1e-6


def test_table_rejects_unsorted_direct_construction():
    with pytest.raises(ValueError):
        ZeroTable((2.0, 1.0))

import pytest
from hypothesis import given

from avoid312.errors import InvalidPathError
from avoid312.paths import (
    DyckPath, FixedFactor, MotzkinPath, Stat, count_statistic, deutsch, enumerate_dyck,
    enumerate_motzkin, first_return_decompose, irreducible_components, parse_dyck,
)
from strategies import dyck_paths
from oracles import all_words, catalan_segner, is_lattice, motzkin_convolution, scan_run_statistic


class TestParse:
    def test_valid(self):
        assert parse_dyck("UUDD").semilength == 2
        assert parse_dyck("") == "" and parse_dyck("ε") == ""
        assert str(parse_dyck("")) == "ε"

    def test_negative_height(self):
        with pytest.raises(InvalidPathError, match="negative height at index 2"):
            parse_dyck("UDDU")

    def test_unbalanced(self):
        with pytest.raises(InvalidPathError, match="unbalanced"):
            parse_dyck("UUD")

    def test_bad_alphabet(self):
        with pytest.raises(InvalidPathError):
            parse_dyck("UHD")
        assert MotzkinPath("UHD") == "UHD"


class TestDecompositions:
    @pytest.mark.parametrize("path, a, b", [
        ("UUDD", "UD", ""), ("UDUD", "", "UD"), ("UUUDDD", "UUDD", ""),
    ])
    def test_first_return(self, path, a, b):
        assert first_return_decompose(DyckPath(path)) == (a, b)

    def test_first_return_empty(self):
        with pytest.raises(InvalidPathError):
            first_return_decompose(DyckPath(""))

    @pytest.mark.parametrize("path, parts", [
        ("UDUUDD", ["UD", "UUDD"]), ("UUDDUD", ["UUDD", "UD"]), ("", []),
    ])
    def test_components(self, path, parts):
        assert irreducible_components(DyckPath(path)) == parts

    @given(dyck_paths())
    def test_components_concatenate_and_are_irreducible(self, p):
        parts = irreducible_components(p)
        assert "".join(parts) == p
        for c in parts:
            assert irreducible_components(c) == [c]


class TestStatistics:
    def test_figure_path_ddu(self):
        assert count_statistic("UUUUDDUUDDDUDUDD", Stat.DDU) == 2

    def test_ddd(self):
        assert count_statistic("UUUDDD", Stat.DDD) == 1
        assert count_statistic("UUUUDDDD", Stat.DDD) == 2

    def test_du_plus_du(self):
        # a single D U^t D U anchor, at index 2
        assert count_statistic("UUDUDUDD", Stat.DU_PLUS_DU) == 1
        assert count_statistic("UUDUDD", Stat.DU_PLUS_DU) == 0

    def test_fixed_factor(self):
        assert count_statistic("UDUDUD", FixedFactor("UDU")) == 2
        with pytest.raises(ValueError):
            FixedFactor("")

    @pytest.mark.parametrize("stat, min_run, last", [
        (Stat.DU_PLUS_DU, 1, "U"), (Stat.DU2_PLUS_DD, 2, "D"),
    ])
    def test_run_statistics_match_scan(self, dyck_of, stat, min_run, last):
        for n in range(9):
            for p in dyck_of(n):
                assert count_statistic(p, stat) == scan_run_statistic(p, min_run, last)


class TestDeutsch:
    @pytest.mark.parametrize("path, image", [
        ("", ""), ("UUDD", "UDUD"), ("UDUD", "UUDD"), ("UUUDDD", "UDUDUD"),
    ])
    def test_examples(self, path, image):
        assert deutsch(DyckPath(path)) == image

    def test_involution_exhaustive(self, dyck_of):
        for n in range(11):
            for p in dyck_of(n):
                q = deutsch(p)
                assert len(q) == len(p)
                assert deutsch(q) == p

    def test_deep_path(self):
        n = 5000
        p = DyckPath("U" * n + "D" * n)
        assert deutsch(p) == "UD" * n

    @given(dyck_paths(200))
    def test_matches_recursive_definition(self, p):
        def delta(s):
            if not s:
                return ""
            a, b = first_return_decompose(DyckPath(s))
            return "U" + delta(b) + "D" + delta(a)
        assert deutsch(p) == delta(p)
        assert isinstance(deutsch(p), DyckPath)


class TestFirstReturnRecursions:
    """Statistic recursions over P = U A D B, checked against direct scanning."""

    def test_recursions(self, dyck_of):
        for n in range(1, 9):
            for p in dyck_of(n):
                a, b = first_return_decompose(p)

                def rec(stat, extra):
                    return count_statistic(a, stat) + count_statistic(b, stat) + extra

                assert count_statistic(p, Stat.DDD) == rec(Stat.DDD, a.endswith("DD"))
                t = len(b) - len(b.lstrip("U"))
                assert count_statistic(p, Stat.DU_PLUS_DU) == rec(
                    Stat.DU_PLUS_DU, t >= 1 and b.startswith("DU", t))
                # only a path ending DUD supplies the D before U D; A = UD is preceded by P's first U
                assert count_statistic(p, Stat.DUDD) == rec(Stat.DUDD, a.endswith("UD") and len(a) > 2)
                assert count_statistic(p, Stat.DU2_PLUS_DD) == rec(
                    Stat.DU2_PLUS_DD, t >= 2 and b.startswith("DD", t))
                assert count_statistic(p, Stat.DDU) == rec(Stat.DDU, bool(a) and bool(b))


class TestEnumeration:
    def test_dyck_small(self):
        assert list(enumerate_dyck(2)) == ["UUDD", "UDUD"]
        assert sum(1 for _ in enumerate_dyck(3)) == 5
        assert list(enumerate_dyck(0)) == [""]

    def test_dyck_n10(self):
        assert sum(1 for _ in enumerate_dyck(10)) == 16796 == catalan_segner(10)

    @pytest.mark.parametrize("n", range(7))
    def test_dyck_equals_filtered_words(self, n):
        expected = sorted((w for w in all_words("UD", 2 * n) if is_lattice(w)),
                          key=lambda w: w.replace("U", "0").replace("D", "1"))
        assert list(enumerate_dyck(n)) == expected

    def test_motzkin_small(self):
        assert list(enumerate_motzkin(2)) == ["UD", "HH"]
        assert sum(1 for _ in enumerate_motzkin(3)) == 4
        assert sum(1 for _ in enumerate_motzkin(8)) == 323 == motzkin_convolution(8)

    @pytest.mark.parametrize("n", range(9))
    def test_motzkin_equals_filtered_words(self, n):
        order = {"U": "0", "H": "1", "D": "2"}
        expected = sorted((w for w in all_words("UHD", n) if is_lattice(w)),
                          key=lambda w: "".join(order[c] for c in w))
        assert list(enumerate_motzkin(n)) == expected

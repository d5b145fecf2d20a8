import random
from fractions import Fraction as F

import pytest

from cfrieze import (
    DOWN_RIGHT,
    Frieze,
    FriezeParams,
    InconsistentSection,
    InvalidSection,
    Section,
    SectionValues,
    UP_RIGHT,
    ZeroOnSection,
    ZeroPivot,
    extract_section,
    oblique_section,
    reconstruct,
    recover_x,
    section_values_from_dict,
    section_values_to_dict,
    seed_from_free,
)
from conftest import random_frieze, random_nonzero_section_values


@pytest.fixture
def ex1():
    return Frieze(seed_from_free(FriezeParams(F(4), 2), [2, -3, -1], 1))


class TestSectionShape:
    def test_down_right_points(self):
        sec = oblique_section(2, 5, DOWN_RIGHT)
        assert [tuple(p) for p in sec.points] == [
            (5, 3), (5, 4), (5, 5), (5, 6), (5, 7), (5, 8)
        ]
        assert sec.is_oblique and sec.orientation == DOWN_RIGHT

    def test_up_right_points(self):
        sec = oblique_section(2, 5, UP_RIGHT)
        assert [tuple(p) for p in sec.points] == [
            (7, 5), (6, 5), (5, 5), (4, 5), (3, 5), (2, 5)
        ]
        assert sec.orientation == UP_RIGHT

    def test_size_is_n_plus_four(self):
        assert len(oblique_section(1, 0, DOWN_RIGHT).points) == 5

    def test_staircase_is_valid_but_not_oblique(self):
        sec = Section(((2, 0), (2, 1), (2, 2), (1, 2), (1, 3), (1, 4)))
        assert not sec.is_oblique
        assert sec.orientation is None
        assert sec.moves() == ["J", "J", "I", "J", "J"]

    def test_rejects_skipped_row(self):
        with pytest.raises(InvalidSection):
            Section(((2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (2, 6)))

    def test_rejects_non_adjacent_points(self):
        with pytest.raises(InvalidSection):
            Section(((2, 0), (2, 1), (3, 3), (2, 3), (2, 4), (2, 5)))

    def test_points_sorted_by_row(self):
        sec = Section(((5, 5), (5, 3), (5, 6), (5, 4), (5, 7), (5, 8)))
        assert [p.row for p in sec.points] == [-1, 0, 1, 2, 3, 4]


class TestSectionValues:
    def test_boundary_rows_enforced(self):
        sec = oblique_section(1, 0, DOWN_RIGHT)
        with pytest.raises(InconsistentSection):
            SectionValues(sec, (1, 1, 2, 3, 0))
        with pytest.raises(InconsistentSection):
            SectionValues(sec, (0, 2, 2, 3, 0))

    def test_extract_oblique(self, ex1):
        sv = extract_section(ex1, oblique_section(2, 1, DOWN_RIGHT))
        assert sv.values == (0, 1, 2, F(-2), F(10), 0)

    def test_extract_up_right(self, ex1):
        sv = extract_section(ex1, oblique_section(2, 4, UP_RIGHT))
        assert sv.values == (0, 1, F(4, 5), F(16, 5), F(-32, 5), 0)

    def test_extract_staircase(self, ex1):
        sec = Section(((2, 0), (2, 1), (2, 2), (1, 2), (1, 3), (1, 4)))
        assert extract_section(ex1, sec).values == (0, 1, F(-3), F(-2), F(10), 0)


class TestRecoverX:
    def test_forward_alternating_example(self):
        assert recover_x(F(1), (1, -4, -3), "forward") == 1

    def test_forward_counterexample_section(self):
        assert recover_x(F(-4), (1, 4, 8), "forward") == 3

    def test_forward_inverts_row_recurrence(self):
        # f(i, j+1) = x_{j+1} f(i,j) + c f(i,j-1), any c, m != 0
        c, m, x = F(7, 3), F(5), F(-2, 9)
        assert recover_x(c, (0, m, c * 0 + x * m), "forward") == x

    def test_backward(self, ex1):
        # pivot at i = 3: x_{i-1} = (f(2, 4) - c f(4, 4)) / f(3, 4)
        got = recover_x(ex1.c, (ex1.value(2, 4), ex1.value(3, 4), ex1.value(4, 4)),
                        "backward")
        assert got == ex1.first_row(2)

    def test_zero_pivot(self):
        with pytest.raises(ZeroPivot):
            recover_x(F(1), (1, 0, 1), "forward")


class TestReconstruct:
    def test_counterexample_section(self):
        params = FriezeParams(F(-4), 2)
        sv = SectionValues(oblique_section(2, 1, DOWN_RIGHT), (0, 1, 4, 8, 8, 0))
        f = reconstruct(params, sv)
        cycle = [f.first_row(i) for i in range(5)]
        assert sorted(map(str, cycle)) == sorted(["4", "3", "3", "4", "5/2"])
        assert f.s_t() == (8, 8)

    def test_alternating_section(self):
        params = FriezeParams(F(1), 4)
        sv = SectionValues(
            oblique_section(4, 1, DOWN_RIGHT), (0, 1, -4, -3, 5, 2, -1, 0)
        )
        f = reconstruct(params, sv)
        assert [f.first_row(i) for i in range(1, 8)] == [-4, 1, -3, 1, -3, 2, -1]

    def test_oblique_sections_of_example_one(self, ex1):
        params = FriezeParams(F(4), 2)
        sv = SectionValues(oblique_section(2, 1, DOWN_RIGHT), (0, 1, 2, -2, 10, 0))
        f = reconstruct(params, sv)
        for i in range(-3, 9):
            assert f.first_row(i) == ex1.first_row(i)

    def test_up_right_section_of_example_one(self, ex1):
        params = FriezeParams(F(4), 2)
        sv = SectionValues(
            oblique_section(2, 4, UP_RIGHT),
            (0, 1, F(4, 5), F(16, 5), F(-32, 5), 0),
        )
        f = reconstruct(params, sv)
        for i in range(-3, 9):
            assert f.first_row(i) == ex1.first_row(i)

    def test_non_oblique_section_of_example_one(self, ex1):
        params = FriezeParams(F(4), 2)
        sec = Section(((2, 0), (2, 1), (2, 2), (1, 2), (1, 3), (1, 4)))
        sv = SectionValues(sec, (0, 1, -3, -2, 10, 0))
        f = reconstruct(params, sv)
        for i in range(-3, 9):
            assert f.first_row(i) == ex1.first_row(i)

    def test_zero_value_refused(self):
        params = FriezeParams(F(4), 2)
        sv_values = (0, 1, 0, -2, 10, 0)
        sec = oblique_section(2, 1, DOWN_RIGHT)
        with pytest.raises(ZeroOnSection):
            reconstruct(params, SectionValues(sec, sv_values))

    def test_round_trip_random(self):
        rng = random.Random(2024)
        done = 0
        while done < 25:
            frieze = random_frieze(rng, max_n=5)
            if frieze is None:
                continue
            sv = random_nonzero_section_values(rng, frieze)
            if sv is None:
                continue
            rebuilt = reconstruct(frieze.params, sv)
            for i in range(-3, frieze.n + 6):
                for k in range(-1, frieze.n + 3):
                    assert rebuilt.value(i, i + k - 1) == frieze.value(i, i + k - 1)
            done += 1


class TestSerialization:
    def test_oblique_roundtrip(self, ex1):
        sv = extract_section(ex1, oblique_section(2, 1, DOWN_RIGHT))
        data = section_values_to_dict(sv)
        assert data["oblique"] == {"anchor": 1, "orientation": DOWN_RIGHT}
        assert section_values_from_dict(data) == sv

    def test_points_roundtrip(self, ex1):
        sec = Section(((2, 0), (2, 1), (2, 2), (1, 2), (1, 3), (1, 4)))
        sv = extract_section(ex1, sec)
        data = section_values_to_dict(sv)
        assert "points" in data
        assert section_values_from_dict(data) == sv

    def test_missing_shape_rejected(self):
        with pytest.raises(InvalidSection):
            section_values_from_dict({"values": ["0", "1", "1", "1", "0"]})

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partcap.geometry import (
    BoundingBox,
    DegenerateBoxError,
    area,
    enclosing_box,
    intersection_area,
    overlap_ratio,
)


def grid_intersection_cells(a, b, size=64):
    """Unit-cell counting oracle for integer boxes within [0, size]."""
    count = 0
    for x in range(size):
        for y in range(size):
            in_a = a.x_min <= x < a.x_max and a.y_min <= y < a.y_max
            in_b = b.x_min <= x < b.x_max and b.y_min <= y < b.y_max
            if in_a and in_b:
                count += 1
    return count


def int_boxes(max_coord=20):
    coords = st.integers(min_value=0, max_value=max_coord)
    return st.builds(
        lambda x0, x1, y0, y1: BoundingBox(min(x0, x1), min(y0, y1), max(x0, x1), max(y0, y1)),
        coords,
        coords,
        coords,
        coords,
    )


class TestArea:
    def test_square(self):
        assert area(BoundingBox(0, 0, 10, 10)) == 100

    def test_zero_width_degenerate(self):
        assert area(BoundingBox(5, 5, 5, 9)) == 0

    def test_hand_arithmetic(self):
        assert area(BoundingBox(2, 3, 7, 11)) == 40

    def test_invalid_corners_rejected(self):
        with pytest.raises(ValueError):
            BoundingBox(5, 0, 3, 10)


class TestIntersectionArea:
    def test_identical(self):
        b = BoundingBox(0, 0, 10, 10)
        assert intersection_area(b, b) == 100

    def test_disjoint(self):
        assert intersection_area(BoundingBox(0, 0, 4, 4), BoundingBox(10, 10, 12, 12)) == 0

    def test_partial_overlap_matches_grid_oracle(self):
        a = BoundingBox(0, 0, 10, 10)
        b = BoundingBox(5, 5, 15, 15)
        assert intersection_area(a, b) == 25
        assert grid_intersection_cells(a, b) == 25

    @given(int_boxes(), int_boxes())
    def test_symmetric_and_bounded(self, a, b):
        inter = intersection_area(a, b)
        assert inter == intersection_area(b, a)
        assert 0 <= inter <= min(area(a), area(b))

    @given(int_boxes(), int_boxes())
    def test_matches_grid_oracle_on_integer_boxes(self, a, b):
        assert intersection_area(a, b) == grid_intersection_cells(a, b, size=21)


class TestOverlapRatio:
    def test_part_inside_key(self):
        assert overlap_ratio(BoundingBox(5, 5, 10, 10), BoundingBox(0, 0, 10, 10)) == 1.0

    def test_quarter_overlap(self):
        assert overlap_ratio(BoundingBox(0, 0, 10, 10), BoundingBox(5, 5, 10, 10)) == 0.25

    def test_disjoint(self):
        assert overlap_ratio(BoundingBox(20, 20, 30, 30), BoundingBox(0, 0, 10, 10)) == 0.0

    def test_degenerate_part_rejected(self):
        with pytest.raises(DegenerateBoxError):
            overlap_ratio(BoundingBox(5, 5, 5, 9), BoundingBox(0, 0, 10, 10))

    @given(int_boxes(), int_boxes())
    def test_in_unit_interval_and_one_iff_contained(self, part, key):
        if area(part) == 0:
            return
        ratio = overlap_ratio(part, key)
        assert 0.0 <= ratio <= 1.0
        contained = (
            key.x_min <= part.x_min
            and key.y_min <= part.y_min
            and part.x_max <= key.x_max
            and part.y_max <= key.y_max
        )
        assert (ratio == 1.0) == contained


class TestEnclosingBox:
    def test_single_box_identity(self):
        b = BoundingBox(0, 0, 5, 5)
        assert enclosing_box([b]) == b

    def test_two_boxes(self):
        assert enclosing_box(
            [BoundingBox(0, 0, 5, 5), BoundingBox(3, 3, 9, 9)]
        ) == BoundingBox(0, 0, 9, 9)

    def test_disjoint_corners(self):
        assert enclosing_box(
            [BoundingBox(1, 8, 2, 9), BoundingBox(7, 0, 8, 1)]
        ) == BoundingBox(1, 0, 8, 9)

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError):
            enclosing_box([])

    @given(st.lists(int_boxes(), min_size=1, max_size=6))
    def test_contains_every_input_and_is_tight(self, boxes):
        enc = enclosing_box(boxes)
        for b in boxes:
            assert enc.x_min <= b.x_min and enc.y_min <= b.y_min
            assert b.x_max <= enc.x_max and b.y_max <= enc.y_max
        assert enc.x_min in [b.x_min for b in boxes]
        assert enc.y_min in [b.y_min for b in boxes]
        assert enc.x_max in [b.x_max for b in boxes]
        assert enc.y_max in [b.y_max for b in boxes]

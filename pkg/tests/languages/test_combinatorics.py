"""
Tests for the Thue-Morse iterates and cube detection.
"""

import pytest

from chuk_closure_lab.languages import find_cube, is_cube_free, thue_morse_iterate


class TestThueMorse:
    """Test the substitution x -> xy, y -> yx"""

    def test_first_iterates(self):
        """Test k = 0 .. 3"""
        assert thue_morse_iterate(0) == "a"
        assert thue_morse_iterate(1) == "ab"
        assert thue_morse_iterate(2) == "abba"
        assert thue_morse_iterate(3) == "abbabaab"

    def test_other_letters(self):
        """Test custom letters"""
        assert thue_morse_iterate(2, "x", "y") == "xyyx"

    def test_length(self):
        """Test |t_k| = 2^k"""
        assert len(thue_morse_iterate(10)) == 1024

    def test_invalid_arguments(self):
        """Test equal letters and negative k"""
        with pytest.raises(ValueError, match="must differ"):
            thue_morse_iterate(2, "a", "a")
        with pytest.raises(ValueError, match="k must be >= 0"):
            thue_morse_iterate(-1)

    def test_cube_free_up_to_ten(self):
        """Test every iterate with k <= 10 is cube-free"""
        for k in range(11):
            assert is_cube_free(thue_morse_iterate(k)), k


class TestFindCube:
    """Test cube detection"""

    def test_letter_cube(self):
        """Test aaa"""
        assert find_cube("aaa") == (0, 1)
        assert find_cube("xaaay") == (1, 1)

    def test_longer_period(self):
        """Test (ab)^3"""
        assert find_cube("abababx") == (0, 2)

    def test_cube_free(self):
        """Test words without cubes"""
        assert find_cube("aabaab") is None
        assert is_cube_free("")
        assert is_cube_free("ab")

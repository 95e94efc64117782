from hypothesis import given, settings

from agol.conjugacy import aligning_shifts, compare, profile
from agol.words import ParamWord, flip, shift

from conftest import words


def W(text):
    return ParamWord.parse(text)


def test_flip_pair():
    v = compare(W("1,2,1"), W("2,1,1"))
    assert v.equivalent and v.certificate == (0, True)


def test_shift_pair():
    v = compare(W("1,1,2;2,1,1"), W("2,1,1;1,1,2"))
    assert v.equivalent and v.certificate == (1, False)


def test_different_profiles():
    v = compare(W("1,2,1"), W("1,1,1"))
    assert not v.equivalent and not v.profiles_match and not v.witnesses


def test_ratio_witness():
    p, t = W("1,2,1;1,1,1"), W("2,1,1;0,2,1")
    assert profile(p) == profile(t)
    v = compare(p, t)
    assert not v.equivalent and v.profiles_match
    assert v.separated_by_ratios
    assert v.to_json()["witnesses"][0]["shift"] == 0


def test_aligning_shifts_periodic_profile():
    p = W("1,2,1;2,1,1")
    assert aligning_shifts(p, W("3,0,1;0,3,1")) == [0, 1]


@settings(max_examples=200)
@given(words())
def test_orbit_members_equivalent(w):
    for other in (shift(w), flip(w), shift(flip(w))):
        v = compare(w, other)
        assert v.equivalent and v.certificate is not None

import pytest
from hypothesis import given

from prefdomains.prefcore import Profile, ProfileError, delete_voter, parse_profile, serialize_profile

from conftest import EXAMPLE_23_TEXT, profiles


def test_parse_example23(example23):
    assert example23.m == 6 and example23.n == 3
    assert example23.rankings == ((3, 2, 1, 4, 5, 6), (3, 4, 2, 5, 6, 1), (5, 4, 3, 6, 2, 1))


def test_smallest_profile():
    p = parse_profile("1 1\n1\n")
    assert (p.m, p.n, p.rankings) == (1, 1, ((1,),))
    assert serialize_profile(p) == "1 1\n1\n"


def test_comments_and_trailing_whitespace():
    text = "# header next\n2 2   \n1 2\n# between\n2 1  \n\n"
    assert parse_profile(text).rankings == ((1, 2), (2, 1))


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("3 1\n1 1 2\n", 2, "duplicate"),
        ("3 1\n1 2\n", 2, "expected 3"),
        ("3 1\n1 2 4\n", 2, "outside"),
        ("3\n1 2 3\n", 1, "header"),
        ("3 2\n1 2 3\n", 1, "declared 2"),
        ("2 1\n1 2\n2 1\n", 3, "more than"),
        ("2 1\n1 x\n", 2, "non-integer"),
        ("# only a comment\n", 1, "missing header"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ProfileError) as exc:
        parse_profile(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_ties_are_not_representable():
    with pytest.raises(ProfileError):
        Profile(3, ((1, 2, 2),))


def test_serialize_example23(example23):
    assert serialize_profile(example23) == EXAMPLE_23_TEXT


@given(profiles(max_n=5, max_m=7))
def test_round_trip(p):
    text = serialize_profile(p)
    assert parse_profile(text) == p
    assert serialize_profile(parse_profile(text)) == text


def test_delete_voter(example23):
    q = delete_voter(example23, 2)
    assert q.rankings == ((3, 2, 1, 4, 5, 6), (5, 4, 3, 6, 2, 1))
    first_gone = serialize_profile(delete_voter(example23, 1))
    assert first_gone == "6 2\n3 4 2 5 6 1\n5 4 3 6 2 1\n"


@given(profiles(max_n=5, max_m=6))
def test_delete_voter_keeps_rankings_bit_identical(p):
    if p.n < 2:
        return
    for v in p.voters:
        q = delete_voter(p, v)
        assert q.m == p.m
        assert list(q.rankings) == [r for i, r in enumerate(p.rankings, 1) if i != v]


def test_delete_voter_errors(example23):
    with pytest.raises(ProfileError):
        delete_voter(example23, 0)
    with pytest.raises(ProfileError):
        delete_voter(example23, 4)
    with pytest.raises(ProfileError):
        delete_voter(parse_profile("1 1\n1\n"), 1)

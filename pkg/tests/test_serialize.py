from fractions import Fraction as F

import pytest

from valuegeom import Game, GameInputError, fraction_str, game_from_json, rational_to_json
from valuegeom.serialize import parse_rational


def test_game_from_json_basic():
    text = '{"n": 3, "coalitions": [{"players": [0, 1], "worth": "1/2"}, {"players": [2], "worth": 3}]}'
    game = game_from_json(text)
    assert game.n == 3
    assert game.worth(0b011) == F(1, 2)
    assert game.worth(0b100) == F(3)
    assert game.worth(0b111) == F(0)


def test_game_from_json_decimal_numbers_are_exact():
    game = game_from_json('{"n": 2, "coalitions": [{"players": [0, 1], "worth": 0.1}]}')
    assert game.worth(0b11) == F(1, 10)
    game = game_from_json('{"n": 2, "coalitions": [{"players": [0], "worth": 1.25e-2}]}')
    assert game.worth(0b01) == F(1, 80)


def test_game_from_json_negative_and_integer_worths():
    game = game_from_json('{"n": 2, "coalitions": [{"players": [1], "worth": "-7/3"}]}')
    assert game.worth(0b10) == F(-7, 3)


def test_game_from_json_duplicate_coalition_is_error():
    text = '{"n": 2, "coalitions": [{"players": [0], "worth": 1}, {"players": [0], "worth": 2}]}'
    with pytest.raises(GameInputError, match="duplicate"):
        game_from_json(text)


def test_game_from_json_rejects_empty_coalition():
    with pytest.raises(GameInputError):
        game_from_json('{"n": 2, "coalitions": [{"players": [], "worth": 1}]}')


def test_game_from_json_rejects_bad_player():
    with pytest.raises(GameInputError):
        game_from_json('{"n": 2, "coalitions": [{"players": [2], "worth": 1}]}')
    with pytest.raises(GameInputError):
        game_from_json('{"n": 2, "coalitions": [{"players": [0, 0], "worth": 1}]}')


def test_game_from_json_rejects_bad_top_level():
    with pytest.raises(GameInputError):
        game_from_json("[1, 2]")
    with pytest.raises(GameInputError):
        game_from_json('{"coalitions": []}')
    with pytest.raises(GameInputError):
        game_from_json('{"n": 1, "coalitions": []}')
    with pytest.raises(GameInputError):
        game_from_json("not json")


def test_game_from_json_rejects_bad_worth():
    with pytest.raises(GameInputError):
        game_from_json('{"n": 2, "coalitions": [{"players": [0], "worth": "x"}]}')
    with pytest.raises(GameInputError):
        game_from_json('{"n": 2, "coalitions": [{"players": [0], "worth": true}]}')
    with pytest.raises(GameInputError):
        game_from_json('{"n": 2, "coalitions": [{"players": [0]}]}')


def test_game_from_json_empty_coalition_list_is_zero_game():
    assert game_from_json('{"n": 2, "coalitions": []}') == Game.zero(2)


def test_parse_rational_forms():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational(5) == F(5)
    assert parse_rational(F(1, 3)) == F(1, 3)
    assert parse_rational("0.25") == F(1, 4)
    with pytest.raises(GameInputError):
        parse_rational("1/0")
    with pytest.raises(GameInputError):
        parse_rational(0.25)
    with pytest.raises(GameInputError):
        parse_rational(None)


def test_rational_to_json_fields():
    d = rational_to_json(F(-39, 58))
    assert d == {"num": "-39", "den": "58", "approx": -39 / 58}


def test_fraction_str():
    assert fraction_str(F(3, 4)) == "3/4"
    assert fraction_str(F(5)) == "5"
    assert fraction_str(F(0)) == "0"
    assert fraction_str(F(-1, 2)) == "-1/2"

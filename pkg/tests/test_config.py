import pytest

from actegory import config
from actegory.action import constant_left
from actegory.errors import SizeLimitExceeded
from actegory.library import walking_arrow


def test_env_shorthand_and_json(monkeypatch):
    monkeypatch.setenv(config.ENV_VAR, "4,10,3")
    lim = config._from_env()
    assert (lim.max_objects, lim.max_arrows, lim.max_fiber) == (4, 10, 3)
    monkeypatch.setenv(config.ENV_VAR, '{"max_search": 7}')
    assert config._from_env().max_search == 7
    monkeypatch.delenv(config.ENV_VAR)
    assert config._from_env() == config.DEFAULT


def test_limits_raise_instead_of_truncating():
    old = config.set_limits(derived_fiber=3)
    try:
        with pytest.raises(SizeLimitExceeded):
            from actegory.action import power

            power(["v", "w"], constant_left(walking_arrow(), ["a", "b"]))
    finally:
        config.set_limits(old)
    assert config.limits() == old

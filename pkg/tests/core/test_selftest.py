# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

import logging

import pytest

from msmb.core.selftest import (
    REGISTER, FixtureMismatch, RegisteredFixture, SelfTestRecord, fixture,
    fixtures, run_selftest
)
from msmb.exceptions import InvalidInput


def _broken(config):
    raise FixtureMismatch("expected 2 bases, got 3")


class TestRegistry:

    def test_names(self):
        assert "graver-2-3-4" in REGISTER
        assert "check-dim3-3-5-11" in REGISTER
        assert REGISTER["markov-8-31-33-53"].slow

    def test_quick_skips_slow(self):
        quick = {f.name for f in fixtures(quick=True)}
        assert "graver-2-3-4" in quick
        assert "universal-3-5-8-11" not in quick
        assert len(quick) < len(REGISTER)

    def test_duplicate(self):
        with pytest.raises(InvalidInput):
            fixture(name="graver-2-3-4")(_broken)


class TestRun:

    def test_selected(self):
        records = run_selftest(only=["graver-2-3-4", "sign-game-lost"])
        assert [r.name for r in records] == ["graver-2-3-4", "sign-game-lost"]
        assert all(r.passed for r in records)
        assert str(records[1]) == "ok   sign-game-lost: not winnable"

    @pytest.mark.parametrize("name", [
        "universal-3-5-8-11", "reducing-complex"
    ])
    def test_corrected_fixtures_pass(self, name):
        (record,) = run_selftest(only=[name])
        assert record.passed, record.detail

    def test_unknown(self):
        with pytest.raises(InvalidInput):
            run_selftest(only=["no-such-fixture"])

    def test_failure_is_recorded(self, monkeypatch, caplog):
        monkeypatch.setitem(
            REGISTER, "broken", RegisteredFixture("broken", _broken)
        )
        with caplog.at_level(logging.WARNING):
            (record,) = run_selftest(only=["broken"])
        assert record == SelfTestRecord(
            "broken", False, "expected 2 bases, got 3"
        )
        assert str(record).startswith("FAIL broken")
        assert "broken" in caplog.text

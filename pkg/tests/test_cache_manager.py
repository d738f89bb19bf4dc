"""Tester för sessionscachen av analyser."""

from types import SimpleNamespace

import pytest

import views.cache_manager as cache_manager
from harness import REFERENCE_SYSTEM


class SessionState(dict):
    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError as e:
            raise AttributeError(name) from e

    def __setattr__(self, name, value):
        self[name] = value

    def __delattr__(self, name):
        del self[name]


@pytest.fixture
def session(monkeypatch):
    state = SessionState()
    monkeypatch.setattr(cache_manager, "st", SimpleNamespace(session_state=state))
    return state


def test_analysis_is_reused(session):
    first = cache_manager.get_cached_analysis(REFERENCE_SYSTEM)
    assert cache_manager.get_cached_analysis(REFERENCE_SYSTEM) is first
    assert first[2].D == 3


def test_force_refresh_recomputes_analysis(session):
    first = cache_manager.get_cached_analysis(REFERENCE_SYSTEM)
    again = cache_manager.get_cached_analysis(REFERENCE_SYSTEM, force_refresh=True)
    assert again[1] is not first[1]
    assert again[1].D == first[1].D


def test_refresh_cache_empties_session(session):
    cache_manager.get_cached_analysis(REFERENCE_SYSTEM)
    cache_manager.refresh_cache()
    assert "cached_analyses" not in session

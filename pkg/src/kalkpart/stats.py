"""Process-wide operation counters for decomposition statistics."""

import threading

_lock = threading.Lock()
_counters = {}


def count(name: str, n: int = 1):
    with _lock:
        _counters[name] = _counters.get(name, 0) + n


def snapshot() -> dict:
    with _lock:
        return dict(_counters)


def reset():
    with _lock:
        _counters.clear()

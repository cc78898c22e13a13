"""Registry of memoization caches so they can be dropped in one call.

Used by the benchmark to time cold runs and by tests that compare kernel
backends.  All caches are insert-or-get maps whose values are pure
functions of their keys, so clearing is always safe.
"""

_CLEARERS = []


def register(clear_fn):
    _CLEARERS.append(clear_fn)
    return clear_fn


def clear_all() -> None:
    for fn in _CLEARERS:
        fn()

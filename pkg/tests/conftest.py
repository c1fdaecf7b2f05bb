import itertools


def all_strings(size, max_len, min_len=1):
    """Every tuple over 0..size-1 with min_len <= length <= max_len."""
    for length in range(min_len, max_len + 1):
        yield from itertools.product(range(size), repeat=length)

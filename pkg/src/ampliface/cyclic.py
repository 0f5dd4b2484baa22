"""Bitmask subsets of [n] = {1,..,n} and the rotated total orders <=_a.

Subsets are encoded as integers with bit (e-1) set for element e; the
ground set size n is capped at 16 so exhaustive sweeps over C(16,8)
stay cheap.  The order <=_a is the usual order rotated to start at a:
a < a+1 < ... < n < 1 < ... < a-1.  The Gale order compares equal-size
subsets componentwise after sorting both by <=_a.
"""

from itertools import combinations

MAX_N = 16


def mask_of(elems):
    """Pack an iterable of 1-based elements into a bitmask."""
    m = 0
    for e in elems:
        m |= 1 << (e - 1)
    return m


def elems_of(mask):
    """Unpack a bitmask into an ascending tuple of 1-based elements."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def check_ground(n):
    if not 1 <= n <= MAX_N:
        raise ValueError(f"ground set size must be in [1, {MAX_N}], got {n}")


def full_mask(n):
    return (1 << n) - 1


def k_subset_masks(n, k):
    """All k-subset bitmasks of [n], ascending as integers."""
    key = (n, k)
    cached = _SUBSET_CACHE.get(key)
    if cached is None:
        cached = sorted(mask_of(c) for c in combinations(range(1, n + 1), k))
        _SUBSET_CACHE[key] = cached
    return cached


_SUBSET_CACHE = {}


def cyclic_pos(x, a, n):
    """Position of x in the order <=_a (0 for x == a)."""
    return (x - a) % n


def rotated_key(mask, a, n):
    """Elements of the subset as sorted positions in the order <=_a."""
    key = (n, a, mask)
    t = _KEY_CACHE.get(key)
    if t is None:
        t = tuple(sorted((e - a) % n for e in elems_of(mask)))
        _KEY_CACHE[key] = t
    return t


_KEY_CACHE = {}


def gale_leq(I, J, a, n=None):
    """Gale order: I <=_a J componentwise after sorting both by <=_a.

    I and J may be bitmasks or iterables of elements; they must have
    the same size.
    """
    mi = I if isinstance(I, int) else mask_of(I)
    mj = J if isinstance(J, int) else mask_of(J)
    if n is None:
        n = max(mi.bit_length(), mj.bit_length())
    if mi.bit_count() != mj.bit_count():
        raise ValueError("Gale order compares subsets of equal size")
    ti = rotated_key(mi, a, n)
    tj = rotated_key(mj, a, n)
    return all(x <= y for x, y in zip(ti, tj))


def cyclic_interval(a, b, n):
    """Elements of the cyclic interval [a, b] as a tuple (wraps past n)."""
    length = (b - a) % n + 1
    return tuple((a - 1 + i) % n + 1 for i in range(length))

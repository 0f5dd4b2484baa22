"""Matroids on [n] as basis collections.

Covers duality, Grassmann necklaces (Gale-minimal bases per rotated
order), positroid envelopes, enumeration of positroids via necklace
generation, and the twistor-down construction that sends a rank-k
matroid to the rank-m matroid of m-subsets independent in the dual.
"""

import json
from itertools import combinations

from .cyclic import (
    check_ground,
    elems_of,
    full_mask,
    gale_leq,
    k_subset_masks,
    mask_of,
    rotated_key,
)


class Matroid:
    """A matroid given by its bases (k-subsets of [n] as bitmasks).

    Equality and hashing are structural on the sorted basis list.  The
    constructor checks sizes only; the exchange axiom is checked lazily
    by `is_matroid` and cached, since operations such as `necklace` are
    defined only on genuine matroids.
    """

    __slots__ = ("n", "k", "bases", "_basis_set", "_exchange_ok")

    def __init__(self, n, k, bases, _trusted=False):
        check_ground(n)
        bases = tuple(sorted(set(bases)))
        if not bases:
            raise ValueError("a matroid needs at least one basis")
        full = full_mask(n)
        for b in bases:
            if b & ~full:
                raise ValueError("basis outside ground set")
            if b.bit_count() != k:
                raise ValueError(f"basis {elems_of(b)} does not have size {k}")
        self.n = n
        self.k = k
        self.bases = bases
        self._basis_set = frozenset(bases)
        self._exchange_ok = True if _trusted else None

    @classmethod
    def from_sets(cls, n, sets):
        masks = [mask_of(s) for s in sets]
        k = masks[0].bit_count() if masks else 0
        return cls(n, k, masks)

    def basis_sets(self):
        return [elems_of(b) for b in self.bases]

    def has_basis(self, mask):
        return mask in self._basis_set

    def rank_of(self, mask):
        """Rank of a subset: largest intersection with a basis."""
        return max((b & mask).bit_count() for b in self.bases)

    def loops_mask(self):
        union = 0
        for b in self.bases:
            union |= b
        return full_mask(self.n) & ~union

    def coloops_mask(self):
        inter = full_mask(self.n)
        for b in self.bases:
            inter &= b
        return inter

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.n == other.n
            and self.bases == other.bases
        )

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        shown = ",".join("".join(map(str, s)) if self.n < 10 else str(s)
                         for s in self.basis_sets())
        return f"Matroid({self.n},{self.k};{{{shown}}})"

    def to_json(self):
        return {"n": self.n, "k": self.k,
                "bases": sorted(list(s) for s in self.basis_sets())}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["n"], obj["k"], [mask_of(b) for b in obj["bases"]])

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


class GrassmannNecklace:
    """An n-tuple of k-subsets (I_1,...,I_n), stored as bitmasks.

    The constructor does not enforce the necklace axiom because the
    dual necklace (Gale-maximal bases) satisfies the complementary
    axiom instead; use `satisfies_axiom` or let
    `positroid_from_necklace` validate.
    """

    __slots__ = ("n", "k", "entries")

    def __init__(self, n, k, entries):
        check_ground(n)
        entries = tuple(entries)
        if len(entries) != n:
            raise ValueError(f"necklace needs {n} entries, got {len(entries)}")
        for e in entries:
            if e.bit_count() != k:
                raise ValueError("necklace entry of wrong size")
        self.n = n
        self.k = k
        self.entries = entries

    def entry_sets(self):
        return [elems_of(e) for e in self.entries]

    def satisfies_axiom(self):
        """I_{a+1} contains I_a minus {a}, cyclically."""
        n = self.n
        for a in range(1, n + 1):
            cur = self.entries[a - 1]
            nxt = self.entries[a % n]
            if (cur & ~(1 << (a - 1))) & ~nxt:
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, GrassmannNecklace)
            and self.n == other.n
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n, self.entries))

    def __repr__(self):
        return f"GrassmannNecklace({self.n},{self.k};{self.entry_sets()})"

    def to_json(self):
        return {"n": self.n, "k": self.k,
                "entries": [list(s) for s in self.entry_sets()]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["n"], obj["k"], [mask_of(e) for e in obj["entries"]])


def is_matroid(n, bases):
    """Basis exchange axiom, checked by the direct double loop.

    `bases` is a collection of equal-size bitmasks (or a Matroid).
    """
    if isinstance(bases, Matroid):
        n, masks = bases.n, bases.bases
    else:
        masks = sorted(set(bases))
    if not masks:
        return False
    k = masks[0].bit_count()
    if any(b.bit_count() != k for b in masks):
        return False
    have = frozenset(masks)
    for a in masks:
        for b in masks:
            diff = a & ~b
            rev = b & ~a
            while diff:
                low = diff & -diff
                diff ^= low
                probe = rev
                ok = False
                while probe:
                    x = probe & -probe
                    probe ^= x
                    if (a ^ low) | x in have:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def require_matroid(M):
    if M._exchange_ok is None:
        M._exchange_ok = is_matroid(M.n, M.bases)
    if not M._exchange_ok:
        raise ValueError("basis collection fails the exchange axiom")


def dual(M):
    """Dual matroid: complements of bases; rank n-k."""
    full = full_mask(M.n)
    D = Matroid(M.n, M.n - M.k, [full ^ b for b in M.bases],
                _trusted=M._exchange_ok is True)
    D._exchange_ok = M._exchange_ok
    return D


def _gale_extreme(M, a, want_max):
    # Single replace-if-comparable pass; correct whenever a Gale
    # extremum exists, which holds for matroids.
    n = M.n
    best = M.bases[0]
    bk = rotated_key(best, a, n)
    for b in M.bases[1:]:
        k2 = rotated_key(b, a, n)
        if want_max:
            if all(x >= y for x, y in zip(k2, bk)):
                best, bk = b, k2
        else:
            if all(x <= y for x, y in zip(k2, bk)):
                best, bk = b, k2
    return best


def necklace(M):
    """Grassmann necklace: entry a is the Gale-minimal basis for <=_a."""
    require_matroid(M)
    return GrassmannNecklace(
        M.n, M.k, [_gale_extreme(M, a, False) for a in range(1, M.n + 1)]
    )


def dual_necklace(M):
    """Entry a is the Gale-maximal basis for <=_a.

    Complementwise this equals necklace(dual(M)).
    """
    require_matroid(M)
    return GrassmannNecklace(
        M.n, M.k, [_gale_extreme(M, a, True) for a in range(1, M.n + 1)]
    )


def positroid_from_necklace(N):
    """The positroid whose bases are Gale-above every necklace entry.

    Raises on input violating the necklace axiom.  The result has
    necklace N again (asserted).
    """
    if not N.satisfies_axiom():
        raise ValueError("tuple violates the Grassmann necklace axiom")
    n, k = N.n, N.k
    entries = N.entries
    keys = [rotated_key(e, a + 1, n) for a, e in enumerate(entries)]
    bases = []
    for b in k_subset_masks(n, k):
        ok = True
        for a in range(n):
            kb = rotated_key(b, a + 1, n)
            ka = keys[a]
            if any(x > y for x, y in zip(ka, kb)):
                ok = False
                break
        if ok:
            bases.append(b)
    P = Matroid(n, k, bases, _trusted=True)
    assert necklace(P) == N, "Gale filter did not reproduce the necklace"
    return P


def envelope(M):
    """Smallest positroid containing M (same Grassmann necklace)."""
    return positroid_from_necklace(necklace(M))


def is_positroid(M):
    return envelope(M) == M


def twistor_down(M, m):
    """Rank-m matroid of m-subsets contained in some basis of dual(M)."""
    if not 1 <= m <= M.n - M.k:
        raise ValueError(f"need 1 <= m <= n-k = {M.n - M.k}, got m={m}")
    require_matroid(M)
    found = set()
    for b in dual(M).bases:
        for c in combinations(elems_of(b), m):
            found.add(mask_of(c))
    return Matroid(M.n, m, sorted(found), _trusted=True)


def envelope_commutes_with_dual_check(M):
    """Whether env(M)* == env(M*)."""
    return dual(envelope(M)) == envelope(dual(M))


def uniform_matroid(n, k):
    return Matroid(n, k, k_subset_masks(n, k), _trusted=True)


def enumerate_necklaces(n, k):
    """All (k,n)-Grassmann necklaces, by DFS on the necklace axiom."""
    check_ground(n)
    if not 0 < k <= n:
        raise ValueError("need 0 < k <= n")
    results = []

    def extend(a, entries):
        # entries[0..a-1] chosen; choose I_{a+1}
        if a == n:
            last = entries[-1]
            kept = last & ~(1 << (n - 1))
            if kept & ~entries[0]:
                return
            results.append(GrassmannNecklace(n, k, entries))
            return
        cur = entries[-1]
        bit = 1 << (a - 1)
        if not cur & bit:
            extend(a + 1, entries + (cur,))
            return
        base = cur ^ bit
        for x in range(1, n + 1):
            xb = 1 << (x - 1)
            if not base & xb:
                extend(a + 1, entries + (base | xb,))

    for first in k_subset_masks(n, k):
        extend(1, (first,))
    return results


def enumerate_positroids(n, k):
    """All rank-k positroids on [n]."""
    return [positroid_from_necklace(N) for N in enumerate_necklaces(n, k)]

"""Rank-2 positroids in canonical (loops, cyclic intervals) form.

A rank-2 positroid on [n] is a loop set L plus disjoint cyclic
intervals whose non-loop elements are parallel.  Canonical form: every
interval has non-loop endpoints and at least two non-loop elements.
The pair (L, T) with T the union over intervals of all positions but
the last, minus loops, determines the positroid; the face statistics
are

    d = 2k + r - |S \\ L| - 2|L|,   c = 2k - d,   e = r + k - |S u L|,

equivalently d = 2k - 2|L| - |T|, c = 2|L| + |T|, e = k - |L| - |T|.
These drive membership in the face poset (e >= 0), the rank-k lift,
and the sparse matrices realizing the lift.
"""

import warnings
from dataclasses import dataclass
from itertools import combinations
from random import Random

from .cyclic import check_ground, elems_of, full_mask, mask_of
from .linalg import RationalMatrix, matroid_of_columns
from .matroid import Matroid, uniform_matroid


class NotRank2PositroidError(ValueError):
    """Raised when a rank-2 matroid is not a positroid."""


@dataclass(frozen=True)
class FaceStats:
    k: int
    d: int
    c: int
    e: int


class Rank2Positroid:
    """Canonical (L, intervals) encoding; immutable and hashable.

    Intervals are stored as (start, length) with 1-based start and
    cyclic wrap, sorted by start.  The constructor enforces canonical
    form; use `canonicalize` to normalize raw input.
    """

    __slots__ = ("n", "loops", "intervals", "_t_mask", "_s_mask", "_matroid")

    def __init__(self, n, loops, intervals):
        check_ground(n)
        loops = int(loops)
        if loops & ~full_mask(n):
            raise ValueError("loops outside ground set")
        intervals = tuple(sorted(intervals))
        seen = 0
        for start, length in intervals:
            if not (1 <= start <= n and 2 <= length <= n - 1):
                raise ValueError(f"bad cyclic interval ({start},{length})")
            m = _interval_mask(start, length, n)
            if m & seen:
                raise ValueError("cyclic intervals overlap")
            seen |= m
            if loops & (1 << (start - 1)) or loops & (1 << (_end(start, length, n) - 1)):
                raise ValueError("interval endpoint is a loop (not canonical)")
            if (m & ~loops).bit_count() < 2:
                raise ValueError("interval with < 2 non-loop elements (not canonical)")
        classes = len(intervals) + (full_mask(n) & ~loops & ~seen).bit_count()
        if classes < 2:
            raise ValueError("not rank 2: fewer than two parallel classes")
        self.n = n
        self.loops = loops
        self.intervals = intervals
        self._t_mask = None
        self._s_mask = None
        self._matroid = None

    # -- derived data -------------------------------------------------

    @property
    def r(self):
        return len(self.intervals)

    def loops_set(self):
        return elems_of(self.loops)

    def intervals_ab(self):
        """Intervals as [a, b] endpoint pairs."""
        return [(s, _end(s, ln, self.n)) for s, ln in self.intervals]

    def s_mask(self):
        if self._s_mask is None:
            m = 0
            for s, ln in self.intervals:
                m |= _interval_mask(s, ln, self.n)
            self._s_mask = m
        return self._s_mask

    def t_mask(self):
        """Union over intervals of all positions but the last, minus loops."""
        if self._t_mask is None:
            m = 0
            for s, ln in self.intervals:
                m |= _interval_mask(s, ln - 1, self.n)
            self._t_mask = m & ~self.loops
        return self._t_mask

    def t_set(self):
        return elems_of(self.t_mask())

    def class_masks(self):
        """Non-loop elements of each interval (the non-trivial classes)."""
        return [_interval_mask(s, ln, self.n) & ~self.loops
                for s, ln in self.intervals]

    def d_list(self):
        """Sizes-minus-one of the interval classes."""
        return [m.bit_count() - 1 for m in self.class_masks()]

    def support_mask(self):
        return self.loops | self.t_mask()

    # -- statistics ----------------------------------------------------

    def stats(self, k):
        if k < 1:
            raise ValueError("k must be >= 1")
        s_not_l = (self.s_mask() & ~self.loops).bit_count()
        d = 2 * k + self.r - s_not_l - 2 * self.loops.bit_count()
        e = self.r + k - (self.s_mask() | self.loops).bit_count()
        return FaceStats(k=k, d=d, c=2 * k - d, e=e)

    def in_face_poset(self, k):
        """Membership in P_{n,k}: the feasibility defect e is >= 0."""
        if self.n - k < 2 or k < 1:
            raise ValueError(f"need 1 <= k <= n-2, got k={k}, n={self.n}")
        return self.stats(k).e >= 0

    # -- matroid round trip --------------------------------------------

    def to_matroid(self):
        if self._matroid is None:
            cls_of = {}
            for i, m in enumerate(self.class_masks()):
                for e in elems_of(m):
                    cls_of[e] = i
            nonloops = elems_of(full_mask(self.n) & ~self.loops)
            nxt = len(self.intervals)
            for e in nonloops:
                if e not in cls_of:
                    cls_of[e] = nxt
                    nxt += 1
            bases = [
                mask_of((x, y))
                for x, y in combinations(nonloops, 2)
                if cls_of[x] != cls_of[y]
            ]
            self._matroid = Matroid(self.n, 2, bases, _trusted=True)
        return self._matroid

    # -- misc ------------------------------------------------------------

    def rotate(self, shift):
        """Relabel x -> x + shift cyclically."""
        n = self.n
        loops = mask_of(((e - 1 + shift) % n) + 1 for e in self.loops_set())
        ivs = [(((s - 1 + shift) % n) + 1, ln) for s, ln in self.intervals]
        return Rank2Positroid(n, loops, ivs)

    def __eq__(self, other):
        return (
            isinstance(other, Rank2Positroid)
            and (self.n, self.loops, self.intervals)
            == (other.n, other.loops, other.intervals)
        )

    def __hash__(self):
        return hash((self.n, self.loops, self.intervals))

    def __repr__(self):
        ivs = ",".join(f"[{a},{b}]" for a, b in self.intervals_ab())
        return f"({set(self.loops_set()) or '{}'},{{{ivs}}})/{self.n}"

    def to_json(self):
        return {"n": self.n, "loops": list(self.loops_set()),
                "intervals": [list(p) for p in self.intervals_ab()]}

    @classmethod
    def from_json(cls, obj):
        return canonicalize(obj["n"], obj.get("loops", ()),
                            obj.get("intervals", ()))


def _end(start, length, n):
    return (start - 1 + length - 1) % n + 1


def _interval_mask(start, length, n):
    m = 0
    for i in range(length):
        m |= 1 << ((start - 1 + i) % n)
    return m


def canonicalize(n, loops, intervals):
    """Normalize raw (loops, [a,b] interval) data to a Rank2Positroid.

    Loop endpoints are shrunk away, intervals left with fewer than two
    non-loop elements are dropped.  Overlapping intervals (before
    shrinking) and interval data spanning all of [n] are rejected.
    """
    check_ground(n)
    lmask = loops if isinstance(loops, int) else mask_of(loops)
    seen = 0
    shrunk = []
    for a, b in intervals:
        length = (b - a) % n + 1
        m = _interval_mask(a, length, n)
        if m & seen:
            raise ValueError("cyclic intervals overlap")
        seen |= m
        if length > n - 1 and (m & ~lmask).bit_count() >= 2:
            raise ValueError("interval covers all of [n]: rank < 2")
        # shrink loop endpoints
        while length > 0 and lmask & (1 << (a - 1)):
            a = a % n + 1
            length -= 1
        while length > 0 and lmask & (1 << (_end(a, length, n) - 1)):
            length -= 1
        if length and (_interval_mask(a, length, n) & ~lmask).bit_count() >= 2:
            shrunk.append((a, length))
    return Rank2Positroid(n, lmask, shrunk)


def from_loops_and_t(n, loops, t):
    """Rebuild the canonical positroid from the (L, T) encoding."""
    lmask = loops if isinstance(loops, int) else mask_of(loops)
    tmask = t if isinstance(t, int) else mask_of(t)
    if tmask & lmask:
        raise ValueError("T must avoid the loops")
    nonloops = elems_of(full_mask(n) & ~lmask)
    p = len(nonloops)
    if p - tmask.bit_count() < 2:
        raise ValueError("not rank 2: |T| must be at most #nonloops - 2")
    in_t = [bool(tmask & (1 << (e - 1))) for e in nonloops]
    # maximal cyclic runs of T inside the non-loop sequence
    intervals = []
    if tmask:
        start = next(i for i in range(p) if not in_t[(i - 1) % p] and in_t[i])
        i = start
        visited = 0
        while visited < p:
            if in_t[i]:
                j = i
                ln = 0
                while in_t[j % p]:
                    j += 1
                    ln += 1
                first = nonloops[i]
                last = nonloops[j % p]  # the class's final, non-T element
                span = (last - first) % n + 1
                intervals.append((first, span))
                visited += ln
                i = (i + ln) % p
            else:
                visited += 1
                i = (i + 1) % p
    return Rank2Positroid(n, lmask, intervals)


def from_matroid(M):
    """Canonical form of a rank-2 positroid given as a matroid.

    Raises NotRank2PositroidError when some parallel class is not a
    set of cyclically consecutive non-loops.
    """
    if M.k != 2:
        raise ValueError("expected a rank-2 matroid")
    from .matroid import require_matroid

    require_matroid(M)
    n = M.n
    lmask = M.loops_mask()
    nonloops = elems_of(full_mask(n) & ~lmask)
    # x ~ y iff {x,y} is not a basis
    classes = []
    assigned = {}
    for x in nonloops:
        if x in assigned:
            continue
        cls = [x]
        assigned[x] = len(classes)
        for y in nonloops:
            if y > x and not M.has_basis(mask_of((x, y))):
                cls.append(y)
                assigned[y] = len(classes)
        classes.append(cls)
    # each class must be an arc of consecutive non-loops
    pos = {e: i for i, e in enumerate(nonloops)}
    p = len(nonloops)
    t = 0
    for cls in classes:
        if len(cls) < 2:
            continue
        idx = sorted(pos[e] for e in cls)
        gaps = [(idx[(i + 1) % len(idx)] - idx[i]) % p for i in range(len(idx))]
        if sorted(gaps)[:-1] != [1] * (len(idx) - 1):
            raise NotRank2PositroidError(
                f"parallel class {cls} is not a cyclic arc of non-loops")
        # all but the cyclically last element of the arc go into T
        big = gaps.index(max(gaps))
        for i in range(len(idx)):
            if i != big:
                t |= 1 << (nonloops[idx[i]] - 1)
    N = from_loops_and_t(n, lmask, t)
    assert N.to_matroid() == M
    return N


def enumerate_rank2_positroids(n):
    """All of Q_{n,2} via the (L, T) encoding, deterministic order."""
    check_ground(n)
    out = []
    for lmask in range(1 << n):
        rest = full_mask(n) & ~lmask
        quota = rest.bit_count() - 2
        if quota < 0:
            continue
        t = rest
        while True:  # all submasks of rest, descending
            if t.bit_count() <= quota:
                out.append(from_loops_and_t(n, lmask, t))
            if t == 0:
                break
            t = (t - 1) & rest
    out.sort(key=lambda N: (2 * N.loops.bit_count() + N.t_mask().bit_count(),
                            N.loops, N.t_mask()))
    return out


def enumerate_face_poset_elements(n, k):
    """All N in P_{n,k}: the e(N) >= 0 slice of Q_{n,2}."""
    if n - k < 2 or k < 1:
        raise ValueError(f"need 1 <= k <= n-2, got k={k}, n={n}")
    return [N for N in enumerate_rank2_positroids(n)
            if N.loops.bit_count() + N.t_mask().bit_count() <= k]


def lift_up(N, k):
    """The largest rank-k positroid whose twistor-down is exactly N.

    Built through its dual: the rank-(n-k) truncation of the partition
    matroid with loop set L and one class per interval, i.e. bases are
    the (n-k)-subsets of non-loops meeting each interval class at most
    once.  Loops of N become coloops of the lift.
    """
    if not N.in_face_poset(k):
        raise ValueError(f"{N!r} is not in the face poset for k={k}")
    n = N.n
    cls_of = {}
    for i, m in enumerate(N.class_masks()):
        for e in elems_of(m):
            cls_of[e] = i
    nonloops = elems_of(full_mask(n) & ~N.loops)
    dual_bases = []
    for combo in combinations(nonloops, n - k):
        used = set()
        ok = True
        for e in combo:
            c = cls_of.get(e)
            if c is not None:
                if c in used:
                    ok = False
                    break
                used.add(c)
        if ok:
            dual_bases.append(mask_of(combo))
    full = full_mask(n)
    return Matroid(n, k, [full ^ b for b in dual_bases], _trusted=True)


def top_cell(n, k):
    """The lift of the loopless interval-free positroid: uniform."""
    return uniform_matroid(n, k)


# -- sparse realization matrices --------------------------------------


class LukowskiMatrix:
    """Sparse k x n pattern realizing the lift of N at generic entries.

    One singleton row per loop, one two-entry row per element of T
    (supported on the element and the next non-loop), remaining rows
    dense; structured rows come first, ordered by their index in [n].
    """

    __slots__ = ("n", "k", "row_masks")

    def __init__(self, n, k, row_masks):
        self.n = n
        self.k = k
        self.row_masks = tuple(row_masks)

    def ascii_grid(self):
        lines = []
        for m in self.row_masks:
            lines.append(" ".join(
                "*" if m & (1 << j) else "0" for j in range(self.n)))
        return "\n".join(lines)

    def instantiate(self, seed):
        """Exact rational matrix with random integer entries in the stars."""
        rng = Random(seed)
        rows = []
        for m in self.row_masks:
            rows.append([rng.randint(1, 1 << 20) if m & (1 << j) else 0
                         for j in range(self.n)])
        return RationalMatrix(rows)

    def __repr__(self):
        return f"LukowskiMatrix({self.k}x{self.n})\n{self.ascii_grid()}"


def lukowski_pattern(N, k):
    if not N.in_face_poset(k):
        raise ValueError(f"{N!r} is not in the face poset for k={k}")
    n = N.n
    lmask, tmask = N.loops, N.t_mask()
    structured = lmask | tmask
    if structured.bit_count() > k:
        raise ValueError("pattern infeasible: |L| + |T| exceeds k")
    rows = []
    for a in elems_of(structured):
        if lmask & (1 << (a - 1)):
            rows.append(1 << (a - 1))
        else:
            b = a % n + 1
            while lmask & (1 << (b - 1)):
                b = b % n + 1
            rows.append((1 << (a - 1)) | (1 << (b - 1)))
    dense = full_mask(n)
    rows.extend(dense for _ in range(k - len(rows)))
    return LukowskiMatrix(n, k, rows)


def lukowski_matroid(N, k, seed, trials=5):
    """Column matroid of the pattern at `trials` random instantiations.

    Random points only miss the generic locus by vanishing of some
    minor, so the sample matroids can only shrink; the inclusion-
    maximal agreeing matroid is their union.  Disagreement between
    samples is reported as a warning.  The result is asserted equal to
    lift_up(N, k).
    """
    pat = lukowski_pattern(N, k)
    sample = [matroid_of_columns(pat.instantiate(seed * 1_000_003 + i))
              for i in range(trials)]
    merged = set()
    for M in sample:
        merged.update(M.bases)
    if any(set(M.bases) != merged for M in sample):
        warnings.warn("Lukowski instantiations disagree; "
                      "a sample hit a non-generic point")
    got = Matroid(N.n, k, sorted(merged), _trusted=True)
    want = lift_up(N, k)
    assert got == want, f"Lukowski matroid {got} != lift {want}"
    return got

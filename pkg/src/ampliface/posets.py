"""Finite posets on rank-2 positroids: the full poset Q_{n,2}, the face
poset P_{n,k}, and the structural checks run against them (grading,
order-ideal structure, corank generating function, Eulerian-ness via
two independent mechanisms, thinness, closure-order monotonicity of
lifts, facet hyperplane assignment).

Up/down sets are bitmasks over element indices, so interval queries are
popcounts.  Posets are immutable after construction.
"""

from functools import lru_cache
from math import comb

from .cyclic import elems_of, gale_leq, mask_of
from .matroid import necklace
from .rank2 import (
    Rank2Positroid,
    enumerate_face_poset_elements,
    enumerate_rank2_positroids,
    from_loops_and_t,
    lift_up,
)

ZERO_HAT = "0hat"


class Poset:
    """Elements with strict up/down sets as index bitmasks.

    `ranks` is an optional integer label per element, consistent with
    covers when the poset is graded.
    """

    __slots__ = ("elements", "index", "up", "down", "ranks", "_covers",
                 "_mobius_cache")

    def __init__(self, elements, up, down, ranks=None):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.up = up
        self.down = down
        self.ranks = ranks
        self._covers = None
        self._mobius_cache = {}

    @classmethod
    def from_leq(cls, elements, leq, ranks=None):
        elements = list(elements)
        m = len(elements)
        up = [0] * m
        down = [0] * m
        for i in range(m):
            for j in range(m):
                if i != j and leq(elements[i], elements[j]):
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        return cls(elements, up, down, ranks)

    @classmethod
    def from_subset_masks(cls, elements, masks, ranks=None):
        """Order by containment of the given per-element bitmasks."""
        m = len(elements)
        order = sorted(range(m), key=lambda i: masks[i].bit_count())
        up = [0] * m
        down = [0] * m
        for a in range(m):
            i = order[a]
            mi = masks[i]
            for b in range(a + 1, m):
                j = order[b]
                if mi & ~masks[j] == 0 and mi != masks[j]:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        return cls(elements, up, down, ranks)

    def __len__(self):
        return len(self.elements)

    def leq(self, x, y):
        i, j = self.index[x], self.index[y]
        return i == j or bool(self.up[i] & (1 << j))

    def covers(self):
        """Irredundant cover pairs (i, j) with j covering i."""
        if self._covers is None:
            out = []
            for i in range(len(self.elements)):
                ups = self.up[i]
                while ups:
                    low = ups & -ups
                    ups ^= low
                    j = low.bit_length() - 1
                    if self.up[i] & self.down[j] == 0:
                        out.append((i, j))
            self._covers = out
        return self._covers

    def minimal_indices(self):
        return [i for i in range(len(self.elements)) if not self.down[i]]

    def maximal_indices(self):
        return [i for i in range(len(self.elements)) if not self.up[i]]

    def interval_mask(self, i, j):
        """Closed interval [i, j] as an index bitmask."""
        return (self.up[i] & self.down[j]) | (1 << i) | (1 << j)

    def is_graded_by_ranks(self):
        if self.ranks is None:
            return False
        return all(self.ranks[j] == self.ranks[i] + 1
                   for i, j in self.covers())

    def mobius(self, i, j):
        """Mobius function by recursive summation with memoization."""
        if i == j:
            return 1
        if not self.up[i] & (1 << j):
            return 0
        key = (i, j)
        v = self._mobius_cache.get(key)
        if v is None:
            v = -self.mobius(i, i)
            below = self.up[i] & self.down[j]
            while below:
                low = below & -below
                below ^= low
                v -= self.mobius(i, low.bit_length() - 1)
            self._mobius_cache[key] = v
        return v

    def adjoin_min(self, label=ZERO_HAT):
        """New poset with an artificial minimum below everything."""
        if label in self.index:
            raise ValueError("label already present")
        m = len(self.elements)
        all_old = ((1 << m) - 1) << 1  # old indices shift by one
        up = [all_old] + [u << 1 for u in self.up]
        down = [0] + [(d << 1) | 1 for d in self.down]
        ranks = None
        if self.ranks is not None:
            base = min(self.ranks, default=0) - 1
            ranks = [base] + list(self.ranks)
        return Poset([label] + self.elements, up, down, ranks)

    def to_json(self, label=str):
        return {
            "elements": [label(e) for e in self.elements],
            "ranks": self.ranks,
            "covers": [[i, j] for i, j in sorted(self.covers())],
        }

    def to_dot(self, label=str, name="poset"):
        lines = [f"digraph {name} {{", "  rankdir=BT;",
                 "  node [shape=box, fontsize=10];"]
        for i, e in enumerate(self.elements):
            lab = label(e).replace('"', r"\"")
            lines.append(f'  n{i} [label="{lab}"];')
        for i, j in sorted(self.covers()):
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _pair_index_map(n):
    pairs = {}
    idx = 0
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            pairs[mask_of((x, y))] = idx
            idx += 1
    return pairs


def _bases_bitmask(N, pair_idx):
    m = 0
    for b in N.to_matroid().bases:
        m |= 1 << pair_idx[b]
    return m


def rank2_label(N, k=None):
    ivs = ",".join(f"[{a},{b}]" for a, b in N.intervals_ab())
    s = f"L={{{','.join(map(str, N.loops_set()))}}} I={{{ivs}}}"
    if k is not None:
        st = N.stats(k)
        s += f" d={st.d} c={st.c}"
    return s


@lru_cache(maxsize=None)
def build_q_poset(n):
    """Q_{n,2}: all rank-2 positroids on [n], ordered by basis containment."""
    if n < 3:
        raise ValueError("need n >= 3")
    elements = enumerate_rank2_positroids(n)
    pair_idx = _pair_index_map(n)
    masks = [_bases_bitmask(N, pair_idx) for N in elements]
    return Poset.from_subset_masks(elements, masks)


@lru_cache(maxsize=None)
def build_face_poset(n, k):
    """P_{n,k}: the e >= 0 slice of Q_{n,2}, rank label d(N)."""
    elements = enumerate_face_poset_elements(n, k)
    pair_idx = _pair_index_map(n)
    masks = [_bases_bitmask(N, pair_idx) for N in elements]
    ranks = [N.stats(k).d for N in elements]
    return Poset.from_subset_masks(elements, masks, ranks)


def upper_ideal_check(n, k):
    """No element of Q_{n,2} above a face-poset element escapes P_{n,k}."""
    Q = build_q_poset(n)
    in_p = [N.loops.bit_count() + N.t_mask().bit_count() <= k
            for N in Q.elements]
    for i, ok in enumerate(in_p):
        if not ok:
            continue
        ups = Q.up[i]
        while ups:
            low = ups & -ups
            ups ^= low
            if not in_p[low.bit_length() - 1]:
                return False
    return True


def corank_gf_closed(n, k):
    """Coefficients of sum_{c<=k} C(n,c) t^c (1+t)^c, ascending."""
    coeffs = [0] * (2 * k + 1)
    for c in range(k + 1):
        b = comb(n, c)
        for j in range(c + 1):
            coeffs[c + j] += b * comb(c, j)
    return coeffs


def corank_gf_from_poset(P):
    """Corank distribution of a face poset, ascending by corank."""
    top = max(P.ranks)
    coeffs = [0] * (top + 1)
    for d in P.ranks:
        coeffs[top - d] += 1
    return coeffs


def is_eulerian(hp):
    """Every interval of rank >= 2 balances even- and odd-rank elements.

    Expects a graded poset with unique minimum and maximum (e.g. a face
    poset with an adjoined 0hat).  Returns (flag, witness_interval).
    """
    if hp.ranks is None or not hp.is_graded_by_ranks():
        raise ValueError("Eulerian check needs a graded, ranked poset")
    if len(hp.minimal_indices()) != 1 or len(hp.maximal_indices()) != 1:
        raise ValueError("Eulerian check needs unique 0hat and 1hat")
    m = len(hp.elements)
    even = 0
    for i in range(m):
        if hp.ranks[i] % 2 == 0:
            even |= 1 << i
    odd = ((1 << m) - 1) ^ even
    for i in range(m):
        ups = hp.up[i]
        while ups:
            low = ups & -ups
            ups ^= low
            j = low.bit_length() - 1
            if hp.ranks[j] - hp.ranks[i] < 2:
                continue
            iv = hp.interval_mask(i, j)
            if (iv & even).bit_count() != (iv & odd).bit_count():
                return False, (hp.elements[i], hp.elements[j])
    return True, None


def is_thin(hp):
    """Every closed interval of rank 2 has exactly 4 elements."""
    if hp.ranks is None or not hp.is_graded_by_ranks():
        raise ValueError("thinness check needs a graded, ranked poset")
    for i in range(len(hp.elements)):
        ups = hp.up[i]
        while ups:
            low = ups & -ups
            ups ^= low
            j = low.bit_length() - 1
            if hp.ranks[j] - hp.ranks[i] == 2:
                if hp.interval_mask(i, j).bit_count() != 4:
                    return False, (hp.elements[i], hp.elements[j])
    return True, None


def mobius_eulerian_check(hp):
    """Independent Eulerian test: mu(x, y) == (-1)^(rk y - rk x) everywhere."""
    for i in range(len(hp.elements)):
        ups = hp.up[i]
        while ups:
            low = ups & -ups
            ups ^= low
            j = low.bit_length() - 1
            if hp.mobius(i, j) != (-1) ** (hp.ranks[j] - hp.ranks[i]):
                return False, (hp.elements[i], hp.elements[j])
    return True, None


# -- flip involution certificate ---------------------------------------


def _strip_loops(N):
    """Delete the loops of N and relabel the ground set to [n - |L|]."""
    keep = [e for e in range(1, N.n + 1) if not N.loops & (1 << (e - 1))]
    relabel = {e: i + 1 for i, e in enumerate(keep)}
    t_new = mask_of(relabel[e] for e in N.t_set())
    return from_loops_and_t(len(keep), 0, t_new)


def flip_involution_check(N, k, P=None):
    """Certify parity balance of the interval [0hat, N] by the flip map.

    N must be loopless (strip loops first; the interval is isomorphic
    to one in a smaller face poset).  On the principal lower ideal of N
    the map flipping the smallest flippable element between loop set
    and T is a rank-parity-reversing involution on non-rigid elements;
    there must be exactly one rigid element, loop-set the union of the
    intervals minus their left endpoints, of even rank.  Returns the
    certificate record; raises if any structural claim fails.
    """
    if N.loops:
        raise ValueError("flip certificate requires a loopless element; "
                         "strip loops first")
    n, r = N.n, N.r
    if P is None:
        P = build_face_poset(n, k)
    i0 = P.index[N]
    ideal = [P.elements[j] for j in _bits(P.down[i0])] + [N]
    in_ideal = {Np: True for Np in ideal}

    def flipped(Np, e):
        bit = 1 << (e - 1)
        if Np.loops & bit:
            return from_loops_and_t(n, Np.loops ^ bit, Np.t_mask() | bit)
        return from_loops_and_t(n, Np.loops | bit, Np.t_mask() ^ bit)

    def flippable(Np):
        return [e for e in elems_of(Np.support_mask())
                if in_ideal.get(flipped(Np, e), False)]

    rigid = []
    for Np in ideal:
        fl = flippable(Np)
        t_elems = set(Np.t_set())
        if not t_elems.issubset(fl):
            raise AssertionError(f"T element of {Np!r} is not flippable")
        if not fl:
            rigid.append(Np)
            continue
        e = fl[0]
        Nq = flipped(Np, e)
        if flippable(Nq) != fl:
            raise AssertionError("flippable set changed across a flip")
        if flipped(Nq, e) != Np:
            raise AssertionError("flip is not an involution")
        if (Np.stats(k).d - Nq.stats(k).d) % 2 == 0:
            raise AssertionError("flip failed to reverse rank parity")

    expected_loops = 0
    for s, ln in N.intervals:
        expected_loops |= sum(
            1 << ((s - 1 + i) % n) for i in range(1, ln))
    expected = from_loops_and_t(n, expected_loops, 0)
    if set(rigid) != {expected}:
        raise AssertionError(f"rigid elements {rigid} != {expected!r}")
    if expected.stats(k).d % 2:
        raise AssertionError("rigid element has odd rank")

    # balance of [0hat, N]: non-rigid elements pair across parities, the
    # rigid one is even, 0hat sits at odd rank -1
    signed = sum(-1 if Np.stats(k).d % 2 else 1 for Np in ideal)
    balanced = signed == 1
    return {"balanced": balanced, "ideal_size": len(ideal),
            "rigid": expected, "signed_sum": signed}


def flip_certificate(N, k):
    """Flip certificate for any N in P_{n,k}, reducing loops first.

    For N with loop set of size k (a minimal element) the interval is
    a two-chain and trivially balanced.
    """
    nl = N.loops.bit_count()
    if nl == 0:
        return flip_involution_check(N, k)
    if nl == k:
        assert not N.intervals
        return {"balanced": True, "ideal_size": 1, "rigid": N,
                "signed_sum": 1}
    reduced = _strip_loops(N)
    rec = flip_involution_check(reduced, k - nl)
    # the loop-stripping bijection preserves rank labels
    P = build_face_poset(N.n, k)
    i0 = P.index[N]
    sizes = {}
    for j in _bits(P.down[i0] | (1 << i0)):
        d = P.ranks[j]
        sizes[d] = sizes.get(d, 0) + 1
    Pr = build_face_poset(reduced.n, k - nl)
    j0 = Pr.index[reduced]
    sizes_r = {}
    for j in _bits(Pr.down[j0] | (1 << j0)):
        d = Pr.ranks[j]
        sizes_r[d] = sizes_r.get(d, 0) + 1
    if sizes != sizes_r:
        raise AssertionError("loop reduction changed the interval profile")
    return rec


def _bits(mask):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


# -- closure order and facets ------------------------------------------


def closure_poset_check(n, k):
    """Lift monotonicity: N' <= N implies lift(N') <= lift(N), all pairs."""
    P = build_face_poset(n, k)
    from .cyclic import k_subset_masks

    sub_idx = {m: i for i, m in enumerate(k_subset_masks(n, k))}
    lift_masks = []
    for N in P.elements:
        m = 0
        for b in lift_up(N, k).bases:
            m |= 1 << sub_idx[b]
        lift_masks.append(m)
    for i in range(len(P.elements)):
        ups = P.up[i]
        while ups:
            low = ups & -ups
            ups ^= low
            j = low.bit_length() - 1
            if lift_masks[i] & ~lift_masks[j]:
                return False
    return True


def facet_indices(N, Nprime, k):
    """All hyperplane indices a whose necklace entries separate N' < N.

    For each returned a the necklace entries differ and I'_a >_a I_a
    strictly in Gale order (certified); equivalently, I_a is not a
    basis of N', so the twistor with label I_a vanishes on the stratum
    of N'.
    """
    if not _strictly_below(Nprime, N):
        raise ValueError("expected N' strictly below N")
    n = N.n
    ent = necklace(N.to_matroid()).entries
    entp = necklace(Nprime.to_matroid()).entries
    out = []
    for a in range(1, n + 1):
        Ia, Ipa = ent[a - 1], entp[a - 1]
        if Ia == Ipa:
            continue
        if not gale_leq(Ia, Ipa, a, n):
            raise AssertionError("necklace entry failed to increase")
        if Nprime.to_matroid().has_basis(Ia):
            raise AssertionError("differing entry still a basis below")
        out.append(a)
    return out


def facet_hyperplane_assignment(N, Nprime, k):
    """Smallest a with closure(stratum of N') inside {<I_a> = 0}.

    N' must be a cocover of N in P_{n,k} (strictly below with rank gap
    one); in a graded poset that is exactly the cover condition.
    """
    st, stp = N.stats(k), Nprime.stats(k)
    if stp.d != st.d - 1:
        raise ValueError("N' is not a cocover of N (rank gap != 1)")
    out = facet_indices(N, Nprime, k)
    if not out:
        raise AssertionError("no separating necklace entry found")
    return out[0]


def stratum_in_facet(N, Nprime, a):
    """Whether the (closed) stratum of N' lies in F_a of N.

    True when N' <= N and the necklace entry I_a of N is not a basis
    of N', which forces the twistor with label I_a to vanish on the
    stratum of N'.
    """
    if not (Nprime == N or _strictly_below(Nprime, N)):
        return False
    Ia = necklace(N.to_matroid()).entries[a - 1]
    return not Nprime.to_matroid().has_basis(Ia)


def _strictly_below(Nprime, N):
    bp = set(Nprime.to_matroid().bases)
    b = set(N.to_matroid().bases)
    return bp < b

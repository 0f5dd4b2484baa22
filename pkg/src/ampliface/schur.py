"""Schur-function calculus for positroid classes and codimension counts.

Partitions are tuples of weakly decreasing positive integers.  Schur
expansions are nonnegative-integer combinations of Schur functions;
products are computed by Littlewood-Richardson strip insertion (chains
of horizontal strips subject to the cumulative ballot condition), and
Pieri multiplications by direct strip enumeration.

The two class families: the rank-k lift of a rank-2 positroid N has
class h_{n-k}^{|L|} * prod_i s_rect(d_i rows, n-k-1 cols); the rank-2
stratum itself has class e_2^{|L|} * prod_i h_{d_i}.  Codimension under
a generic projection is the minimum over the (boxed) support of
r_m(lam) = sum_i max(lam_i - (n-k-m), 0).  Box truncation is always an
explicit, separate step.
"""


def check_partition(p):
    p = tuple(p)
    if any(a < b for a, b in zip(p, p[1:])) or (p and p[-1] <= 0):
        raise ValueError(f"not a partition (trailing zeros trimmed): {p}")
    return p


def transpose_partition(p):
    if not p:
        return ()
    return tuple(sum(1 for a in p if a > i) for i in range(p[0]))


def fits_box(p, rows, cols):
    return len(p) <= rows and (not p or p[0] <= cols)


def partitions_of(size, max_part=None):
    """All partitions of `size` with parts at most `max_part`."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, first):
            yield (first,) + rest


def horizontal_strips(lam, r):
    """Partitions mu >= lam with mu/lam a horizontal strip of size r."""
    lam = tuple(lam)
    rows = len(lam) + 1
    out = []

    def gen(i, left, acc):
        if i == rows:
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        base = lam[i] if i < len(lam) else 0
        # no two added boxes share a column: mu_i <= lam_{i-1}
        hi = base + left if i == 0 else min(lam[i - 1], base + left)
        for v in range(base, hi + 1):
            gen(i + 1, left - (v - base), acc + [v])

    gen(0, r, [])
    return out


def vertical_strips(lam, r):
    """Partitions mu >= lam with mu/lam a vertical strip of size r."""
    lam = tuple(lam)
    out = []

    def gen(i, left, acc):
        if i == len(lam):
            # below lam only rows of a single box remain
            out.append(tuple(acc) + (1,) * left)
            return
        for add in (0, 1):
            if add > left:
                continue
            v = lam[i] + add
            if acc and v > acc[-1]:
                continue
            gen(i + 1, left - add, acc + [v])

    gen(0, r, [])
    return out


def lr_product_coeffs(lam, mu):
    """Schur expansion of s_lam * s_mu as {nu: coefficient}.

    Enumerates chains of horizontal strips over the rows of mu subject
    to the ballot condition in cumulative form: after placing value t,
    the number of t's in rows 1..R never exceeds the number of (t-1)'s
    in rows 1..R-1.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if len(lam) < len(mu):  # fewer strip stages when mu is the shorter factor
        lam, mu = mu, lam
    out = {}

    def place(step, shape, prev_cum):
        if step == len(mu):
            out[shape] = out.get(shape, 0) + 1
            return
        size = mu[step]
        rows = len(shape) + 1

        def gen(i, left, acc, cum):
            if i == rows:
                if left == 0:
                    new_shape = tuple(x for x in acc if x)
                    run = 0
                    new_cum = []
                    for r, v in enumerate(acc):
                        run += v - (shape[r] if r < len(shape) else 0)
                        new_cum.append(run)
                    place(step + 1, new_shape, tuple(new_cum))
                return
            base = shape[i] if i < len(shape) else 0
            hi = base + left if i == 0 else min(shape[i - 1], base + left)
            if step > 0:
                if i == 0:
                    bound = 0
                elif i - 1 < len(prev_cum):
                    bound = prev_cum[i - 1]
                else:
                    bound = prev_cum[-1]
                hi = min(hi, base + bound - cum)
            for v in range(base, hi + 1):
                gen(i + 1, left - (v - base), acc + [v], cum + v - base)

        gen(0, size, [], 0)

    place(0, lam, ())
    return out


class SchurExpansion:
    """A finite nonnegative-integer combination of Schur functions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        d = dict(coeffs)
        for p, c in list(d.items()):
            check_partition(p)
            if c < 0:
                raise ValueError("negative Schur coefficient")
            if c == 0:
                del d[p]
        self.coeffs = d

    @classmethod
    def single(cls, p, c=1):
        return cls({check_partition(p): c})

    @classmethod
    def one(cls):
        return cls({(): 1})

    def support(self):
        return set(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Common size of the support partitions (must be homogeneous)."""
        sizes = {sum(p) for p in self.coeffs}
        if len(sizes) != 1:
            raise ValueError("expansion is not homogeneous")
        return sizes.pop()

    def times_h(self, r):
        out = {}
        for p, c in self.coeffs.items():
            for q in horizontal_strips(p, r):
                out[q] = out.get(q, 0) + c
        return SchurExpansion(out)

    def times_e(self, r):
        out = {}
        for p, c in self.coeffs.items():
            for q in vertical_strips(p, r):
                out[q] = out.get(q, 0) + c
        return SchurExpansion(out)

    def times_schur(self, mu):
        mu = check_partition(mu)
        out = {}
        for p, c in self.coeffs.items():
            for q, c2 in lr_product_coeffs(p, mu).items():
                out[q] = out.get(q, 0) + c * c2
        return SchurExpansion(out)

    def transpose(self):
        return SchurExpansion(
            {transpose_partition(p): c for p, c in self.coeffs.items()})

    def truncate_box(self, rows, cols):
        """Keep only partitions inside a rows x cols box (explicit step)."""
        return SchurExpansion(
            {p: c for p, c in self.coeffs.items() if fits_box(p, rows, cols)})

    def render(self):
        """Terms as 'c * s[..]', graded reverse-lexicographic order."""
        if not self.coeffs:
            return "0"
        keys = sorted(self.coeffs, key=lambda p: (sum(p), tuple(-x for x in p)))
        return " + ".join(
            f"{self.coeffs[p]} * s[{','.join(map(str, p))}]" for p in keys)

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return f"SchurExpansion({self.render()})"


def pieri_h(expansion, r):
    """Multiply by the complete homogeneous h_r (horizontal strips)."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return expansion.times_h(r)


def pieri_e(expansion, r):
    """Multiply by the elementary e_r (vertical strips)."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return expansion.times_e(r)


def lr_product(lam, mu):
    """s_lam * s_mu as a SchurExpansion."""
    return SchurExpansion(lr_product_coeffs(lam, mu))


def r_reduction(lam, cap):
    """r_m statistic: total excess of the parts over the column cap."""
    return sum(max(x - cap, 0) for x in lam)


def class_of_lift(N, k, n, truncate=False):
    """Schur class of the rank-k lift of N in the (n-k)^k ambient box.

    The product h_{n-k}^{|L|} * prod_i s_{(n-k-1)^{d_i}} with
    d_i = (interval class size) - 1.  With truncate=True the result is
    cut to the (n-k)^k box.
    """
    if not N.in_face_poset(k):
        raise ValueError(f"{N!r} not in the face poset for k={k}")
    exp = SchurExpansion.one()
    for _ in range(N.loops.bit_count()):
        exp = exp.times_h(n - k)
    for d in N.d_list():
        exp = exp.times_schur((n - k - 1,) * d)
    if truncate:
        exp = exp.truncate_box(k, n - k)
    return exp


def class_of_lift_transposed_route(N, k, n):
    """Same class via the dual: transpose of e_{n-k}^{|L|} prod s_{(d_i)^{n-k-1}}."""
    exp = SchurExpansion.one()
    for _ in range(N.loops.bit_count()):
        exp = exp.times_e(n - k)
    for d in N.d_list():
        exp = exp.times_schur((d,) * (n - k - 1))
    return exp.transpose()


def codim_from_class(expansion, n, k, m):
    """Codimension of the image under a generic projection to Gr(k,k+m).

    Requires a homogeneous expansion supported in the (n-k)^k box;
    returns min over the support of r_m.
    """
    if expansion.is_zero():
        raise ValueError("empty support")
    expansion.degree()
    for p in expansion.coeffs:
        if not fits_box(p, k, n - k):
            raise ValueError(f"support not inside the {n - k}^{k} box: {p}")
    return min(r_reduction(p, n - k - m) for p in expansion.coeffs)


def class_of_stratum(N, n):
    """Schur class of the rank-2 stratum: e_2^{|L|} * prod_i h_{d_i}."""
    exp = SchurExpansion.one()
    for _ in range(N.loops.bit_count()):
        exp = exp.times_e(2)
    for d in N.d_list():
        exp = exp.times_h(d)
    return exp


def minimizer_partition(N, k, n):
    """|L| parts n-k and sum(d_i) parts n-k-1; realizes the codimension."""
    nl = N.loops.bit_count()
    sd = sum(N.d_list())
    return check_partition((n - k,) * nl + (n - k - 1,) * sd)


def residual_member(N, n, k):
    """Residual-arrangement membership for N outside the face poset.

    Conditions: (a) c(N) <= 2k, (b) a := k - |L| >= 0, and (c) every
    d_i <= a.  Raises when N is in the face poset.
    """
    st = N.stats(k)
    if st.e >= 0:
        raise ValueError("residual classification applies outside the face poset")
    a = k - N.loops.bit_count()
    return st.c <= 2 * k and a >= 0 and all(d <= a for d in N.d_list())


def residual_member_by_class(N, n, k):
    """Oracle route: stratum class truncated to the 2 x k box is nonzero."""
    st = N.stats(k)
    if st.e >= 0:
        raise ValueError("residual classification applies outside the face poset")
    return not class_of_stratum(N, n).truncate_box(2, k).is_zero()

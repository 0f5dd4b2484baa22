"""Exact rational verification of twistor-coordinate statements.

Positive matrices come from Vandermonde rows at increasing rational
nodes.  Points of a totally nonnegative cell are sampled through the
dual construction: realize the dual matroid by repeating positively
scaled columns of a totally positive core (zero columns at loops),
twist column signs alternately, and take the orthogonal complement;
Plucker coordinates of the complement are proportional to the
complementary minors of the dual point, so the sample self-certifies
via exact minor assertions.

Twistor coordinates are computed by both the bilinear formula
    <I> = sum_K Delta_K(C) * Delta_{K I}(Z)
and the concatenated-determinant formula det(C Z; Z_{i_1}; ...), and
the two are asserted equal entry by entry.
"""

from fractions import Fraction
from random import Random

from .cyclic import elems_of, full_mask, k_subset_masks, mask_of
from .linalg import (
    RationalMatrix,
    det_bareiss,
    matroid_of_columns,
    merge_sign,
    pluckers_cols,
    pluckers_rows,
)
from .matroid import necklace
from .rank2 import lift_up, from_loops_and_t


class TwistorUndefinedError(ValueError):
    """The rational map is undefined: the row span meets ker(Z)."""


class SignVanishedError(AssertionError):
    """A twistor asserted never to vanish came out zero."""


def _child_rng(seed, i):
    return Random(seed * 1_000_003 + i)


def vandermonde_matrix(nodes, width):
    """Rows (1, x, x^2, ..., x^{width-1}) at strictly increasing nodes > 0."""
    nodes = [Fraction(x) for x in nodes]
    if any(x <= 0 for x in nodes):
        raise ValueError("nodes must be positive")
    if any(a >= b for a, b in zip(nodes, nodes[1:])):
        raise ValueError("nodes must be strictly increasing")
    return RationalMatrix([[x ** j for j in range(width)] for x in nodes])


def positive_Z(n, k, m, seed):
    """An n x (k+m) matrix with all maximal minors positive.

    Vandermonde rows at distinct random rationals in (0, 100); 20
    random maximal minors are checked exactly on top of the structural
    guarantee.
    """
    if k + m > n:
        raise ValueError("need k + m <= n")
    rng = Random(seed)
    nodes = sorted(Fraction(v, 128) for v in rng.sample(range(1, 12800), n))
    Z = vandermonde_matrix(nodes, k + m)
    rows = list(range(1, n + 1))
    for _ in range(20):
        pick = sorted(rng.sample(rows, k + m))
        minor = det_bareiss([list(Z.rows[i - 1]) for i in pick])
        assert minor > 0, "positive matrix failed a minor check"
    return Z


def standard_form_Z(n, k, m):
    """Identity in the first k+m rows, zero rows below (full rank)."""
    w = k + m
    return RationalMatrix(
        [[1 if i == j else 0 for j in range(w)] for i in range(w)]
        + [[0] * w for _ in range(n - w)])


def psi_image(Y, Z, m):
    """Twistor vector of Y in Gr(k, k+m) under Z: concatenated dets."""
    n = Z.nrows
    k = Y.nrows
    if Y.ncols != k + m or Z.ncols != k + m:
        raise ValueError("shape mismatch")
    out = {}
    for mask in k_subset_masks(n, m):
        rows = [list(r) for r in Y.rows]
        rows.extend(list(Z.rows[i - 1]) for i in elems_of(mask))
        out[mask] = det_bareiss(rows)
    return out


def twistor_vector(C, Z, m):
    """All twistor coordinates <I>, |I| = m, of the point C under Z.

    Computed by the bilinear sum over Plucker pairs and by the
    determinant form; asserted equal.  Raises TwistorUndefinedError
    when the projected point C*Z drops rank.
    """
    k, n = C.nrows, C.ncols
    if Z.nrows != n or Z.ncols != k + m:
        raise ValueError("Z must be n x (k+m)")
    pl_c = pluckers_cols(C)
    if all(v == 0 for v in pl_c.values()):
        raise ValueError("C does not have full row rank")
    Y = C.matmul(Z)
    if Y.rank() < k:
        raise TwistorUndefinedError("row span of C meets the kernel of Z")
    pl_z = pluckers_rows(Z)
    det_form = psi_image(Y, Z, m)
    out = {}
    for mask in k_subset_masks(n, m):
        i_elems = elems_of(mask)
        total = Fraction(0)
        for kmask, dk in pl_c.items():
            if dk == 0 or kmask & mask:
                continue
            total += dk * merge_sign(elems_of(kmask), i_elems) * pl_z[kmask | mask]
        assert total == det_form[mask], "twistor formulas disagree"
        out[mask] = total
    return out


def projectively_equal(u, v):
    """Equality of coordinate dictionaries up to one nonzero scalar."""
    keys = sorted(u)
    if keys != sorted(v):
        return False
    ratio = None
    for key in keys:
        a, b = u[key], v[key]
        if (a == 0) != (b == 0):
            return False
        if a != 0:
            r = b / a
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return ratio is not None


# -- sampling totally nonnegative cell points ---------------------------


def _twist_alternating(M):
    return M.scale_cols([Fraction(-1) ** j for j in range(M.ncols)])


def sample_cell_point(N, k, seed):
    """A k x n rational matrix in the open nonnegative cell of the lift.

    Dual-point construction with alternating-sign complement; the
    output is normalized so its nonzero Pluckers are positive, and all
    postconditions (minor sign pattern equals the lift matroid) are
    asserted exactly.
    """
    if not N.in_face_poset(k):
        raise ValueError(f"{N!r} is not in the face poset for k={k}")
    n = N.n
    # rotate so no interval wraps past n
    shift = 0
    for s, ln in N.intervals:
        if s - 1 + ln > n:
            shift = n - (s - 1)
            break
    Nr = N.rotate(shift) if shift else N
    C = _sample_unwrapped(Nr, k, seed)
    for _ in range(shift):
        # inverse of the relabel x -> x + shift: shift columns left by one,
        # wrapped column picks up the cyclic sign twist
        cols = [C.col(j) for j in range(n)]
        sign = Fraction(-1) ** (k - 1)
        cols = cols[1:] + [tuple(sign * x for x in cols[0])]
        C = RationalMatrix(list(zip(*cols)))
    C = _normalize_positive(C)
    _assert_cell_point(C, N, k)
    return C


def _sample_unwrapped(N, k, seed):
    n = N.n
    rng = _child_rng(seed, 0)
    grouped = {}
    for i, m in enumerate(N.class_masks()):
        for e in elems_of(m):
            grouped[e] = i
    nonloops = elems_of(full_mask(n) & ~N.loops)
    # number the classes by first occurrence along 1..n
    cls_of = {}
    renum = {}
    for e in nonloops:
        key = ("iv", grouped[e]) if e in grouped else ("single", e)
        if key not in renum:
            renum[key] = len(renum)
        cls_of[e] = renum[key]
    p = len(renum)
    # class indices are weakly increasing along 1..n once nothing wraps
    order = [cls_of[e] for e in nonloops]
    assert order == sorted(order), "classes out of cyclic position order"
    nodes = sorted(Fraction(v, 64) for v in rng.sample(range(1, 6400), p))
    core_cols = [[x ** i for i in range(n - k)] for x in nodes]
    cols = []
    for e in range(1, n + 1):
        if N.loops & (1 << (e - 1)):
            cols.append([Fraction(0)] * (n - k))
        else:
            w = Fraction(rng.randint(1, 1 << 10))
            cols.append([w * v for v in core_cols[cls_of[e]]])
    dual_point = RationalMatrix(list(zip(*cols)))
    kernel = _twist_alternating(dual_point).nullspace()
    assert len(kernel) == k
    return RationalMatrix(kernel)


def _normalize_positive(C):
    pl = pluckers_cols(C)
    nonzero = [v for v in pl.values() if v != 0]
    if all(v < 0 for v in nonzero):
        C = RationalMatrix([[-x for x in C.rows[0]]] + [list(r) for r in C.rows[1:]])
    return C


def _assert_cell_point(C, N, k):
    lift = lift_up(N, k)
    pl = pluckers_cols(C)
    for mask, v in pl.items():
        if lift.has_basis(mask):
            assert v > 0, "lift basis minor not positive"
        else:
            assert v == 0, "non-basis minor not zero"


def sample_top_cell(n, k, seed):
    """A totally positive k x n matrix (the interval-free loopless cell)."""
    return sample_cell_point(from_loops_and_t(n, 0, 0), k, seed)


# -- verification reports -----------------------------------------------


def verify_zero_pattern(N, k, Z, seed, samples=20):
    """Zero pattern of twistors on sampled cell points of the lift of N.

    For every sample: twistors vanish outside the bases of N, and the
    necklace twistors of N are nonzero.
    """
    n = N.n
    bases = set(N.to_matroid().bases)
    neck = necklace(N.to_matroid()).entries
    zero_ok = True
    neck_ok = True
    for i in range(samples):
        C = sample_cell_point(N, k, seed * 997 + i)
        tv = twistor_vector(C, Z, 2)
        for mask, v in tv.items():
            if mask not in bases and v != 0:
                zero_ok = False
        if any(tv[e] == 0 for e in neck):
            neck_ok = False
    return {
        "cell": N.to_json(),
        "k": k,
        "samples": samples,
        "zero_pattern_ok": zero_ok,
        "necklace_nonzero_ok": neck_ok,
        "ok": zero_ok and neck_ok,
    }


def verify_sign_constancy(N, k, Z, trials, seed):
    """Necklace-twistor signs across independent samples of one cell.

    Samples are normalized (nonzero Pluckers positive), so the twistor
    sign vector is well defined per point; it must not depend on the
    sample.  A zero twistor raises SignVanishedError.
    """
    neck = necklace(N.to_matroid()).entries
    sign_vector = None
    constant = True
    for i in range(trials):
        C = sample_cell_point(N, k, seed * 1013 + i)
        tv = twistor_vector(C, Z, 2)
        signs = []
        for e in neck:
            v = tv[e]
            if v == 0:
                raise SignVanishedError(
                    f"necklace twistor {elems_of(e)} vanished on a sample")
            signs.append(1 if v > 0 else -1)
        if sign_vector is None:
            sign_vector = signs
        elif signs != sign_vector:
            constant = False
    return {
        "cell": N.to_json(),
        "k": k,
        "trials": trials,
        "sign_vector": sign_vector,
        "constant": constant,
    }


def sign_flip_report(C, Z):
    """Sign flips along the twistor sequence <1 2>, <1 3>, ..., <1 n>.

    Zeros are reported as boundary positions and excluded from the
    count.
    """
    n = C.ncols
    tv = twistor_vector(C, Z, 2)
    seq = [tv[mask_of((1, j))] for j in range(2, n + 1)]
    zeros = [j for j, v in zip(range(2, n + 1), seq) if v == 0]
    nonzero = [v for v in seq if v != 0]
    flips = sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))
    return {"flips": flips, "zeros": zeros}


def sign_flip_count(C, Z):
    """Flip count of (<1 2>, ..., <1 n>); zeros are a hard error."""
    rep = sign_flip_report(C, Z)
    if rep["zeros"]:
        raise SignVanishedError(f"zero twistors at positions {rep['zeros']}")
    return rep["flips"]


def injectivity_probe(Z, k, samples, seed):
    """Distinct random points of Gr(k, k+m) keep distinct twistor images.

    Returns a report with any collision witnesses (projective equality
    of images of projectively distinct points).
    """
    n, w = Z.nrows, Z.ncols
    m = w - k
    rng = Random(seed)
    points = []
    while len(points) < samples:
        Y = RationalMatrix(
            [[rng.randint(-50, 50) for _ in range(w)] for _ in range(k)])
        pl = pluckers_cols(Y)
        if all(v == 0 for v in pl.values()):
            continue
        points.append((Y, pl))
    collisions = []
    images = [psi_image(Y, Z, m) for Y, _ in points]
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if projectively_equal(points[i][1], points[j][1]):
                continue  # same Grassmannian point twice: skip
            if projectively_equal(images[i], images[j]):
                collisions.append((i, j))
    return {"samples": samples, "collisions": collisions,
            "ok": not collisions}

"""Dihedral similarity types of quiddity sequences (hence of frieze patterns).

Two quiddity sequences of length n are similar when one is a rotation of
the other or of its reversal; the orbits of this dihedral action are the
similarity types, and K_n counts them.  Reflection acts as index reversal
i -> n-1-i (any reflection generates the same group together with the
rotations; reversal is the one whose fixed sequences are counted by S_n).

Counting machinery:

* T_n = C_{n-2} quiddity sequences of length n (Catalan), S_n of them
  reversal-fixed (0 for even n, C_{m-1} for n = 2m+1), A_n = (T_n - S_n)/2
  unordered {a, reversal} pairs.
* Every triangulation has a unique central triangle or central diameter;
  its boundary arcs form a *perfect tri-partition* (i, j, k) of n:
  (m, m, 0) plus all i <= m-1 partitions when n = 2m, all i <= m
  partitions when n = 2m+1.  Gluing orbit data of the three (or two)
  sub-polygons yields a closed count N(i, j, k) per partition, and
  K_n is the sum over all perfect tri-partitions.
* The same gluing, run over actual sequences instead of counts, enumerates
  one representative per type; a brute force over all triangulations is
  kept alongside as the oracle.

The ternary composition law sits underneath: given quiddity sequences a,
b, c of an (i+1)-, (j+1)- and (k+1)-gon arranged counterclockwise around a
central triangle, the glued n-gon has quiddity

    (a0+c_w+1, a1, ..., a_{u-1}, a_u+b0+1, b1, ..., b_{v-1}, b_v+c0+1,
     c1, ..., c_{w-1})

with the three +1s contributed by the central triangle itself.  A central
diameter (k = 0) glues two sequences the same way without the +1s, and a
degenerate 2-gon arm (k = 1) enters as the placeholder (0, 0).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from . import eta, polygons
from .errors import InvalidSequenceError

DEGENERATE = (0, 0)
DEFAULT_BRUTE_CAP = 14

SYMMETRIC = "symmetric"
PSEUDO_SYMMETRIC = "pseudo-symmetric"
ASYMMETRIC = "asymmetric"


def brute_cap() -> int:
    """Default cap on brute-force enumeration; FRIEZE_BRUTE_CAP overrides."""
    value = os.environ.get("FRIEZE_BRUTE_CAP")
    return int(value) if value else DEFAULT_BRUTE_CAP


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class OrbitCanon:
    """Least dihedral image of a sequence plus the size of its orbit."""

    canon: tuple
    orbit_size: int


@dataclass(frozen=True)
class SeqClassification:
    period: int
    category: str


@dataclass(frozen=True)
class TriPartition:
    i: int
    j: int
    k: int
    case: str

    def parts(self):
        return (self.i, self.j, self.k)


def dihedral_images(entries):
    """All 2n images of the sequence under rotations and reversal."""
    seq = tuple(entries)
    n = len(seq)
    doubled = seq + seq
    for t in range(n):
        yield doubled[t:t + n]
    rev = seq[::-1]
    doubled = rev + rev
    for t in range(n):
        yield doubled[t:t + n]


def canonical_form(entries) -> tuple:
    """Lexicographically least among all rotations of the sequence and its reversal."""
    seq = tuple(entries)
    n = len(seq)
    doubled = seq + seq
    best = min(doubled[t:t + n] for t in range(n))
    rev = seq[::-1]
    doubled = rev + rev
    return min(best, min(doubled[t:t + n] for t in range(n)))


def canonicalize(entries) -> OrbitCanon:
    images = set(dihedral_images(eta.as_sequence(entries)))
    return OrbitCanon(canon=min(images), orbit_size=len(images))


def classify(entries) -> SeqClassification:
    """Period and symmetry category of a quiddity sequence.

    The period p is the least rotation fixing the sequence (n/p is always
    1, 2 or 3 for valid sequences).  With (a_0, ..., a_{p-1}) the period
    block: the sequence is symmetric when p is odd and the block is a
    palindrome, pseudo-symmetric when p is even and a_i == a_{p-i mod p}
    for all i, and asymmetric otherwise.
    """
    seq = eta.as_sequence(entries)
    n = len(seq)
    period = n
    for p in range(1, n):
        if n % p == 0 and seq[p:] + seq[:p] == seq:
            period = p
            break
    block = seq[:period]
    if period % 2 == 1 and all(block[i] == block[period - 1 - i] for i in range(period)):
        category = SYMMETRIC
    elif period % 2 == 0 and all(block[i] == block[-i % period] for i in range(1, period)):
        category = PSEUDO_SYMMETRIC
    else:
        category = ASYMMETRIC
    return SeqClassification(period=period, category=category)


def _tsa(length: int):
    """(T, S, A) for sub-polygon counting; length 2 is the degenerate 2-gon."""
    if length == 2:
        return (1, 1, 0)
    t = catalan(length - 2)
    s = 0 if length % 2 == 0 else catalan((length - 1) // 2 - 1)
    return (t, s, (t - s) // 2)


def count_TSA(n: int):
    """(T_n, S_n, A_n): all, reversal-fixed, and paired quiddity sequences."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return _tsa(n)


def count_TSA_brute(n: int, cap: int = None):
    """(T_n, S_n, A_n) by exhaustive enumeration."""
    if n > (cap if cap is not None else brute_cap()):
        raise ValueError(f"n={n} exceeds the brute-force cap")
    total = 0
    fixed = 0
    for q in polygons.iter_quiddities(n):
        total += 1
        if q == q[::-1]:
            fixed += 1
    return (total, fixed, (total - fixed) // 2)


def perfect_tripartitions(n: int):
    """Arc triples (i, j, k), i >= j >= k, of central triangles/diameters.

    n = 2m: the central-diameter triple (m, m, 0) plus every triple with
    i <= m - 1 (which forces k >= 2); n = 2m+1: every triple with i <= m
    (which forces k >= 1).  Cases: A central diameter, B degenerate arm
    k = 1 for i = j = m, then C/D/E/F by the equality pattern of i, j, k.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    m = n // 2
    out = []
    if n % 2 == 0:
        out.append(TriPartition(m, m, 0, "A"))
        top = m - 1
    else:
        top = m
    for i in range(top, 0, -1):
        for j in range(min(i, n - i - 1), 0, -1):
            k = n - i - j
            if k > j:
                break
            if n % 2 == 1 and i == j == m:  # k == 1
                case = "B"
            elif i > j > k:
                case = "C"
            elif i == j > k:
                case = "D"
            elif i > j == k:
                case = "E"
            else:
                case = "F"
            out.append(TriPartition(i, j, k, case))
    return out


def case_count(tp: TriPartition) -> int:
    """Number of similarity types whose central structure has these arcs."""
    ti, si, ai = _tsa(tp.i + 1)
    tj, sj, aj = _tsa(tp.j + 1)
    if tp.case == "A":
        # Z2 x Z2 (swap the halves, reflect both) acting on ordered pairs
        return ai * (ai + 1) + ai * si + si * (si + 1) // 2
    tk, sk, ak = _tsa(tp.k + 1)
    if tp.case == "B":
        return ti * (ti + 1) // 2
    if tp.case == "C":
        return ti * tj * tk
    if tp.case == "D":
        return (ti * ti * tk + ti * sk) // 2
    if tp.case == "E":
        return (ti * tk * tk + si * tk) // 2
    # F: dihedral D3 permutes the three equal arms
    return ti * (ti + 1) * (ti + 2) // 6 - ti * ai


def compose(a, b, c=None) -> tuple:
    """Glue two or three quiddity sequences around a central cell.

    ``compose(a, b)`` glues along a shared diameter; ``compose(a, b, c)``
    glues around a central triangle, each junction vertex picking up the
    +1 the central triangle contributes.  At most one argument may be the
    degenerate 2-gon (0, 0) (it is rotated into the third slot first);
    the result is always a valid quiddity sequence.
    """
    if c is None:
        a = eta.as_sequence(a)
        b = eta.as_sequence(b)
        u, v = len(a) - 1, len(b) - 1
        return (a[0] + b[v],) + a[1:u] + (a[u] + b[0],) + b[1:v]
    args = [tuple(a), tuple(b), tuple(c)]
    if sum(x == DEGENERATE for x in args) > 1:
        raise InvalidSequenceError("at most one composition argument may be the 2-gon (0,0)")
    while args[2] != DEGENERATE and DEGENERATE in args:
        args = [args[1], args[2], args[0]]
    a, b, c = args
    if a != DEGENERATE:
        a = eta.as_sequence(a)
    if b != DEGENERATE:
        b = eta.as_sequence(b)
    if c != DEGENERATE:
        c = eta.as_sequence(c)
    u, v, w = len(a) - 1, len(b) - 1, len(c) - 1
    return (
        (a[0] + c[w] + 1,)
        + a[1:u]
        + (a[u] + b[0] + 1,)
        + b[1:v]
        + (b[v] + c[0] + 1,)
        + c[1:w]
    )


def brute_type_set(n: int, cap: int = None):
    """Canonical forms of all quiddity sequences of length n, exhaustively."""
    limit = cap if cap is not None else brute_cap()
    if not 3 <= n <= limit:
        raise ValueError(f"n={n} outside 3..{limit} (set FRIEZE_BRUTE_CAP to raise the cap)")
    return {canonical_form(q) for q in polygons.iter_quiddities(n, cap=max(limit, 16))}


def count_types(n: int, method: str = "formula", cap: int = None) -> int:
    """K_n, the number of similarity types of length-n quiddity sequences."""
    if method == "formula":
        if n < 3:
            raise ValueError(f"n must be >= 3, got {n}")
        return sum(case_count(tp) for tp in perfect_tripartitions(n))
    if method == "brute":
        return len(brute_type_set(n, cap=cap))
    raise ValueError(f"method must be 'formula' or 'brute', got {method!r}")


def enumerate_types(n: int, cap: int = None):
    """One canonical representative per similarity type, sorted.

    Realizes the central-structure decomposition: for every perfect
    tri-partition, compose all triangulation quiddities of the arc
    sub-polygons (the degenerate arm contributing (0, 0), the diameter
    case gluing pairs) and deduplicate canonical forms.  Produces exactly
    K_n types.
    """
    limit = cap if cap is not None else brute_cap()
    if not 3 <= n <= limit:
        raise ValueError(f"n={n} outside 3..{limit} (set FRIEZE_BRUTE_CAP to raise the cap)")
    if n == 3:
        return [(1, 1, 1)]

    piece_cache = {}

    def pieces(length):
        if length == 2:
            return [DEGENERATE]
        if length not in piece_cache:
            piece_cache[length] = list(polygons.iter_quiddities(length))
        return piece_cache[length]

    found = set()
    for tp in perfect_tripartitions(n):
        i, j, k = tp.parts()
        if k == 0:
            for a in pieces(i + 1):
                for b in pieces(j + 1):
                    found.add(canonical_form(compose(a, b)))
        else:
            for a in pieces(i + 1):
                for b in pieces(j + 1):
                    for c in pieces(k + 1):
                        found.add(canonical_form(compose(a, b, c)))
    return sorted(found)

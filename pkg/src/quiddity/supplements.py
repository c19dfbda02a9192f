"""Basic sequences and their supplements.

A *basic* sequence is (1, A1, ..., Ak) with k >= 1 and every Ai >= 2; it is
*super-basic* when additionally k > 1 and A1, Ak > 2.  Every basic sequence
has a unique basic supplement: concatenating the two gives a quiddity
sequence, and supplementing twice returns the original.

The implementation reads the supplement off the dual tree.  Scanning a
basic sequence left to right describes a depth-first descent of a binary
tree: entry c consumes the deepest pending right slot and grows a chain of
c - 1 new nodes, each new node leaving a right slot open.  Once the input
is exhausted, the open slots close into leaves, and the run counts of the
remaining (post-order) part of the traversal are the supplement.  Only the
depths of the pending slots matter, so a stack of depths suffices.

A second, independent computation (:func:`supplement_by_runs`) rewrites
runs of 2s and entries >= 3 directly, in reverse order: a run of x 2s
becomes the singleton x + 3 (x + 2 on either boundary, x + 1 when the
sequence is nothing but 2s) and an entry A becomes A - 3 copies of 2
(A - 2 against a missing boundary run, A - 1 in the isolated (1, A) case).
Both computations agree; the tree reading is the one the package exports.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import eta
from .errors import InvalidSequenceError


def check_basic(entries) -> tuple:
    seq = tuple(entries)
    if len(seq) < 2 or seq[0] != 1:
        raise InvalidSequenceError(
            f"basic sequence must be (1, A1, ..., Ak) with k >= 1, got {seq}"
        )
    for x in seq[1:]:
        if not isinstance(x, int) or x < 2:
            raise InvalidSequenceError(f"basic entries after the 1 must be >= 2, got {x!r}")
    return seq


def check_superbasic(entries) -> tuple:
    seq = check_basic(entries)
    if len(seq) < 3:
        raise InvalidSequenceError(f"super-basic sequence needs at least two entries after the 1: {seq}")
    if seq[1] <= 2 or seq[-1] <= 2:
        raise InvalidSequenceError(f"super-basic sequence needs first and last entries > 2: {seq}")
    return seq


def fan(a: int, side: str = "left") -> tuple:
    """Fan quiddity sequence of the polygon triangulated from one vertex.

    left:  (A, 1, 2, ..., 2, 1) with A - 1 copies of 2;
    right: (1, 2, ..., 2, 1, A).  A = 1 degenerates to (1, 1, 1).
    """
    if a < 1:
        raise InvalidSequenceError(f"fan parameter must be >= 1, got {a}")
    if side == "left":
        return (a, 1) + (2,) * (a - 1) + (1,)
    if side == "right":
        return (1,) + (2,) * (a - 1) + (1, a)
    raise InvalidSequenceError(f"side must be 'left' or 'right', got {side!r}")


def supplement(entries) -> tuple:
    """The basic sequence making the concatenation a quiddity sequence.

    Stack-of-depths form of the dual-tree reading described in the module
    docstring.  Involutive: supplement(supplement(a)) == a.
    """
    seq = check_basic(entries)
    stack = [0]  # depths of nodes with a pending right slot; root after the leading 1
    for c in seq[1:]:
        base = stack.pop()
        stack.extend(range(base + 1, base + c))
    out = [1]
    prev = stack.pop()
    while stack:
        nxt = stack.pop()
        out.append(prev - nxt + 1)
        prev = nxt
    out.append(prev + 1)
    return tuple(out)


def supplement_by_runs(entries) -> tuple:
    """Run-rewriting form of the supplement; cross-oracle for :func:`supplement`."""
    seq = check_basic(entries)
    runs_of_2 = [0]
    bigs = []
    for x in seq[1:]:
        if x == 2:
            runs_of_2[-1] += 1
        else:
            bigs.append(x)
            runs_of_2.append(0)
    k = len(bigs)
    if k == 0:
        return (1, runs_of_2[0] + 1)
    out = [1]
    if runs_of_2[k] > 0:
        out.append(runs_of_2[k] + 2)
    for l in range(k, 0, -1):
        copies = bigs[l - 1] - 3
        if l == k and runs_of_2[k] == 0:
            copies += 1
        if l == 1 and runs_of_2[0] == 0:
            copies += 1
        out.extend([2] * copies)
        if l > 1:
            out.append(runs_of_2[l - 1] + 3)
    if runs_of_2[0] > 0:
        out.append(runs_of_2[0] + 2)
    return tuple(out)


def extend_superbasic(seqs) -> tuple:
    """Complete a concatenation of super-basic blocks to a quiddity sequence.

    Adjacent blocks are merged by decrementing the touching entries (last
    of the left block, first after the 1 of the right block), the merged
    basic sequence is supplemented, and the squeezed junctions are then
    re-expanded by the ear-insertion move, which restores every block
    verbatim while preserving validity.  The result starts with the blocks
    in order and is a valid quiddity sequence.
    """
    blocks = [check_superbasic(s) for s in seqs]
    if not blocks:
        raise InvalidSequenceError("need at least one super-basic sequence")
    if len(blocks) == 1:
        a = blocks[0]
        return a + supplement(a)
    merged = list(blocks[0])
    junctions = []
    for block in blocks[1:]:
        merged[-1] -= 1
        junctions.append(len(merged) - 1)
        merged.append(block[1] - 1)
        merged.extend(block[2:])
    completed = list(tuple(merged) + supplement(merged))
    for pos in reversed(junctions):
        completed[pos] += 1
        completed[pos + 1] += 1
        completed.insert(pos + 1, 1)
    return tuple(completed)


@dataclass(frozen=True)
class Embeddability:
    """Outcome of an embeddability search.

    ``embeddable`` is True/False when decided, None when the bounded
    search was exhausted without an answer.  ``witness`` is a quiddity
    sequence starting with the query, ``obstruction`` a human-readable
    certificate when the answer is no.
    """

    embeddable: object
    witness: tuple = None
    obstruction: str = None


def is_embeddable(entries, max_length: int = None) -> Embeddability:
    """Can the sequence sit inside a strictly larger quiddity sequence?

    "Inside" means as a contiguous segment with at least two entries added
    around it, so the segment has a neighbour on both sides in the cyclic
    result.  Certified obstructions: two adjacent 1s, or a 1 flanked by 2s
    (contracting the 1 would force adjacent 1s, impossible at length >= 4;
    the lone exception (2,1,2,1) adds only one entry).  Otherwise a
    bounded search tries completions up to ``max_length`` (default:
    len(entries) + 8) and may report None = unknown at the bound.
    """
    seq = tuple(entries)
    for x in seq:
        if not isinstance(x, int) or x < 1:
            raise InvalidSequenceError(f"entries must be positive integers, got {x!r}")
    if max_length is None:
        max_length = len(seq) + 8
    if len(seq) == 0:
        return Embeddability(True, witness=(1, 1, 1))
    if len(seq) == 1:
        return Embeddability(True, witness=fan(seq[0]))

    for i in range(len(seq) - 1):
        if seq[i] == 1 and seq[i + 1] == 1:
            return Embeddability(
                False,
                obstruction="adjacent 1s cannot occur in a quiddity sequence of length >= 4",
            )
    for i in range(len(seq) - 2):
        if seq[i] == 2 and seq[i + 1] == 1 and seq[i + 2] == 2:
            return Embeddability(
                False,
                obstruction=(
                    "interior 1 flanked by 2s: contracting it would leave adjacent 1s, "
                    "impossible in any quiddity sequence of length >= 4"
                ),
            )

    # fast constructive witnesses
    if seq[0] == 1 and all(x >= 2 for x in seq[1:]) and len(seq) >= 2:
        witness = seq + supplement(seq)
        if len(witness) >= len(seq) + 2:
            return Embeddability(True, witness=witness)
    if seq[0] == 1:
        cuts = [i for i, x in enumerate(seq) if x == 1] + [len(seq)]
        blocks = [seq[cuts[t]:cuts[t + 1]] for t in range(len(cuts) - 1)]
        try:
            for b in blocks:
                check_superbasic(b)
            return Embeddability(True, witness=extend_superbasic(blocks))
        except InvalidSequenceError:
            pass

    # bounded brute-force completion: q = seq + t, sum forced by 3L - 6
    base = sum(seq)
    for total_len in range(len(seq) + 2, max_length + 1):
        m = total_len - len(seq)
        budget = 3 * total_len - 6 - base
        if budget < m:
            continue
        cap = total_len - 2
        tail = []

        def search(remaining, slots):
            if slots == 0:
                if remaining == 0 and eta.is_eta(seq + tuple(tail)):
                    return True
                return False
            lo = max(1, remaining - cap * (slots - 1))
            hi = min(cap, remaining - (slots - 1))
            for x in range(lo, hi + 1):
                tail.append(x)
                if search(remaining - x, slots - 1):
                    return True
                tail.pop()
            return False

        if search(budget, m):
            return Embeddability(True, witness=seq + tuple(tail))
    return Embeddability(None, obstruction=f"no completion found up to length {max_length}")

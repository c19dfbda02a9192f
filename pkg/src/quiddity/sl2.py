"""Exact arithmetic in SL2(Z): generator words, orders, normal forms.

Conventions used throughout the package:

* matrices are row-major ``[[a, b], [c, d]]`` with integer entries and
  determinant ``a*d - b*c == 1`` (arbitrary precision, never floats);
* a word is evaluated left to right, i.e. the leftmost factor is the
  outermost one, the one applied *last* to a column vector;
* the standard generators are

      S = [[0, 1], [-1, 0]]      order 4
      T = [[0, 1], [-1, -1]]     order 3
      U = [[1, 0], [1, 1]]       infinite order, U = S*T*T

  and ``U**a == [[1, 0], [a, 1]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotUnimodularError


@dataclass(frozen=True, slots=True)
class Mat2:
    """A 2x2 integer matrix of determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise NotUnimodularError(f"determinant is not 1: {self.rows()}")

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> "Mat2":
        if k < 0:
            return self.inverse() ** (-k)
        out = I
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


I = Mat2(1, 0, 0, 1)
S = Mat2(0, 1, -1, 0)
T = Mat2(0, 1, -1, -1)
U = Mat2(1, 0, 1, 1)
V = Mat2(1, 1, 0, 1)  # upper translation, V = -S*T


def u_pow(a: int) -> Mat2:
    """U**a without repeated multiplication."""
    return Mat2(1, 0, a, 1)


@dataclass(frozen=True)
class SUWord:
    """A word S^b0 * U^a1*S * U^a2*S * ... * U^an * S^b1.

    ``factors`` holds the exponents (a1, ..., an); every factor is followed
    by an S except the last, which carries one only when ``trailing_s``.
    Exponents may be any nonzero integers for evaluation; the quiddity
    criterion additionally wants them all >= 1.
    """

    factors: tuple
    prefix_s: bool = False
    trailing_s: bool = True

    def __str__(self):
        parts = ["S"] if self.prefix_s else []
        for i, a in enumerate(self.factors):
            parts.append("U" if a == 1 else f"U^{a}")
            if i + 1 < len(self.factors) or self.trailing_s:
                parts.append("S")
        if not self.factors and self.trailing_s:
            parts.append("S")
        return "*".join(parts) if parts else "I"


def eval_word(word: SUWord) -> Mat2:
    """Multiply out a structured word, leftmost factor first."""
    m = S if word.prefix_s else I
    n = len(word.factors)
    for i, a in enumerate(word.factors):
        m = m @ u_pow(a)
        if i + 1 < n or word.trailing_s:
            m = m @ S
    if n == 0 and word.trailing_s:
        m = m @ S
    return m


def eval_tokens(text: str) -> Mat2:
    """Evaluate a ``*``-separated word of ``S`` and ``U^k`` tokens.

    ``U`` abbreviates ``U^1``; exponents may be negative.  Raises
    ValueError on anything else.
    """
    m = I
    for tok in text.split("*"):
        tok = tok.strip()
        if tok == "S":
            m = m @ S
        elif tok == "U":
            m = m @ U
        elif tok.startswith("U^"):
            m = m @ u_pow(int(tok[2:]))
        else:
            raise ValueError(f"bad word token: {tok!r}")
    return m


def element_order(m: Mat2):
    """Exact order of m in SL2(Z): an int, or None for infinite order.

    Trace classification does almost all the work; only |trace| < 2 needs
    a power search, and torsion in SL2(Z) has order at most 12.
    """
    if m == I:
        return 1
    tr = m.trace
    if tr == -2:
        return 2 if m == -I else None
    if abs(tr) >= 2:
        return None
    p = m
    for k in range(2, 13):
        p = p @ m
        if p == I:
            return k
    return None  # unreachable for |trace| < 2


@dataclass(frozen=True)
class TSNormalForm:
    """sign * T^b0 * S * T^e1 * S * ... * T^en * S^b1 with each e in {1, 2}.

    b0 ranges over {0, 1, 2}: a leading T^2 (e.g. for the matrix T^2
    itself) cannot be traded away, since the sign only absorbs powers
    of S^2.  b1 is {0, 1}.
    """

    sign: int
    b0: int
    exponents: tuple
    b1: int

    def to_matrix(self) -> Mat2:
        m = T ** self.b0
        for e in self.exponents:
            m = m @ S @ T ** e
        if self.b1:
            m = m @ S
        return m if self.sign == 1 else -m

    def __str__(self):
        parts = []
        if self.b0:
            parts.append("T" if self.b0 == 1 else f"T^{self.b0}")
        for e in self.exponents:
            parts.append("S")
            parts.append("T" if e == 1 else f"T^{e}")
        if self.b1:
            parts.append("S")
        body = "*".join(parts) if parts else "I"
        return body if self.sign == 1 else "-" + body


def _su_factorization(m: Mat2):
    """Peel m from the left into S and U^q factors by Euclidean descent.

    Returns (sign, tokens) with tokens a list of 'S' and ('U', q), such
    that sign * product(tokens) == m.  Descends on the lower-left entry:
    U^-q reduces c modulo a, S^-1 swaps the rows.
    """
    sign = 1
    tokens = []
    cur = m
    while cur.c != 0:
        if cur.a != 0:
            q = round(Fraction(cur.c, cur.a))
            if q:
                tokens.append(("U", q))
                cur = u_pow(-q) @ cur
            if cur.c == 0:
                break
        tokens.append("S")
        cur = S.inverse() @ cur
    # cur is now [[e, b], [0, e]] with e = +-1, i.e. +-V^(e*b)
    if cur.a == -1:
        sign = -sign
        shift = -cur.b
    else:
        shift = cur.b
    if shift:
        # V^t == -S * U^-t * S
        sign = -sign
        tokens += ["S", ("U", -shift), "S"]
    return sign, tokens


def _reduce_st(tokens):
    """Collapse an S/T letter string modulo S^2 = -I and T^3 = I."""
    sign = 1
    stack = []
    for tok in tokens:
        stack.append(tok)
        while len(stack) >= 2:
            x, y = stack[-2], stack[-1]
            if x == "S" and y == "S":
                stack.pop()
                stack.pop()
                sign = -sign
            elif isinstance(x, tuple) and isinstance(y, tuple):
                e = (x[1] + y[1]) % 3
                stack.pop()
                stack.pop()
                if e:
                    stack.append(("T", e))
            else:
                break
    return sign, stack


def ts_normal_form(m: Mat2) -> TSNormalForm:
    """Rewrite m as sign * T^b0 * S*T^e1 * ... * S*T^en * S^b1.

    Pipeline: Euclidean descent gives an S/U word, U = S*T^2 and
    U^-1 = -T*S turn it into S/T letters, and the group relations
    collapse the letters into the alternating form.  The result always
    re-evaluates to m.
    """
    sign, su = _su_factorization(m)
    letters = []
    for tok in su:
        if tok == "S":
            letters.append("S")
            continue
        _, q = tok
        if q > 0:
            letters += ["S", ("T", 2)] * q
        else:
            for _ in range(-q):
                sign = -sign
                letters += [("T", 1), "S"]
    flip, stack = _reduce_st(letters)
    sign *= flip

    b0 = 0
    if stack and isinstance(stack[0], tuple):
        b0 = stack[0][1]
        stack = stack[1:]
    b1 = 0
    if stack and stack[-1] == "S":
        b1 = 1
        stack = stack[:-1]
    exponents = tuple(tok[1] for tok in stack if isinstance(tok, tuple))
    return TSNormalForm(sign=sign, b0=b0, exponents=exponents, b1=b1)


def check_conjugation_lemma(x: Mat2, a: int, b: int) -> bool:
    """Whether X*U^a*S == U^b*S*X (true only when a == b)."""
    return x @ u_pow(a) @ S == u_pow(b) @ S @ x


def check_cancellation_identity(a: int, b: int) -> bool:
    """(U^(a+1)*S)(U*S)(U^(b+1)*S) == (U^a*S)(U^b*S), an identity in SL2(Z)."""
    lhs = u_pow(a + 1) @ S @ U @ S @ u_pow(b + 1) @ S
    rhs = u_pow(a) @ S @ u_pow(b) @ S
    return lhs == rhs

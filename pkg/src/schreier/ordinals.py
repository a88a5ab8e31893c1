"""Ordinals below epsilon_0 in Cantor Normal Form.

An ordinal is represented as a finite sum  w^e1 * c1 + ... + w^ek * ck
with exponents e1 > e2 > ... > ek (themselves ordinals) and positive
integer coefficients.  The empty sum is 0.  All values are immutable
and hashable; all operations are pure.
"""

from __future__ import annotations

import functools
import re


class OrdinalError(ValueError):
    pass


class OrdinalParseError(OrdinalError):
    """Syntax error in an ordinal expression; carries the offending position."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


@functools.total_ordering
class Ordinal:
    """A countable ordinal below epsilon_0 in Cantor Normal Form."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        terms = tuple(terms)
        for exp, coeff in terms:
            if not isinstance(exp, Ordinal):
                raise OrdinalError("exponent must be an Ordinal: %r" % (exp,))
            if not isinstance(coeff, int) or coeff < 1:
                raise OrdinalError("coefficient must be a positive integer: %r" % (coeff,))
        for (e1, _), (e2, _) in zip(terms, terms[1:]):
            if not e1 > e2:
                raise OrdinalError("exponents must be strictly decreasing")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", hash(terms))

    def __setattr__(self, name, value):
        raise AttributeError("Ordinal is immutable")

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        # Lexicographic comparison of the CNF term lists.
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            if e1 != e2:
                return e1 < e2
            if c1 != c2:
                return c1 < c2
        return len(self.terms) < len(other.terms)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Ordinal(%s)" % format_ordinal(self)

    def __str__(self):
        return format_ordinal(self)

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_finite(self):
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def is_limit(self):
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def is_successor(self):
        return bool(self.terms) and self.terms[-1][0].is_zero

    def as_int(self):
        """The natural number this ordinal denotes; error if infinite."""
        if self.is_zero:
            return 0
        if not self.is_finite:
            raise OrdinalError("not a finite ordinal: %s" % self)
        return self.terms[0][1]


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def from_int(n):
    if not isinstance(n, int) or n < 0:
        raise OrdinalError("expected a non-negative integer, got %r" % (n,))
    return ZERO if n == 0 else Ordinal(((ZERO, n),))


def omega_pow(a):
    """w raised to the ordinal a."""
    return Ordinal(((a, 1),))


def compare(a, b):
    """Three-way comparison; returns 'less', 'equal' or 'greater'."""
    if a < b:
        return "less"
    if a == b:
        return "equal"
    return "greater"


def add(a, b):
    """Ordinal sum a + b (not commutative: 1 + w == w)."""
    if b.is_zero:
        return a
    lead = b.terms[0][0]
    kept = [t for t in a.terms if t[0] > lead]
    if len(kept) < len(a.terms) and a.terms[len(kept)][0] == lead:
        merged = (lead, a.terms[len(kept)][1] + b.terms[0][1])
        return Ordinal(tuple(kept) + (merged,) + b.terms[1:])
    return Ordinal(tuple(kept) + b.terms)


def mul(a, b):
    """Ordinal product a * b via the CNF recursion, term by term of b."""
    if a.is_zero or b.is_zero:
        return ZERO
    result = ZERO
    lead_exp = a.terms[0][0]
    for exp, coeff in b.terms:
        if exp.is_zero:
            # a * n  =  w^e1*(c1*n) + (rest of a)   for n >= 1
            head = (lead_exp, a.terms[0][1] * coeff)
            result = add(result, Ordinal((head,) + a.terms[1:]))
        else:
            # a * w^exp * n  =  w^(e1 + exp) * n
            result = add(result, Ordinal(((add(lead_exp, exp), coeff),)))
    return result


def natural_sum(a, b):
    """Hessenberg (coefficientwise) sum of two CNF ordinals."""
    coeffs = {}
    for exp, coeff in a.terms + b.terms:
        coeffs[exp] = coeffs.get(exp, 0) + coeff
    terms = tuple((exp, coeffs[exp]) for exp in sorted(coeffs, reverse=True))
    return Ordinal(terms)


def classify(a):
    """Return ('zero', None), ('successor', predecessor) or ('limit', None)."""
    if a.is_zero:
        return ("zero", None)
    if a.is_successor:
        exp, coeff = a.terms[-1]
        if coeff == 1:
            pred = Ordinal(a.terms[:-1])
        else:
            pred = Ordinal(a.terms[:-1] + ((exp, coeff - 1),))
        return ("successor", pred)
    return ("limit", None)


def fundamental_seq(lam, n):
    """The n-th element of the canonical fundamental sequence of a limit ordinal.

    Rules (with head = lam minus one copy of its last CNF term w^g):
      g = d+1 successor:  lam[n] = head + w^d * n
      g limit:            lam[n] = head + w^(g[n])
    For lam = w this gives lam[n] = n.
    """
    if not isinstance(n, int) or n < 1:
        raise OrdinalError("fundamental sequence index must be a positive integer")
    if not lam.is_limit:
        raise OrdinalError("not a limit ordinal: %s" % lam)
    last_exp, last_coeff = lam.terms[-1]
    if last_coeff == 1:
        head = Ordinal(lam.terms[:-1])
    else:
        head = Ordinal(lam.terms[:-1] + ((last_exp, last_coeff - 1),))
    kind, pred = classify(last_exp)
    if kind == "successor":
        return add(head, mul(omega_pow(pred), from_int(n)))
    # last_exp is itself a limit (it is nonzero here)
    return add(head, omega_pow(fundamental_seq(last_exp, n)))


# -- parsing and formatting -------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([w^()*+]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise OrdinalParseError("unexpected character %r" % text[pos], pos)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), m.start(1)))
        else:
            tokens.append((m.group(2), None, m.start(2)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise OrdinalParseError("expected %r, got %r" % (kind, tok[0]), tok[2])
        self.i += 1
        return tok

    def parse_expr(self):
        value = self.parse_term()
        while self.peek()[0] == "+":
            self.take("+")
            value = add(value, self.parse_term())
        return value

    def parse_term(self):
        value = self.parse_atom()
        if self.peek()[0] == "*":
            self.take("*")
            kind, num, pos = self.take()
            if kind != "num":
                raise OrdinalParseError("expected a natural number after '*'", pos)
            if num == 0:
                raise OrdinalParseError("coefficient 0 is not allowed", pos)
            value = mul(value, from_int(num))
        return value

    def parse_atom(self):
        kind, num, pos = self.take()
        if kind == "num":
            return from_int(num)
        if kind == "w":
            if self.peek()[0] == "^":
                self.take("^")
                nxt = self.peek()
                if nxt[0] == "(":
                    self.take("(")
                    exp = self.parse_expr()
                    self.take(")")
                elif nxt[0] == "num":
                    exp = from_int(self.take("num")[1])
                else:
                    raise OrdinalParseError("expected exponent after '^'", nxt[2])
                return omega_pow(exp)
            return OMEGA
        raise OrdinalParseError("expected an ordinal atom, got %r" % kind, pos)


def parse_ordinal(text):
    """Parse an ordinal expression and return its CNF normalization.

    Grammar: `0` | `w` | `w^k` | `w^(<expr>)` | `<atom>*<nat>` | `<expr>+<expr>`.
    """
    parser = _Parser(text)
    value = parser.parse_expr()
    parser.take("end")
    return value


def format_ordinal(a):
    """Canonical text form; round-trips through parse_ordinal."""
    if a.is_zero:
        return "0"
    parts = []
    for exp, coeff in a.terms:
        if exp.is_zero:
            parts.append(str(coeff))
            continue
        if exp == ONE:
            base = "w"
        elif exp.is_finite:
            base = "w^%d" % exp.as_int()
        else:
            base = "w^(%s)" % format_ordinal(exp)
        parts.append(base if coeff == 1 else "%s*%d" % (base, coeff))
    return "+".join(parts)

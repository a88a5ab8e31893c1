"""Compact hereditary families of finite subsets of N.

Fine Schreier families F_alpha are defined by the transfinite recursion

    F_0        = { {} }
    F_(a+1)    = { {n} u A : n < A, A in F_a }  u  { {} }
    F_lambda   = { A : exists n <= min A with A in F_(lambda[n]) }  u  { {} }

with lambda[n] the canonical fundamental sequences from `ordinals`.
Schreier families are S_alpha = F_(w^alpha); S_1 is the classical family
{ A : |A| <= min A }.

Finite sets are plain tuples of strictly increasing positive integers.
Family handles are immutable and answer membership queries; a shared memo
table backs the fine Schreier recursion.
"""

from __future__ import annotations

import itertools
import json
import threading

from . import ordinals
from .ordinals import Ordinal, ZERO, omega_pow


# Probe horizon for existential questions ("is some singleton a member?")
# on spreading families.  Spreading makes these probes upward-monotone, so
# a miss below the horizon is treated as a miss outright.
DEFAULT_HORIZON = 64


class FamilyError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A finite enumeration or iteration ran past its configured budget."""


# -- finite sets ------------------------------------------------------------

def finset(elements):
    """Validate and canonicalize a finite set of positive integers."""
    elems = tuple(elements)
    for x in elems:
        if not isinstance(x, int) or x < 1:
            raise FamilyError("set elements must be positive integers: %r" % (x,))
    for a, b in zip(elems, elems[1:]):
        if a >= b:
            raise FamilyError("set elements must be strictly increasing: %r" % (elems,))
    return elems


def parse_finset(text):
    """Parse the `2,5,9` text form; `-` denotes the empty set."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        return finset(int(part) for part in text.split(","))
    except ValueError as exc:
        raise FamilyError("bad set %r: %s" % (text, exc))


def format_finset(a):
    return ",".join(str(x) for x in a) if a else "-"


def is_spread(a, b):
    """True iff b is a spread of a: same size, pointwise a_i <= b_i."""
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


def is_successive(blocks):
    """True iff max(A_i) < min(A_(i+1)) along the sequence."""
    return all(x[-1] < y[0] for x, y in zip(blocks, blocks[1:]))


# -- fine Schreier membership ----------------------------------------------

_fs_cache = {}
_fs_lock = threading.Lock()


def fs_member(alpha, a):
    """Membership of the finite set `a` in the fine Schreier family F_alpha."""
    a = tuple(a)
    if not a:
        return True
    key = (alpha, a)
    try:
        return _fs_cache[key]
    except KeyError:
        pass
    if alpha.is_zero:
        result = False  # nonempty a
    elif alpha.is_successor:
        pred = ordinals.classify(alpha)[1]
        result = fs_member(pred, a[1:])
    else:
        # Limit case: check every n <= min a, not just n = min a, so that
        # correctness does not lean on monotonicity of the chosen
        # fundamental sequences.
        result = any(
            fs_member(ordinals.fundamental_seq(alpha, n), a) for n in range(1, a[0] + 1)
        )
    with _fs_lock:
        _fs_cache[key] = result
    return result


def schreier_member(alpha, a):
    """Membership in S_alpha = F_(w^alpha); alpha must be nonzero."""
    if alpha.is_zero:
        raise FamilyError("Schreier families are indexed by nonzero ordinals")
    return fs_member(omega_pow(alpha), a)


# -- family handles ---------------------------------------------------------

class FamilyHandle:
    """A symbolic compact hereditary family, queryable for membership."""

    spreading = False
    # When set, membership of a u {n} is monotone in n once n exceeds
    # max(a) + gap, which makes the Cantor-Bendixson derivative decidable by
    # a single far-right probe.  Spreading families have gap 1.
    right_stable_gap = None

    def __contains__(self, a):
        return self.contains(tuple(a))

    def contains(self, a):
        raise NotImplementedError

    def descriptor(self):
        raise NotImplementedError

    def singleton_witness(self, horizon=DEFAULT_HORIZON):
        """Some n with {n} in the family, or None if none found below horizon."""
        for n in range(1, horizon + 1):
            if self.contains((n,)):
                return n
        return None

    def __repr__(self):
        return "<family %s>" % self.descriptor()

    def __eq__(self, other):
        return isinstance(other, FamilyHandle) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(self.descriptor())


class FineSchreier(FamilyHandle):
    spreading = True
    right_stable_gap = 1

    def __init__(self, alpha):
        if not isinstance(alpha, Ordinal):
            raise FamilyError("index must be an Ordinal")
        self.alpha = alpha

    def contains(self, a):
        return fs_member(self.alpha, a)

    def descriptor(self):
        return "fine:%s" % self.alpha

    def singleton_witness(self, horizon=DEFAULT_HORIZON):
        # Every singleton lies in F_alpha for alpha >= 1 (induction on alpha).
        return 1 if not self.alpha.is_zero else None


class Schreier(FineSchreier):
    def __init__(self, alpha):
        if alpha.is_zero:
            raise FamilyError("Schreier families are indexed by nonzero ordinals")
        super().__init__(omega_pow(alpha))
        self.schreier_index = alpha

    def descriptor(self):
        return "schreier:%s" % self.schreier_index


class Explicit(FamilyHandle):
    """A finite family stored fully materialized and downward closed."""

    def __init__(self, members, assume_spreading=False, already_closed=False):
        closed = set()
        for m in members:
            m = finset(m)
            if already_closed:
                closed.add(m)
            else:
                for r in range(len(m) + 1):
                    closed.update(itertools.combinations(m, r))
        closed.add(())
        self.members = frozenset(closed)
        self.spreading = assume_spreading
        self.right_stable_gap = 1 if assume_spreading else None

    @classmethod
    def from_json_file(cls, path):
        with open(path) as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise FamilyError("explicit family file must be a JSON array of arrays")
        return cls(tuple(sorted(set(row))) for row in data)

    def contains(self, a):
        return a in self.members

    def descriptor(self):
        return "explicit:%s" % ";".join(format_finset(m) for m in sorted(self.members))

    def singleton_witness(self, horizon=DEFAULT_HORIZON):
        singles = [m[0] for m in self.members if len(m) == 1]
        return min(singles) if singles else None


class Residual(FamilyHandle):
    """{ B : prefix < B and prefix u B in base }."""

    def __init__(self, base, prefix):
        prefix = finset(prefix)
        if not base.contains(prefix):
            raise FamilyError("residual prefix %s is not a member" % format_finset(prefix))
        self.base = base
        self.prefix = prefix
        self.spreading = False  # members live strictly above the prefix

    def contains(self, a):
        if not a:
            return True
        if self.prefix and a[0] <= self.prefix[-1]:
            return False
        return self.base.contains(self.prefix + a)

    def descriptor(self):
        return "residual(%s;%s)" % (self.base.descriptor(), format_finset(self.prefix))

    def singleton_witness(self, horizon=DEFAULT_HORIZON):
        start = (self.prefix[-1] + 1) if self.prefix else 1
        for n in range(start, start + horizon):
            if self.contains((n,)):
                return n
        return None


class Restriction(FamilyHandle):
    """Members of the base family contained in [1..bound]."""

    def __init__(self, base, bound):
        self.base = base
        self.bound = bound

    def contains(self, a):
        return (not a or a[-1] <= self.bound) and self.base.contains(a)

    def descriptor(self):
        return "restrict(%s;%d)" % (self.base.descriptor(), self.bound)


class Union(FamilyHandle):
    def __init__(self, parts):
        self.parts = tuple(parts)
        self.spreading = all(p.spreading for p in self.parts)
        gaps = [p.right_stable_gap for p in self.parts]
        self.right_stable_gap = max(gaps) if gaps and all(g is not None for g in gaps) else None

    def contains(self, a):
        if not a:
            return True
        return any(p.contains(a) for p in self.parts)

    def descriptor(self):
        return "union(%s)" % ",".join(p.descriptor() for p in self.parts)

    def singleton_witness(self, horizon=DEFAULT_HORIZON):
        hits = [w for w in (p.singleton_witness(horizon) for p in self.parts) if w]
        return min(hits) if hits else None


class Oracle(FamilyHandle):
    """A family given by an arbitrary membership predicate.

    Used internally (e.g. for min-set families of block trees); the caller
    vouches for heredity and, when claimed, the spreading property.
    """

    def __init__(self, predicate, name, spreading=False, right_stable_gap=None):
        self.predicate = predicate
        self.name = name
        self.spreading = spreading
        self.right_stable_gap = 1 if spreading else right_stable_gap
        self._cache = {}

    def contains(self, a):
        try:
            return self._cache[a]
        except KeyError:
            result = self._cache[a] = self.predicate(a)
            return result

    def descriptor(self):
        return "oracle:%s" % self.name

    def singleton_witness(self, horizon=DEFAULT_HORIZON):
        if self.right_stable_gap is not None:
            probe = max(horizon, self.right_stable_gap)
            if self.contains((probe,)):
                return probe
        return super().singleton_witness(horizon)


class Derived(FamilyHandle):
    """Cantor-Bendixson derivative: members with infinitely many one-point
    extensions in the base family.

    For a right-stable base the probe a u {max a + gap} decides this; for
    spreading families (gap 1) these are exactly the non-maximal members.
    """

    def __init__(self, base, horizon=DEFAULT_HORIZON):
        if base.right_stable_gap is None:
            raise FamilyError(
                "CB derivative requires a spreading (or right-stable) family"
            )
        self.base = base
        self.horizon = horizon
        self.spreading = base.spreading
        self.right_stable_gap = base.right_stable_gap

    def contains(self, a):
        gap = self.base.right_stable_gap
        if not a:
            return self.base.contains(()) and self.base.singleton_witness(self.horizon) is not None
        return self.base.contains(a) and self.base.contains(a + (a[-1] + gap,))

    def descriptor(self):
        return "cbderiv(%s)" % self.base.descriptor()

    def singleton_witness(self, horizon=DEFAULT_HORIZON):
        probe_range = range(1, max(horizon, self.right_stable_gap) + 1)
        for n in probe_range:
            if self.contains((n,)):
                return n
        return None


# -- operations -------------------------------------------------------------

def is_maximal(fam, a):
    """True iff `a` is a member with no proper superset in the family.

    Maximality is judged inside N (not within any enumeration bound); for a
    spreading family the single probe a u {max a + 1} decides it.
    """
    a = tuple(a)
    if not fam.contains(a):
        raise FamilyError("%s is not a member of %s" % (format_finset(a), fam.descriptor()))
    if isinstance(fam, Explicit) and not fam.spreading:
        return not any(len(m) > len(a) and set(a) <= set(m) for m in fam.members)
    if not fam.spreading:
        raise FamilyError("maximality probe requires a spreading family")
    if not a:
        return fam.singleton_witness() is None
    return not fam.contains(a + (a[-1] + 1,))


def enumerate_family(fam, bound, maximal_only=False, budget=1_000_000):
    """All members (or all maximal members) within [1..bound], in lex order.

    Walks the member trie depth-first; heredity guarantees that every prefix
    of a member is a member, so pruning at non-members is complete.
    """
    if bound < 1:
        raise FamilyError("bound must be >= 1")
    out = []
    steps = 0

    def visit(prefix):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded("enumeration budget exhausted at bound %d" % bound)
        if not maximal_only or is_maximal(fam, prefix):
            out.append(prefix)
        start = prefix[-1] + 1 if prefix else 1
        for n in range(start, bound + 1):
            if fam.contains(prefix + (n,)):
                visit(prefix + (n,))

    if fam.contains(()):
        visit(())
    return out


def is_admissible(fam, blocks):
    """True iff blocks are successive and their minima form a member."""
    blocks = [tuple(b) for b in blocks]
    if not blocks or any(not b for b in blocks):
        raise FamilyError("admissibility requires a non-empty list of non-empty sets")
    if not is_successive(blocks):
        return False
    return fam.contains(tuple(b[0] for b in blocks))


def residual(fam, prefix):
    """The family {B : prefix < B, prefix u B in fam}, reduced symbolically
    for fine Schreier handles where the recursion allows it."""
    prefix = finset(prefix)
    if not fam.contains(prefix):
        raise FamilyError("residual prefix %s is not a member" % format_finset(prefix))
    if not prefix:
        return fam
    if isinstance(fam, FineSchreier):
        head, rest = prefix[0], prefix[1:]
        reduced = _fine_residual_step(fam.alpha, head)
        if rest:
            return residual(reduced, rest)
        return reduced
    return Residual(fam, prefix)


def _fine_residual_step(alpha, n):
    """Residual of F_alpha by the singleton {n}, as a symbolic handle."""
    if alpha.is_successor:
        pred = ordinals.classify(alpha)[1]
        return Restriction_gt(FineSchreier(pred), n)
    # Limit: union over m <= n of the residuals along the fundamental sequence,
    # keeping only those branches where {n} is a member.
    parts = []
    for m in range(1, n + 1):
        sub = ordinals.fundamental_seq(alpha, m)
        if fs_member(sub, (n,)):
            parts.append(_fine_residual_step(sub, n))
    return Union(parts) if parts else Explicit([()])


class Restriction_gt(FamilyHandle):
    """Members of the base family whose elements all exceed a threshold."""

    def __init__(self, base, threshold):
        self.base = base
        self.threshold = threshold

    def contains(self, a):
        return (not a or a[0] > self.threshold) and self.base.contains(a)

    def descriptor(self):
        return "above(%s;%d)" % (self.base.descriptor(), self.threshold)

    def singleton_witness(self, horizon=DEFAULT_HORIZON):
        for n in range(self.threshold + 1, self.threshold + 1 + horizon):
            if self.contains((n,)):
                return n
        return None


def check_structure(fam, bound, budget=2_000_000):
    """Exhaustively verify hereditary/spreading/no-chain structure in [1..bound].

    The chain check is the finite shadow of compactness: no member may extend
    greedily (always appending max+1) past the horizon while staying inside
    the family.
    """
    members = set(enumerate_family(fam, bound, budget=budget))
    hereditary = all(
        all(tuple(sub) in members for r in range(len(m)) for sub in itertools.combinations(m, r))
        for m in members
    )
    spreading_ok = True
    for m in members:
        if not m:
            continue
        for spread in itertools.combinations(range(1, bound + 1), len(m)):
            if is_spread(m, spread) and spread not in members:
                spreading_ok = False
                break
        if not spreading_ok:
            break
    no_chain = True
    horizon = bound + DEFAULT_HORIZON
    for m in members:
        chain = m
        while fam.contains(chain + ((chain[-1] + 1) if chain else 1,)):
            chain = chain + ((chain[-1] + 1) if chain else 1,)
            if chain[-1] > horizon:
                no_chain = False
                break
        if not no_chain:
            break
    return {"hereditary": hereditary, "spreading": spreading_ok, "compact_no_chain": no_chain}


def cb_derivative(fam, horizon=DEFAULT_HORIZON):
    """The Cantor-Bendixson derivative of a spreading hereditary family."""
    return Derived(fam, horizon)


def cb_index_finite(fam, budget=32, horizon=DEFAULT_HORIZON):
    """Least k with the k-th iterated derivative empty.

    Returns (index, exact).  When the index is not reached within the budget
    the result is (budget, False), reporting index >= budget.
    """
    current = fam
    for k in range(budget):
        if not current.contains(()):
            return (k, True)
        current = cb_derivative(current, horizon)
    return (budget, False)

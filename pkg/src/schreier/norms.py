"""Exact Tsirelson-type norms with partition certificates.

The norm ||.||_(F,c) is the least norm on finitely supported vectors with

    ||x|| = ||x||_inf  v  c * sup { sum ||A_i x|| : (A_i) F-admissible }.

Two independent evaluation routes are provided: a dynamic program over
interval decompositions (`norm`) and a fixed-point search over all
admissible successive-subset decompositions (`norm_exhaustive`).  A third
route via norming functionals lives in `functionals`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .families import FamilyHandle, is_admissible
from .vectors import SparseVec

DEFAULT_SUPPORT_CAP = 64


class NormError(ValueError):
    pass


class CertificateError(NormError):
    pass


@dataclass(frozen=True)
class NormParams:
    family: FamilyHandle
    c: Fraction

    def __post_init__(self):
        c = Fraction(self.c)
        if not (0 < c < 1):
            raise NormError("parameter c must satisfy 0 < c < 1, got %s" % c)
        object.__setattr__(self, "c", c)

    def key(self):
        return (self.family.descriptor(), str(self.c))


class Leaf:
    """Certificate leaf: a single coordinate, valued |x_i|."""

    __slots__ = ("index", "value")

    def __init__(self, index, value):
        self.index = index
        self.value = Fraction(value)

    def indices(self):
        return (self.index,)

    def to_json(self):
        return {"leaf": self.index, "value": str(self.value)}


class Node:
    """Certificate node: an admissible successive list of index blocks."""

    __slots__ = ("blocks", "children", "value")

    def __init__(self, blocks, children, value):
        self.blocks = tuple(tuple(b) for b in blocks)
        self.children = tuple(children)
        self.value = Fraction(value)

    def indices(self):
        return tuple(i for b in self.blocks for i in b)

    def to_json(self):
        return {
            "blocks": [list(b) for b in self.blocks],
            "children": [ch.to_json() for ch in self.children],
            "value": str(self.value),
        }


def cert_from_json(data):
    if "leaf" in data:
        return Leaf(data["leaf"], Fraction(data["value"]))
    children = [cert_from_json(ch) for ch in data["children"]]
    return Node([tuple(b) for b in data["blocks"]], children, Fraction(data["value"]))


def norm(params, x, support_cap=DEFAULT_SUPPORT_CAP):
    """Exact norm of x with a witnessing partition certificate.

    Dynamic program over interval decompositions: a split is determined by
    its set of minima M in the family; each block extends to the interval
    reaching the next minimum (enlarging blocks never lowers the sum, by
    projection contraction), and coordinates before the first minimum are
    dropped.
    """
    if not x:
        return (Fraction(0), Leaf(0, 0))
    supp = x.support
    if len(supp) > support_cap:
        raise NormError("support size %d exceeds cap %d" % (len(supp), support_cap))
    fam = params.family
    c = params.c
    coeff = dict(x.entries)
    memo = {}

    def solve(lo, hi):
        """Norm of x restricted to supp[lo:hi]; returns (value, cert)."""
        key = (lo, hi)
        if key in memo:
            return memo[key]
        best_pos = max(range(lo, hi), key=lambda p: abs(coeff[supp[p]]))
        best = (abs(coeff[supp[best_pos]]), Leaf(supp[best_pos], abs(coeff[supp[best_pos]])))
        # memoize the sup-norm answer first: recursive splits only touch
        # strictly shorter intervals, so no cycle arises.
        memo[key] = best

        def extend(mins):
            nonlocal best
            last = mins[-1]
            if len(mins) >= 2:
                cuts = list(mins) + [hi]
                total = Fraction(0)
                children = []
                blocks = []
                for a, b in zip(cuts, cuts[1:]):
                    val, cert = solve(a, b)
                    total += val
                    children.append(cert)
                    blocks.append(supp[a:b])
                if c * total > best[0]:
                    best = (c * total, Node(blocks, children, c * total))
            for nxt in range(last + 1, hi):
                if fam.contains(tuple(supp[p] for p in mins) + (supp[nxt],)):
                    extend(mins + (nxt,))

        for first in range(lo, hi):
            if fam.contains((supp[first],)):
                extend((first,))
        memo[key] = best
        return best

    value, cert = solve(0, len(supp))
    return (value, cert)


def verify_certificate(params, x, cert):
    """Recompute a certificate bottom-up and check admissibility at each node.

    Returns the certified value, a lower bound for the norm; raises
    CertificateError at the first invalid node.
    """
    coeff = dict(x.entries)
    c = params.c

    def check(node, allowed):
        if isinstance(node, Leaf):
            if node.index not in coeff:
                raise CertificateError("leaf index %d outside support" % node.index)
            if allowed is not None and node.index not in allowed:
                raise CertificateError("leaf index %d escapes its block" % node.index)
            if node.value != abs(coeff[node.index]):
                raise CertificateError("leaf value mismatch at index %d" % node.index)
            return node.value
        if not isinstance(node, Node):
            raise CertificateError("unknown certificate node %r" % (node,))
        if not node.blocks or any(not b for b in node.blocks):
            raise CertificateError("empty block in certificate node")
        if len(node.blocks) != len(node.children):
            raise CertificateError("block/child count mismatch")
        if not is_admissible(params.family, node.blocks):
            raise CertificateError("inadmissible blocks %r" % (node.blocks,))
        for b in node.blocks:
            if allowed is not None and not set(b) <= allowed:
                raise CertificateError("block %r escapes its parent" % (b,))
        total = sum(
            (check(ch, set(b)) for b, ch in zip(node.blocks, node.children)), Fraction(0)
        )
        if node.value != c * total:
            raise CertificateError("node value mismatch: %s != %s" % (node.value, c * total))
        return node.value

    return check(cert, None)


def norm_exhaustive(params, x):
    """Fixed point over all admissible successive-subset decompositions.

    Independent oracle for `norm`: blocks are arbitrary successive subsets of
    the support (found by assigning each coordinate to a block or skipping
    it), not just intervals.  One-block decompositions never beat the
    running best (c||x|B|| <= c||x|| < ||x||), and with two or more blocks
    every block has strictly smaller support, so the recursion is
    well-founded without a depth bound.
    """
    if not x:
        return Fraction(0)
    fam = params.family
    c = params.c
    memo = {}

    def value(vec):
        key = vec.entries
        if key in memo:
            return memo[key]
        best = vec.sup_norm()
        supp = vec.support
        if len(supp) > 1:

            def assign(pos, mins, open_block, done_blocks):
                nonlocal best
                if pos == len(supp):
                    blocks = done_blocks + ([open_block] if open_block else [])
                    if len(blocks) >= 2:
                        total = sum(
                            (value(vec.restrict(b)) for b in blocks), Fraction(0)
                        )
                        if c * total > best:
                            best = c * total
                    return
                p = supp[pos]
                # skip this coordinate
                assign(pos + 1, mins, open_block, done_blocks)
                # extend the open block
                if open_block:
                    assign(pos + 1, mins, open_block + [p], done_blocks)
                # open a new block with minimum p
                if fam.contains(tuple(mins) + (p,)):
                    assign(
                        pos + 1,
                        mins + [p],
                        [p],
                        done_blocks + ([open_block] if open_block else []),
                    )

            assign(0, [], None, [])
        memo[key] = best
        return best

    return value(x)


def norm_value(params, x, cache_dir=None):
    """Norm value with optional persistent caching.

    The cache directory comes from `cache_dir` or the SCHREIER_CACHE_DIR
    environment variable; without either this is just `norm(...)[0]`.
    """
    from . import cache
    from .vectors import format_vec

    path = cache.cache_path(cache_dir)
    family_key, c_key = params.key()
    vec_key = format_vec(x)
    hit = cache.lookup(path, family_key, c_key, vec_key)
    if hit is not None:
        return Fraction(hit[0])
    value, cert = norm(params, x)
    cache.store(path, family_key, c_key, vec_key, str(value), cache.cert_digest(cert))
    return value


def check_unconditional(params, x, sign_cap=12, evaluate=None):
    """Exact norm invariance under every sign flip of the coefficients."""
    if len(x) > sign_cap:
        raise NormError("sign exhaustion capped at support size %d" % sign_cap)
    evaluate = evaluate or (lambda v: norm(params, v)[0])
    supp = x.support
    base = evaluate(x)
    for mask in range(2 ** len(supp)):
        signs = {supp[k]: (-1 if (mask >> k) & 1 else 1) for k in range(len(supp))}
        if evaluate(x.flip(signs)) != base:
            return False
    return True


def check_right_dominant(params, x, spread_map, evaluate=None):
    """Exact check that spreading indices rightward does not lower the norm."""
    supp = x.support
    for i in supp:
        if spread_map[i] < i:
            raise NormError("spread map must satisfy m(i) >= i")
    mapped = [spread_map[i] for i in supp]
    if any(a >= b for a, b in zip(mapped, mapped[1:])):
        raise NormError("spread map must be strictly increasing on the support")
    evaluate = evaluate or (lambda v: norm(params, v)[0])
    return evaluate(x) <= evaluate(x.map_indices(spread_map))


def domination_search(params_u, params_v, bound, budget=2000, rng=None, max_support=5):
    """Certified lower bound for the least C with ||x||_U <= C ||x||_V.

    Exhausts small sparse sign/coefficient patterns within the budget, then
    refines the best witness coordinatewise.  The witness attains the
    reported ratio exactly.
    """
    import itertools
    import random

    rng = rng or random.Random(0)
    coeff_pool = [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(1, 3), Fraction(3)]
    best_ratio = None
    best_witness = None
    evals = 0

    def consider(vec):
        nonlocal best_ratio, best_witness, evals
        if not vec or evals >= budget:
            return
        evals += 1
        ratio = norm(params_u, vec)[0] / norm(params_v, vec)[0]
        if best_ratio is None or ratio > best_ratio:
            best_ratio = ratio
            best_witness = vec

    indices = list(range(1, bound + 1))
    for size in range(1, min(max_support, bound) + 1):
        for supp in itertools.combinations(indices, size):
            if evals >= budget:
                break
            consider(SparseVec([(i, Fraction(1)) for i in supp]))
            for _ in range(2):
                coeffs = [rng.choice(coeff_pool) * rng.choice((1, -1)) for _ in supp]
                consider(SparseVec(list(zip(supp, coeffs))))

    # local refinement of the best witness
    improved = True
    while improved and evals < budget:
        improved = False
        for i in best_witness.support:
            for step in (Fraction(1, 4), Fraction(-1, 4), Fraction(1, 2), Fraction(-1, 2)):
                cand = best_witness.add(SparseVec([(i, step)]))
                if not cand or evals >= budget:
                    continue
                prev = best_ratio
                consider(cand)
                if best_ratio > prev:
                    improved = True
    return (best_ratio, best_witness)

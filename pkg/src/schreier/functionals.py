"""Norming functionals for Tsirelson-type norms, and the dual gauge.

The norm ||.||_(F,c) is realized as a supremum over the functional set
generated from the coordinate functionals by

    f  =  c * (f_1 + ... + f_k),   k >= 2,

where the supports of the f_j are successive and their minima form a member
of F.  Generation is graded by depth; at depth >= |supp(x)| the supremum
over the set equals the norm (tested, not assumed).
"""

from __future__ import annotations

from fractions import Fraction

from . import simplex
from .norms import NormError
from .vectors import SparseVec


class FunctionalSet:
    """Generated norming functionals over a bounded index range.

    `depths` maps each functional (a SparseVec) to the generation depth at
    which it first appeared.
    """

    def __init__(self, params, indices, depths, signed):
        self.params = params
        self.indices = tuple(indices)
        self.depths = depths
        self.signed = signed

    def __iter__(self):
        return iter(self.depths)

    def __len__(self):
        return len(self.depths)

    def __contains__(self, f):
        return f in self.depths


def _generate(family, c, indices, depth, signed, budget):
    indices = tuple(sorted(indices))
    base = [SparseVec([(i, Fraction(1))]) for i in indices]
    if signed:
        base += [f.scale(-1) for f in base]
    depths = {f: 0 for f in base}
    current = set(depths)
    for level in range(1, depth + 1):
        pool = sorted(current, key=lambda f: (f.support, f.entries))
        new = set()

        def combine(chosen, mins, last_max):
            if len(depths) + len(new) > budget:
                raise NormError("functional generation budget exceeded")
            if len(chosen) >= 2:
                total = chosen[0]
                for f in chosen[1:]:
                    total = total.add(f)
                new.add(total.scale(c))
            for f in pool:
                supp = f.support
                if supp[0] <= last_max:
                    continue
                if family.contains(tuple(mins) + (supp[0],)):
                    combine(chosen + [f], mins + [supp[0]], supp[-1])

        combine([], [], 0)
        fresh = new - current
        for f in fresh:
            depths[f] = level
        if not fresh:
            break
        current |= fresh
    return depths


def norming_set(params, bound, depth, signed=True, budget=2_000_000):
    """The functional set K_depth over indices [1..bound]."""
    indices = range(1, bound + 1)
    depths = _generate(params.family, params.c, indices, depth, signed, budget)
    return FunctionalSet(params, indices, depths, signed)


def norm_via_functionals(params, x, depth=None):
    """Norm of x as the supremum of <f, x> over the generated functional set.

    Uses sign symmetry of the generated set: the supremum over all signed
    functionals equals the supremum of <f, |x|> over positive ones.  Two
    exact reductions keep the evaluation finite at scale.  The pairing is
    linear in the summands of f = c(f_1 + ... + f_k), and the combination
    constraints (successive supports, minima in the family) see only the
    minimum and maximum of each summand's support, so among functionals
    sharing a (min, max) signature only the best pairing value can ever
    appear in an optimal combination.  The levelwise state is therefore one
    value per signature, iterated to its fixed point, which is reached by
    level |supp(x)| at the latest.
    """
    if not x:
        return Fraction(0)
    fam = params.family
    c = params.c
    ax = x.abs()
    supp = x.support
    if depth is None:
        depth = len(supp)
    pool = {(i, i): ax[i] for i in supp}

    for _ in range(depth):
        new = {}
        sigs = sorted(pool)

        def combine(mins, last_max, total):
            if len(mins) >= 2:
                sig = (mins[0], last_max)
                val = c * total
                if val > new.get(sig, Fraction(-1)):
                    new[sig] = val
            for (m, mx) in sigs:
                if m > last_max and fam.contains(tuple(mins) + (m,)):
                    combine(mins + [m], mx, total + pool[(m, mx)])

        combine([], 0, Fraction(0))
        improved = False
        for sig, val in new.items():
            if val > pool.get(sig, Fraction(-1)):
                pool[sig] = val
                improved = True
        if not improved:
            break
    return max(pool.values())


def dual_norm(params, g, bound, depth, functionals=None):
    """Gauge of the convex hull of the generated signed functional set.

    Exact minimum of sum |lam_j| over decompositions g = sum lam_j f_j with
    f_j in norming_set(params, bound, depth); at sufficient depth this is
    the dual norm restricted to the span.
    """
    if not g:
        return Fraction(0)
    if g.support[-1] > bound:
        raise NormError("support of g exceeds the functional bound")
    if functionals is None:
        functionals = norming_set(params, bound, depth, signed=True)
    cols = list(functionals)
    matrix = [[f[i] for i in range(1, bound + 1)] for f in cols]
    target = [g[i] for i in range(1, bound + 1)]
    value, _ = simplex.min_l1_combination(matrix, target, bound)
    return value

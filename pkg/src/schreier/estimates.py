"""Finite-scale norm estimates: l1 lower bounds and norm-equivalence samples."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import ordinals
from .families import Schreier, format_finset
from .norms import NormParams, norm
from .vectors import SparseVec


class EstimateError(ValueError):
    pass


def schreier_product_family(alpha, n):
    """The family S_(alpha*n), with alpha*n computed in ordinal arithmetic."""
    return Schreier(ordinals.mul(alpha, ordinals.from_int(n)))


def check_l1_lower(alpha, n, f_set, coeffs):
    """Exact check of the l1 lower estimate on a member of S_(alpha*n):

        || sum_{i in F} a_i e_i ||_(T_alpha)  >=  2^-n * sum |a_i| .
    """
    f_set = tuple(f_set)
    if len(coeffs) != len(f_set):
        raise EstimateError("need one coefficient per element of F")
    fam = schreier_product_family(alpha, n)
    if not fam.contains(f_set):
        raise EstimateError("F = %s is not a member of S_(alpha*n)" % format_finset(f_set))
    vec = SparseVec([(i, Fraction(a)) for i, a in zip(f_set, coeffs)])
    if not vec:
        return True
    params = NormParams(Schreier(alpha), Fraction(1, 2))
    value, _ = norm(params, vec)
    return value >= Fraction(1, 2**n) * vec.l1_norm()


def rational_root_half(n, tolerance=Fraction(1, 10**9)):
    """A rational approximation of 2^(-1/n), within the stated tolerance.

    The approximation is stored and used exactly; no floating point enters
    any norm computation.
    """
    if n < 1:
        raise EstimateError("n must be >= 1")
    if n == 1:
        return Fraction(1, 2)
    # bisection on c^n = 1/2 over rationals, well inside the tolerance
    lo, hi = Fraction(1, 2), Fraction(1)
    target = Fraction(1, 2)
    while hi - lo > tolerance / 8:
        mid = (lo + hi) / 2
        if mid**n < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass
class EquivalenceReport:
    """Extreme exact ratios between ||.||_(T_(alpha*n)) and ||.||_(T_(alpha,c))."""

    c: Fraction
    samples: int = 0
    max_ratio_up: Fraction = None  # sup of ||x||_(alpha*n) / ||x||_(alpha,c)
    max_ratio_down: Fraction = None  # sup of the reciprocal ratio
    witness_up: SparseVec = None
    witness_down: SparseVec = None
    ratios: list = field(default_factory=list)


def equivalence_sample(alpha, n, bound, samples):
    """Exact ratio report comparing T_(alpha*n) with T_(alpha, 2^(-1/n)).

    `samples` is a sequence of vectors with support inside [1..bound].
    """
    c = rational_root_half(n)
    report = EquivalenceReport(c=c)
    params_prod = NormParams(schreier_product_family(alpha, n), Fraction(1, 2))
    params_c = NormParams(Schreier(alpha), c)
    for x in samples:
        if not x:
            continue
        if x.support[-1] > bound:
            raise EstimateError("sample support exceeds bound %d" % bound)
        up = norm(params_prod, x)[0]
        down = norm(params_c, x)[0]
        ratio = up / down
        report.samples += 1
        report.ratios.append(ratio)
        if report.max_ratio_up is None or ratio > report.max_ratio_up:
            report.max_ratio_up = ratio
            report.witness_up = x
        if report.max_ratio_down is None or 1 / ratio > report.max_ratio_down:
            report.max_ratio_down = 1 / ratio
            report.witness_down = x
    return report

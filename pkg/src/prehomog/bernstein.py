"""The b-function engine.

Implements the functional equation f*(d/dx) f^{s+1} = b(s) f^s by
symbolic differentiation of symbolic powers: states are expressions
f^{s+1-k} * P with P in Q[s][x].  Derivations raise k by one; after n
derivations (n = deg f) the accumulated state is f^{s+1-n} * Q and the
candidate b(s) is read off from the cofactor identity Q = b(s) f^{n-1}.
Failure of that identity is a first-class result, not an exception:
for non-special inputs the equation genuinely does not hold.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import gcd, lcm

from . import liealg, linalg
from .errors import ClosureError, ContextError, DomainError
from .polyring import (NEG_INF, MultiPoly, Spectrum, UniPoly,
                       rational_root_spectrum)


class SPowerExpression:
    """f^{s+1-k} * P with P sparse in x and dense in s.

    terms maps exponent tuples to tuples of Fractions (s-coefficients,
    lowest degree first, trailing zeros trimmed).  deg_s P <= k always.
    """

    __slots__ = ("variables", "k", "terms")

    def __init__(self, variables, k, terms):
        variables = tuple(variables)
        if k < 0:
            raise DomainError("power offset must be nonnegative")
        clean = {}
        for exps, sc in terms.items():
            sc = list(sc)
            while sc and not sc[-1]:
                sc.pop()
            if not sc:
                continue
            if len(sc) - 1 > k:
                raise DomainError("s-degree exceeds the power offset")
            if len(exps) != len(variables):
                raise ContextError("exponent tuple length mismatch")
            clean[tuple(exps)] = tuple(Fraction(c) for c in sc)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SPowerExpression is immutable")

    @classmethod
    def start(cls, f: MultiPoly):
        """f^{s+1} * 1, the state before any derivation."""
        n = len(f.variables)
        return cls(f.variables, 0, {(0,) * n: (Fraction(1),)})

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, exps) -> UniPoly:
        return UniPoly(self.terms.get(tuple(exps), ()))

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return SPowerExpression(self.variables, self.k, {})
        return SPowerExpression(
            self.variables, self.k,
            {e: [c * v for v in sc] for e, sc in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, SPowerExpression):
            return NotImplemented
        if other.k != self.k:
            raise DomainError("cannot add expressions at different power offsets")
        if other.variables != self.variables:
            raise ContextError("variable context mismatch")
        out = {e: list(sc) for e, sc in self.terms.items()}
        for e, sc in other.terms.items():
            cur = out.get(e)
            if cur is None:
                out[e] = list(sc)
            else:
                if len(cur) < len(sc):
                    cur.extend([Fraction(0)] * (len(sc) - len(cur)))
                for i, v in enumerate(sc):
                    cur[i] += v
        return SPowerExpression(self.variables, self.k, out)

    def __eq__(self, other):
        if not isinstance(other, SPowerExpression):
            return NotImplemented
        return (self.variables, self.k, self.terms) == \
            (other.variables, other.k, other.terms)

    def __repr__(self):
        return f"SPowerExpression(k={self.k}, terms={len(self.terms)})"


class BResult:
    """Successful functional equation: b monic, with diagnostics."""

    __slots__ = ("b", "raw_leading", "spectrum", "degree", "special", "symmetric")
    functional_equation_held = True

    def __init__(self, b: UniPoly, raw_leading: Fraction, spectrum: Spectrum,
                 special=None, symmetric=None):
        self.b = b
        self.raw_leading = Fraction(raw_leading)
        self.spectrum = spectrum
        self.degree = b.degree()
        self.special = special
        self.symmetric = symmetric

    def __repr__(self):
        return f"BResult(b={self.b}, raw_leading={self.raw_leading})"


class BFailure:
    """Negative verdict: the functional equation does not hold."""

    __slots__ = ("reason", "detail", "special")
    functional_equation_held = False

    def __init__(self, reason, detail="", special=None):
        self.reason = reason  # "functional-equation" or "dual-degenerate"
        self.detail = detail
        self.special = special

    def message(self):
        if self.reason == "dual-degenerate":
            return "dual determinant vanishes identically (f* = 0)"
        return "functional equation does not hold"

    def __repr__(self):
        return f"BFailure({self.reason}: {self.detail})"


def apply_derivation(e: SPowerExpression, v, f: MultiPoly) -> SPowerExpression:
    """One derivative: d/dv (f^{s+1-k} P) = f^{s-k} ((s+1-k) f_v P + f dP/dv)."""
    if v not in e.variables:
        raise ContextError(f"unknown variable {v!r}")
    if f.variables != e.variables:
        raise ContextError("f must live on the expression's variables")
    i = e.variables.index(v)
    k = e.k
    out = {}

    def add_in(exps, sc):
        cur = out.get(exps)
        if cur is None:
            out[exps] = list(sc)
        else:
            if len(cur) < len(sc):
                cur.extend([Fraction(0)] * (len(sc) - len(cur)))
            for idx, val in enumerate(sc):
                cur[idx] += val

    # (s + 1 - k) * f_v * P
    fv = f.derivative(v)
    shift = Fraction(1 - k)
    for e1, sc in e.terms.items():
        lifted = [Fraction(0)] * (len(sc) + 1)
        for idx, val in enumerate(sc):
            lifted[idx] += shift * val
            lifted[idx + 1] += val
        for e2, c2 in fv.terms.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            add_in(exps, [c2 * val for val in lifted])
    # f * dP/dv
    for e1, sc in e.terms.items():
        if not e1[i]:
            continue
        mult = e1[i]
        de1 = e1[:i] + (e1[i] - 1,) + e1[i + 1:]
        dsc = [mult * val for val in sc]
        for e2, c2 in f.terms.items():
            exps = tuple(a + b for a, b in zip(de1, e2))
            add_in(exps, [c2 * val for val in dsc])
    return SPowerExpression(e.variables, k + 1, out)


# ---------------------------------------------------------------------
# integer fast path used by apply_operator: same recurrence as
# apply_derivation, over content-free integer forms of f and f*.

def _primitive_terms(p: MultiPoly):
    """(integer term dict, scale) with p = scale * integer poly."""
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    ints = {e: int(c * den) for e, c in p.terms.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    if g > 1:
        ints = {e: v // g for e, v in ints.items()}
    else:
        g = 1
    return ints, Fraction(g, den)


def _int_step(P, k, fv, f, vi):
    """One derivation over integer dicts; P maps exps -> list[int]."""
    out = {}

    def add_in(exps, sc):
        cur = out.get(exps)
        if cur is None:
            out[exps] = list(sc)
        else:
            if len(cur) < len(sc):
                cur.extend([0] * (len(sc) - len(cur)))
            for idx, val in enumerate(sc):
                cur[idx] += val

    c0 = 1 - k
    for e1, sc in P.items():
        lifted = [0] * (len(sc) + 1)
        for idx, val in enumerate(sc):
            lifted[idx] += c0 * val
            lifted[idx + 1] += val
        for e2, c2 in fv.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            add_in(exps, [c2 * val for val in lifted])
    for e1, sc in P.items():
        mult = e1[vi]
        if not mult:
            continue
        de1 = e1[:vi] + (e1[vi] - 1,) + e1[vi + 1:]
        dsc = [mult * val for val in sc]
        for e2, c2 in f.items():
            exps = tuple(a + b for a, b in zip(de1, e2))
            add_in(exps, [c2 * val for val in dsc])
    for e in list(out):
        sc = out[e]
        while sc and not sc[-1]:
            sc.pop()
        if not sc:
            del out[e]
    return out


def _run_monomial(alpha, f_int, fderivs, nvars):
    P = {(0,) * nvars: [1]}
    k = 0
    for vi in range(nvars):
        for _ in range(alpha[vi]):
            P = _int_step(P, k, fderivs[vi], f_int, vi)
            k += 1
    return P


def _fanout_width():
    raw = os.environ.get("PREHOMOG_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def apply_operator(fstar: MultiPoly, f: MultiPoly) -> SPowerExpression:
    """Apply f*(d/dx) to f^{s+1}; returns the k = deg f state.

    The dual variables of fstar map to f's variables positionally.
    Monomials of f* are processed independently (optionally fanned out
    across PREHOMOG_THREADS workers) and merged in lexicographic order,
    so results are bit-identical regardless of scheduling.
    """
    if f.is_zero or fstar.is_zero:
        raise DomainError("f and f* must be nonzero")
    if len(fstar.variables) != len(f.variables):
        raise ContextError("f and f* must have the same number of variables")
    if not f.is_homogeneous() or not fstar.is_homogeneous():
        raise DomainError("f and f* must be homogeneous")
    n = f.degree()
    if fstar.degree() != n:
        raise DomainError(f"degree mismatch: deg f* = {fstar.degree()}, deg f = {n}")
    nvars = len(f.variables)

    f_int, f_scale = _primitive_terms(f)
    fs_int, fs_scale = _primitive_terms(fstar)
    fderivs = []
    for vi in range(nvars):
        d = {}
        for e, c in f_int.items():
            if e[vi]:
                de = e[:vi] + (e[vi] - 1,) + e[vi + 1:]
                d[de] = d.get(de, 0) + c * e[vi]
        fderivs.append(d)

    alphas = sorted(fs_int)  # lexicographic merge order
    width = _fanout_width()
    if width > 1 and len(alphas) > 1:
        with ThreadPoolExecutor(max_workers=width) as pool:
            parts = list(pool.map(
                lambda a: _run_monomial(a, f_int, fderivs, nvars), alphas))
    else:
        parts = [_run_monomial(a, f_int, fderivs, nvars) for a in alphas]

    total = {}
    for alpha, P in zip(alphas, parts):
        c_alpha = fs_int[alpha]
        for e, sc in P.items():
            cur = total.get(e)
            if cur is None:
                total[e] = [c_alpha * v for v in sc]
            else:
                if len(cur) < len(sc):
                    cur.extend([0] * (len(sc) - len(cur)))
                for i, v in enumerate(sc):
                    cur[i] += c_alpha * v

    # engine ran on scaled inputs; restore the true scale exactly
    mult = fs_scale * f_scale ** n
    terms = {e: [mult * v for v in sc] for e, sc in total.items()}
    return SPowerExpression(f.variables, n, terms)


def _int_poly_pow(p, k, nvars):
    acc = {(0,) * nvars: 1}
    for _ in range(k):
        out = {}
        for e1, c1 in acc.items():
            for e2, c2 in p.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        acc = {e: c for e, c in out.items() if c}
    return acc


def extract_cofactor(q: SPowerExpression, f: MultiPoly):
    """Divide the k = n state by f^{n-1}: on success the quotient is b(s).

    Picks the lexicographically first monomial x^beta of f^{n-1}, reads
    b(s) = Q_beta(s) / c_beta, and verifies Q - b(s) f^{n-1} = 0 exactly.
    A nonzero residual returns a BFailure, the expected outcome for
    non-special inputs.
    """
    if f.is_zero:
        raise DomainError("f must be nonzero")
    if not f.is_homogeneous():
        raise DomainError("f must be homogeneous")
    n = f.degree()
    if q.k != n:
        raise DomainError(f"expression offset {q.k} does not match deg f = {n}")
    if q.variables != f.variables:
        raise ContextError("variable context mismatch")
    if q.is_zero:
        return BFailure("functional-equation", "operator annihilated f^{s+1}")

    f_int, f_scale = _primitive_terms(f)
    nvars = len(f.variables)
    fpow = _int_poly_pow(f_int, n - 1, nvars)

    den = 1
    for sc in q.terms.values():
        for c in sc:
            den = lcm(den, c.denominator)
    q_int = {e: [int(c * den) for c in sc] for e, sc in q.terms.items()}

    beta = min(fpow)
    c_beta = fpow[beta]
    b_num = q_int.get(beta, [])
    if not b_num:
        return BFailure("functional-equation",
                        "cofactor monomial missing from the operator image")

    # verify c_beta * Q == b_num * f^{n-1} as integer polynomials in (x, s)
    if set(q_int) != set(fpow):
        return BFailure("functional-equation", "support mismatch against f^(n-1)")
    for e, c in fpow.items():
        lhs = [c_beta * v for v in q_int[e]]
        rhs = [c * v for v in b_num]
        if len(lhs) < len(rhs):
            lhs.extend([0] * (len(rhs) - len(lhs)))
        elif len(rhs) < len(lhs):
            rhs.extend([0] * (len(lhs) - len(rhs)))
        if lhs != rhs:
            return BFailure("functional-equation",
                            f"residual nonzero at monomial {e}")

    scale = Fraction(1, den) / (f_scale ** (n - 1) * c_beta)
    b_raw = UniPoly([Fraction(v) * scale for v in b_num])
    spectrum = rational_root_spectrum(b_raw)
    return BResult(b_raw.monic(), b_raw.leading(), spectrum)


def bfunction(g: liealg.GeneratorSet):
    """Full pipeline: discriminant, dual, operator application, cofactor.

    Returns BResult on success, BFailure when the functional equation
    fails or the dual determinant vanishes.
    """
    report = liealg.validate_algebra(g)
    if not report.closed:
        i, j = report.failing_pair
        raise ClosureError(f"bracket [A{i + 1}, A{j + 1}] is outside the generator span")
    f = liealg.discriminant(g)
    if f.is_zero:
        raise DomainError("discriminant vanishes; not prehomogeneous")
    c = liealg.character(g, f)
    special = liealg.is_special(c)
    fstar = liealg.discriminant(liealg.dual_generators(g))
    if fstar.is_zero:
        return BFailure("dual-degenerate", "f* = 0", special=special)
    q = apply_operator(fstar.with_variables(f.variables), f)
    result = extract_cofactor(q, f)
    result.special = special
    if isinstance(result, BResult):
        result.symmetric = symmetry_check(result.b)
    return result


def symmetry_check(b: UniPoly) -> bool:
    """Monic b(s) against (-1)^d * b(-s-2): root symmetry about -1."""
    if b.is_zero:
        raise DomainError("zero polynomial")
    monic = b.monic()
    d = monic.degree()
    reflected = monic.compose_linear(-1, -2) * ((-1) ** d)
    return monic == reflected


def annihilator_identity_check(A, g: liealg.GeneratorSet) -> bool:
    """Does Q_A = delta_A - s tr(A) annihilate f^s?  Equivalent to
    delta_A(f) = tr(A) f, i.e. dchi(A) = tr(A)."""
    f = liealg.discriminant(g)
    if f.is_zero:
        raise DomainError("discriminant vanishes")
    A = linalg.frac_matrix(A)
    d = liealg.infinitesimal_apply(A, f)
    lead_e, lead_c = f.leading_term_lex()
    lam = d.coefficient(lead_e) / lead_c
    if d != f * lam:
        return False
    return lam == linalg.trace(A)


def apply_constant_coefficient_operator(fstar: MultiPoly, p: MultiPoly) -> MultiPoly:
    """Literal f*(d/dx) p by repeated differentiation; brute-force oracle."""
    if len(fstar.variables) != len(p.variables):
        raise ContextError("variable count mismatch")
    out = MultiPoly.zero(p.variables)
    for alpha in sorted(fstar.terms):
        c = fstar.terms[alpha]
        q = p
        for vi, e in enumerate(alpha):
            for _ in range(e):
                q = q.derivative(p.variables[vi])
                if q.is_zero:
                    break
        out = out + c * q
    return out


# ---------------------------------------------------------------------
# normal-ordered first-order operators and the Fourier identity

class FirstOrderOperator:
    """sum_{i,j} C[i][j] x_i d_j + c0 + c1*s, normal ordered (x before d)."""

    __slots__ = ("C", "c0", "c1")

    def __init__(self, C, c0=0, c1=0):
        self.C = linalg.frac_matrix(C)
        self.c0 = Fraction(c0)
        self.c1 = Fraction(c1)

    def __eq__(self, other):
        if not isinstance(other, FirstOrderOperator):
            return NotImplemented
        return (self.C, self.c0, self.c1) == (other.C, other.c0, other.c1)

    def __repr__(self):
        return f"FirstOrderOperator(C={self.C}, c0={self.c0}, c1={self.c1})"


def q_operator(A, s_trace) -> FirstOrderOperator:
    """Q_A(s) = delta_A - s_trace * s; delta_A = sum A[i][j] x_j d_i."""
    return FirstOrderOperator(linalg.transpose(linalg.frac_matrix(A)),
                              0, -Fraction(s_trace))


def q_dual_operator(A, s_trace) -> FirstOrderOperator:
    """Q*_A(s) = delta*_A + s_trace * s on the dual side."""
    return FirstOrderOperator(linalg.mat_scale(linalg.frac_matrix(A), -1),
                              0, Fraction(s_trace))


def fourier_transform(op: FirstOrderOperator) -> FirstOrderOperator:
    """x -> -d, d -> y, then normal order.  Reordering d_i y_i = y_i d_i + 1
    produces the trace shift in the constant term."""
    newC = linalg.mat_scale(linalg.transpose(op.C), -1)
    return FirstOrderOperator(newC, op.c0 - linalg.trace(op.C), op.c1)


def substitute_s(op: FirstOrderOperator, a, b) -> FirstOrderOperator:
    """s -> a*s + b in the scalar part."""
    a, b = Fraction(a), Fraction(b)
    return FirstOrderOperator(op.C, op.c0 + op.c1 * b, op.c1 * a)


def fourier_check(A, s_trace=None) -> bool:
    """Is F(Q_A(s)) = Q*_A(-s-1)?  Holds exactly when s_trace = tr(A)."""
    A = linalg.frac_matrix(A)
    t = linalg.trace(A) if s_trace is None else Fraction(s_trace)
    lhs = fourier_transform(q_operator(A, t))
    rhs = substitute_s(q_dual_operator(A, t), -1, -1)
    return lhs == rhs

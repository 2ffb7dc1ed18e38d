"""Exact sparse polynomial arithmetic over rationals.

MultiPoly is a sparse multivariate polynomial: a map from exponent
tuples to Fraction coefficients, together with an ordered variable
context.  UniPoly is dense univariate, lowest degree first.  All
arithmetic is exact; there is no floating point anywhere.
"""

import random
import re
from fractions import Fraction

from .errors import CapacityError, ContextError, DomainError, ParseError

# Rationals are stdlib Fractions: lowest terms, positive denominator, exact.
Rational = Fraction

# total-degree cap; beyond this we refuse rather than grind forever
MAX_TOTAL_DEGREE = 10**6


class _NegInf:
    """Degree of the zero polynomial; compares below every number."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __neg__(self):
        return self

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return parse_rational(c)
    raise ContextError(f"cannot use {type(c).__name__} as a coefficient")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ParseError(f"bad rational literal {text!r}")
    return Fraction(text)


def format_rational(c: Fraction) -> str:
    return str(c)


class MultiPoly:
    """Sparse multivariate polynomial over Q.

    terms maps exponent tuples (one entry per variable) to nonzero
    Fraction coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms", "_degree")

    def __init__(self, variables, terms):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ContextError("duplicate variable names")
        clean = {}
        nv = len(variables)
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != nv:
                raise ContextError("exponent tuple length does not match variables")
            if any(e < 0 for e in exps):
                raise DomainError("negative exponent")
            c = _coerce(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})
        object.__setattr__(self, "_degree", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): _coerce(c)})

    @classmethod
    def gens(cls, variables):
        """The coordinate polynomials, one per variable."""
        variables = tuple(variables)
        n = len(variables)
        out = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            out.append(cls(variables, {tuple(e): Fraction(1)}))
        return tuple(out)

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise ContextError(f"unknown variable {name!r}")
        return cls.gens(variables)[variables.index(name)]

    # -- basic queries -----------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; NEG_INF for the zero polynomial."""
        if self._degree is None:
            d = NEG_INF if not self.terms else max(sum(e) for e in self.terms)
            object.__setattr__(self, "_degree", d)
        return self._degree

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def leading_term_lex(self):
        """(exponent tuple, coefficient) of the lexicographically first monomial."""
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        e = min(self.terms)
        return e, self.terms[e]

    def homogeneous_components(self):
        """Map total degree -> homogeneous part."""
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: MultiPoly(self.variables, t) for d, t in sorted(parts.items())}

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # -- variable context handling -----------------------------------

    def _unified(self, other):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        merged = list(self.variables) + [v for v in other.variables if v not in self.variables]
        merged = tuple(merged)

        def remap(poly):
            idx = [merged.index(v) for v in poly.variables]
            out = {}
            for e, c in poly.terms.items():
                ne = [0] * len(merged)
                for pos, exp in zip(idx, e):
                    ne[pos] = exp
                out[tuple(ne)] = c
            return out

        return merged, remap(self), remap(other)

    def with_variables(self, variables):
        """Same coefficients on renamed variables (positional)."""
        variables = tuple(variables)
        if len(variables) != len(self.variables):
            raise ContextError("variable count mismatch")
        return MultiPoly(variables, self.terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.variables, other)
        variables, a, b = self._unified(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _coerce(other)
            if not c:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables, {e: c * v for e, v in self.terms.items()})
        variables, a, b = self._unified(other)
        if a and b:
            da = max(sum(e) for e in a)
            db = max(sum(e) for e in b)
            if da + db > MAX_TOTAL_DEGREE:
                raise CapacityError("product degree exceeds supported range")
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly(variables, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise DomainError("exponent must be a nonnegative integer")
        d = self.degree()
        if d is not NEG_INF and d * k > MAX_TOTAL_DEGREE:
            raise CapacityError("power degree exceeds supported range")
        result = MultiPoly.constant(self.variables, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                return self == MultiPoly.constant(self.variables, other)
            return NotImplemented
        variables, a, b = self._unified(other)
        return a == b

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- calculus and substitution ------------------------------------

    def derivative(self, v):
        if v not in self.variables:
            raise ContextError(f"unknown variable {v!r}")
        i = self.variables.index(v)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = out.get(ne, Fraction(0)) + c * e[i]
        return MultiPoly(self.variables, out)

    def evaluate(self, point):
        point = [_coerce(x) for x in point]
        if len(point) != len(self.variables):
            raise ContextError("point dimension mismatch")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def shift(self, point):
        """p(point + x), same variable context."""
        point = [_coerce(x) for x in point]
        if len(point) != len(self.variables):
            raise ContextError("point dimension mismatch")
        nv = len(self.variables)
        one = MultiPoly.constant(self.variables, 1)
        xs = MultiPoly.gens(self.variables)
        # cache (i, k) -> (point_i + x_i)^k
        cache = {}

        def lin_pow(i, k):
            got = cache.get((i, k))
            if got is None:
                got = (xs[i] + point[i]) ** k
                cache[(i, k)] = got
            return got

        result = MultiPoly.zero(self.variables)
        for e, c in self.terms.items():
            term = one * c
            for i in range(nv):
                if e[i]:
                    term = term * lin_pow(i, e[i])
            result = result + term
        return result

    def restrict(self, keep_indices):
        """Set all variables outside keep_indices to zero; project onto the kept ones."""
        keep = list(keep_indices)
        if any(i < 0 or i >= len(self.variables) for i in keep):
            raise ContextError("restrict index out of range")
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in range(len(e)) if i not in keep):
                continue
            ne = tuple(e[i] for i in keep)
            out[ne] = c
        return MultiPoly(tuple(self.variables[i] for i in keep), out)

    def restrict_line(self, a, b):
        """Univariate restriction t -> p(a + t*b)."""
        a = [_coerce(x) for x in a]
        b = [_coerce(x) for x in b]
        if len(a) != len(self.variables) or len(b) != len(self.variables):
            raise ContextError("line dimension mismatch")
        cache = {}

        def lin_pow(i, k):
            # (a_i + t b_i)^k as a dense coefficient list
            got = cache.get((i, k))
            if got is None:
                cur = [Fraction(1)]
                for _ in range(k):
                    nxt = [Fraction(0)] * (len(cur) + 1)
                    for j, c in enumerate(cur):
                        nxt[j] += c * a[i]
                        nxt[j + 1] += c * b[i]
                    cur = nxt
                got = cur
                cache[(i, k)] = got
            return got

        acc = [Fraction(0)]
        for e, c in self.terms.items():
            term = [c]
            for i, k in enumerate(e):
                if k:
                    f = lin_pow(i, k)
                    term = _dense_mul(term, f)
            if len(term) > len(acc):
                acc.extend([Fraction(0)] * (len(term) - len(acc)))
            for j, v in enumerate(term):
                acc[j] += v
        return UniPoly(acc)

    # -- display -------------------------------------------------------

    def _monomial_str(self, e):
        parts = []
        for v, k in zip(self.variables, e):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        # sort by descending total degree then lexicographic exponent order
        keys = sorted(self.terms, key=lambda e: (-sum(e), e))
        pieces = []
        for e in keys:
            c = self.terms[e]
            mono = self._monomial_str(e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self})"


def _dense_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


class UniPoly:
    """Dense univariate polynomial over Q, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots):
        p = cls.one()
        for r in roots:
            p = p * cls((-_coerce(r), 1))
        return p

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self):
        if not self.coeffs:
            raise DomainError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        return UniPoly([c / lead for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = _coerce(other)
            return UniPoly([c * v for v in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero()
        return UniPoly(_dense_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result = UniPoly.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __divmod__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        if other.is_zero:
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.coeffs
        while len(rem) >= len(d) and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) < len(d):
                break
            f = rem[-1] / d[-1]
            shift = len(rem) - len(d)
            q[shift] = f
            for i, c in enumerate(d):
                rem[shift + i] -= f * c
            rem.pop()
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def evaluate(self, x) -> Fraction:
        x = _coerce(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def compose_linear(self, a, b):
        """p(a*s + b) by Horner over Q[s]."""
        a, b = _coerce(a), _coerce(b)
        lin = UniPoly((b, a))
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def deflate(self, root):
        """Exact division by (s - root); raises if root is not a root."""
        root = _coerce(root)
        if self.evaluate(root):
            raise DomainError(f"{root} is not a root")
        out = [Fraction(0)] * (len(self.coeffs) - 1)
        carry = Fraction(0)
        for i in range(len(self.coeffs) - 1, 0, -1):
            carry = self.coeffs[i] + carry * root
            out[i - 1] = carry
        return UniPoly(out)

    def primitive_integer_form(self):
        """(integer coefficient list, scale) with self = scale * that poly."""
        if not self.coeffs:
            return [], Fraction(1)
        from math import gcd, lcm
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        return ints, Fraction(g, den)

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                v = "s" if i == 1 else f"s^{i}"
                body = v if abs(c) == 1 else f"{abs(c)}*{v}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"UniPoly({self})"


class Spectrum:
    """Monic normalization, rational roots with multiplicity, monic residual."""

    __slots__ = ("monic", "roots", "residual")

    def __init__(self, monic, roots, residual):
        object.__setattr__(self, "monic", monic)
        object.__setattr__(self, "roots", tuple(roots))
        object.__setattr__(self, "residual", residual)

    def __setattr__(self, name, value):
        raise AttributeError("Spectrum is immutable")

    def root_multiset(self):
        out = []
        for r, m in self.roots:
            out.extend([r] * m)
        return out

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return (self.monic, self.roots, self.residual) == (other.monic, other.roots, other.residual)

    def __str__(self):
        if not self.roots:
            body = "no rational roots"
        else:
            body = ", ".join(f"{r}" + (f" (x{m})" if m > 1 else "") for r, m in self.roots)
        if self.residual.degree() is NEG_INF or self.residual.degree() == 0:
            return body
        return f"{body}; residual {self.residual}"


def univariate_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd via a primitive remainder sequence (content stripped per step)."""
    if a.is_zero and b.is_zero:
        raise DomainError("gcd of two zero polynomials")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    p, _ = a.primitive_integer_form()
    q, _ = b.primitive_integer_form()
    if len(p) < len(q):
        p, q = q, p
    from math import gcd as igcd
    while q:
        # pseudo-remainder of p by q, then strip integer content
        r = list(p)
        lead_q = q[-1]
        while len(r) >= len(q) and any(r):
            while r and not r[-1]:
                r.pop()
            if len(r) < len(q):
                break
            shift = len(r) - len(q)
            top = r[-1]
            r = [c * lead_q for c in r]
            for i, c in enumerate(q):
                r[shift + i] -= top * c
            r.pop()
        while r and not r[-1]:
            r.pop()
        g = 0
        for v in r:
            g = igcd(g, abs(v))
        if g > 1:
            r = [v // g for v in r]
        p, q = q, r
    return UniPoly(p).monic()


def rational_root_spectrum(b: UniPoly) -> Spectrum:
    """All rational roots of b with multiplicities, by the rational root
    theorem on the primitive integer form, with exact deflation.  Roots are
    reported in ascending order; the residual carries any remaining
    non-rational factor, monic."""
    if b.is_zero:
        raise DomainError("zero polynomial has no spectrum")
    monic = b.monic()
    work = monic
    roots = []
    # peel off roots at zero first so the constant term is nonzero
    zero_mult = 0
    while not work.is_zero and work.degree() > 0 and not work.coeffs[0]:
        work = work.deflate(0)
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if work.degree() is not NEG_INF and work.degree() > 0:
        ints, _ = work.primitive_integer_form()
        c0, cd = abs(ints[0]), abs(ints[-1])
        for num in sorted(_divisors(c0)):
            for den in sorted(_divisors(cd)):
                for cand in (Fraction(-num, den), Fraction(num, den)):
                    mult = 0
                    while work.degree() is not NEG_INF and work.degree() > 0 \
                            and not work.evaluate(cand):
                        work = work.deflate(cand)
                        mult += 1
                    if mult:
                        roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0])
    residual = work.monic() if not work.is_zero else UniPoly.one()
    return Spectrum(monic, roots, residual)


def _divisors(n):
    if n == 0:
        return []
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def is_squarefree(p: MultiPoly, trials: int, seed: int) -> bool:
    """Monte Carlo squarefreeness via random line restrictions.

    Restricts p to t -> p(a + t*b) for random integer a, b, resampling
    whenever the restriction degree drops below deg p, then tests
    gcd(u, u') for a nontrivial common factor.  False as soon as one
    trial exhibits a repeated factor; true after `trials` clean trials.
    """
    if p.is_zero:
        raise DomainError("squarefreeness of the zero polynomial is undefined")
    if trials < 1:
        raise DomainError("trials must be positive")
    deg = p.degree()
    if deg == 0:
        return True
    rng = random.Random(seed)
    nv = len(p.variables)
    bound = 10**4
    done = 0
    attempts = 0
    while done < trials:
        attempts += 1
        if attempts > 200 * trials:
            raise DomainError("could not sample a degree-preserving line")
        a = [rng.randint(-bound, bound) for _ in range(nv)]
        b = [rng.randint(-bound, bound) for _ in range(nv)]
        if not any(b):
            continue
        u = p.restrict_line(a, b)
        if u.degree() != deg:
            continue  # degree dropped; bad line, resample
        g = univariate_gcd(u, u.derivative())
        if g.degree() is not NEG_INF and g.degree() > 0:
            return False
        done += 1
    return True


# -- factored polynomial string parsing ---------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([s()^*+-]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad character in polynomial at position {pos}: {text[pos:]!r}")
        num, sym = m.groups()
        out.append(("num", Fraction(num)) if num is not None else (sym, None))
        pos = m.end()
    return out


def parse_factored(text: str) -> UniPoly:
    """Parse products of factored polynomial strings in s, e.g.
    "(s+2/3)(s+1)^5(s+4/3)(s+2)" or "3s+2" or "(2s+1)(s+1)^2(2s+3)"."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take(kind=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of polynomial string")
        tok = tokens[pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}")
        pos += 1
        return tok

    def parse_sum():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
        acc = parse_product() * sign
        while peek() in ("+", "-"):
            op = take()[0]
            term = parse_product()
            acc = acc + (term if op == "+" else -term)
        return acc

    def parse_product():
        acc = parse_factor()
        while True:
            if peek() == "*":
                take()
                acc = acc * parse_factor()
            elif peek() in ("num", "s", "("):
                acc = acc * parse_factor()
            else:
                return acc

    def parse_factor():
        atom = parse_atom()
        if peek() == "^":
            take()
            tok = take("num")
            k = tok[1]
            if k.denominator != 1 or k < 0:
                raise ParseError("exponent must be a nonnegative integer")
            atom = atom ** int(k)
        return atom

    def parse_atom():
        kind = peek()
        if kind == "(":
            take()
            inner = parse_sum()
            take(")")
            return inner
        if kind == "num":
            return UniPoly((take()[1],))
        if kind == "s":
            take()
            return UniPoly.variable()
        raise ParseError(f"unexpected token {kind!r} in polynomial string")

    result = parse_sum()
    if pos != len(tokens):
        raise ParseError(f"trailing input in polynomial string: {tokens[pos:]}")
    return result

"""Exact sparse polynomials in ``q`` and ``(t, q)``, truncated series and
rational functions with factored denominators.

All coefficients are Python integers.  Objects are immutable values:
every operation returns a new object.

The four types:

``QLaurent``
    Laurent polynomial in one variable (``q`` by default), stored as
    ``{exponent: coefficient}`` with no zero coefficients.
``QTPoly``
    Polynomial in ``t`` (nonnegative exponents) with Laurent coefficients
    in ``q``, stored as ``{(r, k): coefficient}``.
``QTSeries``
    Power series in ``t`` truncated after ``t**order``; coefficients are
    ``QLaurent`` values.
``QTRational``
    ``numerator / prod(1 - q**e * t for e in denominator)``.  The
    denominator is a sorted tuple of exponents and is never cancelled
    automatically against the numerator.
"""

import json
from collections import Counter

DEFAULT_ORDER = 12


def _clean(terms):
    return {k: c for k, c in terms.items() if c}


class QLaurent:
    """Sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        self._terms = _clean({int(k): int(c) for k, c in dict(terms).items()})
        self._hash = None

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Exponent/coefficient pairs in increasing exponent order."""
        return sorted(self._terms.items())

    def coeff(self, k):
        return self._terms.get(k, 0)

    def is_zero(self):
        return not self._terms

    def min_exponent(self):
        return min(self._terms) if self._terms else None

    def max_exponent(self):
        return max(self._terms) if self._terms else None

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QLaurent(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QLaurent", tuple(self.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = QLaurent(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return QLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QLaurent(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QLaurent({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, QLaurent):
            return NotImplemented
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return QLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = QLaurent(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e):
        """Multiply by ``q**e``."""
        return QLaurent({k + e: c for k, c in self._terms.items()})

    def negate_exponents(self):
        """The substitution ``q -> 1/q``."""
        return QLaurent({-k: c for k, c in self._terms.items()})

    def substitute_power(self, e):
        """The substitution ``q -> q**e``."""
        out = {}
        for k, c in self._terms.items():
            out[k * e] = out.get(k * e, 0) + c
        return QLaurent(out)

    def eval_q1(self):
        return sum(self._terms.values())

    def coefficient_list(self):
        """Dense coefficients from the lowest to the highest exponent."""
        if not self._terms:
            return []
        lo, hi = self.min_exponent(), self.max_exponent()
        return [self._terms.get(k, 0) for k in range(lo, hi + 1)]

    def is_palindromic(self):
        cs = self.coefficient_list()
        return cs == cs[::-1]

    def to_str(self, var="q"):
        return render_laurent(self, var)

    def to_latex(self, var="q"):
        return render_laurent(self, var, latex=True)

    def to_json_obj(self):
        return [{"q": k, "coeff": str(c)} for k, c in self.items()]

    @classmethod
    def from_json_obj(cls, obj):
        return cls({int(e["q"]): int(e["coeff"]) for e in obj})

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"QLaurent({self.to_str()!r})"


def eval_q1(p):
    return p.eval_q1()


def negate_exponents(p):
    return p.negate_exponents()


class QTPoly:
    """Polynomial in ``t`` whose coefficients are Laurent polynomials in ``q``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0, 0): terms}
        elif isinstance(terms, QLaurent):
            terms = {(0, k): c for k, c in terms.terms.items()}
        clean = {}
        for (r, k), c in dict(terms).items():
            if r < 0:
                raise ValueError("t-exponents must be nonnegative")
            if c:
                clean[(int(r), int(k))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, r, k, c=1):
        return cls({(r, k): c})

    @classmethod
    def from_t_coefficients(cls, coeffs):
        """Build from a sequence whose ``r``-th entry is the ``t**r`` coefficient."""
        terms = {}
        for r, p in enumerate(coeffs):
            if isinstance(p, int):
                p = QLaurent(p)
            for k, c in p.terms.items():
                terms[(r, k)] = c
        return cls(terms)

    @classmethod
    def linear_factor(cls, e):
        """``1 - q**e * t``."""
        return cls({(0, 0): 1, (1, e): -1})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, r, k):
        return self._terms.get((r, k), 0)

    def t_degree(self):
        return max((r for r, _ in self._terms), default=None)

    def t_coefficient(self, r):
        return QLaurent({k: c for (rr, k), c in self._terms.items() if rr == r})

    def t_coefficients(self):
        deg = self.t_degree()
        if deg is None:
            return []
        return [self.t_coefficient(r) for r in range(deg + 1)]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, QLaurent)):
            other = QTPoly(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QTPoly", tuple(self.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, QLaurent)):
            other = QTPoly(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return QTPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QTPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, QLaurent)):
            other = QTPoly(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QTPoly({key: c * other for key, c in self._terms.items()})
        if isinstance(other, QLaurent):
            other = QTPoly(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = {}
        for (r1, k1), c1 in self._terms.items():
            for (r2, k2), c2 in other._terms.items():
                key = (r1 + r2, k1 + k2)
                out[key] = out.get(key, 0) + c1 * c2
        return QTPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = QTPoly(1)
        for _ in range(n):
            result = result * self
        return result

    def eval_q1(self):
        """Specialise ``q = 1``; the result is a polynomial in ``t`` (as a ``QLaurent``)."""
        out = {}
        for (r, _), c in self._terms.items():
            out[r] = out.get(r, 0) + c
        return QLaurent(out)

    def eval_t1(self):
        out = {}
        for (_, k), c in self._terms.items():
            out[k] = out.get(k, 0) + c
        return QLaurent(out)

    def substitute_t(self, e):
        """Substitute ``t = q**e``; returns a ``QLaurent``."""
        out = {}
        for (r, k), c in self._terms.items():
            out[k + e * r] = out.get(k + e * r, 0) + c
        return QLaurent(out)

    def collapse_q(self):
        """The same polynomial with every ``q`` set to 1, kept as a ``QTPoly``."""
        return QTPoly({(r, 0): c for r, c in self.eval_q1().terms.items()})

    def reciprocal(self, t_shift, q_shift):
        """``t**t_shift * q**q_shift * P(1/t, 1/q)``."""
        return QTPoly({(t_shift - r, q_shift - k): c for (r, k), c in self._terms.items()})

    def divide_linear_factor(self, e):
        """Exact quotient by ``1 - q**e * t``.

        Raises ``ValueError`` when the factor does not divide.
        """
        # P = (1 - q^e t) Q  gives  Q_r = P_r + q^e Q_{r-1}
        coeffs = self.t_coefficients()
        quotient = []
        prev = QLaurent()
        for p in coeffs:
            cur = p + prev.shift(e)
            quotient.append(cur)
            prev = cur
        if quotient and quotient[-1]:
            raise ValueError(f"(1 - q^{e} t) does not divide the polynomial")
        return QTPoly.from_t_coefficients(quotient[:-1])

    def to_str(self):
        return render_qtpoly(self)

    def to_latex(self):
        return render_qtpoly(self, latex=True)

    def to_json_obj(self):
        return [{"t": r, "q": k, "coeff": str(c)} for (r, k), c in self.items()]

    @classmethod
    def from_json_obj(cls, obj):
        return cls({(int(e["t"]), int(e["q"])): int(e["coeff"]) for e in obj})

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"QTPoly({self.to_str()!r})"


class QTSeries:
    """Power series in ``t`` known through ``t**order``."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [QLaurent(c) if isinstance(c, int) else c for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [QLaurent()] * (order + 1 - len(coeffs))
        self.order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def from_poly(cls, p, order):
        return cls([p.t_coefficient(r) for r in range(order + 1)], order)

    @property
    def coeffs(self):
        return list(self._coeffs)

    def __getitem__(self, r):
        return self._coeffs[r]

    def __len__(self):
        return self.order + 1

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"series known only to order {self.order}")
        return QTSeries(self._coeffs[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, QTSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("QTSeries", self.order, self._coeffs))

    def __add__(self, other):
        n = min(self.order, other.order)
        return QTSeries([self[r] + other[r] for r in range(n + 1)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return QTSeries([self[r] - other[r] for r in range(n + 1)], n)

    def __mul__(self, other):
        if isinstance(other, (int, QLaurent)):
            return QTSeries([c * other for c in self._coeffs], self.order)
        if isinstance(other, QTPoly):
            other = QTSeries.from_poly(other, self.order)
        n = min(self.order, other.order)
        out = []
        for r in range(n + 1):
            acc = QLaurent()
            for i in range(r + 1):
                if self[i] and other[r - i]:
                    acc = acc + self[i] * other[r - i]
            out.append(acc)
        return QTSeries(out, n)

    __rmul__ = __mul__

    def divide_by_geometric(self, e):
        """Multiply by ``1 / (1 - q**e * t)``."""
        out = []
        prev = QLaurent()
        for c in self._coeffs:
            prev = c + prev.shift(e)
            out.append(prev)
        return QTSeries(out, self.order)

    def eval_q1(self):
        return [c.eval_q1() for c in self._coeffs]

    def to_poly(self):
        return QTPoly.from_t_coefficients(self._coeffs)

    def to_str(self):
        body = render_qtpoly(self.to_poly())
        return f"{body} + O(t^{self.order + 1})"

    def to_latex(self):
        body = render_qtpoly(self.to_poly(), latex=True)
        return f"{body} + O(t^{{{self.order + 1}}})"

    def to_json_obj(self):
        return {"order": self.order, "coeffs": [c.to_json_obj() for c in self._coeffs]}

    @classmethod
    def from_json_obj(cls, obj):
        return cls([QLaurent.from_json_obj(c) for c in obj["coeffs"]], int(obj["order"]))

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"QTSeries({self.to_str()!r})"


class QTRational:
    """``numerator / prod_e (1 - q**e t)``; no automatic cancellation."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=()):
        if isinstance(numerator, (int, QLaurent)):
            numerator = QTPoly(numerator)
        self.numerator = numerator
        self.denominator = tuple(sorted(int(e) for e in denominator))

    def __eq__(self, other):
        # structural equality; use rational_equal for equality of functions
        if not isinstance(other, QTRational):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash(("QTRational", self.numerator, self.denominator))

    def denominator_poly(self):
        out = QTPoly(1)
        for e in self.denominator:
            out = out * QTPoly.linear_factor(e)
        return out

    def expand(self, order=DEFAULT_ORDER):
        return series_expand(self, order)

    def collapse_q(self):
        """Set ``q = 1`` in numerator and denominator."""
        return QTRational(self.numerator.collapse_q(), [0] * len(self.denominator))

    def cancellable_factors(self):
        """Denominator exponents ``e`` such that ``1 - q**e t`` divides the numerator.

        A factor ``1 - q**e t`` divides a polynomial in ``t`` over the
        Laurent ring exactly when ``t = q**-e`` is a root.
        """
        return sorted({e for e in self.denominator if self.numerator.substitute_t(-e).is_zero()})

    def cancel(self, e):
        """Cancel one copy of ``1 - q**e t`` from numerator and denominator."""
        if e not in self.denominator:
            raise ValueError(f"(1 - q^{e} t) is not a denominator factor")
        num = self.numerator.divide_linear_factor(e)
        den = list(self.denominator)
        den.remove(e)
        return QTRational(num, den)

    def to_str(self):
        return render_rational(self)

    def to_latex(self):
        return render_rational(self, latex=True)

    def to_json_obj(self):
        return {"numerator": self.numerator.to_json_obj(), "denominator": list(self.denominator)}

    @classmethod
    def from_json_obj(cls, obj):
        return cls(QTPoly.from_json_obj(obj["numerator"]), obj["denominator"])

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"QTRational({self.to_str()!r})"


def q_integer(k, e=1):
    """``[k]_{q**e} = 1 + q**e + ... + q**((k-1)e)``; at ``e = 0`` this is ``k``."""
    if k < 1:
        raise ValueError("q-integers are defined for k >= 1")
    out = {}
    for i in range(k):
        out[i * e] = out.get(i * e, 0) + 1
    return QLaurent(out)


_QBINOM_CACHE = {}


def q_binomial(n, k):
    """Gaussian binomial coefficient via the recurrence
    ``[n, k] = [n-1, k-1] + q**k [n-1, k]``.
    """
    if n < 0 or k < 0:
        raise ValueError("q_binomial needs nonnegative arguments")
    if k > n:
        raise ValueError(f"q_binomial({n}, {k}): k exceeds n")
    key = (n, k)
    if key in _QBINOM_CACHE:
        return _QBINOM_CACHE[key]
    if k == 0 or k == n:
        value = QLaurent(1)
    else:
        value = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
    _QBINOM_CACHE[key] = value
    return value


def series_expand(R, N=DEFAULT_ORDER):
    """Truncated expansion of ``R`` through ``t**N``."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    s = QTSeries.from_poly(R.numerator, N)
    for e in R.denominator:
        s = s.divide_by_geometric(e)
    return s


def rational_equal(A, B):
    """Exact equality of two rational functions by cross-multiplication."""
    # shared factors can be dropped from both sides first
    da, db = Counter(A.denominator), Counter(B.denominator)
    common = da & db
    only_a = da - common
    only_b = db - common
    lhs = A.numerator
    for e in only_b.elements():
        lhs = lhs * QTPoly.linear_factor(e)
    rhs = B.numerator
    for e in only_a.elements():
        rhs = rhs * QTPoly.linear_factor(e)
    return lhs == rhs


def series_equal(S1, S2, N):
    """Coefficient-wise equality through ``t**N``."""
    if S1.order < N or S2.order < N:
        raise ValueError(f"series known only to orders {S1.order}, {S2.order}; need {N}")
    return all(S1[r] == S2[r] for r in range(N + 1))


# ---------------------------------------------------------------- rendering


def _sup(n, latex):
    if latex:
        return f"^{{{n}}}"
    return f"^{n}"


def _power(var, n, latex):
    if n == 0:
        return ""
    if n == 1:
        return var
    return var + _sup(n, latex)


def _join(pieces):
    # pieces are (sign, text) pairs
    out = ""
    for i, (sign, text) in enumerate(pieces):
        if i == 0:
            out = ("-" if sign < 0 else "") + text
        else:
            out += (" - " if sign < 0 else " + ") + text
    return out or "0"


def _monomial(c, mono):
    a = abs(c)
    if not mono:
        return str(a)
    if a == 1:
        return mono
    return f"{a}{mono}"


def render_laurent(p, var="q", latex=False):
    pieces = [(c, _monomial(c, _power(var, k, latex))) for k, c in p.items()]
    return _join(pieces)


def _compact(text):
    return text.replace(" + ", "+").replace(" - ", "-")


def render_qtpoly(p, latex=False):
    pieces = []
    for r, coeff in enumerate(p.t_coefficients()):
        if coeff.is_zero():
            continue
        tpow = _power("t", r, latex)
        items = coeff.items()
        if len(items) == 1:
            k, c = items[0]
            mono = _power("q", k, latex) + tpow
            pieces.append((c, _monomial(c, mono)))
            continue
        inner = _compact(render_laurent(coeff, "q", latex))
        if tpow:
            pieces.append((1, f"({inner}){tpow}"))
        else:
            pieces.append((1, inner))
    return _join(pieces)


def render_denominator(denominator, latex=False):
    parts = []
    for e, mult in sorted(Counter(denominator).items()):
        factor = "(1 - " + _power("q", e, latex) + "t)"
        if mult > 1:
            factor += _sup(mult, latex)
        parts.append(factor)
    return "".join(parts)


def render_rational(R, latex=False):
    num = render_qtpoly(R.numerator, latex)
    if not R.denominator:
        return num
    den = render_denominator(R.denominator, latex)
    if latex:
        return f"\\frac{{{num}}}{{{den}}}"
    return f"({num}) / {den}"


def to_json(obj):
    """Canonical JSON text for any of the four value types."""
    if isinstance(obj, QLaurent):
        payload = {"type": "QLaurent", "terms": obj.to_json_obj()}
    elif isinstance(obj, QTPoly):
        payload = {"type": "QTPoly", "terms": obj.to_json_obj()}
    elif isinstance(obj, QTSeries):
        payload = {"type": "QTSeries", **obj.to_json_obj()}
    elif isinstance(obj, QTRational):
        payload = {"type": "QTRational", **obj.to_json_obj()}
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    return json.dumps(payload, sort_keys=True)


def from_json(text):
    payload = json.loads(text) if isinstance(text, str) else text
    kind = payload["type"]
    if kind == "QLaurent":
        return QLaurent.from_json_obj(payload["terms"])
    if kind == "QTPoly":
        return QTPoly.from_json_obj(payload["terms"])
    if kind == "QTSeries":
        return QTSeries.from_json_obj(payload)
    if kind == "QTRational":
        return QTRational.from_json_obj(payload)
    raise ValueError(f"unknown type tag {kind!r}")

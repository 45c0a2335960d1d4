"""Integer Laurent polynomials in q, and in q and x."""

from __future__ import annotations

from typing import Iterable, Mapping

from . import dense


def _items(terms) -> Iterable[tuple]:
    if terms is None:
        return ()
    if isinstance(terms, Mapping):
        return terms.items()
    return terms


class LaurentPolynomial:
    """Sparse integer Laurent polynomial in ``q``.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        clean: dict[int, int] = {}
        for e, c in _items(terms):
            c = int(c)
            if c:
                e = int(e)
                c += clean.get(e, 0)
                if c:
                    clean[e] = c
                else:
                    del clean[e]
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPolynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int = 1, coeff: int = 1) -> "LaurentPolynomial":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls.monomial(0, c)

    @classmethod
    def from_dense(cls, offset: int, coeffs: list[int]) -> "LaurentPolynomial":
        return cls._raw({offset + i: c for i, c in enumerate(coeffs) if c})

    @classmethod
    def coerce(cls, value) -> "LaurentPolynomial":
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"cannot convert {type(value).__name__} to LaurentPolynomial")

    # inspection

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def dense(self) -> tuple[int, list[int]]:
        """Return ``(offset, coeffs)`` with ``self = q^offset * sum coeffs[i] q^i``."""
        if not self._terms:
            return 0, []
        lo, hi = self.min_exp, self.max_exp
        out = [0] * (hi - lo + 1)
        for e, c in self._terms.items():
            out[e - lo] = c
        return lo, out

    def __len__(self) -> int:
        return len(self._terms)

    # ring operations

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPolynomial":
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPolynomial":
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return LaurentPolynomial.coerce(other) - self

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            if other == 0:
                return LaurentPolynomial()
            return LaurentPolynomial._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPolynomial()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPolynomial._raw({e + eb: c * cb for e, c in a.items()})
        sa = max(a) - min(a) + 1
        sb = max(b) - min(b) + 1
        if len(a) * len(b) <= 400 or (sa + sb) > 16 * len(a) * len(b):
            out: dict[int, int] = {}
            for e1, c1 in a.items():
                for e2, c2 in b.items():
                    out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
            return LaurentPolynomial(out)
        o1, d1 = self.dense()
        o2, d2 = other.dense()
        return LaurentPolynomial.from_dense(o1 + o2, dense.mul(d1, d2))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have negative powers")
            (e, c), = self._terms.items()
            return LaurentPolynomial.monomial(e * k, c ** abs(k))
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by q^k."""
        return LaurentPolynomial._raw({e + k: c for e, c in self._terms.items()})

    def invert_q(self) -> "LaurentPolynomial":
        """Image under q -> q^-1."""
        return LaurentPolynomial._raw({-e: c for e, c in self._terms.items()})

    def scale_exponents(self, a: int) -> "LaurentPolynomial":
        """Image under q -> q^a."""
        if a == 0:
            return LaurentPolynomial.constant(sum(self._terms.values()))
        return LaurentPolynomial._raw({a * e: c for e, c in self._terms.items()})

    def evaluate(self, value):
        """Evaluate at ``value`` (int, Fraction, CyclotomicNumber, ...)."""
        total = 0
        for e, c in self._terms.items():
            total = total + c * value ** e
        return total

    def at_root(self, N: int, k: int = 1):
        """Evaluate at q = zeta_N^k as a CyclotomicNumber."""
        from .cyclotomic import CyclotomicNumber

        buckets = [0] * N
        for e, c in self._terms.items():
            buckets[(k * e) % N] += c
        return CyclotomicNumber.from_power_sum(N, buckets)

    # serialization and display

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPolynomial":
        return cls((int(e), int(c)) for e, c in data)

    def to_string(self, var: str = "q") -> str:
        return _format_terms(self.items(), lambda e: _power(var, e))

    def __str__(self) -> str:
        return self.to_string("q")

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"


class BivariateLaurent:
    """Sparse integer Laurent polynomial in ``q`` and ``x``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for key, c in _items(terms):
            c = int(c)
            if c:
                key = (int(key[0]), int(key[1]))
                c += clean.get(key, 0)
                if c:
                    clean[key] = c
                else:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BivariateLaurent":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, qe: int = 0, xe: int = 0, coeff: int = 1) -> "BivariateLaurent":
        return cls._raw({(qe, xe): coeff} if coeff else {})

    @classmethod
    def q(cls, e: int = 1) -> "BivariateLaurent":
        return cls.monomial(e, 0)

    @classmethod
    def x(cls, e: int = 1) -> "BivariateLaurent":
        return cls.monomial(0, e)

    @classmethod
    def coerce(cls, value) -> "BivariateLaurent":
        if isinstance(value, BivariateLaurent):
            return value
        if isinstance(value, int):
            return cls.monomial(0, 0, value)
        if isinstance(value, LaurentPolynomial):
            return cls._raw({(e, 0): c for e, c in value.terms.items()})
        raise TypeError(f"cannot convert {type(value).__name__} to BivariateLaurent")

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def x_degrees(self) -> tuple[int, int]:
        xs = [k[1] for k in self._terms]
        return min(xs), max(xs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPolynomial)):
            other = BivariateLaurent.coerce(other)
        if not isinstance(other, BivariateLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "BivariateLaurent":
        return BivariateLaurent._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "BivariateLaurent":
        try:
            other = BivariateLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BivariateLaurent._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "BivariateLaurent":
        try:
            other = BivariateLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BivariateLaurent":
        return BivariateLaurent.coerce(other) - self

    def __mul__(self, other) -> "BivariateLaurent":
        try:
            other = BivariateLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return BivariateLaurent()
        if len(a) * len(b) <= 2000:
            out: dict[tuple[int, int], int] = {}
            for (q1, x1), c1 in a.items():
                for (q2, x2), c2 in b.items():
                    key = (q1 + q2, x1 + x2)
                    out[key] = out.get(key, 0) + c1 * c2
            return BivariateLaurent(out)
        # pack x into a high q-digit and multiply univariately
        qa = [k[0] for k in a]
        qb = [k[0] for k in b]
        xa = min(k[1] for k in a)
        xb = min(k[1] for k in b)
        qa0, qb0 = min(qa), min(qb)
        width = (max(qa) - qa0) + (max(qb) - qb0) + 1
        pa = LaurentPolynomial({(q - qa0) + width * (x - xa): c for (q, x), c in a.items()})
        pb = LaurentPolynomial({(q - qb0) + width * (x - xb): c for (q, x), c in b.items()})
        out = {}
        for e, c in (pa * pb).terms.items():
            xe, qe = divmod(e, width)
            out[(qe + qa0 + qb0, xe + xa + xb)] = c
        return BivariateLaurent._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivariateLaurent":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only unit monomials have negative powers")
            ((qe, xe), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have negative powers")
            return BivariateLaurent.monomial(qe * k, xe * k, c ** abs(k))
        result = BivariateLaurent.monomial()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def subs_x_qpow(self, a: int) -> LaurentPolynomial:
        """Image under x -> q^a."""
        out: dict[int, int] = {}
        for (qe, xe), c in self._terms.items():
            e = qe + a * xe
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def subs_x(self, value):
        """Image under x -> value, where value is a LaurentPolynomial or int."""
        total = LaurentPolynomial()
        for xe, coeff in self.x_coefficients().items():
            total = total + coeff * (LaurentPolynomial.coerce(value) ** xe)
        return total

    def invert_q(self) -> "BivariateLaurent":
        return BivariateLaurent._raw({(-qe, xe): c for (qe, xe), c in self._terms.items()})

    def invert_x(self) -> "BivariateLaurent":
        return BivariateLaurent._raw({(qe, -xe): c for (qe, xe), c in self._terms.items()})

    def x_coefficients(self) -> dict[int, LaurentPolynomial]:
        """Group by powers of x."""
        groups: dict[int, dict[int, int]] = {}
        for (qe, xe), c in self._terms.items():
            groups.setdefault(xe, {})[qe] = c
        return {xe: LaurentPolynomial(t) for xe, t in groups.items()}

    def to_laurent(self) -> LaurentPolynomial:
        if any(xe for _, xe in self._terms):
            raise ValueError("polynomial depends on x")
        return LaurentPolynomial({qe: c for (qe, _), c in self._terms.items()})

    def evaluate(self, q, x):
        total = 0
        for (qe, xe), c in self._terms.items():
            total = total + c * (q ** qe) * (x ** xe)
        return total

    def to_json(self) -> list:
        return [[qe, xe, str(c)] for (qe, xe), c in self.items()]

    @classmethod
    def from_json(cls, data) -> "BivariateLaurent":
        return cls(((int(a), int(b)), int(c)) for a, b, c in data)

    def __str__(self) -> str:
        def mono(key):
            qe, xe = key
            parts = [p for p in (_power("q", qe), _power("x", xe)) if p]
            return "*".join(parts)
        return _format_terms(self.items(), mono)

    def __repr__(self) -> str:
        return f"BivariateLaurent({str(self)!r})"


class RationalLaurent:
    """Quotient of two Laurent polynomials, kept uncancelled."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPolynomial.coerce(num)
        den = LaurentPolynomial.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, value) -> "RationalLaurent":
        if isinstance(value, RationalLaurent):
            return value
        return cls(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        try:
            other = RationalLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "RationalLaurent":
        return RationalLaurent(-self.num, self.den)

    def __add__(self, other) -> "RationalLaurent":
        other = RationalLaurent.coerce(other)
        if self.den == other.den:
            return RationalLaurent(self.num + other.num, self.den)
        return RationalLaurent(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalLaurent":
        return self + (-RationalLaurent.coerce(other))

    def __rsub__(self, other) -> "RationalLaurent":
        return RationalLaurent.coerce(other) - self

    def __mul__(self, other) -> "RationalLaurent":
        other = RationalLaurent.coerce(other)
        return RationalLaurent(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalLaurent":
        other = RationalLaurent.coerce(other)
        return RationalLaurent(self.num * other.den, self.den * other.num)

    def to_laurent(self) -> LaurentPolynomial:
        """Exact quotient; raises ValueError when it is not a Laurent polynomial."""
        return exact_divide(self.num, self.den)

    def is_laurent(self) -> bool:
        try:
            self.to_laurent()
        except ValueError:
            return False
        return True

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalLaurent({str(self)!r})"


def exact_divide(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Quotient num/den in Z[q, q^-1]; raises ValueError if it does not exist."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return LaurentPolynomial()
    o1, a = num.dense()
    o2, p = den.dense()
    if p[-1] in (1, -1):
        quo, rem = dense.divmod_unit(a, p)
    elif p[0] in (1, -1):
        # divide the reversed polynomials, whose divisor then has a unit lead
        quo, rem = dense.divmod_unit(a[::-1], p[::-1])
        # a[0] and p[0] are nonzero, so the reversed quotient has full length
        quo = quo[::-1]
    else:
        res = dense.divmod_general(a, p)
        if res is None:
            raise ValueError("quotient is not a Laurent polynomial")
        quo, rem = res
    if rem:
        raise ValueError("quotient is not a Laurent polynomial")
    return LaurentPolynomial.from_dense(o1 - o2, quo)


def pochhammer(z, step, count: int):
    """(z; step)_count = prod_{j<count} (1 - z*step^j).

    ``z`` and ``step`` are monomials given as LaurentPolynomial or
    BivariateLaurent; the result has the type of the wider argument.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if isinstance(z, BivariateLaurent) or isinstance(step, BivariateLaurent):
        z = BivariateLaurent.coerce(z)
        step = BivariateLaurent.coerce(step)
        result = BivariateLaurent.monomial()
    else:
        z = LaurentPolynomial.coerce(z)
        step = LaurentPolynomial.coerce(step)
        result = LaurentPolynomial.constant(1)
    factor = z
    for _ in range(count):
        result = result * (1 - factor)
        factor = factor * step
    return result


def qpoch(k: int, start: int = 1, step: int = 1) -> LaurentPolynomial:
    """(q^start; q^step)_k as a LaurentPolynomial."""
    if k < 0:
        raise ValueError("count must be nonnegative")
    o, coeffs = 0, [1]
    for j in range(k):
        e = start + j * step
        # multiply by (1 - q^e); negative e handled through the offset
        if e >= 0:
            new = coeffs + [0] * e
            for i, c in enumerate(coeffs):
                new[i + e] -= c
            coeffs = dense.trim(new)
        else:
            new = [0] * (-e) + coeffs
            for i, c in enumerate(coeffs):
                new[i] -= c
            o += e
            coeffs = dense.trim(new)
    return LaurentPolynomial.from_dense(o, coeffs)


def substitute(p, rule: str, value: int | None = None):
    """Apply one of the ring maps used throughout.

    rule is one of ``"q->1/q"``, ``"x->q^a"`` (value a), ``"x->1/x"`` and
    ``"q->zeta"`` (value N, evaluation at the canonical primitive root).
    """
    if rule == "q->1/q":
        return p.invert_q()
    if rule == "x->q^a":
        return BivariateLaurent.coerce(p).subs_x_qpow(value)
    if rule == "x->1/x":
        return BivariateLaurent.coerce(p).invert_x()
    if rule == "q->zeta":
        if isinstance(p, BivariateLaurent):
            p = p.to_laurent()
        return LaurentPolynomial.coerce(p).at_root(value)
    raise ValueError(f"unknown substitution rule {rule!r}")


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _format_terms(items, mono) -> str:
    if not items:
        return "0"
    out = []
    for key, c in items:
        m = mono(key)
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{mag}*{m}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


q = LaurentPolynomial.monomial(1)

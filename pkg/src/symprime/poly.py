"""Sparse exact multivariate polynomials over the rationals and prime fields.

Variables come in named families with 1-based indices: x<k> are the main ring
variables, t<k> are configuration coordinates, e<k> are jet directions.  The
z-family is reserved for internal auxiliary variables and is not parseable.

A monomial is a tuple of (variable, exponent) pairs sorted by variable, with
no zero exponents.  A polynomial maps monomials to nonzero coefficients.
"""

from fractions import Fraction

FAMILIES = ("x", "t", "e", "z")
_RANK = {f: i for i, f in enumerate(FAMILIES)}


class ParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message, pos):
        super().__init__("syntax error at position %d: %s" % (pos, message))
        self.pos = pos


def var(family, index):
    if family not in _RANK:
        raise ValueError("unknown variable family %r" % (family,))
    if not isinstance(index, int) or index < 1:
        raise ValueError("variable index must be a positive integer")
    return (family, index)


def xvar(i):
    return ("x", i)


def tvar(i):
    return ("t", i)


def evar(i):
    return ("e", i)


def zvar(i):
    return ("z", i)


def var_key(v):
    return (_RANK[v[0]], v[1])


def var_name(v):
    return "%s%d" % v


class Rationals:
    """Coefficient field of arbitrary-precision rationals."""

    char = 0

    def coerce(self, a):
        return a if isinstance(a, Fraction) else Fraction(a)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return Fraction(1) / a

    def coeff_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a prime, residues stored in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        self.char = p

    def coerce(self, a):
        if isinstance(a, Fraction):
            return a.numerator * pow(a.denominator, -1, self.char) % self.char
        return int(a) % self.char

    def add(self, a, b):
        return (a + b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return (-a) % self.char

    def inv(self, a):
        if a % self.char == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.char)
        return pow(a, -1, self.char)

    def coeff_str(self, a):
        return str(a)

    def __repr__(self):
        return "GF(%d)" % self.char


QQ = Rationals()
_PRIME_FIELDS = {}


def GF(p):
    """Return the (cached) prime field with p elements."""
    if p not in _PRIME_FIELDS:
        _PRIME_FIELDS[p] = PrimeField(p)
    return _PRIME_FIELDS[p]


def field_of_char(char):
    return QQ if char == 0 else GF(char)


# ---------------------------------------------------------------------------
# monomials

def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, k in m2:
        d[v] = d.get(v, 0) + k
    return tuple(sorted(d.items(), key=lambda it: var_key(it[0])))


def mono_degree(m):
    return sum(k for _, k in m)


def mono_divides(m1, m2):
    d2 = dict(m2)
    return all(d2.get(v, 0) >= k for v, k in m1)


def mono_div(m1, m2):
    """Quotient m1 / m2; requires divisibility."""
    d = dict(m1)
    for v, k in m2:
        d[v] -= k
    return tuple(sorted(((v, k) for v, k in d.items() if k), key=lambda it: var_key(it[0])))


def mono_lcm(m1, m2):
    d = dict(m1)
    for v, k in m2:
        d[v] = max(d.get(v, 0), k)
    return tuple(sorted(d.items(), key=lambda it: var_key(it[0])))


def mono_str(m):
    return "*".join(var_name(v) if k == 1 else "%s^%d" % (var_name(v), k) for v, k in m)


# ---------------------------------------------------------------------------
# polynomials

class Poly:
    """Immutable sparse polynomial over a fixed coefficient field."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field, terms):
        # terms must already be coerced with zeros dropped; use the builders
        self.field = field
        self.terms = terms
        self._hash = None

    @classmethod
    def zero(cls, field=QQ):
        return cls(field, {})

    @classmethod
    def const(cls, c, field=QQ):
        c = field.coerce(c)
        return cls(field, {(): c} if c else {})

    @classmethod
    def variable(cls, v, field=QQ):
        return cls(field, {((v, 1),): field.coerce(1)})

    @classmethod
    def from_terms(cls, items, field=QQ):
        terms = {}
        add, coerce = field.add, field.coerce
        for m, c in items:
            c = coerce(c)
            if m in terms:
                c = add(terms[m], c)
            terms[m] = c
        return cls(field, {m: c for m, c in terms.items() if c})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        return self.terms.get((), self.field.coerce(0))

    def variables(self):
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def __add__(self, other):
        other = self._lift(other)
        f = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            if m in terms:
                s = f.add(terms[m], c)
                if s:
                    terms[m] = s
                else:
                    del terms[m]
            else:
                terms[m] = c
        return Poly(f, terms)

    def __neg__(self):
        f = self.field
        return Poly(f, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        f = self.field
        if not self.terms or not other.terms:
            return Poly(f, {})
        big, small = self.terms, other.terms
        if len(big) < len(small):
            big, small = small, big
        out = {}
        add, mul = f.add, f.mul
        for m2, c2 in small.items():
            for m1, c1 in big.items():
                m = mono_mul(m1, m2)
                c = mul(c1, c2)
                if m in out:
                    s = add(out[m], c)
                    if s:
                        out[m] = s
                    else:
                        del out[m]
                else:
                    out[m] = c
        return Poly(f, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._lift(other) - self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        if not c:
            return Poly(f, {})
        return Poly(f, {m: f.mul(cc, c) for m, cc in self.terms.items()})

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError("mixed coefficient fields")
            return other
        return Poly.const(other, self.field)

    def substitute(self, mapping):
        """Simultaneously replace variables per mapping (variable -> Poly)."""
        f = self.field
        images = {v: (img if isinstance(img, Poly) else Poly.const(img, f))
                  for v, img in mapping.items()}
        out = Poly.zero(f)
        for m, c in self.terms.items():
            piece = Poly.const(c, f)
            fixed = []
            for v, k in m:
                if v in images:
                    piece = piece * images[v] ** k
                else:
                    fixed.append((v, k))
            if fixed:
                piece = piece * Poly(f, {tuple(fixed): f.coerce(1)})
            out = out + piece
        return out

    def derivative(self, v):
        """Formal partial derivative with respect to variable v."""
        f = self.field
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            k = d.get(v, 0)
            if not k:
                continue
            if k == 1:
                del d[v]
            else:
                d[v] = k - 1
            mono = tuple(sorted(d.items(), key=lambda it: var_key(it[0])))
            c2 = f.mul(c, f.coerce(k))
            if mono in out:
                c2 = f.add(out[mono], c2)
            if c2:
                out[mono] = c2
            elif mono in out:
                del out[mono]
        return Poly(f, out)

    def evaluate(self, point):
        """Evaluate at a full assignment (variable -> field element)."""
        f = self.field
        total = f.coerce(0)
        for m, c in self.terms.items():
            val = c
            for v, k in m:
                val = f.mul(val, f.coerce(point[v]) ** k if f.char == 0
                            else pow(f.coerce(point[v]), k, f.char))
            total = f.add(total, val)
        return total

    def leading(self, order):
        """(monomial, coefficient) maximal under the given order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if self.is_constant():
                return self.constant_value() == self.field.coerce(other)
            return NotImplemented
        return self.field.char == other.field.char and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.char, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        ambient = sorted(self.variables(), key=var_key)
        pos = {v: i for i, v in enumerate(ambient)}

        def key(m):
            exps = [0] * len(ambient)
            for v, k in m:
                exps[pos[v]] = k
            return (mono_degree(m), tuple(-e for e in reversed(exps)))

        pieces = []
        for m in sorted(self.terms, key=key, reverse=True):
            c = self.terms[m]
            if self.field.char == 0 and c < 0:
                sign, mag = "-", -c
            else:
                sign, mag = "+", c
            if not m:
                body = self.field.coeff_str(mag)
            elif mag == 1:
                body = mono_str(m)
            else:
                body = self.field.coeff_str(mag) + "*" + mono_str(m)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "Poly(%s)" % self


def poly_divides(d, f):
    """True iff polynomial d exactly divides f (single-divisor division)."""
    if d.is_zero():
        return f.is_zero()
    if f.is_zero():
        return True
    ambient = sorted(d.variables() | f.variables(), key=var_key)
    pos = {v: i for i, v in enumerate(ambient)}

    def key(m):
        exps = [0] * len(ambient)
        for v, k in m:
            exps[pos[v]] = k
        return (mono_degree(m), tuple(-e for e in reversed(exps)))

    field = f.field
    lm_d = max(d.terms, key=key)
    lc_d = d.terms[lm_d]
    rem = f
    while not rem.is_zero():
        lm = max(rem.terms, key=key)
        if not mono_divides(lm_d, lm):
            return False
        c = field.mul(rem.terms[lm], field.inv(lc_d))
        rem = rem - d * Poly(field, {mono_div(lm, lm_d): c})
    return True


# ---------------------------------------------------------------------------
# parsing

def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            fam = text[i:j]
            if fam not in ("x", "t", "e"):
                raise ParseError("unknown variable family %r" % fam, i)
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise ParseError("variable %r is missing an index" % fam, i)
            idx = int(text[j:k])
            if idx < 1:
                raise ParseError("variable index must be >= 1", j)
            tokens.append(("var", (fam, idx), i))
            i = k
            continue
        if ch in "+-*^()/":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens, field):
        self.tokens = tokens
        self.pos = 0
        self.field = field

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError("expected %r" % kind, tok[2])
        return tok

    def parse_expr(self):
        node = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek()[0] == "*":
            self.take()
            node = node * self.parse_factor()
        return node

    def parse_factor(self):
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        node = self.parse_power()
        return node if sign == 1 else -node

    def parse_power(self):
        node = self.parse_atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            node = node ** tok[1]
        return node

    def parse_atom(self):
        tok = self.take()
        if tok[0] == "num":
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take()
                if den[0] != "num" or den[1] == 0:
                    raise ParseError("malformed rational literal", den[2])
                value = Fraction(tok[1], den[1])
            return Poly.const(value, self.field)
        if tok[0] == "var":
            return Poly.variable(tok[1], self.field)
        if tok[0] == "(":
            node = self.parse_expr()
            self.expect(")")
            return node
        raise ParseError("unexpected token", tok[2])


def parse(text, field=QQ):
    """Parse polynomial text in the x/t/e grammar into a Poly."""
    parser = _Parser(_tokenize(text), field)
    node = parser.parse_expr()
    end = parser.take()
    if end[0] != "end":
        raise ParseError("trailing input", end[2])
    return node


def discriminant(indices, family="x", field=QQ):
    """Product of pairwise differences v_i - v_j over i < j in the given order."""
    indices = list(indices)
    if not indices:
        raise ValueError("discriminant requires a nonempty index set")
    out = Poly.const(1, field)
    for i in range(len(indices)):
        for j in range(i + 1, len(indices)):
            vi = Poly.variable((family, indices[i]), field)
            vj = Poly.variable((family, indices[j]), field)
            out = out * (vi - vj)
    return out

"""Text syntax for necklaces, BV elements, tensors and polynomials.

A necklace sum is a signed list of terms ``c * w``; ``w`` is a space separated
closed word of arrow names, ``~a`` for the double of ``a`` and ``e(v)`` for
the constant path at ``v``.  A BV monomial is a product of parenthesised
words such as ``(a a)(~a ~a)``; ``1`` is the unit.  A coefficient of 1 is
omitted and the empty sum prints as ``0``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .necklace import Necklace, NecklaceSum, PathError, TensorSum, canonicalize
from .quiver import DoubledQuiver
from .symbv import BVElement, sym_normalize


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<const>e\(\s*[A-Za-z_][\w]*\s*\))
  | (?P<name>~?[A-Za-z_][\w]*)
  | (?P<op>[-+*()])
""", re.VERBOSE)


def _tokens(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, dq: DoubledQuiver, text: str):
        self.dq, self.toks, self.i = dq, _tokens(text), 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, col = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", col)

    def terms(self, body):
        """Signed sum of ``[coef *] body`` terms as ``(coef, has_body, value)``."""
        out = []
        kind, val, col = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            coef = Fraction(sign)
            kind, val, col = self.peek()
            if kind == "num" and self.toks[self.i + 1][1] == "*":
                self.take()
                self.take()
                coef *= Fraction(val)
                out.append((coef, True, body(self)))
            elif kind == "num":
                self.take()
                out.append((coef * Fraction(val), False, None))
            else:
                out.append((coef, True, body(self)))
            kind, val, col = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            raise ParseError(f"unexpected {val!r}", col)
        return out

    def word(self, stop=("end", "+", "-", ")")):
        dq = self.dq
        letters, const, start = [], None, self.peek()[2]
        while True:
            kind, val, col = self.peek()
            if kind == "end" or (kind == "op" and val in stop):
                break
            if kind == "const":
                self.take()
                name = val[2:-1].strip()
                if name not in dq.quiver.vertices:
                    raise ParseError(f"unknown vertex {name!r}", col)
                if const is not None or letters:
                    raise ParseError("a constant path stands alone", col)
                const = dq.quiver.vertex_index(name)
            elif kind == "name":
                self.take()
                if const is not None:
                    raise ParseError("a constant path stands alone", col)
                try:
                    letters.append(dq.code(val))
                except (KeyError, ValueError):
                    raise ParseError(f"unknown arrow {val!r}", col) from None
            else:
                raise ParseError(f"unexpected {val!r}", col)
        if const is None and not letters:
            raise ParseError("empty word", start)
        try:
            return canonicalize(self.dq, tuple(letters), const)
        except PathError as exc:
            raise ParseError(str(exc), start) from None


def parse_word(dq: DoubledQuiver, text: str):
    """A single closed word; returns ``(necklace, sign)`` or None when it vanishes."""
    p = _Parser(dq, text)
    res = p.word()
    kind, val, col = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", col)
    return res


def parse_necklace_sum(dq: DoubledQuiver, text: str) -> NecklaceSum:
    if text.strip() == "0":
        return NecklaceSum()
    p = _Parser(dq, text)
    out = NecklaceSum()
    for coef, has_body, res in p.terms(lambda q: q.word()):
        if not has_body:
            raise ParseError("a necklace term needs a word", 1)
        if res is not None:
            x, s = res
            out.add_term(x, coef * s)
    return out


def _monomial(q: _Parser):
    """``(factors, sign)``; sign 0 when some factor vanishes."""
    col = q.peek()[2]
    factors, sign = [], 1
    while q.peek()[1] == "(":
        q.take()
        res = q.word()
        q.expect(")")
        if res is None:
            sign = 0
        else:
            factors.append(res[0])
            sign *= res[1]
    if not factors and sign:
        raise ParseError("expected a parenthesised word or a number", col)
    return tuple(factors), sign


def parse_bv_element(dq: DoubledQuiver, text: str) -> BVElement:
    q = _Parser(dq, text)
    out = BVElement()
    for coef, has_body, res in q.terms(_monomial):
        if not has_body:
            out.add_term((), coef)
            continue
        factors, sign = res
        if not sign:
            continue
        norm = sym_normalize(factors, dq.p)
        if norm is not None:
            out.add_term(norm[0], coef * sign * norm[1])
    return out


# formatting

def format_coeff_terms(terms) -> str:
    """Join ``(coefficient, body)`` pairs; an empty body is the unit."""
    parts = []
    for c, body in terms:
        a = abs(c)
        if not body:
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a} * {body}"
        if parts:
            parts.append(("- " if c < 0 else "+ ") + text)
        else:
            parts.append(("-" if c < 0 else "") + text)
    return " ".join(parts) if parts else "0"


def format_word(dq: DoubledQuiver, x: Necklace) -> str:
    if not x.word:
        return f"e({dq.vertex_name(x.vertex)})"
    return " ".join(dq.names[c] for c in x.word)


def format_necklace_sum(dq: DoubledQuiver, s: NecklaceSum) -> str:
    return format_coeff_terms((s[x], format_word(dq, x)) for x in sorted(s))


def format_tensor(dq: DoubledQuiver, t: TensorSum) -> str:
    return format_coeff_terms(
        (t[k], " @ ".join(f"({format_word(dq, x)})" for x in k)) for k in sorted(t))


def format_bv_element(dq: DoubledQuiver, e: BVElement) -> str:
    return format_coeff_terms(
        (e[m], "".join(f"({format_word(dq, x)})" for x in m)) for m in sorted(e))


def format_monomial(names, m) -> str:
    out, i = [], 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        out.append(names[m[i]] + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return " ".join(out)


def format_polynomial(ring, f) -> str:
    names = [v.name for v in ring.vars]
    keys = sorted(f, key=lambda m: (len(m), m))
    return format_coeff_terms((f[m], format_monomial(names, m)) for m in keys)

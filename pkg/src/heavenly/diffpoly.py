"""Exact differential Laurent polynomials over the rationals.

A :class:`DiffPoly` is a finite sum of rational multiples of monomials in
four kinds of symbols:

* ``Coord``  base coordinates (``t``, ``z``, ...), Laurent exponents allowed;
* ``Param``  symbolic constants (``c1``, ...), Laurent exponents allowed;
* ``UJet``   jet coordinates ``u_sigma`` of a dependent variable;
* ``FJet``   derivatives ``A_sigma`` of a formal function of some coordinates.

Symbols are interned to small integers; a monomial is the tuple of
``(symbol id, exponent)`` pairs sorted by id, and a polynomial is a dict
``monomial -> mpq`` without zero entries.  Equality of the dicts therefore
decides identical vanishing.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple

from gmpy2 import mpq

from .errors import DeclarationError, EvaluationError

__all__ = [
    "COORD", "PARAM", "UJET", "FJET",
    "Sym", "DiffPoly", "Q",
    "add", "mul", "neg", "scale", "pdiff", "evaluate", "is_zero", "collect",
    "derivation", "substitute", "sym_of", "symbols",
]

COORD, PARAM, UJET, FJET = 0, 1, 2, 3
_TAG_NAMES = {COORD: "Coord", PARAM: "Param", UJET: "UJet", FJET: "FJet"}


def Q(value) -> mpq:
    """Coerce ``int``, ``Fraction``, ``str`` or ``mpq`` to an exact rational."""
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not supported")
    return mpq(value)


class Sym(NamedTuple):
    """A symbol.  ``coords`` is the chart's base coordinates for a UJet and
    the dependency coordinates for an FJet; it fixes the multi-index order."""

    tag: int
    name: str
    index: tuple = ()
    coords: tuple = ()

    @property
    def key(self):
        return (self.tag, self.name, self.index)

    @property
    def order(self) -> int:
        return sum(self.index)

    def shifted(self, coord: str, by: int = 1) -> "Sym":
        k = self.coords.index(coord)
        idx = list(self.index)
        idx[k] += by
        return self._replace(index=tuple(idx))

    def text(self) -> str:
        if self.tag in (UJET, FJET):
            return f"{self.name}[{','.join(map(str, self.index))}]"
        return self.name

    def __repr__(self):
        return f"{_TAG_NAMES[self.tag]}({self.text()})"


_LOCK = threading.Lock()
_SYMS: list[Sym] = []
_IDS: dict[Sym, int] = {}


def _intern(sym: Sym) -> int:
    sid = _IDS.get(sym)
    if sid is None:
        with _LOCK:
            sid = _IDS.get(sym)
            if sid is None:
                if sym.tag in (UJET, FJET) and len(sym.index) != len(sym.coords):
                    raise DeclarationError(f"multi-index arity mismatch for {sym.text()}")
                sid = len(_SYMS)
                _SYMS.append(sym)
                _IDS[sym] = sid
    return sid


def sym_of(sid: int) -> Sym:
    return _SYMS[sid]


# -- monomials ---------------------------------------------------------------

def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for s, e in b:
        n = d.get(s, 0) + e
        if n:
            d[s] = n
        else:
            del d[s]
    return tuple(sorted(d.items()))


def _mono_inverse(m: tuple) -> tuple:
    for s, _ in m:
        if _SYMS[s].tag not in (COORD, PARAM):
            raise ArithmeticError(f"cannot invert jet symbol {_SYMS[s].text()}")
    return tuple((s, -e) for s, e in m)


def _mono_key(m: tuple):
    # graded lexicographic over the symbol order, higher degree first
    items = sorted(((_SYMS[s].key, e) for s, e in m))
    return (-sum(e for _, e in m), tuple((k, -e) for k, e in items))


# -- polynomials -------------------------------------------------------------

class DiffPoly:
    """Immutable exact Laurent differential polynomial."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        # trusted constructor: caller guarantees canonical, non-zero entries
        self._terms = dict(terms) if terms else {}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c) -> "DiffPoly":
        c = Q(c)
        return cls({(): c}) if c else cls()

    @classmethod
    def from_sym(cls, sym: Sym, exp: int = 1) -> "DiffPoly":
        if exp < 0 and sym.tag not in (COORD, PARAM):
            raise ArithmeticError("negative exponents are allowed on Coord and Param only")
        if exp == 0:
            return cls.const(1)
        return cls({((_intern(sym), exp),): mpq(1)})

    @classmethod
    def coord(cls, name: str) -> "DiffPoly":
        return cls.from_sym(Sym(COORD, name))

    @classmethod
    def param(cls, name: str) -> "DiffPoly":
        return cls.from_sym(Sym(PARAM, name))

    @classmethod
    def ujet(cls, name: str, index, coords) -> "DiffPoly":
        return cls.from_sym(Sym(UJET, name, tuple(index), tuple(coords)))

    @classmethod
    def fjet(cls, name: str, index, deps) -> "DiffPoly":
        return cls.from_sym(Sym(FJET, name, tuple(index), tuple(deps)))

    # views
    @property
    def terms(self) -> dict:
        return self._terms

    def items(self):
        """Yield ``({Sym: exp}, coefficient)`` in canonical print order."""
        for m in sorted(self._terms, key=_mono_key):
            yield {_SYMS[s]: e for s, e in m}, self._terms[m]

    def symbols(self) -> set[Sym]:
        return {_SYMS[s] for m in self._terms for s, _ in m}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self) -> mpq:
        return self._terms.get((), mpq(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # arithmetic
    @staticmethod
    def _coerce(other) -> "DiffPoly":
        if isinstance(other, DiffPoly):
            return other
        return DiffPoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return DiffPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return DiffPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, DiffPoly):
            return self.scale(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return DiffPoly()
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        mm = _mono_mul
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = mm(m1, m2)
                v = get(m)
                v = c1 * c2 if v is None else v + c1 * c2
                out[m] = v
        return DiffPoly({m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "DiffPoly":
        c = Q(c)
        if not c:
            return DiffPoly()
        return DiffPoly({m: v * c for m, v in self._terms.items()})

    def inverse(self) -> "DiffPoly":
        """Inverse of a single-term polynomial with an invertible monomial."""
        if len(self._terms) != 1:
            raise ArithmeticError("only single-term polynomials are units")
        (m, c), = self._terms.items()
        return DiffPoly({_mono_inverse(m): 1 / c})

    def __truediv__(self, other):
        if isinstance(other, DiffPoly):
            return self * other.inverse()
        c = Q(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / c)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer exponents only")
        if n < 0:
            return self.inverse() ** (-n)
        result = DiffPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, DiffPoly):
            return self._terms == other._terms
        try:
            return self._terms == DiffPoly.const(other)._terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __reduce__(self):
        data = [(tuple((_SYMS[s], e) for s, e in m), (int(c.numerator), int(c.denominator)))
                for m, c in self._terms.items()]
        return (_rebuild, (data,))

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"DiffPoly({to_text(self)!r})"


def _rebuild(data) -> DiffPoly:
    terms = {}
    for mono, (num, den) in data:
        m = tuple(sorted((_intern(s), e) for s, e in mono))
        terms[m] = mpq(num, den)
    return DiffPoly(terms)


# -- printing ----------------------------------------------------------------

def _format_factor(sym: Sym, e: int) -> str:
    return sym.text() if e == 1 else f"{sym.text()}^{e}"


def to_text(p: DiffPoly) -> str:
    """Canonical text in the expression grammar; ``parse`` inverts it."""
    if not p._terms:
        return "0"
    parts = []
    for mono, c in p.items():
        factors = [_format_factor(s, e) for s, e in sorted(mono.items(), key=lambda kv: kv[0].key)]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if factors:
            body = "*".join(factors) if a == 1 else f"{a}*" + "*".join(factors)
        else:
            body = str(a)
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- functional API ------------------------------------------------------------

def add(p: DiffPoly, q: DiffPoly) -> DiffPoly:
    return p + q


def mul(p: DiffPoly, q: DiffPoly) -> DiffPoly:
    return p * q


def neg(p: DiffPoly) -> DiffPoly:
    return -p


def scale(p: DiffPoly, c) -> DiffPoly:
    return p.scale(c)


def is_zero(p: DiffPoly) -> bool:
    return not p._terms


def symbols(p: DiffPoly) -> set[Sym]:
    return p.symbols()


def derivation(p: DiffPoly, image: Callable[[Sym], DiffPoly | None]) -> DiffPoly:
    """Apply the derivation fixed by its values ``image(sym)`` on symbols.

    ``image`` may return ``None`` or a zero polynomial for symbols the
    derivation annihilates.  Values are cached per call.
    """
    cache: dict[int, dict | None] = {}
    out: dict = {}
    get = out.get
    mm = _mono_mul
    for mono, c in p._terms.items():
        for k, (s, e) in enumerate(mono):
            img = cache.get(s, 0)
            if img == 0:
                v = image(_SYMS[s])
                img = v._terms if v else None
                cache[s] = img
            if not img:
                continue
            if e == 1:
                rest = mono[:k] + mono[k + 1:]
            else:
                rest = mono[:k] + ((s, e - 1),) + mono[k + 1:]
            ce = c * e
            for m2, c2 in img.items():
                m = mm(rest, m2)
                v = get(m)
                out[m] = ce * c2 if v is None else v + ce * c2
    return DiffPoly({m: c for m, c in out.items() if c})


def pdiff(p: DiffPoly, coord: str, known_coords: Iterable[str] | None = None) -> DiffPoly:
    """Partial derivative in a base coordinate.

    UJets are independent of the base coordinates; FJets depending on
    ``coord`` are promoted ``A[i,j] -> A[i+1,j]``.
    """
    if known_coords is not None and coord not in known_coords:
        raise DeclarationError(f"unknown coordinate {coord!r}")
    one = DiffPoly.const(1)

    def image(sym: Sym):
        if sym.tag == COORD:
            return one if sym.name == coord else None
        if sym.tag == FJET and coord in sym.coords:
            return DiffPoly.from_sym(sym.shifted(coord))
        return None

    return derivation(p, image)


def evaluate(p: DiffPoly, assignment: Mapping[Sym, object]) -> mpq:
    """Exact value of ``p`` at a point given as ``{Sym: rational}``."""
    vals: dict[int, mpq] = {}
    total = mpq(0)
    for mono, c in p._terms.items():
        term = c
        for s, e in mono:
            v = vals.get(s)
            if v is None:
                sym = _SYMS[s]
                if sym not in assignment:
                    raise EvaluationError(f"unassigned symbol {sym.text()}")
                v = vals[s] = Q(assignment[sym])
            if e < 0:
                if not v:
                    raise EvaluationError("division by zero")
                term = term / v ** (-e)
            else:
                term = term * v ** e
        total += term
    return total


def substitute(p: DiffPoly, mapping: Mapping[Sym, DiffPoly]) -> DiffPoly:
    """Replace symbols by polynomials (negative powers need unit images)."""
    out = DiffPoly()
    powers: dict = {}
    for mono, c in p._terms.items():
        term = DiffPoly({(): c})
        keep = []
        for s, e in mono:
            sym = _SYMS[s]
            if sym in mapping:
                key = (s, e)
                if key not in powers:
                    powers[key] = DiffPoly._coerce(mapping[sym]) ** e
                term = term * powers[key]
            else:
                keep.append((s, e))
        if keep:
            term = term * DiffPoly({tuple(keep): mpq(1)})
        out = out + term
    return out


def collect(p: DiffPoly, predicate) -> dict[DiffPoly, DiffPoly]:
    """Split ``p`` by the part of each monomial whose symbols match.

    ``predicate`` is a callable on :class:`Sym` or a collection of tags.
    Returns ``{key monomial: coefficient polynomial}`` with
    ``p == sum(k * v)``.
    """
    if not callable(predicate):
        tags = set(predicate)
        predicate = lambda sym: sym.tag in tags  # noqa: E731
    groups: dict[tuple, dict] = {}
    for mono, c in p._terms.items():
        key = tuple((s, e) for s, e in mono if predicate(_SYMS[s]))
        rest = tuple((s, e) for s, e in mono if not predicate(_SYMS[s]))
        groups.setdefault(key, {})[rest] = c
    return {DiffPoly({k: mpq(1)}): DiffPoly(v) for k, v in groups.items()}


def degree_in(p: DiffPoly, predicate: Callable[[Sym], bool]) -> set[int]:
    """Set of total degrees, over matching symbols, of the monomials of ``p``."""
    return {sum(e for s, e in m if predicate(_SYMS[s])) for m in p._terms}

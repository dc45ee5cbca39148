"""Exact sparse multivariate Laurent polynomial arithmetic over the integers.

Polynomials live in Z[x1^{±1}, ..., xn^{±1}] and are stored as finitely
supported maps from integer exponent vectors to nonzero coefficients.
Python integers are arbitrary precision, so no overflow handling is needed.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Sequence


class InexactDivisionError(ArithmeticError):
    """Raised when a Laurent polynomial division leaves a nonzero remainder."""

    def __init__(self, message: str, remainder: "LaurentPoly | None" = None):
        super().__init__(message)
        self.remainder = remainder


class UnsupportedSubstitutionError(ValueError):
    """Raised when a negative power of a non-invertible image is required."""


def _term_key(exponents: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # Graded lex with priority x1 < x2 < ...: lower total degree first,
    # then higher exponent on earlier variables first.  This is a group
    # order on Z^n, hence a valid monomial order for leading-term division.
    return (sum(exponents), tuple(-e for e in exponents))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int]):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            if len(exps) != nvars:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, expected {nvars}"
                )
            if coeff:
                clean[tuple(exps)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "LaurentPoly":
        """The variable x_{index}, 1-based."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(len(exponents), {tuple(exponents): coeff})

    # -- inspection ----------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Terms in canonical (graded lex, ascending) order."""
        for exps in sorted(self._terms, key=_term_key):
            yield exps, self._terms[exps]

    def term_map(self) -> Mapping[tuple[int, ...], int]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * self.nvars: 1}

    def is_unit_monomial(self) -> bool:
        """True iff this is a single term with coefficient ±1."""
        if len(self._terms) != 1:
            return False
        return abs(next(iter(self._terms.values()))) == 1

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def sort_key(self) -> tuple:
        """Key inducing a deterministic total order; equal iff equal polys."""
        return (
            self.nvars,
            tuple((_term_key(e), e, c) for e, c in self.terms()),
        )

    # -- ring operations -----------------------------------------------

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        result = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = result.get(exps, 0) + coeff
            if new:
                result[exps] = new
            else:
                result.pop(exps, None)
        return LaurentPoly(self.nvars, result)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        # iterate the smaller factor outermost
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        result: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                new = result.get(key, 0) + ca * cb
                if new:
                    result[key] = new
                else:
                    del result[key]
        return LaurentPoly(self.nvars, result)

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_unit_monomial():
                raise UnsupportedSubstitutionError(
                    "negative power of a non-unit Laurent polynomial"
                )
            exps, coeff = next(iter(self._terms.items()))
            return LaurentPoly(
                self.nvars,
                {tuple(exponent * e for e in exps): coeff if exponent % 2 else 1},
            )
        result = LaurentPoly.one(self.nvars)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.nvars, tuple(sorted(self._terms.items()))))
            )
        return self._hash

    # -- rendering / parsing --------------------------------------------

    def render(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self.terms():
            factors = [
                f"{names[i]}^{e}" if e != 1 else names[i]
                for i, e in enumerate(exps)
                if e != 0
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self.render()!r})"

    _TOKEN = re.compile(r"\s*(\d+|[A-Za-z_]\w*|\^|\*|\+|-)")

    @classmethod
    def parse(
        cls, text: str, nvars: int, names: Sequence[str] | None = None
    ) -> "LaurentPoly":
        """Parse the same grammar as ``render``: integers, ``*``, ``^`` with
        signed exponents, ``+`` and ``-``."""
        if names is None:
            names = [f"x{i + 1}" for i in range(nvars)]
        index = {name: i for i, name in enumerate(names)}
        tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = cls._TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip():
                    raise ValueError(f"unexpected character at position {pos}: {text[pos]!r}")
                break
            tokens.append(m.group(1))
            pos = m.end()
        terms: dict[tuple[int, ...], int] = {}
        i = 0

        def fail(msg: str) -> ValueError:
            return ValueError(f"parse error near token {i}: {msg}")

        while i < len(tokens):
            sign = 1
            while i < len(tokens) and tokens[i] in "+-":
                if tokens[i] == "-":
                    sign = -sign
                i += 1
            if i >= len(tokens):
                raise fail("dangling sign")
            coeff = sign
            exps = [0] * nvars
            expect_factor = True
            while expect_factor:
                tok = tokens[i]
                if tok.isdigit():
                    coeff *= int(tok)
                    i += 1
                elif tok in index:
                    var = index[tok]
                    i += 1
                    power = 1
                    if i < len(tokens) and tokens[i] == "^":
                        i += 1
                        psign = 1
                        if i < len(tokens) and tokens[i] == "-":
                            psign = -1
                            i += 1
                        if i >= len(tokens) or not tokens[i].isdigit():
                            raise fail("expected integer exponent after '^'")
                        power = psign * int(tokens[i])
                        i += 1
                    exps[var] += power
                else:
                    raise fail(f"unexpected token {tok!r}")
                if i < len(tokens) and tokens[i] == "*":
                    i += 1
                else:
                    expect_factor = False
            key = tuple(exps)
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return cls(nvars, terms)


def canonical_cmp(a: LaurentPoly, b: LaurentPoly) -> int:
    """Total order on Laurent polynomials; 0 iff mathematically equal."""
    ka, kb = a.sort_key(), b.sort_key()
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def _shift(terms: Mapping[tuple[int, ...], int], offset: tuple[int, ...]):
    return {tuple(e + o for e, o in zip(exps, offset)): c for exps, c in terms.items()}


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division: returns q with q * den == num.

    The unit (Laurent monomial) content of both operands is cleared first,
    then ordinary multivariate leading-term division runs under the graded
    lex order.  A nonzero remainder raises InexactDivisionError carrying it.
    """
    num._check_compatible(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.nvars)
    n = num.nvars
    shift_num = tuple(min(e[i] for e in num.term_map()) for i in range(n))
    shift_den = tuple(min(e[i] for e in den.term_map()) for i in range(n))
    rem = _shift(num.term_map(), tuple(-s for s in shift_num))
    den0 = _shift(den.term_map(), tuple(-s for s in shift_den))
    lt_den = max(den0, key=_term_key)
    lc_den = den0[lt_den]
    quot: dict[tuple[int, ...], int] = {}
    while rem:
        lt = max(rem, key=_term_key)
        coeff = rem[lt]
        qexp = tuple(a - b for a, b in zip(lt, lt_den))
        if any(e < 0 for e in qexp) or coeff % lc_den:
            raise InexactDivisionError(
                "nonzero remainder in Laurent polynomial division",
                remainder=LaurentPoly(n, _shift(rem, shift_num)),
            )
        qc = coeff // lc_den
        quot[qexp] = qc
        for exps, c in den0.items():
            key = tuple(a + b for a, b in zip(qexp, exps))
            new = rem.get(key, 0) - qc * c
            if new:
                rem[key] = new
            else:
                rem.pop(key, None)
    offset = tuple(s - d for s, d in zip(shift_num, shift_den))
    return LaurentPoly(n, _shift(quot, offset))


def substitute(p: LaurentPoly, images: Sequence[LaurentPoly]) -> LaurentPoly:
    """Evaluate p at the given images, one per variable of p.

    Negative exponents require the corresponding image to be a unit
    Laurent monomial (single term, coefficient ±1).
    """
    if len(images) != p.nvars:
        raise ValueError(f"expected {p.nvars} images, got {len(images)}")
    if p.nvars == 0:
        return p
    target = images[0].nvars
    for img in images:
        if img.nvars != target:
            raise ValueError("images must share one ambient variable count")
    result = LaurentPoly.zero(target)
    # cache image powers; exponents repeat heavily across terms
    power_cache: dict[tuple[int, int], LaurentPoly] = {}

    def img_power(k: int, e: int) -> LaurentPoly:
        key = (k, e)
        cached = power_cache.get(key)
        if cached is None:
            img = images[k]
            if e < 0 and not img.is_unit_monomial():
                raise UnsupportedSubstitutionError(
                    f"negative power of non-unit image for variable {k + 1}"
                )
            cached = img ** e
            power_cache[key] = cached
        return cached

    for exps, coeff in p.term_map().items():
        term = LaurentPoly.constant(target, coeff)
        for k, e in enumerate(exps):
            if e:
                term = term * img_power(k, e)
        result = result + term
    return result


def product(factors: Iterable[LaurentPoly], nvars: int) -> LaurentPoly:
    result = LaurentPoly.one(nvars)
    for f in factors:
        result = result * f
    return result

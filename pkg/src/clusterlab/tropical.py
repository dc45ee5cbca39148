"""Principal coefficients, F-polynomials, tropical evaluation, and the
separation-of-additions formula.

The principal pattern of an r x r skew-symmetric matrix B is the 2r x r
extended matrix [B; I_r]; the coefficient variables y_1..y_r are stored
as the frozen variables x_{r+1}..x_{2r} of that frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exmatrix import ExtendedExchangeMatrix
from .laurent import LaurentPoly, exact_div, substitute
from .seed import Seed, apply_path


class SeparationMismatchError(ArithmeticError):
    """The separation formula disagreed with direct mutation.

    Carries a reproducer so the falsification can be replayed.
    """

    def __init__(self, matrix: ExtendedExchangeMatrix, path: tuple[int, ...], vertex: int):
        self.matrix = matrix
        self.path = path
        self.vertex = vertex
        super().__init__(
            "separation formula disagrees with direct mutation; reproducer: "
            f"matrix={matrix.to_json()}, path={list(path)}, vertex={vertex}"
        )


@dataclass(frozen=True)
class TropicalMonomial:
    """Element of the tropical semifield on the frozen generators:
    a Laurent monomial given by its exponent vector, coefficient 1."""

    exponents: tuple[int, ...]

    def __mul__(self, other: "TropicalMonomial") -> "TropicalMonomial":
        return TropicalMonomial(
            tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def tropical_add(self, other: "TropicalMonomial") -> "TropicalMonomial":
        return TropicalMonomial(
            tuple(min(a, b) for a, b in zip(self.exponents, other.exponents))
        )

    def __pow__(self, k: int) -> "TropicalMonomial":
        return TropicalMonomial(tuple(k * e for e in self.exponents))

    @classmethod
    def unit(cls, ngens: int) -> "TropicalMonomial":
        return cls((0,) * ngens)


@dataclass(frozen=True)
class PrincipalPattern:
    """The principal-coefficient extension [B; I_r] of a mutable block."""

    extended: ExtendedExchangeMatrix

    def __post_init__(self):
        m = self.extended
        if m.n != 2 * m.r:
            raise ValueError(f"principal pattern needs n = 2r, got n={m.n}, r={m.r}")
        for i in range(m.r):
            for j in range(m.r):
                expected = 1 if i == j else 0
                if m.entries[m.r + i][j] != expected:
                    raise ValueError(
                        f"lower block is not the identity at ({i + 1},{j + 1})"
                    )

    @property
    def r(self) -> int:
        return self.extended.r

    @classmethod
    def from_matrix(cls, matrix: ExtendedExchangeMatrix) -> "PrincipalPattern":
        """Principal pattern over the top r x r block of any matrix."""
        r = matrix.r
        rows = list(matrix.entries[:r])
        for i in range(r):
            rows.append(tuple(1 if j == i else 0 for j in range(r)))
        return cls(ExtendedExchangeMatrix(2 * r, r, tuple(rows)))


def x_function(pattern: PrincipalPattern, path: Sequence[int], ell: int) -> LaurentPoly:
    """The cluster variable X_{ell,t} of the principal-coefficient seed
    reached by the path, in the variables x_1..x_r, y_1..y_r."""
    if not 1 <= ell <= pattern.r:
        raise ValueError(f"vertex {ell} out of range 1..{pattern.r}")
    s = apply_path(Seed.initial(pattern.extended), path)
    return s.variables[ell - 1]


def f_polynomial(pattern: PrincipalPattern, path: Sequence[int], ell: int) -> LaurentPoly:
    """X_{ell,t} with x_1 = ... = x_r = 1; a polynomial in y_1..y_r."""
    x = x_function(pattern, path, ell)
    r = pattern.r
    nv = 2 * r
    images = [LaurentPoly.one(nv)] * r + [
        LaurentPoly.variable(nv, r + j) for j in range(1, r + 1)
    ]
    return substitute(x, images)


def tropical_eval(
    f: LaurentPoly, images: Sequence[TropicalMonomial]
) -> TropicalMonomial:
    """Evaluate f in the tropical semifield: each monomial of f maps to a
    tropical monomial through the images, positive integer coefficients
    evaluate to the unit, and the sum is the componentwise exponent minimum."""
    if f.is_zero():
        raise ValueError("tropical evaluation of the zero polynomial is undefined")
    if len(images) != f.nvars:
        raise ValueError(f"expected {f.nvars} images, got {len(images)}")
    best: TropicalMonomial | None = None
    for exps, _coeff in f.term_map().items():
        induced = tuple(
            sum(e * img.exponents[k] for e, img in zip(exps, images))
            for k in range(len(images[0].exponents))
        )
        mono = TropicalMonomial(induced)
        best = mono if best is None else best.tropical_add(mono)
    return best


def separation_eval(
    target_matrix: ExtendedExchangeMatrix, path: Sequence[int], ell: int
) -> LaurentPoly:
    """Cluster variable of the geometric-type pattern via separation of
    additions: X_{ell,t} with y_j substituted by the coefficient monomials,
    divided by the tropical evaluation of F_{ell,t}."""
    n, r = target_matrix.n, target_matrix.r
    if not 1 <= ell <= r:
        raise ValueError(f"vertex {ell} out of range 1..{r}")
    pattern = PrincipalPattern.from_matrix(target_matrix)
    x = x_function(pattern, path, ell)
    f = f_polynomial(pattern, path, ell)
    # y_j maps to prod_{i=r+1..n} x_i^{b_ij} in the n-variable frame
    images = [LaurentPoly.variable(n, i) for i in range(1, r + 1)]
    nfrozen = n - r
    trop_images = [TropicalMonomial.unit(nfrozen)] * r
    for j in range(1, r + 1):
        exps = [0] * n
        for i in range(r + 1, n + 1):
            exps[i - 1] = target_matrix.entry(i, j)
        images.append(LaurentPoly.monomial(tuple(exps)))
        trop_images.append(
            TropicalMonomial(tuple(target_matrix.entry(i, j) for i in range(r + 1, n + 1)))
        )
    numerator = substitute(x, images)
    denominator = tropical_eval(f, trop_images)
    den_exps = [0] * n
    for k, e in enumerate(denominator.exponents):
        den_exps[r + k] = e
    return exact_div(numerator, LaurentPoly.monomial(tuple(den_exps)))


def separated_variable_checked(
    target_matrix: ExtendedExchangeMatrix, path: Sequence[int], ell: int
) -> LaurentPoly:
    """separation_eval cross-checked against direct seed mutation; a
    mismatch is fatal."""
    separated = separation_eval(target_matrix, path, ell)
    direct = apply_path(Seed.initial(target_matrix), path).variables[ell - 1]
    if separated != direct:
        raise SeparationMismatchError(target_matrix, tuple(path), ell)
    return separated

"""The four implemented families of basic relative invariants.

Each family fixes a variable layout over matrix positions, the invariant
polynomial (generic determinant, symmetric determinant, Pfaffian, or sum of
squares), the embedding of linear forms back into matrices, and the
open-orbit membership test that characterizes Lefschetz elements.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidSpecError,
    NotLinearError,
    OutOfRangeError,
    UnsupportedFamilyError,
    VarMismatchError,
)
from .exactmath import RatMatrix, mat_rank
from .polyring import Poly, poly_mul, poly_pow


class FamilyKind(enum.Enum):
    GENERIC_DET = "generic-det"
    SYM_DET = "sym-det"
    PFAFFIAN = "pfaffian"
    QUADRIC = "quadric"
    E7 = "e7"  # reserved; construction is refused


_CLI_NAMES = {kind.value: kind for kind in FamilyKind}


def kind_from_name(name: str) -> FamilyKind:
    try:
        return _CLI_NAMES[name]
    except KeyError:
        raise InvalidSpecError(f"unknown family {name!r}") from None


def _positions(kind: FamilyKind, n: int) -> list[tuple[int, int]]:
    if kind is FamilyKind.GENERIC_DET:
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    if kind is FamilyKind.SYM_DET:
        return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    if kind is FamilyKind.PFAFFIAN:
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if kind is FamilyKind.QUADRIC:
        return [(i, 0) for i in range(1, n + 1)]
    raise UnsupportedFamilyError("no layout for this kind")


@dataclass(frozen=True)
class FamilySpec:
    """Descriptor of one invariant family instance: kind, size, power."""

    kind: FamilyKind
    size: int
    power: int = 1

    def __post_init__(self):
        if self.kind is FamilyKind.E7:
            raise UnsupportedFamilyError("the 27-variable cubic is not implemented")
        if self.size < 1:
            raise InvalidSpecError("size must be at least 1")
        if self.power < 1:
            raise InvalidSpecError("power must be at least 1")
        if self.kind is FamilyKind.PFAFFIAN and self.size % 2:
            raise InvalidSpecError("Pfaffian needs an even matrix size")

    @property
    def nvars(self) -> int:
        n = self.size
        return {
            FamilyKind.GENERIC_DET: n * n,
            FamilyKind.SYM_DET: n * (n + 1) // 2,
            FamilyKind.PFAFFIAN: n * (n - 1) // 2,
            FamilyKind.QUADRIC: n,
        }[self.kind]

    @property
    def layout(self) -> tuple[str, ...]:
        """Variable names in layout order (row-major over matrix positions)."""
        sep = "_" if self.size > 9 else ""
        if self.kind is FamilyKind.QUADRIC:
            return tuple(f"x{i}" for i, _ in _positions(self.kind, self.size))
        return tuple(
            f"x{i}{sep}{j}" for i, j in _positions(self.kind, self.size)
        )

    @property
    def basic_degree(self) -> int:
        n = self.size
        return {
            FamilyKind.GENERIC_DET: n,
            FamilyKind.SYM_DET: n,
            FamilyKind.PFAFFIAN: n // 2,
            FamilyKind.QUADRIC: 2,
        }[self.kind]

    @property
    def socle_degree(self) -> int:
        return self.power * self.basic_degree

    @property
    def rank_r(self) -> int:
        """Number of strongly orthogonal roots; the grading k1+2k2+...+r*kr
        gives the basic invariant degree r."""
        n = self.size
        return {
            FamilyKind.GENERIC_DET: n,
            FamilyKind.SYM_DET: n,
            FamilyKind.PFAFFIAN: n // 2,
            FamilyKind.QUADRIC: 2,
        }[self.kind]

    @property
    def d_value(self) -> Fraction:
        """The multiplicity constant of the submodule-vanishing predicate."""
        return d_table(self.kind, self.nvars)

    def var_index(self, i: int, j: int = 0) -> int:
        return _position_index(self)[(i, j)]

    def __str__(self) -> str:
        return f"{self.kind.value}(n={self.size}, s={self.power})"


def d_table(kind: FamilyKind, nvars: int) -> Fraction:
    """d per family: symmetric determinants 1, generic determinants 2,
    Pfaffians 4, quadrics dimension - 2 (2m-3 in 2m-1 variables, 2m-4 in
    2m-2), and 4 for the reserved 27-variable cubic."""
    if kind is FamilyKind.SYM_DET:
        return Fraction(1)
    if kind is FamilyKind.GENERIC_DET:
        return Fraction(2)
    if kind is FamilyKind.PFAFFIAN:
        return Fraction(4)
    if kind is FamilyKind.QUADRIC:
        return Fraction(nvars - 2)
    if kind is FamilyKind.E7:
        return Fraction(4)
    raise UnsupportedFamilyError(f"no d value for {kind}")


_POSITION_CACHE: dict[tuple[FamilyKind, int], dict[tuple[int, int], int]] = {}


def _position_index(spec: FamilySpec) -> dict[tuple[int, int], int]:
    key = (spec.kind, spec.size)
    table = _POSITION_CACHE.get(key)
    if table is None:
        table = {pos: k for k, pos in enumerate(_positions(spec.kind, spec.size))}
        _POSITION_CACHE[key] = table
    return table


def _sym_var(spec: FamilySpec, i: int, j: int) -> Poly:
    if i > j:
        i, j = j, i
    return Poly.variable(spec.nvars, spec.var_index(i, j))


def _det_of(matrix: list[list[Poly]], nvars: int) -> Poly:
    """Cofactor expansion along the first row."""
    size = len(matrix)
    if size == 0:
        return Poly.one(nvars)
    if size == 1:
        return matrix[0][0]
    total = Poly.zero(nvars)
    for j, top in enumerate(matrix[0]):
        if top.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        cofactor = poly_mul(top, _det_of(minor, nvars))
        total = total + (cofactor if j % 2 == 0 else -cofactor)
    return total


def generic_matrix(spec: FamilySpec) -> list[list[Poly]]:
    """The generic matrix of the family's layout, entries as Poly variables
    (symmetric or alternating as appropriate)."""
    n = spec.size
    if spec.kind is FamilyKind.GENERIC_DET:
        return [
            [Poly.variable(spec.nvars, spec.var_index(i, j)) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    if spec.kind is FamilyKind.SYM_DET:
        return [[_sym_var(spec, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    if spec.kind is FamilyKind.PFAFFIAN:
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                if i == j:
                    row.append(Poly.zero(spec.nvars))
                elif i < j:
                    row.append(Poly.variable(spec.nvars, spec.var_index(i, j)))
                else:
                    row.append(-Poly.variable(spec.nvars, spec.var_index(j, i)))
            rows.append(row)
        return rows
    raise InvalidSpecError("no generic matrix for this family")


def pfaffian_poly(n: int) -> Poly:
    """Pfaffian of the generic alternating n x n matrix (n even) by recursive
    first-row expansion; satisfies Pf(X)^2 = det(X)."""
    if n < 2 or n % 2:
        raise InvalidSpecError("Pfaffian needs an even size of at least 2")
    spec = FamilySpec(FamilyKind.PFAFFIAN, n)

    def expand(indices: tuple[int, ...]) -> Poly:
        if not indices:
            return Poly.one(spec.nvars)
        first, rest = indices[0], indices[1:]
        total = Poly.zero(spec.nvars)
        for pos, j in enumerate(rest, start=2):
            remaining = tuple(k for k in rest if k != j)
            term = poly_mul(
                Poly.variable(spec.nvars, spec.var_index(first, j)),
                expand(remaining),
            )
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return expand(tuple(range(1, n + 1)))


def basic_invariant(spec: FamilySpec) -> Poly:
    """The degree-c0 basic relative invariant (power ignored)."""
    if spec.kind is FamilyKind.QUADRIC:
        total = Poly.zero(spec.nvars)
        for k in range(spec.nvars):
            v = Poly.variable(spec.nvars, k)
            total = total + poly_mul(v, v)
        return total
    if spec.kind is FamilyKind.PFAFFIAN:
        return pfaffian_poly(spec.size)
    return _det_of(generic_matrix(spec), spec.nvars)


def make_invariant(spec: FamilySpec) -> Poly:
    """F = (basic invariant)^s, homogeneous of degree s * c0."""
    return poly_pow(basic_invariant(spec), spec.power)


def _linear_coeffs(spec: FamilySpec, L: Poly) -> tuple[Fraction, ...]:
    if L.nvars != spec.nvars:
        raise VarMismatchError(
            f"form has {L.nvars} variables, family layout has {spec.nvars}"
        )
    if L.is_zero() or L.homogeneous_degree() != 1:
        raise NotLinearError("Lefschetz candidates must be nonzero linear forms")
    return L.linear_coefficients()


def coeffs_to_matrix(spec: FamilySpec, L: Poly):
    """Fill the matrix (or coordinate vector, for quadrics) whose entries are
    L's coefficients under the family layout.  Symmetric layouts place the
    coefficient of x_ij at both (i,j) and (j,i); alternating layouts add the
    sign."""
    coeffs = _linear_coeffs(spec, L)
    n = spec.size
    if spec.kind is FamilyKind.QUADRIC:
        return coeffs
    entries: dict[tuple[int, int], Fraction] = {}
    for k, (i, j) in enumerate(_positions(spec.kind, n)):
        a = coeffs[k]
        if not a:
            continue
        entries[(i - 1, j - 1)] = a
        if spec.kind is FamilyKind.SYM_DET and i != j:
            entries[(j - 1, i - 1)] = a
        elif spec.kind is FamilyKind.PFAFFIAN:
            entries[(j - 1, i - 1)] = -a
    return RatMatrix(n, n, entries)


def orbit_test(spec: FamilySpec, L: Poly) -> bool:
    """Is the matrix/vector of L in the open orbit?

    Full rank for the determinant families, nonsingular (nonzero Pfaffian)
    for the alternating family, and nonzero sum of squared coefficients for
    quadrics.  Over the rationals every nonzero vector is non-isotropic, so
    the quadric test never sees the complex isotropic locus.
    """
    if spec.kind is FamilyKind.QUADRIC:
        coeffs = _linear_coeffs(spec, L)
        return bool(sum(a * a for a in coeffs))
    matrix = coeffs_to_matrix(spec, L)
    return mat_rank(matrix) == spec.size


def canonical_lefschetz(spec: FamilySpec) -> Poly:
    """The family's standard open-orbit element: the trace form for the
    determinant families, the standard symplectic form for Pfaffians, and
    the first coordinate for quadrics."""
    if spec.kind is FamilyKind.QUADRIC:
        return Poly.variable(spec.nvars, 0)
    if spec.kind is FamilyKind.PFAFFIAN:
        pairs = [(2 * t - 1, 2 * t) for t in range(1, spec.size // 2 + 1)]
    else:
        pairs = [(i, i) for i in range(1, spec.size + 1)]
    total = Poly.zero(spec.nvars)
    for i, j in pairs:
        total = total + Poly.variable(spec.nvars, spec.var_index(i, j))
    return total


def deficient_candidates(spec: FamilySpec) -> list[Poly]:
    """Deterministic boundary candidates of every deficient rank, built by
    zeroing trailing blocks of the canonical element.  Quadrics have none:
    rational nonzero vectors are never isotropic."""
    if spec.kind is FamilyKind.QUADRIC:
        return []
    if spec.kind is FamilyKind.PFAFFIAN:
        pairs = [(2 * t - 1, 2 * t) for t in range(1, spec.size // 2 + 1)]
    else:
        pairs = [(i, i) for i in range(1, spec.size + 1)]
    out = []
    for keep in range(1, len(pairs)):
        total = Poly.zero(spec.nvars)
        for i, j in pairs[:keep]:
            total = total + Poly.variable(spec.nvars, spec.var_index(i, j))
        out.append(total)
    return out


def corner_minor(spec: FamilySpec, t: int) -> Poly:
    """Determinant of the lower-right t x t corner of the generic symmetric
    matrix; these are the highest-weight-vector minors of the symmetric
    family."""
    if spec.kind is not FamilyKind.SYM_DET:
        raise InvalidSpecError("corner minors are defined for sym-det only")
    if not 1 <= t <= spec.size:
        raise OutOfRangeError(f"corner size {t} outside 1..{spec.size}")
    n = spec.size
    block = [
        [_sym_var(spec, i, j) for j in range(n - t + 1, n + 1)]
        for i in range(n - t + 1, n + 1)
    ]
    return _det_of(block, spec.nvars)

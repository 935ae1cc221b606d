"""Strong Lefschetz verification.

The multiplication map by L^(c-2i) on the degree-i piece of the Gorenstein
quotient is bijective exactly when the matrix of m |-> (L^(c-2i) m)
contracted against F has rank h_i; both sides factor through the perfect
pairing, so comparing that rank with the degree-i catalecticant rank decides
each degree without ever constructing quotient bases.  The higher-Hessian
determinants evaluated at L's coefficient point give an independent route to
the same verdict, and verify_theorem cross-validates both against open-orbit
membership on seeded samples plus deterministic rank-deficient candidates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadBasisError,
    NotLinearError,
    VarMismatchError,
    ZeroPolynomialError,
)
from .exactmath import RatMatrix, mat_det, mat_rank, pivot_rows
from .families import (
    FamilySpec,
    canonical_lefschetz,
    deficient_candidates,
    make_invariant,
    orbit_test,
)
from .macaulay import catalecticant, ensure_within_budget
from .polyring import Monomial, Poly, contract, poly_mul, poly_pow


@dataclass(frozen=True)
class SlpRow:
    i: int
    required: int
    achieved: int

    @property
    def passed(self) -> bool:
        return self.achieved == self.required


@dataclass(frozen=True)
class SlpReport:
    """Per-degree ranks of the maps x L^(c-2i), with a family echo when the
    check was run against a known family."""

    family: str | None
    n: int | None
    s: int | None
    c: int
    lefschetz_coeffs: tuple[Fraction, ...]
    rows: tuple[SlpRow, ...]

    @property
    def verdict(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_dict(self, names: Sequence[str] | None = None) -> dict:
        if names is None:
            names = [f"x{i + 1}" for i in range(len(self.lefschetz_coeffs))]
        return {
            "family": self.family,
            "n": self.n,
            "s": self.s,
            "L": {
                name: str(coeff)
                for name, coeff in zip(names, self.lefschetz_coeffs)
                if coeff
            },
            "c": self.c,
            "rows": [
                {
                    "i": row.i,
                    "required": row.required,
                    "achieved": row.achieved,
                    "pass": row.passed,
                }
                for row in self.rows
            ],
            "verdict": self.verdict,
        }


def _validate_slp_inputs(f: Poly, L: Poly) -> int:
    c = _require_c(f)
    if L.nvars != f.nvars:
        raise VarMismatchError(
            f"L has {L.nvars} variables, F has {f.nvars}"
        )
    if L.is_zero() or L.homogeneous_degree() != 1:
        raise NotLinearError("L must be a nonzero homogeneous linear form")
    return c


def required_ranks(
    f: Poly, weights: Sequence | None = None
) -> tuple[int, ...]:
    """h_i for i = 0..floor(c/2): the bijectivity targets.  Callers checking
    many candidates against one F should compute this once and pass it to
    slp_check."""
    c = _require_c(f)
    return tuple(
        mat_rank(catalecticant(f, i, weights).matrix) for i in range(c // 2 + 1)
    )


def _require_c(f: Poly) -> int:
    if f.is_zero():
        raise ZeroPolynomialError("cannot check the zero polynomial")
    c = f.homogeneous_degree()
    if c is None:
        raise ValueError("F must be homogeneous")
    return c


def _achieved_rank(
    f: Poly, L: Poly, i: int, power: int, weights: Sequence | None
) -> int:
    shifted = contract(poly_pow(L, power), f, weights)
    if shifted.is_zero():
        return 0
    # deg shifted = 2i, so this square matrix realizes the pairing
    # (m, m') -> (L^(c-2i) m m')(F) on degree-i monomials.
    return mat_rank(catalecticant(shifted, i, weights).matrix)


def slp_check(
    f: Poly,
    L: Poly,
    spec: FamilySpec | None = None,
    weights: Sequence | None = None,
    required: Sequence[int] | None = None,
) -> SlpReport:
    """Exact per-degree report on x L^(c-2i); verdict is True iff L is a
    Lefschetz element of the quotient generated by F."""
    c = _validate_slp_inputs(f, L)
    if required is None:
        required = required_ranks(f, weights)
    rows = []
    for i in range(c // 2 + 1):
        achieved = _achieved_rank(f, L, i, c - 2 * i, weights)
        rows.append(SlpRow(i=i, required=required[i], achieved=achieved))
    return SlpReport(
        family=spec.kind.value if spec else None,
        n=spec.size if spec else None,
        s=spec.power if spec else None,
        c=c,
        lefschetz_coeffs=L.linear_coefficients(),
        rows=tuple(rows),
    )


# ---------------------------------------------------------------------------
# higher Hessians


def default_degree_basis(
    f: Poly, i: int, weights: Sequence | None = None
) -> list[Monomial]:
    """Monomials whose catalecticant rows are pivot rows of the deterministic
    elimination: a canonical basis of the degree-i quotient piece."""
    cat = catalecticant(f, i, weights)
    return [cat.row_monomials[r] for r in pivot_rows(cat.matrix)]


def higher_hessian(
    f: Poly,
    i: int,
    basis: Sequence[Poly] | None = None,
    weights: Sequence | None = None,
) -> list[list[Poly]]:
    """Matrix of contract(b_j * b_k, F) over a basis of the degree-i quotient
    piece; entries are homogeneous of degree c - 2i.  A supplied basis is
    rejected if it is dependent modulo the annihilator or has the wrong size."""
    cat = catalecticant(f, i, weights)
    h_i = mat_rank(cat.matrix)
    if basis is None:
        polys = [
            Poly.monomial(f.nvars, cat.row_monomials[r])
            for r in pivot_rows(cat.matrix)
        ]
    else:
        polys = list(basis)
        if len(polys) != h_i:
            raise BadBasisError(
                f"basis size {len(polys)} != quotient dimension {h_i}"
            )
        col_index = {m: k for k, m in enumerate(cat.col_monomials)}
        entries = {}
        for r, b in enumerate(polys):
            if not b.is_homogeneous_of(i):
                raise BadBasisError("basis elements must be homogeneous of degree i")
            image = contract(b, f, weights)
            for expo, coeff in image.terms():
                entries[(r, col_index[expo])] = coeff
        rows_matrix = RatMatrix(len(polys), len(cat.col_monomials), entries)
        if mat_rank(rows_matrix) != len(polys):
            raise BadBasisError("basis representatives are dependent modulo the annihilator")
    return [
        [contract(poly_mul(bj, bk), f, weights) for bk in polys] for bj in polys
    ]


def hessian_point(L: Poly, weights: Sequence | None = None) -> tuple[Fraction, ...]:
    """The evaluation point dual to L: its coefficient vector, rescaled by
    the contraction weights when those are not all 1."""
    coeffs = L.linear_coefficients()
    if weights is None:
        return coeffs
    return tuple(Fraction(w) * a for w, a in zip(weights, coeffs))


def hessian_determinants_at(
    f: Poly,
    L: Poly,
    weights: Sequence | None = None,
    hessians: Sequence[Sequence[Sequence[Poly]]] | None = None,
) -> list[Fraction]:
    """Determinant of each higher Hessian (i = 0..floor(c/2)) evaluated at
    L's coefficient point."""
    c = _validate_slp_inputs(f, L)
    if hessians is None:
        hessians = [higher_hessian(f, i, weights=weights) for i in range(c // 2 + 1)]
    point = hessian_point(L, weights)
    dets = []
    for matrix in hessians:
        size = len(matrix)
        evaluated = RatMatrix.from_rows(
            [[entry.evaluate(point) for entry in row] for row in matrix]
        ) if size else RatMatrix(0, 0)
        dets.append(mat_det(evaluated))
    return dets


def hessian_criterion_at(
    f: Poly,
    L: Poly,
    weights: Sequence | None = None,
    hessians: Sequence[Sequence[Sequence[Poly]]] | None = None,
) -> bool:
    """True iff every higher-Hessian determinant is nonzero at the point dual
    to L: an independent oracle for the slp_check verdict."""
    return all(hessian_determinants_at(f, L, weights, hessians))


# ---------------------------------------------------------------------------
# theorem-level cross-validation


@dataclass(frozen=True)
class TheoremSample:
    coeffs: tuple[Fraction, ...]
    forced: bool
    slp_verdict: bool
    orbit_verdict: bool

    @property
    def agree(self) -> bool:
        return self.slp_verdict == self.orbit_verdict


@dataclass(frozen=True)
class TheoremSummary:
    family: str
    n: int
    s: int
    c: int
    seed: int
    requested_samples: int
    samples: tuple[TheoremSample, ...]

    @property
    def mismatches(self) -> int:
        return sum(1 for smp in self.samples if not smp.agree)

    @property
    def counterexample(self) -> TheoremSample | None:
        for smp in self.samples:
            if not smp.agree:
                return smp
        return None

    def to_dict(self, names: Sequence[str] | None = None) -> dict:
        def coeff_map(coeffs):
            if names is None:
                local = [f"x{i + 1}" for i in range(len(coeffs))]
            else:
                local = names
            return {n: str(v) for n, v in zip(local, coeffs) if v}

        return {
            "family": self.family,
            "n": self.n,
            "s": self.s,
            "c": self.c,
            "seed": self.seed,
            "samples": self.requested_samples,
            "rows": [
                {
                    "L": coeff_map(smp.coeffs),
                    "forced": smp.forced,
                    "slp": smp.slp_verdict,
                    "orbit": smp.orbit_verdict,
                    "agree": smp.agree,
                }
                for smp in self.samples
            ],
            "mismatches": self.mismatches,
            "counterexample": (
                coeff_map(self.counterexample.coeffs) if self.counterexample else None
            ),
        }


def random_linear_form(
    nvars: int, rng: random.Random, bound: int = 5
) -> Poly:
    """Random linear form with integer coefficients in [-bound, bound],
    redrawn on the (rare) all-zero outcome."""
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(nvars)]
        if any(coeffs):
            return Poly(
                nvars,
                {
                    tuple(1 if k == idx else 0 for k in range(nvars)): Fraction(v)
                    for idx, v in enumerate(coeffs)
                    if v
                },
            )


def verify_theorem(
    spec: FamilySpec,
    samples: int,
    seed: int,
    budget: int | None = None,
) -> TheoremSummary:
    """Check slp_check verdict == orbit_test on `samples` seeded random
    linear forms plus the deterministic rank-deficient candidates.  Any
    disagreement is a counterexample to the open-orbit characterization and
    shows up in the summary."""
    ensure_within_budget(spec.nvars, spec.socle_degree, budget)
    f = make_invariant(spec)
    targets = required_ranks(f)
    rng = random.Random(seed)
    candidates: list[tuple[Poly, bool]] = [
        (L, True) for L in deficient_candidates(spec)
    ]
    candidates.append((canonical_lefschetz(spec), True))
    candidates.extend(
        (random_linear_form(spec.nvars, rng), False) for _ in range(samples)
    )
    rows = []
    for L, forced in candidates:
        report = slp_check(f, L, spec=spec, required=targets)
        rows.append(
            TheoremSample(
                coeffs=L.linear_coefficients(),
                forced=forced,
                slp_verdict=report.verdict,
                orbit_verdict=orbit_test(spec, L),
            )
        )
    return TheoremSummary(
        family=spec.kind.value,
        n=spec.size,
        s=spec.power,
        c=spec.socle_degree,
        seed=seed,
        requested_samples=samples,
        samples=tuple(rows),
    )

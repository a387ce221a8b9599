"""The odd-denominator lattice spanned by 2^((|mu| - len(mu))/2) * p_mu,
its valuation, and the machine verifiers built on it.

A polynomial lies in 2^t times the lattice exactly when its
``delta_valuation`` is >= t, so each verifier reduces a containment claim
to a minimum of integer valuations over a finite set of inputs and reports
the outcome with witnesses.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import INFINITY, Valuation, tri_count, vp
from .partitions import Partition, enumerate_partitions, format_partition
from .polyrep import (OddPoly, _q_star, _q_times, inner_poly, op_generator,
                      poly_word_images)

GENERATOR_NAMES = ("f0", "f1", "e0", "e1")


def delta_valuation(f: OddPoly) -> Valuation:
    """min over monomials of v2(coeff) - (|mu| - len(mu))/2; INFINITY for 0.

    The subtracted quantity is the 2-adic size of the lattice basis
    monomial on p_mu, an integer because every part of mu is odd.
    """
    best: Valuation = INFINITY
    for mu, c in f.items():
        shift, odd = divmod(sum(mu) - len(mu), 2)
        if odd:
            raise ValueError(f"key {mu!r} has even parts; not in the odd ring")
        val = vp(c, 2) - shift
        if val < best:
            best = val
    return best


def delta_basis(n: int) -> list[tuple[Partition, OddPoly]]:
    """The degree-n slice of the lattice basis: (mu, 2^((n-len(mu))/2) p_mu)
    for each odd-part mu of n, in enumeration order."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    return [
        (mu, {mu: Fraction(2 ** ((n - len(mu)) // 2))})
        for mu in enumerate_partitions(n, "odd")
    ]


def _basis_desc(mu: Partition, n: int) -> str:
    shift = (n - len(mu)) // 2
    prefix = f"2^{shift}*" if shift else ""
    return f"{prefix}p{format_partition(mu)}"


@dataclass(frozen=True)
class ValuationReport:
    """Outcome of one verifier run.

    ``observed_min`` is compared against ``required``; when the claim also
    asserts tightness (``require_tight``), PASS additionally demands that
    the minimum is attained exactly.  ``witnesses`` carries (description,
    value) pairs: every violating input, and the first inputs attaining
    the bound.
    """

    claim: str
    degree_bound: int
    required: int
    observed_min: Valuation
    require_tight: bool = False
    witnesses: tuple[tuple[str, int], ...] = field(default=())

    @property
    def tight(self) -> bool:
        return self.observed_min == self.required

    @property
    def verdict(self) -> str:
        ok = self.observed_min >= self.required
        if ok and self.require_tight:
            ok = self.tight
        return "PASS" if ok else "FAIL"

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "degree_bound": self.degree_bound,
            "required": self.required,
            "observed_min": ("INFINITY" if self.observed_min is INFINITY
                             else self.observed_min),
            "require_tight": self.require_tight,
            "tight": self.tight,
            "verdict": self.verdict,
            "witnesses": [list(w) for w in self.witnesses],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _scan_report(claim, degree_bound, required, require_tight, observations):
    """Fold (description, valuation) observations into a ValuationReport."""
    observed: Valuation = INFINITY
    failures = []
    attained = []
    for desc, val in observations:
        if val is INFINITY:
            continue
        if val < observed:
            observed = val
        if val < required:
            failures.append((desc, val))
        elif val == required and len(attained) < 3:
            attained.append((desc, val))
    return ValuationReport(
        claim=claim,
        degree_bound=degree_bound,
        required=required,
        observed_min=observed,
        require_tight=require_tight,
        witnesses=tuple(failures + attained),
    )


def verify_q_image(n: int, degree_bound: int, side: str) -> ValuationReport:
    """Check one instance of the q_n image bounds on the lattice.

    side="multiply": q_n * f stays in 2^(-(n + eps - 4)/2) times the
    lattice; side="adjoint": q_n^* f stays in 2^((n - eps + 2)/2) times it,
    where eps = n mod 2.  Exercised on every lattice basis monomial of
    degree <= degree_bound (enough, since both maps are linear over the
    odd-denominator integers).
    """
    if n < 1:
        raise ValueError(f"q-image check needs n >= 1, got {n}")
    eps = n % 2
    if side == "multiply":
        required = -(n + eps - 4) // 2
        image = lambda b: _q_times(n, b)
    elif side == "adjoint":
        required = (n - eps + 2) // 2
        image = lambda b: _q_star(n, b)
    else:
        raise ValueError(f"side must be 'multiply' or 'adjoint', got {side!r}")

    def observations():
        for d in range(degree_bound + 1):
            for mu, b in delta_basis(d):
                yield f"q{n} {side} {_basis_desc(mu, d)}", delta_valuation(image(b))

    return _scan_report(f"q-image[{side},n={n}]", degree_bound, required,
                        False, observations())


def verify_stability(degree_bound: int) -> ValuationReport:
    """Check that all four generator operators preserve the lattice, on
    every basis monomial of degree <= degree_bound."""

    def observations():
        for d in range(degree_bound + 1):
            for mu, b in delta_basis(d):
                for gen in GENERATOR_NAMES:
                    yield (f"{gen} {_basis_desc(mu, d)}",
                           delta_valuation(op_generator(gen, b)))

    return _scan_report("stability", degree_bound, 0, False, observations())


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of bit-packed rows (each int is one row)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            b = row.bit_length() - 1
            if b in pivots:
                row ^= pivots[b]
            else:
                pivots[b] = row
                rank += 1
                break
    return rank


def verify_generation(n: int) -> ValuationReport:
    """Check that the 2^n length-n f-word images of 1 span the degree-n
    slice of the lattice over the odd-denominator integers.

    Each image is written in lattice-basis coordinates (integral by
    stability -- violations raise), reduced mod 2 to a bit row, and the
    deduplicated rows are eliminated over GF(2).  Full rank lifts to
    spanning, so ``required`` is the slice dimension and ``observed_min``
    the achieved rank.
    """
    if n < 1:
        raise ValueError(f"generation check needs n >= 1, got {n}")
    basis_keys = enumerate_partitions(n, "odd")
    column = {mu: idx for idx, mu in enumerate(basis_keys)}
    rows: set[int] = set()
    images = 0
    for _, f in poly_word_images(n):
        images += 1
        bits = 0
        for mu, c in f.items():
            shift = (n - len(mu)) // 2
            val = vp(c, 2)
            if val < shift:
                raise ArithmeticError(
                    f"word image escapes the lattice at {mu} (v2={val} < {shift})"
                )
            if val == shift:
                bits |= 1 << column[mu]
        if bits:
            rows.add(bits)
    rank = gf2_rank(sorted(rows))
    return ValuationReport(
        claim=f"generation[n={n}]",
        degree_bound=n,
        required=len(basis_keys),
        observed_min=rank,
        require_tight=True,
        witnesses=(("nonzero word images", images),
                   ("distinct mod-2 rows", len(rows))),
    )


def verify_pairing(n: int) -> ValuationReport:
    """Check the pairing bound on the degree-n lattice slice: every pairing
    of basis monomials has 2-adic valuation >= n - tri_count(n), and the
    bound is attained (tightness)."""
    if n < 1:
        raise ValueError(f"pairing check needs n >= 1, got {n}")
    required = n - tri_count(n)
    basis = delta_basis(n)

    def observations():
        for i, (mu, b1) in enumerate(basis):
            for nu, b2 in basis[i:]:
                desc = f"({_basis_desc(mu, n)}, {_basis_desc(nu, n)})"
                yield desc, vp(inner_poly(b1, b2), 2)

    return _scan_report(f"pairing[n={n}]", n, required, True, observations())

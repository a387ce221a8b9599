"""The polynomial model of the vacuum representation.

The ambient ring is generated by the odd-indexed variables p1, p3, p5, ...
A polynomial is a dict mapping an odd-part partition (the multiset of
variable indices) to a Fraction coefficient: ``{(): 1}`` is the constant 1
and ``{(3, 1, 1): Fraction(2, 3)}`` is (2/3) * p3 * p1^2.  The pairing
makes the monomials orthogonal with squared norm z_mu, which is the same
as saying that the adjoint of multiplication by p_k is k * d/dp_k.

On top of the ring sit the expansion coefficients

    q_n = sum over odd-part mu of n of (2^len(mu) / z_mu) * p_mu,   q_0 = 1,

and the four generator operators assembled from them:

    f0 = p1  - (1/4) sum_{n>=1} (-1)^(n+1) q_{n+1} q_n^*
    f1 =       (1/4) sum_{n>=1} (-1)^(n+1) q_{n+1} q_n^*
    e0 = p1^* - (1/4) sum_{n>=1} (-1)^(n+1) q_n q_{n+1}^*
    e1 =        (1/4) sum_{n>=1} (-1)^(n+1) q_n q_{n+1}^*

The series act locally in degree, so on any given input only finitely
many terms survive and the truncated sum below is exactly the operator.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .partitions import Partition, check_partition, enumerate_partitions, z_mu
from .tableaux import ResidueWord

OddPoly = dict[Partition, Fraction]

GENERATORS = ("f0", "f1", "e0", "e1")


def check_odd_key(mu) -> Partition:
    """Validate a monomial key: a partition with every part odd."""
    mu = check_partition(mu)
    if any(part % 2 == 0 for part in mu):
        raise ValueError(f"monomial keys need odd parts, got {mu!r}")
    return mu


def poly_one() -> OddPoly:
    """The constant polynomial 1."""
    return {(): Fraction(1)}


def top_degree(f: OddPoly) -> int:
    """Largest total degree sum(mu) with a nonzero coefficient; -1 for 0."""
    return max((sum(mu) for mu in f), default=-1)


def poly_add(f: OddPoly, g: OddPoly) -> OddPoly:
    out = dict(f)
    for mu, c in g.items():
        s = out.get(mu, Fraction(0)) + c
        if s:
            out[mu] = s
        elif mu in out:
            del out[mu]
    return out


def poly_sub(f: OddPoly, g: OddPoly) -> OddPoly:
    return poly_add(f, poly_scale(g, Fraction(-1)))


def poly_scale(f: OddPoly, c: Fraction) -> OddPoly:
    if not c:
        return {}
    return {mu: c * v for mu, v in f.items()}


def mul_monomial(f: OddPoly, mu) -> OddPoly:
    """Multiply f by the monomial p_mu (merge the part multisets)."""
    mu = check_odd_key(mu)
    return {tuple(sorted(tau + mu, reverse=True)): c for tau, c in f.items()}


def adjoint_monomial(f: OddPoly, mu) -> OddPoly:
    """Apply the adjoint of multiplication by p_mu.

    Each part k of mu acts as k * d/dp_k, once per multiplicity, so a
    monomial of f survives only if it contains mu, and its coefficient
    picks up k^(m_k) times a falling factorial of the multiplicities.
    """
    mu = check_odd_key(mu)
    mult_mu = Counter(mu)
    out: OddPoly = {}
    for tau, c in f.items():
        mult_tau = Counter(tau)
        factor = 1
        for k, m in mult_mu.items():
            t = mult_tau[k]
            if t < m:
                factor = 0
                break
            for step in range(m):
                factor *= k * (t - step)
            mult_tau[k] = t - m
        if not factor:
            continue
        rest = tuple(sorted(mult_tau.elements(), reverse=True))
        s = out.get(rest, Fraction(0)) + c * factor
        if s:
            out[rest] = s
        elif rest in out:
            del out[rest]
    return out


@lru_cache(maxsize=None)
def _q_items(n: int) -> tuple[tuple[Partition, Fraction], ...]:
    return tuple(
        (mu, Fraction(2 ** len(mu), z_mu(mu)))
        for mu in enumerate_partitions(n, "odd")
    )


def q(n: int) -> OddPoly:
    """The degree-n expansion coefficient q_n (q_0 = 1).

    The defining coefficients 2^len(mu) / z_mu are computed once per n and
    cached; callers get a fresh dict.
    """
    if n < 0:
        raise ValueError(f"q_n needs n >= 0, got {n}")
    return dict(_q_items(n))


def _q_times(n: int, f: OddPoly) -> OddPoly:
    """q_n * f."""
    out: OddPoly = {}
    for mu, c in _q_items(n):
        for tau, v in f.items():
            key = tuple(sorted(tau + mu, reverse=True))
            s = out.get(key, Fraction(0)) + c * v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _q_star(n: int, f: OddPoly) -> OddPoly:
    """The adjoint of multiplication by q_n, applied to f."""
    out: OddPoly = {}
    for mu, c in _q_items(n):
        for key, v in adjoint_monomial(f, mu).items():
            s = out.get(key, Fraction(0)) + c * v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def inner_poly(f: OddPoly, g: OddPoly) -> Fraction:
    """The pairing with (p_mu, p_mu) = z_mu and distinct monomials orthogonal."""
    if len(g) < len(f):
        f, g = g, f
    total = Fraction(0)
    for mu, c in f.items():
        d = g.get(mu)
        if d is not None:
            total += c * d * z_mu(mu)
    return total


_QUARTER = Fraction(1, 4)


def op_generator(gen: str, f: OddPoly, terms: int | None = None) -> OddPoly:
    """Apply one of the generator operators f0, f1, e0, e1 to f.

    The series truncation is exact: on input of top degree d the f-series
    terms with n > d and the e-series terms with n + 1 > d annihilate f,
    because the adjoint factor lowers degree by more than d.  ``terms``
    overrides the truncation point; it exists so tests can confirm that
    pushing the series further never changes the result.
    """
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}")
    if not f:
        return {}
    d = top_degree(f)
    series: OddPoly = {}
    if gen in ("f0", "f1"):
        last = d if terms is None else terms
        for m in range(1, last + 1):
            term = _q_times(m + 1, _q_star(m, f))
            series = poly_add(series, poly_scale(term, Fraction((-1) ** (m + 1))))
        if gen == "f1":
            return poly_scale(series, _QUARTER)
        return poly_sub(mul_monomial(f, (1,)), poly_scale(series, _QUARTER))
    last = d - 1 if terms is None else terms
    for m in range(1, last + 1):
        term = _q_times(m, _q_star(m + 1, f))
        series = poly_add(series, poly_scale(term, Fraction((-1) ** (m + 1))))
    if gen == "e1":
        return poly_scale(series, _QUARTER)
    return poly_sub(adjoint_monomial(f, (1,)), poly_scale(series, _QUARTER))


def op_a(j: int, f: OddPoly, terms: int | None = None) -> OddPoly:
    """The degree-j component of the odd vertex operator:

        A_j = (1/2) sum_a (-1)^a q_a q_{a+j}^*,   both subscripts >= 0.

    A_{-1} and A_1 are the differences f1 - f0 and e0 - e1; general j is
    exposed for the contravariance self-checks.
    """
    if not f:
        return {}
    d = top_degree(f)
    lo = max(0, -j)
    hi = d - j if terms is None else terms
    out: OddPoly = {}
    for a in range(lo, hi + 1):
        term = _q_times(a, _q_star(a + j, f))
        out = poly_add(out, poly_scale(term, Fraction((-1) ** a)))
    return poly_scale(out, Fraction(1, 2))


def apply_word_poly(word: ResidueWord) -> OddPoly:
    """Image of 1 under the f-generators named by the word, left to right.

    Only the modulus-2 model has a polynomial realization here.
    """
    if word.e != 2:
        raise ValueError(f"polynomial model needs e = 2, got e = {word.e}")
    f = poly_one()
    for letter in word.letters:
        f = op_generator("f0" if letter == 0 else "f1", f)
        if not f:
            break
    return f


def poly_word_images(n: int) -> Iterator[tuple[tuple[int, ...], OddPoly]]:
    """Yield (letters, image) for every length-n f-word with nonzero image,
    in lexicographic word order, sharing work across common prefixes."""
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")

    def walk(depth: int, prefix: list[int], f: OddPoly):
        if depth == n:
            yield tuple(prefix), f
            return
        for letter in (0, 1):
            g = op_generator("f0" if letter == 0 else "f1", f)
            if g:
                prefix.append(letter)
                yield from walk(depth + 1, prefix, g)
                prefix.pop()

    yield from walk(0, [], poly_one())


def random_poly(rng, max_degree: int, terms: int = 6) -> OddPoly:
    """A sparse polynomial with small rational coefficients, drawn from
    ``rng``; companion to fock.random_vector for the self-checks."""
    out: OddPoly = {}
    for _ in range(terms):
        n = rng.randrange(max_degree + 1)
        keys = enumerate_partitions(n, "odd")
        mu = keys[rng.randrange(len(keys))]
        coeff = Fraction(rng.randint(-9, 9), rng.choice((1, 1, 2, 3, 5)))
        out[mu] = out.get(mu, Fraction(0)) + coeff
    return {k: v for k, v in out.items() if v}

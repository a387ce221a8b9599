"""The partition-basis model: vectors supported on partitions, with the
add-cell and remove-cell operators indexed by residues mod e.

A vector is a dict mapping partitions to nonzero Fraction coefficients
(the zero vector is the empty dict), and the partition basis is
orthonormal for ``inner``.  Applying the length-n word v to the vacuum
gives the generating vector whose coefficient on each shape counts the
standard tableaux of that shape with residue sequence v; pairing two such
vectors sums those counts multiplied shape by shape.
"""

from fractions import Fraction
from typing import Iterator

from .partitions import (Partition, add_cell, addable_cells, enumerate_partitions,
                         remove_cell, removable_cells)
from .tableaux import ResidueWord

FockVector = dict[Partition, Fraction]


def basis(lam) -> FockVector:
    """The basis vector supported on one partition."""
    return {tuple(lam): Fraction(1)}


def apply_f(x: FockVector, i: int, e: int) -> FockVector:
    """Add one cell of residue i in every possible way."""
    out: FockVector = {}
    for lam, c in x.items():
        for cell in addable_cells(lam, i, e):
            grown = add_cell(lam, cell)
            prev = out.get(grown)
            out[grown] = c if prev is None else prev + c
    return {k: v for k, v in out.items() if v}


def apply_e(x: FockVector, i: int, e: int) -> FockVector:
    """Remove one cell of residue i in every possible way."""
    out: FockVector = {}
    for lam, c in x.items():
        for cell in removable_cells(lam, i, e):
            shrunk = remove_cell(lam, cell)
            prev = out.get(shrunk)
            out[shrunk] = c if prev is None else prev + c
    return {k: v for k, v in out.items() if v}


def apply_word(word: ResidueWord) -> FockVector:
    """Image of the vacuum under the add-cell operators, read left to right."""
    x = basis(())
    for letter in word.letters:
        x = apply_f(x, letter, word.e)
        if not x:
            break
    return x


def word_images(n: int, e: int = 2) -> Iterator[tuple[tuple[int, ...], FockVector]]:
    """Yield (letters, image) for every length-n word with nonzero image,
    in lexicographic word order.

    This walks the prefix tree once, so the O(e^n) words share the work of
    their common prefixes and dead branches are pruned as soon as the
    running image vanishes.
    """
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")

    def walk(depth: int, prefix: list[int], x: FockVector):
        if depth == n:
            yield tuple(prefix), x
            return
        for i in range(e):
            y = apply_f(x, i, e)
            if y:
                prefix.append(i)
                yield from walk(depth + 1, prefix, y)
                prefix.pop()

    yield from walk(0, [], basis(()))


def inner(x: FockVector, y: FockVector) -> Fraction:
    """The pairing making the partition basis orthonormal."""
    if len(y) < len(x):
        x, y = y, x
    total = Fraction(0)
    for lam, c in x.items():
        d = y.get(lam)
        if d is not None:
            total += c * d
    return total


def pair_sum(v: ResidueWord, w: ResidueWord) -> int:
    """Sum over all shapes of (tableaux with word v) * (tableaux with word w).

    Computed as the pairing of the two word images.  The result is a count,
    so a non-integer would mean an arithmetic bug; that is checked loudly.
    """
    if v.e != w.e:
        raise ValueError(f"words use different moduli: {v.e} vs {w.e}")
    if len(v) != len(w):
        raise ValueError(f"words differ in length: {len(v)} vs {len(w)}")
    value = inner(apply_word(v), apply_word(w))
    if value.denominator != 1:
        raise ArithmeticError(f"pair sum came out non-integral: {value}")
    return value.numerator


def random_vector(rng, max_degree: int, terms: int = 6) -> FockVector:
    """A sparse vector with small rational coefficients, drawn from ``rng``.

    Used by the randomized self-checks (adjointness, gradedness); exact
    arithmetic throughout, the randomness is only in which entries appear.
    """
    out: FockVector = {}
    for _ in range(terms):
        n = rng.randrange(max_degree + 1)
        shapes = enumerate_partitions(n)
        lam = shapes[rng.randrange(len(shapes))]
        coeff = Fraction(rng.randint(-9, 9), rng.choice((1, 1, 2, 3, 5)))
        out[lam] = out.get(lam, Fraction(0)) + coeff
    return {k: v for k, v in out.items() if v}

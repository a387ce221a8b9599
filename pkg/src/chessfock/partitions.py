"""Integer partitions, diagram cells and residues, and the multiplicity
bijection between odd-part and distinct-part partitions.

A partition is a plain tuple of weakly decreasing positive ints, e.g.
``(6, 4, 1)``; the empty partition is ``()``.  A cell of the diagram is a
1-based ``(row, column)`` pair.

Residue convention
------------------
The e-residue of the cell in row i, column j is ``(i - j) mod e``.  Much
of the literature uses ``j - i`` instead; the two conventions agree for
e = 2 and differ by relabelling i -> e - i otherwise.  Everything in this
package, including the CLI, uses ``i - j``.
"""

from collections import Counter
from math import factorial

Partition = tuple[int, ...]
Cell = tuple[int, int]


def check_partition(parts) -> Partition:
    """Validate an iterable of parts and return it as a canonical tuple."""
    t = tuple(parts)
    for i, part in enumerate(t):
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"parts must be positive integers: {t!r}")
        if i and t[i - 1] < part:
            raise ValueError(f"parts must be weakly decreasing: {t!r}")
    return t


def sort_key(p: Partition):
    """Total order on partitions: by size, then lexicographically by parts
    in the same descending order used by enumerate_partitions."""
    return (sum(p), tuple(-part for part in p))


def format_partition(p: Partition) -> str:
    """Render as ``[6,4,1]`` (the empty partition is ``[]``)."""
    return "[" + ",".join(str(part) for part in p) + "]"


def parse_partition(text: str) -> Partition:
    """Inverse of format_partition."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"expected [a,b,...], got {text!r}")
    body = body[1:-1].strip()
    if not body:
        return ()
    try:
        parts = tuple(int(piece) for piece in body.split(","))
    except ValueError:
        raise ValueError(f"expected [a,b,...], got {text!r}") from None
    return check_partition(parts)


def multiplicities(p: Partition) -> Counter:
    """Map each part size to the number of times it occurs."""
    return Counter(p)


def _parts_all(n, cap):
    if n == 0:
        yield ()
        return
    for first in range(min(cap, n), 0, -1):
        for rest in _parts_all(n - first, first):
            yield (first,) + rest


def _parts_odd(n, cap):
    if n == 0:
        yield ()
        return
    first = min(cap, n)
    if first % 2 == 0:
        first -= 1
    for f in range(first, 0, -2):
        for rest in _parts_odd(n - f, f):
            yield (f,) + rest


def _parts_distinct(n, cap):
    if n == 0:
        yield ()
        return
    for first in range(min(cap, n), 0, -1):
        for rest in _parts_distinct(n - first, first - 1):
            yield (first,) + rest


def enumerate_partitions(n: int, parts: str = "all") -> list[Partition]:
    """All partitions of n, in descending lexicographic order.

    ``parts`` restricts the stream: "all", "odd" (every part odd) or
    "distinct" (strictly decreasing parts).
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if parts == "all":
        gen = _parts_all(n, n)
    elif parts == "odd":
        gen = _parts_odd(n, n)
    elif parts == "distinct":
        gen = _parts_distinct(n, n)
    else:
        raise ValueError(f"unknown filter {parts!r}")
    return list(gen)


def cell_residue(cell: Cell, e: int) -> int:
    """The e-residue (i - j) mod e of a 1-based cell (i, j)."""
    if e < 1:
        raise ValueError(f"modulus must be >= 1, got {e}")
    i, j = cell
    return (i - j) % e


def _addable_corners(lam: Partition) -> list[Cell]:
    out = []
    for r, row in enumerate(lam):
        if r == 0 or lam[r - 1] > row:
            out.append((r + 1, row + 1))
    out.append((len(lam) + 1, 1))
    return out


def _removable_corners(lam: Partition) -> list[Cell]:
    out = []
    for r, row in enumerate(lam):
        if r + 1 == len(lam) or lam[r + 1] < row:
            out.append((r + 1, row))
    return out


def _check_residue_args(i: int, e: int) -> None:
    if e < 1:
        raise ValueError(f"modulus must be >= 1, got {e}")
    if not 0 <= i < e:
        raise ValueError(f"residue {i} is not in 0..{e - 1}")


def addable_cells(lam: Partition, i: int, e: int) -> list[Cell]:
    """Cells of residue i that can be appended to lam, top row first."""
    _check_residue_args(i, e)
    return [c for c in _addable_corners(lam) if cell_residue(c, e) == i]


def removable_cells(lam: Partition, i: int, e: int) -> list[Cell]:
    """Corner cells of residue i that can be deleted from lam, top row first."""
    _check_residue_args(i, e)
    return [c for c in _removable_corners(lam) if cell_residue(c, e) == i]


def add_cell(lam: Partition, cell: Cell) -> Partition:
    """lam with an addable corner filled in (the cell must be addable)."""
    r = cell[0] - 1
    if r == len(lam):
        return lam + (1,)
    return lam[:r] + (lam[r] + 1,) + lam[r + 1:]


def remove_cell(lam: Partition, cell: Cell) -> Partition:
    """lam with a removable corner deleted (the cell must be removable)."""
    r = cell[0] - 1
    if lam[r] == 1:
        return lam[:r] + lam[r + 1:]
    return lam[:r] + (lam[r] - 1,) + lam[r + 1:]


def z_mu(mu: Partition) -> int:
    """prod_k k^m_k * m_k! over the part multiplicities m_k of mu.

    This is the squared norm of the power-sum monomial indexed by mu; only
    odd-part mu occur in this package, and even parts are rejected so that
    mixed-parity bugs surface early.
    """
    mu = check_partition(mu)
    if any(part % 2 == 0 for part in mu):
        raise ValueError(f"z_mu expects odd parts, got {mu!r}")
    out = 1
    for k, m in multiplicities(mu).items():
        out *= k ** m * factorial(m)
    return out


def glaisher_odd_to_distinct(mu: Partition) -> Partition:
    """Glaisher's bijection: expand each multiplicity in binary.

    A part k occurring m = 2^(r1) + 2^(r2) + ... times (distinct powers)
    becomes the distinct parts 2^(r1)*k, 2^(r2)*k, ...
    """
    mu = check_partition(mu)
    if any(part % 2 == 0 for part in mu):
        raise ValueError(f"expected odd parts, got {mu!r}")
    parts = []
    for k, m in multiplicities(mu).items():
        r = 0
        while m:
            if m & 1:
                parts.append(k << r)
            m >>= 1
            r += 1
    return tuple(sorted(parts, reverse=True))


def glaisher_distinct_to_odd(nu: Partition) -> Partition:
    """Inverse of glaisher_odd_to_distinct: split each part as 2^r * k with
    k odd and give the part k multiplicity 2^r."""
    nu = check_partition(nu)
    if len(set(nu)) != len(nu):
        raise ValueError(f"expected distinct parts, got {nu!r}")
    counts: Counter = Counter()
    for part in nu:
        k = part
        r = 0
        while k % 2 == 0:
            k //= 2
            r += 1
        counts[k] += 1 << r
    out = []
    for k in sorted(counts, reverse=True):
        out.extend([k] * counts[k])
    return tuple(out)

"""Brute-force standard-tableau oracles.

Everything here enumerates explicitly: tableaux are built cell by cell as
growth chains of partitions.  That is deliberately naive -- these counts
are the ground truth that the operator models elsewhere in the package are
checked against -- so every entry point is guarded by a size cap.
"""

from dataclasses import dataclass
from math import factorial

from .partitions import Partition, cell_residue, check_partition

#: A filled diagram: one tuple of entries per row, e.g. ((1, 2), (3,)).
Tableau = tuple[tuple[int, ...], ...]

#: Default cap on the number of cells a brute-force enumeration will accept.
DEFAULT_ORACLE_LIMIT = 14


class OracleLimitError(RuntimeError):
    """A brute-force enumeration exceeded its configured size cap."""


@dataclass(frozen=True)
class ResidueWord:
    """A word over Z/eZ: the residues of the cells that received 1, 2, ...

    in a growing tableau.  ``ResidueWord(2, (0, 1, 0))`` is the length-3
    alternating word.
    """

    e: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"modulus must be >= 1, got {self.e}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if not (isinstance(a, int) and 0 <= a < self.e):
                raise ValueError(f"letter {a!r} is not a residue mod {self.e}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ",".join(str(a) for a in self.letters)


def alternating_word(n: int) -> ResidueWord:
    """The length-n word 0,1,0,1,... over Z/2Z (the chess condition)."""
    return ResidueWord(2, tuple(k % 2 for k in range(n)))


def cyclic_word(n: int, e: int) -> ResidueWord:
    """The length-n word 0,1,...,e-1,0,1,... over Z/eZ."""
    if e < 1:
        raise ValueError(f"modulus must be >= 1, got {e}")
    return ResidueWord(e, tuple(k % e for k in range(n)))


def _check_size(n: int, limit: int) -> None:
    if n > limit:
        raise OracleLimitError(
            f"refusing brute force on {n} cells (limit {limit}); "
            "raise the limit explicitly if you mean it"
        )


def enumerate_syt(shape, limit: int = DEFAULT_ORACLE_LIMIT) -> list[Tableau]:
    """All standard tableaux of the given shape, by backtracking.

    Entries 1..n are placed in order; a cell is available when its row is
    still short of the shape and the cell above (if any) is already filled,
    so rows and columns increase automatically.
    """
    shape = check_partition(shape)
    n = sum(shape)
    _check_size(n, limit)
    rows: list[list[int]] = [[] for _ in shape]
    out: list[Tableau] = []

    def place(k: int) -> None:
        if k > n:
            out.append(tuple(tuple(row) for row in rows))
            return
        for r, row in enumerate(rows):
            c = len(row)
            if c < shape[r] and (r == 0 or len(rows[r - 1]) > c):
                row.append(k)
                place(k + 1)
                row.pop()

    place(1)
    return out


def _entry_cells(tableau: Tableau) -> dict[int, tuple[int, int]]:
    pos = {}
    for r, row in enumerate(tableau, start=1):
        for c, entry in enumerate(row, start=1):
            pos[entry] = (r, c)
    n = len(pos)
    if sorted(pos) != list(range(1, n + 1)):
        raise ValueError("tableau entries must be exactly 1..n")
    return pos


def residue_word(tableau: Tableau, e: int) -> ResidueWord:
    """The e-residues of the cells holding 1, 2, ..., n."""
    pos = _entry_cells(tableau)
    return ResidueWord(e, tuple(cell_residue(pos[k], e) for k in range(1, len(pos) + 1)))


def is_chess(tableau: Tableau) -> bool:
    """Chessboard parity: the entry in row i, column j has the parity of
    i + j + 1, so the cell holding 1 is "grey" and colours alternate.

    Equivalent to the 2-residue word being alternating (tested both ways).
    """
    for r, row in enumerate(tableau, start=1):
        for c, entry in enumerate(row, start=1):
            if (entry - (r + c + 1)) % 2 != 0:
                return False
    return True


def count_by_residue(word: ResidueWord, shape,
                     limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """The number of standard tableaux of the given shape whose e-residue
    sequence equals ``word``.

    Counted by growth-chain backtracking, pruned at the first letter that
    cannot be matched; equivalent to filtering enumerate_syt but usable at
    somewhat larger sizes.
    """
    shape = check_partition(shape)
    if sum(shape) != len(word):
        raise ValueError(
            f"shape size {sum(shape)} differs from word length {len(word)}"
        )
    _check_size(len(word), limit)
    e = word.e
    filled = [0] * len(shape)

    def grow(k: int) -> int:
        if k == len(word.letters):
            return 1
        target = word.letters[k]
        total = 0
        for r in range(len(shape)):
            c = filled[r]
            if c < shape[r] and (r == 0 or filled[r - 1] > c) \
                    and (r - c) % e == target:
                filled[r] += 1
                total += grow(k + 1)
                filled[r] -= 1
        return total

    return grow(0)


def _conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for row in shape if row > c) for c in range(shape[0]))


def hook_count(shape) -> int:
    """The number of standard tableaux of the shape, by the hook-length
    formula (exact integer division)."""
    shape = check_partition(shape)
    n = sum(shape)
    conj = _conjugate(shape)
    hooks = 1
    for r, row_len in enumerate(shape):
        for c in range(row_len):
            hooks *= (row_len - c) + (conj[c] - r) - 1
    return factorial(n) // hooks

# src/chuk_closure_lab/semigroups/catalog.py
"""
Catalog of small finite semigroups and the table file format.

The catalog feeds refutation searches and the property tests. Table files are
plain text: the size m on the first line, m rows of m space-separated indices,
and an optional "identity <i>" line.
"""

import itertools
from pathlib import Path
from typing import Iterator, List, Optional, Sequence

from ..errors import TableFormatError
from .finite import (
    FiniteSemigroup,
    SemigroupMorphism,
    check_associative,
    direct_product,
)


def cyclic_group(n: int) -> FiniteSemigroup:
    """Z/n with generator 1"""
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteSemigroup(table=table, identity=0, name=f"C{n}")


def monogenic(index: int, period: int) -> FiniteSemigroup:
    """<a | a^(index+period) = a^index>; element k-1 stands for a^k"""
    size = index + period - 1

    def reduce(k: int) -> int:
        if k >= index:
            k = index + (k - index) % period
        return k

    table = tuple(
        tuple(reduce(i + j + 2) - 1 for j in range(size)) for i in range(size)
    )
    # index 1 makes it the cyclic group of order period, with identity a^period
    identity = period - 1 if index == 1 else None
    return FiniteSemigroup(table=table, identity=identity, name=f"M({index},{period})")


def left_zero(n: int) -> FiniteSemigroup:
    """x*y = x"""
    table = tuple(tuple(i for _ in range(n)) for i in range(n))
    return FiniteSemigroup(table=table, name=f"LZ{n}")


def right_zero(n: int) -> FiniteSemigroup:
    """x*y = y"""
    table = tuple(tuple(range(n)) for _ in range(n))
    return FiniteSemigroup(table=table, name=f"RZ{n}")


def null_semigroup(n: int) -> FiniteSemigroup:
    """Every product equals 0"""
    table = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return FiniteSemigroup(table=table, name=f"N{n}")


def brandt_b2() -> FiniteSemigroup:
    """
    The five-element Brandt semigroup: 2x2 matrix units plus zero.

    Elements: 0 = zero, 1 = e11, 2 = e12, 3 = e21, 4 = e22.
    """
    units = {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, 1)}
    lookup = {v: k for k, v in units.items()}

    def mul(x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        (i, j), (k, l) = units[x], units[y]
        return lookup[(i, l)] if j == k else 0

    table = tuple(tuple(mul(x, y) for y in range(5)) for x in range(5))
    return FiniteSemigroup(table=table, name="B2")


def flip_flop() -> FiniteSemigroup:
    """U2: a left-zero band {a, b} with an identity adjoined"""
    return left_zero(2).adjoin_identity().model_copy(update={"name": "U2"})


def klein_four() -> FiniteSemigroup:
    return direct_product(cyclic_group(2), cyclic_group(2)).model_copy(update={"name": "V4"})


def symmetric_group_s3() -> FiniteSemigroup:
    """S3 as permutations of {0,1,2}, composed left to right"""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(q[p[x]] for x in range(3))] for q in perms) for p in perms
    )
    return FiniteSemigroup(table=table, identity=index[(0, 1, 2)], name="S3")


def groups_up_to_order(n: int = 6) -> List[FiniteSemigroup]:
    """Every group of order <= n, for n <= 7"""
    if n > 7:
        raise ValueError("groups are only catalogued up to order 7")
    groups = [cyclic_group(k) for k in range(1, n + 1)]
    if n >= 4:
        groups.insert(4, klein_four())
    if n >= 6:
        groups.append(symmetric_group_s3())
    return groups


def default_catalog(max_index_period: int = 24) -> List[FiniteSemigroup]:
    """Monogenic semigroups with index * period <= bound, plus small named semigroups"""
    semigroups: List[FiniteSemigroup] = []
    for index in range(1, max_index_period + 1):
        for period in range(1, max_index_period // index + 1):
            semigroups.append(monogenic(index, period))
    semigroups.extend(
        [
            klein_four(),
            symmetric_group_s3(),
            left_zero(2),
            right_zero(2),
            null_semigroup(2),
            brandt_b2(),
            flip_flop(),
        ]
    )
    # ordered by size for bounded searches
    return sorted(semigroups, key=lambda s: s.size)


def catalog_morphisms(
    alphabet: Sequence[str], semigroups: Sequence[FiniteSemigroup]
) -> Iterator[SemigroupMorphism]:
    """Every assignment of elements to letters, semigroup by semigroup"""
    letters = tuple(alphabet)
    for semigroup in semigroups:
        for images in itertools.product(range(semigroup.size), repeat=len(letters)):
            yield SemigroupMorphism(
                alphabet=letters, target=semigroup, images=dict(zip(letters, images))
            )


def read_table(text: str, name: str = "") -> FiniteSemigroup:
    """Parse the table file format"""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise TableFormatError("empty table file")
    try:
        m = int(lines[0])
    except ValueError as e:
        raise TableFormatError(f"first line must be the size, got {lines[0]!r}") from e
    if len(lines) < m + 1:
        raise TableFormatError(f"expected {m} table rows, found {len(lines) - 1}")
    rows = []
    for number, line in enumerate(lines[1 : m + 1], start=2):
        try:
            row = tuple(int(x) for x in line.split())
        except ValueError as e:
            raise TableFormatError(f"line {number}: non-integer entry") from e
        if len(row) != m:
            raise TableFormatError(f"line {number}: expected {m} entries, got {len(row)}")
        rows.append(row)
    identity: Optional[int] = None
    for line in lines[m + 1 :]:
        parts = line.split()
        if len(parts) == 2 and parts[0] == "identity":
            identity = int(parts[1])
        else:
            raise TableFormatError(f"unexpected line {line!r}")
    if not check_associative(rows):
        raise TableFormatError("table is not associative")
    try:
        return FiniteSemigroup(table=tuple(rows), identity=identity, name=name)
    except ValueError as e:
        raise TableFormatError(str(e)) from e


def write_table(semigroup: FiniteSemigroup) -> str:
    """Render the table file format"""
    lines = [str(semigroup.size)]
    lines.extend(" ".join(str(x) for x in row) for row in semigroup.table)
    if semigroup.identity is not None:
        lines.append(f"identity {semigroup.identity}")
    return "\n".join(lines) + "\n"


def load_table(path: Path) -> FiniteSemigroup:
    """Read a table file from disk"""
    return read_table(Path(path).read_text(encoding="utf-8"), name=Path(path).stem)

"""Partition, box-content, and rectangle-pair combinatorics.

Partitions are tuples of weakly decreasing positive integers (trailing
zeros trimmed).  Boxes are (row, col) pairs, 1-indexed, with content
col - row.  P = P((a^p), (b^q)) is the family of partitions indexing the
simple summands of the tensor product of the two rectangle modules:
height <= p+q, rows q+1..p pinned to a, lambda_q >= max(a, b), and
complementary rows pairing to a+b.  P_k collects the shapes reachable
from P by adding k boxes, and tableaux are the chains
T = (T^(0), ..., T^(k)) with T^(0) in P that index seminormal bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import IndexOutOfRange, NotInP, NotInP1, NotInPk
from .params import HeckeParams

Partition = tuple  # weakly decreasing tuple of positive ints


def as_partition(parts) -> Partition:
    """Validate and normalize (trim trailing zeros) a parts sequence."""
    parts = tuple(int(x) for x in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def content(row: int, col: int) -> int:
    """Content col - row of the box in the given row and column (1-indexed)."""
    if row < 1 or col < 1:
        raise ValueError(f"box positions are 1-indexed, got ({row}, {col})")
    return col - row


def boxes(lam: Partition):
    """All (row, col) boxes of a partition."""
    for r, width in enumerate(lam, start=1):
        for c in range(1, width + 1):
            yield (r, c)


def addable_corners(lam: Partition, max_height=None):
    """Positions where a box may be added, optionally height capped."""
    out = []
    for r in range(1, len(lam) + 2):
        if max_height is not None and r > max_height:
            break
        width = lam[r - 1] if r <= len(lam) else 0
        above = lam[r - 2] if r >= 2 else None
        if r == 1 or above > width:
            out.append((r, width + 1))
    return out


def removable_corners(lam: Partition):
    """Positions whose removal leaves a partition."""
    out = []
    for r in range(1, len(lam) + 1):
        below = lam[r] if r < len(lam) else 0
        if lam[r - 1] > below:
            out.append((r, lam[r - 1]))
    return out


def add_box(lam: Partition, row: int) -> Partition:
    parts = list(lam) + [0]
    parts[row - 1] += 1
    return as_partition(parts)


def remove_box(lam: Partition, row: int) -> Partition:
    parts = list(lam)
    parts[row - 1] -= 1
    return as_partition(parts)


def add_box_set(lam: Partition, max_height=None):
    """All partitions obtained from lam by adding one box."""
    return {add_box(lam, r) for r, _ in addable_corners(lam, max_height)}


def is_in_P(lam: Partition, params: HeckeParams) -> bool:
    """Membership test straight from the defining constraints."""
    a, b, p, q = params.a, params.b, params.p, params.q
    if len(lam) > p + q:
        return False
    if sum(lam) != params.weight:
        return False
    get = lambda i: lam[i - 1] if i <= len(lam) else 0
    for i in range(q + 1, p + 1):
        if get(i) != a:
            return False
    if get(q) < max(a, b):
        return False
    for i in range(1, q + 1):
        if get(i) + get(p + q - i + 1) != a + b:
            return False
    return True


def enum_P(params: HeckeParams):
    """The rectangle-pair family P, built constructively.

    Members correspond to partitions mu inside a min(a,b) x q box: glue
    max(0, b-a) + mu_i onto row i of (a^p) and put the complement of row
    q+1-i into row p+i.
    """
    a, b, p, q = params.a, params.b, params.p, params.q
    base = max(0, b - a)
    out = set()
    for mu in _partitions_in_box(min(a, b), q):
        rows = [a + base + (mu[i] if i < len(mu) else 0) for i in range(q)]
        rows += [a] * (p - q)
        top = rows[:q]
        rows += [a + b - top[q - 1 - j] for j in range(q)]
        out.add(as_partition(rows))
    return out


def _partitions_in_box(width: int, height: int):
    """All partitions with at most `height` parts, each at most `width`."""
    results = []

    def rec(prefix, remaining_rows, cap):
        results.append(tuple(prefix))
        if remaining_rows == 0:
            return
        for part in range(min(cap, width), 0, -1):
            rec(prefix + [part], remaining_rows - 1, part)

    rec([], height, width)
    return {as_partition(p) for p in results}


def enum_P_size(params: HeckeParams) -> int:
    """Predicted |P| = binomial(min(a,b)+q, q)."""
    return comb(min(params.a, params.b) + params.q, params.q)


def enum_Pk(params: HeckeParams, i: int, max_height=None):
    """P_0 = P; P_i = one box added to some member of P_{i-1}."""
    if i < 0:
        raise ValueError("level must be nonnegative")
    level = enum_P(params)
    if max_height is not None:
        level = {lam for lam in level if len(lam) <= max_height}
    for _ in range(i):
        nxt = set()
        for lam in level:
            nxt |= add_box_set(lam, max_height)
        level = nxt
    return level


def is_in_Pk(lam: Partition, params: HeckeParams, k: int, max_height=None) -> bool:
    lam = as_partition(lam)
    if sum(lam) != params.weight + k:
        return False
    return lam in enum_Pk(params, k, max_height)


def gamma_rect(lam: Partition, params: HeckeParams) -> Fraction:
    """Constant by which the two-factor Casimir half acts on the lam summand.

    gl case: a*b*q + 2 * sum over boxes below row p of (content - shift);
    the sl case subtracts a*b*p*q/n.
    """
    lam = as_partition(lam)
    if not is_in_P(lam, params):
        raise NotInP(f"{lam} not in P for {params}")
    below = [content(r, c) for r, c in boxes(lam) if r > params.p]
    value = Fraction(params.a * params.b * params.q) + 2 * (
        sum(below) - len(below) * params.shift
    )
    if params.algebra == "sl":
        if params.n <= 0:
            raise ValueError("sl gamma needs params.n")
        value -= Fraction(params.a * params.b * params.p * params.q, params.n)
    return value


def parents(mu: Partition, params: HeckeParams):
    """The one or two members of P obtained by removing a box from mu.

    Ordered by the content of the removed box, ascending.
    """
    mu = as_partition(mu)
    found = []
    for r, c in removable_corners(mu):
        lam = remove_box(mu, r)
        if is_in_P(lam, params):
            found.append((content(r, c), lam))
    if not found:
        raise NotInP1(f"{mu} has no parent in P")
    found.sort(key=lambda t: t[0])
    return [lam for _, lam in found]


def complementary_position(row: int, col: int, params: HeckeParams):
    """The unique other slot a P-box can occupy: rows and columns reflected."""
    return (params.p + params.q + 1 - row, params.a + params.b + 1 - col)


@dataclass(frozen=True)
class Tableau:
    """A chain of partitions T^(0) ... T^(k), each adding one box."""

    shapes: tuple

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(as_partition(s) for s in self.shapes))
        for i in range(len(self.shapes) - 1):
            if sum(self.shapes[i + 1]) != sum(self.shapes[i]) + 1:
                raise ValueError("consecutive shapes must differ by one box")
            if not _contains(self.shapes[i + 1], self.shapes[i]):
                raise ValueError("shapes must be nested")

    @property
    def k(self) -> int:
        return len(self.shapes) - 1

    @property
    def start(self) -> Partition:
        return self.shapes[0]

    @property
    def end(self) -> Partition:
        return self.shapes[-1]

    def box(self, i: int):
        """(row, col) of the i-th added box, i = 1..k."""
        if not 1 <= i <= self.k:
            raise IndexOutOfRange(f"box index {i} outside 1..{self.k}")
        prev, cur = self.shapes[i - 1], self.shapes[i]
        for r in range(1, len(cur) + 1):
            a = cur[r - 1]
            b = prev[r - 1] if r <= len(prev) else 0
            if a != b:
                return (r, a)
        raise AssertionError("adjacent shapes identical")

    def fillings(self):
        """Map (row, col) -> label of the skew filling end/start."""
        return {self.box(i): i for i in range(1, self.k + 1)}


def _contains(outer, inner):
    return all(inner[i] <= (outer[i] if i < len(outer) else 0) for i in range(len(inner)))


def shifted_content(t: Tableau, i: int, params: HeckeParams) -> Fraction:
    """Shifted content c_T(i); c_T(0) encodes the starting shape's gamma value."""
    if not 0 <= i <= t.k:
        raise IndexOutOfRange(f"{i} outside 0..{t.k}")
    if i == 0:
        return gamma_rect(t.start, params) - params.shift
    r, c = t.box(i)
    return Fraction(content(r, c)) - params.shift


def shifted_content_list(t: Tableau, params: HeckeParams):
    """(c_T(0), ..., c_T(k))."""
    return tuple(shifted_content(t, i, params) for i in range(t.k + 1))


def content_key(t: Tableau, params: HeckeParams):
    """Sort key for basis order: (c_T(1), ..., c_T(k))."""
    return tuple(shifted_content(t, i, params) for i in range(1, t.k + 1))


def tableau_to_json(t: Tableau, params: HeckeParams):
    """Shapes as integer arrays plus the derived shifted-content list."""
    return {
        "shapes": [list(shape) for shape in t.shapes],
        "contents": [str(c) for c in shifted_content_list(t, params)],
    }


def apply_si(t: Tableau, i: int, params: HeckeParams):
    """Swap the order of the i-th and (i+1)-th added boxes; None if adjacent.

    Defined exactly when c_T(i) != c_T(i+1) +- 1, and an involution there.
    """
    if not 1 <= i <= t.k - 1:
        raise IndexOutOfRange(f"s_{i} needs 1 <= i <= k-1 = {t.k - 1}")
    ci = shifted_content(t, i, params)
    cj = shifted_content(t, i + 1, params)
    if cj - ci in (1, -1):
        return None
    r, c = t.box(i + 1)
    middle = add_box(t.shapes[i - 1], r)
    shapes = t.shapes[:i] + (middle,) + t.shapes[i + 1 :]
    return Tableau(shapes)


def apply_s0(t: Tableau, params: HeckeParams):
    """Replace T^(0) by the other parent of T^(1); None at critical contents."""
    if t.k < 1:
        raise IndexOutOfRange("s_0 needs k >= 1")
    cands = parents(t.shapes[1], params)
    if len(cands) == 1:
        return None
    other = [lam for lam in cands if lam != t.shapes[0]]
    if len(other) != 1:
        raise AssertionError(f"expected exactly one other parent, got {other}")
    return Tableau((other[0],) + t.shapes[1:])


def apply_move(t: Tableau, i: int, params: HeckeParams):
    """Dispatch s_0 or s_i."""
    return apply_s0(t, params) if i == 0 else apply_si(t, i, params)


def tableaux_to(lam: Partition, k: int, params: HeckeParams, max_height=None):
    """All tableaux from some member of P to lam in k steps, basis order."""
    lam = as_partition(lam)
    if sum(lam) != params.weight + k or (max_height is not None and len(lam) > max_height):
        raise NotInPk(f"{lam} not in P_{k} for {params}")

    chains = _chains_down(lam, k, params, max_height)
    if not chains:
        raise NotInPk(f"{lam} not in P_{k} for {params}")
    out = [Tableau(ch) for ch in chains]
    out.sort(key=lambda t: content_key(t, params))
    return out


def _chains_down(lam, steps, params, max_height):
    if max_height is not None and len(lam) > max_height:
        return []
    if steps == 0:
        return [(lam,)] if is_in_P(lam, params) else []
    out = []
    for r, _ in removable_corners(lam):
        prev = remove_box(lam, r)
        for ch in _chains_down(prev, steps - 1, params, max_height):
            out.append(ch + (lam,))
    return out


def from_content_list(clist, lam: Partition, params: HeckeParams) -> Tableau:
    """Rebuild the tableau with shifted contents c_T(1..k) ending at lam.

    Each c_T(i) names the diagonal of the i-th added box; a partition has at
    most one removable box per diagonal, so the chain is forced.
    """
    lam = as_partition(lam)
    shapes = [lam]
    cur = lam
    for c in reversed(list(clist)):
        plain = c + params.shift
        matches = [
            (r, col) for r, col in removable_corners(cur) if content(r, col) == plain
        ]
        if len(matches) != 1:
            raise ValueError(f"content {c} does not name a removable box of {cur}")
        cur = remove_box(cur, matches[0][0])
        shapes.append(cur)
    if not is_in_P(cur, params):
        raise NotInP(f"reconstruction bottomed out at {cur} not in P")
    return Tableau(tuple(reversed(shapes)))


def row_tableau(t: Tableau) -> Tableau:
    """The tableau filling end/start left to right, top to bottom."""
    return row_tableau_of(t.start, t.end)


def row_tableau_of(start: Partition, end: Partition) -> Tableau:
    skew = sorted(
        (box for box in boxes(end) if not _has_box(start, box)),
        key=lambda rc: (rc[0], rc[1]),
    )
    shapes = [start]
    cur = start
    for r, _ in skew:
        cur = add_box(cur, r)
        shapes.append(cur)
    return Tableau(tuple(shapes))


def _has_box(lam, box):
    r, c = box
    return r <= len(lam) and c <= lam[r - 1]


def lex_max_parent_in(lam: Partition, params: HeckeParams) -> Partition:
    """Lexicographically greatest member of P contained in lam."""
    cands = [mu for mu in enum_P(params) if _contains(lam, mu)]
    if not cands:
        raise NotInPk(f"no member of P inside {lam}")
    return max(cands)


def t_lambda(lam: Partition, params: HeckeParams, k: int) -> Tableau:
    """Distinguished tableau: lex-greatest starting shape, row filling."""
    lam = as_partition(lam)
    if sum(lam) != params.weight + k:
        raise NotInPk(f"{lam} does not have weight + {k} boxes")
    return row_tableau_of(lex_max_parent_in(lam, params), lam)


def moved_up_start(start: Partition, end: Partition, params: HeckeParams) -> Partition:
    """Move every below-row-p box of `start` whose mirror slot lies in `end`.

    The result is the starting shape of the distinguished tableau; it is
    independent of `start` (checked in tests via lex_max_parent_in).
    """
    movable = [
        (r, c)
        for r, c in boxes(start)
        if r > params.p and _has_box(end, complementary_position(r, c, params))
    ]
    parts = list(start) + [0] * (params.p + params.q - len(start))
    for r, _ in movable:
        parts[r - 1] -= 1
    for r, c in movable:
        rr, _ = complementary_position(r, c, params)
        parts[rr - 1] += 1
    return as_partition(parts)


def weyl_dim(lam: Partition, n: int) -> int:
    """Dimension of the irreducible gl_n module indexed by lam.

    Product over 1 <= i < j <= n of (lam_i - lam_j + j - i)/(j - i);
    zero when the partition is taller than n.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        return 0
    get = lambda i: lam[i - 1] if i <= len(lam) else 0
    num = 1
    den = 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num *= get(i) - get(j) + j - i
            den *= j - i
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def all_partitions_of(n: int, max_height=None):
    """Every partition of n, optionally height capped (brute-force oracle aid)."""
    out = []

    def rec(prefix, remaining, cap):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_height is not None and len(prefix) >= max_height:
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(prefix + [part], remaining - part, part)

    rec([], n, n)
    return tuple(out)

"""Explicit seminormal matrix modules on path bases.

For lambda in P_k the module H^lambda has basis indexed by the tableaux
T from some member of P up to lambda.  The commutative generators w_i act
diagonally by shifted contents; t_{s_i} is supported on {T, s_i T} and x_1
on {T, s_0 T}, with

    [t_i]_{T,T}   = 1 / (c_T(i+1) - c_T(i)),
    [x_1]_{T,T}   = ((a-p) c + c^2 + K) / (2c),   c = c_T(1),
    K = ((a+p+b+q)/2) ((a+p-b-q)/2),

and squared off-diagonal products

    [t_i]_{T,S}[t_i]_{S,T}   = 1 - [t_i]_{T,T}^2,
    [x_1]_{T,S}[x_1]_{S,T}   = -(1/(2c)^2) (c^2 - A^2)(c^2 - B^2),

where A = (a+p+b+q)/2 and B = (a+p-b-q)/2.  The built matrices use the
positive-root gauge: both off-diagonal entries are the same nonnegative
square root.  Everything rational is kept exact; only the square roots
are floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import algebra
from .errors import (
    ConnectivityFailure,
    CriterionFailure,
    DistinctnessFailure,
    NotInPk,
    RelationFailure,
)
from .matrices import Matrix, matrix_to_json
from .params import HeckeParams
from .partitions import (
    Tableau,
    apply_move,
    apply_s0,
    apply_si,
    as_partition,
    complementary_position,
    boxes as shape_boxes,
    row_tableau,
    shifted_content,
    t_lambda,
    tableaux_to,
)
from .scalars import sqrt_checked


def _constants(params):
    a, b, p, q = params.a, params.b, params.p, params.q
    A = Fraction(a + p + b + q, 2)
    B = Fraction(a + p - (b + q), 2)
    return A, B, A * B


def diag_t_entry(c_i: Fraction, c_next: Fraction) -> Fraction:
    gap = c_next - c_i
    if gap == 0:
        raise AssertionError("consecutive shifted contents can never coincide")
    return Fraction(1) / gap


def offdiag_t_sq(c_i: Fraction, c_next: Fraction) -> Fraction:
    return 1 - diag_t_entry(c_i, c_next) ** 2


def diag_x_entry(c: Fraction, params: HeckeParams) -> Fraction:
    a, p = params.a, params.p
    _, B, K = _constants(params)
    if c == 0:
        # Only reachable when B = 0, where the 1/(2c) pole cancels:
        # ((a-p)c + c^2)/(2c) = ((a-p) + c)/2.
        if B != 0:
            raise AssertionError("zero shifted content with nonzero B")
        return Fraction(a - p, 2)
    return ((a - p) * c + c * c + K) / (2 * c)


def offdiag_x_sq(c: Fraction, params: HeckeParams) -> Fraction:
    A, B, _ = _constants(params)
    if c == 0:
        if B != 0:
            raise AssertionError("zero shifted content with nonzero B")
        return A * A / 4
    return -(c * c - A * A) * (c * c - B * B) / (4 * c * c)


@dataclass(frozen=True)
class EntryTable:
    """Exact entry data per basis tableau.

    diag_t[(ti, i)] and offdiag_t_sq[(ti, i)] for i = 1..k-1, diag_x[ti]
    and offdiag_x_sq[ti]; squared off-diagonals are 0 exactly where the
    neighbor tableau does not exist.
    """

    lam: tuple
    k: int
    basis: tuple
    contents: tuple  # contents[ti] = (c_T(0), ..., c_T(k))
    neighbor_s: tuple  # neighbor_s[ti][i] = basis index of s_i T or None, i = 0..k-1
    diag_t: dict
    offdiag_t_sq: dict
    diag_x: dict
    offdiag_x_sq: dict


def entry_table(lam, params: HeckeParams, k: int) -> EntryTable:
    lam = as_partition(lam)
    basis = tableaux_to(lam, k, params)
    index = {t: i for i, t in enumerate(basis)}
    contents = tuple(
        tuple(shifted_content(t, i, params) for i in range(k + 1)) for t in basis
    )
    neighbor = []
    for t in basis:
        row = []
        for i in range(0, k):
            s = apply_move(t, i, params)
            row.append(None if s is None else index[s])
        neighbor.append(tuple(row))

    dt, ot, dx, ox = {}, {}, {}, {}
    for ti in range(len(basis)):
        c = contents[ti]
        for i in range(1, k):
            dt[(ti, i)] = diag_t_entry(c[i], c[i + 1])
            ot[(ti, i)] = (
                offdiag_t_sq(c[i], c[i + 1]) if neighbor[ti][i] is not None else Fraction(0)
            )
        if k >= 1:
            dx[ti] = diag_x_entry(c[1], params)
            ox[ti] = (
                offdiag_x_sq(c[1], params) if neighbor[ti][0] is not None else Fraction(0)
            )
    return EntryTable(lam, k, tuple(basis), contents, tuple(neighbor), dt, ot, dx, ox)


@dataclass(frozen=True)
class SeminormalModule:
    params: HeckeParams
    lam: tuple
    k: int
    table: EntryTable

    @property
    def basis(self):
        return self.table.basis

    @property
    def dim(self):
        return len(self.table.basis)

    def w_matrix(self, i: int) -> Matrix:
        return Matrix.diagonal(tuple(c[i] for c in self.table.contents))

    def t_matrix(self, i: int) -> Matrix:
        n = self.dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        mixed = False
        for ti in range(n):
            rows[ti][ti] = self.table.diag_t[(ti, i)]
            si = self.table.neighbor_s[ti][i]
            if si is not None:
                rows[ti][si] = sqrt_checked(self.table.offdiag_t_sq[(ti, i)]).value
                mixed = True
        return _homogeneous(rows, mixed)

    def x_matrix(self) -> Matrix:
        n = self.dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        mixed = False
        for ti in range(n):
            rows[ti][ti] = self.table.diag_x[ti]
            s0 = self.table.neighbor_s[ti][0]
            if s0 is not None:
                rows[ti][s0] = sqrt_checked(self.table.offdiag_x_sq[ti]).value
                mixed = True
        return _homogeneous(rows, mixed)

    def matrices(self):
        out = {(algebra.W, i): self.w_matrix(i) for i in range(self.k + 1)}
        if self.k >= 1:
            out[(algebra.X, 1)] = self.x_matrix()
        for i in range(1, self.k):
            out[(algebra.T, i)] = self.t_matrix(i)
        return out

    def y1_matrix(self) -> Matrix:
        """y_1 = z_1 - x_1 = w_1 - x_1 + shift."""
        shift = self.params.shift
        return self.w_matrix(1) - self.x_matrix() + Matrix.identity(self.dim) * shift


def _homogeneous(rows, has_roots):
    # Matrices carry one scalar kind: all floats once a square root enters.
    if has_roots:
        rows = [[float(x) for x in row] for row in rows]
    return Matrix(rows)


def build_module(lam, params: HeckeParams, k: int, backend: str = "approx_sqrt") -> SeminormalModule:
    if backend != "approx_sqrt":
        raise ValueError(f"unknown backend {backend!r}")
    lam = as_partition(lam)
    if sum(lam) != params.weight + k:
        raise NotInPk(f"{lam} has the wrong number of boxes for k={k}")
    return SeminormalModule(params, lam, k, entry_table(lam, params, k))


def module_to_json(module: SeminormalModule):
    """Matrices, basis paths, and content lists of a built module."""
    return {
        "lambda": list(module.lam),
        "k": module.k,
        "basis": [[list(shape) for shape in t.shapes] for t in module.basis],
        "contents": [
            [str(c) for c in row] for row in module.table.contents
        ],
        "matrices": {
            f"{kind}{idx}": matrix_to_json(mat)
            for (kind, idx), mat in sorted(module.matrices().items())
        },
    }


# ---------------------------------------------------------------------------
# criteria (1)-(6)


@dataclass(frozen=True)
class CriteriaReport:
    lam: tuple
    k: int
    items: dict  # item label -> number of instances checked

    def to_dict(self):
        return {"lambda": list(self.lam), "k": self.k, "checked": dict(self.items)}


def check_criteria(lam, params: HeckeParams, k: int) -> CriteriaReport:
    """Verify the six entry criteria over the whole basis.

    Items 1, 2, 4, 5 are rational identities checked exactly.  Items 3
    and 6 mix square roots, so they are checked exactly after squaring
    both sides (legitimate: in the positive-root gauge every off-diagonal
    factor is a nonnegative real, and squared equality of nonnegative
    reals is equality), and then numerically on float entries.
    """
    table = entry_table(lam, params, k)
    counts = {str(i): 0 for i in range(1, 7)}
    A, B, K = _constants(params)
    a, p = params.a, params.p

    def chain_sq(ti, moves):
        """Product of squared off-diagonal entries along a move sequence.

        ``moves`` lists move indices applied left to right (0 stands for
        the x_1 move).  Returns 0 as soon as a move is undefined, matching
        the vanishing of the corresponding matrix entry.
        """
        acc = Fraction(1)
        cur = ti
        for mv in moves:
            nxt = table.neighbor_s[cur][mv]
            if nxt is None:
                return Fraction(0)
            acc *= table.offdiag_x_sq[cur] if mv == 0 else table.offdiag_t_sq[(cur, mv)]
            cur = nxt
        return acc

    n = len(table.basis)
    for ti in range(n):
        c = table.contents[ti]
        # (1) diagonal t entries: value * gap = 1, and sign flip across the move.
        for i in range(1, k):
            if table.diag_t[(ti, i)] * (c[i + 1] - c[i]) != 1:
                raise CriterionFailure(1, f"diag t entry at {table.basis[ti]} i={i}")
            si = table.neighbor_s[ti][i]
            if si is not None and table.diag_t[(si, i)] != -table.diag_t[(ti, i)]:
                raise CriterionFailure(1, f"diag t sign across s_{i}")
            counts["1"] += 1
        # (2) diagonal x entry: 2c * value = (a-p)c + c^2 + K (pole-free form).
        if k >= 1:
            lhs = 2 * c[1] * table.diag_x[ti]
            rhs = (a - p) * c[1] + c[1] * c[1] + K
            if lhs != rhs:
                raise CriterionFailure(2, f"diag x entry at {table.basis[ti]}")
            counts["2"] += 1
        # (4) involutions: squared off-diagonal = 1 - diag^2, symmetric pair;
        # the zero pattern matches adjacency of consecutive contents.
        for i in range(1, k):
            si = table.neighbor_s[ti][i]
            want = 1 - table.diag_t[(ti, i)] ** 2
            if si is not None:
                if table.offdiag_t_sq[(ti, i)] != want:
                    raise CriterionFailure(4, f"involution radicand at i={i}")
                if table.offdiag_t_sq[(si, i)] != table.offdiag_t_sq[(ti, i)]:
                    raise CriterionFailure(4, f"involution symmetry at i={i}")
                if want <= 0:
                    raise CriterionFailure(4, f"radicand not positive at i={i}")
            else:
                if c[i + 1] - c[i] not in (1, -1) or want != 0:
                    raise CriterionFailure(4, f"zero pattern broken at i={i}")
            counts["4"] += 1
        # (5) quadratic: four-factor product formula, symmetric, positive;
        # zero exactly at the critical shifted contents.
        if k >= 1:
            s0 = table.neighbor_s[ti][0]
            cc = c[1]
            if cc != 0:
                want = -((cc + A) * (cc - B) * (cc - A) * (cc + B)) / (4 * cc * cc)
            else:
                want = A * A / 4
            if s0 is not None:
                if table.offdiag_x_sq[ti] != want:
                    raise CriterionFailure(5, f"x radicand at {table.basis[ti]}")
                if table.offdiag_x_sq[s0] != table.offdiag_x_sq[ti]:
                    raise CriterionFailure(5, "x radicand not symmetric")
                if want <= 0:
                    raise CriterionFailure(5, "x radicand not positive")
            else:
                if cc not in params.critical_shifted_contents() or want != 0:
                    raise CriterionFailure(5, "x zero pattern broken")
            counts["5"] += 1
        # (3) commutation, squared: distant t moves and t against s_0.
        for i in range(1, k):
            for j in range(1, k):
                if abs(i - j) <= 1:
                    continue
                if chain_sq(ti, (j, i)) != chain_sq(ti, (i, j)):
                    raise CriterionFailure(3, f"t{i}/t{j} commutation at {ti}")
                counts["3"] += 1
            if i > 1:
                if chain_sq(ti, (0, i)) != chain_sq(ti, (i, 0)):
                    raise CriterionFailure(3, f"t{i}/x1 commutation at {ti}")
                counts["3"] += 1
        # (6) braid relations, squared.
        for i in range(1, k - 1):
            if chain_sq(ti, (i, i + 1, i)) != chain_sq(ti, (i + 1, i, i + 1)):
                raise CriterionFailure(6, f"t braid at i={i}, basis {ti}")
            counts["6"] += 1
        if k >= 2:
            if chain_sq(ti, (1, 0, 1, 0)) != chain_sq(ti, (0, 1, 0, 1)):
                raise CriterionFailure(6, f"x braid at basis {ti}")
            counts["6"] += 1

    _check_criteria_numeric(table, params, k)
    return CriteriaReport(table.lam, k, counts)


def _check_criteria_numeric(table, params, k, tol=1e-9):
    """Float re-check of the mixed criteria (3) and (6) on actual entries."""

    def off_t(ti, i):
        si = table.neighbor_s[ti][i]
        return 0.0 if si is None else sqrt_checked(table.offdiag_t_sq[(ti, i)]).value

    def off_x(ti):
        s0 = table.neighbor_s[ti][0]
        return 0.0 if s0 is None else sqrt_checked(table.offdiag_x_sq[ti]).value

    def chain(ti, moves):
        acc = 1.0
        cur = ti
        for mv in moves:
            acc *= off_x(cur) if mv == 0 else off_t(cur, mv)
            nxt = table.neighbor_s[cur][mv]
            if nxt is None:
                return 0.0
            cur = nxt
        return acc

    for ti in range(len(table.basis)):
        for i in range(1, k - 1):
            if abs(chain(ti, (i, i + 1, i)) - chain(ti, (i + 1, i, i + 1))) > tol:
                raise CriterionFailure(6, f"numeric t braid at {ti}")
        if k >= 2:
            if abs(chain(ti, (1, 0, 1, 0)) - chain(ti, (0, 1, 0, 1))) > tol:
                raise CriterionFailure(6, f"numeric x braid at {ti}")
            for i in range(2, k):
                if abs(chain(ti, (0, i)) - chain(ti, (i, 0))) > tol:
                    raise CriterionFailure(3, f"numeric t/x commutation at {ti}")


# ---------------------------------------------------------------------------
# full relation suite on the built matrices


def check_full_relations(module: SeminormalModule, rel_tol=1e-9, catalog=None):
    """Every relation of the compact catalog on the built matrices."""
    params = module.params.with_k(module.k)
    if catalog is None:
        catalog = algebra.relations_short(params)
    assignment = module.matrices()
    results = algebra.check_relations(
        catalog, assignment, algebra.definitions(params), rel_tol, dim=module.dim
    )
    bad = [r for r in results if not r.passed]
    if bad:
        raise RelationFailure(bad[0].name, bad[0].max_deviation)
    return results


# ---------------------------------------------------------------------------
# simplicity certificate


@dataclass(frozen=True)
class SimplicityCertificate:
    lam: tuple
    k: int
    target: Tableau
    witnesses: dict  # basis index -> tuple of moves (applied left to right)
    projectors_checked: int

    def to_dict(self):
        return {
            "lambda": list(self.lam),
            "k": self.k,
            "witnesses": {str(i): list(w) for i, w in self.witnesses.items()},
            "projectors_checked": self.projectors_checked,
        }


def row_word(t: Tableau, params: HeckeParams):
    """Moves (applied left to right) taking t to its row filling."""
    target = row_tableau(t)
    moves = []
    cur = t
    guard = 0
    while cur != target:
        guard += 1
        if guard > 10000:
            raise ConnectivityFailure("row word did not terminate")
        want = target.fillings()
        have = cur.fillings()
        for box in sorted(want, key=lambda rc: (rc[0], rc[1])):
            if have[box] != want[box]:
                j = have[box]
                nxt = apply_si(cur, j - 1, params)
                if nxt is None:
                    raise ConnectivityFailure(f"s_{j-1} undefined during row walk")
                moves.append(j - 1)
                cur = nxt
                break
        else:
            raise AssertionError("fillings differ but no differing box found")
    return tuple(moves), cur


def connect_to_distinguished(t: Tableau, params: HeckeParams):
    """Moves (applied left to right) taking t to the distinguished tableau.

    Greedy walk: straighten to the row filling, then repeatedly pick the
    last low box whose mirror slot lies in the final shape, bubble the
    label 1 onto that mirror slot, fire s_0 (guaranteed two-parent there),
    and re-straighten.  The bubbling step is the one place the walk can
    stall (labels 1 and j can collide adjacently); a breadth-first search
    over the move graph covers that case.
    """
    lam = t.end
    target = t_lambda(lam, params, t.k)
    try:
        return _greedy_walk(t, target, params), target
    except ConnectivityFailure:
        return _bfs_walk(t, target, params), target


def _greedy_walk(t: Tableau, target: Tableau, params: HeckeParams):
    lam = t.end
    moves, cur = row_word(t, params)
    guard = 0
    while cur != target:
        guard += 1
        if guard > 1000:
            raise ConnectivityFailure("distinguished walk did not terminate")
        movable = [
            (r, c)
            for r, c in shape_boxes(cur.start)
            if r > params.p
            and _box_in(lam, complementary_position(r, c, params))
        ]
        if not movable:
            raise ConnectivityFailure(
                f"start shape {cur.start} has no movable box but is not distinguished"
            )
        last = max(movable, key=lambda rc: (rc[0], rc[1]))
        comp = complementary_position(*last, params)
        # Make the mirror slot carry label 1 so that s_0 trades exactly
        # the chosen low box; usually it already does after row filling.
        label = cur.fillings().get(comp)
        if label is None:
            raise ConnectivityFailure(f"mirror slot {comp} is not an added box")
        while label > 1:
            nxt = apply_si(cur, label - 1, params)
            if nxt is None:
                raise ConnectivityFailure(f"bubbling stalled at label {label}")
            moves = moves + (label - 1,)
            cur = nxt
            label -= 1
        nxt = apply_s0(cur, params)
        if nxt is None:
            raise ConnectivityFailure("s_0 undefined during distinguished walk")
        moves = moves + (0,)
        more, cur = row_word(nxt, params)
        moves = moves + more
    return tuple(moves)


def _bfs_walk(t: Tableau, target: Tableau, params: HeckeParams):
    from collections import deque

    seen = {t: ()}
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        if cur == target:
            return seen[cur]
        for mv in range(0, cur.k):
            nxt = apply_move(cur, mv, params)
            if nxt is not None and nxt not in seen:
                seen[nxt] = seen[cur] + (mv,)
                queue.append(nxt)
    raise ConnectivityFailure(f"no move path from {t.shapes} to {target.shapes}")


def _box_in(lam, box):
    r, c = box
    return r <= len(lam) and c <= lam[r - 1]


def check_simplicity(module: SeminormalModule) -> SimplicityCertificate:
    """Distinct content lists, exact seminormal projectors, connectivity.

    The projector for T is the product over S != T of
    W_S / sum_i (c_T(i) - c_S(i))^2 with W_S = sum_i (w_i - c_S(i))^2,
    i = 1..k; it must equal the elementary matrix E_TT.  All quantities
    are rational, so this is checked exactly.  Connectivity witnesses use
    only s_0..s_{k-1} moves with nonzero off-diagonal at every step.
    """
    table = module.table
    params = module.params
    k = module.k
    n = len(table.basis)
    keys = [c[1:] for c in table.contents]
    if len(set(keys)) != n:
        raise DistinctnessFailure(f"content lists collide on {table.lam}")

    diag = [list(c[1:]) for c in table.contents]  # per basis: (c_T(1..k))
    checked = 0
    for ti in range(n):
        proj = [Fraction(1) if r == ti else Fraction(0) for r in range(n)]
        ok = True
        for si in range(n):
            if si == ti:
                continue
            denom = sum((a - b) ** 2 for a, b in zip(diag[ti], diag[si]))
            if denom == 0:
                raise DistinctnessFailure("projector denominator vanished")
            values = [
                sum((a - b) ** 2 for a, b in zip(diag[r], diag[si])) / denom
                for r in range(n)
            ]
            proj = [proj[r] * values[r] for r in range(n)]
        # After all factors the diagonal must be the indicator of ti.
        for r in range(n):
            want = Fraction(1) if r == ti else Fraction(0)
            if proj[r] != want:
                ok = False
        if not ok:
            raise DistinctnessFailure(f"projector for basis {ti} not idempotent")
        checked += 1

    witnesses = {}
    target = t_lambda(table.lam, params, k)
    for ti, t in enumerate(table.basis):
        moves, reached = connect_to_distinguished(t, params)
        if reached != target:
            raise ConnectivityFailure(f"walk from basis {ti} missed the target")
        # Every traversed move must have a live off-diagonal entry.
        cur = ti
        for mv in moves:
            nxt = table.neighbor_s[cur][mv]
            if nxt is None:
                raise ConnectivityFailure(f"witness move s_{mv} lands nowhere")
            sq = table.offdiag_x_sq[cur] if mv == 0 else table.offdiag_t_sq[(cur, mv)]
            if sq == 0:
                raise ConnectivityFailure(f"witness move s_{mv} has zero entry")
            cur = nxt
        witnesses[ti] = moves
    return SimplicityCertificate(table.lam, k, target, witnesses, checked)


def quadratic_deviation(module: SeminormalModule):
    """Max deviations of (x1-a)(x1+p) and (y1-b)(y1+q) from zero."""
    a, b, p, q = module.params.a, module.params.b, module.params.p, module.params.q
    n = module.dim
    ident = Matrix.identity(n)
    zero = Matrix.zero(n)
    x1 = module.x_matrix()
    y1 = module.y1_matrix()
    dev_x = ((x1 - ident * a) * (x1 + ident * p)).max_deviation(zero)
    dev_y = ((y1 - ident * b) * (y1 + ident * q)).max_deviation(zero)
    return dev_x, dev_y

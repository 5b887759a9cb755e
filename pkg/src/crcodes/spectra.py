"""Distance partitions, outer distribution profiles, and the complete
regularity / uniform packing classification machinery.

Two independent verdicts back every CR decision:

* the outer-profile test counts distinct rows of the outer distribution
  matrix B and compares with the covering radius (b == rho), and
* the equitable-partition test counts, for every point of the ambient
  space, its neighbors in the previous/same/next cell of the distance
  partition and demands constancy per cell.

For linear codes both run in syndrome space.  Rows of B are constant on
cosets, and each coset's row is recovered exactly from integer character
sums over the dual code: the sums S_k(s) = sum over dual words of weight
k of chi(<lambda, s>) collapse to c_{k,0} - (A_k - c_{k,0})/(p-1) because
scaling by F_p* preserves dual weights, so no irrational arithmetic ever
appears.  A disagreement between the two verdicts raises
InternalConsistencyError; it is never silently resolved.

All counts are exact integers; packing parameters are exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import codecore as cc
from . import fieldkit as fk
from . import limits as limits_mod
from .errors import DomainError, InternalConsistencyError, ResourceError

_PROFILE_SYNDROME_CAP = 1 << 16
_BFS_CHUNK = 1 << 20


# ---------------------------------------------------------------------------
# intersection arrays
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionArray:
    """{b_0,...,b_{rho-1}; c_1,...,c_rho} with derived a_l = n(q-1)-b_l-c_l."""

    n: int
    q: int
    bs: tuple[int, ...]
    cs: tuple[int, ...]

    def __post_init__(self):
        if len(self.bs) != len(self.cs):
            raise DomainError("intersection array needs as many b's as c's")

    @property
    def rho(self) -> int:
        return len(self.bs)

    def b(self, l: int) -> int:
        return self.bs[l] if l < self.rho else 0

    def c(self, l: int) -> int:
        return self.cs[l - 1] if 1 <= l <= self.rho else 0

    def a(self, l: int) -> int:
        return self.n * (self.q - 1) - self.b(l) - self.c(l)

    def validate(self) -> None:
        if any(b <= 0 for b in self.bs) or any(c <= 0 for c in self.cs):
            raise DomainError("intersection numbers b_l (l<rho) and c_l (l>=1) must be positive")
        for l in range(self.rho + 1):
            if self.a(l) < 0:
                raise DomainError(f"a_{l} = {self.a(l)} < 0")

    def reversed(self) -> "IntersectionArray":
        return IntersectionArray(self.n, self.q, tuple(reversed(self.cs)), tuple(reversed(self.bs)))

    def __str__(self) -> str:
        return "{%s; %s}" % (",".join(map(str, self.bs)), ",".join(map(str, self.cs)))

    def as_lists(self) -> list[list[int]]:
        return [list(self.bs), list(self.cs)]


# ---------------------------------------------------------------------------
# ambient-space walking
# ---------------------------------------------------------------------------


class _Space:
    """F_q^m with vectors encoded as base-q integer indices.

    In characteristic 2 the positional encoding makes vector addition a
    plain XOR of indices; odd characteristic goes through digit tables.
    """

    def __init__(self, fld: fk.Field, m: int):
        self.field = fld
        self.m = m
        self.Q = fld.q**m
        self.char2 = fld.p == 2
        self._digits = None

    def encode(self, vec) -> int:
        idx = 0
        for j, v in enumerate(vec):
            idx += int(v) * self.field.q**j
        return idx

    def decode(self, idx: int) -> tuple[int, ...]:
        out = []
        q = self.field.q
        for _ in range(self.m):
            out.append(idx % q)
            idx //= q
        return tuple(out)

    def digits(self) -> np.ndarray:
        if self._digits is None:
            if self.Q * self.m > (1 << 27):
                raise ResourceError("space_digits", f"{self.Q} x {self.m} digit matrix")
            idx = np.arange(self.Q, dtype=np.int64)
            cols = []
            q = self.field.q
            for _ in range(self.m):
                cols.append((idx % q).astype(np.uint8))
                idx //= q
            self._digits = np.stack(cols, axis=1)
        return self._digits

    def neighbors(self, idxs: np.ndarray, move_vec) -> np.ndarray:
        if self.char2:
            return idxs ^ self.encode(move_vec)
        add = self.field.add_table
        q = self.field.q
        out = np.zeros_like(idxs)
        rem = idxs.copy()
        mult = 1
        for j in range(self.m):
            dig = rem % q
            rem //= q
            out += add[dig, int(move_vec[j])].astype(np.int64) * mult
            mult *= q
        return out

    def base_p_digits(self) -> np.ndarray:
        """(Q, m*r) base-p expansion of every index; the coefficient view
        used by the bilinear trace pairing."""
        p = self.field.p
        width = self.m * self.field.r
        if self.Q * width > (1 << 27):
            raise ResourceError("space_digits", f"{self.Q} x {width} base-p matrix")
        idx = np.arange(self.Q, dtype=np.int64)
        cols = []
        for _ in range(width):
            cols.append((idx % p).astype(np.uint8))
            idx //= p
        return np.stack(cols, axis=1)


def _bfs(space: _Space, sources, moves) -> np.ndarray:
    """Level array (int16) of distances from the source set under moves."""
    dist = np.full(space.Q, -1, dtype=np.int16)
    src = np.asarray(sorted(sources), dtype=np.int64)
    dist[src] = 0
    frontier = src
    level = 0
    while frontier.size:
        level += 1
        for mv in moves:
            for start in range(0, frontier.size, _BFS_CHUNK):
                nb = space.neighbors(frontier[start:start + _BFS_CHUNK], mv)
                fresh = nb[dist[nb] < 0]
                dist[fresh] = level
        frontier = np.nonzero(dist == level)[0].astype(np.int64)
    return dist


def _syndrome_moves(code: cc.Code) -> list[tuple[int, ...]]:
    f = code.field
    H = code.H
    m = len(H)
    cols = [tuple(H[row][i] for row in range(m)) for i in range(code.n)]
    return [tuple(f.mul(g, v) for v in col) for col in cols for g in range(1, f.q)]


def _vector_moves(code: cc.Code) -> list[tuple[int, ...]]:
    f = code.field
    out = []
    for i in range(code.n):
        for g in range(1, f.q):
            mv = [0] * code.n
            mv[i] = g
            out.append(tuple(mv))
    return out


# ---------------------------------------------------------------------------
# distance partitions
# ---------------------------------------------------------------------------


@dataclass
class DistancePartition:
    """Cells C(0)..C(rho): labels[i] = d(point_i, C) over the walked space."""

    mode: str  # "syndrome" | "vector"
    space: _Space
    labels: np.ndarray
    rho: int
    cell_counts: tuple[int, ...]  # walked points per cell
    sizes: tuple[int, ...]        # vectors of F_q^n per cell
    code_size: int

    def label_of_index(self, idx: int) -> int:
        return int(self.labels[idx])


def distance_partition(code: cc.Code, mode: str | None = None,
                       limits: limits_mod.Limits = limits_mod.DEFAULT) -> DistancePartition:
    """Distance partition of the ambient space.

    Linear codes default to syndrome space (coset-leader weights); explicit
    codes and the brute-force oracle walk the full vector space.
    """
    if mode is None:
        mode = "syndrome" if code.is_linear else "vector"
    f = code.field
    if mode == "syndrome":
        if not code.is_linear:
            raise DomainError("syndrome mode needs a linear code")
        m = code.n - code.k
        limits.check_syndromes(f.q**m)
        space = _Space(f, m)
        dist = _bfs(space, [0], _syndrome_moves(code))
        scale = code.size
    elif mode == "vector":
        limits.check_vectors(f.q**code.n)
        space = _Space(f, code.n)
        sources = [space.encode(w) for w in code.words(limits)]
        dist = _bfs(space, sources, _vector_moves(code))
        scale = 1
    else:
        raise DomainError(f"unknown partition mode {mode!r}")
    if int(dist.min()) < 0:
        raise InternalConsistencyError("distance BFS failed to reach the whole space")
    rho = int(dist.max())
    counts = np.bincount(dist, minlength=rho + 1)
    cell_counts = tuple(int(c) for c in counts)
    if any(c == 0 for c in cell_counts):
        raise InternalConsistencyError("empty cell below the covering radius")
    sizes = tuple(c * scale for c in cell_counts)
    return DistancePartition(mode=mode, space=space, labels=dist, rho=rho,
                             cell_counts=cell_counts, sizes=sizes, code_size=code.size)


@dataclass
class EquitableResult:
    equitable: bool
    ia: IntersectionArray | None
    counts: tuple[tuple[int, int, int], ...] | None  # (c_l, a_l, b_l) per level
    witness: tuple[int, int] | None  # (level, point index) on failure


def equitable_partition_counts(code: cc.Code, partition: DistancePartition | None = None,
                               limits: limits_mod.Limits = limits_mod.DEFAULT) -> EquitableResult:
    """Neighbor-count test of Neumaier's definition on the distance partition.

    Syndrome mode counts labeled transitions s -> s + gamma*h_i with
    multiplicity, which is exactly the vector-space neighbor count of any
    coset member.
    """
    if partition is None:
        partition = distance_partition(code, limits=limits)
    space = partition.space
    labels = partition.labels
    moves = _syndrome_moves(code) if partition.mode == "syndrome" else _vector_moves(code)
    idx = np.arange(space.Q, dtype=np.int64)
    down = np.zeros(space.Q, dtype=np.int32)
    up = np.zeros(space.Q, dtype=np.int32)
    for mv in moves:
        nb_labels = labels[space.neighbors(idx, mv)]
        down += nb_labels < labels
        up += nb_labels > labels
    deg = code.n * (code.field.q - 1)
    counts = []
    for level in range(partition.rho + 1):
        members = labels == level
        c_vals = np.unique(down[members])
        b_vals = np.unique(up[members])
        if len(c_vals) != 1 or len(b_vals) != 1:
            bad = int(np.nonzero(members)[0][0])
            return EquitableResult(False, None, None, (level, bad))
        c_l, b_l = int(c_vals[0]), int(b_vals[0])
        counts.append((c_l, deg - c_l - b_l, b_l))
    bs = tuple(counts[l][2] for l in range(partition.rho))
    csv = tuple(counts[l][0] for l in range(1, partition.rho + 1))
    ia = IntersectionArray(code.n, code.field.q, bs, csv)
    ia.validate()
    return EquitableResult(True, ia, tuple(counts), None)


# ---------------------------------------------------------------------------
# outer distribution profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProfileRow:
    distribution: tuple[int, ...]
    label: int
    multiplicity: int


@dataclass
class OuterProfile:
    """Distinct rows of the outer distribution matrix B with multiplicities."""

    n: int
    q: int
    code_size: int
    rows: tuple[ProfileRow, ...]

    @property
    def b(self) -> int:
        return len(self.rows) - 1

    def rows_with_label(self, label: int) -> list[ProfileRow]:
        return [r for r in self.rows if r.label == label]

    def distinct_row_matrix(self) -> list[list[int]]:
        return [list(r.distribution) for r in self.rows]


def outer_profile(code: cc.Code, method: str = "auto",
                  limits: limits_mod.Limits = limits_mod.DEFAULT,
                  partition: DistancePartition | None = None) -> OuterProfile:
    if method == "auto":
        method = "dual" if code.is_linear else "direct"
    if method == "dual":
        return _outer_profile_dual(code, limits, partition)
    if method == "direct":
        return _outer_profile_direct(code, limits)
    raise DomainError(f"unknown outer profile method {method!r}")


def _dual_word_weights(code: cc.Code) -> np.ndarray:
    """wt(lambda H) indexed by the base-q encoding of lambda."""
    f = code.field
    m = code.n - code.k
    words = np.zeros((1, code.n), dtype=np.int64)
    add, mul = f.add_table, f.mul_table
    for row in code.H:
        row_arr = np.array(row, dtype=np.int64)
        words = np.concatenate([add[words, mul[g][row_arr][None, :]] for g in range(f.q)], axis=0)
    wts = (words != 0).sum(axis=1).astype(np.int64)
    assert len(wts) == f.q**m
    return wts


def _outer_profile_dual(code: cc.Code, limits: limits_mod.Limits,
                        partition: DistancePartition | None) -> OuterProfile:
    if not code.is_linear:
        raise DomainError("dual-transform profile needs a linear code")
    f = code.field
    m = code.n - code.k
    Q = f.q**m
    limits.check_syndromes(Q)
    if Q > _PROFILE_SYNDROME_CAP:
        raise ResourceError("outer_profile_syndromes", f"{Q} > {_PROFILE_SYNDROME_CAP}")
    if m == 0:
        row = tuple(math.comb(code.n, i) * (f.q - 1) ** i for i in range(code.n + 1))
        return OuterProfile(code.n, f.q, code.size, (ProfileRow(row, 0, code.size),))

    space = _Space(f, m)
    wts = _dual_word_weights(code)
    dual_wd = np.bincount(wts, minlength=code.n + 1)

    p = f.p
    dig = space.base_p_digits().astype(np.float32)
    mbig = np.kron(np.eye(space.m, dtype=np.float32), f.trace_form.astype(np.float32))
    left = dig @ mbig  # (Q, m*r)
    weight_classes = [int(k) for k in np.unique(wts)]
    class_rows = {k: np.nonzero(wts == k)[0] for k in weight_classes}

    s_mat = np.zeros((Q, len(weight_classes)), dtype=np.int64)
    chunk = max(1, (1 << 22) // max(Q, 1))
    for start in range(0, Q, chunk):
        block = dig[start:start + chunk]
        pair = left @ block.T  # (Q, chunk)
        pair = np.mod(np.rint(pair).astype(np.int64), p)
        zero = pair == 0
        for ci, k in enumerate(weight_classes):
            c0 = zero[class_rows[k]].sum(axis=0).astype(np.int64)
            ak = int(dual_wd[k])
            if p == 2:
                s_mat[start:start + chunk, ci] = 2 * c0 - ak
            else:
                rem = ak - c0
                assert np.all(rem % (p - 1) == 0)
                s_mat[start:start + chunk, ci] = c0 - rem // (p - 1)

    distinct, inverse, counts = np.unique(s_mat, axis=0, return_inverse=True, return_counts=True)
    tab = fk.krawtchouk_table(code.n, f.q)
    if partition is None:
        partition = distance_partition(code, mode="syndrome", limits=limits)
    rows = []
    for ridx in range(len(distinct)):
        svec = [int(v) for v in distinct[ridx]]
        dist_row = []
        for i in range(code.n + 1):
            tot = sum(s * tab[i][k] for s, k in zip(svec, weight_classes))
            if tot % Q != 0:
                raise InternalConsistencyError("non-integral coset weight distribution")
            dist_row.append(tot // Q)
        dist_row = tuple(dist_row)
        if sum(dist_row) != code.size or any(v < 0 for v in dist_row):
            raise InternalConsistencyError("coset weight distribution fails sanity checks")
        label = next(i for i in range(code.n + 1) if dist_row[i] > 0)
        members = inverse == ridx
        bfs_labels = np.unique(partition.labels[members])
        if len(bfs_labels) != 1 or int(bfs_labels[0]) != label:
            raise InternalConsistencyError(
                "dual-transform row label disagrees with coset-leader BFS")
        rows.append(ProfileRow(dist_row, label, int(counts[ridx]) * code.size))
    rows.sort(key=lambda r: (r.label, r.distribution))
    prof = OuterProfile(code.n, f.q, code.size, tuple(rows))
    _check_profile(prof, code)
    return prof


def _outer_profile_direct(code: cc.Code, limits: limits_mod.Limits) -> OuterProfile:
    """Full-space brute force: count codeword distances from every vector."""
    f = code.field
    limits.check_vectors(f.q**code.n)
    space = _Space(f, code.n)
    cw = code.words_array(limits)
    limits.check_count_ops(space.Q * len(cw))
    acc: dict[bytes, list] = {}
    chunk = max(1, (1 << 24) // max(len(cw), 1))
    q = f.q
    for start in range(0, space.Q, chunk):
        stop = min(space.Q, start + chunk)
        idx = np.arange(start, stop, dtype=np.int64)
        digs = np.empty((stop - start, code.n), dtype=np.int64)
        rem = idx.copy()
        for j in range(code.n):
            digs[:, j] = rem % q
            rem //= q
        rows = np.zeros((stop - start, code.n + 1), dtype=np.int64)
        for c in cw:
            d = (digs != c[None, :]).sum(axis=1)
            rows[np.arange(stop - start), d] += 1
        uniq, counts = np.unique(rows, axis=0, return_counts=True)
        for u, cnt in zip(uniq, counts):
            key = u.tobytes()
            if key in acc:
                acc[key][1] += int(cnt)
            else:
                acc[key] = [tuple(int(v) for v in u), int(cnt)]
    rows = []
    for dist_row, cnt in acc.values():
        label = next(i for i in range(code.n + 1) if dist_row[i] > 0)
        rows.append(ProfileRow(dist_row, label, cnt))
    rows.sort(key=lambda r: (r.label, r.distribution))
    prof = OuterProfile(code.n, f.q, code.size, tuple(rows))
    _check_profile(prof, code)
    return prof


def _check_profile(prof: OuterProfile, code: cc.Code) -> None:
    total = sum(r.multiplicity for r in prof.rows)
    if total != code.field.q**code.n:
        raise InternalConsistencyError("profile multiplicities do not cover the space")
    labels = {r.label for r in prof.rows}
    if labels != set(range(max(labels) + 1)):
        raise InternalConsistencyError("profile labels are not contiguous")


# ---------------------------------------------------------------------------
# derived parameters
# ---------------------------------------------------------------------------


def external_distance(code: cc.Code, limits: limits_mod.Limits = limits_mod.DEFAULT) -> int:
    """s = number of nonzero indices >= 1 in the MacWilliams transform of
    the distance distribution."""
    transform = dual_distance_distribution(code, limits)
    s = sum(1 for k in range(1, code.n + 1) if transform[k] != 0)
    if code.is_linear:
        dual_wd = code.dual().weight_distribution(limits)
        s_dual = sum(1 for k in range(1, code.n + 1) if dual_wd[k] > 0)
        if s != s_dual:
            raise InternalConsistencyError("MacWilliams s disagrees with dual weight count")
    return s


def dual_distance_distribution(code: cc.Code,
                               limits: limits_mod.Limits = limits_mod.DEFAULT) -> tuple[Fraction, ...]:
    dd = code.distance_distribution(limits)
    tab = fk.krawtchouk_table(code.n, code.field.q)
    m = code.size
    out = []
    for k in range(code.n + 1):
        val = sum(dd[i] * tab[k][i] for i in range(code.n + 1)) / m
        if val < 0:
            raise InternalConsistencyError("negative dual distance distribution entry")
        out.append(val)
    return tuple(out)


def t_regularity_degree(code: cc.Code, profile: OuterProfile | None = None,
                        limits: limits_mod.Limits = limits_mod.DEFAULT) -> int:
    """Largest t <= rho with a single row per label up to t; -1 when even
    the codeword rows differ (not distance invariant)."""
    if profile is None:
        profile = outer_profile(code, limits=limits)
    rho = max(r.label for r in profile.rows)
    t = -1
    for level in range(rho + 1):
        if len(profile.rows_with_label(level)) != 1:
            break
        t = level
    return t


def is_completely_regular(code: cc.Code, limits: limits_mod.Limits = limits_mod.DEFAULT,
                          partition: DistancePartition | None = None,
                          profile: OuterProfile | None = None
                          ) -> tuple[bool, IntersectionArray | None]:
    """Run both CR tests and insist they agree.

    Returns (verdict, intersection array or None).
    """
    if partition is None:
        partition = distance_partition(code, limits=limits)
    if profile is None:
        kwargs = {"partition": partition} if partition.mode == "syndrome" else {}
        profile = outer_profile(code, limits=limits, **kwargs)
    test_a = profile.b == partition.rho
    eq = equitable_partition_counts(code, partition, limits)
    if test_a != eq.equitable:
        raise InternalConsistencyError(
            f"CR verdicts disagree: profile says {test_a}, equitable says {eq.equitable}")
    if not test_a:
        return False, None
    return True, eq.ia


# ---------------------------------------------------------------------------
# packing parameters (uniform packing in the wide sense)
# ---------------------------------------------------------------------------


@dataclass
class PackingParameters:
    betas: tuple[Fraction, ...]
    minimal_support: bool = False
    # K_i = beta_i (q-1)^i C(n,i) |C|: holds for e.g. perfect codes but not
    # universally (the BCH [31,21,5] parameters already violate it), so it
    # is recorded, not enforced.
    cell_size_identity: bool = True

    @property
    def rho(self) -> int:
        return len(self.betas) - 1

    def kappa(self, i: int, n: int, q: int) -> Fraction:
        return self.betas[i] * (q - 1) ** i * math.comb(n, i)

    def as_strings(self) -> list[str]:
        return [f"{b.numerator}/{b.denominator}" if b.denominator != 1 else str(b.numerator)
                for b in self.betas]


def packing_parameters(code: cc.Code, limits: limits_mod.Limits = limits_mod.DEFAULT,
                       partition: DistancePartition | None = None,
                       profile: OuterProfile | None = None) -> PackingParameters | None:
    """Rationals beta_0..beta_rho with sum_i beta_i B_{x,i} = 1 for all x,
    or None when no solution exists (the code is not UP in the wide sense).

    The cell-size candidate beta_i = K_i / ((q-1)^i C(n,i) |C|) is tried
    first; when it satisfies every row it is returned, which also certifies
    K_i = kappa_i |C| and the cardinality identity.  Otherwise the exact
    linear system over the distinct rows is solved, preferring a solution
    of minimal support when underdetermined.
    """
    if partition is None:
        partition = distance_partition(code, limits=limits)
    if profile is None:
        kwargs = {"partition": partition} if partition.mode == "syndrome" else {}
        profile = outer_profile(code, limits=limits, **kwargs)
    rho = partition.rho
    n, q = code.n, code.field.q
    rows = [list(r.distribution[: rho + 1]) for r in profile.rows]

    def satisfies(betas) -> bool:
        return all(sum(b * v for b, v in zip(betas, row)) == 1 for row in rows)

    candidate = tuple(
        Fraction(partition.sizes[i]) / (Fraction((q - 1) ** i) * math.comb(n, i) * code.size)
        for i in range(rho + 1))
    if satisfies(candidate):
        return PackingParameters(candidate)

    target = [Fraction(1)] * len(rows)
    sol, unique = fk.rat_solve(rows, target)
    if sol is None:
        return None
    if unique:
        betas = tuple(sol)
        result = PackingParameters(betas, cell_size_identity=_cell_sizes_match(
            betas, partition, n, q, code.size))
    else:
        result = _minimal_support_solution(rows, target, rho, satisfies)
        result.cell_size_identity = _cell_sizes_match(result.betas, partition, n, q, code.size)
    _assert_cardinality_identity(result.betas, n, q, code.size)
    return result


def _minimal_support_solution(rows, target, rho, satisfies) -> PackingParameters:
    import itertools
    for support_size in range(rho + 2):
        for support in itertools.combinations(range(rho + 1), support_size):
            sub = [[row[i] for i in support] for row in rows]
            subsol, _ = fk.rat_solve(sub, target)
            if subsol is None:
                continue
            betas = [Fraction(0)] * (rho + 1)
            for pos, i in enumerate(support):
                betas[i] = subsol[pos]
            betas = tuple(betas)
            if satisfies(betas):
                return PackingParameters(betas, minimal_support=True)
    raise InternalConsistencyError("solvable packing system without a reportable solution")


def _cell_sizes_match(betas, partition: DistancePartition, n: int, q: int, size: int) -> bool:
    return all(beta * (q - 1) ** i * math.comb(n, i) * size == partition.sizes[i]
               for i, beta in enumerate(betas))


def _assert_cardinality_identity(betas, n: int, q: int, size: int) -> None:
    # summing the defining equation over the space forces this; a failure
    # would mean the betas do not actually satisfy every row
    total = sum(betas[i] * (q - 1) ** i * math.comb(n, i) for i in range(len(betas)))
    if Fraction(q**n) / total != size:
        raise InternalConsistencyError("packing parameters violate the cardinality identity")


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass
class Classification:
    n: int
    q: int
    size: int
    d: int
    e: int
    rho: int
    s: int
    b: int
    distance_invariant: bool
    t_regular_degree: int
    perfect: bool
    quasi_perfect: bool
    up_narrow: bool
    up_gvt: bool
    up_wide: bool
    completely_regular: bool
    ia: IntersectionArray | None
    betas: PackingParameters | None

    def as_json_dict(self) -> dict:
        return {
            "n": self.n, "q": self.q, "size": self.size,
            "d": self.d, "e": self.e, "rho": self.rho, "s": self.s, "b": self.b,
            "distance_invariant": self.distance_invariant,
            "t_regular_degree": self.t_regular_degree,
            "flags": {
                "perfect": self.perfect,
                "quasi_perfect": self.quasi_perfect,
                "up_narrow": self.up_narrow,
                "up_gvt": self.up_gvt,
                "up_wide": self.up_wide,
                "completely_regular": self.completely_regular,
            },
            "ia": self.ia.as_lists() if self.ia else None,
            "beta": self.betas.as_strings() if self.betas else None,
        }


def classify(code: cc.Code, limits: limits_mod.Limits = limits_mod.DEFAULT) -> Classification:
    """Full flag set, with the parameter-chain theorems enforced as hard
    assertions (violations raise InternalConsistencyError)."""
    if code.size < 2:
        raise DomainError("classification needs at least two codewords")
    partition = distance_partition(code, limits=limits)
    kwargs = {"partition": partition} if partition.mode == "syndrome" else {}
    profile = outer_profile(code, limits=limits, **kwargs)
    d = code.minimum_distance(limits)
    e = (d - 1) // 2
    rho = partition.rho
    s = external_distance(code, limits)
    b = profile.b
    di = code.is_distance_invariant(limits)

    if not (e <= rho <= s <= b):
        raise InternalConsistencyError(f"parameter chain violated: e={e} rho={rho} s={s} b={b}")
    if fk.rat_rank(profile.distinct_row_matrix()) != s + 1:
        raise InternalConsistencyError("rank of the outer distribution is not s+1")

    cr, ia = is_completely_regular(code, limits, partition, profile)
    betas = packing_parameters(code, limits, partition, profile)
    up_wide = betas is not None

    perfect = rho == e
    quasi_perfect = rho == e + 1
    if perfect != (e == s):
        raise InternalConsistencyError("perfect <-> e=s equivalence violated")
    if cr and rho != s:
        raise InternalConsistencyError("CR code with rho != s")
    if up_wide != (rho == s):
        raise InternalConsistencyError("UP-wide <-> rho=s equivalence violated")

    up_narrow = False
    if code.field.q == 2 and quasi_perfect and d == 2 * e + 1:
        sums = {sum(r.distribution[e:e + 2]) for r in profile.rows if r.label in (e, e + 1)}
        up_narrow = len(sums) == 1

    up_gvt = False
    if quasi_perfect:
        lam_vals = {r.distribution[e + 1] for r in profile.rows if r.label == e}
        mu_vals = {r.distribution[e + 1] for r in profile.rows if r.label == e + 1}
        up_gvt = len(lam_vals) == 1 and len(mu_vals) == 1
    if up_gvt != (s == e + 1):
        raise InternalConsistencyError("UP (GvT) <-> s=e+1 equivalence violated")

    return Classification(
        n=code.n, q=code.field.q, size=code.size, d=d, e=e, rho=rho, s=s, b=b,
        distance_invariant=di,
        t_regular_degree=t_regularity_degree(code, profile),
        perfect=perfect, quasi_perfect=quasi_perfect,
        up_narrow=up_narrow, up_gvt=up_gvt, up_wide=up_wide,
        completely_regular=cr, ia=ia, betas=betas)


# ---------------------------------------------------------------------------
# extension criteria
# ---------------------------------------------------------------------------


def up_extension_criterion(betas: PackingParameters, n: int, q: int = 2
                           ) -> tuple[bool, PackingParameters | None]:
    """Does a binary UP-wide code stay UP under extension?

    Checks beta_{rho-2i} = beta_{rho-2i-1} for 0 <= i <= floor((rho-1)/2);
    when satisfied returns the extended code's parameters gamma_0..gamma_{rho+1}.
    """
    if q != 2:
        raise DomainError("the extension criterion is stated for binary codes")
    beta = list(betas.betas)
    rho = len(beta) - 1

    def bget(i: int) -> Fraction:
        return beta[i] if 0 <= i <= rho else Fraction(0)

    for i in range((rho - 1) // 2 + 1):
        if bget(rho - 2 * i) != bget(rho - 2 * i - 1):
            return False, None
    gam = [Fraction(0)] * (rho + 2)
    for i in range(rho // 2 + 1):
        gam[rho - 2 * i] = bget(rho - 2 * i)
    for i in range((rho + 1) // 2 + 1):
        target = rho - 2 * i + 1
        if 0 <= target <= rho + 1:
            gam[target] = Fraction(
                (rho + 1 - 2 * i) * bget(rho - 2 * i) + (n - rho + 2 * i) * bget(rho - 2 * i + 2),
                n + 1)
    return True, PackingParameters(tuple(gam))


def self_complementary_extension_block(code: cc.Code,
                                       limits: limits_mod.Limits = limits_mod.DEFAULT) -> bool:
    """True when the even-length self-complementary proposition already
    rules out a UP-wide extension, with no further computation."""
    if code.field.q != 2:
        raise DomainError("self-complementarity is a binary notion")
    return code.n % 2 == 0 and cc.is_self_complementary(code)

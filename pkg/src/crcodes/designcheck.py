"""t-design extraction from fixed-weight layers of codes, plus the
weight-distribution recursions satisfied by codes with CR extensions.

Binary layers are treated as set systems (supports of the weight-w
codewords); q-ary layers use the distance-counting definition: the
weight-t vectors y covered by a block x are those with d(y, x) = w - t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from . import codecore as cc
from . import limits as limits_mod
from .errors import DomainError


@dataclass(frozen=True)
class DesignWitness:
    v: int
    k: int
    t: int
    lam: int
    q: int
    b: int  # number of blocks
    r: int  # replication number (blocks through a point)

    def __post_init__(self):
        # lambda_i = lam (q-1)^(t-i) C(v-i, t-i) / C(k-i, t-i) must be
        # integral for all i <= t; the (q-1) factor is 1 in the binary case
        for i in range(self.t + 1):
            num = self.lam * (self.q - 1) ** (self.t - i) * math.comb(self.v - i, self.t - i)
            den = math.comb(self.k - i, self.t - i)
            if num % den != 0:
                raise DomainError(f"lambda_{i} = {num}/{den} is not integral; not a design")

    @property
    def qary(self) -> bool:
        return self.q > 2

    def lambda_i(self, i: int) -> int:
        num = self.lam * (self.q - 1) ** (self.t - i) * math.comb(self.v - i, self.t - i)
        return num // math.comb(self.k - i, self.t - i)

    def as_json_dict(self) -> dict:
        return {"v": self.v, "k": self.k, "t": self.t, "lambda": self.lam,
                "b": self.b, "r": self.r, "qary": self.qary}


def _normalized_words(code: cc.Code, limits: limits_mod.Limits):
    """Codewords translated so the zero word is in the code (design

    extraction is stated for codes containing 0)."""
    words = code.words(limits)
    zero = (0,) * code.n
    if zero in words:
        return words
    f = code.field
    base = min(words)
    return tuple(sorted(tuple(f.sub(a, b) for a, b in zip(w, base)) for w in words))


def verify_design(code: cc.Code, w: int, t: int,
                  limits: limits_mod.Limits = limits_mod.DEFAULT) -> DesignWitness | None:
    """Witness that the weight-w layer C_w forms a t-design, or None.

    Binary codes count t-subsets of block supports and demand a constant
    cover count lambda > 0 over all t-subsets of coordinates.  q-ary codes
    enumerate every weight-t vector y and count blocks at distance w - t.
    """
    if t > w:
        raise DomainError(f"design strength t={t} exceeds block weight w={w}")
    if t < 1:
        raise DomainError("design strength must be >= 1")
    words = _normalized_words(code, limits)
    layer = [x for x in words if sum(1 for v in x if v) == w]
    if not layer:
        return None
    n = code.n
    q = code.field.q

    if q == 2:
        limits.check_count_ops(len(layer) * math.comb(w, t))
        counts: dict[tuple, int] = {}
        for x in layer:
            support = tuple(i for i, v in enumerate(x) if v)
            for sub in combinations(support, t):
                counts[sub] = counts.get(sub, 0) + 1
        if len(counts) != math.comb(n, t):
            return None  # some t-set uncovered
        lams = set(counts.values())
        if len(lams) != 1:
            return None
        lam = lams.pop()
    else:
        total_y = math.comb(n, t) * (q - 1) ** t
        limits.check_count_ops(total_y * len(layer))
        lam = None
        for positions in combinations(range(n), t):
            for values in product(range(1, q), repeat=t):
                y = [0] * n
                for pos, val in zip(positions, values):
                    y[pos] = val
                cnt = sum(1 for x in layer if sum(a != b for a, b in zip(x, y)) == w - t)
                if lam is None:
                    lam = cnt
                elif cnt != lam:
                    return None
        if not lam:
            return None

    b = len(layer)
    try:
        witness = DesignWitness(v=n, k=w, t=t, lam=lam, q=q, b=b,
                                r=b * w // n if (b * w) % n == 0 else -1)
    except DomainError:
        return None
    # b = lambda_0, and the replication number is lambda_1 per nonzero value
    if witness.r < 0 or witness.b != witness.lambda_i(0) or witness.r != witness.lambda_i(1) * (q - 1):
        return None
    return witness


def max_design_strength(code: cc.Code, w: int,
                        limits: limits_mod.Limits = limits_mod.DEFAULT) -> tuple[int, int]:
    """Largest t for which the weight-w layer is a t-design, with its lambda.

    A t-design is an i-design for every i <= t, so the scan can stop at the
    first failure.
    """
    best = (0, 0)
    for t in range(1, w + 1):
        witness = verify_design(code, w, t, limits)
        if witness is None:
            break
        best = (t, witness.lam)
    return best


def weight_recursion_check(code: cc.Code,
                           limits: limits_mod.Limits = limits_mod.DEFAULT) -> bool:
    """(n - w) A_w = (w + 1) A_{w+1} for all odd w >= 2e+1 (binary)."""
    if code.field.q != 2:
        raise DomainError("the weight recursion is stated for binary codes")
    wd = code.weight_distribution(limits)
    e = code.packing_radius(limits)
    n = code.n
    for w in range(2 * e + 1, n):
        if w % 2 == 1:
            if (n - w) * wd[w] != (w + 1) * wd[w + 1]:
                return False
    return True


def perfect_weight_distribution(n: int) -> tuple[int, ...]:
    """Weight distribution of any binary 1-perfect code of length n = 2^m - 1
    containing zero, by the closed recursion; cross-checked against the
    three-term identity (n-i+1)A_{i-1} + A_i + (i+1)A_{i+1} = C(n,i)."""
    m = (n + 1).bit_length() - 1
    if n != 2**m - 1 or n < 3:
        raise DomainError(f"length {n} is not of the form 2^m - 1 >= 3")
    A = [0] * (n + 1)
    A[0] = 1
    for i in range(1, n + 1):
        if i % 2 == 1:
            num = math.comb(n, i)
            assert num % (n - i + 1) == 0
            A[i] = num // (n - i + 1) - A[i - 1]
        else:
            num = (n - i + 1) * A[i - 1]
            assert num % i == 0
            A[i] = num // i
    for i in range(n + 1):
        prev = A[i - 1] if i >= 1 else 0
        nxt = A[i + 1] if i < n else 0
        if (n - i + 1) * prev + A[i] + (i + 1) * nxt != math.comb(n, i):
            raise DomainError("perfect weight recursion failed its own identity")
    return tuple(A)

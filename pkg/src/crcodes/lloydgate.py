"""Necessary-condition battery for candidate CR/UP parameters.

Everything here is arithmetic on exact integers and rationals: the
tridiagonal intersection matrix and its characteristic polynomial, the
Lloyd-type root test for packing parameters, the cardinality identity,
and the rho=1 bounds.  Root hunting is exhaustive evaluation at integer
points, never numeric isolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import fieldkit as fk
from .errors import DomainError
from .spectra import IntersectionArray, PackingParameters


@dataclass(frozen=True)
class IntersectionMatrix:
    """The (rho+1)x(rho+1) tridiagonal matrix with rows (c_l, a_l, b_l)."""

    ia: IntersectionArray

    @property
    def size(self) -> int:
        return self.ia.rho + 1

    def entry(self, i: int, j: int) -> int:
        if j == i - 1:
            return self.ia.c(i)
        if j == i:
            return self.ia.a(i)
        if j == i + 1:
            return self.ia.b(i)
        return 0

    def rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]

    def validate_row_sums(self) -> None:
        expect = self.ia.n * (self.ia.q - 1)
        for i, row in enumerate(self.rows()):
            if sum(row) != expect:
                raise DomainError(f"intersection matrix row {i} sums to {sum(row)}, not n(q-1)={expect}")

    def charpoly(self) -> list[int]:
        """Coefficients of det(A - x I), ascending degree, exact ints.

        Tridiagonal continuant recurrence:
        D_k = (a_{k-1} - x) D_{k-1} - b_{k-2} c_{k-1} D_{k-2}.
        """
        minus_x = [0, -1]
        prev = [1]  # D_0
        cur = _poly_add([self.entry(0, 0)], minus_x)  # D_1
        for k in range(2, self.size + 1):
            diag = _poly_add([self.entry(k - 1, k - 1)], minus_x)
            off = self.entry(k - 2, k - 1) * self.entry(k - 1, k - 2)
            nxt = _poly_sub(_poly_mul(diag, cur), _poly_scale(prev, off))
            prev, cur = cur, nxt
        return cur


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_scale(a, s):
    return [c * s for c in a]


def _poly_eval(a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _deflate(a, root: int):
    """Synthetic division by (x - root); returns (quotient, remainder)."""
    out = [0] * (len(a) - 1)
    carry = a[-1]
    for i in range(len(a) - 2, -1, -1):
        out[i] = carry
        carry = a[i] + carry * root
    return out, carry


@dataclass
class EigenReport:
    passed: bool
    strict: bool
    eigenvalues: list[tuple[int, int, int]]  # (j, lambda_j, multiplicity)
    missing_degree: int


def eigenvalue_membership_test(ia: IntersectionArray, strict: bool = True) -> EigenReport:
    """Must every eigenvalue of the intersection matrix sit in the Hamming
    scheme spectrum {(q-1)n - q j}?

    Strict mode demands all rho+1 eigenvalues (the matrix always carries
    n(q-1) itself); lax mode accepts rho of rho+1 as the theorem literally
    states.  The characteristic polynomial is factored by exhaustive
    integer deflation at the candidate points only.
    """
    mat = IntersectionMatrix(ia)
    mat.validate_row_sums()
    poly = mat.charpoly()
    n, q = ia.n, ia.q
    found = []
    for j in range(n + 1):
        lam = (q - 1) * n - q * j
        mult = 0
        while len(poly) > 1 and _poly_eval(poly, lam) == 0:
            poly, rem = _deflate(poly, lam)
            assert rem == 0
            mult += 1
        if mult:
            found.append((j, lam, mult))
    remaining = len(poly) - 1
    total_found = sum(m for _, _, m in found)
    passed = remaining == 0 if strict else total_found >= ia.rho
    return EigenReport(passed=passed, strict=strict, eigenvalues=found, missing_degree=remaining)


@dataclass
class LloydReport:
    passed: bool
    roots: tuple[int, ...]
    rho: int


def lloyd_roots(n: int, q: int, betas: PackingParameters | tuple) -> LloydReport:
    """Evaluate L_rho(n, xi) = sum_r beta_r P_r(n, xi) at xi = 0..n and
    demand exactly rho distinct integer roots with 0 < xi <= n.

    xi = n is a genuine root for e.g. the even-weight codes, so only
    xi = 0 is excluded (L(0) = q^n/|C| can never vanish).
    """
    beta = betas.betas if isinstance(betas, PackingParameters) else tuple(Fraction(b) for b in betas)
    rho = len(beta) - 1
    roots = []
    for xi in range(0, n + 1):
        val = sum(beta[r] * fk.krawtchouk(r, n, q, xi) for r in range(rho + 1))
        if val == 0:
            roots.append(xi)
    passed = len(roots) == rho and all(0 < r <= n for r in roots)
    return LloydReport(passed=passed, roots=tuple(roots), rho=rho)


def cardinality_identity(size: int, n: int, q: int, betas: PackingParameters | tuple) -> bool:
    """|C| = q^n / sum_i beta_i (q-1)^i C(n,i), exact."""
    beta = betas.betas if isinstance(betas, PackingParameters) else tuple(Fraction(b) for b in betas)
    denom = sum(beta[i] * (q - 1) ** i * math.comb(n, i) for i in range(len(beta)))
    if denom == 0:
        return False
    return Fraction(q**n) / denom == size


# ---------------------------------------------------------------------------
# rho = 1 binary bounds
# ---------------------------------------------------------------------------


@dataclass
class BoundCheck:
    name: str
    applicable: bool
    passed: bool | None  # None = informational only
    detail: str


@dataclass
class Rho1Report:
    b: int
    c: int
    n: int
    a: int
    ok: bool
    checks: list[BoundCheck] = dc_field(default_factory=list)

    def as_json_dict(self) -> dict:
        return {
            "b": self.b, "c": self.c, "n": self.n, "a": self.a, "ok": self.ok,
            "checks": [
                {"name": ch.name, "applicable": ch.applicable,
                 "passed": ch.passed, "detail": ch.detail}
                for ch in self.checks
            ],
        }


def rho1_bounds(b: int, c: int, n: int) -> Rho1Report:
    """Necessary conditions for a binary CR code of length n with rho = 1
    and intersection array {b; c}; a = n - b throughout.

    Applies: b,c nonzero; (b+c)/gcd(b,c) a power of two; the correlation
    immunity bound c - a <= n/3 (when b != c); and the a*-lower bounds
    where their hypotheses hold.  The a*-recursion facts are reported as
    informational lines.
    """
    a = n - b
    checks = []
    ok = True

    nonzero = b != 0 and c != 0
    checks.append(BoundCheck("nonzero", True, nonzero, f"b = {b}, c = {c} (both must be nonzero)"))
    ok &= nonzero

    if nonzero:
        ratio = (b + c) // math.gcd(b, c)
        exact = (b + c) % math.gcd(b, c) == 0
        power = exact and ratio & (ratio - 1) == 0
        checks.append(BoundCheck("divisibility", True, power,
                                 f"(b+c)/gcd(b,c) = {ratio}, power of 2: {power}"))
        ok &= power

    if b != c:
        passed = 3 * (c - a) <= n
        checks.append(BoundCheck("correlation_immunity", True, passed,
                                 f"c - a = {c - a} <= n/3 = {Fraction(n, 3)}: {passed}"))
        ok &= passed
    else:
        checks.append(BoundCheck("correlation_immunity", False, None, "b = c: bound not applicable"))

    if c < b < 2 * c:
        # a >= 1/2 + sqrt(c(b-c) + 1/4) - (b-c), checked as an exact square comparison
        lhs = 2 * a + 2 * (b - c) - 1
        rhs = 4 * c * (b - c) + 1
        passed = lhs >= 0 and lhs * lhs >= rhs
        checks.append(BoundCheck("a_star_lower_i", True, passed,
                                 f"requires a >= 1/2 + sqrt({c}*{b - c} + 1/4) - {b - c}; a = {a}"))
        ok &= passed
    else:
        checks.append(BoundCheck("a_star_lower_i", False, None, "needs c < b < 2c"))

    if 2 * c < b and (b - 2 * c) ** 2 < 3 * c - 2:
        passed = a >= 1
        checks.append(BoundCheck("a_star_lower_ii", True, passed,
                                 f"2c < b < 2c + sqrt(3c-2) forces a >= 1; a = {a}"))
        ok &= passed
    else:
        checks.append(BoundCheck("a_star_lower_ii", False, None, "needs 2c < b < 2c + sqrt(3c-2)"))

    checks.append(BoundCheck("a_star_doubling", True, None,
                             f"a*({2 * b + c},{c}) <= max(0, a*({b},{c}) - 1)"))
    if nonzero:
        checks.append(BoundCheck("a_star_swap", True, None,
                                 f"a*({c},{b}) = a*({b},{c}) + {b - c}"))
    return Rho1Report(b=b, c=c, n=n, a=a, ok=ok, checks=checks)


def design_existence_guard(ia: IntersectionArray) -> bool:
    """Sanity filter on an arbitrary intersection array: positivity of the
    stated entries, a_l >= 0, entries within the valency n(q-1)."""
    deg = ia.n * (ia.q - 1)
    try:
        ia.validate()
    except DomainError:
        return False
    for l in range(ia.rho + 1):
        if not 0 <= ia.b(l) <= deg or not 0 <= ia.c(l) <= deg:
            return False
    return True


# ---------------------------------------------------------------------------
# battery runner (report plumbing for the CLI and the catalog regression)
# ---------------------------------------------------------------------------


@dataclass
class LloydBattery:
    eigen: EigenReport
    lloyd: LloydReport | None
    cardinality: bool | None

    @property
    def passed(self) -> bool:
        out = self.eigen.passed
        if self.lloyd is not None:
            out = out and self.lloyd.passed
        if self.cardinality is not None:
            out = out and self.cardinality
        return out

    def as_json_dict(self) -> dict:
        return {
            "eigenvalue_membership": {
                "passed": self.eigen.passed,
                "strict": self.eigen.strict,
                "eigenvalues": [list(t) for t in self.eigen.eigenvalues],
            },
            "lloyd_roots": None if self.lloyd is None else {
                "passed": self.lloyd.passed, "roots": list(self.lloyd.roots)},
            "cardinality_identity": self.cardinality,
            "passed": self.passed,
        }


def run_battery(ia: IntersectionArray, betas: PackingParameters | None,
                size: int | None, strict: bool = True) -> LloydBattery:
    eigen = eigenvalue_membership_test(ia, strict=strict)
    lloyd = None
    card = None
    if betas is not None:
        lloyd = lloyd_roots(ia.n, ia.q, betas)
        if size is not None:
            card = cardinality_identity(size, ia.n, ia.q, betas)
    return LloydBattery(eigen=eigen, lloyd=lloyd, cardinality=card)

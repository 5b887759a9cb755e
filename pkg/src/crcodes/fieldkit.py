"""Exact arithmetic layer: finite fields GF(p^r), univariate polynomials,
cyclotomic cosets and minimal polynomials, generalized binomials and
Krawtchouk polynomials, and small exact linear-algebra routines over a
field or over the rationals.

Field elements are plain ints in [0, q): the index is the value of the
residue polynomial's coefficient vector read in base p (so index 0 is the
additive identity, 1 the multiplicative identity, and p the class of x).
Rationals are ``fractions.Fraction`` throughout.

One canonical modulus is used per field order: the lexicographically
first monic *primitive* polynomial of the right degree (constant
coefficient compared first).  The choice is recorded on the FieldSpec so
any output that depends on the representation can cite it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError

MAX_FIELD_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, r) with q = p^r, or raise DomainError."""
    if q < 2:
        raise DomainError(f"field order must be >= 2, got {q}")
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise DomainError(f"{q} is not a prime power")
            return p, r
    raise DomainError(f"{q} is not a prime power")


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """Carrier description of GF(p^r): prime, degree, pinned modulus."""

    p: int
    r: int
    modulus: tuple[int, ...]  # monic, degree r, coefficients c0..cr over GF(p)
    q: int

    def as_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "q": self.q, "modulus": list(self.modulus)}


class Field:
    """GF(p^r) with dense add/mul/inv/trace tables (q <= 256).

    All methods take and return element indices.  The tables double as
    vectorization hooks for numpy code elsewhere in the package.
    """

    def __init__(self, q: int, modulus: tuple[int, ...] | None = None):
        if q > MAX_FIELD_ORDER:
            raise DomainError(f"fields with q > {MAX_FIELD_ORDER} are out of scope (q={q})")
        p, r = factor_prime_power(q)
        self.p = p
        self.r = r
        self.q = q
        if modulus is None:
            modulus = _canonical_modulus(p, r)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != r + 1 or modulus[-1] != 1:
                raise DomainError("modulus must be monic of degree r")
        self.modulus = modulus
        self.spec = FieldSpec(p=p, r=r, modulus=modulus, q=q)
        self._build_tables()

    # -- construction ---------------------------------------------------

    def _build_tables(self) -> None:
        p, r, q = self.p, self.r, self.q
        # index <-> coefficient vector (little-endian base p)
        coeffs = np.zeros((q, r), dtype=np.int64)
        for a in range(q):
            v = a
            for j in range(r):
                coeffs[a, j] = v % p
                v //= p
        self._coeffs = coeffs

        add = (coeffs[:, None, :] + coeffs[None, :, :]) % p
        powers = p ** np.arange(r, dtype=np.int64)
        self.add_table = (add @ powers).astype(np.int64)
        self.neg_table = np.array([self._idx((-coeffs[a]) % p) for a in range(q)], dtype=np.int64)

        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            pa = tuple(int(c) for c in coeffs[a])
            for b in range(a, q):
                pb = tuple(int(c) for c in coeffs[b])
                prod = _polymul_modp(pa, pb, p)
                prod = _polymod(prod, self.modulus, p)
                idx = self._idx(prod)
                mul[a, b] = idx
                mul[b, a] = idx
        self.mul_table = mul

        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            row = mul[a]
            inv[a] = int(np.nonzero(row == 1)[0][0])
        self.inv_table = inv

        # exp/log w.r.t. the class of x (index p), primitive by modulus choice
        g = p if r > 1 else _prime_primitive_root(p)
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = int(mul[acc, g])
        if acc != 1 or np.any(log[1:] < 0):
            raise DomainError("generator is not primitive; modulus table is broken")
        self.exp_table = exp
        self.log_table = log
        self.generator = g

        # absolute trace to GF(p): Tr(a) = a + a^p + ... + a^(p^(r-1))
        tr = np.zeros(q, dtype=np.int64)
        for a in range(q):
            acc_t = 0
            cur = a
            for _ in range(r):
                acc_t = int(self.add_table[acc_t, cur])
                cur = self.pow(cur, p)
            tr[a] = acc_t
        if np.any(tr >= p):
            raise DomainError("trace left the prime field; modulus table is broken")
        self.trace_table = tr

        # F_2-bilinear (resp. F_p-bilinear) form M[i][j] = Tr(x^i * x^j),
        # used to evaluate characters chi(<x,y>) by plain matrix products.
        basis = [self.pow(p, i) if r > 1 else 1 for i in range(r)]
        M = np.zeros((r, r), dtype=np.int64)
        for i in range(r):
            for j in range(r):
                M[i, j] = tr[mul[basis[i], basis[j]]]
        self.trace_form = M

    def _idx(self, coeff_vec) -> int:
        v = 0
        for j, c in enumerate(coeff_vec):
            v += int(c) * self.p**j
        return v

    # -- scalar ops ------------------------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise DomainError(f"{a} is not an element index of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("inversion of zero")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DomainError("inversion of zero")
            return 0
        e %= self.q - 1
        res = 1
        base = a
        while e:
            if e & 1:
                res = self.mul(res, base)
            base = self.mul(base, base)
            e >>= 1
        return res

    def trace(self, a: int) -> int:
        return int(self.trace_table[a])

    def element_coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self._coeffs[a])

    def dot(self, u, v) -> int:
        acc = 0
        for a, b in zip(u, v):
            acc = self.add(acc, self.mul(a, b))
        return acc

    # -- structure -------------------------------------------------------

    def subfield_embedding(self, other: "Field") -> np.ndarray:
        """Index map GF(self.q) -> GF(other.q) realizing the subfield inclusion.

        Requires same characteristic and self.r | other.r.  The image of x
        is the first root (by element index) of self's modulus in the big
        field, which pins one canonical embedding.
        """
        if other.p != self.p or other.r % self.r != 0:
            raise DomainError(f"GF({self.q}) does not embed in GF({other.q})")
        if other.q == self.q:
            return np.arange(self.q, dtype=np.int64)
        root = None
        for cand in range(other.q):
            acc = 0
            for c in reversed(self.modulus):
                acc = other.add(other.mul(acc, cand), c % other.p)
            if acc == 0:
                root = cand
                break
        if root is None:
            raise DomainError("modulus has no root in the extension (broken tables)")
        emb = np.zeros(self.q, dtype=np.int64)
        for a in range(self.q):
            acc = 0
            for j, c in enumerate(self._coeffs[a]):
                acc = other.add(acc, other.mul(int(c), other.pow(root, j)))
            emb[a] = acc
        # sanity: embedding must be a ring hom on a spot check
        for a in (1, min(2, self.q - 1)):
            for b in (1, min(3, self.q - 1)):
                assert emb[self.mul(a, b)] == other.mul(int(emb[a]), int(emb[b]))
                assert emb[self.add(a, b)] == other.add(int(emb[a]), int(emb[b]))
        return emb

    def __repr__(self) -> str:
        return f"GF({self.q})"


def _prime_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fac = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in fac):
            return g
    raise DomainError(f"no primitive root mod {p}")


def _polymul_modp(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return tuple(out)


def _polymod(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    out = a[:dm]
    while len(out) < dm:
        out.append(0)
    return tuple(out)


def _poly_is_primitive(mod: tuple[int, ...], p: int) -> bool:
    """Is x primitive modulo the (assumed irreducible) polynomial?"""
    r = len(mod) - 1
    q = p**r
    x = tuple([0, 1] + [0] * (r - 2)) if r >= 2 else (0,)

    def polypow(base, e):
        res = tuple([1] + [0] * (r - 1))
        while e:
            if e & 1:
                res = _polymod(_polymul_modp(res, base, p), mod, p)
            base = _polymod(_polymul_modp(base, base, p), mod, p)
            e >>= 1
        return res

    one = tuple([1] + [0] * (r - 1))
    if polypow(x, q - 1) != one:
        return False
    return all(polypow(x, (q - 1) // f) != one for f in prime_factors(q - 1))


def _poly_is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Rabin test: x^(p^r) == x (mod f) and gcd checks at maximal subfields."""
    r = len(mod) - 1

    def polypow_x(e):
        # x^(p^e) mod f by repeated p-th powering
        cur = tuple([0, 1] + [0] * (r - 2)) if r >= 2 else _polymod((0, 1), mod, p)
        for _ in range(e):
            out = tuple([1] + [0] * (r - 1))
            b = cur
            e2 = p
            while e2:
                if e2 & 1:
                    out = _polymod(_polymul_modp(out, b, p), mod, p)
                b = _polymod(_polymul_modp(b, b, p), mod, p)
                e2 >>= 1
            cur = out
        return cur

    xq = polypow_x(r)
    xlin = _polymod((0, 1), mod, p)
    if xq != xlin:
        return False
    for f in prime_factors(r):
        xe = polypow_x(r // f)
        diff = tuple((a - b) % p for a, b in zip(xe, xlin))
        if _poly_gcd_modp(diff, mod, p) != (1,):
            return False
    return True


def _poly_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


def _poly_gcd_modp(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    a, b = _poly_trim(a), _poly_trim(b)
    while b != (0,):
        _, rem = _poly_divmod_modp(a, b, p)
        a, b = b, _poly_trim(rem)
    if a == (0,):
        return (0,)
    lead_inv = pow(a[-1], p - 2, p) if p > 2 else 1
    return _poly_trim(tuple((c * lead_inv) % p for c in a))


def _poly_divmod_modp(a: tuple[int, ...], b: tuple[int, ...], p: int):
    a = list(_poly_trim(a))
    b = list(_poly_trim(b))
    if b == [0]:
        raise ZeroDivisionError
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p) if p > 2 else 1
    quo = [0] * max(len(a) - db, 1)
    rem = a
    for shift in range(len(a) - 1 - db, -1, -1):
        c = (rem[shift + db] * inv_lead) % p
        if c:
            quo[shift] = c
            for j in range(db + 1):
                rem[shift + j] = (rem[shift + j] - c * b[j]) % p
    return tuple(quo), _poly_trim(tuple(rem))


@lru_cache(maxsize=None)
def _canonical_modulus(p: int, r: int) -> tuple[int, ...]:
    if r == 1:
        return (0, 1)
    # lexicographically first (c0, c1, ..., c_{r-1}) giving a primitive polynomial
    total = p**r
    for low in range(total):
        coeffs = []
        v = low
        for _ in range(r):
            coeffs.append(v % p)
            v //= p
        mod = tuple(coeffs) + (1,)
        if mod[0] == 0:
            continue  # reducible: x divides
        if _poly_is_irreducible(mod, p) and _poly_is_primitive(mod, p):
            return mod
    raise DomainError(f"no primitive polynomial found for GF({p}^{r})")


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    """Shared Field instance for the canonical modulus of order q."""
    return Field(q)


# ---------------------------------------------------------------------------
# cyclotomic machinery
# ---------------------------------------------------------------------------


def cyclotomic_coset(ell: int, n: int, q: int) -> set[int]:
    """The q-cyclotomic coset of ell modulo n: {ell*q^j mod n}."""
    if math.gcd(n, q) != 1:
        raise DomainError(f"gcd(n, q) must be 1, got gcd({n},{q}) = {math.gcd(n, q)}")
    if not 0 <= ell < n:
        raise DomainError(f"coset representative {ell} out of range [0, {n})")
    out = set()
    cur = ell
    while cur not in out:
        out.add(cur)
        cur = (cur * q) % n
    return out


def minimal_polynomial(elem_exponent: int, n: int, fld: Field) -> tuple[int, ...]:
    """Minimal polynomial over GF(p) of alpha^elem_exponent, where alpha is
    the designated primitive n-th root of unity in fld = GF(p^m).

    Returned as a monic coefficient tuple c0..cd over GF(p); degree equals
    the size of the p-cyclotomic coset of the exponent mod n.
    """
    p = fld.p
    if (fld.q - 1) % n != 0:
        raise DomainError(f"GF({fld.q}) contains no primitive {n}-th root of unity")
    alpha = fld.pow(fld.generator, (fld.q - 1) // n)
    coset = sorted(cyclotomic_coset(elem_exponent % n, n, p))
    # product of (y - alpha^c) with coefficients in GF(p^m)
    poly = [1]
    for c in coset:
        root = fld.pow(alpha, c)
        nxt = [0] * (len(poly) + 1)
        for i, coeff in enumerate(poly):
            nxt[i + 1] = fld.add(nxt[i + 1], coeff)
            nxt[i] = fld.sub(nxt[i], fld.mul(coeff, root))
        poly = nxt
    if any(c >= p for c in poly):
        raise DomainError("minimal polynomial did not collapse to the prime field")
    return tuple(int(c) for c in poly)


# ---------------------------------------------------------------------------
# generalized binomials and Krawtchouk polynomials
# ---------------------------------------------------------------------------


def binomial(a, i: int) -> Fraction:
    """Generalized binomial: (1/i!) * a(a-1)...(a-i+1), any rational a."""
    if i < 0:
        raise DomainError("binomial lower index must be >= 0")
    a = Fraction(a)
    num = Fraction(1)
    for j in range(i):
        num *= a - j
    return num / math.factorial(i)


def krawtchouk(r: int, n: int, q: int, xi) -> Fraction:
    """P_r(n, xi) = sum_j (-1)^(r-j) (q-1)^j C(n-xi, j) C(xi, r-j), exact."""
    if r < 0:
        raise DomainError("Krawtchouk degree must be >= 0")
    xi = Fraction(xi)
    total = Fraction(0)
    for j in range(r + 1):
        term = (-1) ** (r - j) * (q - 1) ** j
        total += term * binomial(n - xi, j) * binomial(xi, r - j)
    return total


@lru_cache(maxsize=None)
def krawtchouk_table(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    """P_r(n, x) at integer points, table[r][x] for 0 <= r, x <= n.

    Built by the three-term recurrence in exact ints; spot-checked against
    the defining sum.
    """
    tab = [[0] * (n + 1) for _ in range(n + 1)]
    for x in range(n + 1):
        tab[0][x] = 1
        if n >= 1:
            tab[1][x] = (q - 1) * n - q * x
    for r in range(1, n):
        for x in range(n + 1):
            # (r+1) P_{r+1} = ((q-1)(n-r) + r - q*x) P_r - (q-1)(n-r+1) P_{r-1}
            num = ((q - 1) * (n - r) + r - q * x) * tab[r][x] - (q - 1) * (n - r + 1) * tab[r - 1][x]
            assert num % (r + 1) == 0
            tab[r + 1][x] = num // (r + 1)
    for r, x in ((min(2, n), min(1, n)), (min(3, n), min(2, n))):
        assert Fraction(tab[r][x]) == krawtchouk(r, n, q, x)
    return tuple(tuple(row) for row in tab)


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


def gf_rref(fld: Field, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over the field; returns (rref, pivot columns).

    Zero rows are dropped.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = fld.inv(mat[rank][col])
        mat[rank] = [fld.mul(inv, v) for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                c = mat[i][col]
                mat[i] = [fld.sub(a, fld.mul(c, b)) for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return [r for r in mat[:rank]], pivots


def gf_rank(fld: Field, rows) -> int:
    return len(gf_rref(fld, rows)[0])


def gf_nullspace(fld: Field, rows, ncols: int | None = None) -> list[list[int]]:
    """Basis of the right nullspace {x : rows . x = 0}, rref'd."""
    if not rows:
        if ncols is None:
            raise DomainError("ncols required for empty matrix")
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    rref, pivots = gf_rref(fld, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = fld.neg(rref[i][fc])
        basis.append(vec)
    out, _ = gf_rref(fld, basis) if basis else ([], [])
    return out


def gf_matmul(fld: Field, A, B) -> list[list[int]]:
    out = []
    for row in A:
        out.append([fld.dot(row, [B[k][j] for k in range(len(B))]) for j in range(len(B[0]))])
    return out


def gf_solve(fld: Field, A, b) -> list[int] | None:
    """One solution of A x = b, or None if inconsistent."""
    ncols = len(A[0]) if A else len(b)
    aug = [list(r) + [bb] for r, bb in zip(A, b)]
    rref, pivots = gf_rref(fld, aug)
    for row in rref:
        if all(v == 0 for v in row[:-1]) and row[-1] != 0:
            return None
    x = [0] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = rref[i][-1]
    return x


def rat_rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    mat = [[Fraction(v) for v in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        piv = mat[rank][col]
        mat[rank] = [v / piv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def rat_rank(rows) -> int:
    return len(rat_rref(rows)[0])


def rat_solve(A, b) -> tuple[list[Fraction] | None, bool]:
    """Solve A x = b exactly; returns (solution or None, is_unique)."""
    if not A:
        return [], True
    ncols = len(A[0])
    aug = [list(r) + [bb] for r, bb in zip(A, b)]
    rref, pivots = rat_rref(aug)
    for row in rref:
        if all(v == 0 for v in row[:-1]) and row[-1] != 0:
            return None, False
    if pivots and pivots[-1] == ncols:
        return None, False
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = rref[i][-1]
    return x, len(pivots) == ncols

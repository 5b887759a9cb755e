"""Block codes over GF(q) and the catalog's code transformations.

A Code is either linear (kept as a reduced generator matrix plus parity
matrix) or explicit (a sorted, deduplicated codeword list).  Codes are
immutable after construction; weight distribution, minimum distance,
covering radius and the dual are cached lazily.

Transformations implemented here: extend (zero-sum symbol), puncture,
shorten, pattern-shortening on a coordinate window, the parity-overwrite
map tau_i, direct sum, lifting a parity-check matrix to an extension
field, Kronecker products of parity-check matrices, and the union of a
code with its covering cell.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce

import numpy as np

from . import fieldkit as fk
from . import limits as limits_mod
from .errors import DomainError, EmptyCodeError, FormatError
from .fieldkit import Field, field


class Code:
    def __init__(self, fld: Field, n: int, generator=None, parity=None, words=None,
                 rank_deficient_input: bool = False, collapsed: bool = False):
        self.field = fld
        self.n = n
        self.G = None if generator is None else tuple(tuple(int(v) for v in row) for row in generator)
        self.H = None if parity is None else tuple(tuple(int(v) for v in row) for row in parity)
        self.words_tuple = None if words is None else tuple(tuple(int(v) for v in w) for w in words)
        self.rank_deficient_input = rank_deficient_input
        self.collapsed = collapsed
        self._wd = None
        self._d = None
        self._rho = None
        self._dual = None
        self._words_arr = None
        self._dist_distribution = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_parity_check(fld: Field, H) -> "Code":
        H = [list(r) for r in H]
        if not H:
            raise FormatError("empty parity-check matrix")
        n = len(H[0])
        if any(len(r) != n for r in H):
            raise FormatError("inconsistent row lengths in parity-check matrix")
        _validate_entries(fld, H)
        rref, _ = fk.gf_rref(fld, H)
        deficient = len(rref) < len(H)
        G = fk.gf_nullspace(fld, rref if rref else [[0] * n], n)
        if not rref:
            rref = []
        return Code(fld, n, generator=G, parity=rref, rank_deficient_input=deficient)

    @staticmethod
    def from_generator(fld: Field, G) -> "Code":
        G = [list(r) for r in G]
        if not G:
            raise FormatError("empty generator matrix")
        n = len(G[0])
        if any(len(r) != n for r in G):
            raise FormatError("inconsistent row lengths in generator matrix")
        _validate_entries(fld, G)
        rref, _ = fk.gf_rref(fld, G)
        deficient = len(rref) < len(G)
        H = fk.gf_nullspace(fld, rref if rref else [[0] * n], n)
        return Code(fld, n, generator=rref, parity=H, rank_deficient_input=deficient)

    @staticmethod
    def from_codewords(fld: Field, words) -> "Code":
        words = [tuple(int(v) for v in w) for w in words]
        if not words:
            raise EmptyCodeError("explicit code needs at least one codeword")
        n = len(words[0])
        if any(len(w) != n for w in words):
            raise FormatError("inconsistent codeword lengths")
        _validate_entries(fld, words)
        return Code(fld, n, words=sorted(set(words)))

    # -- basic structure ---------------------------------------------------

    @property
    def is_linear(self) -> bool:
        return self.G is not None

    @property
    def k(self) -> int:
        if not self.is_linear:
            raise DomainError("dimension is defined for linear codes only")
        return len(self.G)

    @property
    def size(self) -> int:
        if self.is_linear:
            return self.field.q ** len(self.G)
        return len(self.words_tuple)

    def words_array(self, limits: limits_mod.Limits = limits_mod.DEFAULT) -> np.ndarray:
        """All codewords as an (M, n) int64 array, lexicographically sorted."""
        if self._words_arr is None:
            if self.is_linear:
                limits.check_enum_dim(self.k)
                arr = np.zeros((1, self.n), dtype=np.int64)
                add = self.field.add_table
                mul = self.field.mul_table
                for row in self.G:
                    row_arr = np.array(row, dtype=np.int64)
                    blocks = [add[arr, mul[g][row_arr][None, :]] for g in range(self.field.q)]
                    arr = np.concatenate(blocks, axis=0)
                arr = np.unique(arr, axis=0)
            else:
                arr = np.array(self.words_tuple, dtype=np.int64)
            self._words_arr = arr
        return self._words_arr

    def words(self, limits: limits_mod.Limits = limits_mod.DEFAULT) -> tuple:
        if self.words_tuple is not None:
            return self.words_tuple
        return tuple(tuple(int(v) for v in row) for row in self.words_array(limits))

    def contains(self, word) -> bool:
        word = tuple(int(v) for v in word)
        if len(word) != self.n:
            return False
        if self.is_linear:
            if self.H == ():
                return True
            f = self.field
            return all(f.dot(row, word) == 0 for row in self.H)
        return word in set(self.words_tuple)

    def syndrome(self, word) -> tuple:
        if not self.is_linear:
            raise DomainError("syndromes are defined for linear codes only")
        f = self.field
        return tuple(f.dot(row, word) for row in self.H)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        if self.field.q != other.field.q or self.n != other.n:
            return False
        if self.is_linear and other.is_linear:
            return self.G == other.G  # both are rref'd bases
        return set(self.words()) == set(other.words())

    def __hash__(self):
        return hash((self.field.q, self.n, self.G if self.is_linear else self.words_tuple))

    def __repr__(self) -> str:
        kind = f"[{self.n},{self.k}]" if self.is_linear else f"({self.n},{self.size})"
        return f"Code({kind} over GF({self.field.q}))"

    # -- cached spectra -----------------------------------------------------

    def weight_distribution(self, limits: limits_mod.Limits = limits_mod.DEFAULT) -> tuple[int, ...]:
        """A_0..A_n.  Linear codes enumerate the smaller of code and dual,
        transforming with MacWilliams when the dual side is cheaper."""
        if self._wd is None:
            if self.is_linear and self.k > self.n - self.k:
                dual_wd = self.dual().weight_distribution(limits)
                self._wd = macwilliams_transform(dual_wd, self.n, self.field.q)
            else:
                arr = self.words_array(limits)
                w = (arr != 0).sum(axis=1)
                counts = np.bincount(w, minlength=self.n + 1)
                self._wd = tuple(int(c) for c in counts)
        return self._wd

    def minimum_distance(self, limits: limits_mod.Limits = limits_mod.DEFAULT) -> int:
        if self._d is None:
            if self.size == 1:
                raise DomainError("minimum distance needs at least two codewords")
            if self.is_linear:
                wd = self.weight_distribution(limits)
                self._d = next(i for i in range(1, self.n + 1) if wd[i] > 0)
            else:
                arr = self.words_array(limits)
                limits.check_count_ops(len(arr) ** 2 * self.n)
                best = self.n + 1
                for i in range(len(arr) - 1):
                    d = (arr[i + 1:] != arr[i]).sum(axis=1).min()
                    best = min(best, int(d))
                self._d = best
        return self._d

    def covering_radius(self, limits: limits_mod.Limits = limits_mod.DEFAULT) -> int:
        if self._rho is None:
            from . import spectra
            self._rho = spectra.distance_partition(self, limits=limits).rho
        return self._rho

    def packing_radius(self, limits: limits_mod.Limits = limits_mod.DEFAULT) -> int:
        return (self.minimum_distance(limits) - 1) // 2

    def distance_distribution(self, limits: limits_mod.Limits = limits_mod.DEFAULT) -> tuple[Fraction, ...]:
        """Average distance distribution B_i = #{(u,v): d(u,v)=i}/|C|.

        For linear codes this equals the weight distribution.
        """
        if self._dist_distribution is None:
            if self.is_linear:
                self._dist_distribution = tuple(Fraction(a) for a in self.weight_distribution(limits))
            else:
                arr = self.words_array(limits)
                m = len(arr)
                limits.check_count_ops(m * m * self.n)
                counts = np.zeros(self.n + 1, dtype=np.int64)
                for i in range(m):
                    d = (arr != arr[i]).sum(axis=1)
                    counts += np.bincount(d, minlength=self.n + 1)
                self._dist_distribution = tuple(Fraction(int(c), m) for c in counts)
        return self._dist_distribution

    def is_distance_invariant(self, limits: limits_mod.Limits = limits_mod.DEFAULT) -> bool:
        """All translate weight distributions about codewords agree."""
        if self.is_linear:
            return True
        arr = self.words_array(limits)
        m = len(arr)
        limits.check_count_ops(m * m * self.n)
        ref = None
        for i in range(m):
            d = (arr != arr[i]).sum(axis=1)
            row = np.bincount(d, minlength=self.n + 1)
            if ref is None:
                ref = row
            elif not np.array_equal(ref, row):
                return False
        return True

    def dual(self) -> "Code":
        if not self.is_linear:
            raise DomainError("dual of an explicit code: use the MacWilliams route in spectra")
        if self._dual is None:
            d = Code(self.field, self.n, generator=self.H, parity=self.G)
            d._dual = self
            self._dual = d
        return self._dual


def _validate_entries(fld: Field, rows) -> None:
    for row in rows:
        for v in row:
            if not 0 <= int(v) < fld.q:
                raise FormatError(f"entry {v} is not an element index of GF({fld.q})")


def macwilliams_transform(wd: tuple[int, ...], n: int, q: int) -> tuple[int, ...]:
    """Weight distribution of the dual from a linear code's distribution."""
    tab = fk.krawtchouk_table(n, q)
    m = sum(wd)
    out = []
    for i in range(n + 1):
        tot = sum(wd[k] * tab[i][k] for k in range(n + 1))
        if tot % m != 0:
            raise DomainError("MacWilliams transform is not integral; input is not a linear distribution")
        out.append(tot // m)
    return tuple(out)


# ---------------------------------------------------------------------------
# transformations
# ---------------------------------------------------------------------------


def extend(code: Code) -> Code:
    """Append the symbol making each codeword sum to zero (binary: parity bit)."""
    f = code.field
    if code.is_linear:
        G2 = [list(row) + [f.neg(reduce(f.add, row, 0))] for row in code.G]
        return Code.from_generator(f, G2)
    words = [w + (f.neg(reduce(f.add, w, 0)),) for w in code.words_tuple]
    return Code.from_codewords(f, words)


def puncture(code: Code, i: int) -> Code:
    """Delete coordinate i; duplicate codewords collapse (set semantics),
    reported through the result's ``collapsed`` flag."""
    _check_position(code, i)
    if code.is_linear:
        G2 = [row[:i] + row[i + 1:] for row in code.G]
        out = Code.from_generator(code.field, G2) if any(any(r) for r in G2) else \
            Code.from_codewords(code.field, [(0,) * (code.n - 1)])
        out.collapsed = out.size < code.size
        return out
    words = {w[:i] + w[i + 1:] for w in code.words_tuple}
    out = Code.from_codewords(code.field, sorted(words))
    out.collapsed = len(words) < code.size
    return out


def shorten(code: Code, i: int) -> Code:
    """Keep codewords with 0 at coordinate i, then delete the coordinate."""
    _check_position(code, i)
    if code.is_linear:
        col = [row[i] for row in code.G]
        lam_basis = fk.gf_nullspace(code.field, [col], len(code.G))
        rows = []
        for lam in lam_basis:
            word = [0] * code.n
            for c, g in zip(lam, code.G):
                if c:
                    word = [code.field.add(w, code.field.mul(c, gv)) for w, gv in zip(word, g)]
            rows.append(word[:i] + word[i + 1:])
        if not rows or not any(any(r) for r in rows):
            return Code.from_codewords(code.field, [(0,) * (code.n - 1)])
        return Code.from_generator(code.field, rows)
    kept = [w[:i] + w[i + 1:] for w in code.words_tuple if w[i] == 0]
    if not kept:
        raise EmptyCodeError("shortening removed every codeword")
    return Code.from_codewords(code.field, kept)


def s_shorten(code: Code, patterns, positions) -> Code:
    """Pattern-shortening: keep codewords whose restriction to the window
    equals one of the patterns, then delete the window coordinates.

    When the input is linear and the patterns form a linear subspace the
    result stays linear; otherwise codewords are enumerated.
    """
    positions = tuple(int(i) for i in positions)
    patterns = [tuple(int(v) for v in pat) for pat in patterns]
    j = len(positions)
    if j == 0 or not patterns:
        raise DomainError("pattern-shortening needs a nonempty window and pattern set")
    if any(len(p) != j for p in patterns):
        raise DomainError("all patterns must have the window length")
    for i in positions:
        _check_position(code, i)
    if len(set(positions)) != j:
        raise DomainError("window positions must be distinct")

    f = code.field
    pat_set = set(patterns)
    if code.is_linear and _is_subspace(f, pat_set, j):
        span_rows, _ = fk.gf_rref(f, [list(p) for p in pat_set if any(p)])
        constraints = fk.gf_nullspace(f, span_rows if span_rows else [[0] * j], j)
        extra = []
        for crow in constraints:
            full = [0] * code.n
            for pos, c in zip(positions, crow):
                full[pos] = c
            extra.append(full)
        H2 = [list(r) for r in code.H] + extra
        sub = Code.from_parity_check(f, H2) if H2 else code
        keep = [c for c in range(code.n) if c not in positions]
        G2 = [[row[c] for c in keep] for row in sub.G]
        if not G2 or not any(any(r) for r in G2):
            return Code.from_codewords(f, [(0,) * len(keep)])
        out = Code.from_generator(f, G2)
        out.collapsed = out.size < sub.size
        return out

    keep = [c for c in range(code.n) if c not in positions]
    kept_words = []
    for w in code.words():
        if tuple(w[pos] for pos in positions) in pat_set:
            kept_words.append(tuple(w[c] for c in keep))
    if not kept_words:
        raise EmptyCodeError("pattern-shortening removed every codeword")
    out = Code.from_codewords(f, kept_words)
    out.collapsed = out.size < len(kept_words)
    return out


def _is_subspace(f: Field, pats: set, j: int) -> bool:
    if (0,) * j not in pats:
        return False
    for u in pats:
        for g in range(1, f.q):
            if tuple(f.mul(g, v) for v in u) not in pats:
                return False
        for v in pats:
            if tuple(f.add(a, b) for a, b in zip(u, v)) not in pats:
                return False
    return True


def tau_transform(code: Code, i: int) -> Code:
    """Overwrite coordinate i with the word's parity (binary codes only)."""
    if code.field.q != 2:
        raise DomainError("the parity-overwrite transform is defined for binary codes")
    _check_position(code, i)

    def tau(w):
        p = sum(w) % 2
        return w[:i] + (p,) + w[i + 1:]

    if code.is_linear:
        return Code.from_generator(code.field, [tau(row) for row in code.G])
    return Code.from_codewords(code.field, [tau(w) for w in code.words_tuple])


def direct_sum(codes) -> Code:
    """Coordinate-block concatenation of independent codes."""
    codes = list(codes)
    if not codes:
        raise DomainError("direct sum of an empty family")
    f = codes[0].field
    if any(c.field.q != f.q for c in codes):
        raise DomainError("direct sum requires a common field")
    if len(codes) == 1:
        return codes[0]
    if all(c.is_linear for c in codes):
        n_total = sum(c.n for c in codes)
        rows = []
        offset = 0
        for c in codes:
            for g in c.G:
                rows.append((0,) * offset + g + (0,) * (n_total - offset - c.n))
            offset += c.n
        return Code.from_generator(f, rows)
    words = [()]
    for c in codes:
        words = [w + cw for w in words for cw in c.words()]
    return Code.from_codewords(f, words)


def lift(fld: Field, H, r: int) -> Code:
    """Same parity-check matrix read over GF(q^r)."""
    if r < 1:
        raise DomainError("lift degree must be >= 1")
    big = field(fld.q ** r)
    emb = fld.subfield_embedding(big)
    H2 = [[int(emb[v]) for v in row] for row in H]
    return Code.from_parity_check(big, H2)


def kronecker_parity(fld_a: Field, H_a, fld_b: Field, H_b) -> tuple[Field, list[list[int]]]:
    """Kronecker product of two parity-check matrices over the larger field.

    One alphabet must be a subfield of the other; incomparable fields are
    rejected, mirroring the known failure of the mixed-alphabet product.
    """
    if fld_a.p != fld_b.p or (fld_a.r % fld_b.r != 0 and fld_b.r % fld_a.r != 0):
        raise DomainError(
            f"neither GF({fld_a.q}) nor GF({fld_b.q}) is a subfield of the other")
    big = fld_a if fld_a.q >= fld_b.q else fld_b
    ea = fld_a.subfield_embedding(big)
    eb = fld_b.subfield_embedding(big)
    A = [[int(ea[v]) for v in row] for row in H_a]
    B = [[int(eb[v]) for v in row] for row in H_b]
    out = []
    for ra in A:
        for rb in B:
            out.append([big.mul(a, b) for a in ra for b in rb])
    return big, out


def is_self_complementary(code: Code) -> bool:
    """True iff C + (1,...,1) = C (binary)."""
    if code.field.q != 2:
        raise DomainError("self-complementarity is a binary notion")
    all_one = (1,) * code.n
    if code.is_linear:
        return code.contains(all_one)
    wset = set(code.words_tuple)
    return all(tuple(1 - v for v in w) in wset for w in wset)


def union_with_cover(code: Code, limits: limits_mod.Limits = limits_mod.DEFAULT) -> Code:
    """C united with its covering cell C(rho).

    Requires a binary, completely regular, non-self-complementary code;
    then C(rho) is the all-one translate of C and the union is again a
    code (linear when C is).
    """
    if code.field.q != 2:
        raise DomainError("union with the covering cell is implemented for binary codes")
    if is_self_complementary(code):
        raise DomainError("self-complementary input: C(rho) is not a translate of C")
    from . import spectra
    cr, _ = spectra.is_completely_regular(code, limits=limits)
    if not cr:
        raise DomainError("input code is not completely regular")
    all_one = (1,) * code.n
    if code.is_linear:
        return Code.from_generator(code.field, [list(r) for r in code.G] + [list(all_one)])
    words = list(code.words_tuple) + [tuple(1 - v for v in w) for w in code.words_tuple]
    return Code.from_codewords(code.field, words)


def translate(code: Code, vector) -> Code:
    """The coset C + vector as an explicit code."""
    f = code.field
    vector = tuple(int(v) for v in vector)
    words = [tuple(f.add(a, b) for a, b in zip(w, vector)) for w in code.words()]
    return Code.from_codewords(f, words)


def _check_position(code: Code, i: int) -> None:
    if not 0 <= i < code.n:
        raise DomainError(f"coordinate {i} out of range for length {code.n}")


# ---------------------------------------------------------------------------
# code file format (JSON)
# ---------------------------------------------------------------------------


def to_json_dict(code: Code) -> dict:
    spec = code.field.spec
    d = {
        "q": spec.q,
        "p": spec.p,
        "r": spec.r,
        "modulus": list(spec.modulus),
        "n": code.n,
        "kind": "linear" if code.is_linear else "explicit",
    }
    if code.is_linear:
        d["generator"] = [list(r) for r in code.G]
        d["parity"] = [list(r) for r in code.H]
    else:
        d["codewords"] = [list(w) for w in code.words_tuple]
    return d


def from_json_dict(d: dict) -> Code:
    try:
        q = int(d["q"])
        n = int(d["n"])
        kind = d["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"code file is missing required key: {exc}") from exc
    fld = field(q)
    if "modulus" in d and tuple(d["modulus"]) != fld.modulus:
        fld = Field(q, modulus=tuple(d["modulus"]))
    if kind == "linear":
        if "parity" in d and d["parity"]:
            code = Code.from_parity_check(fld, d["parity"])
        elif "generator" in d and d["generator"]:
            code = Code.from_generator(fld, d["generator"])
        else:
            raise FormatError("linear code file needs a generator or parity matrix")
    elif kind == "explicit":
        if "codewords" not in d:
            raise FormatError("explicit code file needs a codeword list")
        code = Code.from_codewords(fld, d["codewords"])
    else:
        raise FormatError(f"unknown code kind {kind!r}")
    if code.n != n:
        raise FormatError(f"declared length {n} does not match matrix width {code.n}")
    return code


def save_code(code: Code, path) -> None:
    with open(path, "w") as fh:
        json.dump(to_json_dict(code), fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_code(path) -> Code:
    try:
        with open(path) as fh:
            d = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    return from_json_dict(d)


# ---------------------------------------------------------------------------
# pinned Golay generators (self-certifying)
# ---------------------------------------------------------------------------

_BINARY_GOLAY_GEN = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)  # x^11+x^10+x^6+x^5+x^4+x^2+1, low degree first
_TERNARY_GOLAY_GEN = (2, 0, 1, 2, 1, 1)  # x^5+x^4-x^3+x^2-1 over GF(3), low degree first

_golay_cache: dict = {}


def _cyclic_generator_matrix(gen: tuple[int, ...], n: int) -> list[list[int]]:
    deg = len(gen) - 1
    k = n - deg
    return [[0] * i + list(gen) + [0] * (n - deg - 1 - i) for i in range(k)]


def binary_golay() -> Code:
    """The [23,12,7] binary Golay code from its pinned cyclic generator.

    Validated on first use: minimum distance 7 and sphere-packing equality,
    so the constant certifies itself.
    """
    if "b" not in _golay_cache:
        code = Code.from_generator(field(2), _cyclic_generator_matrix(_BINARY_GOLAY_GEN, 23))
        assert code.k == 12 and code.minimum_distance() == 7
        import math
        assert code.size * sum(math.comb(23, i) for i in range(4)) == 2**23
        _golay_cache["b"] = code
    return _golay_cache["b"]


def ternary_golay() -> Code:
    """The [11,6,5] ternary Golay code from its pinned cyclic generator."""
    if "t" not in _golay_cache:
        code = Code.from_generator(field(3), _cyclic_generator_matrix(_TERNARY_GOLAY_GEN, 11))
        assert code.k == 6 and code.minimum_distance() == 5
        import math
        assert code.size * sum(math.comb(11, i) * 2**i for i in range(3)) == 3**11
        _golay_cache["t"] = code
    return _golay_cache["t"]


def even_half(code: Code) -> Code:
    """Even-weight subcode of a binary linear code."""
    if code.field.q != 2 or not code.is_linear:
        raise DomainError("even half is defined for binary linear codes")
    H2 = [list(r) for r in code.H] + [[1] * code.n]
    return Code.from_parity_check(code.field, H2)

"""Liftings of quantum linear spaces H(g, chi, lambda).

Generators are the group G and x_1..x_n, with relations

    g x_i     = chi_i(g) x_i g
    x_i x_j   = q_ij x_j x_i + lambda_ij (1 - g_i g_j)
    x_i^{m_i} = lambda_i (1 - g_i^{m_i})

where q_ij = chi_j(g_i) and m_i is the order of q_ii.  Elements are stored
in the PBW basis x_1^{r_1} ... x_n^{r_n} g (ascending x order, group part
on the right).  Indices in the Python API are 0-based; printed names
(``x1``, ``q_12``) are 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Union

from .abelian_group import Character, FiniteAbelianGroup, GroupElement, ParentMismatch
from .cyclotomic import CycScalar, detect_root_order, root_of_unity

Exps = tuple[int, ...]
Scalar = Union[CycScalar, int]


class Monomial(NamedTuple):
    """x_1^{r_1} ... x_n^{r_n} g."""

    r: tuple[int, ...]
    g: Exps

    @property
    def degree(self) -> int:
        return sum(self.r)

    def is_grouplike(self) -> bool:
        return not any(self.r)


# -- lifting data -----------------------------------------------------------


@dataclass
class LiftingDatum:
    group: FiniteAbelianGroup
    g: list[GroupElement]
    chi: list[Character]
    lambda_diag: list[CycScalar] = field(default_factory=list)
    lambda_off: dict[tuple[int, int], CycScalar] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def conductor(self) -> int:
        return self.group.exponent


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    indices: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return self.message


class InvalidDatum(ValueError):
    def __init__(self, issues: Sequence[ValidationIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


def validation_issues(datum: LiftingDatum) -> list[ValidationIssue]:
    """Every violated constraint of the datum (empty list when valid)."""
    G = datum.group
    N = G.exponent
    n = datum.n
    issues: list[ValidationIssue] = []

    def bad(code, idx, msg):
        issues.append(ValidationIssue(code, tuple(idx), msg))

    if len(datum.chi) != n:
        bad("shape", (), f"{n} group elements but {len(datum.chi)} characters")
        return issues
    lam_diag = datum.lambda_diag or [CycScalar.zero(N)] * n
    if len(lam_diag) != n:
        bad("shape", (), f"{n} generators but {len(lam_diag)} lambda_i values")
        return issues
    for i, (gi, ci) in enumerate(zip(datum.g, datum.chi)):
        if gi.group != G or ci.group != G:
            bad("parent", (i,), f"g_{i+1} or chi_{i+1} not over {G}")
    for i, lam in enumerate(lam_diag):
        if lam.N != N:
            bad("conductor", (i,), f"lambda_{i+1} has conductor {lam.N}, expected {N}")
    for key, lam in datum.lambda_off.items():
        i, j = key
        if not (0 <= i < j < n):
            bad("index", key, f"lambda_{i+1}{j+1}: need 1 <= i < j <= {n}")
        elif lam.N != N:
            bad("conductor", key, f"lambda_{i+1}{j+1} has conductor {lam.N}, expected {N}")
    if issues:
        return issues

    q = [[datum.chi[j](datum.g[i]) for j in range(n)] for i in range(n)]
    m: list[Optional[int]] = []
    for i in range(n):
        if q[i][i].is_one():
            bad("q_ii", (i,), f"q_{i+1}{i+1} = 1")
            m.append(None)
        else:
            m.append(detect_root_order(q[i][i]))
    for i in range(n):
        for j in range(i + 1, n):
            if not (q[i][j] * q[j][i]).is_one():
                bad("q_ij", (i, j), f"q_{i+1}{j+1} q_{j+1}{i+1} != 1")
    for i in range(n):
        if lam_diag[i] and m[i] is not None and not (datum.chi[i] ** m[i]).is_trivial():
            bad("lambda_i", (i,), f"lambda_{i+1} != 0 but chi_{i+1}^{m[i]} is not trivial")
    for (i, j), lam in datum.lambda_off.items():
        if lam and not (datum.chi[i] * datum.chi[j]).is_trivial():
            bad("lambda_ij", (i, j), f"lambda_{i+1}{j+1} != 0 but chi_{i+1} chi_{j+1} is not trivial")
    return issues


def validate(datum: LiftingDatum) -> HopfAlgebra:
    issues = validation_issues(datum)
    if issues:
        raise InvalidDatum(issues)
    return HopfAlgebra(datum)


# -- elements -----------------------------------------------------------------


class HopfElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HopfAlgebra, terms: Mapping[Monomial, CycScalar]):
        self.algebra = algebra
        self.terms = {k: v for k, v in terms.items() if v}

    def _same(self, other: HopfElement) -> None:
        if other.algebra is not self.algebra:
            raise ParentMismatch("elements of different algebras")

    def __add__(self, other: HopfElement) -> HopfElement:
        if isinstance(other, (int, CycScalar)):
            other = self.algebra.scalar(other)
        self._same(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t[k] + v if k in t else v
        return HopfElement(self.algebra, t)

    __radd__ = __add__

    def __neg__(self) -> HopfElement:
        return HopfElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> HopfElement:
        if isinstance(other, (int, CycScalar)):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> HopfElement:
        return (-self) + other

    def scale(self, c: Scalar) -> HopfElement:
        return HopfElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other) -> HopfElement:
        if isinstance(other, HopfElement):
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> HopfElement:
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> HopfElement:
        result = self.algebra.one()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, CycScalar)):
            other = self.algebra.scalar(other)
        if not isinstance(other, HopfElement):
            return NotImplemented
        return other.algebra is self.algebra and other.terms == self.terms

    __hash__ = None  # mutable-looking container semantics

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mon: Monomial) -> CycScalar:
        return self.terms.get(mon, self.algebra.zero_scalar)

    def items(self) -> list[tuple[Monomial, CycScalar]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mon, c in self.items():
            name = self.algebra.monomial_name(mon)
            if c.is_one():
                parts.append(name)
            elif (-c).is_one():
                parts.append("-" + name)
            else:
                parts.append(f"({c})*{name}" if name != "1" else f"({c})")
        return " + ".join(parts)

    __repr__ = __str__


class TensorElement:
    """Element of H (x) H, multiplied componentwise."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HopfAlgebra, terms: Mapping[tuple[Monomial, Monomial], CycScalar]):
        self.algebra = algebra
        self.terms = {k: v for k, v in terms.items() if v}

    def __add__(self, other: TensorElement) -> TensorElement:
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t[k] + v if k in t else v
        return TensorElement(self.algebra, t)

    def __neg__(self) -> TensorElement:
        return TensorElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def scale(self, c: Scalar) -> TensorElement:
        return TensorElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: TensorElement) -> TensorElement:
        H = self.algebra
        acc: dict[tuple[Monomial, Monomial], CycScalar] = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                left = H.mul_monomials(a, c)
                right = H.mul_monomials(b, d)
                coef = c1 * c2
                for m1, v1 in left.items():
                    cv = coef * v1
                    for m2, v2 in right.items():
                        key = (m1, m2)
                        val = cv * v2
                        acc[key] = acc[key] + val if key in acc else val
        return TensorElement(H, acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return other.algebra is self.algebra and other.terms == self.terms

    __hash__ = None

    def items(self):
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        H = self.algebra
        return " + ".join(
            f"({c})*{H.monomial_name(a)}(x){H.monomial_name(b)}" for (a, b), c in self.items()
        )

    __repr__ = __str__


# -- the algebra --------------------------------------------------------------


class WordTooLong(ValueError):
    pass


_Letter = tuple  # ("x", i) or ("g", exps)


class HopfAlgebra:
    """A validated H(g, chi, lambda) with its PBW arithmetic and Hopf maps."""

    oracle_word_bound = 12

    def __init__(self, datum: LiftingDatum):
        self.datum = datum
        G = self.group = datum.group
        self.n = n = datum.n
        self.N = N = G.exponent
        self.zero_scalar = CycScalar.zero(N)
        self.one_scalar = CycScalar.one(N)
        self.e = G.identity_exponents
        self.gs: list[Exps] = [gi.exponents for gi in datum.g]
        self.chis: list[Character] = list(datum.chi)
        # q_ij = zeta_N ** qexp[i][j]
        self.qexp = [[self.chis[j].exponent_at(self.gs[i]) for j in range(n)] for i in range(n)]
        self.q = [[root_of_unity(N, self.qexp[i][j]) for j in range(n)] for i in range(n)]
        self.m = [detect_root_order(self.q[i][i]) for i in range(n)]
        lam_diag = datum.lambda_diag or [self.zero_scalar] * n
        self.lambda_diag = list(lam_diag)
        lam = [[self.zero_scalar] * n for _ in range(n)]
        for (i, j), v in datum.lambda_off.items():
            lam[i][j] = v
            # lambda_ij + q_ij lambda_ji = 0
            lam[j][i] = -(self.q[i][j].inv() * v)
        self.lam = lam
        self.dim = G.order * math.prod(self.m)
        self._xtimes: dict = {}
        self._xprod: dict = {}
        self._mon_prod: dict = {}
        self._delta_x: dict = {}
        self._antipode: dict = {}
        self._basis: Optional[list[Monomial]] = None

    # -- basis and constructors ---------------------------------------------

    def basis(self) -> list[Monomial]:
        if self._basis is None:
            rs = _tuples_below(self.m)
            gs = list(self.group.exponent_tuples())
            self._basis = [Monomial(r, g) for r in rs for g in gs]
        return self._basis

    def scalar(self, c: Scalar) -> HopfElement:
        c = c if isinstance(c, CycScalar) else CycScalar.rational(self.N, c)
        return HopfElement(self, {Monomial((0,) * self.n, self.e): c})

    def one(self) -> HopfElement:
        return self.scalar(1)

    def zero(self) -> HopfElement:
        return HopfElement(self, {})

    def x(self, i: int) -> HopfElement:
        r = [0] * self.n
        r[i] = 1
        return self.monomial(tuple(r))

    def grp(self, g: GroupElement | Sequence[int]) -> HopfElement:
        return self.monomial((0,) * self.n, g)

    def monomial(self, r: Sequence[int], g: GroupElement | Sequence[int] | None = None) -> HopfElement:
        return HopfElement(self, {self.make_monomial(r, g): self.one_scalar})

    def make_monomial(self, r: Sequence[int], g=None) -> Monomial:
        if g is None:
            ge = self.e
        elif isinstance(g, GroupElement):
            if g.group != self.group:
                raise ParentMismatch("group element from another group")
            ge = g.exponents
        else:
            ge = self.group.normalize(g)
        r = tuple(int(v) for v in r)
        if len(r) != self.n or any(not 0 <= v < mi for v, mi in zip(r, self.m)):
            raise ValueError(f"exponents {r} outside the PBW range {self.m}")
        return Monomial(r, ge)

    def from_monomial(self, mon: Monomial) -> HopfElement:
        return HopfElement(self, {mon: self.one_scalar})

    def group_sum(self) -> HopfElement:
        z = (0,) * self.n
        return HopfElement(self, {Monomial(z, g): self.one_scalar for g in self.group.exponent_tuples()})

    def monomial_name(self, mon: Monomial) -> str:
        parts = []
        for i, ri in enumerate(mon.r):
            if ri == 1:
                parts.append(f"x{i+1}")
            elif ri > 1:
                parts.append(f"x{i+1}^{ri}")
        if any(mon.g):
            if self.group.rank == 1:
                k = mon.g[0]
                parts.append("g" if k == 1 else f"g^{k}")
            else:
                parts.append("g(" + ",".join(map(str, mon.g)) + ")")
        return "*".join(parts) if parts else "1"

    # -- multiplication --------------------------------------------------------

    def _x_times(self, r: tuple[int, ...], j: int) -> dict:
        """Normal form of x^r * x_j as {(r', c): coeff}, meaning coeff * x^{r'} c."""
        key = (r, j)
        cached = self._xtimes.get(key)
        if cached is not None:
            return cached
        n = self.n
        G = self.group
        k = max((idx for idx in range(j + 1, n) if r[idx]), default=None)
        out: dict = {}
        if k is None:
            if r[j] + 1 < self.m[j]:
                rr = r[:j] + (r[j] + 1,) + r[j + 1:]
                out[(rr, self.e)] = self.one_scalar
            else:
                # x_j^{m_j} = lambda_j (1 - g_j^{m_j}), central when lambda_j != 0
                lam = self.lambda_diag[j]
                if lam:
                    r0 = r[:j] + (0,) + r[j + 1:]
                    gm = G.power(self.gs[j], self.m[j])
                    _acc(out, (r0, self.e), lam)
                    _acc(out, (r0, gm), -lam)
        else:
            # x^{r'} x_k x_j = q_kj x^{r'} x_j x_k + lambda_kj x^{r'} (1 - g_k g_j)
            r1 = r[:k] + (r[k] - 1,) + r[k + 1:]
            qkj = self.q[k][j]
            for (s, c), v in self._x_times(r1, j).items():
                # c x_k = chi_k(c) x_k c; c need not be central
                tw = qkj * v * self._chi_root(k, c)
                for (s2, c2), v2 in self._x_times(s, k).items():
                    _acc(out, (s2, G.compose(c, c2)), tw * v2)
            lam = self.lam[k][j]
            if lam:
                _acc(out, (r1, self.e), lam)
                _acc(out, (r1, G.compose(self.gs[k], self.gs[j])), -lam)
        self._xtimes[key] = out
        return out

    def _chi_root(self, i: int, g: Exps) -> CycScalar:
        return root_of_unity(self.N, self.chis[i].exponent_at(g))

    def _x_product(self, r: tuple[int, ...], s: tuple[int, ...]) -> dict:
        key = (r, s)
        cached = self._xprod.get(key)
        if cached is not None:
            return cached
        G = self.group
        cur = {(r, self.e): self.one_scalar}
        for j, sj in enumerate(s):
            for _ in range(sj):
                nxt: dict = {}
                for (t, c), v in cur.items():
                    tw = v * self._chi_root(j, c)
                    for (t2, c2), v2 in self._x_times(t, j).items():
                        _acc(nxt, (t2, G.compose(c, c2)), tw * v2)
                cur = nxt
        self._xprod[key] = cur
        return cur

    def mul_monomials(self, a: Monomial, b: Monomial) -> dict[Monomial, CycScalar]:
        key = (a, b)
        cached = self._mon_prod.get(key)
        if cached is not None:
            return cached
        G = self.group
        # g x^s = chi^s(g) x^s g
        k = sum(si * self.chis[i].exponent_at(a.g) for i, si in enumerate(b.r) if si)
        twist = root_of_unity(self.N, k)
        gh = G.compose(a.g, b.g)
        out: dict[Monomial, CycScalar] = {}
        for (t, c), v in self._x_product(a.r, b.r).items():
            _acc(out, Monomial(t, G.compose(c, gh)), twist * v)
        self._mon_prod[key] = out
        return out

    def multiply(self, a: HopfElement, b: HopfElement) -> HopfElement:
        if a.algebra is not self or b.algebra is not self:
            raise ParentMismatch("multiply: elements of different algebras")
        acc: dict[Monomial, CycScalar] = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                c = ca * cb
                for mon, v in self.mul_monomials(ma, mb).items():
                    _acc(acc, mon, c * v)
        return HopfElement(self, acc)

    # -- rewriting oracle ------------------------------------------------------

    def _letter(self, sym) -> _Letter:
        if isinstance(sym, str):
            if not sym.startswith("x"):
                raise ValueError(f"unknown generator symbol {sym!r}")
            i = int(sym[1:]) - 1
            if not 0 <= i < self.n:
                raise ValueError(f"no generator {sym}")
            return ("x", i)
        if isinstance(sym, GroupElement):
            if sym.group != self.group:
                raise ParentMismatch("group element from another group")
            return ("g", sym.exponents)
        return ("g", self.group.normalize(sym))

    def _rewrite_once(self, word: tuple) -> Optional[list[tuple[tuple, CycScalar]]]:
        G = self.group
        L = len(word)
        for p in range(L):
            kind, val = word[p]
            if kind == "g" and not any(val):
                return [(word[:p] + word[p + 1:], self.one_scalar)]
            if p + 1 < L:
                kind2, val2 = word[p + 1]
                pre, post = word[:p], word[p + 2:]
                if kind == "g" and kind2 == "g":
                    return [(pre + (("g", G.compose(val, val2)),) + post, self.one_scalar)]
                if kind == "g" and kind2 == "x":
                    c = root_of_unity(self.N, self.chis[val2].exponent_at(val))
                    return [(pre + (word[p + 1], word[p]) + post, c)]
                if kind == "x" and kind2 == "x" and val > val2:
                    j, i = val, val2
                    out = [(pre + (word[p + 1], word[p]) + post, self.q[j][i])]
                    lam = self.lam[j][i]
                    if lam:
                        out.append((pre + post, lam))
                        out.append((pre + (("g", G.compose(self.gs[j], self.gs[i])),) + post, -lam))
                    return out
            if kind == "x":
                mi = self.m[val]
                if p + mi <= L and all(word[p + t] == ("x", val) for t in range(mi)):
                    pre, post = word[:p], word[p + mi:]
                    lam = self.lambda_diag[val]
                    if not lam:
                        return []
                    gm = G.power(self.gs[val], mi)
                    return [(pre + post, lam), (pre + (("g", gm),) + post, -lam)]
        return None

    def free_multiply_oracle(self, word: Sequence, max_length: Optional[int] = None) -> HopfElement:
        """Reduce a word in the generators by single-step rewriting on flat words.

        Symbols are ``"x1" .. "xn"`` or group elements (``GroupElement`` or an
        exponent tuple).  Relations are applied in place, so no commutation of
        the correction terms is assumed.
        """
        bound = self.oracle_word_bound if max_length is None else max_length
        if len(word) > bound:
            raise WordTooLong(f"word of length {len(word)} exceeds bound {bound}")
        pending: dict[tuple, CycScalar] = {tuple(self._letter(s) for s in word): self.one_scalar}
        done: dict[Monomial, CycScalar] = {}
        while pending:
            w, c = pending.popitem()
            step = self._rewrite_once(w)
            if step is None:
                r = [0] * self.n
                g = self.e
                for kind, val in w:
                    if kind == "x":
                        r[val] += 1
                    else:
                        g = val
                _acc(done, Monomial(tuple(r), g), c)
                continue
            for w2, c2 in step:
                v = c * c2
                if w2 in pending:
                    nv = pending[w2] + v
                    if nv:
                        pending[w2] = nv
                    else:
                        del pending[w2]
                else:
                    pending[w2] = v
        return HopfElement(self, done)

    # -- coalgebra and antipode ----------------------------------------------------

    def counit(self, a: HopfElement) -> CycScalar:
        total = self.zero_scalar
        for mon, c in a.terms.items():
            if not any(mon.r):
                total = total + c
        return total

    def tensor(self, a: HopfElement, b: HopfElement) -> TensorElement:
        return TensorElement(
            self, {(ma, mb): ca * cb for ma, ca in a.terms.items() for mb, cb in b.terms.items()}
        )

    def delta_generator(self, i: int) -> TensorElement:
        z = (0,) * self.n
        xi = self.make_monomial(tuple(int(t == i) for t in range(self.n)))
        return TensorElement(self, {
            (Monomial(z, self.gs[i]), xi): self.one_scalar,
            (xi, Monomial(z, self.e)): self.one_scalar,
        })

    def _delta_x_part(self, r: tuple[int, ...]) -> TensorElement:
        cached = self._delta_x.get(r)
        if cached is not None:
            return cached
        if not any(r):
            z = Monomial(r, self.e)
            out = TensorElement(self, {(z, z): self.one_scalar})
        else:
            k = max(i for i, v in enumerate(r) if v)
            prev = r[:k] + (r[k] - 1,) + r[k + 1:]
            out = self._delta_x_part(prev) * self.delta_generator(k)
        self._delta_x[r] = out
        return out

    def comultiply_monomial(self, mon: Monomial) -> TensorElement:
        G = self.group
        base = self._delta_x_part(mon.r)
        return TensorElement(self, {
            (Monomial(a.r, G.compose(a.g, mon.g)), Monomial(b.r, G.compose(b.g, mon.g))): c
            for (a, b), c in base.terms.items()
        })

    def comultiply(self, a: HopfElement) -> TensorElement:
        acc: dict = {}
        for mon, c in a.terms.items():
            for key, v in self.comultiply_monomial(mon).terms.items():
                _acc(acc, key, c * v)
        return TensorElement(self, acc)

    def _antipode_monomial(self, mon: Monomial) -> HopfElement:
        cached = self._antipode.get(mon)
        if cached is not None:
            return cached
        G = self.group
        out = self.grp(G.inverse(mon.g))
        for i in range(self.n - 1, -1, -1):
            # S(x_i) = -g_i^{-1} x_i
            s_xi = -(self.grp(G.inverse(self.gs[i])) * self.x(i))
            for _ in range(mon.r[i]):
                out = out * s_xi
        self._antipode[mon] = out
        return out

    def antipode(self, a: HopfElement, power: int = 1) -> HopfElement:
        if power < 0:
            raise ValueError("antipode power must be >= 0")
        cur = a
        for _ in range(power):
            acc: dict = {}
            for mon, c in cur.terms.items():
                for m2, v in self._antipode_monomial(mon).terms.items():
                    _acc(acc, m2, c * v)
            cur = HopfElement(self, acc)
        return cur

    def s2_order(self) -> int:
        """Order of S^2, as the lcm of the orders of the q_ii."""
        return math.lcm(1, *self.m)

    def apply_tensor_map(self, t: TensorElement, left, right) -> TensorElement:
        """(left (x) right)(t) for linear maps given on HopfElements."""
        acc: dict = {}
        for (a, b), c in t.terms.items():
            la = left(self.from_monomial(a))
            rb = right(self.from_monomial(b))
            for ma, va in la.terms.items():
                for mb, vb in rb.terms.items():
                    _acc(acc, (ma, mb), c * va * vb)
        return TensorElement(self, acc)

    def mult_map(self, t: TensorElement) -> HopfElement:
        """m: H (x) H -> H."""
        acc: dict = {}
        for (a, b), c in t.terms.items():
            for mon, v in self.mul_monomials(a, b).items():
                _acc(acc, mon, c * v)
        return HopfElement(self, acc)

    def __repr__(self) -> str:
        return f"HopfAlgebra(G={self.group!r}, n={self.n}, m={self.m}, dim={self.dim})"


def _acc(d: dict, key, val: CycScalar) -> None:
    if key in d:
        nv = d[key] + val
        if nv:
            d[key] = nv
        else:
            del d[key]
    elif val:
        d[key] = val


def _tuples_below(bounds: Sequence[int]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for b in bounds:
        out = [t + (v,) for t in out for v in range(b)]
    return out


def counit(a: HopfElement) -> CycScalar:
    return a.algebra.counit(a)


def comultiply(a: HopfElement) -> TensorElement:
    return a.algebra.comultiply(a)


def antipode(a: HopfElement, power: int = 1) -> HopfElement:
    return a.algebra.antipode(a, power)


def multiply(a: HopfElement, b: HopfElement) -> HopfElement:
    return a.algebra.multiply(a, b)

"""The component-class algebra: exact-rational linear combinations of basis
classes indexed by (group element, component index) pairs, with a partial
convolution product.

The product of two basis classes is only defined in two cases:

* zero, whenever the component indices fail to chain (tau * sigma != tau');
* a single basis class, whenever the indices chain and at least one side
  has trivial factors.

Every other pair is *undefined*: transversality fails there, nothing is
known, and the result must not be fabricated.  Undefined products are
first-class values (`ProductResult`), never exceptions, so callers can
distinguish "provably zero" from "not computable".  `expect()` converts an
undefined result into a hard error for checks that are guaranteed to stay
inside the computable cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .combinatorics import Perm, all_perms, perm_compose
from .wreath import WreathElement, WreathGroup, wreath_downset


class BasisIndex(NamedTuple):
    w: WreathElement
    tau: Perm

    def key(self):
        return (self.w.key(), self.tau)


class UndefinedProductError(Exception):
    """An undefined convolution appeared where the computable cases were
    guaranteed; this indicates an implementation bug, not a math gap."""


class AlgebraVector:
    """Finitely supported map BasisIndex -> Fraction; no zero coefficients
    are stored.  Treat instances as immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[BasisIndex, Fraction] | None = None):
        clean = {}
        if terms:
            for idx, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[idx] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "AlgebraVector":
        return cls()

    @classmethod
    def basis(cls, idx: BasisIndex) -> "AlgebraVector":
        return cls({idx: Fraction(1)})

    @property
    def terms(self) -> dict[BasisIndex, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].key())

    def coeff(self, idx: BasisIndex) -> Fraction:
        return self._terms.get(idx, Fraction(0))

    def support(self) -> list[BasisIndex]:
        return sorted(self._terms, key=BasisIndex.key)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "AlgebraVector") -> "AlgebraVector":
        out = dict(self._terms)
        for idx, coeff in other._terms.items():
            out[idx] = out.get(idx, Fraction(0)) + coeff
        return AlgebraVector(out)

    def __sub__(self, other: "AlgebraVector") -> "AlgebraVector":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "AlgebraVector":
        scalar = Fraction(scalar)
        return AlgebraVector({idx: scalar * c for idx, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraVector) and self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return "AlgebraVector(0)"
        bits = [f"{c}*[{idx.w.factors},{idx.w.top};{idx.tau}]" for idx, c in self.items()]
        return "AlgebraVector(" + " + ".join(bits) + ")"


@dataclass(frozen=True)
class ProductResult:
    """Either a defined vector or the list of basis pairs that block it."""

    vector: AlgebraVector | None
    blockers: tuple[tuple[BasisIndex, BasisIndex], ...] = field(default=())

    def __post_init__(self):
        if self.vector is None and not self.blockers:
            raise ValueError("an undefined product must carry at least one blocking pair")

    @property
    def defined(self) -> bool:
        return self.vector is not None

    def expect(self) -> AlgebraVector:
        if self.vector is None:
            raise UndefinedProductError(
                f"product undefined on {len(self.blockers)} basis pair(s), "
                f"first: {self.blockers[0]}"
            )
        return self.vector


def convolve_basis(a: BasisIndex, b: BasisIndex) -> ProductResult:
    """The partial product of two basis classes; see the module docstring."""
    a.w._check_compatible(b.w)
    if perm_compose(a.tau, a.w.top) != b.tau:
        return ProductResult(AlgebraVector.zero())
    if a.w.has_trivial_factors() or b.w.has_trivial_factors():
        return ProductResult(AlgebraVector.basis(BasisIndex(a.w * b.w, a.tau)))
    return ProductResult(None, ((a, b),))


def convolve(a: AlgebraVector, b: AlgebraVector) -> ProductResult:
    """Bilinear extension of convolve_basis.  Undefined as soon as any
    needed basis product is undefined, reporting every blocking pair."""
    total = AlgebraVector.zero()
    blockers = []
    for ia, ca in a.items():
        for ib, cb in b.items():
            res = convolve_basis(ia, ib)
            if res.defined:
                total = total + (ca * cb) * res.vector
            else:
                blockers.extend(res.blockers)
    if blockers:
        return ProductResult(None, tuple(sorted(set(blockers), key=lambda p: (p[0].key(), p[1].key()))))
    return ProductResult(total)


def convolve_chain(*vectors: AlgebraVector) -> ProductResult:
    out: AlgebraVector = vectors[0]
    for v in vectors[1:]:
        res = convolve(out, v)
        if not res.defined:
            return res
        out = res.vector
    return ProductResult(out)


def y_bar(group: WreathGroup, w: WreathElement, tau: Perm) -> AlgebraVector:
    """Closure class: the sum of [Y_{w', tau}] over all w' <= w, coefficient 1."""
    return AlgebraVector(
        {BasisIndex(u, tau): Fraction(1) for u in wreath_downset(w)}
    )


def y_bar_sum(group: WreathGroup, w: WreathElement) -> AlgebraVector:
    """Sum of the closure classes of w over every component index."""
    out: dict[BasisIndex, Fraction] = {}
    for tau in all_perms(group.d):
        for u in wreath_downset(w):
            out[BasisIndex(u, tau)] = Fraction(1)
    return AlgebraVector(out)


def y_plain_sum(group: WreathGroup, w: WreathElement) -> AlgebraVector:
    """Sum of the plain classes [Y_{w, tau}] over every component index."""
    return AlgebraVector(
        {BasisIndex(w, tau): Fraction(1) for tau in all_perms(group.d)}
    )


def involution_T(a: AlgebraVector) -> AlgebraVector:
    """The factor-swap anti-involution: [Y_{w,tau}] -> [Y_{w^-1, tau*top(w)}]."""
    out: dict[BasisIndex, Fraction] = {}
    for idx, coeff in a.items():
        target = BasisIndex(idx.w.inverse(), perm_compose(idx.tau, idx.w.top))
        out[target] = out.get(target, Fraction(0)) + coeff
    return AlgebraVector(out)


def pi0_act(eta: Perm, a: AlgebraVector) -> AlgebraVector:
    """Component shuffle: [Y_{w,tau}] -> [Y_{w, eta*tau}], extended linearly."""
    out: dict[BasisIndex, Fraction] = {}
    for idx, coeff in a.items():
        target = BasisIndex(idx.w, perm_compose(eta, idx.tau))
        out[target] = out.get(target, Fraction(0)) + coeff
    return AlgebraVector(out)


def basis_indices(group: WreathGroup) -> list[BasisIndex]:
    return [
        BasisIndex(w, tau) for w in group.elements for tau in all_perms(group.d)
    ]


def class_span_rank(group: WreathGroup) -> int:
    """Rank over the rationals of the coefficient matrix of the vectors
    y_bar_sum(w), one row per group element."""
    from .matrices import mat_rank

    columns = {idx: k for k, idx in enumerate(basis_indices(group))}
    rows = []
    for w in group.elements:
        row = [0] * len(columns)
        for idx, coeff in y_bar_sum(group, w).items():
            row[columns[idx]] = coeff
        rows.append(row)
    return mat_rank(rows)


# ---------------------------------------------------------------------------
# relation verification

@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    instances: int
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "instances": self.instances}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class RelationReport:
    m: int
    d: int
    checks: tuple[Check, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "d": self.d,
            "checks": [c.to_dict() for c in self.checks],
            "status": "pass" if self.all_pass else "fail",
        }


PRODUCTS_CHECK_LIMIT = 2000  # max basis-index count for the quadratic-cost check


def verify_relations(group: WreathGroup, products_limit: int = PRODUCTS_CHECK_LIMIT) -> RelationReport:
    """Machine-check the defining relations of the group inside the class
    algebra, in the forms that stay within the computable products:

    * quadratic: each slot swap squares to the identity class sum;
    * wreath: slot swaps conjugate factor generators across slots, checked
      in the q-independent four-term form on plain class sums;
    * braid / commuting: the slot swaps satisfy the symmetric-group braid
      relations;
    * products: w -> y_bar_sum(w) respects multiplication by pure-top
      elements on either side (skipped above `products_limit` indices).

    Any undefined product raises UndefinedProductError: these checks are
    guaranteed computable, so an undefined result is an implementation bug.
    """
    group.check_bound()
    m, d = group.m, group.d
    checks = []

    def outcome(name: str, failures: list[str], instances: int) -> None:
        status = "fail" if failures else "pass"
        checks.append(Check(name, status, instances, "; ".join(failures[:3])))

    ybs_e = y_bar_sum(group, group.identity)

    failures = []
    quad_count = 0
    for k in range(1, d):
        t = y_bar_sum(group, group.gen_t(k))
        quad_count += 1
        if convolve(t, t).expect() != ybs_e:
            failures.append(f"t{k}^2")
    outcome("quadratic", failures, quad_count)

    failures = []
    wreath_count = 0
    for k in range(1, d):
        yt = y_plain_sum(group, group.gen_t(k))
        ye = y_plain_sum(group, group.identity)
        for i in range(1, m):
            wreath_count += 1
            ys_lo = y_plain_sum(group, group.gen_s(i, k))
            ys_hi = y_plain_sum(group, group.gen_s(i, k + 1))
            lhs = convolve(yt, ys_lo).expect() + convolve(yt, ye).expect()
            rhs = convolve(ys_hi, yt).expect() + convolve(ye, yt).expect()
            if lhs != rhs:
                failures.append(f"t{k} s{i}")
    outcome("wreath", failures, wreath_count)

    failures = []
    braid_count = 0
    for k in range(1, d - 1):
        braid_count += 1
        a = y_bar_sum(group, group.gen_t(k))
        b = y_bar_sum(group, group.gen_t(k + 1))
        if convolve_chain(a, b, a).expect() != convolve_chain(b, a, b).expect():
            failures.append(f"t{k} t{k + 1} t{k}")
    outcome("braid", failures, braid_count)

    failures = []
    comm_count = 0
    for k in range(1, d):
        for l in range(k + 2, d):
            comm_count += 1
            a = y_bar_sum(group, group.gen_t(k))
            b = y_bar_sum(group, group.gen_t(l))
            if convolve(a, b).expect() != convolve(b, a).expect():
                failures.append(f"t{k} t{l}")
    outcome("commuting", failures, comm_count)

    index_count = group.order * len(all_perms(d))
    if index_count > products_limit:
        checks.append(
            Check(
                "products",
                "skipped",
                0,
                f"{index_count} basis indices exceed the limit {products_limit}",
            )
        )
    else:
        failures = []
        prod_count = 0
        sums = {w: y_bar_sum(group, w) for w in group.elements}
        tops = [w for w in group.elements if w.has_trivial_factors()]
        for w in group.elements:
            for sigma in tops:
                prod_count += 2
                if convolve(sums[w], sums[sigma]).expect() != sums[w * sigma]:
                    failures.append(f"{group.word(w)} * {group.word(sigma)}")
                if convolve(sums[sigma], sums[w]).expect() != sums[sigma * w]:
                    failures.append(f"{group.word(sigma)} * {group.word(w)}")
        outcome("products", failures, prod_count)

    return RelationReport(m, d, tuple(checks))

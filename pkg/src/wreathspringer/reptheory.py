"""Exact representation theory of symmetric groups and their wreath
products.

Symmetric-group irreducibles are built in Young's seminormal form: the
basis is indexed by standard tableaux and the adjacent-transposition
matrices have entries 1/axial-distance, so everything stays in exact
rationals.  Wreath-product modules are built from these by the usual
extension / inflation / induction steps, and every constructed
representation is verified to satisfy its group's defining relations at
construction time.

Degenerate-but-legal cases (m = 1, single-slot groups, empty partitions)
are handled uniformly; matrices of dimension one are still matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import factorial, prod

from .combinatorics import (
    Partition,
    Perm,
    adjacent_transposition,
    all_perms,
    cycle_type,
    format_partition,
    hook_dim,
    identity_perm,
    partitions_of,
    perm_compose,
    perm_inverse,
    perm_to_word,
)
from .matrices import (
    Matrix,
    identity_matrix,
    kron,
    kron_all,
    mat_mul,
    trace,
)
from .orbits import Profile, gamma_of, orbit_label, validate_profile
from .wreath import WreathElement, WreathGroup

SPECHT_DEGREE_BOUND = 7


# ---------------------------------------------------------------------------
# group contexts

class SymmetricGroup:
    """Class data for a symmetric group: representatives by cycle type, so
    no element enumeration is needed for characters."""

    def __init__(self, n: int):
        self.n = n
        self.order = factorial(n)
        self.identity = identity_perm(n)

    def __repr__(self):
        return f"SymmetricGroup({self.n})"

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        return all_perms(self.n)

    @cached_property
    def generators(self) -> tuple[Perm, ...]:
        return tuple(adjacent_transposition(self.n, i) for i in range(self.n - 1))

    @cached_property
    def class_types(self) -> tuple[Partition, ...]:
        return partitions_of(self.n)

    @cached_property
    def class_reps(self) -> tuple[Perm, ...]:
        reps = []
        for mu in self.class_types:
            img = list(range(self.n))
            offset = 0
            for length in mu:
                for i in range(length - 1):
                    img[offset + i] = offset + i + 1
                img[offset + length - 1] = offset
                offset += length
            reps.append(tuple(img))
        return tuple(reps)

    @cached_property
    def class_sizes(self) -> tuple[int, ...]:
        sizes = []
        for mu in self.class_types:
            z = 1
            for part in set(mu):
                count = mu.count(part)
                z *= part**count * factorial(count)
            sizes.append(self.order // z)
        return tuple(sizes)

    @cached_property
    def _type_index(self) -> dict[Partition, int]:
        return {mu: k for k, mu in enumerate(self.class_types)}

    def class_index(self, p: Perm) -> int:
        return self._type_index[cycle_type(p)]

    def mul(self, a, b):
        return perm_compose(a, b)

    def inv(self, a):
        return perm_inverse(a)


class WreathSubgroup:
    """Subgroup of a wreath context with full factor part and tops ranging
    over a fixed subgroup of the slot permutations."""

    def __init__(
        self,
        group: WreathGroup,
        tops: tuple[Perm, ...],
        top_generators: tuple[Perm, ...] = (),
    ):
        self.group = group
        self.tops = tuple(sorted(set(tops)))
        self.top_generators = top_generators
        self.order = factorial(group.m) ** group.d * len(self.tops)
        self.identity = group.identity

    def __repr__(self):
        return f"WreathSubgroup(m={self.group.m}, d={self.group.d}, tops={len(self.tops)})"

    @cached_property
    def elements(self) -> tuple[WreathElement, ...]:
        m, d = self.group.m, self.group.d
        return tuple(
            WreathElement(fs, top)
            for top in self.tops
            for fs in product(all_perms(m), repeat=d)
        )

    @cached_property
    def generators(self) -> tuple[WreathElement, ...]:
        m, d = self.group.m, self.group.d
        gens = [
            self.group.gen_s(i, j)
            for j in range(1, d + 1)
            for i in range(1, m)
        ]
        ident = tuple(identity_perm(m) for _ in range(d))
        gens += [WreathElement(ident, t) for t in self.top_generators]
        return tuple(gens)

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()


def young_subgroup(group: WreathGroup, counts: tuple[int, ...]) -> WreathSubgroup:
    """The wreath subgroup whose tops preserve consecutive blocks of the
    given sizes."""
    if sum(counts) != group.d:
        raise ValueError(f"block sizes {counts} do not sum to d={group.d}")
    d = group.d
    starts = []
    pos = 0
    for c in counts:
        starts.append(pos)
        pos += c
    block_perm_lists = []
    for start, size in zip(starts, counts):
        locals_ = []
        for q in all_perms(size):
            locals_.append((start, q))
        block_perm_lists.append(locals_)
    tops = []
    for combo in product(*block_perm_lists):
        img = list(range(d))
        for start, q in combo:
            for i, v in enumerate(q):
                img[start + i] = start + v
        tops.append(tuple(img))
    gens = []
    for start, size in zip(starts, counts):
        for i in range(size - 1):
            gens.append(adjacent_transposition(d, start + i))
    return WreathSubgroup(group, tuple(tops), tuple(gens))


def full_subgroup(group: WreathGroup) -> WreathSubgroup:
    return WreathSubgroup(
        group,
        all_perms(group.d),
        tuple(adjacent_transposition(group.d, i) for i in range(group.d - 1)),
    )


# ---------------------------------------------------------------------------
# representations and characters

class Representation:
    """A matrix representation given by an element -> matrix rule.

    `check` controls construction-time verification: "hom" re-multiplies
    the rule against every (element, generator) pair, which forces the map
    to be a homomorphism on the whole group; "none" skips (used when the
    property holds by construction, e.g. restrictions)."""

    def __init__(self, group, dim: int, matrix_fn, name: str = "", check: str = "hom"):
        self.group = group
        self.dim = dim
        self.name = name
        self._fn = matrix_fn
        self._cache: dict = {}
        if check == "hom":
            self._verify_hom()

    def __repr__(self):
        return f"Representation({self.name or 'unnamed'}, dim={self.dim})"

    def matrix(self, x) -> Matrix:
        got = self._cache.get(x)
        if got is None:
            got = self._fn(x)
            self._cache[x] = got
        return got

    def _verify_hom(self):
        mul = self.group.mul
        for x in self.group.elements:
            mx = self.matrix(x)
            for g in self.group.generators:
                if mat_mul(mx, self.matrix(g)) != self.matrix(mul(x, g)):
                    raise ValueError(
                        f"matrix rule for {self.name or 'representation'} is not a homomorphism"
                    )


@dataclass(frozen=True)
class Character:
    """Exact class function, aligned with the group's class representatives."""

    group: object
    values: tuple[Fraction, ...]

    @property
    def dim(self) -> Fraction:
        return self.value_at(self.group.identity)

    def value_at(self, x) -> Fraction:
        return self.values[self.group.class_index(x)]

    def inner(self, other: "Character") -> Fraction:
        group = self.group
        total = Fraction(0)
        for k, rep in enumerate(group.class_reps):
            total += group.class_sizes[k] * self.values[k] * other.value_at(group.inv(rep))
        return total / group.order


def char_of(rho: Representation) -> Character:
    """Traces on the class representatives."""
    return Character(
        rho.group, tuple(trace(rho.matrix(rep)) for rep in rho.group.class_reps)
    )


# ---------------------------------------------------------------------------
# Specht modules in Young's seminormal form

Tableau = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of the given shape, entries 1..n, sorted."""
    n = sum(lam)
    if n == 0:
        return ((),)
    out = []
    rows = len(lam)
    for r in range(rows):
        if lam[r] == 0:
            continue
        if r + 1 < rows and lam[r + 1] == lam[r]:
            continue  # not a removable corner
        smaller = tuple(x for x in (lam[:r] + (lam[r] - 1,) + lam[r + 1:]) if x > 0)
        for small_tab in standard_tableaux(smaller):
            new_rows = [list(row) for row in small_tab]
            while len(new_rows) <= r:
                new_rows.append([])
            new_rows[r].append(n)
            out.append(tuple(tuple(row) for row in new_rows))
    return tuple(sorted(out))


def _position(tab: Tableau, value: int) -> tuple[int, int]:
    for r, row in enumerate(tab):
        for c, v in enumerate(row):
            if v == value:
                return r, c
    raise ValueError(f"{value} not in tableau")


def _swap_entries(tab: Tableau, a: int, b: int) -> Tableau:
    return tuple(
        tuple(b if v == a else a if v == b else v for v in row) for row in tab
    )


@lru_cache(maxsize=None)
def _seminormal_generators(lam: Partition) -> tuple[Matrix, ...]:
    """Matrix of each adjacent transposition on the standard-tableau basis.

    For letters k, k+1 at axial distance dist in a tableau T, the action on
    the T-column is 1/dist on the diagonal plus a cross term to the swapped
    tableau: coefficient 1 from the tableau with dist < 0, and 1 - 1/dist^2
    back.  Same-row and same-column pairs are the dist = +-1 special cases.
    """
    tabs = standard_tableaux(lam)
    index = {tab: i for i, tab in enumerate(tabs)}
    size = len(tabs)
    n = sum(lam)
    mats = []
    for k in range(1, n):
        rows = [[Fraction(0)] * size for _ in range(size)]
        for j, tab in enumerate(tabs):
            r1, c1 = _position(tab, k)
            r2, c2 = _position(tab, k + 1)
            dist = (c2 - r2) - (c1 - r1)
            if r1 == r2:
                rows[j][j] = Fraction(1)
            elif c1 == c2:
                rows[j][j] = Fraction(-1)
            else:
                swapped = _swap_entries(tab, k, k + 1)
                rows[j][j] = Fraction(1, dist)
                cross = Fraction(1) if dist < 0 else 1 - Fraction(1, dist * dist)
                rows[index[swapped]][j] = cross
        mats.append(tuple(tuple(row) for row in rows))
    return tuple(mats)


def _verify_coxeter(mats: tuple[Matrix, ...], dim: int) -> None:
    ident = identity_matrix(dim)
    for i, g in enumerate(mats):
        if mat_mul(g, g) != ident:
            raise ValueError(f"generator {i} does not square to the identity")
    for i in range(len(mats) - 1):
        a, b = mats[i], mats[i + 1]
        if mat_mul(mat_mul(a, b), a) != mat_mul(mat_mul(b, a), b):
            raise ValueError(f"braid relation fails at {i}")
    for i in range(len(mats)):
        for j in range(i + 2, len(mats)):
            if mat_mul(mats[i], mats[j]) != mat_mul(mats[j], mats[i]):
                raise ValueError(f"commuting relation fails at ({i},{j})")


@lru_cache(maxsize=None)
def specht_rep(lam: Partition, degree_bound: int = SPECHT_DEGREE_BOUND) -> Representation:
    """The irreducible representation of the symmetric group attached to a
    partition, in Young's seminormal form over exact rationals."""
    lam = tuple(lam)
    n = sum(lam)
    if n > degree_bound:
        raise ValueError(f"partition size {n} exceeds the degree bound {degree_bound}")
    gens = _seminormal_generators(lam)
    dim = len(standard_tableaux(lam))
    _verify_coxeter(gens, dim)

    def fn(p: Perm) -> Matrix:
        out = identity_matrix(dim)
        for i in perm_to_word(p):
            out = mat_mul(out, gens[i])
        return out

    rep = Representation(SymmetricGroup(n), dim, fn, name=f"S{format_partition(lam)}", check="none")
    return rep


def specht_char_value(lam: Partition, p: Perm) -> Fraction:
    return trace(specht_rep(lam).matrix(p))


# ---------------------------------------------------------------------------
# multipartition labels

@dataclass(frozen=True)
class CliffordLabel:
    """A multipartition: an assignment of a partition to each partition of
    m, nonempty values only, with total size d."""

    m: int
    entries: tuple[tuple[Partition, Partition], ...]

    def __post_init__(self):
        nus = [nu for nu, _ in self.entries]
        if nus != sorted(nus, reverse=True):
            raise ValueError("entries must be sorted descending by key")
        if len(set(nus)) != len(nus):
            raise ValueError("duplicate keys in label")
        for nu, val in self.entries:
            if sum(nu) != self.m:
                raise ValueError(f"key {nu} does not partition m={self.m}")
            if not val:
                raise ValueError("empty values must be omitted")

    @property
    def d(self) -> int:
        return sum(sum(val) for _, val in self.entries)

    def value(self, nu: Partition) -> Partition:
        for key, val in self.entries:
            if key == nu:
                return val
        return ()

    def gamma(self) -> dict[Partition, int]:
        return {nu: sum(val) for nu, val in self.entries}

    def __str__(self):
        body = ",".join(
            f"{format_partition(nu)}:{format_partition(val)}" for nu, val in self.entries
        )
        return "{" + body + "}"


def clifford_label(m: int, mapping) -> CliffordLabel:
    """Build a label from any {partition: partition} mapping."""
    entries = tuple(
        sorted(
            ((tuple(nu), tuple(val)) for nu, val in dict(mapping).items() if tuple(val)),
            reverse=True,
        )
    )
    return CliffordLabel(m, entries)


def enumerate_IC(m: int, d: int) -> tuple[CliffordLabel, ...]:
    """All multipartition labels of total size d over the partitions of m,
    in canonical order (larger keys take their share first)."""
    nus = partitions_of(m)
    out: list[CliffordLabel] = []

    def rec(i: int, remaining: int, acc: tuple):
        if i == len(nus):
            if remaining == 0:
                out.append(CliffordLabel(m, acc))
            return
        nu = nus[i]
        for c in range(remaining, -1, -1):
            if c == 0:
                rec(i + 1, remaining, acc)
            else:
                for lam in partitions_of(c):
                    rec(i + 1, remaining - c, acc + ((nu, lam),))

    rec(0, d, ())
    return tuple(out)


# ---------------------------------------------------------------------------
# tensor-slot machinery

def place_matrix(dims: tuple[int, ...], u: Perm) -> Matrix:
    """Permutation of tensor slots on the row-major product basis: slot i
    of the image holds component u^-1(i) of the source."""
    if u == identity_perm(len(u)):
        return identity_matrix(prod(dims))
    uinv = perm_inverse(u)
    for i in range(len(dims)):
        if dims[uinv[i]] != dims[i]:
            raise ValueError("slot dimensions are not constant along the permutation")
    total = prod(dims)
    rows = [[Fraction(0)] * total for _ in range(total)]
    for col, k in enumerate(product(*[range(dm) for dm in dims])):
        target = tuple(k[uinv[i]] for i in range(len(dims)))
        flat = 0
        for v, dm in zip(target, dims):
            flat = flat * dm + v
        rows[flat][col] = Fraction(1)
    return tuple(tuple(row) for row in rows)


def _slots_of_gamma(gamma: dict[Partition, int]) -> tuple[Partition, ...]:
    return tuple(
        nu for nu in sorted(gamma, reverse=True) for _ in range(gamma[nu])
    )


def extend_to_wreath(group: WreathGroup, gamma: dict[Partition, int]) -> Representation:
    """The extension of the factorwise module to the block wreath subgroup:
    factors act slotwise on a tensor of Specht modules (one slot per count),
    tops in the block subgroup permute equal slots."""
    slots = _slots_of_gamma(gamma)
    if len(slots) != group.d:
        raise ValueError(f"gamma totals {len(slots)}, expected d={group.d}")
    counts = tuple(gamma[nu] for nu in sorted(gamma, reverse=True))
    sub = young_subgroup(group, counts)
    dims = tuple(hook_dim(nu) for nu in slots)
    reps = {nu: specht_rep(nu) for nu in gamma}

    def fn(x: WreathElement) -> Matrix:
        factor_part = kron_all(
            reps[slots[j]].matrix(x.factors[j]) for j in range(group.d)
        )
        return mat_mul(factor_part, place_matrix(dims, x.top))

    return Representation(sub, prod(dims), fn, name="extension", check="hom")


def inflate(group: WreathGroup, label: CliffordLabel) -> Representation:
    """Inflation of the block-group module through the top quotient: the
    factor part acts trivially, each top block acts by its own Specht
    module."""
    gamma = label.gamma()
    counts = tuple(gamma[nu] for nu in sorted(gamma, reverse=True))
    sub = young_subgroup(group, counts)
    blocks = []
    start = 0
    for nu in sorted(gamma, reverse=True):
        size = gamma[nu]
        blocks.append((label.value(nu), start, size))
        start += size
    dim = prod(hook_dim(val) for val, _, _ in blocks)

    def fn(x: WreathElement) -> Matrix:
        mats = []
        for val, begin, size in blocks:
            local = tuple(x.top[begin + i] - begin for i in range(size))
            if any(not 0 <= v < size for v in local):
                raise ValueError("top permutation does not preserve the blocks")
            mats.append(specht_rep(val).matrix(local))
        return kron_all(mats)

    return Representation(sub, dim, fn, name="inflation", check="hom")


def rep_tensor(a: Representation, b: Representation) -> Representation:
    if getattr(a.group, "tops", None) != getattr(b.group, "tops", None):
        raise ValueError("tensor factors must live over the same subgroup")

    def fn(x):
        return kron(a.matrix(x), b.matrix(x))

    return Representation(a.group, a.dim * b.dim, fn, name=f"{a.name}(x){b.name}", check="none")


def induce(rho: Representation, group: WreathGroup, check: str = "hom") -> Representation:
    """Induction from a block wreath subgroup, in the block-permutation
    model over the minimal coset representatives of the tops."""
    sub = rho.group
    if not isinstance(sub, WreathSubgroup) or sub.group.m != group.m or sub.group.d != group.d:
        raise ValueError("subgroup is not contained in the target group")
    d = group.d
    top_list = sub.tops
    rep_of: dict[Perm, Perm] = {}
    for w in all_perms(d):
        rep_of[w] = min(perm_compose(w, s) for s in top_list)
    transversal = sorted(set(rep_of.values()))
    row_of = {w: i for i, w in enumerate(transversal)}
    block = rho.dim
    dim = len(transversal) * block

    def fn(g: WreathElement) -> Matrix:
        rows = [[Fraction(0)] * dim for _ in range(dim)]
        for col_block, w in enumerate(transversal):
            moved = perm_compose(g.top, w)
            target = rep_of[moved]
            h_top = perm_compose(perm_inverse(target), moved)
            factors = tuple(g.factors[target[j]] for j in range(d))
            sub_mat = rho.matrix(WreathElement(factors, h_top))
            r0, c0 = row_of[target] * block, col_block * block
            for r in range(block):
                for c in range(block):
                    rows[r0 + r][c0 + c] = sub_mat[r][c]
        return tuple(tuple(row) for row in rows)

    return Representation(group, dim, fn, name=f"Ind({rho.name})", check=check)


def restrict(rho: Representation, sub: WreathSubgroup) -> Representation:
    """Restriction to a subgroup: the same matrix rule, rechecked trivially."""
    return Representation(sub, rho.dim, rho.matrix, name=f"Res({rho.name})", check="none")


_clifford_cache: dict = {}


def clifford_irrep(group: WreathGroup, label: CliffordLabel) -> Representation:
    """The irreducible of the wreath group attached to a multipartition:
    induce the extension tensored with the inflation up from the block
    subgroup."""
    if label.m != group.m or label.d != group.d:
        raise ValueError(f"label {label} does not match (m,d)=({group.m},{group.d})")
    key = (group.m, group.d, label)
    cached = _clifford_cache.get(key)
    if cached is not None:
        return cached
    ext = extend_to_wreath(group, label.gamma())
    inf = inflate(group, label)
    rep = induce(rep_tensor(ext, inf), group)
    rep.name = f"L{label}"
    _clifford_cache[key] = rep
    return rep


# ---------------------------------------------------------------------------
# the fiber bimodule and its isotypic characters

class BimoduleModel:
    """Commuting left (wreath group) and right (block permutations) actions
    on the induced tensor space attached to a Jordan profile."""

    def __init__(self, group: WreathGroup, profile: Profile):
        validate_profile(profile)
        self.group = group
        self.profile = orbit_label(profile)
        m, d = group.m, group.d
        if len(self.profile) != d or sum(self.profile[0]) != m:
            raise ValueError(f"profile {profile} does not match (m,d)=({m},{d})")
        gamma = gamma_of(self.profile)
        counts = tuple(gamma[nu] for nu in sorted(gamma, reverse=True))
        right_sub = young_subgroup(group, counts)
        self.right_tops = right_sub.tops
        self._right_gens = right_sub.top_generators
        self._blocks = []
        start = 0
        for nu in sorted(gamma, reverse=True):
            self._blocks.append((nu, start, gamma[nu]))
            start += gamma[nu]

        lams = self.profile
        dims = tuple(hook_dim(lam) for lam in lams)
        reps = {lam: specht_rep(lam) for lam in set(lams)}
        cosets = all_perms(d)
        row_of = {w: i for i, w in enumerate(cosets)}
        block = prod(dims)
        self.dim = len(cosets) * block

        def left_fn(g: WreathElement) -> Matrix:
            rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
            for col_block, w in enumerate(cosets):
                target = perm_compose(g.top, w)
                sub_mat = kron_all(
                    reps[lams[j]].matrix(g.factors[target[j]]) for j in range(d)
                )
                r0, c0 = row_of[target] * block, col_block * block
                for r in range(block):
                    for c in range(block):
                        rows[r0 + r][c0 + c] = sub_mat[r][c]
            return tuple(tuple(row) for row in rows)

        self.left = Representation(group, self.dim, left_fn, name="fiber", check="hom")

        def right_fn(c: Perm) -> Matrix:
            inner = place_matrix(dims, perm_inverse(c))
            rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
            for col_block, w in enumerate(cosets):
                target = perm_compose(w, c)
                r0, c0 = row_of[target] * block, col_block * block
                for r in range(block):
                    for cc in range(block):
                        rows[r0 + r][c0 + cc] = inner[r][cc]
            return tuple(tuple(row) for row in rows)

        self._right_fn = right_fn
        self._right_cache: dict[Perm, Matrix] = {}
        self._verify_bimodule()

    def right_matrix(self, c: Perm) -> Matrix:
        got = self._right_cache.get(c)
        if got is None:
            got = self._right_fn(c)
            self._right_cache[c] = got
        return got

    def _verify_bimodule(self):
        # right action reverses products ...
        ident = tuple(identity_perm(self.group.m) for _ in range(self.group.d))
        right_gens = [WreathElement(ident, t).top for t in self._right_gens]
        for c1 in right_gens:
            for c2 in right_gens:
                lhs = self.right_matrix(perm_compose(c1, c2))
                rhs = mat_mul(self.right_matrix(c2), self.right_matrix(c1))
                if lhs != rhs:
                    raise ValueError("right action does not reverse products")
        # ... and commutes with the left action
        for g in self.group.generators:
            lg = self.left.matrix(g)
            for c in right_gens:
                rc = self.right_matrix(c)
                if mat_mul(lg, rc) != mat_mul(rc, lg):
                    raise ValueError("left and right actions do not commute")

    def right_character_value(self, psi: CliffordLabel, c: Perm) -> Fraction:
        """Character of the block-group irreducible labelled by psi at a
        block permutation: the product of local Specht traces."""
        value = Fraction(1)
        for nu, start, size in self._blocks:
            local = tuple(c[start + i] - start for i in range(size))
            value *= specht_char_value(psi.value(nu), local)
        return value


_bimodule_cache: dict = {}


def springer_module(group: WreathGroup, profile) -> BimoduleModel:
    """The fiber bimodule of a Jordan profile: the induced tensor of the
    slotwise Specht modules, with the commuting block-permutation action
    on the right."""
    key = (group.m, group.d, orbit_label(profile))
    cached = _bimodule_cache.get(key)
    if cached is None:
        cached = BimoduleModel(group, profile)
        _bimodule_cache[key] = cached
    return cached


def isotypic_character(model: BimoduleModel, psi: CliffordLabel) -> Character:
    """Left character of the psi-multiplicity space of the bimodule:
    project with the exact character sum over the right group."""
    if psi.gamma() != gamma_of(model.profile):
        raise ValueError(
            f"label {psi} is not an irreducible of the right group of {model.profile}"
        )
    group = model.group
    size = len(model.right_tops)
    values = []
    for rep in group.class_reps:
        left_mat = model.left.matrix(rep)
        total = Fraction(0)
        for c in model.right_tops:
            chi = model.right_character_value(psi, perm_inverse(c))
            if chi:
                total += chi * trace(mat_mul(left_mat, model.right_matrix(c)))
        values.append(total / size)
    return Character(group, tuple(values))


def character_table(group: WreathGroup):
    """Rows (label, dimension, character) for every irreducible, columns
    aligned with the group's class representatives."""
    rows = []
    for label in enumerate_IC(group.m, group.d):
        chi = char_of(clifford_irrep(group, label))
        rows.append((label, int(chi.dim), chi))
    return rows

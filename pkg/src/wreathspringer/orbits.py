"""Nilpotent-orbit combinatorics: Jordan profiles, orbit labels, the
multiplicity map gamma, component groups, and the dimension bookkeeping
relating orbit dimension to fiber dimension.

A Jordan profile is a tuple of d partitions of m, one per matrix slot;
its orbit label is the canonical (descending) sorted form, which is a
complete invariant for simultaneous conjugation plus slot permutation.
"""

from __future__ import annotations

from math import factorial

from .combinatorics import (
    Partition,
    conjugate_partition,
    format_partition,
    is_partition,
    n_stat,
    partition_key,
    partitions_of,
)
from .matrices import as_matrix, is_zero_matrix, mat_mul, mat_rank

Profile = tuple[Partition, ...]
GammaMap = dict[Partition, int]


def validate_profile(profile) -> tuple[int, int]:
    """Check every entry partitions the same m; return (m, d)."""
    profile = tuple(tuple(entry) for entry in profile)
    if not profile:
        raise ValueError("empty profile")
    m = sum(profile[0])
    for entry in profile:
        if not is_partition(entry) or sum(entry) != m:
            raise ValueError(f"{entry} does not partition {m}")
    return m, len(profile)


def orbit_label(profile) -> Profile:
    """Canonical representative of the slot-permutation orbit: entries
    sorted descending in the canonical partition order."""
    validate_profile(profile)
    return tuple(sorted((tuple(e) for e in profile), reverse=True))


def gamma_of(profile) -> GammaMap:
    """Multiplicity map: partition -> number of slots carrying it.
    Keys are listed in canonical descending order."""
    validate_profile(profile)
    counts: GammaMap = {}
    for entry in sorted((tuple(e) for e in profile), reverse=True):
        counts[entry] = counts.get(entry, 0) + 1
    return counts


def component_group(profile) -> GammaMap:
    """Descriptor of the component group: the Young subgroup with one
    symmetric factor of degree gamma(nu) per distinct entry nu."""
    return gamma_of(profile)


def young_order(gamma: GammaMap) -> int:
    """Order of the Young subgroup attached to a multiplicity map."""
    out = 1
    for count in gamma.values():
        out *= factorial(count)
    return out


def orbit_dim(profile) -> int:
    """Sum over slots of m^2 minus the squared column lengths: the adjoint
    orbit dimension of the profile."""
    m, _ = validate_profile(profile)
    total = 0
    for entry in profile:
        total += m * m - sum(c * c for c in conjugate_partition(tuple(entry)))
    return total


def fiber_dim(profile) -> int:
    """Sum over slots of n(lambda): the common dimension of the fiber
    components over a representative of the profile."""
    validate_profile(profile)
    return sum(n_stat(tuple(entry)) for entry in profile)


def check_dimension_property(profile) -> bool:
    """fiber_dim == d*m*(m-1)/2 - orbit_dim/2, exactly."""
    m, d = validate_profile(profile)
    odim = orbit_dim(profile)
    if odim % 2 != 0:
        raise ValueError(f"odd orbit dimension {odim} for profile {profile}")
    return fiber_dim(profile) == d * m * (m - 1) // 2 - odim // 2


def jordan_type(matrix) -> Partition:
    """Jordan type of a nilpotent matrix over the rationals, from the exact
    rank sequence: the conjugate partition has parts rank(A^(k-1)) - rank(A^k)."""
    a = as_matrix(matrix)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    power = a
    for _ in range(n - 1):
        if is_zero_matrix(power):
            break
        power = mat_mul(power, a)
    if not is_zero_matrix(power):
        raise ValueError("matrix is not nilpotent")
    ranks = [n]
    power = a
    while True:
        r = mat_rank(power)
        ranks.append(r)
        if r == 0:
            break
        power = mat_mul(power, a)
    conj = tuple(ranks[k - 1] - ranks[k] for k in range(1, len(ranks)))
    return conjugate_partition(conj)


def all_profiles(m: int, d: int) -> list[Profile]:
    """All d-tuples of partitions of m, in lexicographic order over the
    canonical partition order."""
    from itertools import product

    return [tuple(p) for p in product(partitions_of(m), repeat=d)]


def all_orbit_labels(m: int, d: int) -> list[Profile]:
    seen: dict[Profile, None] = {}
    for profile in all_profiles(m, d):
        seen.setdefault(orbit_label(profile), None)
    return sorted(seen, reverse=True)


def enumerate_IS(m: int, d: int):
    """All orbit-side labels: one per (orbit label, irreducible of the
    component group), the irreducible encoded as a multipartition with
    multiplicities gamma."""
    # imported here: the label types live upstream of this module
    from .reptheory import CliffordLabel
    from .springer import SpringerLabel

    out = []
    for label in all_orbit_labels(m, d):
        gamma = gamma_of(label)
        for assignment in _assignments(list(gamma.items())):
            psi = CliffordLabel(m, tuple(assignment))
            out.append(SpringerLabel(label, psi))
    return out


def _assignments(gamma_items):
    """All ways to attach a partition of gamma(nu) to each nu."""
    if not gamma_items:
        yield ()
        return
    (nu, count), rest = gamma_items[0], gamma_items[1:]
    for lam in partitions_of(count):
        for tail in _assignments(rest):
            yield ((nu, lam),) + tail


def orbit_report(m: int, d: int) -> dict:
    """JSON-ready summary of all orbits at (m, d)."""
    rows = []
    for label in all_orbit_labels(m, d):
        gamma = gamma_of(label)
        rows.append(
            {
                "label": [format_partition(entry) for entry in label],
                "gamma": {partition_key(nu): k for nu, k in gamma.items()},
                "componentGroupOrder": young_order(gamma),
                "orbitDim": orbit_dim(label),
                "fiberDim": fiber_dim(label),
            }
        )
    return {"m": m, "d": d, "orbits": rows}

"""Homology ranks of a Hodge slice, and verification of the closed-form bases.

With d0 = 0 and the complex concentrated in defects 0, 1, 2, the ranks are
pure dimension arithmetic:

    a  = dim H0 = dim C0 - rank d1
    b  = dim H1 = (dim C1 - rank d1) - rank d2
    h2 = dim H2 = dim C2 - rank d2        (expected to vanish)

The graded Euler characteristic carries a global sign fixed by the parity of
the total degree of the defect-0 graphs, chi = +-(dim C0 - dim C1 + dim C2).

Each case also has an explicit closed-form basis of H0 and H1, families of
symmetrized monomials (or two-term combinations) indexed by congruence
conditions on the exponents; homology_generators enumerates them at a given
Hodge degree and verify_homology_basis checks, against the exact matrices,
that they are cycles, that there are exactly a (resp. b) of them, and that
they stay independent modulo the incoming boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    basis_coordinates,
    element_power,
    elementary_reconstruct,
    render_element,
    symmetrize,
    vandermonde,
)
from .cases import ParityCase
from .complexes import ComplexConsistencyError, apply_defect1, build_slice
from .genfun import total_degree
from .linalg import RationalMatrix, is_zero_composition


@dataclass(frozen=True)
class RankRow:
    case: ParityCase
    t: int
    a: int
    b: int
    chi: int
    dim_c2: int
    dim_c1: int
    dim_c0: int
    rank_d2: int
    rank_d1: int

    @property
    def h2(self):
        return self.dim_c2 - self.rank_d2


def euler_characteristic(slice_):
    """Signed alternating dimension sum (-1)^d0 (dim C0 - dim C1 + dim C2)."""
    d0 = total_degree(slice_.case, slice_.t)
    sign = -1 if d0 % 2 else 1
    return sign * (len(slice_.basis0) - len(slice_.basis1) + len(slice_.basis2))


def homology_ranks(slice_):
    """Rank arithmetic on one slice; raises if d1.d2 != 0."""
    if not is_zero_composition(slice_.d1, slice_.d2):
        raise ComplexConsistencyError(
            f"d1 . d2 != 0 for case {slice_.case} at t = {slice_.t}"
        )
    dim2, dim1, dim0 = len(slice_.basis2), len(slice_.basis1), len(slice_.basis0)
    rank_d2 = slice_.d2.rank()
    rank_d1 = slice_.d1.rank()
    return RankRow(
        case=slice_.case,
        t=slice_.t,
        a=dim0 - rank_d1,
        b=(dim1 - rank_d1) - rank_d2,
        chi=euler_characteristic(slice_),
        dim_c2=dim2,
        dim_c1=dim1,
        dim_c0=dim0,
        rank_d2=rank_d2,
        rank_d1=rank_d1,
    )


def defect_concentration_check(rows):
    """True iff no degree carries both a and b, and defect 2 never survives."""
    return all(row.a * row.b == 0 and row.h2 == 0 for row in rows)


def _oo_monomials(degree):
    """Pairs e2^beta e3^gamma with gamma even, of the given degree."""
    out = []
    for gamma in range(0, degree // 3 + 1, 2):
        rest = degree - 3 * gamma
        if rest % 2 == 0:
            out.append((rest // 2, gamma))
    return out


def homology_generators(case, t):
    """The closed-form H0 and H1 representatives at Hodge degree t.

    Returns (h0 generators, h1 generators), elements of degree t and t-1.
    """
    flavor = case.flavor
    sym = lambda triple: symmetrize(flavor, triple)

    if case.m_odd and case.n_odd:
        h0 = [
            elementary_reconstruct({(0, beta, gamma): 1})
            for beta, gamma in _oo_monomials(t)
            if beta + gamma > 0
        ]
        h1 = [
            elementary_reconstruct({(0, beta, gamma): 1})
            for beta, gamma in _oo_monomials(t - 1)
        ]
        return h0, h1

    if not case.m_odd and not case.n_odd:
        delta = vandermonde()

        def classes(degree):
            # Delta e3 e2^beta e3^gamma, gamma even, of total degree `degree`
            return [
                delta * elementary_reconstruct({(0, beta, gamma + 1): 1})
                for beta, gamma in _oo_monomials(degree - 6)
                if degree >= 6
            ]

        return classes(t), classes(t - 1)

    if case.n_odd:  # m even, N odd
        h0 = []
        for k3 in range(t + 1):
            if (t - 1 - k3) % 2 == 0:
                k2 = (t - 1 - k3) // 2
                if k2 >= 0 and k2 % 2 == 1 and k3 % 4 in (0, 3) and k2 > k3:
                    h0.append(sym((k2 + 1, k2, k3)))
        if (t - 2) % 3 == 0 and (t - 2) // 3 >= 0 and ((t - 2) // 3) % 4 == 3:
            k3 = (t - 2) // 3
            h0.append(sym((k3 + 1, k3 + 1, k3)))
        h1 = []
        degree = t - 1
        for k3 in range(degree + 1):
            if (degree - k3) % 2 == 0:
                k2 = (degree - k3) // 2
                if k2 % 2 == 0 and k3 % 4 == 0 and k2 >= k3:
                    h1.append(sym((k2, k2, k3)))
        for k3 in range(degree + 1):
            if (degree - 2 - k3) % 2 == 0:
                k2 = (degree - 2 - k3) // 2
                if k2 >= 0 and k2 % 2 == 1 and k3 % 4 == 3 and k2 > k3:
                    h1.append(
                        sym((k2 + 1, k2 + 1, k3)) * 2 - sym((k2 + 1, k2, k3 + 1))
                    )
        return h0, h1

    # m odd, N even
    h0 = []
    for k3 in range(t + 1):
        if (t - 1 - k3) % 2 == 0:
            k2 = (t - 1 - k3) // 2
            if k2 >= 0 and k2 % 2 == 0 and k3 % 4 in (1, 2) and k2 > k3:
                h0.append(sym((k2 + 1, k2, k3)))
    if (t - 2) % 3 == 0 and (t - 2) // 3 >= 0 and ((t - 2) // 3) % 4 == 0:
        k3 = (t - 2) // 3
        h0.append(sym((k3 + 1, k3 + 1, k3)))
    h1 = []
    degree = t - 1
    for k3 in range(degree + 1):
        if (degree - 2 - k3) % 2 == 0:
            k2 = (degree - 2 - k3) // 2
            if k2 >= 0 and k2 % 2 == 0 and k3 % 4 == 2 and k2 > k3:
                h1.append(sym((k2 + 1, k2 + 1, k3)) * 2 - sym((k2 + 1, k2, k3 + 1)))
    for k3 in range(degree + 1):
        if (degree - k3) % 2 == 0:
            k2 = (degree - k3) // 2
            if k2 % 2 == 1 and k3 % 4 == 1 and k2 >= k3:
                h1.append(sym((k2, k2, k3)))
    return h0, h1


def _coordinate_columns(generators, basis, expected_degree, what, problems):
    index = {triple: i for i, triple in enumerate(basis)}
    columns = []
    for g in generators:
        if g.degree != expected_degree:
            problems.append(
                f"{what} generator {render_element(g)} has degree {g.degree}, "
                f"expected {expected_degree}"
            )
            continue
        try:
            coords = basis_coordinates(g)
        except ValueError:
            problems.append(f"{what} generator {render_element(g)} is not equivariant")
            continue
        column = {}
        for rep, c in coords.items():
            if rep not in index:
                problems.append(
                    f"{what} generator {render_element(g)} sticks out of the space "
                    f"(component {rep})"
                )
                column = None
                break
            column[index[rep]] = c
        if column is not None:
            columns.append(column)
    return columns


def homology_basis_report(case, t):
    """Check the closed-form basis at Hodge degree t; returns found problems."""
    problems = []
    slice_ = build_slice(case, t)
    row = homology_ranks(slice_)
    h0, h1 = homology_generators(case, t)

    if len(h0) != row.a:
        problems.append(f"H0 at t={t}: {len(h0)} generators listed, rank is {row.a}")
    cols0 = _coordinate_columns(h0, slice_.basis0, t, "H0", problems)
    stacked0 = slice_.d1.augment(
        RationalMatrix.from_columns(len(slice_.basis0), cols0)
    )
    if stacked0.rank() != row.rank_d1 + len(cols0):
        problems.append(f"H0 at t={t}: generators are dependent modulo boundaries")

    if len(h1) != row.b:
        problems.append(f"H1 at t={t}: {len(h1)} generators listed, rank is {row.b}")
    for g in h1:
        if not apply_defect1(case, g).is_zero():
            problems.append(f"H1 generator {render_element(g)} is not a cycle")
    cols1 = _coordinate_columns(h1, slice_.basis1, t - 1, "H1", problems)
    stacked1 = slice_.d2.augment(
        RationalMatrix.from_columns(len(slice_.basis1), cols1)
    )
    if stacked1.rank() != row.rank_d2 + len(cols1):
        problems.append(f"H1 at t={t}: generators are dependent modulo boundaries")
    return problems


def verify_homology_basis(case, t):
    """True iff the closed-form generator lists check out at Hodge degree t."""
    return not homology_basis_report(case, t)

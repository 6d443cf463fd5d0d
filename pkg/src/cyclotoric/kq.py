"""The vertex-generated semigroup: its lattice, principal relation, and normality.

Unlike the full semigroup, the one generated by the vertices alone need
not span the whole integer lattice, so membership questions run inside
the Hermite-form lattice of the vertex columns.  At n = d+2 the relation
module is principal and the single relation is written down exactly; for
wider gaps a divisibility criterion on the last triangular row certifies
non-normality, and an exhaustive bounded-degree search settles what it
can within budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import CycloParams, DeltaTable, InvalidParameters, moment_matrix, vertex
from .faces import facet_hyperplane, facets
from .intlinalg import hnf, lattice_contains, mat_vec, vec_sub
from .lattice import BudgetExceeded, enumerate_points


@dataclass(frozen=True)
class GeneratorLattice:
    """Hermite basis of the lattice spanned by the vertex columns."""

    hnf_basis: tuple[tuple[int, ...], ...]
    index_in_ambient: int

    def contains(self, z) -> bool:
        return lattice_contains(self.hnf_basis, z)


def generator_lattice(p: CycloParams) -> GeneratorLattice:
    basis = hnf([vertex(p, i) for i in range(1, p.n + 1)])
    if len(basis) != p.d + 1:
        raise ArithmeticError("vertex lattice is not full rank")
    index = 1
    for i, row in enumerate(basis):
        index *= row[i]
    return GeneratorLattice(tuple(basis), index)


@dataclass(frozen=True)
class KernelBinomial:
    """Primitive sign-normalised relation vector among the vertex columns.

    c has positive entries exactly on the odd indices and negative on the
    even ones; the positive and negative exponent sums agree, so the two
    monomials it encodes share one degree.
    """

    c: tuple[int, ...]
    u_support: tuple[int, ...]
    v_support: tuple[int, ...]
    u_exponents: tuple[int, ...]
    v_exponents: tuple[int, ...]
    u_squarefree: bool
    v_squarefree: bool
    degree: int

    def monomials(self) -> tuple[str, str]:
        def side(support, exps):
            return "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in zip(support, exps)
            )

        return side(self.u_support, self.u_exponents), side(self.v_support, self.v_exponents)

    def to_dict(self) -> dict:
        u, v = self.monomials()
        return {
            "c": list(self.c),
            "u_support": list(self.u_support),
            "v_support": list(self.v_support),
            "u_exponents": list(self.u_exponents),
            "v_exponents": list(self.v_exponents),
            "u_squarefree": self.u_squarefree,
            "v_squarefree": self.v_squarefree,
            "degree": self.degree,
            "u": u,
            "v": v,
        }


def kernel_binomial(p: CycloParams) -> KernelBinomial:
    """The single relation at n = d+2, from the reciprocal-product kernel form.

    Component i of the kernel is proportional to the reciprocal of the
    product of (tau_j - tau_i) over j != i; j < i contributes i-1 negative
    factors, so signs alternate starting positive.  The result is scaled
    to a primitive integer vector with c_1 > 0 and checked against the
    moment matrix exactly.
    """
    if p.n != p.d + 2:
        raise InvalidParameters("principal relation needs n = d+2")
    tau = p.tau
    fracs = []
    for i in range(p.n):
        denom = 1
        for j in range(p.n):
            if j != i:
                denom *= tau[j] - tau[i]
        fracs.append(Fraction(1, denom))
    scale = 1
    for f in fracs:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    ints = [int(f * scale) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    c = tuple(x // g for x in ints)
    if c[0] < 0:
        c = tuple(-x for x in c)
    if any(v != 0 for v in mat_vec(moment_matrix(p).entries, c)):
        raise ArithmeticError("kernel vector does not annihilate the moment matrix")
    u_support = tuple(i + 1 for i, x in enumerate(c) if x > 0)
    v_support = tuple(i + 1 for i, x in enumerate(c) if x < 0)
    odds = tuple(range(1, p.n + 1, 2))
    evens = tuple(range(2, p.n + 1, 2))
    if u_support != odds or v_support != evens:
        raise ArithmeticError("kernel supports are not the odd/even split")
    u_exponents = tuple(c[i - 1] for i in u_support)
    v_exponents = tuple(-c[i - 1] for i in v_support)
    if sum(u_exponents) != sum(v_exponents):
        raise ArithmeticError("kernel degree balance failed")
    return KernelBinomial(
        c=c,
        u_support=u_support,
        v_support=v_support,
        u_exponents=u_exponents,
        v_exponents=v_exponents,
        u_squarefree=all(e == 1 for e in u_exponents),
        v_squarefree=all(e == 1 for e in v_exponents),
        degree=sum(u_exponents),
    )


def divisibility_test(p: CycloParams) -> int | None:
    """Least s in [d+2, n] whose last-row product is not divisible by the first.

    A hit certifies non-normality of the vertex semigroup; silence says
    nothing.  Only defined for n >= d+3.
    """
    if p.n < p.d + 3:
        raise InvalidParameters("divisibility criterion needs n >= d+3")
    dt = DeltaTable(p)
    base = dt.delta_tilde(p.d, p.d + 1)
    for s in range(p.d + 2, p.n + 1):
        if dt.delta_tilde(p.d, s) % base:
            return s
    return None


def leading_facet_heights(p: CycloParams) -> tuple[tuple[int, ...], int]:
    """Last triangular row evaluated on the trailing vertices, with its gcd.

    Diagnostic view of the support form of the facet spanned by the first
    d vertices, normalised to the vertex lattice rather than the ambient
    one; dividing the raw values by the gcd gives the lattice-normalised
    form.
    """
    dt = DeltaTable(p)
    vals = tuple(dt.delta_tilde(p.d, i) for i in range(p.d + 1, p.n + 1))
    g = 0
    for v in vals:
        g = gcd(g, v)
    return vals, g


def is_normal_kq_bruteforce(
    p: CycloParams, max_degree: int | None = None, *, budget: int | None = None
) -> tuple[str, tuple[int, ...] | None]:
    """Search for a cone-and-lattice point missed by the vertex semigroup.

    Returns ("normal" | "not_normal" | "inconclusive", witness).  Degrees
    above d are redundant by the usual vertex-peeling argument, so the
    default bound is exhaustive; hitting the enumeration budget downgrades
    the verdict to inconclusive, never to a wrong answer.  Degrees are
    verified in order, so at degree k one vertex subtraction landing in
    the cone certifies membership.
    """
    bound = p.d if max_degree is None else max_degree
    lat = generator_lattice(p)
    verts = [vertex(p, i) for i in range(1, p.n + 1)]
    vert_set = set(verts)
    hps = [facet_hyperplane(w, p) for w in facets(p)]

    def in_cone(x) -> bool:
        return all(h.slack(x) >= 0 for h in hps)

    try:
        for k in range(1, bound + 1):
            for z in enumerate_points(p, k, budget=budget):
                if not lat.contains(z):
                    continue
                if k == 1:
                    if z not in vert_set:
                        return "not_normal", z
                    continue
                if not any(in_cone(vec_sub(z, v)) for v in verts):
                    return "not_normal", z
    except BudgetExceeded:
        return "inconclusive", None
    return "normal", None


@dataclass(frozen=True)
class RingReportKQ:
    case: str  # simplex_regular | curve_d1 | principal_d2 | general
    normal: str  # yes | no | unknown
    complete_intersection: bool
    evidence: dict
    kernel: tuple[int, ...] | None

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "normal": self.normal,
            "complete_intersection": self.complete_intersection,
            "evidence": self.evidence,
            "kernel": list(self.kernel) if self.kernel is not None else None,
        }


def classify_kq(
    p: CycloParams,
    use_bruteforce: bool = False,
    max_degree: int | None = None,
    *,
    budget: int | None = None,
) -> RingReportKQ:
    """Branch table for the vertex semigroup's normality.

    Simplices are regular, curves are normal exactly for equal spacing,
    n = d+2 with d >= 2 is never normal (both sides of the principal
    relation carry a square), and wider instances fall to the
    divisibility criterion, then optionally to brute force; whatever
    survives is reported unknown rather than guessed.
    """
    ci = p.n == p.d + 2
    kern = kernel_binomial(p).c if ci else None
    if p.n == p.d + 1:
        return RingReportKQ("simplex_regular", "yes", ci, {"kind": "regularity"}, kern)
    if p.d == 1:
        equal = len(set(p.gaps)) == 1
        return RingReportKQ(
            "curve_d1",
            "yes" if equal else "no",
            ci,
            {"kind": "equal_spacing", "equal": equal},
            kern,
        )
    if ci:
        kb = kernel_binomial(p)
        return RingReportKQ(
            "principal_d2",
            "no",
            True,
            {
                "kind": "kernel_binomial",
                "u_squarefree": kb.u_squarefree,
                "v_squarefree": kb.v_squarefree,
            },
            kb.c,
        )
    s = divisibility_test(p)
    if s is not None:
        return RingReportKQ(
            "general", "no", False, {"kind": "divisibility_witness", "s": s}, None
        )
    if use_bruteforce:
        verdict, witness = is_normal_kq_bruteforce(p, max_degree, budget=budget)
        if verdict == "not_normal":
            return RingReportKQ(
                "general",
                "no",
                False,
                {"kind": "bruteforce_witness", "witness": list(witness)},
                None,
            )
        return RingReportKQ(
            "general", "unknown", False, {"kind": "none", "bruteforce": verdict}, None
        )
    return RingReportKQ("general", "unknown", False, {"kind": "none"}, None)

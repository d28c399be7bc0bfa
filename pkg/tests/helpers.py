"""Shared test utilities, including independent oracles.

The Poisson oracle here deliberately avoids the closed-form double sum
used by the engine: it extends the degree-1 dual pairings (inverse Gram
blocks) by the graded biderivation rules alone.  Agreement between the
two is a meaningful check, not a tautology.
"""
from __future__ import annotations

import random
from fractions import Fraction

from superquad import QuadraticLieSuperalgebra
from superquad.cochains import Cochain, Monomial, monomials_of_degree, wedge
from superquad.linalg import Rat, inverse

QUADRATIC_KEYS = (
    "g_4_1_s",
    "g_4_2_s",
    "g_6_s",
    "g_6_1",
    "g_6_2",
    "g_6_3",
    "g_8_2_1_s",
    "g_8_2_2_s",
    "g_8_2_3_s",
    "g_8_2_4_s",
    "g_8_2_5_s",
    "g_8_2_6_s",
    "g_8_2_7_s",
    "g_8_2_8_s",
    "g_8_2_9_s",
    "g_dec",
)


def mono(q_or_basis, even_labels=(), odd_labels=(), coeff=1) -> Cochain:
    """Cochain with a single monomial given by basis labels."""
    basis = getattr(q_or_basis, "basis", q_or_basis)
    even = tuple(basis.index(lab) for lab in even_labels)
    odd = tuple(basis.index(lab) for lab in odd_labels)
    m = Monomial(even=even, odd=odd)
    return Cochain.from_terms(basis, {m: Fraction(coeff)})


def bidegree(m: Monomial) -> tuple[int, int]:
    """Z x Z2 bidegree (total degree, parity of the symmetric degree)."""
    return (m.degree, m.z2_degree)


def koszul(d1: tuple[int, int], d2: tuple[int, int]) -> int:
    return -1 if (d1[0] * d2[0] + d1[1] * d2[1]) % 2 else 1


def random_homogeneous(
    basis, rng: random.Random, max_degree: int = 2, max_terms: int = 2
) -> tuple[Cochain, tuple[int, int]]:
    """Random nonzero cochain homogeneous in both Z and Z2 degrees."""
    k = rng.randint(1, max_degree)
    by_bidegree: dict[tuple[int, int], list[Monomial]] = {}
    for m in monomials_of_degree(basis, k):
        by_bidegree.setdefault(bidegree(m), []).append(m)
    deg = rng.choice(sorted(by_bidegree))
    pool = by_bidegree[deg]
    picks = rng.sample(pool, min(len(pool), rng.randint(1, max_terms)))
    terms = {m: Fraction(rng.randint(-3, 3) or 1) for m in picks}
    return Cochain.from_terms(basis, terms), deg


class PoissonOracle:
    """Bracket defined only by the dual pairings and biderivation rules."""

    def __init__(self, q: QuadraticLieSuperalgebra):
        self.q = q
        self.basis = q.basis
        ne = self.basis.even_dim
        n = self.basis.dim
        even_inv = (
            inverse([[q.form.gram[i][j] for j in range(ne)] for i in range(ne)])
            if ne
            else []
        )
        odd_inv = (
            inverse(
                [
                    [q.form.gram[i][j] for j in range(ne, n)]
                    for i in range(ne, n)
                ]
            )
            if n > ne
            else []
        )
        self.pairing: dict[tuple[int, int], Rat] = {}
        for i in range(ne):
            for j in range(ne):
                if even_inv[i][j] != 0:
                    self.pairing[(i, j)] = even_inv[i][j]
        for i in range(ne, n):
            for j in range(ne, n):
                v = odd_inv[i - ne][j - ne]
                if v != 0:
                    self.pairing[(i, j)] = v
        self._memo: dict[tuple[Monomial, Monomial], Cochain] = {}

    def _single(self, i: int) -> Cochain:
        if i < self.basis.even_dim:
            m = Monomial(even=(i,), odd=())
        else:
            m = Monomial(even=(), odd=(i,))
        return Cochain.from_terms(self.basis, {m: Fraction(1)})

    def _split(self, m: Monomial) -> tuple[int, Monomial]:
        """m = (first index) wedge (rest), with no sign."""
        if m.even:
            return m.even[0], Monomial(even=m.even[1:], odd=m.odd)
        return m.odd[0], Monomial(even=(), odd=m.odd[1:])

    def _index_parity(self, i: int) -> int:
        return self.basis.parities[i]

    def monomial_bracket(self, a: Monomial, b: Monomial) -> Cochain:
        key = (a, b)
        if key in self._memo:
            return self._memo[key]
        zero = Cochain.zero(self.basis)
        if a.degree == 0 or b.degree == 0:
            out = zero
        elif a.degree == 1 and b.degree == 1:
            i, _ = self._split(a)
            j, _ = self._split(b)
            c = self.pairing.get((i, j), Fraction(0))
            out = Cochain.from_terms(
                self.basis, {Monomial(even=(), odd=()): c}
            )
        elif a.degree == 1:
            # {u, v ^ S} = {u,v} ^ S + (-1)^{<u><v>} v ^ {u, S}
            i, _ = self._split(a)
            j, rest = self._split(b)
            u_deg = (1, self._index_parity(i))
            v_deg = (1, self._index_parity(j))
            first = self.monomial_bracket(a, self._as_mono(j))
            term1 = wedge(
                first, Cochain.from_terms(self.basis, {rest: Fraction(1)})
            )
            inner = self.monomial_bracket(self._as_mono(i), rest)
            term2 = wedge(self._single(j), inner).scale(
                Fraction(koszul(u_deg, v_deg))
            )
            out = term1 + term2
        else:
            # {u ^ R, B} = (-1)^{<B><R>} {u, B} ^ R + u ^ {R, B}
            i, rest = self._split(a)
            b_deg = bidegree(b)
            r_deg = bidegree(rest)
            left = wedge(
                self.monomial_bracket(self._as_mono(i), b),
                Cochain.from_terms(self.basis, {rest: Fraction(1)}),
            ).scale(Fraction(koszul(b_deg, r_deg)))
            right = wedge(
                self._single(i), self.monomial_bracket(rest, b)
            )
            out = left + right
        self._memo[key] = out
        return out

    def _as_mono(self, i: int) -> Monomial:
        if i < self.basis.even_dim:
            return Monomial(even=(i,), odd=())
        return Monomial(even=(), odd=(i,))

    def bracket(self, a: Cochain, b: Cochain) -> Cochain:
        out = Cochain.zero(self.basis)
        for ma, ca in a.terms:
            for mb, cb in b.terms:
                out = out + self.monomial_bracket(ma, mb).scale(ca * cb)
        return out

"""Lie superalgebras by structure constants.

A finite-dimensional Lie superalgebra over the rationals is stored as a
graded basis together with the structure constants of the bracket.  The
basis is a flat list of labelled vectors, even vectors first; elements
are coordinate vectors over ``Fraction``.

Conventions used throughout the package:

* parity is 0 (even) or 1 (odd);
* the bracket of homogeneous elements satisfies
  ``[x, y] = -(-1)**(|x||y|) [y, x]``, so constants are stored only for
  index pairs i <= j and the other half is derived;
* the super Jacobi identity is taken in the cyclic form
  ``(-1)**(|z||x|) [[x,y],z] + (-1)**(|x||y|) [[y,z],x]
    + (-1)**(|y||z|) [[z,x],y] = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .linalg import Rat, echelon_basis, nullspace, rat, rref

Vector = tuple[Rat, ...]


@dataclass(frozen=True)
class GradedBasis:
    """Ordered homogeneous basis, all even vectors before all odd ones."""

    labels: tuple[str, ...]
    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.parities):
            raise InputError("labels and parities must have equal length")
        if len(set(self.labels)) != len(self.labels):
            raise InputError("basis labels must be distinct")
        if any(p not in (0, 1) for p in self.parities):
            raise InputError("parities must be 0 or 1")
        seen_odd = False
        for p in self.parities:
            if p == 1:
                seen_odd = True
            elif seen_odd:
                raise InputError("even basis vectors must precede odd ones")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def even_dim(self) -> int:
        return sum(1 for p in self.parities if p == 0)

    @property
    def odd_dim(self) -> int:
        return sum(1 for p in self.parities if p == 1)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown basis label {label!r}") from None

    def parity_of_vector(self, v: Sequence[Rat]) -> int | None:
        """Parity of a homogeneous coordinate vector, None if mixed or zero."""
        parities = {self.parities[i] for i, c in enumerate(v) if c != 0}
        if len(parities) == 1:
            return parities.pop()
        return None


def _pair_sign(pi: int, pj: int) -> Rat:
    # sign relating c[j,i] to c[i,j]: +1 only when both vectors are odd
    return Fraction(1) if pi == 1 and pj == 1 else Fraction(-1)


@dataclass(frozen=True)
class LieSuperalgebra:
    """Structure-constant presentation of a Lie superalgebra.

    ``constants[(i, j)][k]`` is the coefficient of basis vector k in
    the bracket of vectors i and j, stored only for i <= j and with all
    zero entries removed.  The i > j values follow from skew
    supersymmetry; diagonal entries (i, i) are meaningful only for odd
    i (an even diagonal bracket is forced to vanish).
    """

    basis: GradedBasis
    constants: Mapping[tuple[int, int], Mapping[int, Rat]]
    name: str = ""

    def __post_init__(self):
        n = self.basis.dim
        for (i, j), terms in self.constants.items():
            if not (0 <= i <= j < n):
                raise InputError(f"constant key ({i}, {j}) out of range or unordered")
            if not terms:
                raise InputError(f"empty constant entry for ({i}, {j})")
            for k, c in terms.items():
                if not (0 <= k < n):
                    raise InputError(f"constant target {k} out of range")
                if not isinstance(c, Fraction) or c == 0:
                    raise InputError(f"constant for ({i},{j})->{k} must be a nonzero Fraction")

    @classmethod
    def from_index_table(
        cls,
        basis: GradedBasis,
        table: Iterable[tuple[int, int, Mapping[int, object]]],
        name: str = "",
    ) -> "LieSuperalgebra":
        """Build from (i, j, {k: coeff}) rows, any index order.

        Rows with i > j are folded onto (j, i) using skew supersymmetry.
        Listing the same unordered pair twice is rejected rather than
        silently summed: duplicate rows are almost always typos.
        """
        constants: dict[tuple[int, int], dict[int, Rat]] = {}
        seen: set[tuple[int, int]] = set()
        for i, j, terms in table:
            if not (0 <= i < basis.dim and 0 <= j < basis.dim):
                raise InputError(f"bracket indices ({i}, {j}) out of range")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InputError(f"duplicate bracket entry for pair {key}")
            seen.add(key)
            sign = Fraction(1)
            if i > j:
                sign = _pair_sign(basis.parities[i], basis.parities[j])
            entry: dict[int, Rat] = {}
            for k, c in terms.items():
                coeff = sign * rat(c)
                if coeff != 0:
                    entry[int(k)] = coeff
            if entry:
                constants[key] = entry
        return cls(basis=basis, constants=constants, name=name)

    @classmethod
    def from_label_table(
        cls,
        basis: GradedBasis,
        table: Iterable[tuple[str, str, Mapping[str, object]]],
        name: str = "",
    ) -> "LieSuperalgebra":
        rows = []
        for a, b, terms in table:
            rows.append(
                (
                    basis.index(a),
                    basis.index(b),
                    {basis.index(t): c for t, c in terms.items()},
                )
            )
        return cls.from_index_table(basis, rows, name=name)

    @property
    def dim(self) -> int:
        return self.basis.dim

    def bracket_pair(self, i: int, j: int) -> dict[int, Rat]:
        """Bracket of basis vectors i and j as a sparse {index: coeff} map."""
        if i <= j:
            return dict(self.constants.get((i, j), {}))
        sign = _pair_sign(self.basis.parities[i], self.basis.parities[j])
        return {k: sign * c for k, c in self.constants.get((j, i), {}).items()}

    def bracket(self, x: Sequence[Rat], y: Sequence[Rat]) -> list[Rat]:
        """Bracket of two coordinate vectors."""
        n = self.dim
        out = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in self.bracket_pair(i, j).items():
                    out[k] += xi * yj * c
        return out

    def ad_matrix(self, x: Sequence[Rat]) -> list[list[Rat]]:
        """Matrix of ad(x) = [x, -] acting on coordinate columns."""
        n = self.dim
        cols = []
        for j in range(n):
            basis_vec = [Fraction(0)] * n
            basis_vec[j] = Fraction(1)
            cols.append(self.bracket(list(x), basis_vec))
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def basis_vector(self, i: int) -> list[Rat]:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: tuple
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_grading_and_skew(g: LieSuperalgebra) -> list[Violation]:
    """Check the bracket respects the grading and skew supersymmetry.

    With constants stored on i <= j only, skew supersymmetry is automatic
    off the diagonal; what remains checkable is that diagonal brackets of
    even vectors vanish and every target has the correct parity.
    """
    out: list[Violation] = []
    parities = g.basis.parities
    labels = g.basis.labels
    for (i, j), terms in sorted(g.constants.items()):
        target_parity = (parities[i] + parities[j]) % 2
        if i == j and parities[i] == 0:
            out.append(
                Violation(
                    rule="skew",
                    witness=(labels[i], labels[i]),
                    message=f"[{labels[i]}, {labels[i]}] must vanish for an even vector",
                )
            )
            continue
        for k in sorted(terms):
            if parities[k] != target_parity:
                out.append(
                    Violation(
                        rule="grading",
                        witness=(labels[i], labels[j], labels[k]),
                        message=(
                            f"[{labels[i]}, {labels[j]}] has a component on {labels[k]} "
                            f"of parity {parities[k]}, expected {target_parity}"
                        ),
                    )
                )
    return out


def _double_bracket(g: LieSuperalgebra, i: int, j: int, k: int) -> dict[int, Rat]:
    """[[e_i, e_j], e_k] as a sparse map."""
    out: dict[int, Rat] = {}
    for m, c in g.bracket_pair(i, j).items():
        for t, d in g.bracket_pair(m, k).items():
            val = out.get(t, Fraction(0)) + c * d
            if val:
                out[t] = val
            elif t in out:
                del out[t]
    return out


def validate_super_jacobi(g: LieSuperalgebra) -> list[Violation]:
    """Check the cyclic super Jacobi identity on all basis triples."""
    out: list[Violation] = []
    n = g.dim
    p = g.basis.parities
    labels = g.basis.labels
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                acc: dict[int, Rat] = {}
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    sign = Fraction(-1) ** (p[c] * p[a])
                    for t, val in _double_bracket(g, a, b, c).items():
                        new = acc.get(t, Fraction(0)) + sign * val
                        if new:
                            acc[t] = new
                        elif t in acc:
                            del acc[t]
                if acc:
                    out.append(
                        Violation(
                            rule="jacobi",
                            witness=(labels[i], labels[j], labels[k]),
                            message=(
                                f"super Jacobi fails on ({labels[i]}, {labels[j]}, "
                                f"{labels[k]}): residual {_sparse_str(g, acc)}"
                            ),
                        )
                    )
    return out


def _sparse_str(g: LieSuperalgebra, terms: Mapping[int, Rat]) -> str:
    from .linalg import rat_str

    parts = [f"{rat_str(c)}*{g.basis.labels[k]}" for k, c in sorted(terms.items())]
    return " + ".join(parts) if parts else "0"


def validate_lie_superalgebra(g: LieSuperalgebra) -> ValidationReport:
    violations = validate_grading_and_skew(g)
    violations += validate_super_jacobi(g)
    return ValidationReport(tuple(violations))


@dataclass(frozen=True)
class Subspace:
    """Subspace of the underlying graded vector space, rows in RREF."""

    ambient: GradedBasis
    rows: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def from_vectors(cls, ambient: GradedBasis, vectors: Iterable[Sequence[Rat]]) -> "Subspace":
        rows = echelon_basis([list(v) for v in vectors])
        return cls(ambient=ambient, rows=tuple(tuple(r) for r in rows))

    def contains(self, v: Sequence[Rat]) -> bool:
        stacked = [list(r) for r in self.rows] + [list(v)]
        return len(echelon_basis(stacked)) == self.dim

    def is_homogeneous(self) -> bool:
        """True when the subspace is spanned by its even and odd parts."""
        ne = self.ambient.even_dim
        even_parts = []
        odd_parts = []
        for r in self.rows:
            even_parts.append(list(r[:ne]) + [Fraction(0)] * (self.ambient.dim - ne))
            odd_parts.append([Fraction(0)] * ne + list(r[ne:]))
        pieces = echelon_basis(even_parts + odd_parts)
        return len(pieces) == self.dim


def derived_series(g: LieSuperalgebra, max_steps: int = 64) -> list[Subspace]:
    """Derived series g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ... until it stabilizes."""
    ambient = g.basis
    current = Subspace.from_vectors(ambient, [g.basis_vector(i) for i in range(g.dim)])
    series = [current]
    for _ in range(max_steps):
        vectors = []
        rows = [list(r) for r in current.rows]
        for a in rows:
            for b in rows:
                vectors.append(g.bracket(a, b))
        nxt = Subspace.from_vectors(ambient, vectors)
        series.append(nxt)
        if nxt.dim == current.dim:
            break
        current = nxt
        if nxt.dim == 0:
            break
    return series


def is_solvable(g: LieSuperalgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def center(g: LieSuperalgebra) -> Subspace:
    """Center {x : [x, y] = 0 for all y}, computed per parity block.

    For x = sum_i x_i e_i the condition is sum_i x_i c_{i,j}^k = 0 for
    every j, k.  Solving separately for even and odd x keeps the result
    homogeneous and the stacked echelon rows canonical.
    """
    n = g.dim
    ne = g.basis.even_dim
    rows_out: list[list[Rat]] = []
    for lo, hi in ((0, ne), (ne, n)):
        width = hi - lo
        if width == 0:
            continue
        system: list[list[Rat]] = []
        for j in range(n):
            cols: dict[int, dict[int, Rat]] = {}
            for i in range(lo, hi):
                for k, c in g.bracket_pair(i, j).items():
                    cols.setdefault(k, {})[i - lo] = c
            for k, coeffs in sorted(cols.items()):
                system.append([coeffs.get(t, Fraction(0)) for t in range(width)])
        if not system:
            kernel = [[Fraction(1) if t == s else Fraction(0) for t in range(width)] for s in range(width)]
        else:
            kernel = nullspace(system, cols=width)
        for v in kernel:
            full = [Fraction(0)] * n
            for t, c in enumerate(v):
                full[lo + t] = c
            rows_out.append(full)
    rows = echelon_basis(rows_out)
    return Subspace(ambient=g.basis, rows=tuple(tuple(r) for r in rows))


def reorder_basis(g: LieSuperalgebra, new_labels: Sequence[str]) -> LieSuperalgebra:
    """Same algebra with basis vectors listed in a new order.

    The new order must still put even vectors first.
    """
    if sorted(new_labels) != sorted(g.basis.labels):
        raise InputError("new order must be a permutation of the basis labels")
    old_index = {lab: i for i, lab in enumerate(g.basis.labels)}
    perm = [old_index[lab] for lab in new_labels]  # new position -> old index
    inv = {old: new for new, old in enumerate(perm)}
    basis = GradedBasis(
        labels=tuple(new_labels),
        parities=tuple(g.basis.parities[old_index[lab]] for lab in new_labels),
    )
    table = []
    for (i, j), terms in g.constants.items():
        table.append((inv[i], inv[j], {inv[k]: c for k, c in terms.items()}))
    return LieSuperalgebra.from_index_table(basis, table, name=g.name)

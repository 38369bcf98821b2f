"""Construction of the degree-d one-large-multiplicity lattice maps.

An orbit datum is a degree d together with orbit lengths (n_2, ..., n_m);
the first orbit length is fixed at 2 by convention.  The associated matrix
acts on the ordered basis L, E(1,0), E(1,1), E(2,0), ..., E(m, n_m - 1) of
a rank-(N+1) lattice, N = 2 + sum(n_i), and its characteristic polynomial
factors as (X - 1) times the auxiliary polynomial

    (X^2-(d-1)X-1) prod_i (X^{n_i}+1) + X sum_i prod_{j != i} (X^{n_j}+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import matrices, polys
from .errors import InvalidOrbitData, StructureViolation


@dataclass(frozen=True)
class OrbitData:
    """Degree d >= 1 and orbit lengths (n_2, ..., n_m), each >= 1.

    m = 1 + len(tuple) must satisfy m <= 2d - 1.  Entries >= 2 are required
    only by the root-theoretic operations, which enforce it themselves.
    """

    d: int
    tuple: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "tuple", tuple(int(n) for n in self.tuple))
        if self.d < 1:
            raise InvalidOrbitData(f"degree must be >= 1, got {self.d}")
        if any(n < 1 for n in self.tuple):
            raise InvalidOrbitData(f"orbit lengths must be >= 1, got {self.tuple}")
        if self.m > 2 * self.d - 1:
            raise InvalidOrbitData(
                f"m = {self.m} exceeds 2d-1 = {2 * self.d - 1} for d = {self.d}"
            )

    @property
    def m(self) -> int:
        return 1 + len(self.tuple)

    @property
    def matrix_size(self) -> int:
        return 3 + sum(self.tuple)


def auxiliary_polynomial(o: OrbitData) -> tuple:
    """The degree-(2 + sum n_i) factor of the characteristic polynomial."""
    quadratic = (-1, -(o.d - 1), 1)
    blocks = [polys.binomial_xn_plus_1(n) for n in o.tuple]
    out = polys.mul(quadratic, polys.mul_many(blocks))
    for i in range(len(blocks)):
        others = polys.mul_many([b for j, b in enumerate(blocks) if j != i])
        out = polys.add(out, polys.shift(others, 1))
    assert polys.degree(out) == 2 + sum(o.tuple)
    return out


def basis_labels(o: OrbitData) -> list:
    labels = ["L", "E(1,0)", "E(1,1)"]
    for i, n in enumerate(o.tuple, start=2):
        labels.extend(f"E({i},{j})" for j in range(n))
    return labels


def _orbit_offsets(o: OrbitData) -> list:
    """Start index of each orbit block (orbit 1 first) in the basis."""
    offsets = [1]
    pos = 3
    for n in o.tuple:
        offsets.append(pos)
        pos += n
    return offsets


def jonquieres_matrix(o: OrbitData) -> tuple:
    """The lattice action on the ordered basis; columns are images."""
    d = o.d
    n_total = o.matrix_size
    offsets = _orbit_offsets(o)
    col = [[0] * n_total for _ in range(n_total)]
    heads = [offsets[i] for i in range(1, len(offsets))]  # E(i,0), i >= 2

    # image of L
    col[0][0] = d
    col[0][1] = -(d - 1)
    for h in heads:
        col[0][h] = -1
    # orbit 1 (length 2 by convention): E(1,0) -> E(1,1)
    col[1][2] = 1
    # image of E(1,1)
    col[2][0] = d - 1
    col[2][1] = -(d - 2)
    for h in heads:
        col[2][h] = -1
    # orbits i >= 2
    for idx, n in enumerate(o.tuple):
        start = offsets[idx + 1]
        for j in range(n - 1):
            col[start + j][start + j + 1] = 1
        last = start + n - 1
        col[last][0] = 1
        col[last][1] = -1
        col[last][start] = -1

    return tuple(tuple(col[j][i] for j in range(n_total)) for i in range(n_total))


def intersection_form(n: int) -> tuple:
    assert n >= 1
    return tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n)) for i in range(n)
    )


def defect_matrix(o: OrbitData) -> tuple:
    """J Q J^T - Q: rank <= 1 perturbation supported on the first two rows."""
    c = 2 * o.d - 1 - o.m
    n = o.matrix_size
    h = [[0] * n for _ in range(n)]
    h[0][0] = c
    h[0][1] = -c
    h[1][0] = -c
    h[1][1] = c
    return tuple(tuple(row) for row in h)


@dataclass(frozen=True)
class StructureReport:
    orbit: OrbitData
    char_matches: bool
    intersection_matches: bool
    canonical_row: tuple
    canonical_row_fixed: bool
    defect_scale: int

    @property
    def all_pass(self) -> bool:
        expected_fixed = self.defect_scale == 0
        return (
            self.char_matches
            and self.intersection_matches
            and self.canonical_row_fixed == expected_fixed
        )


def verify_structure(o: OrbitData) -> StructureReport:
    """Check the three structural identities exactly.

    (a) char(J) = (X-1) * auxiliary polynomial; (b) J Q J^T - Q equals the
    defect matrix; (c) the row vector (3,1,...,1) is fixed by J exactly when
    m = 2d-1.  Failures of (a), (b) or of the iff in (c) raise
    StructureViolation: they cannot happen for valid inputs unless the
    construction itself is wrong.
    """
    j = jonquieres_matrix(o)
    n = o.matrix_size
    q = intersection_form(n)

    char = matrices.char_poly(j)
    expected_char = polys.mul((-1, 1), auxiliary_polynomial(o))
    char_ok = char == expected_char

    defect = matrices.mat_sub(matrices.mat_mul(matrices.mat_mul(j, q), matrices.transpose(j)), q)
    defect_ok = defect == defect_matrix(o)

    canonical = (3,) + (1,) * (n - 1)
    row = matrices.vec_mat(canonical, j)
    fixed = row == canonical

    c = 2 * o.d - 1 - o.m
    report = StructureReport(o, char_ok, defect_ok, row, fixed, c)
    if not char_ok:
        raise StructureViolation(f"char(J) != (X-1)*p for {o}")
    if not defect_ok:
        raise StructureViolation(f"J Q J^T - Q != H for {o}")
    if fixed != (c == 0):
        raise StructureViolation(f"canonical row fixed <=> m = 2d-1 failed for {o}")
    return report

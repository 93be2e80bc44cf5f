"""Faithful 3x3 integer-matrix representation of the special Sturmian monoid.

A represented morphism has the block shape

    ( A B 0 )
    ( C D 0 )      with  AD - BC = 1  and non-negative entries,
    ( E F 1 )

the top-left block being its incidence matrix.  Membership in the image
monoid is decided by two inequality pairs, and members factor back into
generator words by peeling one generator matrix at a time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import MembershipError
from .morphisms import D, DT, G, GT, GenWord, Generator, Mat2, parse_int_rows

Rows = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class Mat3:
    """3x3 integer matrix as immutable rows."""

    rows: Rows

    def __post_init__(self):
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("need 3x3 rows")
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @classmethod
    def identity(cls) -> Mat3:
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __mul__(self, other: Mat3) -> Mat3:
        if not isinstance(other, Mat3):
            return NotImplemented
        x, y = self.rows, other.rows
        return Mat3(
            tuple(
                tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
                for i in range(3)
            )
        )

    def __pow__(self, k: int) -> Mat3:
        if k < 0:
            raise ValueError("negative power")
        out, base = Mat3.identity(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def det(self) -> int:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def block(self) -> Mat2:
        """Top-left 2x2 block (the incidence matrix for monoid members)."""
        return Mat2(self.rows[0][0], self.rows[0][1], self.rows[1][0], self.rows[1][1])

    def named(self) -> tuple[int, int, int, int, int, int]:
        """(A, B, C, D, E, F) of the monoid shape."""
        return (
            self.rows[0][0],
            self.rows[0][1],
            self.rows[1][0],
            self.rows[1][1],
            self.rows[2][0],
            self.rows[2][1],
        )

    def has_monoid_shape(self) -> bool:
        return (
            self.rows[0][2] == 0 and self.rows[1][2] == 0 and self.rows[2][2] == 1
        )

    def inverse(self) -> Mat3:
        """Closed-form inverse for the monoid shape with determinant 1."""
        if not self.has_monoid_shape():
            raise MembershipError("third column != (0,0,1)")
        a, b, c, d, e, f = self.named()
        if a * d - b * c != 1:
            raise MembershipError("AD-BC=1")
        return Mat3(
            (
                (d, -b, 0),
                (-c, a, 0),
                (f * c - e * d, b * e - f * a, 1),
            )
        )

    def apply(self, vec):
        """Matrix times 3-vector; entries may be int, Fraction or QuadExt."""
        x, y, z = vec
        return tuple(
            r[0] * x + r[1] * y + r[2] * z for r in self.rows
        )

    def __str__(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))

    @classmethod
    def parse(cls, text: str) -> Mat3:
        return cls(tuple(tuple(r) for r in parse_int_rows(text, 3)))


REP_GEN = {
    GT: Mat3(((1, 1, 0), (0, 1, 0), (0, 1, 1))),
    G: Mat3(((1, 1, 0), (0, 1, 0), (0, 0, 1))),
    DT: Mat3(((1, 0, 0), (1, 1, 0), (0, 0, 1))),
    D: Mat3(((1, 0, 0), (1, 1, 0), (1, 0, 1))),
}


def rep_gen(g: Generator) -> Mat3:
    return REP_GEN[g]


def rep(word: GenWord) -> Mat3:
    """Representation matrix of a generator word (ordered product)."""
    out = Mat3.identity()
    for g in word:
        out = out * REP_GEN[g]
    return out


def rep_exchange() -> Mat3:
    """Matrix acting on parameter vectors like the letter-exchange morphism:
    (l0, l1, rho) -> (l1, l0, l0+l1-rho)."""
    return Mat3(((0, 1, 0), (1, 0, 0), (1, 1, -1)))


# -- cones ---------------------------------------------------------------

CONE_IDS = ("C1", "C2", "C3")


def cone_contains(cone: str, vec) -> bool:
    """Exact test of the defining inequalities; vector entries may be int,
    Fraction or QuadExt."""
    x, y, z = vec
    if cone == "C1":
        return x >= 0 and y >= 0 and 0 <= z and z <= x + y
    if cone == "C2":
        return x >= 0 and y <= 0 and y <= z and z <= x
    if cone == "C3":
        return x == 0 and y == 0 and z >= 0
    raise ValueError(f"unknown cone {cone!r}")


# -- membership ------------------------------------------------------------


@dataclass(frozen=True)
class Membership:
    ok: bool
    certificate: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_membership(matrix: Mat3) -> Membership:
    """Decide whether the matrix represents a morphism of the monoid.

    Checks, in order: block shape, non-negativity, determinant of the
    block, E < A+C, F < B+D, -C <= CF-DE < D.  The certificate names the
    first violated constraint.
    """
    if not matrix.has_monoid_shape():
        return Membership(False, "third column != (0,0,1)")
    a, b, c, d, e, f = matrix.named()
    if min(a, b, c, d, e, f) < 0:
        return Membership(False, "entries >= 0")
    if a * d - b * c != 1:
        return Membership(False, "AD-BC=1")
    if not e < a + c:
        return Membership(False, "E<A+C")
    if not f < b + d:
        return Membership(False, "F<B+D")
    t = c * f - d * e
    if not -c <= t:
        return Membership(False, "-C<=CF-DE")
    if not t < d:
        return Membership(False, "CF-DE<D")
    # equivalent companion bound, implied for accepted matrices
    assert -a < a * f - b * e <= b
    return Membership(True)


_SWAP = {G: DT, GT: D, D: GT, DT: G}


def decompose(matrix: Mat3) -> GenWord:
    """Factor a member matrix into a generator word with rep(word) == matrix.

    Peeling recursion on the first-column sum A+C:
      C = 0        ->  G^(B-F) G'^F
      B = 0        ->  D'^(C-E) D^E
      A>=C, B>=D   ->  peel G' when C<=E and D<=F, else peel G
      A<=C, B<=D   ->  conjugate by the swap of the two letters, which
                       exchanges G<->D' and G'<->D, and continue
    Each peel strictly lowers A+C of the matrix being peeled.
    """
    verdict = check_membership(matrix)
    if not verdict:
        raise MembershipError(verdict.certificate)
    tokens: list[Generator] = []
    swapped = False
    a, b, c, d, e, f = matrix.named()

    def emit(gen: Generator, count: int = 1) -> None:
        g = _SWAP[gen] if swapped else gen
        tokens.extend([g] * count)

    while True:
        if c == 0:
            # det forces A = D = 1 here, and the inequalities pin E = 0
            emit(G, b - f)
            emit(GT, f)
            break
        if b == 0:
            emit(DT, c - e)
            emit(D, e)
            break
        if a >= c and b >= d:
            metric = a + c
            if c <= e and d <= f:
                emit(GT)
                a, b, e, f = a - c, b - d, e - c, f - d
            else:
                assert e < a and f < b, "peel guard violated"
                emit(G)
                a, b = a - c, b - d
            assert a + c < metric, "peel did not shrink the first column sum"
        else:
            assert a <= c and b <= d, "block dichotomy violated"
            a, b, c, d, e, f = d, c, b, a, f, e
            swapped = not swapped
    return tuple(tokens)

"""Built-in example structures.

Every catalog entry is verified against its full check suite the first time
the catalog is built; a failing entry is a packaging bug and raises.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import ConsistencyError
from .linalg import Mat
from .scalars import GF, QQ
from .structures import (HomHopfAlgebra, check_hom_hopf, classical_hopf,
                         yau_twist)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    obj: object
    note: str = ""


def z2_group_algebra(field=QQ):
    """Group algebra of the two-element group; basis (1, g)."""
    return classical_hopf(
        field,
        mul_table=[[[1, 0], [0, 1]],
                   [[0, 1], [1, 0]]],
        comul_table=[[[1, 0], [0, 0]],
                     [[0, 0], [0, 1]]],
        unit=[1, 0],
        counit=[1, 1],
        antipode=[[1, 0], [0, 1]])


def z3_group_algebra(field):
    """Group algebra of the cyclic group of order three; basis (1, g, g^2)."""
    def vec(k):
        return [1 if i == k else 0 for i in range(3)]
    mul = [[vec((i + j) % 3) for j in range(3)] for i in range(3)]
    comul = [[[1 if (j == i and k == i) else 0 for k in range(3)]
              for j in range(3)] for i in range(3)]
    antipode = [[1 if i == (-j) % 3 else 0 for j in range(3)] for i in range(3)]
    return classical_hopf(field, mul, comul, unit=[1, 0, 0],
                          counit=[1, 1, 1], antipode=antipode)


def sweedler_h4(field=QQ):
    """Sweedler's four-dimensional Hopf algebra; basis (1, g, x, gx).

    Relations g^2 = 1, x^2 = 0, xg = -gx; the coproduct sends g to g ⊗ g and
    x to x ⊗ 1 + g ⊗ x.
    """
    e0, e1, e2, e3 = ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1])
    z = [0, 0, 0, 0]
    m3 = [0, 0, 0, -1]
    m2 = [0, 0, -1, 0]
    mul = [
        [e0, e1, e2, e3],
        [e1, e0, e3, e2],
        [e2, m3, z, z],
        [e3, m2, z, z],
    ]
    comul = [
        [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],   # 1 ⊗ 1
        [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],   # g ⊗ g
        [[0, 0, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, 0]],   # x ⊗ 1 + g ⊗ x
        [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, 0]],   # gx ⊗ g + 1 ⊗ gx
    ]
    antipode = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ]
    return classical_hopf(field, mul, comul, unit=[1, 0, 0, 0],
                          counit=[1, 1, 0, 0], antipode=antipode)


def h4_sign_endo(field=QQ):
    """The Hopf endomorphism of Sweedler's algebra negating x and gx."""
    return Mat.from_rows(field, [[1, 0, 0, 0], [0, 1, 0, 0],
                                 [0, 0, -1, 0], [0, 0, 0, -1]])


def z3_inversion_endo(field):
    """The inversion endomorphism g ↦ g^2 of the order-three group algebra."""
    return Mat.from_rows(field, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])


@lru_cache(maxsize=None)
def catalog():
    """Named built-in structures, each verified by its check suite."""
    h4 = sweedler_h4()
    h4_endo = h4_sign_endo()
    z3 = z3_group_algebra(GF(7))
    z3_endo = z3_inversion_endo(GF(7))
    entries = [
        CatalogEntry("z2-group", "hopf", z2_group_algebra(),
                     "group algebra of Z2 over the rationals, alpha = id"),
        CatalogEntry("h4-sweedler", "hopf", h4,
                     "Sweedler's 4-dimensional Hopf algebra, alpha = id"),
        CatalogEntry("h4-sweedler-twisted", "hopf", yau_twist(h4, h4_endo),
                     "Sweedler's algebra twisted along x -> -x"),
        CatalogEntry("z3-gf7-frobenius", "hopf", yau_twist(z3, z3_endo),
                     "Z3 group algebra over GF(7) twisted along g -> g^2"),
        CatalogEntry("h4-alpha-minus", "map", h4_endo,
                     "the twisting endomorphism x -> -x of h4-sweedler"),
        CatalogEntry("z3-inversion", "map", z3_endo,
                     "the inversion endomorphism of the Z3 group algebra"),
    ]
    for entry in entries:
        if isinstance(entry.obj, HomHopfAlgebra):
            rep = check_hom_hopf(entry.obj)
            if not rep.passed:
                raise ConsistencyError(
                    "catalog entry %s fails its check suite:\n%s"
                    % (entry.name, rep.render()))
    return {e.name: e for e in entries}

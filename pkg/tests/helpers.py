"""Random data shared by the test modules."""

from poisson_homog import linalg as la
from poisson_homog.double import is_nilpotent
from poisson_homog.exterior import Multivector, basis_keys
from poisson_homog.lie import LieAlgebraData, ad_matrix

SL2 = LieAlgebraData.from_brackets(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)},
                                   ("H", "E", "F"))
AFF2 = LieAlgebraData.from_brackets(2, {(0, 1): (0, 1)}, ("x1", "x2"))
BOOK = LieAlgebraData.from_brackets(3, {(0, 1): (0, 1, 0), (0, 2): (0, 0, 1)})
HEIS = LieAlgebraData.from_brackets(3, {(0, 1): (0, 0, 1)})


def random_vector(rng, n, lo=-3, hi=3):
    return tuple(rng.randint(lo, hi) for _ in range(n))


def random_multivector(rng, n, k, lo=-3, hi=3):
    return Multivector.from_dense(n, k, [rng.randint(lo, hi) for _ in basis_keys(n, k)])


def nilpotent_directions(alg: LieAlgebraData):
    """Basis vectors and pairwise sums with nilpotent ad."""
    n = alg.dim
    cands = [la.unit(n, i) for i in range(n)]
    cands += [la.add(la.unit(n, i), la.unit(n, j)) for i in range(n) for j in range(i + 1, n)]
    return [z for z in cands if is_nilpotent(ad_matrix(z, alg))]


def random_generators(rng, dirs, max_count=3):
    out = []
    for _ in range(rng.randint(0, max_count)):
        z = rng.choice(dirs)
        c = rng.choice([-2, -1, 1, 2])
        out.append(la.scale(c, z))
    return out

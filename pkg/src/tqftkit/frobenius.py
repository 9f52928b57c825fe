"""Frobenius algebras over the rationals.

The full presentation carries a product, unit, coproduct and counit on a
basis-equipped space; the economy presentation carries only the algebra
and a nondegenerate invariant bilinear pairing.  ``from_economy`` and
``to_economy`` convert between the two: the counit is pairing against
the unit, the coproduct tensors against the copairing (the inverse Gram
matrix), and in the other direction the pairing is the counit of a
product.  The round trip is exact.

Morphisms are maps that are simultaneously algebra and coalgebra maps;
they are automatically invertible, and ``morphism_inverse`` computes the
inverse by the duality sandwich (copairing of the source, counit-product
pairing of the target) rather than by Gaussian elimination.

``admits_frobenius_form`` decides whether an associative unital algebra
carries any nondegenerate invariant pairing.  Every invariant pairing is
of the form (a, b) -> lam(a.b) for a linear functional lam, so the
question reduces to whether the Gram determinant, a polynomial of degree
at most dim in each of lam's dim coefficients, vanishes identically;
evaluating it on the grid {0..dim}^dim decides that deterministically.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .exactlin import (
    Matrix,
    ShapeError,
    inverse,
    kron,
    matmul,
    matrix_from_json,
    matrix_to_json,
    rank,
    scalar_from_str,
    scalar_to_str,
    swap_matrix,
)

__all__ = [
    "AxiomReport",
    "BilinearPairing",
    "FrobeniusAlgebra",
    "NotAFrobeniusMorphism",
    "NotAssociative",
    "NotUnital",
    "PairingDegenerate",
    "PairingNotInvariant",
    "admits_frobenius_form",
    "algebra_from_json",
    "algebra_to_json",
    "check_axioms",
    "check_morphism",
    "from_economy",
    "morphism_inverse",
    "to_economy",
]


class NotAssociative(ValueError):
    pass


class NotUnital(ValueError):
    pass


class PairingDegenerate(ValueError):
    def __init__(self, found_rank: int, dim: int):
        self.rank = found_rank
        super().__init__(f"pairing has rank {found_rank} < {dim}")


class PairingNotInvariant(ValueError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        i, j, k = witness
        super().__init__(
            f"pairing is not invariant: <b{i}.b{j}, b{k}> != <b{i}, b{j}.b{k}>"
        )


class NotAFrobeniusMorphism(ValueError):
    EQUATIONS = (
        "algebra map (mu' . (psi (x) psi) = psi . mu)",
        "unit (eta' = psi . eta)",
        "coalgebra map ((psi (x) psi) . delta = delta' . psi)",
        "counit (eps = eps' . psi)",
    )

    def __init__(self, equation_index: int):
        self.equation_index = equation_index
        super().__init__(
            f"equation {equation_index} fails: {self.EQUATIONS[equation_index - 1]}"
        )


@dataclass(frozen=True)
class FrobeniusAlgebra:
    """Structure maps of a Frobenius algebra on a chosen basis.

    Shapes: mu is dim x dim^2, eta is dim x 1, delta is dim^2 x dim and
    eps is 1 x dim.  Only shapes are enforced here; the axioms are a
    separate, reportable check.
    """

    dim: int
    mu: Matrix
    eta: Matrix
    delta: Matrix
    eps: Matrix
    basis_names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ShapeError("dimension must be positive")
        for name, mat, shape in (
            ("mu", self.mu, (n, n * n)),
            ("eta", self.eta, (n, 1)),
            ("delta", self.delta, (n * n, n)),
            ("eps", self.eps, (1, n)),
        ):
            if mat.shape != shape:
                raise ShapeError(
                    f"{name} must be {shape[0]}x{shape[1]}, got {mat.rows}x{mat.cols}"
                )
        if self.basis_names is not None and len(self.basis_names) != n:
            raise ShapeError("basis_names length must equal dim")


@dataclass(frozen=True)
class BilinearPairing:
    dim: int
    gram: Matrix

    def __post_init__(self):
        if self.gram.shape != (self.dim, self.dim):
            raise ShapeError(
                f"gram must be {self.dim}x{self.dim}, got {self.gram.rows}x{self.gram.cols}"
            )


@dataclass(frozen=True)
class AxiomReport:
    assoc: bool
    unit: bool
    coassoc: bool
    counit: bool
    frobenius: bool
    commutative: bool

    @property
    def is_frobenius(self) -> bool:
        """The five structural axioms; commutativity is reported separately."""
        return self.assoc and self.unit and self.coassoc and self.counit and self.frobenius

    def to_json(self) -> dict:
        return {
            "assoc": self.assoc,
            "unit": self.unit,
            "coassoc": self.coassoc,
            "counit": self.counit,
            "frobenius": self.frobenius,
            "commutative": self.commutative,
        }

    def describe(self) -> str:
        return "\n".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in self.to_json().items())


def check_axioms(alg: FrobeniusAlgebra) -> AxiomReport:
    n = alg.dim
    eye = Matrix.identity(n)
    mu, eta, delta, eps = alg.mu, alg.eta, alg.delta, alg.eps
    assoc = matmul(mu, kron(mu, eye)) == matmul(mu, kron(eye, mu))
    unit = matmul(mu, kron(eta, eye)) == eye and matmul(mu, kron(eye, eta)) == eye
    coassoc = matmul(kron(delta, eye), delta) == matmul(kron(eye, delta), delta)
    counit = matmul(kron(eps, eye), delta) == eye and matmul(kron(eye, eps), delta) == eye
    middle = matmul(delta, mu)
    frobenius = (
        matmul(kron(mu, eye), kron(eye, delta)) == middle
        and matmul(kron(eye, mu), kron(delta, eye)) == middle
    )
    commutative = matmul(mu, swap_matrix(n, n)) == mu
    return AxiomReport(assoc, unit, coassoc, counit, frobenius, commutative)


def _check_algebra(dim: int, mu: Matrix, eta: Matrix) -> None:
    eye = Matrix.identity(dim)
    if mu.shape != (dim, dim * dim):
        raise ShapeError(f"mu must be {dim}x{dim * dim}, got {mu.rows}x{mu.cols}")
    if eta.shape != (dim, 1):
        raise ShapeError(f"eta must be {dim}x1, got {eta.rows}x{eta.cols}")
    if matmul(mu, kron(mu, eye)) != matmul(mu, kron(eye, mu)):
        raise NotAssociative("product is not associative")
    if matmul(mu, kron(eta, eye)) != eye or matmul(mu, kron(eye, eta)) != eye:
        raise NotUnital("eta is not a two-sided unit")


def from_economy(
    dim: int,
    mu: Matrix,
    eta: Matrix,
    pairing: BilinearPairing,
    basis_names: Optional[Sequence[str]] = None,
) -> FrobeniusAlgebra:
    """Build the full structure from an algebra and an invariant
    nondegenerate pairing.

    Invariance is verified on all basis triples (sufficient by
    bilinearity), nondegeneracy by the rank of the Gram matrix.  The
    counit pairs against the unit; the coproduct multiplies into the
    copairing, which is the flattened inverse Gram matrix.
    """
    _check_algebra(dim, mu, eta)
    gram = pairing.gram
    if pairing.dim != dim:
        raise ShapeError(f"pairing is for dimension {pairing.dim}, algebra has {dim}")
    found = rank(gram)
    if found < dim:
        raise PairingDegenerate(found, dim)
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                lhs = sum(
                    mu.entry(m, i * dim + j) * gram.entry(m, k) for m in range(dim)
                )
                rhs = sum(
                    mu.entry(m, j * dim + k) * gram.entry(i, m) for m in range(dim)
                )
                if lhs != rhs:
                    raise PairingNotInvariant((i, j, k))
    # eps(a) = <a, unit>
    eps = Matrix(
        1,
        dim,
        [
            sum(gram.entry(k, j) * eta.entry(j, 0) for j in range(dim))
            for k in range(dim)
        ],
    )
    # delta(a) = (mu (x) id)(a (x) c) with c the flattened inverse Gram matrix
    c = inverse(gram)
    delta_entries = []
    for m in range(dim):
        for j in range(dim):
            row = []
            for k in range(dim):
                row.append(
                    sum(
                        c.entry(i, j) * mu.entry(m, k * dim + i)
                        for i in range(dim)
                    )
                )
            delta_entries.append(row)
    delta = Matrix.from_rows(delta_entries)
    return FrobeniusAlgebra(
        dim, mu, eta, delta, eps,
        tuple(basis_names) if basis_names is not None else None,
    )


def to_economy(alg: FrobeniusAlgebra) -> BilinearPairing:
    """Pairing <a, b> = eps(a.b); nondegenerate whenever the axioms hold."""
    rows = []
    for i in range(alg.dim):
        row = []
        for j in range(alg.dim):
            row.append(
                sum(
                    alg.eps.entry(0, m) * alg.mu.entry(m, i * alg.dim + j)
                    for m in range(alg.dim)
                )
            )
        rows.append(row)
    return BilinearPairing(alg.dim, Matrix.from_rows(rows))


def check_morphism(source: FrobeniusAlgebra, target: FrobeniusAlgebra, psi: Matrix) -> Optional[int]:
    """Index (1..4) of the first failing morphism equation, or None."""
    if psi.shape != (target.dim, source.dim):
        raise ShapeError(
            f"morphism must be {target.dim}x{source.dim}, got {psi.rows}x{psi.cols}"
        )
    if matmul(target.mu, kron(psi, psi)) != matmul(psi, source.mu):
        return 1
    if target.eta != matmul(psi, source.eta):
        return 2
    if matmul(kron(psi, psi), source.delta) != matmul(target.delta, psi):
        return 3
    if source.eps != matmul(target.eps, psi):
        return 4
    return None


def morphism_inverse(source: FrobeniusAlgebra, target: FrobeniusAlgebra, psi: Matrix) -> Matrix:
    """Two-sided inverse of a Frobenius morphism by the duality sandwich.

    The copairing of the source is threaded through psi on its middle
    leg and contracted with the counit-product pairing of the target.
    """
    failing = check_morphism(source, target, psi)
    if failing is not None:
        raise NotAFrobeniusMorphism(failing)
    coev = matmul(source.delta, source.eta)  # dim^2 x 1
    ev = matmul(target.eps, target.mu)  # 1 x dim^2
    i_src = Matrix.identity(source.dim)
    i_tgt = Matrix.identity(target.dim)
    inv = matmul(
        kron(i_src, ev),
        matmul(kron(i_src, kron(psi, i_tgt)), kron(coev, i_tgt)),
    )
    assert matmul(inv, psi) == i_src and matmul(psi, inv) == i_tgt
    return inv


def admits_frobenius_form(dim: int, mu: Matrix, eta: Matrix) -> bool:
    """Whether any nondegenerate invariant pairing exists.

    Deterministic polynomial identity test: the Gram determinant of the
    pairing induced by a functional has per-variable degree at most dim,
    so if it vanishes on the whole grid {0..dim}^dim it is identically
    zero and no functional works.
    """
    _check_algebra(dim, mu, eta)
    for lam in itertools.product(range(dim + 1), repeat=dim):
        rows = []
        for i in range(dim):
            row = []
            for j in range(dim):
                row.append(
                    sum(lam[m] * mu.entry(m, i * dim + j) for m in range(dim))
                )
            rows.append(row)
        if rank(Matrix.from_rows(rows)) == dim:
            return True
    return False


# --- JSON ------------------------------------------------------------------


def algebra_to_json(alg: FrobeniusAlgebra) -> dict:
    obj = {"dim": alg.dim}
    if alg.basis_names is not None:
        obj["basis"] = list(alg.basis_names)
    obj["mu"] = matrix_to_json(alg.mu)
    obj["eta"] = [scalar_to_str(alg.eta.entry(i, 0)) for i in range(alg.dim)]
    obj["delta"] = matrix_to_json(alg.delta)
    obj["eps"] = [scalar_to_str(alg.eps.entry(0, j)) for j in range(alg.dim)]
    return obj


def algebra_from_json(obj: dict) -> FrobeniusAlgebra:
    """Load an algebra from JSON, full or economy form.

    The economy form carries ``pairing`` instead of ``delta``/``eps``
    and is converted on load.
    """
    try:
        dim = int(obj["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed algebra JSON: {exc}") from exc
    basis = tuple(obj["basis"]) if "basis" in obj else None
    mu = matrix_from_json(obj["mu"], (dim, dim * dim))
    eta = Matrix(dim, 1, [scalar_from_str(x) for x in obj["eta"]])
    if "pairing" in obj:
        gram = matrix_from_json(obj["pairing"], (dim, dim))
        return from_economy(dim, mu, eta, BilinearPairing(dim, gram), basis)
    if "delta" not in obj or "eps" not in obj:
        raise ValueError("algebra JSON needs either 'pairing' or 'delta'+'eps'")
    delta = matrix_from_json(obj["delta"], (dim * dim, dim))
    eps = Matrix(1, dim, [scalar_from_str(x) for x in obj["eps"]])
    return FrobeniusAlgebra(dim, mu, eta, delta, eps, basis)


def load_algebra(path: str) -> FrobeniusAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return algebra_from_json(json.load(fh))

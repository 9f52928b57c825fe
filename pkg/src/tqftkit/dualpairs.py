"""Dual pairs and the one-dimensional bordism signature.

A dual pair is a pair of vector-space dimensions together with a
copairing ``b: k -> U (x) V`` and a pairing ``d: V (x) U -> k`` that
satisfy the two Zorro (snake) identities.  Those identities force
``dim U = dim V``, so the constructor rejects anything rectangular.

The signature has two object generators ``pp`` and ``pm`` (positively
and negatively oriented points), two morphism generators ``coev`` and
``ev``, and the two snake relations; the other two bent lines are
derivable with swaps, and the canonical closed loop is
``coev ; swap[pp,pm] ; ev``, whose value under any dual pair is the
common dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .evaluate import Interpretation, check_relations, eval_term
from .exactlin import (
    Matrix,
    ShapeError,
    kron,
    matmul,
    matrix_from_json,
    matrix_to_json,
    scalar_from_str,
)
from .terms import Compose, Gen, Id, Relation, Signature, Tensor, parse_term

__all__ = [
    "DualPair",
    "ZorroViolation",
    "bord1_signature",
    "dp_morphism_check",
    "dp_morphism_inverse",
    "dual_pair_interpretation",
    "dual_pair_from_json",
    "dual_pair_to_json",
    "loop_term",
    "standard_pair",
]


class ZorroViolation(ValueError):
    """One of the two snake identities fails; ``side`` names which."""

    def __init__(self, side: str, detail: str = ""):
        self.side = side
        msg = f"Zorro move fails on the {side} side"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


@dataclass(frozen=True)
class DualPair:
    dim_u: int
    dim_v: int
    b: Matrix  # (dim_u * dim_v) x 1
    d: Matrix  # 1 x (dim_v * dim_u)

    def __post_init__(self):
        if self.dim_u < 1 or self.dim_v < 1:
            raise ShapeError("dual pair dimensions must be positive")
        if self.b.shape != (self.dim_u * self.dim_v, 1):
            raise ShapeError(
                f"copairing must be {self.dim_u * self.dim_v}x1, got {self.b.rows}x{self.b.cols}"
            )
        if self.d.shape != (1, self.dim_v * self.dim_u):
            raise ShapeError(
                f"pairing must be 1x{self.dim_v * self.dim_u}, got {self.d.rows}x{self.d.cols}"
            )
        iu = Matrix.identity(self.dim_u)
        iv = Matrix.identity(self.dim_v)
        # (d (x) id_V) . (id_V (x) b) = id_V
        left = matmul(kron(self.d, iv), kron(iv, self.b))
        if left != iv:
            raise ZorroViolation("(d*id);(id*b)", "does not give the identity")
        # (id_U (x) d) . (b (x) id_U) = id_U
        right = matmul(kron(iu, self.d), kron(self.b, iu))
        if right != iu:
            raise ZorroViolation("(id*d);(b*id)", "does not give the identity")


def standard_pair(n: int) -> DualPair:
    """The coordinate pair on k^n: b = sum e_i (x) e_i*, d the evaluation."""
    flat = Matrix.identity(n)
    b = Matrix(n * n, 1, [flat.entry(i, j) for i in range(n) for j in range(n)])
    d = Matrix(1, n * n, [flat.entry(i, j) for i in range(n) for j in range(n)])
    return DualPair(n, n, b, d)


def bord1_signature() -> Signature:
    g0 = ["pp", "pm"]
    g1 = {
        "coev": ((), ("pp", "pm")),
        "ev": (("pm", "pp"), ()),
    }
    sig = Signature(g0, g1)
    snake_pp = Relation(
        "snake_pp",
        Compose(Tensor(Gen("coev"), Id(("pp",))), Tensor(Id(("pp",)), Gen("ev"))),
        Id(("pp",)),
    )
    snake_pm = Relation(
        "snake_pm",
        Compose(Tensor(Id(("pm",)), Gen("coev")), Tensor(Gen("ev"), Id(("pm",)))),
        Id(("pm",)),
    )
    return Signature(g0, g1, [snake_pp, snake_pm])


def loop_term():
    return parse_term("coev ; swap[pp,pm] ; ev", bord1_signature())


def dual_pair_interpretation(pair: DualPair) -> Interpretation:
    interp = Interpretation(
        bord1_signature(),
        {"pp": pair.dim_u, "pm": pair.dim_v},
        {"coev": pair.b, "ev": pair.d},
    )
    report = check_relations(interp)
    if not report.ok:
        raise ZorroViolation(", ".join(report.failing()))
    return interp


def loop_value(pair: DualPair):
    """Scalar assigned to the circle; equals the dimension of the pair."""
    return eval_term(loop_term(), dual_pair_interpretation(pair)).entry(0, 0)


def dp_morphism_check(p: DualPair, q: DualPair, f: Matrix, g: Matrix) -> bool:
    """Whether (f, g) intertwines the pairings: d_p = d_q.(g(x)f) and
    (f(x)g).b_p = b_q."""
    if f.shape != (q.dim_u, p.dim_u):
        raise ShapeError(f"f must be {q.dim_u}x{p.dim_u}, got {f.rows}x{f.cols}")
    if g.shape != (q.dim_v, p.dim_v):
        raise ShapeError(f"g must be {q.dim_v}x{p.dim_v}, got {g.rows}x{g.cols}")
    pairing_ok = matmul(q.d, kron(g, f)) == p.d
    copairing_ok = matmul(kron(f, g), p.b) == q.b
    return pairing_ok and copairing_ok


def dp_morphism_inverse(p: DualPair, q: DualPair, f: Matrix, g: Matrix) -> tuple[Matrix, Matrix]:
    """Two-sided inverse of a dual-pair morphism by the duality sandwich.

    The inverse of f threads b_p through g and contracts with d_q, and
    dually for g; no Gaussian elimination is involved.  Morphisms of
    dual pairs are automatically invertible, so once the morphism
    conditions hold the sandwich is guaranteed to be a two-sided inverse
    (which is verified before returning).
    """
    if not dp_morphism_check(p, q, f, g):
        raise ValueError("(f, g) is not a morphism of dual pairs")
    iu_p = Matrix.identity(p.dim_u)
    iu_q = Matrix.identity(q.dim_u)
    iv_p = Matrix.identity(p.dim_v)
    iv_q = Matrix.identity(q.dim_v)
    f_inv = matmul(
        kron(iu_p, q.d),
        matmul(kron(iu_p, kron(g, iu_q)), kron(p.b, iu_q)),
    )
    g_inv = matmul(
        kron(matmul(q.d, kron(iv_q, f)), iv_p),
        kron(iv_q, p.b),
    )
    assert matmul(f_inv, f) == iu_p and matmul(f, f_inv) == iu_q
    assert matmul(g_inv, g) == iv_p and matmul(g, g_inv) == iv_q
    return f_inv, g_inv


def dual_pair_to_json(pair: DualPair) -> dict:
    return {
        "dimU": pair.dim_u,
        "dimV": pair.dim_v,
        "b": matrix_to_json(pair.b),
        "d": matrix_to_json(pair.d),
    }


def _column_from_json(obj, length: int) -> Matrix:
    if obj and isinstance(obj[0], list):
        return matrix_from_json(obj)
    return Matrix(length, 1, [scalar_from_str(x) for x in obj])


def _row_from_json(obj, length: int) -> Matrix:
    if obj and isinstance(obj[0], list):
        return matrix_from_json(obj)
    return Matrix(1, length, [scalar_from_str(x) for x in obj])


def dual_pair_from_json(obj: dict) -> DualPair:
    try:
        dim_u = int(obj["dimU"])
        dim_v = int(obj["dimV"])
        b = _column_from_json(obj["b"], dim_u * dim_v)
        d = _row_from_json(obj["d"], dim_v * dim_u)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed dual pair JSON: {exc}") from exc
    return DualPair(dim_u, dim_v, b, d)

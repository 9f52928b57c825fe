"""Two-dimensional theories: circle signature, surfaces, reductions.

The signature has one object generator ``S1`` and four morphism
generators: ``pants`` (two circles merge), ``copants`` (one splits),
``cap`` (a disk grows a circle) and ``cup`` (a disk closes one).  Its
eleven relation pairs make interpretations exactly the commutative
Frobenius algebras: associativity and coassociativity (R1), the four
unit/counit equations (R2), the three pairwise equalities of the
three-term compatibility chain linking product and coproduct (R3), and
commutativity plus cocommutativity (R4).

A closed genus-g surface is evaluated through the canonical
decomposition ``cap ; (copants ; pants)^g ; cup``; its value is the
counit of the g-th power of the handle operator mu . delta applied to
the unit, and at genus one it equals the algebra's dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dualpairs import DualPair
from .evaluate import Interpretation, eval_term
from .exactlin import Matrix, matmul
from .frobenius import FrobeniusAlgebra, check_axioms
from .terms import (
    Compose,
    DualityData,
    Gen,
    Relation,
    Signature,
    Term,
    parse_term,
    render_term,
)

__all__ = [
    "ClosedSurface",
    "NotCommutative",
    "bord2_signature",
    "connected_sum_identity",
    "frobenius_interpretation",
    "genus_term",
    "handle_operator",
    "reduce_along_circle",
    "surface_invariant",
]


class NotCommutative(ValueError):
    pass


@dataclass(frozen=True)
class ClosedSurface:
    """A connected closed orientable surface, identified by its genus."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")


def _genus_of(surface: "ClosedSurface | int") -> int:
    if isinstance(surface, ClosedSurface):
        return surface.genus
    if surface < 0:
        raise ValueError("genus must be nonnegative")
    return surface


_SIG_CACHE: Signature | None = None


def bord2_signature() -> Signature:
    """Circle signature with the eleven relation pairs R1a..R4b."""
    global _SIG_CACHE
    if _SIG_CACHE is not None:
        return _SIG_CACHE
    g0 = ["S1"]
    g1 = {
        "pants": (("S1", "S1"), ("S1",)),
        "copants": (("S1",), ("S1", "S1")),
        "cap": ((), ("S1",)),
        "cup": (("S1",), ()),
    }
    sig = Signature(g0, g1)

    def t(text: str) -> Term:
        return parse_term(text, sig)

    frob_left = t("(id[S1] * copants) ; (pants * id[S1])")
    frob_mid = t("pants ; copants")
    frob_right = t("(copants * id[S1]) ; (id[S1] * pants)")
    relations = [
        Relation("R1a_assoc", t("(pants * id[S1]) ; pants"), t("(id[S1] * pants) ; pants")),
        Relation("R1b_coassoc", t("copants ; (copants * id[S1])"), t("copants ; (id[S1] * copants)")),
        Relation("R2a_unit_left", t("(cap * id[S1]) ; pants"), t("id[S1]")),
        Relation("R2b_unit_right", t("(id[S1] * cap) ; pants"), t("id[S1]")),
        Relation("R2c_counit_left", t("copants ; (cup * id[S1])"), t("id[S1]")),
        Relation("R2d_counit_right", t("copants ; (id[S1] * cup)"), t("id[S1]")),
        Relation("R3a_frobenius", frob_left, frob_mid),
        Relation("R3b_frobenius", frob_mid, frob_right),
        Relation("R3c_frobenius", frob_left, frob_right),
        Relation("R4a_commutative", t("swap[S1,S1] ; pants"), t("pants")),
        Relation("R4b_cocommutative", t("copants ; swap[S1,S1]"), t("copants")),
    ]
    duality = {
        "S1": DualityData(coev=t("cap ; copants"), pairing=t("pants ; cup"))
    }
    _SIG_CACHE = Signature(g0, g1, relations, duality)
    return _SIG_CACHE


def frobenius_interpretation(alg: FrobeniusAlgebra) -> Interpretation:
    """Interpretation sending pants, copants, cap, cup to mu, delta, eta, eps.

    Requires all axioms including commutativity; a commutative Frobenius
    algebra passes every relation of the signature, a noncommutative one
    fails exactly the two R4 pairs.
    """
    report = check_axioms(alg)
    if not report.is_frobenius:
        bad = [k for k, v in report.to_json().items() if not v and k != "commutative"]
        raise ValueError(f"not a Frobenius algebra, failing axioms: {', '.join(bad)}")
    if not report.commutative:
        raise NotCommutative(
            "algebra is not commutative; the R4 relations would fail"
        )
    return Interpretation(
        bord2_signature(),
        {"S1": alg.dim},
        {"pants": alg.mu, "copants": alg.delta, "cap": alg.eta, "cup": alg.eps},
    )


def genus_term(surface: ClosedSurface | int) -> Term:
    """Canonical closed surface term cap ; (copants ; pants)^g ; cup."""
    genus = _genus_of(surface)
    t: Term = Gen("cap")
    for _ in range(genus):
        t = Compose(t, Compose(Gen("copants"), Gen("pants")))
    return Compose(t, Gen("cup"))


def handle_operator(alg: FrobeniusAlgebra) -> Matrix:
    return matmul(alg.mu, alg.delta)


def surface_invariant(alg: FrobeniusAlgebra, surface: ClosedSurface | int) -> Fraction:
    """Exact value of the closed genus-g surface: eps . H^g . eta."""
    genus = _genus_of(surface)
    state = alg.eta
    h = handle_operator(alg)
    for _ in range(genus):
        state = matmul(h, state)
    return matmul(alg.eps, state).entry(0, 0)


def _strip_leading(t: Term, name: str) -> Term:
    """Remove the generator sitting at the start of the composition spine."""
    if isinstance(t, Compose):
        if t.first == Gen(name):
            return t.then
        return Compose(_strip_leading(t.first, name), t.then)
    raise ValueError(f"term does not start with {name!r}: {render_term(t)}")


def _strip_trailing(t: Term, name: str) -> Term:
    if isinstance(t, Compose):
        if t.then == Gen(name):
            return t.first
        return Compose(t.first, _strip_trailing(t.then, name))
    raise ValueError(f"term does not end with {name!r}: {render_term(t)}")


def connected_sum_identity(alg: FrobeniusAlgebra, term_m: Term, term_n: Term) -> bool:
    """Gluing law for connected sums when the circle space is a line.

    ``term_m`` must start with ``cap`` and ``term_n`` must end with
    ``cup``; stripping those and composing realizes the connected sum,
    and the identity checked is

        eval(sum) * Z(sphere)  ==  eval(term_m) . eval(term_n)
    """
    if alg.dim != 1:
        raise ValueError("connected-sum identity needs a one-dimensional circle space")
    sphere = matmul(alg.eps, alg.eta).entry(0, 0)
    if sphere == 0:
        raise ValueError("sphere value is zero; the algebra is degenerate")
    interp = frobenius_interpretation(alg)
    m_rest = _strip_leading(term_m, "cap")  # (S1) -> E
    n_rest = _strip_trailing(term_n, "cup")  # F -> (S1)
    summed = eval_term(Compose(n_rest, m_rest), interp)
    direct = matmul(eval_term(term_m, interp), eval_term(term_n, interp))
    return summed.scale(sphere) == direct


def reduce_along_circle(alg: FrobeniusAlgebra) -> DualPair:
    """Dimensional reduction to a dual pair.

    The bent cylinders evaluate to the copairing delta . eta and the
    pairing eps . mu; the snake identities hold in any Frobenius
    algebra, so the dual-pair constructor accepts the result, and its
    loop value reproduces the torus invariant.
    """
    report = check_axioms(alg)
    if not (report.is_frobenius and report.commutative):
        raise ValueError("reduction needs a commutative Frobenius algebra")
    b = matmul(alg.delta, alg.eta)
    d = matmul(alg.eps, alg.mu)
    return DualPair(alg.dim, alg.dim, b, d)

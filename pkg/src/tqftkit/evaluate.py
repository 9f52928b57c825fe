"""Evaluation of terms as exact matrices under an interpretation.

An interpretation assigns a positive dimension to every object generator
and a matrix of shape dim(target) x dim(source) to every morphism
generator.  Evaluation is structural: identities become identity
matrices, tensoring becomes the Kronecker product, diagrammatic
composition ``s ; t`` becomes the matrix product eval(t) . eval(s), and
a swap becomes the block-transposition permutation of the two word
dimensions.

The module also implements the closed-state calculus: ``bend_state``
turns a map E -> F into a state () -> F . E* by precomposing with the
designated coevaluation of E, and ``reconstruct_map`` contracts such a
state back into a map using the designated pairing.  Designated duality
terms live in the signature, one pair per (self-dual) object label; for
compound words they are assembled by nesting, innermost factors last,
which keeps the snake identities exact without any permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .exactlin import Matrix, ShapeError, kron, matmul, swap_matrix
from .terms import (
    Compose,
    Gen,
    Id,
    ObjectWord,
    Relation,
    Signature,
    Swap,
    Tensor,
    Term,
    render_term,
    render_word,
    typecheck,
)

__all__ = [
    "Interpretation",
    "MissingDuality",
    "RelationCheck",
    "RelationReport",
    "bend_state",
    "check_relations",
    "eval_term",
    "reconstruct_map",
]


class MissingDuality(ValueError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"no designated coevaluation/pairing for object {label!r}")


class Interpretation:
    """A symmetric monoidal functor restricted to generators."""

    def __init__(
        self,
        sig: Signature,
        obj_dim: Mapping[str, int],
        gen_matrix: Mapping[str, Matrix],
    ):
        self.sig = sig
        self.obj_dim = dict(obj_dim)
        self.gen_matrix = dict(gen_matrix)
        for label in sig.g0:
            d = self.obj_dim.get(label)
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"object {label!r} needs a positive dimension, got {d!r}")
        for name, (src, tgt) in sig.g1.items():
            m = self.gen_matrix.get(name)
            if m is None:
                raise ValueError(f"no matrix assigned to generator {name!r}")
            want = (self.dim(tgt), self.dim(src))
            if m.shape != want:
                raise ShapeError(
                    f"generator {name!r}: expected {want[0]}x{want[1]} "
                    f"for ({render_word(src)})->({render_word(tgt)}), got {m.rows}x{m.cols}"
                )

    def dim(self, word: ObjectWord) -> int:
        d = 1
        for label in word:
            d *= self.obj_dim[label]
        return d


def eval_term(t: Term, interp: Interpretation) -> Matrix:
    """Evaluate a term to its matrix.  Type errors propagate unchanged."""
    typecheck(t, interp.sig)
    return _eval(t, interp)


def _eval(t: Term, interp: Interpretation) -> Matrix:
    if isinstance(t, Gen):
        return interp.gen_matrix[t.name]
    if isinstance(t, Id):
        return Matrix.identity(interp.dim(t.word))
    if isinstance(t, Swap):
        return swap_matrix(interp.dim(t.left), interp.dim(t.right))
    if isinstance(t, Compose):
        return matmul(_eval(t.then, interp), _eval(t.first, interp))
    if isinstance(t, Tensor):
        return kron(_eval(t.left, interp), _eval(t.right, interp))
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class RelationCheck:
    relation: Relation
    ok: bool
    mismatch: Optional[tuple[int, int, str, str]]  # (row, col, lhs, rhs)

    def describe(self) -> str:
        if self.ok:
            return f"{self.relation.name}: ok"
        i, j, lhs, rhs = self.mismatch
        return (
            f"{self.relation.name}: FAIL at entry ({i},{j}): "
            f"lhs={lhs} rhs={rhs} "
            f"[{render_term(self.relation.lhs)} vs {render_term(self.relation.rhs)}]"
        )


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failing(self) -> list[str]:
        return [c.relation.name for c in self.checks if not c.ok]

    def describe(self) -> str:
        return "\n".join(c.describe() for c in self.checks)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "relations": [
                {
                    "name": c.relation.name,
                    "ok": c.ok,
                    "mismatch": None
                    if c.ok
                    else {
                        "row": c.mismatch[0],
                        "col": c.mismatch[1],
                        "lhs": c.mismatch[2],
                        "rhs": c.mismatch[3],
                    },
                }
                for c in self.checks
            ],
        }


def check_relations(interp: Interpretation) -> RelationReport:
    """Evaluate both sides of every relation pair; failures are data."""
    checks = []
    for rel in interp.sig.g2:
        lhs = eval_term(rel.lhs, interp)
        rhs = eval_term(rel.rhs, interp)
        mismatch = None
        if lhs != rhs:
            for idx in range(lhs.rows * lhs.cols):
                if (lhs.nums[idx], lhs.dens[idx]) != (rhs.nums[idx], rhs.dens[idx]):
                    i, j = divmod(idx, lhs.cols)
                    mismatch = (
                        i,
                        j,
                        str(lhs.entry(i, j)),
                        str(rhs.entry(i, j)),
                    )
                    break
        checks.append(RelationCheck(rel, mismatch is None, mismatch))
    return RelationReport(tuple(checks))


def _duality_terms(
    sig: Signature,
    coev: Optional[Mapping[str, Term]],
    pairing: Optional[Mapping[str, Term]],
) -> tuple[dict[str, Term], dict[str, Term]]:
    coev_map = {label: d.coev for label, d in sig.duality.items()}
    pairing_map = {label: d.pairing for label, d in sig.duality.items()}
    if coev:
        coev_map.update(coev)
    if pairing:
        pairing_map.update(pairing)
    return coev_map, pairing_map


def coev_term(word: ObjectWord, sig: Signature, coev: Optional[Mapping[str, Term]] = None) -> Term:
    """Coevaluation () -> word . reverse(word), nested from the outside in."""
    coev_map, _ = _duality_terms(sig, coev, None)
    return _coev(word, coev_map)


def _coev(word: ObjectWord, coev_map: Mapping[str, Term]) -> Term:
    if not word:
        return Id(())
    head, rest = word[0], word[1:]
    if head not in coev_map:
        raise MissingDuality(head)
    base = coev_map[head]
    if not rest:
        return base
    inner = _coev(rest, coev_map)
    return Compose(base, Tensor(Id((head,)), Tensor(inner, Id((head,)))))


def pairing_term(word: ObjectWord, sig: Signature, pairing: Optional[Mapping[str, Term]] = None) -> Term:
    """Pairing reverse(word) . word -> (), the mate of ``coev_term``."""
    _, pairing_map = _duality_terms(sig, None, pairing)
    return _pairing(word, pairing_map)


def _pairing(word: ObjectWord, pairing_map: Mapping[str, Term]) -> Term:
    if not word:
        return Id(())
    head, rest = word[0], word[1:]
    if head not in pairing_map:
        raise MissingDuality(head)
    base = pairing_map[head]
    if not rest:
        return base
    inner = _pairing(rest, pairing_map)
    rest_rev = tuple(reversed(rest))
    return Compose(Tensor(Id(rest_rev), Tensor(base, Id(rest))), inner)


def bend_state(
    t: Term,
    interp: Interpretation,
    coev: Optional[Mapping[str, Term]] = None,
    pairing: Optional[Mapping[str, Term]] = None,
) -> Matrix:
    """State () -> target . reverse(source) obtained by bending the source.

    For ``t: E -> F`` this evaluates ``coev_E ; (t * id)``, a column of
    length dim(F) * dim(E).  A term with empty source is already a state
    and is returned as its own evaluation.
    """
    src, _ = typecheck(t, interp.sig)
    if not src:
        return eval_term(t, interp)
    bent = Compose(coev_term(src, interp.sig, coev), Tensor(t, Id(tuple(reversed(src)))))
    return eval_term(bent, interp)


def reconstruct_map(
    state: Matrix,
    source: ObjectWord,
    target: ObjectWord,
    interp: Interpretation,
    pairing: Optional[Mapping[str, Term]] = None,
) -> Matrix:
    """Recover the map dim(target) x dim(source) from its bent state.

    The state column is tensored with an identity on the source and the
    dangling reverse(source) . source legs are contracted away with the
    designated pairing; composing with ``bend_state`` is the identity on
    well-typed terms whenever the designated duality terms satisfy the
    snake identities.
    """
    d_src = interp.dim(source)
    d_tgt = interp.dim(target)
    if state.shape != (d_tgt * d_src, 1):
        raise ShapeError(
            f"state must be {d_tgt * d_src}x1 for ({render_word(source)})->"
            f"({render_word(target)}), got {state.rows}x{state.cols}"
        )
    if not source:
        return state
    d = eval_term(pairing_term(source, interp.sig, pairing), interp)
    contract = kron(Matrix.identity(d_tgt), d)
    return matmul(contract, kron(state, Matrix.identity(d_src)))

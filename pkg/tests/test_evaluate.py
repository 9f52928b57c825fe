"""Evaluation: functoriality, relation checking, bending and reconstruction."""

import random

import pytest

from conftest import parser_signature, random_term
from tqftkit.algebras import cyclic_group, group_algebra, milnor_ring, trivial_algebra
from tqftkit.evaluate import (
    Interpretation,
    MissingDuality,
    bend_state,
    check_relations,
    eval_term,
    reconstruct_map,
)
from tqftkit.exactlin import Matrix, ShapeError, kron, matmul
from tqftkit.surfaces import bord2_signature, frobenius_interpretation
from tqftkit.terms import Compose, Gen, Id, Swap, Tensor, parse_term, typecheck


@pytest.fixture(scope="module")
def z2_interp():
    return frobenius_interpretation(group_algebra(cyclic_group(2)))


def random_interpretation(rng, sig):
    dims = {label: rng.randint(1, 3) for label in sig.g0}

    def dim(word):
        d = 1
        for x in word:
            d *= dims[x]
        return d

    mats = {}
    for name, (src, tgt) in sig.g1.items():
        rows, cols = dim(tgt), dim(src)
        mats[name] = Matrix(
            rows, cols, [rng.randint(-3, 3) for _ in range(rows * cols)]
        )
    return Interpretation(sig, dims, mats)


class TestInterpretation:
    def test_shape_validation(self):
        sig = bord2_signature()
        alg = group_algebra(cyclic_group(2))
        with pytest.raises(ShapeError):
            Interpretation(
                sig,
                {"S1": 2},
                {"pants": alg.mu, "copants": alg.delta, "cap": alg.eta, "cup": alg.eta},
            )

    def test_positive_dims_required(self):
        sig = parser_signature()
        with pytest.raises(ValueError):
            Interpretation(sig, {label: 0 for label in sig.g0}, {})


class TestEval:
    def test_identity(self, z2_interp):
        assert eval_term(Id(("S1",)), z2_interp) == Matrix.identity(2)

    def test_copairing(self, z2_interp):
        t = parse_term("cap ; copants", z2_interp.sig)
        assert eval_term(t, z2_interp) == Matrix(4, 1, [1, 0, 0, 1])

    def test_commutativity_relation(self, z2_interp):
        lhs = parse_term("swap[S1,S1] ; pants", z2_interp.sig)
        assert eval_term(lhs, z2_interp) == eval_term(Gen("pants"), z2_interp)

    def test_functoriality_on_random_terms(self):
        sig = parser_signature()
        rng = random.Random(99)
        interp = random_interpretation(rng, sig)
        for _ in range(120):
            s = random_term(rng, sig, rng.randint(1, 5))
            t = random_term(rng, sig, rng.randint(1, 5))
            assert eval_term(Tensor(s, t), interp) == kron(
                eval_term(s, interp), eval_term(t, interp)
            )
            _, mid = typecheck(s, sig)
            src2, _ = typecheck(t, sig)
            if mid == src2:
                assert eval_term(Compose(s, t), interp) == matmul(
                    eval_term(t, interp), eval_term(s, interp)
                )

    def test_swap_involution_and_naturality(self):
        sig = parser_signature()
        rng = random.Random(5)
        interp = random_interpretation(rng, sig)
        for w1 in [(), ("a",), ("a", "b"), ("c", "c")]:
            for w2 in [(), ("b",), ("c", "a")]:
                fwd = eval_term(Swap(w1, w2), interp)
                back = eval_term(Swap(w2, w1), interp)
                assert matmul(back, fwd) == Matrix.identity(interp.dim(w1 + w2))
        # naturality against a generator tensor
        f = Gen("f")  # (a) -> (b)
        g = Gen("g")  # (b,c) -> (a)
        lhs = eval_term(Compose(Tensor(f, g), Swap(("b",), ("a",))), interp)
        rhs = eval_term(Compose(Swap(("a",), ("b", "c")), Tensor(g, f)), interp)
        assert lhs == rhs


class TestCheckRelations:
    def test_z2_passes_all(self, z2_interp):
        report = check_relations(z2_interp)
        assert report.ok
        assert len(report.checks) == 11

    def test_zero_counit_fails_unit_relations(self):
        alg = group_algebra(cyclic_group(2))
        broken = Interpretation(
            bord2_signature(),
            {"S1": 2},
            {
                "pants": alg.mu,
                "copants": alg.delta,
                "cap": alg.eta,
                "cup": Matrix.zeros(1, 2),
            },
        )
        report = check_relations(broken)
        assert not report.ok
        assert "R2c_counit_left" in report.failing()
        assert "R2d_counit_right" in report.failing()
        failing_check = next(c for c in report.checks if not c.ok)
        assert failing_check.mismatch is not None

    def test_trivial_interpretation_passes(self):
        report = check_relations(frobenius_interpretation(trivial_algebra()))
        assert report.ok

    def test_report_json_shape(self, z2_interp):
        obj = check_relations(z2_interp).to_json()
        assert obj["ok"] is True
        assert len(obj["relations"]) == 11
        assert all(r["mismatch"] is None for r in obj["relations"])


class TestBending:
    def test_bend_identity_gives_copairing(self, z2_interp):
        state = bend_state(Id(("S1",)), z2_interp)
        assert state == Matrix(4, 1, [1, 0, 0, 1])

    def test_bend_pants_brute_force(self, z2_interp):
        # (pants (x) id_4) . coev_(S1,S1), composed by hand
        coev2 = eval_term(
            parse_term("(cap ; copants) ; (id[S1] * ((cap ; copants) * id[S1]))", z2_interp.sig),
            z2_interp,
        )
        mu = z2_interp.gen_matrix["pants"]
        expected = matmul(kron(mu, Matrix.identity(4)), coev2)
        state = bend_state(Gen("pants"), z2_interp)
        assert state == expected
        # and frozen: entry (f, n, b) is mu[f, (b, n)] because the group
        # algebra copairing is diagonal
        assert state == Matrix(8, 1, [1, 0, 0, 1, 0, 1, 1, 0])

    def test_bend_closed_term_is_plain_eval(self, z2_interp):
        t = parse_term("cap ; cup", z2_interp.sig)
        assert bend_state(t, z2_interp) == eval_term(t, z2_interp)

    def test_missing_duality(self):
        sig = parser_signature()
        interp = random_interpretation(random.Random(3), sig)
        with pytest.raises(MissingDuality):
            bend_state(Gen("f"), interp)

    def test_reconstruct_examples(self, z2_interp):
        mu = z2_interp.gen_matrix["pants"]
        state = bend_state(Gen("pants"), z2_interp)
        assert reconstruct_map(state, ("S1", "S1"), ("S1",), z2_interp) == mu
        assert mu == Matrix.from_rows([[1, 0, 0, 1], [0, 1, 1, 0]])

    def test_reconstruct_identity_is_zorro(self):
        for alg in (group_algebra(cyclic_group(2)), milnor_ring(3), trivial_algebra()):
            interp = frobenius_interpretation(alg)
            state = bend_state(Id(("S1",)), interp)
            assert reconstruct_map(state, ("S1",), ("S1",), interp) == Matrix.identity(alg.dim)

    def test_reconstruct_counit_residue_values(self):
        interp = frobenius_interpretation(milnor_ring(3))
        state = bend_state(Gen("cup"), interp)
        rebuilt = reconstruct_map(state, ("S1",), (), interp)
        assert rebuilt == interp.gen_matrix["cup"]
        assert rebuilt == Matrix.row(["0", "1/3"])

    def test_reconstruct_shape_check(self, z2_interp):
        with pytest.raises(ShapeError):
            reconstruct_map(Matrix.zeros(3, 1), ("S1",), ("S1",), z2_interp)

    def test_round_trip_on_random_terms(self):
        rng = random.Random(77)
        for alg in (group_algebra(cyclic_group(2)), milnor_ring(3)):
            interp = frobenius_interpretation(alg)
            for _ in range(60):
                t = random_term(rng, interp.sig, rng.randint(1, 4))
                src, tgt = typecheck(t, interp.sig)
                if interp.dim(src) > 16 or interp.dim(tgt) > 16:
                    continue
                state = bend_state(t, interp)
                assert reconstruct_map(state, src, tgt, interp) == eval_term(t, interp)

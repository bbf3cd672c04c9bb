"""End-to-end acceptance suite.

Each test exercises one headline guarantee of the workbench, enforces a
wall-clock bound, and prints a single pass/fail line (visible even under
captured output).  The suite is intentionally redundant with the unit
tests: everything here recomputes its claim from scratch.
"""

import itertools
import json
import math
import random
import time

import pytest

from ringlab.cli import _parse_witness, run_command
from ringlab.dsl import parse_ring_spec
from ringlab.matrices import MatrixOverRing, det
from ringlab.proofs import prop4_unit_sum, prop5_duo_witness, theorem1_transfer
from ringlab.properties import (
    check_property,
    probe_unit_central_commutative,
    replay_witness,
)
from ringlab.reduction import (
    diagonal_reduce,
    smith_form_integers,
    verify_certificate,
)
from ringlab.rings import (
    IntegerRing,
    enumerate_elements,
    is_commutative,
    principal_ideal,
    units,
)
from ringlab.skew import (
    SKEW_MINUS_ONE,
    SKEW_ONE,
    noncommutativity_witness,
    s_grid,
    s_is_unit,
    skew_mul,
    skew_neg,
)
from ringlab.zoo import BUILTIN_SPECS, builtin_finite_zoo


class _Timed:
    """Context manager asserting a wall-clock bound and printing a report."""

    def __init__(self, number, bound, description, capsys):
        self.number = number
        self.bound = bound
        self.description = description
        self.capsys = capsys

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.bound
        with self.capsys.disabled():
            print(
                f"acceptance {self.number:2d}: "
                f"{'PASS' if ok else 'FAIL'} "
                f"({elapsed:6.2f}s / limit {self.bound:g}s) "
                f"{self.description}"
            )
        if exc_type is None:
            assert elapsed < self.bound, (
                f"criterion {self.number} exceeded {self.bound}s "
                f"({elapsed:.2f}s)"
            )
        return False


def _comaximal_pairs(ring):
    elems = enumerate_elements(ring)
    one = ring.one()
    for a in elems:
        ra = principal_ideal(ring, a, "right")
        for b in elems:
            rb = principal_ideal(ring, b, "right")
            if any(ring.add(x, y) == one for x in ra for y in rb):
                yield a, b


def _qualifying(props):
    """Built-in finite rings on which every listed property holds."""
    out = []
    for ring in builtin_finite_zoo():
        if all(check_property(ring, p).verdict == "holds" for p in props):
            out.append(ring)
    return out


def test_criterion_01_unit_sr1_separates_matrix_ring_from_base(capsys):
    with _Timed(1, 5, "unit-sr1 holds for Mat(2,Zn(2)), fails for Zn(2)",
                capsys):
        m2 = parse_ring_spec("Mat(2,Zn(2))")
        z2 = parse_ring_spec("Zn(2)")
        assert check_property(m2, "unit-sr1").verdict == "holds"
        v = check_property(z2, "unit-sr1")
        assert v.verdict == "fails"
        assert v.witness_dict() == {"a": 1, "b": 1}


def test_criterion_02_comaximality_transfer_suite(capsys):
    with _Timed(2, 60, "comaximality transfer on all sr1+kazimirsky-left "
                "rings", capsys):
        rings = _qualifying(("sr1", "kazimirsky-left"))
        assert rings, "sanity: qualifying set is nonempty"
        assert all(r.order <= 36 for r in rings)
        for ring in rings:
            us = units(ring)
            pairs = list(_comaximal_pairs(ring))
            assert pairs
            for a, b in pairs:
                w = theorem1_transfer(ring, a, b)  # raises on any failure
                result = ring.add(ring.mul(w.p, a), ring.mul(w.q, b))
                assert result == w.result_unit and result in us


def test_criterion_03_quasi_duo_consequence(capsys):
    with _Timed(3, 60, "sr1+kazimirsky-left rings are quasi-duo-left; "
                "Mat(2,Zn(2)) fails both", capsys):
        for ring in _qualifying(("sr1", "kazimirsky-left")):
            assert check_property(ring, "quasi-duo-left").verdict == "holds"
        m2 = parse_ring_spec("Mat(2,Zn(2))")
        assert check_property(m2, "quasi-duo-left").verdict == "fails"
        assert check_property(m2, "kazimirsky-left").verdict == "fails"


def test_criterion_04_sums_of_two_units(capsys):
    with _Timed(4, 10, "every nonzero element of a unit-sr1 ring is a sum "
                "of two units", capsys):
        rings = _qualifying(("unit-sr1",))
        specs = {r.spec_string() for r in rings}
        assert {"Zn(3)", "Mat(2,Zn(2))"} <= specs
        for ring in rings:
            us = units(ring)
            for a in enumerate_elements(ring):
                if a == ring.zero():
                    continue
                u, w = prop4_unit_sum(ring, a)
                assert u in us and w in us and ring.add(u, w) == a


def test_criterion_05_duo_factorization(capsys):
    with _Timed(5, 30, "unit-sr1+kazimirsky-right rings are duo with "
                "verified factorizations", capsys):
        rings = _qualifying(("unit-sr1", "kazimirsky-right"))
        assert rings
        for ring in rings:
            assert check_property(ring, "duo-left").verdict == "holds"
            for a in enumerate_elements(ring):
                if a == ring.zero():
                    continue
                for b in enumerate_elements(ring):
                    z = prop5_duo_witness(ring, a, b)
                    assert ring.mul(b, z) == ring.mul(a, b)
        m2 = parse_ring_spec("Mat(2,Zn(2))")
        assert check_property(m2, "kazimirsky-right").verdict == "fails"


def test_criterion_06_elementary_divisor_reduction(capsys):
    with _Timed(6, 120, "commutative zoo is duo/sr1/bezout; certified "
                "reduction of all small matrices mod 2,3,4,6", capsys):
        for ring in builtin_finite_zoo():
            if not is_commutative(ring):
                continue
            for prop in ("duo-left", "duo-right", "sr1", "bezout"):
                assert check_property(ring, prop).verdict == "holds"
        failures = 0
        for n in (2, 3, 4, 6):
            ring = parse_ring_spec(f"Zn({n})")
            elems = enumerate_elements(ring)
            for rows, cols in ((1, 2), (2, 1), (2, 2)):
                for flat in itertools.product(elems, repeat=rows * cols):
                    A = MatrixOverRing(
                        ring,
                        tuple(
                            flat[i * cols:(i + 1) * cols] for i in range(rows)
                        ),
                    )
                    cert = diagonal_reduce(ring, A)
                    ok, _ = verify_certificate(A, cert)
                    failures += not ok
            assert check_property(ring, "edr-small").verdict == "holds"
        assert failures == 0


def test_criterion_07_smith_oracle(capsys):
    with _Timed(7, 5, "50 random integer matrices: exact transforms, "
                "divisor chain, order independence", capsys):
        rng = random.Random(2026)
        Z = IntegerRing()
        for _ in range(50):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            rows = tuple(
                tuple(rng.randint(-20, 20) for _ in range(n))
                for _ in range(m)
            )
            A = MatrixOverRing(Z, rows)
            cert = smith_form_integers(A)
            assert (cert.p @ A @ cert.q).rows == cert.d.rows
            assert det(cert.p) in (1, -1) and det(cert.q) in (1, -1)
            diag = cert.diagonal
            assert all(d >= 0 for d in diag)
            for d1, d2 in zip(diag, diag[1:]):
                assert d2 == 0 or (d1 != 0 and d2 % d1 == 0)
            assert smith_form_integers(rows, strategy="first").diagonal == diag


def test_criterion_08_skew_example_ring(capsys):
    with _Timed(8, 30, "units of S are exactly {1,-1} on the full grid; "
                "noncommutative yet unit-central", capsys):
        found_units = set()
        for f in s_grid(3, 2):
            if s_is_unit(f):
                found_units.add(f)
        assert found_units == {SKEW_ONE, SKEW_MINUS_ONE}
        x, r = noncommutativity_witness()
        assert skew_mul(x, r) == skew_neg(skew_mul(r, x))
        assert skew_mul(x, r) != skew_mul(r, x)
        S = parse_ring_spec("SkewS(3,2)")
        v = check_property(S, "unit-central", budget=4 * 10 ** 6)
        assert v.verdict == "holds"
        assert v.budget_used == S.grid_size()  # the whole grid, untruncated
        assert not is_commutative(S)


def test_criterion_09_open_problem_probe(capsys):
    with _Timed(9, 60, "unit-central probe to order 16: triples printed, "
                "zero counterexamples, question left open", capsys):
        code = run_command(["probe", "unit-central", "--max-order", "16"])
        out = capsys.readouterr().out
        assert code == 0
        report = probe_unit_central_commutative(16)
        assert report.entries and not report.counterexamples
        for entry in report.entries:
            assert (
                f"{entry.ring.spec_string()}: "
                f"unit-central={entry.unit_central} "
                f"sr1={entry.stable_range_1} "
                f"commutative={entry.commutative}"
            ) in out
        assert "no counterexample" in out and "open" in out


def test_criterion_10_sweep_witness_replay(tmp_path, monkeypatch, capsys):
    with _Timed(10, math.inf, "full zoo sweep: every emitted witness "
                "replays", capsys):
        monkeypatch.setenv("RINGLAB_WORKERS", "1")
        out_path = tmp_path / "sweep.jsonl"
        code = run_command([
            "sweep", "--rings", "builtin", "--properties", "all",
            "--out", str(out_path),
        ])
        assert code in (0, 2)  # budget exhaustion on big cells is expected
        records = [
            json.loads(ln) for ln in out_path.read_text().splitlines()
        ]
        assert len(records) == len(BUILTIN_SPECS) * 14
        replay_failures = []
        for rec in records:
            if rec["verdict"] != "fails":
                continue
            ring = parse_ring_spec(rec["ring"])
            witness = _parse_witness(ring, rec["witness"])
            if not replay_witness(ring, rec["ident"], witness):
                replay_failures.append((rec["ring"], rec["ident"]))
        assert replay_failures == []
        assert any(rec["verdict"] == "fails" for rec in records)

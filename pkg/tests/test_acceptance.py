"""Acceptance gates for the toolkit, one test per criterion.

Every check is exact (Fraction arithmetic, zero tolerance).  Each test
prints a single PASS/FAIL line straight to the terminal, with the elapsed
time where the criterion carries a runtime budget.  Later criteria reuse
the recursion traces recorded by the polarization bulk run.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction as Q
from math import factorial

from sympair.exactla import Mat, charpoly, jordan_chevalley, minpoly
from sympair.lie_core import Subspace, check_axioms
from sympair.pairs import (
    BUILTIN_PAIRS,
    delta_character,
    form_centralizer,
    kf_pf,
    pair_invariant_report,
)
from sympair.pbw_quotient import (
    PBWElement,
    class_multiply,
    commutativity_check,
    invariant_class_basis,
    pbw_context,
    pbw_multiply,
    poly_to_pbw,
    reduce_mod_ideal,
    verify_rouviere_homomorphism,
)
from sympair.poly_series import j_half, j_series
from sympair.polarization import (
    pukanszky_check,
    sample_polarizable_forms,
    verify_polarization,
)

_STATE = {}

HOMOMORPHISM_PAIRS = (
    "cotangent:abelian2",
    "cotangent:aff1",
    "cotangent:heis3",
    "swap:sl2",
)


def announce(capsys, num, label, ok, elapsed=None, budget=None):
    stamp = ""
    if elapsed is not None:
        stamp = " (%.1fs" % elapsed
        stamp += ", budget %ds)" % budget if budget else ")"
    with capsys.disabled():
        print("ACCEPTANCE %d %s: %s%s" % (num, label, "PASS" if ok else "FAIL", stamp))


# -------------------------------------------------------------- criterion 1

def test_criterion_1_structural_soundness(capsys, pairs):
    t0 = time.monotonic()
    ok = sorted(pairs) == sorted(BUILTIN_PAIRS)
    for pair in pairs.values():
        ok = ok and check_axioms(pair.g) == []
        ok = ok and pair_invariant_report(pair) == []
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 5
    announce(capsys, 1, "structural-soundness", ok, elapsed, 5)
    assert ok


# -------------------------------------------------------------- criterion 2

def test_criterion_2_polarizations_at_desk_scale(capsys, pairs):
    t0 = time.monotonic()
    ok = True
    traces = []
    for name, pair in pairs.items():
        found, skipped = sample_polarizable_forms(pair, seed=7, count=20)
        ok = ok and len(found) == 20
        for f, pol in found:
            ok = ok and verify_polarization(pair, f, pol.b).passed
            ok = ok and pukanszky_check(pair, f, pol.b).passed
            kf, pf = kf_pf(pair, f)
            ok = ok and kf.dim == pf.dim
            gf = form_centralizer(pair, f)
            ok = ok and all(gf.contains(pair.sigma_apply(v)) for v in gf.basis)
            traces.append((pair, pol))
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 60
    _STATE["traces"] = traces
    announce(capsys, 2, "polarization-certificates", ok, elapsed, 60)
    assert ok


# -------------------------------------------------------------- criterion 3

def test_criterion_3_recursion_step_invariants(capsys):
    traces = _STATE.get("traces", [])
    ok = bool(traces)
    steps_seen = 0
    for pair, pol in traces:
        for step in pol.trace:
            if step.terminal:
                continue
            steps_seen += 1
            g = step.pair.g
            spaces = [(Q(0), step.g0)] + list(step.parts)
            ok = ok and sum(s.dim for _, s in spaces) == g.dim
            for lam, sa in spaces:
                for mu, sb in spaces:
                    if lam + mu != 0:
                        ok = ok and all(
                            step.pair.b_value(a, b) == 0
                            for a in sa.basis
                            for b in sb.basis
                        )
                    hits = [s for nu, s in spaces if nu == lam + mu]
                    tgt = hits[0] if hits else Subspace.zero(g)
                    ok = ok and all(
                        tgt.contains(g.bracket(a, b))
                        for a in sa.basis
                        for b in sb.basis
                    )
            ok = ok and step.sub.g.dim < g.dim
    ok = ok and steps_seen > 0
    announce(capsys, 3, "recursion-invariants", ok)
    assert ok


# -------------------------------------------------------------- criterion 4

def sinh_ratio_squared_coeffs(order):
    """(sum_n (2t)^(2n) / (2n+1)!) squared, coefficients of t^d."""
    base = [Q(0)] * (order + 1)
    for n in range(order // 2 + 1):
        base[2 * n] = Q(4) ** n / factorial(2 * n + 1)
    out = [Q(0)] * (order + 1)
    for i, a in enumerate(base):
        for j, b in enumerate(base):
            if i + j <= order:
                out[i + j] += a * b
    return {d: c for d, c in enumerate(out) if c != 0}


def test_criterion_4_j_series(capsys, pairs):
    ok = True
    for name, pair in pairs.items():
        s = j_series(pair, 8)
        ok = ok and s.constant_term() == 1
        if name.startswith("cotangent:"):
            ok = ok and s.terms == {(0,) * pair.p_dim: Q(1)}
    swap = pairs["swap:sl2"]
    cartan = tuple(Q(1) * (i == 0) - Q(1) * (i == 3) for i in range(6))
    coords = swap.decompose(cartan)[1]
    ok = ok and swap.from_p_coords(coords) == cartan
    restricted = {}
    for exp, c in j_series(swap, 8).terms.items():
        val = c
        for i, e in enumerate(exp):
            for _ in range(e):
                val *= coords[i]
        if val != 0:
            restricted[sum(exp)] = restricted.get(sum(exp), Q(0)) + val
    restricted = {d: c for d, c in restricted.items() if c != 0}
    ok = ok and restricted == sinh_ratio_squared_coeffs(8)
    ok = ok and restricted.get(2) == Q(4, 3)
    h = j_half(swap, 8)
    ok = ok and (h * h).terms == j_series(swap, 8).terms
    announce(capsys, 4, "j-series", ok)
    assert ok


# -------------------------------------------------------------- criterion 5

def test_criterion_5_corrected_symmetrization(capsys, pairs):
    t0 = time.monotonic()
    ok = True
    for name in HOMOMORPHISM_PAIRS:
        report = verify_rouviere_homomorphism(pairs[name], 4)
        ok = ok and report.passed and report.defects == []
        ok = ok and all(a == b for _, a, b in report.graded)
        comm = commutativity_check(pairs[name], 4)
        ok = ok and comm.passed
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 300
    announce(capsys, 5, "rouviere-isomorphism", ok, elapsed, 300)
    assert ok


# -------------------------------------------------------------- criterion 6

def rand_pbw(rng, ctx, max_letters=2, nwords=3):
    out = PBWElement.zero(ctx)
    for _ in range(nwords):
        word = tuple(
            rng.randrange(ctx.m + ctx.n) for _ in range(rng.randint(0, max_letters))
        )
        acc = PBWElement.one(ctx)
        for t in word:
            acc = acc * PBWElement.generator(ctx, t)
        out = out + acc.scale(Q(rng.randint(-2, 2)))
    return out


def test_criterion_6_quotient_well_defined(capsys, pairs):
    ok = True
    for pair in pairs.values():
        ctx = pbw_context(pair)
        delta = delta_character(pair)
        shifted = [
            PBWElement.generator(ctx, ctx.m + t)
            - PBWElement.one(ctx).scale(delta[t])
            for t in range(ctx.n)
        ]
        rng = random.Random(31)
        # ideal annihilation: 200 random left multiples reduce to zero
        for _ in range(200):
            u = rand_pbw(rng, ctx)
            gen = shifted[rng.randrange(ctx.n)]
            ok = ok and reduce_mod_ideal(pair, pbw_multiply(u, gen)).is_zero()
        # representative independence: 50 perturbed lifts per pair
        classes = invariant_class_basis(pair, 3)
        for _ in range(50):
            a = classes[rng.randrange(len(classes))]
            b = classes[rng.randrange(len(classes))]
            expected = class_multiply(pair, a, b)
            noise = pbw_multiply(
                rand_pbw(rng, ctx, max_letters=1), shifted[rng.randrange(ctx.n)]
            )
            lifted = poly_to_pbw(pair, a.rep) + noise
            got = reduce_mod_ideal(
                pair, pbw_multiply(lifted, poly_to_pbw(pair, b.rep))
            )
            ok = ok and got == expected
    announce(capsys, 6, "quotient-well-defined", ok)
    assert ok


# -------------------------------------------------------------- criterion 7

def test_criterion_7_kernel_algebra(capsys):
    rng = random.Random(11)
    ok = True
    for _ in range(100):
        n = rng.randint(1, 6)
        m = Mat(
            [
                [Q(rng.randint(-4, 4), rng.choice((1, 2, 3))) for _ in range(n)]
                for _ in range(n)
            ]
        )
        ok = ok and charpoly(m).eval_matrix(m).is_zero()
        s, u = jordan_chevalley(m)
        ok = ok and s + u == m
        ok = ok and s * u == u * s
        ok = ok and (u ** n).is_zero()
        mp = minpoly(s)
        ok = ok and mp.squarefree_part() == mp.monic()
    announce(capsys, 7, "kernel-algebra", ok)
    assert ok


# -------------------------------------------------------------- criterion 8

DETERMINISM_COMMANDS = [
    ("check-pair", "cotangent:abelian2"),
    ("check-pair", "cotangent:aff1"),
    ("check-pair", "cotangent:heis3"),
    ("check-pair", "cotangent:sl2"),
    ("check-pair", "swap:sl2"),
    ("polarize", "cotangent:aff1", "--seed", "7", "--count", "5"),
    ("polarize", "swap:sl2", "--seed", "7", "--count", "5"),
    ("polarize", "cotangent:heis3", "--form", "f1"),
    ("rouviere", "cotangent:aff1", "--degree", "4"),
    ("rouviere", "swap:sl2", "--degree", "4"),
    ("jfunction", "swap:sl2", "--degree", "6"),
    ("jfunction", "cotangent:heis3", "--degree", "4"),
]


def test_criterion_8_cli_determinism(capsys):
    ok = True
    for argv in DETERMINISM_COMMANDS:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "sympair", *argv],
                capture_output=True,
            )
            for _ in range(2)
        ]
        ok = ok and runs[0].returncode == runs[1].returncode
        ok = ok and runs[0].stdout == runs[1].stdout
        ok = ok and runs[0].returncode == 0
    announce(capsys, 8, "cli-determinism", ok)
    assert ok

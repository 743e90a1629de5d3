"""The ten acceptance criteria, each at its stated tolerance.

Every test prints exactly one ``criterion N: PASS|FAIL ...`` line; the
lines are also repeated in the pytest terminal summary.
"""

import time

from chordq.exact import Comparison, compare_largest_root
from chordq.families import (
    CompleteBipartite,
    F,
    Fmax,
    construct,
    enumerate_H_family,
    fn_threshold,
    h0a10_partition,
    h0a10_quintic,
    h0a10_spec,
    q_Fn_closed_form,
    quotient_matrix,
)
from chordq.harness import (
    check_adjacency_condition,
    check_chord_oracle,
    check_chord_oracle_random,
    check_chord_predicates,
    check_corollary_chain,
    check_theorem_i,
    check_theorem_ii,
    run_property_suite,
)
from chordq.spectral import char_poly, q_radius, signless_laplacian

ACCEPTANCE_LINES: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_closed_form():
    start = time.perf_counter()
    worst = max(abs(q_Fn_closed_form(n) - q_radius(construct(Fmax(n)))) for n in range(3, 51))
    spot5 = abs(q_Fn_closed_form(5) - (7 + 17 ** 0.5) / 2) <= 1e-12 and \
        compare_largest_root(char_poly(signless_laplacian(construct(Fmax(5)))).coeffs,
                             fn_threshold(5)) is Comparison.EQUAL
    spot4 = abs(q_Fn_closed_form(4) - (5 + 17 ** 0.5) / 2) <= 1e-12
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and spot5 and spot4 and elapsed < 1.0
    record(1, ok, f"max |closed form - q(F_n)| = {worst:.2e} over n=3..50, "
                  f"spot values n=4,5 {'ok' if spot4 and spot5 else 'wrong'}, {elapsed:.2f}s")


def test_criterion_2_theorem_i():
    parts, ok = [], True
    for n in range(4, 8):
        r = check_theorem_i(n)
        ok &= r.passed
        classes = ",".join(sorted(r.exceptional_classes()))
        parts.append(f"n={n} {len(r.violations)} violations [{classes}]"
                     + (f" e.g. {r.violations[0]['graph6']}" if r.violations else ""))
    record(2, ok, "; ".join(parts))


def test_criterion_3_theorem_ii():
    parts, ok = [], True
    for n in range(4, 8):
        r = check_theorem_ii(n)
        unique = list(r.exceptional_classes()) == [f"F_{n}"]
        ok &= r.passed and unique
        parts.append(f"n={n} {len(r.violations)} violations, classes {sorted(r.exceptional_classes())}")
    record(3, ok, "; ".join(parts))


def test_criterion_4_corollary_chain():
    ok, worst_margin, bad = True, float("inf"), []
    for n in range(4, 21):
        r = check_corollary_chain(n, clause_a=False)
        # the report checks the endpoints q(K_{2,n-2}) = q(F_{n,0}) = n; re-check on the raw polynomials
        for g in (construct(CompleteBipartite(2, n - 2)), construct(F(n, 0))):
            if compare_largest_root(char_poly(signless_laplacian(g)).coeffs, n) is not Comparison.EQUAL:
                r.violations.append({"reason": "endpoint not Equal"})
        margin = r.counters["min_chain_margin"]
        if margin is not None:
            worst_margin = min(worst_margin, margin)
        if not r.passed or (margin is not None and margin <= 1e-9):
            ok = False
            bad.append(n)
    record(4, ok, f"n=4..20 endpoints Equal, min strict step {worst_margin:.3e}"
                  + (f", failing n={bad}" if bad else ""))


def test_criterion_5_lemma_ab():
    start = time.perf_counter()
    members, bad = 0, []
    for n in range(5, 15):
        for spec in enumerate_H_family(n):
            members += 1
            p = char_poly(signless_laplacian(construct(spec))).coeffs
            if compare_largest_root(p, n) is not Comparison.LESS:
                bad.append(str(spec))
    elapsed = time.perf_counter() - start
    record(5, not bad and elapsed < 5.0,
           f"{members} members of H^(n), n=5..14, exact Less for {members - len(bad)}, {elapsed:.2f}s")


def test_criterion_6_quintic():
    bad = []
    for n in range(6, 21, 2):
        b = quotient_matrix(construct(h0a10_spec(n)), h0a10_partition(n))
        p = char_poly(b.int_rows()).coeffs
        if p != h0a10_quintic(n) or compare_largest_root(p, n) is not Comparison.LESS:
            bad.append(n)
    record(6, not bad, "quotient polynomial equals the quintic and its largest root < n for even n=6..20"
                       + (f"; failing n={bad}" if bad else ""))


def test_criterion_7_oracle_equivalence():
    exhaustive = [check_chord_oracle(n) for n in range(1, 8)]
    examined = sum(r.graphs_examined for r in exhaustive)
    disagreements = sum(len(r.violations) for r in exhaustive)
    rand = check_chord_oracle_random(42, 10_000, max_n=12)
    ok = disagreements == 0 and rand.passed and rand.graphs_examined == 10_000
    record(7, ok, f"{examined} labeled graphs n<=7 and 10000 random n<=12, "
                  f"{disagreements + len(rand.violations)} disagreements")


def test_criterion_8_property_suite():
    r = run_property_suite(42, 1000, max_n=20, tol=1e-9)
    c = r.counters
    detail = ", ".join(f"{k}={c[k]}" for k in ("edge_addition", "degree_average_bound", "edge_degree_sum_bound",
                                               "bipartite_spectrum", "laplacian_order", "perron_rotation"))
    record(8, r.passed, f"seed 42, 1000 graphs n<=20: {detail}; {len(r.violations)} violations")


def test_criterion_9_adjacency_condition():
    parts, ok = [], True
    for n in (6, 7):
        r = check_adjacency_condition(n)
        unique = list(r.exceptional_classes()) == [f"K_{{2,{n - 2}}}"]
        ok &= r.passed and unique
        parts.append(f"n={n} {len(r.violations)} violations, classes {sorted(r.exceptional_classes())}")
    record(9, ok, "; ".join(parts))


def test_criterion_10_posa_czipser():
    reports = [check_chord_predicates(n) for n in range(4, 8)]
    hits = sum(r.hypothesis_hits for r in reports)
    bad = sum(len(r.violations) for r in reports)
    record(10, bad == 0, f"{hits} graphs meeting a hypothesis over n=4..7, {bad} without a certificate")

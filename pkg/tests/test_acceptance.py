"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible even under pytest's
output capture).  ``python tests/test_acceptance.py`` runs the same checks
without pytest.
"""
import random
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

import pytest

from implodekit import numgeom as ng
from implodekit.basicaffine import hilbert_vs_weyl, v_sigma_stabilizer_dim
from implodekit.chamber import enumerate_faces, face_relations, make_face, top_face, vertex_face
from implodekit.cli import run as cli_run
from implodekit.implosion import classify_smoothness, universal_strata
from implodekit.quantization import holomorphic_induct, lr_as_weights, n_invariants, rr_implosion
from implodekit.rootdata import build_root_datum, positive_roots, unitary_group
from implodekit.verify import SUITES

SEED = 20240601
SU2 = build_root_datum("A", 1)
SU3 = build_root_datum("A", 2)


def _dims(d):
    return sorted(s.real_dim for s in universal_strata(d))


def _strata_by_face(d):
    return {s.face.vanishing_set: s for s in universal_strata(d)}


def criterion_1():
    strata = _strata_by_face(SU2)
    vertex = str(strata[(0,)].smoothness)
    ok = len(strata) == 2 and _dims(SU2) == [0, 4] and vertex == "Smooth(1)"
    return ok, f"dims {_dims(SU2)}, vertex {vertex}"


def criterion_2():
    strata = _strata_by_face(SU3)
    order = face_relations(SU3)
    closure_ok = all(set(s.closure_preds) == {f for f in order.faces if order.leq(f, s.face)}
                     for s in strata.values())
    kinds = {k: str(s.smoothness) for k, s in strata.items()}
    ok = (len(strata) == 4 and _dims(SU3) == [0, 6, 6, 10] and closure_ok
          and kinds[(0, 1)] == "Singular" and kinds[(0,)] == kinds[(1,)] == "Smooth(1)")
    return ok, f"dims {_dims(SU3)}, closure order matches: {closure_ok}, smoothness {kinds}"


def criterion_3():
    so3 = build_root_datum("A", 1, "adjoint")
    vertex = str(classify_smoothness(so3, vertex_face(so3)))
    u2 = _dims(unitary_group(2))
    return vertex == "OrbifoldOnly(2)" and u2 == [2, 6], f"SO(3) vertex {vertex}, U(2) dims {u2}"


def criterion_4():
    worst = ng.check_quadric(SEED, 500)
    return worst < 1e-12, f"max quadric residual {worst:.3e} over 500 points"


def criterion_5():
    rows = []
    for d in (SU3, SU2):
        for f in enumerate_faces(d):
            rows.append((d.name, f.vanishing_set) + v_sigma_stabilizer_dim(d, f))
    ok = len(rows) == 6 and all(r[-1] for r in rows)
    return ok, ", ".join(f"{g}{list(s)}: {c}={e}" for g, s, c, e, _ in rows)


def criterion_6():
    res = {n: ng.check_pullback_one_form(SEED, 200, n) for n in (2, 3)}
    return max(res.values()) < 1e-9, f"max residual SU(2) {res[2]:.3e}, SU(3) {res[3]:.3e}"


def criterion_7():
    moment = max(ng.check_moment_compatibility(SEED, 200, n) for n in (2, 3))
    section = max(ng.check_section_t_moment(SEED, 200, n) for n in (2, 3))
    return moment < 1e-9 and section < 1e-12, f"moment {moment:.3e}, section T-moment {section:.3e}"


def criterion_8():
    worst = 0.0
    for n in (2, 3):
        rho = (1,) * (n - 1)
        worst = max(worst, ng.check_omega_product_form(SEED, 200, None, n),
                    ng.check_omega_product_form(SEED, 200, rho, n))
    return worst < 1e-8, f"max residual {worst:.3e} (lambda0 = 0 and rho, SU(2) and SU(3))"


def criterion_9():
    dnu, nu, hopf = ng.contact_cn(-1.0, SEED, 200, 2)
    cdnu, cnu = ng.contact_cotangent_su2(-1.0, SEED, 200)
    ok = max(dnu, nu, hopf) < 1e-10 and max(cdnu, cnu) < 1e-9
    return ok, (f"C^2: dnu {dnu:.3e}, nu {nu:.3e}, hopf {hopf:.3e}; "
                f"cotangent SU(2): dnu {cdnu:.3e}, nu {cnu:.3e}")


def _rho_check_pairing(d, lam):
    # <lam, rho^vee> with rho^vee half the sum of the positive coroots
    return sum(d.pair(lam, a.coroot) for a in positive_roots(d)) / Fraction(2)


def _dominant_up_to(d, bound):
    out, frontier = [], [(0,) * d.rank_ss]
    seen = set(frontier)
    while frontier:
        lam = frontier.pop()
        out.append(lam)
        for i in range(d.rank_ss):
            nxt = tuple(x + (j == i) for j, x in enumerate(lam))
            if nxt not in seen and _rho_check_pairing(d, nxt) <= bound:
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(out)


def criterion_10():
    pairs = mismatches = 0
    for d in (SU2, SU3):
        n = d.rank_ss + 1
        weights = _dominant_up_to(d, 12)
        for lam in weights:
            for mu in weights:
                if _rho_check_pairing(d, tuple(x + y for x, y in zip(lam, mu))) > 12:
                    continue
                pairs += 1
                if rr_implosion(d, [lam, mu]) != lr_as_weights(n, lam, mu):
                    mismatches += 1
    return mismatches == 0 and pairs > 0, f"{pairs} pairs, {mismatches} mismatches"


def criterion_11():
    rnd = random.Random(SEED)
    data = [SU2, SU3, build_root_datum("B", 2), build_root_datum("G2")]
    failures = 0
    for _ in range(500):
        d = rnd.choice(data)
        t = {}
        for _ in range(rnd.randint(0, 6)):
            t[tuple(rnd.randint(0, 8) for _ in range(d.rank_ss))] = rnd.choice([-3, -2, -1, 1, 2, 3])
        if n_invariants(holomorphic_induct(d, t)) != t:
            failures += 1
    return failures == 0, f"500 characters, {failures} failures"


def criterion_12():
    bad = [(a, b) for a in range(13) for b in range(13) if not hilbert_vs_weyl(a, b)[2]]
    return not bad, f"169 bidegrees, mismatches {bad}"


def criterion_13():
    problems = []
    for kind in [("A", 1), ("A", 2), ("B", 2), ("G2", None), ("A", 3)]:
        d = build_root_datum(*kind)
        order = face_relations(d)
        strata = universal_strata(d)
        for s in strata:
            if set(s.closure_preds) != {f for f in order.faces if order.leq(f, s.face)}:
                problems.append((d.name, "frontier", s.face.vanishing_set))
            for t in strata:
                if s.face < t.face and not s.real_dim < t.real_dim:
                    problems.append((d.name, "monotone", s.face.vanishing_set, t.face.vanishing_set))
    return not problems, f"A1 A2 B2 G2 A3, problems {problems}"


def criterion_14():
    differing = []
    with tempfile.TemporaryDirectory() as tmp:
        for suite in SUITES:
            blobs = []
            for attempt in range(2):
                target = Path(tmp) / f"{suite}-{attempt}.json"
                argv = ["verify", "--suite", suite, "--group", "A2", "--seed", str(SEED),
                        "--count", "100", "--output", str(target)]
                if cli_run(argv) not in (0, 1):
                    differing.append(suite)
                blobs.append(target.read_bytes())
            if blobs[0] != blobs[1]:
                differing.append(suite)
    return not differing, f"suites {', '.join(SUITES)}; differing {differing}"


CRITERIA = [
    (1, "SU(2) universal strata", criterion_1, 1.0),
    (2, "SU(3) universal strata", criterion_2, 1.0),
    (3, "SO(3) orbifold vertex and U(2) strata", criterion_3, 1.0),
    (4, "SU(3) quadric on 500 embedded points", criterion_4, 1.0),
    (5, "stabilizer dimensions vs Levi formula", criterion_5, 1.0),
    (6, "one-form pullback", criterion_6, 2.0),
    (7, "moment compatibility and section T-moment", criterion_7, 2.0),
    (8, "product-form two-form identity", criterion_8, 2.0),
    (9, "contact form and Reeb field", criterion_9, 2.0),
    (10, "quantization commutes with implosion", criterion_10, 10.0),
    (11, "induction round trip", criterion_11, 1.0),
    (12, "Hilbert function vs Weyl dimension", criterion_12, 1.0),
    (13, "frontier and dimension monotonicity", criterion_13, 1.0),
    (14, "deterministic verify reports", criterion_14, 5.0),
]


def evaluate(number):
    _, title, func, budget = CRITERIA[number - 1]
    start = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - start
    ok = bool(ok) and elapsed < budget
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title}: {detail} [{elapsed:.2f}s < {budget:g}s]"
    return ok, line


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

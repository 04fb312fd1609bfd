"""Exit criteria. Every comparison is exact integer equality.

A one-line PASS/FAIL summary per criterion is printed at the end of the
pytest run (see conftest.py).
"""
import time

from zmspectrum.harness import build_record, sweep
from zmspectrum.modarith import euler_phi, is_prime
from zmspectrum.morphisms import MorphismTriple, check_morphism, enumerate_triples, identity_triple
from zmspectrum.reidemeister import (
    corollary_prime_n, dihedral_spectrum, reidemeister_burnside, reidemeister_formula,
    reidemeister_orbits, spectrum,
)
from zmspectrum.zmgroup import Element, conjugacy_classes, validate

from conftest import admissible


def test_c1_dicyclic_regression():
    p = validate(3, 4, 2)
    for mode in ("paper", "strict"):
        res = spectrum(p, mode)
        assert res.spectrum == [4, 6]
        assert res.per_y == [(1, 6), (3, 4)]


def test_c2_dihedral_family():
    start = time.perf_counter()
    for m in range(3, 50, 2):
        p = validate(m, 2, m - 1)
        expected = dihedral_spectrum(m)
        assert spectrum(p).spectrum == [expected], m
        f = MorphismTriple(1, 0, 1)
        assert reidemeister_orbits(p, f) == reidemeister_burnside(p, f) == expected, m
    assert time.perf_counter() - start < 5.0


def test_c3_triple_oracle_agreement():
    checked, mismatches = 0, []
    for p in admissible(120):
        for f in enumerate_triples(p, "strict"):
            r_orbit = reidemeister_orbits(p, f)
            r_burnside = reidemeister_burnside(p, f)
            r_formula = reidemeister_formula(p, f.y)
            checked += 1
            if not r_orbit == r_burnside == r_formula:
                mismatches.append((str(p), tuple(f), r_orbit, r_burnside, r_formula))
    print(f"\ncriterion 3: {checked} strict morphisms, {len(mismatches)} mismatches")
    assert mismatches == [], f"{len(mismatches)} of {checked} mismatch; first: {mismatches[:5]}"


def test_c4_identity_anchor():
    for p in admissible(120):
        assert reidemeister_orbits(p, identity_triple(p)) == len(conjugacy_classes(p)), p


def test_c5_automorphism_count():
    assert len(enumerate_triples(validate(3, 4, 2), "paper")) == 12
    for p in admissible(300):
        assert len(enumerate_triples(p, "paper")) == p.m * euler_phi(p.m) * p.n // p.d, p


def test_c6_corollary_consistency():
    seen, failures = 0, []
    for p in admissible(300):
        if not is_prime(p.n):
            continue
        seen += 1
        value = corollary_prime_n(p)
        assert value == reidemeister_formula(p, 1), p
        if spectrum(p).spectrum != [value]:
            failures.append((str(p), value, spectrum(p).spectrum))
    assert seen > 0
    assert failures == [], f"{len(failures)} of {seen} prime-n groups; (group, corollary, spectrum): {failures}"


def test_c7_homomorphism_property():
    for p in admissible(60):
        for f in enumerate_triples(p, "paper"):
            assert check_morphism(p, f).is_homomorphism, (p, f)
        for f in enumerate_triples(p, "strict"):
            assert check_morphism(p, f).is_bijective, (p, f)


def _record_564():
    return next(rec for rec in sweep(30) if rec.key == (5, 6, 4))


def test_c8a_anomaly_detection_mode_divergence():
    rec = _record_564()
    assert (rec.aut_count_paper, rec.aut_count_strict) == (60, 40)
    divergence = [a for a in rec.anomalies if a["tag"] == "mode-divergence"]
    assert divergence and divergence[0]["ys"] == [3]
    kernel = [a for a in rec.anomalies if a["tag"] == "non-bijective-triple"]
    assert kernel[0]["triple"][2] == 3
    assert kernel[0]["witness"] == [[0, 0], [2, 0]]  # b^2 -> identity
    check = check_morphism(validate(5, 6, 4), MorphismTriple(1, 0, 3))
    assert check.witness == (Element(0, 0), Element(2, 0))


def test_c8b_no_oracle_mismatch_for_strict_morphisms():
    flagged = []
    for rec in sweep(30):
        flagged += [(rec.key, a["y"], a["mismatched"]) for a in rec.anomalies if a["tag"] == "oracle-mismatch"]
    assert flagged == [], f"oracle-mismatch anomalies (key, y, count): {flagged}"


def test_c9_x_independence():
    varying = []
    for p in admissible(80):
        for y in sorted({f.y for f in enumerate_triples(p, "strict")}):
            values = {
                reidemeister_orbits(p, MorphismTriple(x1, x2, y))
                for x1, x2, _ in enumerate_triples(p, "strict") if _ == y
            }
            if len(values) > 1:
                varying.append((str(p), y, sorted(values)))
    assert varying == [], f"{len(varying)} (group, y) pairs with x-dependent R; first: {varying[:5]}"

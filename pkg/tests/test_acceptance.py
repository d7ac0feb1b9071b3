"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are also collected and repeated in the pytest terminal summary.
"""

import random
import time


from gdnbasis.algebra import (
    Alphabet,
    DVar,
    Monomial,
    Polynomial,
    circle,
    derive,
    leading_of_derived,
    monomials_by_dx,
    weight_minus_one_monomials,
)
from gdnbasis.groebner import (
    RelationSet,
    buchberger_capped,
    complete_homogeneous,
    decide_diff,
    irr_enumerate,
    normal_form,
    verify_certificate,
)
from gdnbasis.novikov import (
    Circ,
    Gen,
    check_gsb_gdn,
    check_identities,
    embed,
    member_gdn,
    nf_gdn,
    span_oracle,
    tableau_enumerate,
)
from gdnbasis.parse import parse_poly
from gdnbasis.sampling import random_coeff, random_monomial, random_poly

import oracles

RESULTS: list[str] = []


def report(n: int, title: str, ok: bool, elapsed: float, limit: float | None = None, detail=""):
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"criterion {n:2d} {status}: {title} [{elapsed:.2f}s{budget}]{' ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert in_time, line


def test_c01_gdn_identities():
    t0 = time.perf_counter()
    rng = random.Random(20261016)
    bad = 0
    for _ in range(200):
        ngens = rng.randint(1, 3)
        x, y, z = (random_poly(rng, ngens, max_terms=3, max_bracket=3) for _ in range(3))
        d1, d2 = check_identities(x, y, z)
        bad += (not d1.is_zero()) + (not d2.is_zero())
    report(1, "GDN identities on 200 random triples", bad == 0, time.perf_counter() - t0, 10,
           f"nonzero defects={bad}")


def test_c02_nonfree_witness():
    t0 = time.perf_counter()
    a = Gen(0)
    aa = Circ(a, a)
    aaa = Circ(aa, a)
    diff = embed(Circ(aa, Circ(aaa, a))) - embed(Circ(aaa, aaa))
    report(2, "witness identity difference is exactly 0", diff.is_zero(),
           time.perf_counter() - t0, 1)


def test_c03_four_dimensional_example(nov4):
    t0 = time.perf_counter()
    E = nov4.alphabet
    rep = check_gsb_gdn(nov4, 9)
    ok_a = rep.clean
    gens = [E.var(n) for n in E.names]
    span1 = {g.lm for g in gens}
    ok_b = True
    for d in range(1, 5):
        for w in weight_minus_one_monomials(4, d):
            r = nf_gdn(Polynomial.monomial(w), nov4)
            ok_b &= set(r.terms) <= span1
    for g in gens:
        ok_b &= nf_gdn(g, nov4) == g
    ok_c = True
    for i in range(4):
        for j in range(4):
            r = nf_gdn(circle(gens[i], gens[j]), nov4)
            want = gens[2] if (i, j) == (1, 0) else gens[3] if (i, j) == (2, 0) else Polynomial()
            ok_c &= r == want
    report(3, "four-dimensional Novikov algebra reproduced", ok_a and ok_b and ok_c,
           time.perf_counter() - t0, 60,
           f"(a) {rep.checked} compositions, clean={ok_a}; (b)={ok_b}; (c)={ok_c}")


def test_c04_tableau_counts():
    t0 = time.perf_counter()
    counts = tuple(len(tableau_enumerate(1, d)) for d in range(1, 9))
    parts = tuple(oracles.partitions(d - 1) for d in range(1, 9))
    words = tuple(len(weight_minus_one_monomials(1, d)) for d in range(1, 9))
    ok = counts == (1, 1, 2, 3, 5, 7, 11, 15) == parts == words
    report(4, "tableau counts match p(d-1)", ok, time.perf_counter() - t0, 5, f"counts={counts}")


def test_c05_order_laws():
    t0 = time.perf_counter()
    rng = random.Random(5)
    bad = 0
    for _ in range(10_000):
        u, v, w = (random_monomial(rng, 3, max_len=4, max_bracket=4) for _ in range(3))
        bad += ((u < v) + (u == v) + (u > v)) != 1
        if u < v and v < w:
            bad += not (u < w)
        if u < v:
            bad += not (u * w < v * w)
            if len(u) and len(v):
                du = derive(Polynomial.monomial(u)).lm
                dv = derive(Polynomial.monomial(v)).lm
                bad += not (du < dv)
    for _ in range(1_000):
        f = random_poly(rng, 3, max_terms=3, max_len=3, max_bracket=3)
        if f.is_zero() or not f.lm.vars:
            continue
        t = rng.randint(0, 5)
        bad += derive(f, t).lm != leading_of_derived(f, t)
    report(5, "monomial order laws and derivation shortcut", bad == 0, time.perf_counter() - t0,
           detail=f"violations={bad}")


def test_c06_staged_circle(A, circ_S):
    t0 = time.perf_counter()
    states = [complete_homogeneous(circ_S, n, max_dx=8) for n in range(9)]
    low6 = {e.poly for e in states[8].entries if e.poly.lm.dx_length <= 6}
    ok = low6 == {parse_poly("a[0]*a[-1]", A), parse_poly("a[0]^3", A)}
    stable = True
    for n, s in enumerate(states):
        part = {e.poly for e in s.entries if e.poly.lm.dx_length <= n}
        for later in states[n + 1 :]:
            stable &= {e.poly for e in later.entries if e.poly.lm.dx_length <= n} == part
    report(6, "staged algorithm on a o a", ok and stable, time.perf_counter() - t0, 30,
           f"basis<=6 ok={ok}; stability={stable}")


def test_c07_pbw_consistency(A, circ_S):
    t0 = time.perf_counter()
    bad = 0
    checked = 0
    for d in range(1, 7):
        for w in weight_minus_one_monomials(1, d):
            f = Polynomial.monomial(w)
            bad += member_gdn(f, circ_S) != span_oracle(f, circ_S, w.dx_length, gdn=True)
            checked += 1
    basis = complete_homogeneous(circ_S, 11).current
    quotient = irr_enumerate(basis, 6, -1)
    ok = bad == 0 and quotient == [Monomial([DVar(-1, 0)])]
    report(7, "Novikov membership agrees with span oracle", ok, time.perf_counter() - t0, 60,
           f"{checked} words, disagreements={bad}, quotient basis size={len(quotient)}")


HOMOGENEOUS = [
    ("a", ["a o a"]),
    ("a,b", ["a o b - b o a"]),
    ("a,b", ["a o a", "b o b"]),
]


def _homogeneous_sets():
    out = []
    for gens, rels in HOMOGENEOUS:
        X = Alphabet(gens.split(","))
        out.append(RelationSet(X, [parse_poly(r, X) for r in rels]))
    return out


def test_c08_membership_soundness():
    t0 = time.perf_counter()
    rng = random.Random(8)
    sets = _homogeneous_sets()
    disagreements = 0
    members = 0
    while members < 100:
        S = rng.choice(sets)
        ngens = len(S.alphabet)
        d = rng.randint(3, 7)
        f = Polynomial()
        for _ in range(rng.randint(1, 3)):
            s = rng.choice(S.relations)
            t = rng.randint(0, d - s.lm.dx_length)
            rest = d - s.lm.dx_length - t
            cofs = list(monomials_by_dx(ngens, rest, rest))
            if not cofs:
                continue
            f = f + derive(s, t).mul_monomial(rng.choice(cofs), random_coeff(rng))
        if f.is_zero():
            continue
        members += 1
        res = decide_diff(f, S, certify=True)
        disagreements += not (res.member and verify_certificate(f, res.certificate, S.relations))
    nonmembers = 0
    while nonmembers < 100:
        S = rng.choice(sets)
        ngens = len(S.alphabet)
        d = rng.randint(1, 7)
        pool = list(monomials_by_dx(ngens, d, d))
        f = Polynomial({rng.choice(pool): random_coeff(rng) for _ in range(rng.randint(1, 3))})
        if f.is_zero() or span_oracle(f, S, d):
            continue
        nonmembers += 1
        disagreements += decide_diff(f, S).member
    report(8, "membership sound on members and oracle non-members", disagreements == 0,
           time.perf_counter() - t0, detail=f"disagreements={disagreements}")


def test_c09_confluence(nov4, circ_S):
    t0 = time.perf_counter()
    rng = random.Random(9)
    AB = Alphabet(["a", "b"])
    comm = RelationSet(AB, [parse_poly("a o b - b o a", AB)])
    cases = [(nov4, 6), (circ_S, 8), (comm, 7)]
    bases = [(buchberger_capped(S, cap).basis, cap) for S, cap in cases]
    bad = 0
    for k in range(1_000):
        B, cap = bases[k % len(bases)]
        pool = list(monomials_by_dx(len(B.alphabet), cap))
        f = Polynomial({rng.choice(pool): random_coeff(rng) for _ in range(rng.randint(1, 3))})
        r1 = normal_form(f, B)
        r2 = normal_form(f, B, rng=random.Random(rng.getrandbits(32)))
        bad += r1 != r2
    report(9, "first-found and random reduction strategies agree", bad == 0,
           time.perf_counter() - t0, detail=f"disagreements={bad}")


def test_c10_dx_length_identity():
    t0 = time.perf_counter()
    rng = random.Random(10)
    bad = 0
    for _ in range(10_000):
        w = random_monomial(rng, 3, max_len=6, max_bracket=6)
        direct = sum(v.bracket + 1 for v in w.vars) + len(w)  # D's plus X's
        bad += direct != w.dx_length or w.dx_length != w.weight + 2 * len(w)
    report(10, "dx-length = weight + 2 * length", bad == 0, time.perf_counter() - t0,
           detail=f"violations={bad}")

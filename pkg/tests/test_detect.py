import pytest

from recdiv.arith import sieve_primes
from recdiv.demo import DEMO_SPEC, base_check, base_table, expected_base
from recdiv.detect import (
    DetectPolicy,
    Excluded,
    StructuralContext,
    build_context,
    cross_validate,
    detect,
    detect_full,
    structural_base,
    structural_detect,
)
from recdiv.recurrence import RecurrenceSpec, has_zero_bruteforce, term_mod


def test_build_context_tribonacci_p7(tribonacci):
    ctx = build_context(tribonacci, 7)
    assert isinstance(ctx, StructuralContext)
    assert ctx.root_base == 3
    assert ctx.nloc == 1  # (-1)^3 * c0 = -(-1)
    assert ctx.base == 27 % 7 == 6
    assert ctx.ord_base == 2
    assert ctx.q == (7**2 - 1) // 6 == 8
    assert ctx.index_base == 3


def test_build_context_demo_bases():
    # the worked-example base 25/7 mod p
    ctx = build_context(DEMO_SPEC, 11)
    assert ctx.base == 25 * pow(7, -1, 11) % 11 == 2
    ctx = build_context(DEMO_SPEC, 13)
    assert ctx.base == 11  # 7^{-1} = 2 mod 13, and 50 mod 13 = 11
    assert structural_base(ctx) == 11


def test_build_context_exclusions(tribonacci):
    res = build_context(tribonacci, 2)
    assert isinstance(res, Excluded) and res.reason == "ramified"
    res = build_context(DEMO_SPEC, 5)
    assert isinstance(res, Excluded) and res.reason == "divides-c0"
    res = build_context(tribonacci, 5)  # pattern {3} mod 5
    assert isinstance(res, Excluded) and res.reason == "pattern-mismatch"
    short = RecurrenceSpec((-1, -1), (1, 1))
    res = build_context(short, 7)
    assert isinstance(res, Excluded) and res.reason == "pattern-mismatch"


def test_build_context_gamma1_vanishes(tribonacci):
    # init (2, 5, 1) mod 7 is theta^n + theta^(7n): the base-root coefficient is 0
    spec = RecurrenceSpec(tribonacci.coeffs, (2, 5, 1))
    res = build_context(spec, 7)
    assert isinstance(res, Excluded) and res.reason == "gamma1-vanishes"
    # the same spec at other structural primes is generically fine
    assert isinstance(build_context(spec, 13), StructuralContext)


def test_context_invariants(tribonacci):
    from recdiv.fppoly import ext_norm

    for p in sieve_primes(300):
        ctx = build_context(tribonacci, p)
        if isinstance(ctx, Excluded):
            continue
        d = tribonacci.order
        assert ctx.q % (p - 1) == (d - 1) % (p - 1)
        assert (p - 1) % ctx.ord_base == 0
        assert ctx.nloc == ctx.root_base * ext_norm(ctx.conj_roots[0]) % p
        assert ctx.gamma1 != 0
        assert ctx.base != 0


def test_structural_detect_tribonacci_p7(tribonacci):
    ctx = build_context(tribonacci, 7)
    v = structural_detect(ctx, tribonacci, r_cap=ctx.q)
    assert v.kind == "divisor"
    assert v.witness == 9  # decomposes as r=1, k=1 with Q=8
    assert term_mod(tribonacci, 9, 7) == 0


def test_structural_detect_demo_p11():
    # base 2 is a primitive root mod 11, so the first nonzero step hits
    ctx = build_context(DEMO_SPEC, 11)
    assert ctx.ord_base == 10
    v = structural_detect(ctx, DEMO_SPEC, r_cap=ctx.q)
    assert v.kind == "divisor"
    assert term_mod(DEMO_SPEC, v.witness, 11) == 0


def test_structural_detect_empty_scan(tribonacci):
    ctx = build_context(tribonacci, 7)
    v = structural_detect(ctx, tribonacci, r_cap=0)
    assert v.kind == "indeterminate"


def test_structural_detect_without_witness_recovery(tribonacci):
    ctx = build_context(tribonacci, 7)
    v = structural_detect(ctx, tribonacci, r_cap=ctx.q, recover_witness=False)
    assert v.kind == "divisor" and v.witness is None


def test_structural_nondivisor_full_scan():
    # a_n = 9^(n+1) style shifted sequence on x^3-2: only p = 3 ever divides,
    # so every structural prime must come back nondivisor after a full scan
    spec = RecurrenceSpec.from_char_poly([1, 0, 0, -2], [1, 2, 3])
    seen = 0
    for p in sieve_primes(300):
        ctx = build_context(spec, p)
        if isinstance(ctx, Excluded):
            continue
        v = structural_detect(ctx, spec, r_cap=ctx.q)
        assert v.kind == "nondivisor", p
        b = has_zero_bruteforce(spec, p, 10**7)
        assert b.kind == "nondivisor"
        seen += 1
    assert seen > 10


def test_detect_dispatch(tribonacci):
    v = detect(tribonacci, 7)
    assert v.kind == "divisor" and v.method == "structural" and v.witness == 9
    v = detect(tribonacci, 3)  # pattern {3}: brute path
    b = has_zero_bruteforce(tribonacci, 3, 10**7)
    assert v.kind == b.kind == "divisor" and v.witness == b.witness == 3
    assert v.method == "brute"
    v = detect(tribonacci, 2)
    assert v.kind == "excluded" and v.reason == "ramified"


def test_detect_degenerate_zero_short_circuit():
    spec = RecurrenceSpec((-1, -1, -1), (1, 0, 4))  # a_1 = 0 exactly
    for p in (2, 3, 7, 11):
        v = detect(spec, p)
        assert v.kind == "divisor" and v.method == "none" and v.witness == 1


def test_detect_indeterminate_on_tiny_brute_cap(tribonacci):
    policy = DetectPolicy(brute_cap=1)
    v = detect(tribonacci, 5, policy)  # pattern {3}, first zero is later
    assert v.kind == "indeterminate" and v.method == "brute"


def test_detect_full_exposes_pattern_and_context(tribonacci):
    pat, ctx, v = detect_full(tribonacci, 7)
    assert pat.key == "2-1" and pat.squarefree
    assert ctx is not None and ctx.ord_base == 2
    pat, ctx, v = detect_full(tribonacci, 2)
    assert pat.key == "1-1-1" and not pat.squarefree
    assert ctx is None and v.kind == "excluded"


def test_every_divisor_verdict_carries_verified_witness(tribonacci):
    specs = [
        tribonacci,
        DEMO_SPEC,
        RecurrenceSpec.from_char_poly([1, 0, 1, -1], [5, 1, 2]),
    ]
    for spec in specs:
        for p in sieve_primes(200):
            v = detect(spec, p)
            if v.kind == "divisor":
                assert v.witness is not None
                assert term_mod(spec, v.witness, p) == 0


def test_cross_validate_empty_on_small_ranges(tribonacci):
    assert cross_validate(tribonacci, 300) == []
    assert cross_validate(DEMO_SPEC, 300) == []
    assert cross_validate(tribonacci, 2) == []


def test_cross_validate_rejects_insufficient_cap(tribonacci):
    with pytest.raises(ValueError, match="cap too small"):
        cross_validate(tribonacci, 300, cap=10)


def test_demo_base_table_and_check():
    rows = base_table(limit=100)
    by_p = {r.p: r for r in rows}
    assert by_p[2].status == "ramified"
    assert by_p[5].status == "divides-c0"
    assert by_p[7].status == "divides-c0"
    assert by_p[11].base == 2 and by_p[11].status == "ok"
    assert by_p[13].base == 11 and by_p[13].status == "ok"
    assert base_check(300)
    for r in rows:
        if r.base is not None:
            assert r.expected == expected_base(r.p)

"""Per-prime divisorship decision for primes with factorization pattern (1, d-1).

For such a prime, the characteristic polynomial splits mod p as a linear
factor times an irreducible factor of degree d-1. Working in the quotient
field built on the big factor, every term decomposes along powers of the
roots, and writing n = k*Q + r with Q = (p^{d-1}-1)/(p-1) collapses the
extension roots through the norm map. The zero condition a_n = 0 mod p then
becomes a pure base-field statement: for some r < Q, the ratio

    RHS_r = -(a_r - gamma1 * a1^r) / (gamma1 * a1^r)

lies in the cyclic subgroup generated by the base G = a1^d / ((-1)^d c_0).
Membership is decided by the power test RHS^ord(G) = 1; the scan over
r < Q is therefore a complete decision procedure, cross-validated against
the brute-force period scan.

Scans start with the direct power test and switch to a precomputed discrete
log table when a scan runs long, which keeps full nondivisor scans linear
in p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import factor_integer, mult_order, sieve_primes
from .fppoly import (
    ExtElem,
    ExtField,
    ext_norm,
    factor_mod_p,
    frobenius,
    pattern,
    reduce_poly,
    solve_gamma,
)
from .recurrence import (
    RecurrenceSpec,
    has_zero_bruteforce,
    term_mod,
    term_stream,
    zero_term_scan,
)

# Scan steps taken with the direct power test before building a dlog table.
_TABLE_THRESHOLD = 256

EXCLUSION_REASONS = (
    "ramified",
    "divides-c0",
    "gamma1-vanishes",
    "pattern-mismatch",
    "zero-term-degenerate",
)


@dataclass(frozen=True)
class Excluded:
    """A prime the structural machinery refuses, with the reason."""

    reason: str
    detail: str = ""


@dataclass(frozen=True)
class StructuralContext:
    """Everything the structural detector needs at one prime.

    root_base is the residue of the linear factor's root, conj_roots the
    Frobenius orbit of the extension root, base the subgroup generator
    a1^d / ((-1)^d c0), and q the exponent split (p^{d-1}-1)/(p-1).
    """

    p: int
    root_base: int
    ext: ExtField
    conj_roots: tuple[ExtElem, ...]
    gammas: tuple[ExtElem, ...]
    nloc: int
    base: int
    ord_base: int
    q: int

    @property
    def gamma1(self) -> int:
        return self.gammas[0].base_value()

    @property
    def index_base(self) -> int:
        return (self.p - 1) // self.ord_base


@dataclass(frozen=True)
class Verdict:
    """Per-prime outcome with witness and method provenance."""

    kind: str  # "divisor" | "nondivisor" | "excluded" | "indeterminate"
    method: str = "none"  # "structural" | "brute" | "both" | "none"
    witness: int | None = None
    reason: str | None = None
    detail: str | None = None


@dataclass(frozen=True)
class DetectPolicy:
    """Budgets and determinism knobs for detection."""

    r_cap: int = 2_000_000
    brute_cap: int = 10_000_000
    seed: int = 0
    recover_witness: bool = True
    zero_scan_bound: int = 200


DEFAULT_POLICY = DetectPolicy()


def _verified_divisor(
    spec: RecurrenceSpec, p: int, witness: int | None, method: str, detail: str | None = None
) -> Verdict:
    if witness is not None and term_mod(spec, witness, p) != 0:
        raise RuntimeError(f"witness {witness} does not vanish mod {p}")
    return Verdict("divisor", method=method, witness=witness, detail=detail)


def build_context(spec: RecurrenceSpec, p: int, seed: int = 0) -> StructuralContext | Excluded:
    """Structural context at p, or the exclusion that prevents it."""
    d = spec.order
    if d < 3:
        return Excluded("pattern-mismatch", "structural path needs order >= 3")
    if spec.coeffs[0] % p == 0:
        return Excluded("divides-c0")
    cp = spec.char_poly()
    pat = pattern(cp, p, seed)
    if not pat.squarefree:
        return Excluded("ramified")
    if pat.degrees != (d - 1, 1):
        return Excluded("pattern-mismatch", f"pattern {pat.key}")
    factors = factor_mod_p(reduce_poly(cp, p), seed)
    linear = next(g for g, _ in factors if g.degree == 1)
    big = next(g for g, _ in factors if g.degree == d - 1)
    a1 = -linear.coeffs[0] % p
    ext = ExtField(p, big)
    alpha = ext.gen()
    conj = [alpha]
    for _ in range(d - 2):
        conj.append(frobenius(conj[-1]))
    roots = [ext.embed(a1)] + conj
    gammas = solve_gamma(roots, [v % p for v in spec.init])
    if gammas[0].base_value() == 0:
        return Excluded("gamma1-vanishes")
    nloc = (-1) ** d * spec.coeffs[0] % p
    base = pow(a1, d, p) * pow(nloc, -1, p) % p
    ord_base = mult_order(base, p, factor_integer(p - 1))
    q = (p ** (d - 1) - 1) // (p - 1)
    if __debug__:
        assert nloc == a1 * ext_norm(conj[0]) % p, "norm identity violated"
        assert q % (p - 1) == (d - 1) % (p - 1), "exponent congruence violated"
    return StructuralContext(
        p=p,
        root_base=a1,
        ext=ext,
        conj_roots=tuple(conj),
        gammas=tuple(gammas),
        nloc=nloc,
        base=base,
        ord_base=ord_base,
        q=q,
    )


def structural_base(ctx: StructuralContext) -> int:
    """The subgroup generator G = a1^d / ((-1)^d c0) mod p."""
    return ctx.base


def _dlog_table(p: int) -> tuple[list[int], int]:
    """Discrete log table for F_p^* w.r.t. the least primitive root."""
    tot = factor_integer(p - 1)
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in tot.prime_divisors()):
        g += 1
    table = [0] * p
    v = 1
    for j in range(p - 1):
        table[v] = j
        v = v * g % p
    return table, g


def _bsgs(base: int, target: int, order: int, p: int) -> int:
    """Least k in [0, order) with base^k = target; target must lie in <base>."""
    if order == 1:
        if target != 1:
            raise RuntimeError("target outside the subgroup")
        return 0
    m = math.isqrt(order - 1) + 1
    baby: dict[int, int] = {}
    v = 1
    for j in range(m):
        baby.setdefault(v, j)
        v = v * base % p
    ginv = pow(v, -1, p)  # base^(-m)
    cur = target
    for i in range(m):
        j = baby.get(cur)
        if j is not None:
            return i * m + j
        cur = cur * ginv % p
    raise RuntimeError("discrete log not found in subgroup")


def structural_detect(
    ctx: StructuralContext,
    spec: RecurrenceSpec,
    r_cap: int,
    recover_witness: bool = True,
) -> Verdict:
    """Scan r = 0..min(Q, r_cap)-1 for a subgroup membership hit.

    Divisor verdicts carry the witness n = k*Q + r (re-verified) when
    recover_witness is set; NonDivisor is only reported after the full
    range r < Q has been scanned.
    """
    p = ctx.p
    full = ctx.q
    limit = min(full, r_cap)
    a1 = ctx.root_base
    g1 = ctx.gamma1
    ordg = ctx.ord_base
    a1o = pow(a1, ordg, p)
    pw = g1  # gamma1 * a1^r
    pwo = pow(g1, ordg, p)  # pw^ordg, maintained multiplicatively
    stream = term_stream(spec, p)
    table = None
    m_index = 0
    hit = None  # (r, T, pw)
    for r in range(limit):
        ar = next(stream)
        t = (ar - pw) % p
        if t:
            if table is None and r >= _TABLE_THRESHOLD:
                table, _ = _dlog_table(p)
                m_index = (p - 1) // ordg
            if table is None:
                if pow(p - t, ordg, p) == pwo:
                    hit = (r, t, pw)
                    break
            else:
                if (table[p - t] - table[pw]) % m_index == 0:
                    hit = (r, t, pw)
                    break
        pw = pw * a1 % p
        pwo = pwo * a1o % p
    if hit is None:
        if limit == full:
            return Verdict("nondivisor", method="structural")
        return Verdict(
            "indeterminate",
            method="structural",
            detail=f"scanned {limit} of {full} residues",
        )
    r, t, pw = hit
    if not recover_witness:
        return Verdict("divisor", method="structural", witness=None)
    rhs = (p - t) * pow(pw, -1, p) % p
    if ordg == 1:
        k = 0
    elif table is not None:
        ind_rhs = (table[rhs]) % (p - 1)
        ind_base = table[ctx.base]
        k = (ind_rhs // m_index) * pow(ind_base // m_index, -1, ordg) % ordg
    else:
        k = _bsgs(ctx.base, rhs, ordg, p)
    n = k * full + r
    return _verified_divisor(spec, p, n, "structural")


@lru_cache(maxsize=64)
def _first_exact_zero(spec: RecurrenceSpec, bound: int) -> int | None:
    zeros = zero_term_scan(spec, bound)
    return zeros[0] if zeros else None


def detect_full(
    spec: RecurrenceSpec, p: int, policy: DetectPolicy = DEFAULT_POLICY
):
    """(pattern, context or None, verdict) for one prime."""
    pat = pattern(spec.char_poly(), p, policy.seed)
    zero_index = _first_exact_zero(spec, policy.zero_scan_bound)
    if zero_index is not None:
        return pat, None, _verified_divisor(
            spec, p, zero_index, "none", detail="degenerate: zero term"
        )
    if spec.coeffs[0] % p == 0:
        return pat, None, Verdict("excluded", reason="divides-c0")
    if not pat.squarefree:
        return pat, None, Verdict("excluded", reason="ramified")
    d = spec.order
    if d >= 3 and pat.degrees == (d - 1, 1):
        res = build_context(spec, p, policy.seed)
        if isinstance(res, Excluded):
            return pat, None, Verdict("excluded", reason=res.reason, detail=res.detail)
        verdict = structural_detect(res, spec, policy.r_cap, policy.recover_witness)
        return pat, res, verdict
    scan = has_zero_bruteforce(spec, p, policy.brute_cap)
    if scan.kind == "divisor":
        return pat, None, _verified_divisor(spec, p, scan.witness, "brute")
    if scan.kind == "nondivisor":
        return pat, None, Verdict("nondivisor", method="brute")
    return pat, None, Verdict(
        "indeterminate", method="brute", detail=f"cap {policy.brute_cap} reached"
    )


def detect(spec: RecurrenceSpec, p: int, policy: DetectPolicy = DEFAULT_POLICY) -> Verdict:
    """Divisorship verdict at p: exclusions, then structural or brute path."""
    return detect_full(spec, p, policy)[2]


def cross_validate(
    spec: RecurrenceSpec, prime_limit: int, cap: int = 10_000_000, seed: int = 0
) -> list[tuple[int, str, str]]:
    """Run both detectors on every unexcluded (1, d-1) prime; list mismatches.

    The brute scan must complete a full period at every tested prime, so
    prime_limit has to be small enough for the cap; a capped scan raises.
    """
    mismatches = []
    for p in sieve_primes(prime_limit):
        res = build_context(spec, p, seed)
        if isinstance(res, Excluded):
            continue
        sv = structural_detect(res, spec, r_cap=res.q)
        bv = has_zero_bruteforce(spec, p, cap)
        if bv.kind == "capped":
            raise ValueError(f"brute-force cap too small for a full period at p={p}")
        if sv.kind != bv.kind:
            mismatches.append((p, sv.kind, bv.kind))
    return mismatches

"""The verification battery: every acceptance check as a named pass/fail
result, shared by ``pzero verify`` and the acceptance test-suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import curves as C
from .lingrp import (
    FamilyId,
    NaturalAction,
    build_family,
    build_su3_matrix,
    expected_order,
    fpf_cyclic_divisors,
    fpf_witness,
    stabilizer_constants,
)
from .perm import (
    SEED,
    ConditionViolation,
    check_condition4,
    classify_theorem1,
    is_ti_subgroup,
    is_two_transitive,
    sample_involutions,
    symmetric_group,
)
from .ramify import ASCover, as_cover_analyze, as_reduce, quotient_genus_tame, RamificationError
from .field import make_field
from .spectrum import bound_checks, crosscheck_gqfpf, enumerate_spectrum, d_p, quotient_consistency

GROUP_GRID = [("PSL2", 4), ("PSL2", 8), ("SZ", 8), ("PGU3", 4), ("PGU3", 8), ("PSU3", 8), ("SZ", 32)]
QUICK_SKIP = {("SZ", 32)}


@dataclass
class CheckResult:
    criterion: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.criterion} {self.name}: {self.detail}"

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


@lru_cache(maxsize=None)
def built(name: str, n: int) -> NaturalAction:
    return build_family(name, n)


def _grid(quick: bool):
    return [(f, n) for f, n in GROUP_GRID if not (quick and (f, n) in QUICK_SKIP)]


def _run(criterion: str, name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(criterion, name, ok, detail, time.perf_counter() - t)


# -- 1: group orders --------------------------------------------------------------------------


def check_orders(quick: bool = False) -> list[CheckResult]:
    out = []
    start = time.perf_counter()
    for name, n in _grid(quick):
        def fn(name=name, n=n):
            got = built(name, n).group.order()
            want = expected_order(FamilyId(name, n))
            return got == want, f"order {got}, expected {want}"
        out.append(_run("1", f"order {name}({n})", fn))
    total = time.perf_counter() - start
    out.append(CheckResult("1", "total time", total < 60, f"{total:.1f}s (limit 60s)", total))
    return out


# -- 2: action properties ---------------------------------------------------------------------


def _action_properties(name: str, n: int) -> tuple[bool, str]:
    a = built(name, n)
    g = a.group
    sp, sp1, h, degree = stabilizer_constants(a.family)
    two_t = is_two_transitive(g)
    stab = g.stabilizer(a.distinguished_point).order()
    s2 = a.sylow2.order()
    ti = is_ti_subgroup(g, a.sylow2)
    invs = sample_involutions(g, 1000, SEED)
    try:
        check_condition4(invs)
        cond4 = True
    except ConditionViolation:
        cond4 = False
    ok = two_t and g.degree == degree and stab == sp and s2 == sp1 and sp == sp1 * h and ti and cond4
    detail = (
        f"2-transitive={two_t} degree={g.degree} |G_P|={stab}/{sp} |S_P^(1)|={s2}/{sp1} "
        f"TI={ti} involutions={len(invs)} one-fixed-point={cond4}"
    )
    return ok, detail


def _su3(n: int) -> tuple[bool, str]:
    m = build_su3_matrix(n)
    order, centre = m.order(), m.center_order()
    fam = FamilyId("SU3", n)
    ok = order == expected_order(fam) and centre == fam.mu
    ok = ok and order // centre == expected_order(FamilyId("PSU3", n))
    ok = ok and all(m.is_unitary(x) and m.ops.det(x) == 1 for x in m.generators)
    return ok, f"|SU|={order} centre={centre} |SU|/|Z|={order // centre}"


def _fpf(name: str, n: int) -> tuple[bool, str]:
    a = built(name, n)
    fam = FamilyId("PSU3" if name == "PGU3" else name, n)
    missing = [c for c in fpf_cyclic_divisors(fam) if fpf_witness(a, c) is None]
    return not missing, f"divisors {fpf_cyclic_divisors(fam)} missing witnesses {missing}"


def check_actions(quick: bool = False) -> list[CheckResult]:
    out = []
    for name, n in _grid(quick):
        out.append(_run("2", f"action {name}({n})", lambda name=name, n=n: _action_properties(name, n)))
    for name, n in [("PSL2", 8), ("SZ", 8), ("PSU3", 4)]:
        out.append(_run("2", f"fpf cyclic witnesses {name}({n})", lambda name=name, n=n: _fpf(name, n)))
    for n in ([4] if quick else [4, 8]):
        out.append(_run("2", f"SU3({n}) on vectors", lambda n=n: _su3(n)))
    return out


# -- 3: curves ----------------------------------------------------------------------------------


def check_curves(quick: bool = False) -> list[CheckResult]:
    out = []
    for fam, kw, e, want in [("II", {"n": 4}, 4, 65), ("II", {"n": 8}, 6, 513), ("III", {"n": 8}, 3, 65)]:
        def fn(fam=fam, kw=kw, e=e, want=want):
            c = C.curve(fam, **kw)
            got = C.rational_points(c, e).total
            return got == want, f"{got} points over GF(2^{e}), expected {want}"
        out.append(_run("3", f"points {fam}{kw}", fn))
    for n in (4, 8):
        def hw(n=n):
            c = C.curve("II", n=n)
            total = C.rational_points(c, 2 * (n.bit_length() - 1)).total
            want = n * n + 1 + 2 * C.genus(c) * n
            return total == want, f"N={total}, n^2+1+2gn={want}"
        out.append(_run("3", f"Hasse-Weil equality II(n={n})", hw))
    for fam, kw in [("II", {"n": 4}), ("III", {"n": 8})]:
        def va(fam=fam, kw=kw):
            r = C.verify_automorphisms(C.curve(fam, **kw))
            return r.ok, f"generated order {r.generated_order}, expected {r.expected_order}, maps {r.generators_ok}"
        out.append(_run("3", f"automorphisms {fam}{kw}", va))
    return out


# -- 4: genus and 2-rank --------------------------------------------------------------------------

STICH_GRID = [(3, 3), (5, 3), (5, 11), (7, 3), (9, 3), (9, 19)]


def check_genus(quick: bool = False) -> list[CheckResult]:
    out = []
    F2 = make_field(1)
    for k in (2, 3, 4, 5):
        def fn(k=k):
            a = as_cover_analyze(as_reduce(ASCover(F2, (0,) * (2**k + 1) + (1,))))
            return a.genus == 2 ** (k - 1) and a.two_rank == 0, f"g={a.genus} (2^(k-1)={2 ** (k - 1)}), 2-rank={a.two_rank}"
        out.append(_run("4", f"AS cover (I) k={k}", fn))
    grid = [("I", {"k": k}) for k in (2, 3, 4, 5)]
    grid += [("II", {"n": n}) for n in (4, 8, 16, 32)]
    grid += [("III", {"n": n}) for n in (8, 32, 128)]
    grid += [("STICH", {"n_exp": a, "m": m}) for a, m in STICH_GRID]

    def ds():
        bad = [(f, kw) for f, kw in grid if C.two_rank(C.curve(f, **kw)) != 0]
        return not bad, f"{len(grid)} curves certified, nonzero: {bad}"

    out.append(_run("4", "Deuring-Shafarevich 2-rank 0", ds))

    def dp():
        count = 0
        for fam in _spectrum_grid():
            for e in enumerate_spectrum(fam).entries:
                crosscheck_gqfpf(e)
                d_p(e)
                count += 1
        return True, f"{count} entries: Hurwitz with d_P = 2g-2+|S_P^(1)|+|S_P| reproduces g"

    out.append(_run("4", "d_P identity on every spectrum entry", dp))
    return out


def _spectrum_grid() -> list[FamilyId]:
    return [
        FamilyId("PSL2", 4), FamilyId("PSL2", 8), FamilyId("PSL2", 16), FamilyId("PSL2", 64),
        FamilyId("SZ", 8), FamilyId("SZ", 32), FamilyId("SZ", 128),
        FamilyId("PSU3", 4), FamilyId("PSU3", 8), FamilyId("PSU3", 16), FamilyId("PSU3", 32),
        FamilyId("SU3", 8), FamilyId("SU3", 32),
    ]


# -- 5: spectrum -------------------------------------------------------------------------------------


def check_spectrum(quick: bool = False) -> list[CheckResult]:
    out = []
    expected = {
        ("PSL2", 4): [6],
        ("PSL2", 8): [7, 28],
        ("SZ", 8): [14, 196, 196],
        ("PSU3", 4): [6, 66, 456, 456],
    }
    for (name, n), want in expected.items():
        def fn(name=name, n=n, want=want):
            got = enumerate_spectrum(FamilyId(name, n)).genera()
            return got == want, f"genera {got}, expected {want}"
        out.append(_run("5", f"spectrum {name}({n})", fn))

    def witnesses():
        sz = enumerate_spectrum(FamilyId("SZ", 8)).entries
        psu = enumerate_spectrum(FamilyId("PSU3", 4)).entries
        a = [(e.case_tag, e.t, e.genus) for e in sz if e.witness == "DLS(III)"]
        b = [(e.case_tag, e.t, e.genus) for e in psu if e.witness == "Hermitian(II)"]
        return a == [("SZ-B", 1, 14)] and b == [("PSU3-first", 1, 6)], f"(III) at {a}; (II) at {b}"

    out.append(_run("5", "witness tags", witnesses))

    def crosscheck():
        n = 0
        for fam in _spectrum_grid():
            for e in enumerate_spectrum(fam).entries:
                crosscheck_gqfpf(e)
                n += 1
        return True, f"{n} entries pass the orbit-formula cross-check exactly"

    out.append(_run("5", "crosscheck_gqfpf", crosscheck))
    for n in (8, 32):
        def su3(n=n):
            e = [x for x in enumerate_spectrum(FamilyId("SU3", n)).entries
                 if x.case_tag == "SU3-second" and x.t == n + 1]
            want = (n**3 + 1) * (n * n - 2) // 2 + 1
            return len(e) == 1 and e[0].genus == want, f"g={e[0].genus if e else None}, (IV) genus {want}"
        out.append(_run("5", f"SU3({n}) second case t=n+1 is (IV)", su3))
    return out


# -- 6: quotients -----------------------------------------------------------------------------------


def check_quotients(quick: bool = False) -> list[CheckResult]:
    def fn():
        got = sorted(quotient_genus_tame(456, h, 65) for h in (1, 5, 13))
        spec = sorted(set(enumerate_spectrum(FamilyId("PSU3", 4)).genera()))
        try:
            quotient_genus_tame(456, 65, 65)
            inadmissible = False
        except RamificationError:
            inadmissible = True
        ok = got == [6, 66, 456] and got == spec and inadmissible
        return ok, f"h=1,5,13 -> {got}; spectrum set {spec}; h=65 inadmissible={inadmissible}"

    def report():
        r = quotient_consistency(4)
        return r.matches, f"rows {[(x.h, x.genus) for x in r.rows]}"

    return [_run("6", "quotients of (IV), n=4", fn), _run("6", "quotient_consistency(4)", report)]


# -- 7: bounds ----------------------------------------------------------------------------------------


def check_bounds(quick: bool = False) -> list[CheckResult]:
    out = []
    for label, order, g, fixes, route in [
        ("(II) n=4", 62400, 6, False, "classification"),
        ("(III) n=8", 29120, 14, False, "classification"),
        ("(I) k=3", 1152, 4, True, "fixed_point"),
    ]:
        def fn(order=order, g=g, fixes=fixes, route=route):
            r = bound_checks(order, g, fixes_point=fixes)
            ok = r.checks["trigger_gt_24g2"] and r.route == route
            return ok, f"{order} > 24g^2={24 * g * g}: {r.checks['trigger_gt_24g2']}, route={r.route}"
        out.append(_run("7", f"trigger {label}", fn))
    return out


# -- 8: classification -------------------------------------------------------------------------------


def expected_classification(name: str, n: int) -> tuple[str, int]:
    # the normal closure of a Sylow 2-subgroup of PGU(3,n) is PSU(3,n)
    return ("PSU3", n) if name in ("PGU3", "PSU3") else (name, n)


def check_classification(quick: bool = False) -> list[CheckResult]:
    out = []
    for name, n in _grid(quick):
        def fn(name=name, n=n):
            a = built(name, n)
            r = classify_theorem1(a.group, a.sylow2)
            want = expected_classification(name, n)
            ok = r.case == "linear_family" and r.family_guess == want
            return ok, f"case={r.case} family={r.family_guess} |Omega|={r.omega_size} |S|={r.s_order}"
        out.append(_run("8", f"classify {name}({n})", fn))

    def s3():
        r = classify_theorem1(symmetric_group(3))
        ok = r.case == "odd_times_2group" and r.unique_involution and r.s2_order == 2
        return ok, f"case={r.case} |S_2|={r.s2_order} unique involution={r.unique_involution}"

    out.append(_run("8", "classify S3 (order-6 Frobenius group)", s3))
    return out


# -- 9: stretch ----------------------------------------------------------------------------------------


def check_stretch(quick: bool = False) -> list[CheckResult]:
    def fn():
        r = C.counterexample_two_rank()
        return r.two_rank == 4, f"g={r.genus}, N_1..N_{r.genus}={r.point_counts}, 2-rank={r.two_rank}"

    return [_run("9", "2-rank of the one-fixed-point counterexample via L-polynomial (stretch)", fn)]


SUITES = {
    "groups": [check_orders, check_actions, check_classification],
    "curves": [check_curves, check_genus],
    "spectrum": [check_spectrum, check_quotients, check_bounds],
}
SUITES["all"] = SUITES["groups"] + SUITES["curves"] + SUITES["spectrum"] + [check_stretch]


def run_suite(suite: str = "all", quick: bool = False) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    results: list[CheckResult] = []
    for check in SUITES[suite]:
        results.extend(check(quick))
    return results

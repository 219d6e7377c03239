"""Exact solutions of the algebraic quasi-Einstein systems.

Everything here is exact: ``Fraction`` for rationals, ``Surd`` when a quadratic
root is irrational. The metric is normalized so that ``a = 1`` on p and the
vector field is ``X = n0 e0`` along the (-B)-unit center vector.

The Einstein-type constant follows the p-block equation
``lambda = 1/4 - sum_i (a_i - 1) s_i (1 - c_i) / (2n)``, which for ``su(2)`` gives
``lambda = (2 - a0) / 4``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .catalog import TABLE2, EmbeddingCase, fraction_str, make_case
from .surd import Surd, quadratic_roots

Exact = Union[Fraction, Surd]

RIEMANNIAN = "riemannian"
LORENTZ_TIMELIKE = "lorentz_timelike_center"
# Riemannian metric with the 4 n0^2 = p m parametrization (f4, first table).
RIEMANNIAN_PM = "riemannian_pm"
BRANCHES = (RIEMANNIAN, LORENTZ_TIMELIKE, RIEMANNIAN_PM)


class SolverError(ValueError):
    """The requested parameters have no solution (zero denominator, bad branch)."""


def exact_json(x):
    if isinstance(x, Surd):
        return fraction_str(x.u) if x.is_rational else x.to_dict()
    if isinstance(x, (int, Fraction)):
        return fraction_str(x)
    return x


def _float(x) -> float:
    return float(x)


@dataclass(frozen=True)
class QEMParams:
    case_id: str
    a_k: tuple[Exact, ...]
    p: Exact
    lam: Exact
    branch: str = RIEMANNIAN
    a: Fraction = Fraction(1)

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise SolverError(f"unknown branch {self.branch!r}")

    @property
    def trivial(self) -> bool:
        return self.p == (1 if self.branch == RIEMANNIAN else 0)

    @property
    def admissible(self) -> bool:
        """Whether n0^2 >= 0 for this branch."""
        return self.p <= 1 if self.branch == RIEMANNIAN else self.p >= 0

    @property
    def n0_formula(self) -> str:
        return "n0 = sqrt((1 - p) m) / 2" if self.branch == RIEMANNIAN else "n0 = sqrt(p m) / 2"

    def n0(self, m) -> Surd:
        return n0_from_p(self.p, m, self.branch)

    def to_dict(self) -> dict:
        return {
            "case": self.case_id,
            "branch": self.branch,
            "a": exact_json(self.a),
            "a_k": [exact_json(x) for x in self.a_k],
            "p": exact_json(self.p),
            "lambda": exact_json(self.lam),
            "trivial": self.trivial,
            "n0_formula": self.n0_formula,
            "discrepancies": [],
        }


@dataclass(frozen=True)
class Discrepancy:
    kind: str
    printed: object
    recomputed: object
    note: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "printed": _jsonify(self.printed),
            "recomputed": _jsonify(self.recomputed),
            "note": self.note,
        }


def _jsonify(x):
    if isinstance(x, (list, tuple)):
        return [_jsonify(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonify(v) for k, v in x.items()}
    return exact_json(x)


@dataclass
class SolutionReport:
    case_id: str
    solutions: list[QEMParams]
    discrepancies: list[Discrepancy] = field(default_factory=list)
    alternatives: dict[str, list[QEMParams]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "case": self.case_id,
            "solutions": [s.to_dict() for s in self.solutions],
            "alternatives": {k: [s.to_dict() for s in v] for k, v in self.alternatives.items()},
            "discrepancies": [d.to_dict() for d in self.discrepancies],
            "notes": list(self.notes),
        }


# -- isotropy irreducible cases ----------------------------------------------


def _require_constants(case: EmbeddingCase, r: int | None = None):
    if case.d or len(case.c) != case.r:
        raise SolverError(f"{case.id} is not an isotropy-irreducible catalog case")
    if r is not None and case.r != r:
        raise SolverError(f"{case.id} has r = {case.r}, expected r = {r}")


def lambda_from_params(case: EmbeddingCase, a_k) -> Exact:
    """lambda = 1/4 - sum_{i>=0} (a_i - 1) s_i (1 - c_i) / (2n), with s_0 = dim k_0, c_0 = 0."""
    _require_constants(case)
    a_k = list(a_k)
    s = (case.center_dim,) + case.s
    c = (Fraction(0),) + case.c
    if len(a_k) != len(s):
        raise SolverError(f"expected {len(s)} block scalars for {case.id}")
    total = Fraction(0)
    for ai, si, ci in zip(a_k, s, c):
        total = (ai - 1) * si * (1 - ci) + total
    return Fraction(1, 4) - total / (2 * case.n) if not isinstance(total, Surd) else (
        Surd(Fraction(1, 4)) - total / Surd(2 * case.n)
    )


def block_equation_residuals(case: EmbeddingCase, params: QEMParams) -> list[Exact]:
    """Residuals of a0 p = 1 - (2/n) sum (a_i-1) s_i (1-c_i) and a0 a_i p = (1-a_i^2) c_i + a_i^2."""
    _require_constants(case)
    a_k = list(params.a_k)
    s = (case.center_dim,) + case.s
    c = (Fraction(0),) + case.c
    total = sum(((ai - 1) * si * (1 - ci) for ai, si, ci in zip(a_k, s, c)), Fraction(0))
    a0, p = a_k[0], params.p
    out = [a0 * p - (1 - Fraction(2, case.n) * total)]
    for ai, ci in zip(a_k[1:], case.c):
        out.append(a0 * ai * p - ((1 - ai * ai) * ci + ai * ai))
    return out


def solve_r0(p) -> QEMParams:
    """su(2) with k = u(1): (p + 1) a0 = 2."""
    p = Fraction(p)
    if p == -1:
        raise SolverError("p = -1 has no solution")
    if p > 1:
        raise SolverError("p > 1 gives 4 n0^2 = (1 - p) m < 0")
    a0 = 2 / (p + 1)
    params = QEMParams("SU2_R0", (a0,), p, (2 - a0) / 4)
    assert params.lam == lambda_from_params(make_case("SU2_R0"), params.a_k)
    return params


def _r1_denominator(case: EmbeddingCase, a1: Fraction) -> Fraction:
    (s1,), (c1,), n = case.s, case.c, case.n
    return -(2 * s1 + n) * (1 - c1) * a1 * a1 + (n + 2 + 2 * s1 * (1 - c1)) * a1 - n * c1


def solve_r1(case: EmbeddingCase, a1) -> QEMParams:
    """Closed form for k = k_0 + k_1 acting irreducibly on p, as a function of a1."""
    _require_constants(case, 1)
    a1 = Fraction(a1)
    if a1 == 0:
        raise SolverError("a1 must be nonzero")
    (c1,) = case.c
    den = _r1_denominator(case, a1)
    if den == 0:
        raise SolverError(f"a1 = {a1} is a root of the denominator (boundary of admissibility)")
    p = (2 * (1 - c1) * a1 * a1 + 2 * c1) / den
    a0 = den / (2 * a1)
    lam = ((1 - a1 * a1) * c1 + a1 * a1) / (4 * a1)
    params = QEMParams(case.id, (a0, a1), p, lam)
    _self_check(case, params)
    return params


def _self_check(case: EmbeddingCase, params: QEMParams) -> None:
    if lambda_from_params(case, params.a_k) != params.lam:
        raise AssertionError(f"{case.id}: lambda from block equations disagrees")
    if any(x != 0 for x in block_equation_residuals(case, params)):
        raise AssertionError(f"{case.id}: solution does not satisfy the block equations")


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    @property
    def empty(self) -> bool:
        return self.lo >= self.hi

    def contains(self, x, strict: bool = True) -> bool:
        if self.empty:
            return False
        return self.lo < x < self.hi if strict else self.lo <= x <= self.hi

    def __str__(self):
        return "empty" if self.empty else f"({_q(self.lo)}, {_q(self.hi)})"

    def to_dict(self) -> dict:
        return {"lo": fraction_str(self.lo), "hi": fraction_str(self.hi), "empty": self.empty}


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def interval_endpoint(case: EmbeddingCase) -> Fraction:
    """(n+2) c1 / ((2 s1 + n + 2)(1 - c1))."""
    _require_constants(case, 1)
    (s1,), (c1,), n = case.s, case.c, case.n
    return (n + 2) * c1 / ((2 * s1 + n + 2) * (1 - c1))


def interval_r1(case: EmbeddingCase) -> Interval:
    """Open a1-interval of nontrivial Riemannian solutions.

    The admissibility quadratic factors as ((2s1+n+2)(1-c1) a1 - (n+2) c1)(a1 - 1) < 0.
    """
    lo = interval_endpoint(case)
    return Interval(min(lo, Fraction(1)), max(lo, Fraction(1)))


@dataclass(frozen=True)
class LorentzBranches:
    case_id: str
    x1: Surd
    x2: Surd
    endpoint: Fraction
    branches: tuple[dict, ...]

    @property
    def ordered(self) -> bool:
        return self.x1 < self.endpoint <= 1 < self.x2

    def to_dict(self) -> dict:
        return {
            "case": self.case_id,
            "x1": exact_json(self.x1),
            "x2": exact_json(self.x2),
            "x1_float": float(self.x1),
            "x2_float": float(self.x2),
            "endpoint": fraction_str(self.endpoint),
            "ordered": self.ordered,
            "branches": [dict(b) for b in self.branches],
        }


def lorentz_branches_r1(case: EmbeddingCase) -> LorentzBranches:
    """Sign pattern of (a0, p, lambda) and signature on each a1-range."""
    _require_constants(case, 1)
    (s1,), (c1,), n = case.s, case.c, case.n
    roots = quadratic_roots((2 * s1 + n) * (1 - c1), -(n + 2 + 2 * s1 * (1 - c1)), n * c1)
    if len(roots) != 2 or not roots[0] > 0:
        raise AssertionError(f"{case.id}: expected two distinct positive roots")
    x1, x2 = roots
    lo = interval_endpoint(case)
    dim = 1 + s1 + n
    branches = (
        {
            "name": "a1<0",
            "a1_range": "(-inf, 0)",
            "a0_sign": 1, "p_sign": -1, "lambda_sign": -1,
            "signature": [1 + n, s1],
        },
        {
            "name": "a1>0,a0>0",
            "a1_range": f"[{_q(min(lo, Fraction(1)))}, {_q(max(lo, Fraction(1)))}]",
            "a0_sign": 1, "p_sign": 1, "lambda_sign": 1,
            "signature": [dim, 0],
        },
        {
            "name": "a1>0,a0<0",
            "a1_range": "(0, x1) or (x2, inf)",
            "a0_sign": -1, "p_sign": -1, "lambda_sign": 1,
            "signature": [dim - 1, 1],
        },
    )
    return LorentzBranches(case.id, x1, x2, lo, branches)


# -- s(u(l1) + u(l2)) in su(l1 + l2) ------------------------------------------


def r2_quadratic(l1: int, l2: int) -> tuple[int, int, int]:
    """Coefficients of (l1^3 + l1^2 l2 + l1 l2^2 - l1) x^2 - 2 l1 l2 (l1 + l2) x + (l1 l2 + 1) l2."""
    return (
        l1**3 + l1 * l1 * l2 + l1 * l2 * l2 - l1,
        -2 * l1 * l2 * (l1 + l2),
        (l1 * l2 + 1) * l2,
    )


def discriminant_r2(l1: int, l2: int) -> tuple[int, int]:
    """(b^2 - 4ac of the r = 2 quadratic, 4 l1 l2 (l1^2 - 1)(l2^2 - 1))."""
    a, b, c = r2_quadratic(l1, l2)
    return b * b - 4 * a * c, 4 * l1 * l2 * (l1 * l1 - 1) * (l2 * l2 - 1)


def roots_r2(l1: int, l2: int) -> tuple[Surd, Surd]:
    if l1 < 2 or l2 < 2:
        raise SolverError("l1, l2 must exceed 1")
    roots = quadratic_roots(*r2_quadratic(l1, l2))
    if len(roots) != 2 or not roots[0] > 0:
        raise AssertionError("expected two distinct positive roots")
    return roots


def solve_r2_su(l1: int, l2: int, a2) -> QEMParams:
    """Branch a1 = (l1 / l2) a2 of the r = 2 system.

    ``a2`` may be a rational or an exact surd (e.g. one of ``roots_r2``).
    """
    case = make_case("SU_L1L2", l1=l1, l2=l2)
    a2 = a2 if isinstance(a2, Surd) else Surd(Fraction(a2))
    if a2 == 0:
        raise SolverError("a2 must be nonzero")
    a1 = a2 * Fraction(l1, l2)
    q = (
        a2 * a2 * -(l1**3 + l1 * l1 * l2 + l1 * l2 * l2 - 2 * l1)
        + a2 * (2 * l1 * l2 * (l1 + l2))
        - l1 * l2 * l2
    )
    if q == 0:
        raise SolverError(f"a2 = {a2} is a root of the denominator")
    p = (a2 * a2 * l1 + l2) / q
    a0 = q / (a2 * (l1 + l2))
    (c1, c2) = case.c
    lam = ((1 - a2 * a2) * c2 + a2 * a2) / (a2 * 4)
    params = QEMParams(case.id, tuple(_simplify(x) for x in (a0, a1, a2)), _simplify(p), _simplify(lam))
    _self_check(case, params)
    return params


def _simplify(x: Exact) -> Exact:
    return x.u if isinstance(x, Surd) and x.is_rational else x


def r2_other_branch(l1: int, l2: int) -> str:
    return (
        f"the branch a1 a2 = 1 of (a1 l2 - a2 l1)(1 - a1 a2) = 0 for l1={l1}, l2={l2} "
        "is reported only; no solutions are computed on it"
    )


def n0_from_p(p, m, branch: str = RIEMANNIAN) -> Surd:
    """n0 = sqrt((1 - p) m) / 2 (riemannian) or sqrt(p m) / 2 (p m conventions)."""
    m = Fraction(m)
    if m <= 0:
        raise SolverError("m must be positive")
    if branch not in BRANCHES:
        raise SolverError(f"unknown branch {branch!r}")
    if isinstance(p, Surd):
        if not p.is_rational:
            rad = (1 - p) * m if branch == RIEMANNIAN else p * m
            if rad < 0:
                raise SolverError("negative radicand: p is inadmissible for this branch")
            raise SolverError("n0 for an irrational p is not representable as a quadratic surd")
        p = p.u
    p = Fraction(p)
    rad = (1 - p) * m if branch == RIEMANNIAN else p * m
    if rad < 0:
        raise SolverError(f"negative radicand {rad}: p = {p} is inadmissible for the {branch} branch")
    return Surd.sqrt(rad) * Fraction(1, 2)


def n0_float(p, m, branch: str = RIEMANNIAN) -> float:
    try:
        return float(n0_from_p(p, m, branch))
    except SolverError as exc:
        if "not representable" not in str(exc):
            raise
    rad = (1 - float(p)) * float(m) if branch == RIEMANNIAN else float(p) * float(m)
    return 0.5 * math.sqrt(rad)


# -- the exceptional (non isotropy-irreducible) systems ----------------------
#
# Each equation is a dict over the monomials "1", "a0", "a1", "1/a1", "p",
# "lam" (rational coefficients) and stands for sum(coef * monomial) = 0.

MONOMIALS = ("1", "a0", "a1", "1/a1", "p", "lam")


def _eq(**terms) -> dict:
    out = {}
    for key, val in terms.items():
        name = {"one": "1", "inv_a1": "1/a1"}.get(key, key)
        if name not in MONOMIALS:
            raise KeyError(name)
        if val:
            out[name] = Fraction(val)
    return out


def _sub(e1: dict, e2: dict) -> dict:
    out = dict(e1)
    for k, v in e2.items():
        out[k] = out.get(k, Fraction(0)) - v
    return {k: v for k, v in out.items() if v != 0}


def eliminate_lambda(component_eqs: list[dict], pivot: int = -1) -> list[dict]:
    """Turn ``component_i = lam`` equations into lambda-free ones by subtracting the pivot."""
    base = component_eqs[pivot]
    others = [e for i, e in enumerate(component_eqs) if i != (pivot % len(component_eqs))]
    out = []
    for e in others:
        diff = _sub(e, base)
        if "lam" in diff:
            raise SolverError("lambda does not cancel")
        out.append(diff)
    return out


def evaluate(eq: dict, a0, a1, p, lam=0) -> Exact:
    if isinstance(a1, int):
        a1 = Fraction(a1)
    vals = {"1": 1, "a0": a0, "a1": a1, "1/a1": 1 / a1, "p": p, "lam": lam}
    total = Fraction(0)
    for k, v in eq.items():
        total = vals[k] * v + total
    return total


def solve_monomial_system(eqs: list[dict]) -> list[tuple[Exact, Exact, Exact]]:
    """Solve three equations linear in (a0, p) with coefficients Laurent in a1.

    Consistency of the 3 x 3 linear system gives a quadratic in a1 (after
    clearing 1/a1); each root then fixes (a0, p) by Cramer's rule.
    """
    if len(eqs) != 3:
        raise SolverError("expected three equations")
    for e in eqs:
        if set(e) - {"1", "a0", "a1", "1/a1", "p"}:
            raise SolverError(f"unsupported monomials in {e}")
    A = [e.get("a0", Fraction(0)) for e in eqs]
    P = [e.get("p", Fraction(0)) for e in eqs]
    minors = [
        A[1] * P[2] - A[2] * P[1],
        -(A[0] * P[2] - A[2] * P[0]),
        A[0] * P[1] - A[1] * P[0],
    ]
    # det = sum_e minors[e] * R_e(a1), R_e = c1 + ca1 a1 + cinv / a1; times a1:
    quad = [Fraction(0)] * 3  # coefficients of a1^2, a1, 1
    for mnr, e in zip(minors, eqs):
        quad[0] += mnr * e.get("a1", 0)
        quad[1] += mnr * e.get("1", 0)
        quad[2] += mnr * e.get("1/a1", 0)
    if all(x == 0 for x in quad):
        raise SolverError("the system does not determine a1")
    roots = quadratic_roots(*quad)
    sols = []
    for a1 in roots:
        if a1 == 0:
            continue
        rhs = [-(e.get("1", 0) + a1 * e.get("a1", 0) + e.get("1/a1", 0) / a1) for e in eqs]
        for i, j in ((0, 1), (0, 2), (1, 2)):
            det = A[i] * P[j] - A[j] * P[i]
            if det != 0:
                a0 = (rhs[i] * P[j] - rhs[j] * P[i]) / det
                p = (A[i] * rhs[j] - A[j] * rhs[i]) / det
                break
        else:
            raise SolverError("(a0, p) is not determined by the system")
        if any(evaluate(e, a0, a1, p) != 0 for e in eqs):
            raise AssertionError("root does not satisfy the system")
        sols.append(tuple(_simplify(x if isinstance(x, Surd) else Surd(x)) for x in (a0, a1, p)))
    return sols


TABLE1_D = (21, 16, 14)
TABLE1_PRINTED_SOLUTION = (Fraction(5, 9), Fraction(13, 9), Fraction(2, 9))


def table1_printed_reduced() -> list[dict]:
    """5a0 + 3a1 = 4p + 8, a0 = -10 a1 - 5/a1 + 16, a0 + a1 = 2."""
    return [
        _eq(a0=5, a1=3, p=-4, one=-8),
        _eq(a0=1, a1=10, inv_a1=5, one=-16),
        _eq(a0=1, a1=1, one=-2),
    ]


def table1_general_reduction(d=TABLE1_D) -> list[dict]:
    """The d-parametric reduction, evaluated at ``d``."""
    d1, d2, d3 = d
    return [
        _eq(a0=d2 + 4 * d3 + 8, a1=4 * (d3 - 2), p=-(d2 + 4 * d3), one=-(d2 + 8 * d3)),
        _eq(
            a0=1,
            a1=Fraction(d1 * d2 + (d3 - 2) * (4 * d1 + 2 * d3), 8 * d1),
            inv_a1=Fraction(d3 * (2 * d1 + 2 - d3), 4 * d1),
            one=-Fraction(d2 + 8 * d3, 8),
        ),
        _eq(a1=2 * d1 - 4 * d3 + 8, a0=-6, one=-(d2 - 2 * d3)),
    ]


def table1_qem_equations(d=TABLE1_D) -> list[dict]:
    """The four component equations ``= lam`` (a = 1, n0^2/m = p/4), moved to one side."""
    d1, d2, d3 = d
    D = d2 + 4 * d3
    F = Fraction
    return [
        _eq(a0=F(d2, 4 * D) + F(d3, D), p=F(-1, 4), lam=-1),
        _eq(
            inv_a1=F(d3 * (2 * d1 + 2 - d3), 2 * d1 * D),
            a1=F(d2, 4 * D) + F(d3 * (d3 - 2), 2 * d1 * D),
            lam=-1,
        ),
        _eq(one=F(1, 2) - F(d3, 2 * D), a0=F(-1, 2 * D), a1=F(-d1, 2 * D), lam=-1),
        _eq(one=F(2 * d3, D) + F(d2, 4 * D), a0=F(-2, D), a1=F(-(d3 - 2), D), lam=-1),
    ]


def table1_ricci_components(d=TABLE1_D) -> list[dict]:
    """The printed Ricci components r_b0, r_b1, r_m1, r_m2 at a = 1 (no lam, no p)."""
    d1, d2, d3 = d
    D = d2 + 4 * d3
    F = Fraction
    return [
        _eq(a0=F(d2, 4 * D) + F(d3, D)),
        _eq(
            inv_a1=F(d3 * (2 * d1 + 2 - d3), 4 * d1 * D),
            a1=F(d2, 4 * D) + F(d3 * (d3 - 2), 2 * d1 * D),
        ),
        _eq(one=F(1, 2) - F(d3, 2 * D), a0=F(-1, 2 * D), a1=F(-d1, 2 * D)),
        _eq(one=F(2 * d3, D) + F(d2, 4 * D), a0=F(-2, D), a1=F(-(d3 - 2), D)),
    ]


def _components_to_qem(components: list[dict]) -> list[dict]:
    eqs = [dict(c) for c in components]
    eqs[0]["p"] = Fraction(-1, 4)
    for e in eqs:
        e["lam"] = Fraction(-1)
    return eqs


def _table_params(case_id, sols, lam_eq, branch) -> list[QEMParams]:
    out = []
    for a0, a1, p in sols:
        lam = evaluate(lam_eq, a0, a1, p)
        out.append(QEMParams(case_id, (a0, a1), p, _simplify(lam if isinstance(lam, Surd) else Surd(lam)), branch))
    return out


def _casimir_fit(component: dict) -> tuple[Fraction, Fraction]:
    """Match alpha/a1 + beta a1 against c/(4 a1) + (1 - c) a1 / 4; returns the two c values."""
    alpha = component.get("1/a1", Fraction(0))
    beta = component.get("a1", Fraction(0))
    return 4 * alpha, 1 - 4 * beta


def solve_f4_table1() -> SolutionReport:
    """Printed f4 system of the first table, with an independent re-reduction."""
    F = Fraction
    printed = table1_printed_reduced()
    sols = solve_monomial_system(printed)
    # lambda from the fourth component equation
    lam_eq = table1_qem_equations()[3]
    solutions = _table_params("F4_TABLE1", sols, lam_eq, RIEMANNIAN_PM)
    report = SolutionReport("F4_TABLE1", solutions)

    qem_sols = solve_monomial_system(eliminate_lambda(table1_qem_equations()))
    report.alternatives["from_component_equations"] = _table_params(
        "F4_TABLE1", qem_sols, lam_eq, RIEMANNIAN_PM
    )
    general_sols = solve_monomial_system(table1_general_reduction())
    report.alternatives["from_general_reduction"] = _table_params(
        "F4_TABLE1", general_sols, lam_eq, RIEMANNIAN_PM
    )
    comp = table1_ricci_components()
    comp_sols = solve_monomial_system(eliminate_lambda(_components_to_qem(comp)))
    report.alternatives["from_printed_ricci_components"] = _table_params(
        "F4_TABLE1", comp_sols, _components_to_qem(comp)[3], RIEMANNIAN_PM
    )

    pa0, pa1, pp = TABLE1_PRINTED_SOLUTION
    residuals = [evaluate(e, pa0, pa1, pp) for e in printed]
    nontrivial = [s for s in sols if s[1] != 1]
    if any(r != 0 for r in residuals):
        swapped = (pa1, pa0, pp)
        report.discrepancies.append(
            Discrepancy(
                "printed_solution_slot_order",
                {"a0": pa0, "a1": pa1, "p": pp},
                {"a0": nontrivial[0][0], "a1": nontrivial[0][1], "p": nontrivial[0][2]},
                "the printed nontrivial solution does not satisfy the printed reduced system "
                f"(residuals {[fraction_str(r) if not isinstance(r, Surd) else str(r) for r in residuals]}); "
                + (
                    "exchanging a0 and a1 does"
                    if all(evaluate(e, *swapped) == 0 for e in printed)
                    else "exchanging a0 and a1 does not repair it"
                ),
            )
        )
    # coefficient of p after normalizing the first equation to 5 a0 + 3 a1
    gen = table1_general_reduction()[0]
    scale = printed[0]["a0"] / gen["a0"]
    if gen["p"] * scale != printed[0]["p"] or gen["a1"] * scale != printed[0]["a1"]:
        report.discrepancies.append(
            Discrepancy(
                "reduced_p_coefficient",
                {"equation": "5a0 + 3a1 = 4p + 8", "p_coefficient": -printed[0]["p"]},
                {"p_coefficient": -gen["p"] * scale, "constant": -gen["1"] * scale},
                "the d-parametric reduction evaluated at d = (21, 16, 14) gives "
                f"5a0 + 3a1 = {fraction_str(-gen['p'] * scale)} p + {fraction_str(-gen['1'] * scale)}",
            )
        )
    printed_set = {(s[0], s[1], s[2]) for s in sols}
    for alt in ("from_component_equations", "from_general_reduction"):
        alt_set = {(s.a_k[0], s.a_k[1], s.p) for s in report.alternatives[alt]}
        if alt_set != printed_set:
            report.discrepancies.append(
                Discrepancy(
                    f"solution_set_{alt}",
                    [list(s) for s in sorted(printed_set, key=lambda t: float(t[1]))],
                    [list(s) for s in sorted(alt_set, key=lambda t: float(t[1]))],
                    f"re-reduction ({alt.replace('_', ' ')}) disagrees with the printed reduced system",
                )
            )
    names = ("r_b0", "r_b1", "r_m1", "r_m2")
    for name, c in zip(names, comp):
        val = evaluate(c, 1, 1, 0)
        if val != F(1, 4):
            c_inv, c_lin = _casimir_fit(c)
            report.discrepancies.append(
                Discrepancy(
                    f"{name}_biinvariant",
                    {"component": name, "value_at_a0=a1=1": val},
                    {"expected": F(1, 4)},
                    f"at the bi-invariant metric every Ricci component must equal 1/4; {name} gives "
                    f"{fraction_str(val)}. Matching {name} to the closed-form k-block Ricci "
                    f"c/(4a1) + (1-c)a1/4 requires c = {fraction_str(c_inv)} (1/a1 term) and "
                    f"c = {fraction_str(c_lin)} (a1 term) at once",
                )
            )
    comp_set = {(s.a_k[0], s.a_k[1], s.p) for s in report.alternatives["from_printed_ricci_components"]}
    if comp_set != printed_set:
        report.discrepancies.append(
            Discrepancy(
                "solution_set_from_printed_ricci_components",
                [list(s) for s in sorted(printed_set, key=lambda t: float(t[1]))],
                [list(s) for s in sorted(comp_set, key=lambda t: float(t[1]))],
                "taking the printed Ricci components literally gives a different system",
            )
        )
    report.notes.append("no tensor-level certification: f4 has no matrix realization here")
    return report


def table2_printed_reduced(d) -> list[dict]:
    d1, d2, _ = d
    F = Fraction
    return [
        _eq(a0=1, p=F(d2 + 8, d2 + 16), one=-1),
        _eq(
            a0=1,
            a1=F(d2 * (d2 + 2), 16 * d1),
            inv_a1=-F(d2 * (d2 + 2) - 2 * d1 * (d2 + 8), 16 * d1),
            one=-F(d2 + 16, 8),
        ),
        _eq(a0=6, a1=-(d2 + 2), one=d2 - 4),
    ]


def table2_qem_equations(d) -> list[dict]:
    """Component equations ``= lam`` with <e0, e0> = -1 and n0^2/m = p/4."""
    d1, d2, d3 = d
    D = d2 + 8
    F = Fraction
    w = F(d2 * (d2 + 2), 2 * D)
    return [
        _eq(a0=F(d2, 4 * D) + F(2, D), p=F(1, 4), lam=-1),
        _eq(inv_a1=(d1 - w) / (4 * d1), a1=w / (4 * d1), lam=-1),
        _eq(one=F(1, 2) - F(d3, 2 * D), a0=F(-1, 2 * D), a1=F(-(d2 + 2), 4 * D), lam=-1),
        _eq(one=F(4, D) + F(d2, 4 * D), a0=F(-2, D), lam=-1),
    ]


TABLE2_PRINTED = {
    "E8_TABLE2": (Fraction(-279, 25), Fraction(9, 25), Fraction(4864, 375)),
    "F4_TABLE2": (Fraction(-8, 3), Fraction(4, 15), Fraction(121, 27)),
    "G2_TABLE2": (Fraction(-1, 2), Fraction(1, 10), Fraction(9, 4)),
}


def solve_tableII(case: EmbeddingCase | str) -> SolutionReport:
    if isinstance(case, str):
        case = make_case(case)
    if case.family not in TABLE2:
        raise SolverError(f"{case.id} is not a second-table case")
    eqs = table2_printed_reduced(case.d)
    sols = solve_monomial_system(eqs)
    lam_eq = table2_qem_equations(case.d)[3]
    report = SolutionReport(case.id, _table_params(case.id, sols, lam_eq, LORENTZ_TIMELIKE))
    alt = solve_monomial_system(eliminate_lambda(table2_qem_equations(case.d)))
    report.alternatives["from_component_equations"] = _table_params(case.id, alt, lam_eq, LORENTZ_TIMELIKE)
    if {tuple(s) for s in alt} != {tuple(s) for s in sols}:
        report.discrepancies.append(
            Discrepancy(
                "solution_set_from_component_equations",
                [list(s) for s in sols],
                [list(s) for s in alt],
                "re-reduction from the component equations disagrees with the printed reduced system",
            )
        )
    printed = TABLE2_PRINTED[case.family]
    second = [s for s in sols if s != (1, 1, 0)]
    if len(second) != 1 or tuple(second[0]) != printed:
        report.discrepancies.append(
            Discrepancy(
                "printed_solution",
                list(printed),
                [list(s) for s in second],
                "printed nontrivial solution differs from the exact solution of the printed system",
            )
        )
    report.notes.append("(a0, a1, p) = (1, 1, 0) is not Lorentzian; it is reported but flagged")
    report.notes.append("no tensor-level certification: no matrix realization of this algebra here")
    return report

"""
Verification Suite Nodes
Each node runs one suite of exact property checks against independent oracles
"""
from typing import Any, Dict, List, Tuple
import logging

import galois
import numpy as np

from ..algebra import skewpoly as sp
from ..algebra.gf import (
    FieldAut,
    coordinates,
    dual_basis,
    field_create,
    find_self_dual_normal,
    from_coordinates,
    gram_matrix,
    hilbert90,
    norm,
    normal_basis,
    normal_basis_check,
    trace,
)
from ..algebra.linalg import (
    PolyMat,
    nullspace,
    poly_in_row_module,
    poly_left_kernel,
    poly_row_module_equal,
    poly_snf,
    poly_to_ints,
    row_space_equal,
)
from ..codes import constacyclic as cc
from ..codes import convolutional as conv
from ..codes import skewrs
from ..codes.framework import BaseRing, CheckReport, biduality_check, check_homomorphism, check_transposition, row_code
from ..config import RunConfig
from ..state import SuiteResult, VerificationState
from ..tools.oracles import oracles

logger = logging.getLogger(__name__)

Selections = Dict[str, str]


def _ints(arr) -> List:
    return np.asarray(arr, dtype=np.int64).tolist()


def _pick(selections: Selections, suite: str, capability: str, context: Dict[str, Any]) -> Dict[str, Any]:
    oracle = oracles.select(capability, context)
    selections[f"{suite}_{capability}"] = oracle["name"]
    return oracle


def gf_suite(rng: np.random.Generator, config: RunConfig, instances: Dict) -> Tuple[List[CheckReport], Selections]:
    searched = CheckReport(name="self-dual normal basis search")
    for p, m, d, expected in instances["self_dual_normal"]:
        F = field_create(p, m)
        alpha = find_self_dual_normal(F, d)
        searched.record(alpha == expected, [p, m, d], alpha, expected)
        if alpha is not None:
            B = normal_basis(F, d, alpha)
            identity = bool(np.array_equal(gram_matrix(F, d, B.vector), F.identity(B.t)))
            searched.record(B.normal and B.self_dual and identity, [p, m, d, alpha], list(B.elements))

    solved = CheckReport(name="Hilbert 90 for every norm-one element")
    for p, m, d in instances["hilbert90"]:
        F = field_create(p, m)
        sigma = FieldAut(F, d)
        for mu in F.nonzero_elements():
            if norm(F, d, mu) != 1:
                continue
            nu = hilbert90(F, d, mu, sigma=sigma)
            solved.record(bool(sigma.apply(nu) / nu == mu), [p, m, d, int(mu)], int(nu))

    coords = CheckReport(name="trace coordinates and dual bases")
    for p, m, d in instances["coordinates"]:
        F = field_create(p, m)
        alpha = next(a for a in range(1, F.q) if normal_basis_check(F, d, a))
        B = normal_basis(F, d, alpha)
        D = dual_basis(B)
        pairing = trace(F, d, B.vector[:, None] * D.vector[None, :])
        coords.record(bool(np.array_equal(pairing, F.identity(B.t))), [p, m, d, alpha], _ints(pairing))
        elements = F.elements()
        back = from_coordinates(B, coordinates(B, elements))
        coords.record(bool(np.array_equal(back, elements)), [p, m, d, alpha])
    return [searched, solved, coords], {}


def skewpoly_suite(rng: np.random.Generator, config: RunConfig, instances: Dict) -> Tuple[List[CheckReport], Selections]:
    automorphisms = [FieldAut(field_create(p, m), s) for p, m, s in instances["fields"]]

    division = CheckReport(name="division round trips")
    for i in range(config.sample_count("division_round_trips")):
        sigma = automorphisms[i % len(automorphisms)]
        convention = sp.Convention.LEFT if i % 2 == 0 else sp.Convention.RIGHT
        f = sp.random(sigma, rng, int(rng.integers(0, 8)), convention)
        g = sp.random(sigma, rng, int(rng.integers(0, 5)), convention)
        if g.is_zero:
            g = sp.one(sigma, convention)
        side = "right" if i % 4 < 2 else "left"
        q, r = sp.sp_divide(side, f, g)
        rebuilt = sp.sp_mul(q, g) + r if side == "right" else sp.sp_mul(g, q) + r
        division.record(rebuilt == f and r.degree < g.degree, [side, list(f.coeffs), list(g.coeffs)],
                        list(rebuilt.coeffs), list(f.coeffs))

    degrees = CheckReport(name="deg lclm + deg gcrd = deg f + deg g")
    for i in range(config.sample_count("gcd_pairs")):
        sigma = automorphisms[i % len(automorphisms)]
        f = sp.random(sigma, rng, int(rng.integers(0, 6)), monic=True)
        g = sp.random(sigma, rng, int(rng.integers(0, 6)), monic=True)
        lhs = sp.lclm(f, g).degree + sp.gcrd(f, g).degree
        degrees.record(lhs == f.degree + g.degree, [list(f.coeffs), list(g.coeffs)], lhs, f.degree + g.degree)

    commutative = CheckReport(name="identity automorphism against commutative polynomials")
    for p, m in instances["commutative"]:
        F = field_create(p, m)
        sigma = FieldAut(F, 0)

        def plain(h):
            return galois.Poly(h.array if h.coeffs else F.GF([0]), order="asc")

        for _ in range(config.sample_count("commutative_pairs")):
            f = sp.random(sigma, rng, int(rng.integers(0, 6)))
            g = sp.random(sigma, rng, int(rng.integers(0, 4)))
            ok = plain(sp.sp_mul(f, g)) == plain(f) * plain(g)
            if not g.is_zero:
                q, r = sp.sp_divide("right", f, g)
                ok = ok and (plain(q), plain(r)) == divmod(plain(f), plain(g))
                if not f.is_zero:
                    ok = ok and plain(sp.gcrd(f, g)) == galois.gcd(plain(f), plain(g))
                    ok = ok and plain(sp.lclm(f, g)) == galois.lcm(plain(f), plain(g))
            commutative.record(ok, [list(f.coeffs), list(g.coeffs)])

    evaluation = CheckReport(name="right evaluation by norms and by division")
    for i in range(config.sample_count("right_eval")):
        sigma = automorphisms[i % len(automorphisms)]
        f = sp.random(sigma, rng, int(rng.integers(0, 7)))
        a = sigma.field.random(rng)
        lhs, rhs = sp.sp_right_eval(f, a, "norms"), sp.sp_right_eval(f, a, "division")
        evaluation.record(bool(lhs == rhs), [list(f.coeffs), int(a)], int(lhs), int(rhs))
    return [division, degrees, commutative, evaluation], {}


def linalg_suite(rng: np.random.Generator, config: RunConfig, instances: Dict) -> Tuple[List[CheckReport], Selections]:
    selections: Selections = {}
    duals = CheckReport(name="nullspace against an independent oracle")
    for p, m, n in instances["nullspace"]:
        F = field_create(p, m)
        oracle = _pick(selections, "LINALG", "code_dual", {"q": F.q, "length": n})
        for _ in range(config.sample_count("nullspace")):
            M = F.random(rng, (int(rng.integers(1, n)), n))
            duals.record(row_space_equal(nullspace(M), oracle["run"](F, M)), _ints(M))

    kernels = CheckReport(name="Hermite kernel is the saturated left kernel")
    chains = CheckReport(name="Smith invariant factors form a divisibility chain")
    for p, m, rows, degree in instances["kernel"]:
        F = field_create(p, m)
        oracle = _pick(selections, "LINALG", "module_kernel", {"q": F.q, "rows": rows, "max_degree": 3})
        for _ in range(config.sample_count("kernel")):
            M = PolyMat(F, F.random(rng, (degree + 1, rows, 1)))
            K = poly_left_kernel(M)
            kernels.record((K @ M).is_zero(), M.to_json(), K.to_json())
            found = oracle["run"](M, 3)
            if isinstance(found, PolyMat):
                kernels.record(poly_row_module_equal(K, found), M.to_json())
            else:
                kernels.record(all(poly_in_row_module(K, w) for w in found), M.to_json())

            square = PolyMat(F, F.random(rng, (degree + 1, rows, rows)))
            factors = poly_snf(square)
            ok = all(poly_to_ints(b % a) == [] for a, b in zip(factors, factors[1:]))
            chains.record(ok, square.to_json(), [poly_to_ints(a) for a in factors])
    return [duals, kernels, chains], selections


def framework_suite(rng: np.random.Generator, config: RunConfig, instances: Dict) -> Tuple[List[CheckReport], Selections]:
    reports = []
    bidual = CheckReport(name="biduality over a field")
    for p, m, n, u in instances["rings"]:
        L = field_create(p, m)
        R = cc.ring_create(L, FieldAut(L, 1), n, u)
        reports.append(check_homomorphism(cc.ext(R), config.sample_count("homomorphism"), rng))
        for _ in range(5):
            f = cc.random_element(R, rng)
            bidual.record(biduality_check(cc.code_from_gen(R, f)), [p, m, n, u, list(f.coeffs)])
    return reports + [bidual], {}


def constacyclic_suite(rng: np.random.Generator, config: RunConfig, instances: Dict) -> Tuple[List[CheckReport], Selections]:
    selections: Selections = {}
    reports = []
    for p, m, n, u in instances["exhaustive"]:
        L = field_create(p, m)
        R = cc.ring_create(L, FieldAut(L, 1), n, u)
        reports.append(check_transposition(cc.ext(R), cc.ext(R.hat()), lambda f, R=R: cc.theta(R, f),
                                           seed=rng, elements=cc.all_elements(R)))
    for p, m, n, u in instances["random"]:
        L = field_create(p, m)
        R = cc.ring_create(L, FieldAut(L, 1), n, u)
        reports.append(check_transposition(cc.ext(R), cc.ext(R.hat()), lambda f, R=R: cc.theta(R, f),
                                           samples=config.sample_count("consta_transposition"), seed=rng))

    duals = CheckReport(name="dual of every monic left divisor of x^n - u")
    for p, m, n in instances["divisors"]:
        L = field_create(p, m)
        sigma = FieldAut(L, 1)
        oracle = _pick(selections, "CONSTACYCLIC", "code_dual", {"q": L.q, "length": n})
        for u in cc.admissible_units(L, sigma):
            R = cc.ring_create(L, sigma, n, u)
            for f, h in cc.monic_left_divisors(R):
                result = cc.dual(R, f)
                independent = row_code(BaseRing.FIELD, L, oracle["run"](L, result.generator_matrix))
                ok = (result.dual == independent and result.pair.agrees and result.shortcut == result.dual
                      and result.code.dim + result.dual.dim == n)
                duals.record(ok, [p, m, n, u, list(f.coeffs)], result.dual.to_json(), independent.to_json())
    return reports + [duals], selections


def _first_normal(L, sigma) -> int:
    return skewrs.normal_elements(L, sigma)[0]


def skewrs_suite(rng: np.random.Generator, config: RunConfig, instances: Dict) -> Tuple[List[CheckReport], Selections]:
    selections: Selections = {}
    decomposition = CheckReport(name="x^n - 1 = lclm of the conjugates of beta")
    right_left = CheckReport(name="lcrm of gamma conjugates times lclm of beta conjugates")
    for p, m, s in instances["decomposition"]:
        L = field_create(p, m)
        sigma = FieldAut(L, s)
        for alpha in skewrs.normal_elements(L, sigma):
            decomposition.record(skewrs.full_decomposition_check(L, sigma, alpha), [p, m, s, alpha])
            code = skewrs.rs_create(L, sigma, alpha, 2)
            for k in range(code.n):
                right_left.record(skewrs.right_left_check(code, k), [p, m, s, alpha, k])

    duals = CheckReport(name="closed-form dual against an independent oracle")
    distances = CheckReport(name="minimum distance equals the designed distance")
    theta_h = CheckReport(name="Theta of the cofactor generates the dual")
    evaluation = CheckReport(name="evaluation description spans the code")
    for p, m, s, alpha, delta in instances["codes"]:
        L = field_create(p, m)
        sigma = FieldAut(L, s)
        alpha = alpha or _first_normal(L, sigma)
        code = skewrs.rs_create(L, sigma, alpha, delta)
        tag = [p, m, s, alpha, delta]

        oracle = _pick(selections, "SKEWRS", "code_dual", {"q": L.q, "length": code.n})
        dual = skewrs.rs_dual(code)
        independent = row_code(BaseRing.FIELD, L, oracle["run"](L, code.generator_matrix))
        duals.record(dual.code == independent, tag, dual.code.to_json(), independent.to_json())

        measure = _pick(selections, "SKEWRS", "min_distance", {"q": L.q, "length": code.n})
        d, d_dual = measure["run"](code.code), measure["run"](dual.code)
        distances.record(d == delta and d_dual == code.n - delta + 2, tag, [d, d_dual], [delta, code.n - delta + 2])

        theta_h.record(skewrs.theta_h_check(code), tag)

        params = skewrs.eval_params(code)
        mu, nu = L.GF(params.mu), L.GF(params.nu)
        evaluation.record(bool(sigma.apply(nu) / nu == mu), tag, params.nu, params.mu)
        evaluation.record(skewrs.sge_code(code, params) == code.code, tag)
    return [decomposition, right_left, duals, distances, theta_h, evaluation], selections


def convolutional_suite(rng: np.random.Generator, config: RunConfig, instances: Dict) -> Tuple[List[CheckReport], Selections]:
    selections: Selections = {}
    p, d, t, n = instances["ambient"]
    W = conv.ambient_create(p, d, t, n)
    reports = []

    transposition = CheckReport(name="M_R^(Theta(f)) = M_R(f)^T")
    representation = CheckReport(name="representation matrices")
    for i in range(config.sample_count("conv_automorphisms")):
        sigma = conv.random_tau_aut(W, rng)
        transposition.absorb(conv.check_conv_transposition(W, sigma, config.sample_count("conv_transposition"), rng))
        if i < 3:
            # untwisted and twisted automorphisms alike
            representation.absorb(
                conv.check_rep_matrices(W, conv.random_mat_aut(W, rng), config.sample_count("rep_samples"), rng)
            )
    reports += [transposition, representation]

    idempotents = CheckReport(name="duals of idempotent-generated codes")
    oracle = _pick(selections, "CONVOLUTIONAL", "module_kernel", {"q": W.F.q, "rows": W.rank, "max_degree": 3})
    candidates = [(conv.mat_aut(W, W.K.identity(n), 1 % t), conv.elementary_idempotent(W))]
    for _ in range(config.sample_count("conv_idempotents")):
        candidates.append((conv.random_mat_aut(W, rng), conv.random_conjugated_idempotent(W, rng)))
    for sigma, e in candidates:
        result = conv.licc_dual_idem(W, sigma, e)
        tag = {"U": sigma.to_json(), "e": _ints(e)}
        M_f = conv.M_R_poly(W, sigma, result.f)
        independent = oracle["run"](M_f.transpose(), 3)
        kernel_ok = poly_row_module_equal(result.dual.generator, independent) if isinstance(independent, PolyMat) \
            else all(poly_in_row_module(result.dual.generator, w) for w in independent)
        idempotents.record(all(result.checks.values()) and kernel_ok, tag, result.checks)
    return reports + [idempotents], selections


SUITES = {
    "GF": gf_suite,
    "SKEWPOLY": skewpoly_suite,
    "LINALG": linalg_suite,
    "FRAMEWORK": framework_suite,
    "CONSTACYCLIC": constacyclic_suite,
    "SKEWRS": skewrs_suite,
    "CONVOLUTIONAL": convolutional_suite,
}


class VerificationAgents:
    """
    Collection of all suite nodes for the verification workflow
    Each suite gets its own generator seeded by (seed, catalogue index)
    """

    def __init__(self, catalogue: Dict[str, Any]):
        self.catalogue = catalogue
        self.suites = {suite["id"]: (index, suite) for index, suite in enumerate(catalogue.get("suites", []))}

    def node(self, suite_id: str):
        async def run_suite(state: VerificationState) -> Dict[str, Any]:
            return self.run_suite(suite_id, state)
        run_suite.__name__ = f"{suite_id.lower()}_node"
        return run_suite

    def run_suite(self, suite_id: str, state: VerificationState) -> Dict[str, Any]:
        logger.info("=" * 60)
        logger.info(f"SUITE: {suite_id} - {self.suites[suite_id][1].get('description', '')}")
        logger.info("=" * 60)

        config = RunConfig(**state["run_config"])
        index, suite = self.suites[suite_id]
        rng = np.random.default_rng([config.seed, index])
        reports, selections = SUITES[suite_id](rng, config, suite.get("instances", {}))

        checked = sum(r.checked for r in reports)
        failures = sum(len(r.failures) for r in reports)
        result = SuiteResult(
            suite=suite_id,
            passed=failures == 0,
            checked=checked,
            failures=failures,
            checks=[r.model_dump() for r in reports],
        )
        for oracle in selections.values():
            logger.info(f"🔧 Oracle selected: {oracle}")
        if result["passed"]:
            logger.info(f"✅ {suite_id}: {checked} checks passed")
        else:
            logger.error(f"❌ {suite_id}: {failures} of {checked} checks failed")

        remaining = state["suites"]
        position = remaining.index(suite_id)
        next_stage = remaining[position + 1] if position + 1 < len(remaining) else "REPORT"
        return {
            "suite_results": [result],
            "oracle_selections": selections,
            "current_stage": next_stage,
            "audit_log": [{
                "stage": suite_id,
                "action": "suite_completed",
                "details": {"checked": checked, "failures": failures},
            }],
        }

    async def report_node(self, state: VerificationState) -> Dict[str, Any]:
        """
        REPORT Stage: aggregate suite outcomes
        """
        logger.info("=" * 60)
        logger.info("STAGE: REPORT - Aggregating suite outcomes")
        logger.info("=" * 60)

        results = state.get("suite_results", [])
        passed = bool(results) and all(r["passed"] for r in results)
        skipped = [s for s in state["suites"] if s not in {r["suite"] for r in results}]
        report = {
            "seed": state["run_config"]["seed"],
            "passed": passed and not skipped,
            "checked": sum(r["checked"] for r in results),
            "suites": results,
            "skipped": skipped,
            "oracle_selections": dict(sorted(state.get("oracle_selections", {}).items())),
        }
        status = "PASSED" if report["passed"] else "FAILED"
        logger.info(f"{'✅' if report['passed'] else '❌'} Verification {status}: {report['checked']} checks")
        return {
            "report": report,
            "status": status,
            "current_stage": "COMPLETE",
            "audit_log": [{"stage": "REPORT", "action": "report_built", "details": {"status": status}}],
        }

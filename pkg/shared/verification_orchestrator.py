from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
import csv
import io
import json
import logging
import time
import traceback

from . import __version__
from .comodule import (
    Coaction,
    comodule_axiom_check,
    oracle_chain_check,
    counit_axiom_check,
    homomorphism_check,
    identity_equation_check,
    iff_witness,
    rho_power_closed_check,
    rho_power_n_check,
    theorem_main_identity_check,
)
from .cyclotomic import CycContext, primitivity_check
from .dual_pairing import (
    coefficient_forms_check,
    cop_generator_relations,
    double_relations_check,
    dual_action_consistency_check,
    pairing_antipode_check,
    pairing_base_cases_check,
    pairing_nondegeneracy_check,
    pairing_welldefined_check,
    x_closed_form_check,
)
from .qcombinat import beta_coefficients, composition_sum, gaussian_binomial, qbinomial_consistency_check
from .quantum_plane_a import (
    a_coefficient_identities,
    commutativity_check,
    module_algebra_check,
    module_axiom_check,
    module_relations_check,
)
from .report import CaseResult, VerificationReport, exit_code_for, make_case
from .taft_hopf import (
    TaftElement,
    check_algebra_maps,
    check_antipode,
    check_antipode_inverse,
    check_coassociativity,
    check_counit,
    check_coproduct_closed_form,
    check_relation_preservation,
    qbinomial_coproduct_check,
)
from .verify_config import SuiteSettings
from .yetter_drinfeld import (
    braided_commutativity_sweep,
    displayed_computations_check,
    solve_yd_recurrence_check,
    yd_full_sweep,
)

logger = logging.getLogger(__name__)

SUITES = ("identities", "hopf", "comodule", "yd", "dual")
ROOT_POLICIES = ("canonical", "all")

Check = Tuple[str, Callable[[], List[CaseResult]]]


def _identities_checks(ctx: CycContext, settings: SuiteSettings) -> List[Check]:
    rng = settings.rng_for("identities", ctx.n)
    return [
        ("primitivity", lambda: primitivity_check(ctx)),
        ("thm_main", lambda: theorem_main_identity_check(ctx)),
        ("oracle_chain", lambda: oracle_chain_check(ctx)),
        ("qbinomial", lambda: qbinomial_consistency_check(ctx)),
        ("a_identities", lambda: a_coefficient_identities(ctx, rng, settings.sample_pairs)),
    ]


def _hopf_keys(ctx: CycContext, settings: SuiteSettings) -> List[Tuple[int, int]]:
    if ctx.n <= settings.full_sweep_max_n:
        return TaftElement.basis_keys(ctx)
    rng = settings.rng_for("hopf_keys", ctx.n)
    sampled = rng.sample(TaftElement.basis_keys(ctx), min(settings.sample_pairs, ctx.n * ctx.n))
    return sorted(set(sampled) | {(0, 0), (0, 1), (1, 0), (ctx.n - 1, ctx.n - 1)})


def _hopf_checks(ctx: CycContext, settings: SuiteSettings) -> List[Check]:
    keys = _hopf_keys(ctx, settings)
    rng = settings.rng_for("hopf", ctx.n)
    return [
        ("coassociativity", lambda: check_coassociativity(ctx, keys)),
        ("counit", lambda: check_counit(ctx, keys)),
        ("antipode", lambda: check_antipode(ctx, keys)),
        ("antipode_inverse", lambda: check_antipode_inverse(ctx, keys)),
        ("algebra_maps", lambda: check_algebra_maps(ctx, rng, settings.sample_pairs)),
        ("coproduct_closed_form", lambda: check_coproduct_closed_form(ctx, keys)),
        ("qbinomial_coproduct", lambda: qbinomial_coproduct_check(ctx)),
        ("relations", lambda: check_relation_preservation(ctx)),
    ]


def _comodule_checks(ctx: CycContext, settings: SuiteSettings) -> List[Check]:
    coaction = Coaction(ctx)
    rng = settings.rng_for("comodule", ctx.n)
    return [
        ("comodule_axiom", lambda: comodule_axiom_check(coaction)),
        ("counit_axiom", lambda: counit_axiom_check(coaction)),
        ("rho_power_closed", lambda: rho_power_closed_check(coaction)),
        ("rho_power_n", lambda: rho_power_n_check(coaction)),
        ("homomorphism", lambda: homomorphism_check(coaction, rng, settings.sample_pairs)),
        ("identity_equation", lambda: identity_equation_check(coaction)),
        ("iff_witness", lambda: [iff_witness(ctx, coaction)]),
    ]


def _yd_checks(ctx: CycContext, settings: SuiteSettings) -> List[Check]:
    coaction = Coaction(ctx)
    exhaustive = ctx.n <= settings.full_sweep_max_n
    return [
        ("module_axiom", lambda: module_axiom_check(ctx, exhaustive)),
        ("module_algebra", lambda: module_algebra_check(ctx)),
        ("module_relations", lambda: module_relations_check(ctx)),
        ("commutativity", lambda: commutativity_check(ctx)),
        ("yd_sweep", lambda: yd_full_sweep(coaction, exhaustive)),
        ("yd_display", lambda: displayed_computations_check(coaction)),
        ("braided_commutativity", lambda: braided_commutativity_sweep(coaction)),
        ("yd_recurrence", lambda: solve_yd_recurrence_check(ctx)),
    ]


def _dual_checks(ctx: CycContext, settings: SuiteSettings) -> List[Check]:
    coaction = Coaction(ctx)
    checks = [("pairing_base", lambda: pairing_base_cases_check(ctx))]
    if ctx.n <= settings.dual_max_n:
        checks += [
            ("pairing_welldef", lambda: pairing_welldefined_check(ctx)),
            ("pairing_antipode", lambda: pairing_antipode_check(ctx)),
            ("pairing_gram", lambda: pairing_nondegeneracy_check(ctx)),
        ]
    checks += [
        ("double_relations", lambda: double_relations_check(ctx)),
        ("x_closed_form", lambda: x_closed_form_check(ctx)),
        ("coefficient_forms", lambda: coefficient_forms_check(ctx)),
        ("dual_conventions", lambda: dual_action_consistency_check(coaction)),
        ("cop_generators", lambda: cop_generator_relations(ctx)),
    ]
    return checks


_SUITE_BUILDERS: Dict[str, Callable[[CycContext, SuiteSettings], List[Check]]] = {
    "identities": _identities_checks,
    "hopf": _hopf_checks,
    "comodule": _comodule_checks,
    "yd": _yd_checks,
    "dual": _dual_checks,
}


def run_suite(suite: str, n: int, root_exponent: int, settings: SuiteSettings) -> VerificationReport:
    """Run one suite at one (n, t); an unexpected exception becomes a failing case"""
    start = time.perf_counter()
    ctx = CycContext(n, root_exponent)
    logger.info(f"=== SUITE {suite.upper()} n={n} t={root_exponent} ===")
    cases: List[CaseResult] = []
    for name, check in _SUITE_BUILDERS[suite](ctx, settings):
        try:
            produced = check()
            logger.debug(f"{suite}/{name}: {len(produced)} cases")
            cases.extend(produced)
        except Exception as e:
            logger.error(f"Error in check {suite}/{name} at n={n}, t={root_exponent}: {e}")
            logger.error(f"Full traceback: {traceback.format_exc()}")
            cases.append(make_case("internal_error", n, False, f"{type(e).__name__}: {e}", check=name))
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    report = VerificationReport(
        tool_version=__version__,
        n=n,
        root_exponent=ctx.root_exponent,
        suite=suite,
        cases=cases,
        elapsed_ms=elapsed_ms,
    )
    logger.info(f"Suite {suite} n={n} t={root_exponent}: {report.passed}/{report.total} passed in {elapsed_ms} ms")
    return report


def _run_task(task: Tuple[str, int, int, SuiteSettings]) -> VerificationReport:
    return run_suite(*task)


def expand_suites(names: Sequence[str]) -> List[str]:
    """'all' expands to every suite; order follows SUITES, duplicates dropped"""
    wanted = set()
    for name in names:
        if name == "all":
            wanted.update(SUITES)
        elif name in SUITES:
            wanted.add(name)
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    return [suite for suite in SUITES if suite in wanted]


def root_exponents(n: int, policy: str) -> List[int]:
    if policy == "canonical":
        return [1]
    if policy == "all":
        return [t for t in range(1, n) if gcd(t, n) == 1]
    raise ValueError(f"unknown root policy {policy!r}; choose from {', '.join(ROOT_POLICIES)}")


class VerificationOrchestrator:
    """Plans (suite, n, root) tasks, runs them serially or on a process pool, merges in plan order"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        logger.info("=== INITIALIZING VERIFICATION ORCHESTRATOR ===")
        self.config = dict(config or {})
        self.settings = SuiteSettings.from_config(self.config)
        self.jobs = max(1, int(self.config.get("jobs", 1)))
        self.last_reports: List[VerificationReport] = []
        logger.info(f"Settings: {self.settings}, jobs={self.jobs}")

    def plan(self, n_values: Sequence[int], suites: Sequence[str], roots: str = "canonical") -> List[Tuple[str, int, int, SuiteSettings]]:
        tasks = []
        for n in n_values:
            for t in root_exponents(n, roots):
                for suite in expand_suites(suites):
                    tasks.append((suite, n, t, self.settings))
        return tasks

    def run(self, n_values: Sequence[int], suites: Sequence[str], roots: str = "canonical") -> List[VerificationReport]:
        tasks = self.plan(n_values, suites, roots)
        logger.info(f"Running {len(tasks)} suite tasks with {self.jobs} job(s)")
        if self.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                reports = list(pool.map(_run_task, tasks))
        else:
            reports = [_run_task(task) for task in tasks]
        self.last_reports = reports
        failed = sum(report.failed for report in reports)
        logger.info(f"=== VERIFICATION COMPLETE: {len(reports)} reports, {failed} failed cases ===")
        return reports

    def exit_code(self) -> int:
        return exit_code_for(self.last_reports)

    def get_system_status(self) -> Dict[str, Any]:
        """Get the status of the verification runner"""
        return {
            "orchestrator": "taft_verify",
            "tool_version": __version__,
            "suites": list(SUITES),
            "root_policies": list(ROOT_POLICIES),
            "jobs": self.jobs,
            "settings": {
                "seed": self.settings.seed,
                "sample_pairs": self.settings.sample_pairs,
                "full_sweep_max_n": self.settings.full_sweep_max_n,
                "dual_max_n": self.settings.dual_max_n,
            },
            "last_run": {
                "reports": len(self.last_reports),
                "failed_cases": sum(report.failed for report in self.last_reports),
            },
        }


TABLE_COLUMNS = ["n", "k", "s", "lhs", "rhs_qbinom", "rhs_series", "pass"]
TABLE_FORMATS = ("csv", "json", "text")


def identity_table_rows(ctx: CycContext, ascii: bool = True) -> List[Dict[str, Any]]:
    """
    One row per (k, s) in [0, n)²: composition sum, the Gaussian binomial
    (0 once k+s >= n) and the series coefficient, rendered exactly.
    """
    n = ctx.n
    rows = []
    for s in range(n):
        series = beta_coefficients(ctx, s)
        for k in range(n):
            lhs = composition_sum(ctx, k, s)
            rhs_qbinom = gaussian_binomial(ctx, k + s, k) if k + s < n else ctx.zero
            rhs_series = series[k]
            rows.append({
                "n": n,
                "k": k,
                "s": s,
                "lhs": lhs.render(ascii),
                "rhs_qbinom": rhs_qbinom.render(ascii),
                "rhs_series": rhs_series.render(ascii),
                "pass": lhs == rhs_qbinom == rhs_series,
            })
    rows.sort(key=lambda row: (row["k"], row["s"]))
    return rows


def identity_table(contexts: Sequence[CycContext], fmt: str = "csv") -> List[Dict[str, Any]]:
    """Rows for every context, rendered the way fmt needs them (CSV writes w for ω)"""
    if fmt not in TABLE_FORMATS:
        raise ValueError(f"unknown table format {fmt!r}; choose from {', '.join(TABLE_FORMATS)}")
    rows = []
    for ctx in contexts:
        logger.info(f"Building identity table for n={ctx.n}, t={ctx.root_exponent}")
        rows.extend(identity_table_rows(ctx, ascii=fmt == "csv"))
    return rows


def emit_identity_table(contexts: Sequence[CycContext], fmt: str = "csv") -> str:
    return render_identity_table(identity_table(contexts, fmt), fmt)


def render_identity_table(rows: List[Dict[str, Any]], fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps({"tool_version": __version__, "rows": rows}, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({**row, "pass": "true" if row["pass"] else "false"})
        return buffer.getvalue()
    widths = {col: max([len(col)] + [len(str(row[col])) for row in rows]) for col in TABLE_COLUMNS}
    lines = ["  ".join(col.ljust(widths[col]) for col in TABLE_COLUMNS)]
    for row in rows:
        cells = {**row, "pass": "true" if row["pass"] else "false"}
        lines.append("  ".join(str(cells[col]).ljust(widths[col]) for col in TABLE_COLUMNS).rstrip())
    return "\n".join(lines) + "\n"

"""Static registry of named checks behind the CLI and the acceptance suite.

Each group function maps a RunConfig to an ordered list of CheckReports;
report order is fixed by construction, never by completion order.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import boson, mock, partitions, regularization, special, virasoro
from .config import RunConfig
from .reports import CheckReport
from .series import FracQSeries, rat_str


def _exact(name: str, params: dict, ok: bool, details: dict | None = None) -> CheckReport:
    return CheckReport(name, params, ok, "0/1" if ok else "1/1", details, "exact")


def _numeric(name: str, params: dict, residual: float, tolerance: float,
             details: dict | None = None) -> CheckReport:
    return CheckReport(name, params, residual <= tolerance,
                       f"{residual:.17g}", details, "numeric")


# -- series ----------------------------------------------------------------------

def check_series(cfg: RunConfig) -> list[CheckReport]:
    n = min(cfg.order, 64)
    eta = special.dedekind_eta(n)
    out = []
    out.append(_exact("series.eta_invert_roundtrip", {"order": n},
                      eta.invert().invert() == eta))
    one = eta * eta.invert()
    out.append(_exact("series.eta_times_inverse_is_one", {"order": n},
                      one == FracQSeries.one(n)))
    f, g = special.eisenstein(2, n), special.eisenstein(4, n)
    leibniz = (f * g).q_derivative() - (f.q_derivative() * g + f * g.q_derivative())
    out.append(_exact("series.leibniz_rule", {"order": n}, leibniz.is_zero()))
    rec1 = special.rr_product("G", n).to_record()
    rec2 = special.rr_product("G", n).to_record()
    out.append(_exact("series.serialization_stable", {"order": n}, rec1 == rec2,
                      {"prefactor": rec1["prefactor"], "head": rec1["coeffs"][:6]}))
    return out


# -- regularization ----------------------------------------------------------------

def check_casimir(cfg: RunConfig,
                  progressions: tuple[tuple[int, int], ...] | None = None) -> list[CheckReport]:
    out = []
    if progressions is not None:
        aps = regularization.ArithmeticProgressionSet(progressions)
        value = regularization.casimir_exponent(aps)
        out.append(CheckReport("casimir.custom", {"progressions": progressions}, True,
                               "0/1", {"value": rat_str(value)}, "exact"))
        return out

    out.append(_exact("casimir.hurwitz_all_integers", {"p": 1, "r": 1},
                      regularization.hurwitz_sum(1, 1).value == Fraction(-1, 12)))
    pair_g = (regularization.hurwitz_sum(5, 1).value
              + regularization.hurwitz_sum(5, 4).value)
    pair_h = (regularization.hurwitz_sum(5, 2).value
              + regularization.hurwitz_sum(5, 3).value)
    out.append(_exact("casimir.hurwitz_pair_1_4_mod_5", {}, pair_g == Fraction(-1, 30)))
    out.append(_exact("casimir.hurwitz_pair_2_3_mod_5", {}, pair_h == Fraction(11, 30)))

    targets = {
        ((5, 1), (5, 4)): Fraction(-1, 60),
        ((5, 2), (5, 3)): Fraction(11, 60),
        ((1, 1),): Fraction(-1, 24),
    }
    for progs, expected in targets.items():
        aps = regularization.ArithmeticProgressionSet(progs)
        out.append(_exact("casimir.exponent", {"progressions": progs},
                          regularization.casimir_exponent(aps) == expected,
                          {"value": rat_str(expected)}))

    defect_ok = all(
        regularization.naive_defect(p, r) == Fraction(-r * r, 2 * p)
        for p in range(1, 13) for r in range(1, p + 1))
    out.append(_exact("casimir.ramanujan_defect", {"p_max": 12}, defect_ok))

    n = min(cfg.order, 80)
    osc = regularization.oscillator_partition_series(
        regularization.ArithmeticProgressionSet([(1, 1)]), n)
    out.append(_exact("casimir.oscillator_is_inverse_eta", {"order": n},
                      osc == special.dedekind_eta(n).invert()))
    out.append(_exact("casimir.critical_dimension", {},
                      regularization.critical_dimension() == 26,
                      {"value": 26}))
    return out


# -- Rogers-Ramanujan / Andrews-Gordon -----------------------------------------------

def check_rr(cfg: RunConfig) -> list[CheckReport]:
    n = cfg.order - 1
    out = []
    for which, min_part, residues in (("G", 1, {1, 4}), ("H", 2, {2, 3})):
        product = special.rr_product(which, n + 1)
        gaps = partitions.count_partitions(
            n, partitions.PartitionConstraint(min_part=min_part, min_gap=2))
        congr = partitions.count_partitions(
            n, partitions.PartitionConstraint(allowed_residues=frozenset(residues),
                                              modulus=5))
        gap_ok = all(product.coeffs[i] == gaps[i] for i in range(n + 1))
        congr_ok = all(product.coeffs[i] == congr[i] for i in range(n + 1))
        out.append(_exact(f"rr.{which}_gap_counting", {"n_max": n}, gap_ok))
        out.append(_exact(f"rr.{which}_congruence_counting", {"n_max": n}, congr_ok))
    for k in (2, 3, 4):
        for i in range(1, k + 1):
            rep = partitions.gordon_check(k, i, 60)
            rep.name = f"rr.gordon_k{k}_i{i}"
            out.append(rep)
    return out


# -- minimal models ---------------------------------------------------------------

def check_minimal_model(cfg: RunConfig) -> list[CheckReport]:
    out = []
    cases = {(2, 5): Fraction(-22, 5), (3, 4): Fraction(1, 2), (2, 3): Fraction(0)}
    for (p, q), expected in cases.items():
        label = virasoro.MinimalModelLabel(p, q)
        out.append(_exact("minimal.central_charge", {"p": p, "q": q},
                          virasoro.central_charge(label) == expected,
                          {"value": rat_str(expected)}))
    out.append(_exact("minimal.c_eff_25", {},
                      virasoro.effective_central_charge(
                          virasoro.MinimalModelLabel(2, 5)) == Fraction(2, 5)))
    best, ceff = virasoro.minimal_c_eff_scan(100)
    out.append(_exact("minimal.c_eff_scan", {"bound": 100},
                      (best.p, best.q) == (2, 5) and ceff == Fraction(2, 5),
                      {"minimizer": f"({best.p},{best.q})", "c_eff": rat_str(ceff)}))
    c = virasoro.central_charge(virasoro.MinimalModelLabel(2, 5))
    ceff = virasoro.effective_central_charge(virasoro.MinimalModelLabel(2, 5))
    out.append(_exact("minimal.casimir_identities", {},
                      Fraction(11, 60) == -c / 24 and Fraction(-1, 60) == -ceff / 24))

    n = min(cfg.order, 201)
    for sector, which in (("V0", "H"), ("Vm15", "G")):
        chi = virasoro.character_25(sector, n)
        ref = FracQSeries(virasoro.CHARACTER_PREFACTOR[sector],
                          special.rr_product(which, n).coeffs)
        out.append(_exact(f"minimal.character_{sector}", {"order": n}, chi == ref))

    if not cfg.exact_only:
        worst = 0.0
        for s in (0.7, 1.3, 2.0):
            z1 = virasoro.torus_partition_function_25(1j * s, n)
            z2 = virasoro.torus_partition_function_25(1j / s, n)
            worst = max(worst, abs(z1 - z2))
        out.append(_numeric("minimal.torus_modular_invariance",
                            {"s": (0.7, 1.3, 2.0)}, worst, cfg.float_tolerance))
    return out


# -- Gram matrices -----------------------------------------------------------------

def check_gram(cfg: RunConfig) -> list[CheckReport]:
    out = []
    lin, central = virasoro.bracket(-2, 2)
    out.append(_exact("gram.bracket_m2_2", {}, lin == 4 and central == Fraction(1, 2)))
    g4 = virasoro.gram_matrix(4, vacuum=True)
    det = g4.determinant()
    expected = (virasoro.PolyCH({(3, 0): Fraction(5, 2), (2, 0): Fraction(11)}))
    out.append(_exact("gram.level4_vacuum_determinant", {},
                      det == expected, {"determinant": str(det)}))
    nv = virasoro.null_vector_central_charges()
    out.append(_exact("gram.null_vector_charge", {},
                      nv.central_charges == (Fraction(-22, 5),)
                      and nv.tt_remainder_ratio == Fraction(-1, 5),
                      {"beta": rat_str(nv.beta)}))
    g2 = virasoro.gram_matrix(2)
    m = g2.evaluate(Fraction(-22, 5), Fraction(-1, 5))
    det2 = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    out.append(_exact("gram.level2_singular_at_25_weight", {}, det2 == 0))
    m_ising = g4.evaluate(Fraction(1, 2), Fraction(0))
    det_ising = m_ising[0][0] * m_ising[1][1] - m_ising[0][1] * m_ising[1][0]
    out.append(_exact("gram.level4_nonsingular_at_ising", {}, det_ising != 0))
    return out


# -- modular ODE -------------------------------------------------------------------

def check_ode(cfg: RunConfig) -> list[CheckReport]:
    n = cfg.order
    out = []
    for which in ("G", "H"):
        res = virasoro.ode_residual(which, n)
        out.append(_exact(f"ode.residual_{which}", {"order": n}, res.is_zero()))
    probe = virasoro.ode_residual("G", min(n, 32), rhs_coefficient=Fraction(1, 360))
    out.append(_exact("ode.perturbed_probe_nonzero", {}, not probe.is_zero()))
    return out


# -- compact boson -----------------------------------------------------------------

def check_boson(cfg: RunConfig) -> list[CheckReport]:
    if cfg.exact_only:
        return []
    out = []
    taus = (1j, 0.3 + 1.2j)
    radii = (0.7, 1.0, 1.9)
    dual = max(abs(boson.boson_partition_function(r, t)
                   - boson.boson_partition_function(2 / r, t))
               for r in radii for t in taus)
    out.append(_numeric("boson.radius_duality", {"radii": radii}, dual, 1e-12))
    t_dev = max(abs(boson.boson_partition_function(r, t)
                    - boson.boson_partition_function(r, t + 1))
                for r in radii for t in taus)
    out.append(_numeric("boson.T_invariance", {"radii": radii}, t_dev, 1e-10))
    s_dev = max(abs(boson.boson_partition_function(r, t)
                    - boson.boson_partition_function(r, -1 / t))
                for r in radii for t in taus)
    out.append(_numeric("boson.S_invariance", {"radii": radii}, s_dev, 1e-8))
    positive = all(boson.boson_partition_function(r, t) > 0
                   for r in radii for t in taus)
    out.append(_exact("boson.positivity", {"radii": radii}, positive))

    numeric_twisted = boson.twisted_boson_partition_function(1j)
    series = regularization.twisted_oscillator_series(
        regularization.ArithmeticProgressionSet([(1, 1)]), 64)
    body = FracQSeries(0, series.coeffs)
    val = special.evaluate_series(body, 1j)
    out.append(_numeric("boson.twisted_matches_exact_series", {"tau": "i"},
                        abs(numeric_twisted - abs(val) ** 2), 1e-10))
    return out


# -- determinant ratios --------------------------------------------------------------

def check_lattice_det(cfg: RunConfig) -> list[CheckReport]:
    if cfg.exact_only:
        return []
    out = []
    for m1, m2 in ((1.0, 2.0), (0.5, 3.0)):
        oracle = boson.continuum_determinant_ratio((1.0, 1.0), m1, m2)
        devs = [abs(boson.lattice_determinant_ratio(
            boson.LatticeSpec((L, L)), m1, m2) - oracle) for L in (16, 32, 64)]
        ok = devs[0] > devs[1] > devs[2]
        out.append(CheckReport("lattice.refinement_converges",
                               {"m1": m1, "m2": m2}, ok,
                               f"{devs[2]:.17g}",
                               {"deviations": [f"{d:.6g}" for d in devs]},
                               "numeric"))
    equal = boson.lattice_determinant_ratio(boson.LatticeSpec((16, 16)), 1.5, 1.5)
    out.append(_exact("lattice.equal_masses_unity", {"m": 1.5}, equal == 1.0))
    return out


# -- mock modular ------------------------------------------------------------------

MOCK_TARGET = (-1, 45, 231, 770, 2277)


def check_mock(cfg: RunConfig, n_terms: int = 5) -> list[CheckReport]:
    if cfg.exact_only:
        return []
    out = []
    eg = mock.elliptic_genus_k3(mock.JacobiPoint(0.0, 0.2 + 0.9j))
    out.append(_numeric("mock.elliptic_genus_at_origin", {"tau": "0.2+0.9i"},
                        abs(eg - 24), 1e-10))
    for y0 in (0.2, 0.3, 0.4):
        for grid in (128, 256):
            mc = mock.extract_mock_coefficients(y0=y0, grid=grid, n_terms=n_terms)
            ok = mc.values[:5] == MOCK_TARGET[:min(n_terms, 5)]
            out.append(CheckReport(
                "mock.coefficients", {"y0": y0, "grid": grid}, ok,
                f"{mc.max_z_deviation:.17g}",
                {"values": list(mc.values), "scale": rat_str(mc.scale)},
                "numeric"))
    return out


GROUPS = {
    "series": check_series,
    "casimir": check_casimir,
    "rr": check_rr,
    "minimal-model": check_minimal_model,
    "gram": check_gram,
    "ode": check_ode,
    "boson": check_boson,
    "lattice-det": check_lattice_det,
    "mock": check_mock,
}


def run_group(name: str, cfg: RunConfig, **kwargs) -> list[CheckReport]:
    if name not in GROUPS:
        raise ValueError(f"unknown check group {name!r}; know {sorted(GROUPS)}")
    return GROUPS[name](cfg, **kwargs)


def run_all(cfg: RunConfig) -> list[CheckReport]:
    reports: list[CheckReport] = []
    for name in GROUPS:
        reports.extend(GROUPS[name](cfg))
    return reports

#include "report.hpp"

namespace linideal {

Json scalar_json(const Scalar& s) {
    auto [re, im] = s.str_pair();
    return Json::array({re, im});
}

Json multiindex_json(const Multiindex& q) {
    Json a = Json::array();
    for (uint32_t e : q.e) a.push_back(e);
    return a;
}

Json series_json(const Series& s) {
    Json a = Json::array();
    for (const auto& [Q, c] : s.terms()) {
        auto [re, im] = c.str_pair();
        a.push_back(Json::array({multiindex_json(Q), re, im}));
    }
    return a;
}

Json map_json(const PolyMap& m) {
    Json a = Json::array();
    for (int j = 0; j < m.n(); ++j) a.push_back(series_json(m.comp(j)));
    return a;
}

Json mat_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json ideal_json(const MonomialIdeal& I) {
    Json gens = Json::array();
    for (const auto& g : I.generators()) gens.push_back(multiindex_json(g));
    return Json{{"n", I.n()}, {"generators", gens}, {"zero_ideal", I.is_zero_ideal()}};
}

Json resonance_json(const ResonanceReport& r) {
    Json pairs = Json::array();
    for (const auto& [Q, j] : r.resonant_pairs)
        pairs.push_back(Json::array({multiindex_json(Q), j + 1}));
    Json gens = Json::array();
    for (const auto& g : r.invariant_gens) gens.push_back(multiindex_json(g));
    return Json{{"N", r.N},
                {"resonant_pairs", pairs},
                {"invariant_generators", gens},
                {"resonant_ideal", ideal_json(r.res_ideal)},
                {"centralizer_generated", r.centralizer_generated},
                {"cutoff_limited", r.cutoff_limited},
                {"float_warnings", r.float_warnings}};
}

Json omega_json(const OmegaSequence& seq) {
    Json e = Json::array();
    for (const auto& m : seq.entries) e.push_back(m.str());
    return Json{{"K", seq.K},
                {"entries", e},
                {"enumerated_degree", seq.enumerated_degree},
                {"tail_certified", seq.tail_certified}};
}

Json theta_json(const ThetaResult& t) {
    return Json{{"four_theta", t.four_theta.str()},
                {"theta", t.theta.str()},
                {"satisfied", t.satisfied},
                {"S_used", t.S_used},
                {"warning", t.warning}};
}

static Json checks_json(const std::vector<BoundCheck>& checks) {
    Json a = Json::array();
    for (const auto& c : checks)
        a.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return a;
}

Json majorant_json(const MajorantDiagnostics& d) {
    Json eta = Json::array();
    for (const auto& [Q, m] : d.eta)
        eta.push_back(Json::array({multiindex_json(Q), m.str()}));
    return Json{{"n", d.n},
                {"l", d.l},
                {"N", d.N},
                {"theta", theta_json(d.theta)},
                {"b", d.b.get_str()},
                {"a", d.a.str()},
                {"omegas", omega_json(d.omegas)},
                {"eta", eta},
                {"k_max", d.k_max},
                {"c_estimate", d.c_estimate.str()},
                {"c_bound", d.c_bound.str()},
                {"checks", checks_json(d.checks)}};
}

Json linearization_json(const LinearizationResult& res) {
    Json G = Json::array();
    for (const auto& g : res.G) G.push_back(map_json(g));
    Json obs = Json::array();
    for (const auto& o : res.obstructions) {
        Json vals = Json::array();
        for (const auto& v : o.values) vals.push_back(scalar_json(v));
        obs.push_back(Json{{"Q", multiindex_json(o.Q)}, {"j", o.j + 1}, {"values", vals}});
    }
    return Json{{"N", res.N},
                {"mode", res.mode == LinMode::strict ? "strict" : "normalform"},
                {"Phi", map_json(res.Phi)},
                {"G", G},
                {"obstructions", obs}};
}

Json verification_json(const VerificationReport& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    return Json{{"all_pass", v.all_pass}, {"checks", checks}};
}

Json involution_json(const AntiInvolution& rho) {
    return Json{{"B", mat_json(rho.B)}, {"R", map_json(rho.R)}};
}

Json straightening_json(const StraighteningReport& rep) {
    Json inv = Json::array();
    for (const auto& c : rep.involution_checks)
        inv.push_back(Json{{"linear_ok", c.linear_ok},
                           {"involutive", c.involutive},
                           {"linear_residual", c.linear_residual},
                           {"composition_residual", c.composition_residual}});
    Json ide = Json::array();
    for (const auto& c : rep.ideal_checks)
        ide.push_back(Json{{"linear_invariance", c.linear_invariance},
                           {"rho_compatibility", c.rho_compatibility},
                           {"witness", c.witness}});
    Json tr = Json::array();
    for (const auto& t : rep.transported) tr.push_back(involution_json(t));
    Json viol = Json::array();
    for (const auto& [i, k, Q] : rep.nonres.violations)
        viol.push_back(Json::array({i + 1, k + 1, multiindex_json(Q)}));
    return Json{{"involution_checks", inv},
                {"ideal_checks", ide},
                {"nonresonance",
                 Json{{"nonresonant", rep.nonres.nonresonant},
                      {"nonresonant_on_ideal", rep.nonres.nonresonant_on_ideal},
                      {"violations", viol}}},
                {"linearization", linearization_json(rep.lin)},
                {"transported", tr},
                {"transported_in_ideal", rep.transported_in_ideal},
                {"transported_witness", rep.transported_witness},
                {"conj_residual", rep.conj_residual.str()},
                {"normalizability_residual", rep.normalizability_residual.str()},
                {"group_residual", rep.group_residual.str()},
                {"variety", Json{{"unions", rep.variety.unions}, {"text", rep.variety.str()}}},
                {"manifolds", rep.manifold_descriptions},
                {"verification", verification_json(rep.verification)}};
}

std::string render_report(const Json& j) { return j.dump(2) + "\n"; }

} // namespace linideal

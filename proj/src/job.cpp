#include "job.hpp"

#include <set>

namespace linideal {

namespace {

mpq_class parse_rational(const std::string& s) {
    try {
        mpq_class q(s);
        if (q.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal \"" + s + "\"");
    }
}

Scalar parse_scalar(const Json& j, Mode mode, mpfr_prec_t prec) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError("scalar literal must be a [\"re\", \"im\"] string pair");
    if (mode == Mode::exact)
        return Scalar::exact(parse_rational(j[0]), parse_rational(j[1]));
    return Scalar::floating(BigFloat::from_string(j[0], prec),
                            BigFloat::from_string(j[1], prec));
}

Multiindex parse_exponents(const Json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("exponent vector must have n entries");
    std::vector<uint32_t> e;
    for (const auto& x : j) {
        if (!x.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
        e.push_back(x.get<uint32_t>());
    }
    return Multiindex(std::move(e));
}

PolyMap parse_map(const Json& j, int n, uint32_t N, Mode mode, mpfr_prec_t prec) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("map literal must have n components");
    PolyMap m(n, N, mode, prec);
    for (int c = 0; c < n; ++c) {
        if (!j[c].is_array()) throw ParseError("map component must be a term array");
        for (const auto& t : j[c]) {
            if (!t.is_array() || t.size() != 3)
                throw ParseError("term literal must be [[q...], re, im]");
            Multiindex Q = parse_exponents(t[0], n);
            if (Q.degree() > N)
                throw ParseError("term degree exceeds the truncation degree");
            m.set_coeff(c, Q, parse_scalar(Json::array({t[1], t[2]}), mode, prec));
        }
    }
    return m;
}

Mat parse_matrix(const Json& j, int n, Mode mode, mpfr_prec_t prec) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("matrix must have n rows");
    Mat m(n, mode, prec);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw ParseError("matrix row must have n entries");
        for (int k = 0; k < n; ++k) m.at(i, k) = parse_scalar(j[i][k], mode, prec);
    }
    return m;
}

std::string summary_checks(const VerificationReport& v) {
    std::string s;
    for (const auto& c : v.checks)
        s += "  check " + c.name + ": " + (c.pass ? "pass" : "FAIL (" + c.residual + ")") + "\n";
    return s;
}

} // namespace

int status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::bad_input: return 4;
        case ErrorKind::hypothesis: return 2;
        case ErrorKind::obstruction: return 3;
        case ErrorKind::internal: return 5;
    }
    return 5;
}

JobSpec parse_job(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("job document must be an object");
    for (const auto& [key, val] : j.items()) {
        static const std::set<std::string> known{"command", "mode",   "precision",   "n",
                                                "degree",  "depth",  "strategy",    "b",
                                                "family",  "ideal",  "involutions"};
        if (!known.count(key)) throw ParseError("unknown key \"" + key + "\"");
        (void)val;
    }

    JobSpec spec;
    spec.raw = j;
    if (!j.contains("command") || !j["command"].is_string())
        throw ParseError("missing command");
    spec.command = j["command"];
    if (spec.command != "analyze" && spec.command != "smalldiv" &&
        spec.command != "linearize" && spec.command != "straighten")
        throw ParseError("unknown command \"" + spec.command + "\"");

    if (j.contains("mode")) {
        std::string m = j["mode"];
        if (m == "exact")
            spec.mode = Mode::exact;
        else if (m == "float")
            spec.mode = Mode::floating;
        else
            throw ParseError("mode must be \"exact\" or \"float\"");
    }
    if (j.contains("precision")) {
        if (!j["precision"].is_number_unsigned() || j["precision"] < 16 || j["precision"] > 65536)
            throw ParseError("precision must be an integer in [16, 65536]");
        spec.precision = j["precision"].get<long>();
    }
    if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"] < 1 || j["n"] > 16)
        throw ParseError("n must be an integer in [1, 16]");
    spec.n = j["n"].get<int>();
    if (!j.contains("degree") || !j["degree"].is_number_unsigned() || j["degree"] < 2 ||
        j["degree"] > 64)
        throw ParseError("degree must be an integer in [2, 64]");
    spec.N = j["degree"].get<uint32_t>();
    if (j.contains("depth")) {
        if (!j["depth"].is_number_unsigned() || j["depth"] < 1 || j["depth"] > 64)
            throw ParseError("depth must be an integer in [1, 64]");
        spec.K = j["depth"].get<int>();
    }
    if (j.contains("strategy")) {
        std::string s = j["strategy"];
        if (s == "strict")
            spec.strategy = LinMode::strict;
        else if (s == "normalform")
            spec.strategy = LinMode::normalform;
        else
            throw ParseError("strategy must be \"strict\" or \"normalform\"");
    }
    if (j.contains("b")) {
        if (!j["b"].is_string()) throw ParseError("b must be a rational string");
        spec.b = parse_rational(j["b"]);
        if (sgn(spec.b) <= 0) throw ParseError("b must be positive");
    }

    spec.ideal = MonomialIdeal::zero(spec.n);
    if (j.contains("ideal")) {
        if (!j["ideal"].is_array()) throw ParseError("ideal must be an array of exponent vectors");
        std::vector<Multiindex> gens;
        for (const auto& g : j["ideal"]) {
            Multiindex Q = parse_exponents(g, spec.n);
            if (Q.degree() == 0) throw ParseError("unit generator in ideal");
            gens.push_back(Q);
        }
        spec.ideal = MonomialIdeal::make(spec.n, std::move(gens));
    }

    if (j.contains("family")) {
        if (!j["family"].is_array() || j["family"].empty())
            throw ParseError("family must be a nonempty array of map literals");
        for (const auto& f : j["family"])
            spec.family.push_back(parse_map(f, spec.n, spec.N, spec.mode, spec.precision));
    }
    if (j.contains("involutions")) {
        if (!j["involutions"].is_array() || j["involutions"].empty())
            throw ParseError("involutions must be a nonempty array");
        for (const auto& r : j["involutions"]) {
            if (!r.is_object() || !r.contains("B"))
                throw ParseError("involution must be an object with B (and optional R)");
            Mat B = parse_matrix(r["B"], spec.n, spec.mode, spec.precision);
            PolyMap R(spec.n, spec.N, spec.mode, spec.precision);
            if (r.contains("R")) R = parse_map(r["R"], spec.n, spec.N, spec.mode, spec.precision);
            spec.involutions.push_back(AntiInvolution::make(std::move(B), std::move(R)));
        }
    }

    bool wants_family = spec.command != "straighten";
    if (wants_family && spec.family.empty())
        throw ParseError("command " + spec.command + " requires a family");
    if (wants_family && !spec.involutions.empty())
        throw ParseError("command " + spec.command + " takes no involutions");
    if (!wants_family && spec.involutions.empty())
        throw ParseError("command straighten requires involutions");
    if (!wants_family && !spec.family.empty())
        throw ParseError("command straighten takes no family");
    return spec;
}

JobSpec override_job(const JobSpec& spec, const std::string& key, const std::string& value) {
    Json j = spec.raw;
    if (key == "mode" || key == "strategy" || key == "b")
        j[key] = value;
    else if (key == "precision" || key == "degree" || key == "depth")
        try {
            j[key] = std::stoul(value);
        } catch (const std::exception&) {
            throw ParseError("override " + key + " needs an unsigned integer");
        }
    else
        throw ParseError("unknown override \"" + key + "\"");
    return parse_job(j.dump());
}

JobResult run_job(const JobSpec& spec) {
    JobResult out;
    Json rep{{"input", spec.raw}, {"command", spec.command}};
    try {
        if (spec.command == "analyze") {
            std::vector<Mat> lins;
            for (const auto& f : spec.family) lins.push_back(f.linear_part());
            DiagonalFamily D = DiagonalFamily::from_linear_parts(lins);
            ResonanceReport rr = centralizer_report(D, spec.N);
            ThetaResult th = theta(D, spec.ideal);
            rep["result"] = Json{{"resonance", resonance_json(rr)},
                                 {"ideal", ideal_json(spec.ideal)},
                                 {"theta", theta_json(th)}};
            out.summary = "analyze: " + std::to_string(rr.resonant_pairs.size()) +
                          " resonant pairs, resonant ideal with " +
                          std::to_string(rr.res_ideal.generators().size()) +
                          " generators, theta condition " +
                          (th.satisfied ? "satisfied" : "violated") + "\n";
        } else if (spec.command == "smalldiv") {
            std::vector<Mat> lins;
            for (const auto& f : spec.family) lins.push_back(f.linear_part());
            DiagonalFamily D = DiagonalFamily::from_linear_parts(lins);
            MajorantOptions mo;
            mo.b = spec.b;
            OmegaSequence seq = omega(D, spec.ideal, spec.K);
            BigFloat brj = brjuno_partial(seq, spec.precision);
            MajorantDiagnostics diag =
                majorant_diagnostics(spec.family, D, spec.ideal, spec.N, spec.K, mo);
            rep["result"] = Json{{"omega", omega_json(seq)},
                                 {"brjuno_partial", brj.str()},
                                 {"majorant", majorant_json(diag)}};
            bool all = true;
            for (const auto& c : diag.checks) all = all && c.pass;
            out.summary = "smalldiv: K = " + std::to_string(seq.K) + ", omega_K = " +
                          seq.entries.back().str() + ", Brjuno partial = " + brj.str() +
                          ", certificates " + (all ? "pass" : "FAIL") + "\n";
        } else if (spec.command == "linearize") {
            LinearizeOptions lo;
            lo.mode = spec.strategy;
            LinearizationResult res = linearize_on_ideal(spec.family, spec.ideal, spec.N, lo);
            std::vector<Mat> lins;
            for (const auto& f : spec.family) lins.push_back(f.linear_part());
            DiagonalFamily D = DiagonalFamily::from_linear_parts(lins);
            VerificationReport v = verify(res, spec.family, spec.ideal,
                                          centralizer_report(D, spec.N));
            rep["result"] = Json{{"linearization", linearization_json(res)},
                                 {"verification", verification_json(v)}};
            out.summary = "linearize: degree " + std::to_string(res.N) + ", " +
                          std::to_string(res.obstructions.size()) + " obstruction slots, " +
                          (v.all_pass ? "verification pass" : "verification FAIL") + "\n" +
                          summary_checks(v);
        } else {
            StraighteningReport sr = straighten(spec.involutions, spec.ideal, spec.N);
            rep["result"] = straightening_json(sr);
            out.summary = std::string("straighten: ") +
                          (sr.transported_in_ideal ? "involutions straightened"
                                                   : "remainder off the ideal") +
                          ", variety " + sr.variety.str() + "\n" +
                          summary_checks(sr.verification);
        }
    } catch (const Error& e) {
        out.status = status_of(e.kind());
        rep["error"] = Json{{"status", out.status}, {"message", e.what()}};
        out.summary = "error (exit " + std::to_string(out.status) + "): " + e.what() + "\n";
    } catch (const std::exception& e) {
        out.status = 5;
        rep["error"] = Json{{"status", 5}, {"message", e.what()}};
        out.summary = std::string("internal error: ") + e.what() + "\n";
    }
    out.report = render_report(rep);
    return out;
}

} // namespace linideal

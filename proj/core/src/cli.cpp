#include "multispec/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multispec/classify.hpp"
#include "multispec/dynmaps.hpp"
#include "multispec/parse.hpp"
#include "multispec/ritt.hpp"
#include "multispec/spectrum.hpp"

namespace multispec {

namespace {

using json = nlohmann::json;

json affine_to_json(const AffineMap& w) {
    json j;
    if (w.has_rational_scale()) {
        j["scale"] = to_string(w.rational_scale());
        j["shift"] = to_string(w.shift);
    } else {
        const RootCertificate& cert = std::get<RootCertificate>(w.scale);
        j["scale_certificate"] = {{"g", cert.g}, {"rho", to_string(cert.rho)}, {"checks", cert.checks}};
        j["pre_shift"] = to_string(w.pre_shift);
        j["shift"] = to_string(w.shift);
    }
    return j;
}

json sigmas_to_json(const std::vector<Rational>& sigmas) {
    json arr = json::array();
    for (const Rational& s : sigmas) arr.push_back(to_string(s));
    return arr;
}

struct Outcome {
    json results;
    std::string status = "ok";
    int exit_code = 0;
};

Outcome run_spectrum(const json& in) {
    PolyMap f(parse_poly(in.at("f").get<std::string>()));
    unsigned long n = in.at("n").get<unsigned long>();
    MultiplierPoly mp = multiplier_charpoly(f, n);
    SpectrumLevel lvl = spectrum_from_charpoly(mp);
    Outcome out;
    out.results["level"] = n;
    out.results["charpoly"] = mp.charpoly.str("w");
    out.results["sigmas"] = sigmas_to_json(lvl.sigmas);
    return out;
}

Outcome run_compare(const json& in) {
    PolyMap f(parse_poly(in.at("f").get<std::string>()));
    PolyMap g(parse_poly(in.at("g").get<std::string>()));
    unsigned long m = in.at("m").get<unsigned long>();
    SpectrumCompare cmp = spectra_equal_up_to(f, g, m);
    Outcome out;
    out.results["equal"] = cmp.equal;
    if (cmp.first_diff)
        out.results["first_diff"] = *cmp.first_diff;
    else
        out.results["first_diff"] = nullptr;
    return out;
}

Outcome run_ritt(const json& in) {
    unsigned long r = in.at("r").get<unsigned long>();
    unsigned long k = in.at("k").get<unsigned long>();
    Poly R = parse_poly(in.at("R").get<std::string>());
    unsigned long terms = in.at("terms").get<unsigned long>();
    RittPair pair = build_ritt_pair(r, k, R);
    RittPair norm = normalize_pair(pair);
    Outcome out;
    out.results["P"] = pair.P.str();
    out.results["Q"] = pair.Q.str();
    out.results["normalized_r"] = norm.r;
    out.results["normalized_k"] = norm.k;
    if (norm.r < 2) {
        out.results["params"] = {{"valid", false}, {"reason", "normalized r must be at least 2"}};
        out.status = "hypothesis-not-satisfied";
        out.exit_code = 2;
        return out;
    }
    ProgressionReport rep = verify_progression(pair, terms);
    out.results["params"] = {{"valid", rep.params.valid}, {"c1", rep.params.c1}, {"d", rep.params.d}};
    if (!rep.params.valid) {
        out.status = "hypothesis-not-satisfied";
        out.exit_code = 2;
        return out;
    }
    json levels = json::array();
    for (const ProgressionLevelResult& lr : rep.levels) {
        levels.push_back({{"level", lr.level},
                          {"guaranteed_good", lr.guaranteed_good},
                          {"in_progression", lr.in_progression},
                          {"equal", lr.equal}});
    }
    out.results["levels"] = levels;
    out.results["all_good_levels_equal"] = rep.all_good_levels_equal;
    out.results["truncated"] = rep.truncated;
    out.results["verified_terms"] = rep.verified_terms;
    if (!rep.all_good_levels_equal) {
        out.status = "error";
        out.exit_code = 1;
    }
    return out;
}

const char* tag_name(ExceptionalTag tag) {
    switch (tag) {
        case ExceptionalTag::power: return "power";
        case ExceptionalTag::chebyshev_plus: return "chebyshev_plus";
        case ExceptionalTag::chebyshev_minus: return "chebyshev_minus";
        default: return "none";
    }
}

Outcome run_classify(const json& in) {
    PolyMap f(parse_poly(in.at("f").get<std::string>()));
    Outcome out;
    out.results["degree"] = f.degree();
    out.results["distinct_critical_values"] = distinct_critical_values_count(f);
    out.results["presimple"] = is_presimple(f);
    ExceptionalResult exc = is_exceptional(f);
    out.results["exceptional"] = {{"value", exc.exceptional}, {"tag", tag_name(exc.tag)}};
    GLResult gl = generalized_lattes_form(f);
    json glj;
    glj["is_generalized_lattes"] = gl.is_gl;
    glj["via_exceptional"] = gl.via_exceptional;
    if (gl.form) {
        glj["r"] = gl.form->r;
        glj["n"] = gl.form->n;
        glj["witness"] = gl.form->witness_description;
    }
    out.results["generalized_lattes"] = glj;
    return out;
}

Outcome run_genus(const json& in) {
    PolyMap f(parse_poly(in.at("f").get<std::string>()));
    Outcome out;
    if (in.contains("g") && !in.at("g").is_null()) {
        PolyMap g(parse_poly(in.at("g").get<std::string>()));
        out.results["genus_hFH"] = genus_hFH(f, g);
    } else {
        out.results["genus_hF"] = genus_hF(f);
    }
    return out;
}

Outcome run_sac(const json& in) {
    PolyMap f(parse_poly(in.at("f").get<std::string>()));
    unsigned long bound = in.at("bound").get<unsigned long>();
    SacReport rep = superattracting_cycle_count(f, bound);
    Outcome out;
    out.results["count"] = rep.count;
    json pp = json::array();
    for (const auto& [period, cycles] : rep.per_period) pp.push_back({{"period", period}, {"cycles", cycles}});
    out.results["per_period"] = pp;
    out.results["certified_complete"] = rep.certified_complete;
    out.results["caveats"] = rep.caveats;
    out.results["bound"] = rep.bound;
    return out;
}

Outcome run_stable_compare(const json& in) {
    PolyMap f(parse_poly(in.at("f").get<std::string>()));
    PolyMap g(parse_poly(in.at("g").get<std::string>()));
    unsigned long k = in.at("k").get<unsigned long>();
    unsigned long m = in.at("m").get<unsigned long>();
    SpectrumCompare cmp = compare_iterates(f, g, k, m);
    Outcome out;
    out.results["equal"] = cmp.equal;
    if (cmp.first_diff)
        out.results["first_diff"] = *cmp.first_diff;
    else
        out.results["first_diff"] = nullptr;
    return out;
}

Outcome run_conj(const json& in) {
    PolyMap f(parse_poly(in.at("f").get<std::string>()));
    PolyMap g(parse_poly(in.at("g").get<std::string>()));
    Outcome out;
    std::optional<AffineMap> w = conjugacy_test(f, g);
    out.results["conjugate"] = w.has_value();
    if (w) out.results["witness"] = affine_to_json(*w);
    return out;
}

Outcome run_repro(const json&) {
    Outcome out;
    json cases = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, bool pass) {
        cases.push_back({{"name", name}, {"pass", pass}});
        all_pass = all_pass && pass;
    };

    {
        PolyMap P(parse_poly("z^2*(z^3+1)"));
        PolyMap Q(parse_poly("z^2*(z+1)^3"));
        bool s1 = spectrum_level(P, 1).sigmas == spectrum_level(Q, 1).sigmas;
        bool s2 = spectrum_level(P, 2).sigmas == spectrum_level(Q, 2).sigmas;
        bool s3 = spectrum_level(P, 3).sigmas == spectrum_level(Q, 3).sigmas;
        record("ritt-move-progression-levels-1-3", s1 && !s2 && s3);
    }
    {
        PolyMap f(parse_poly("z*(z^2-3)"));
        PolyMap g(parse_poly("z*(z-3)^2"));
        auto w = conjugacy_test(f, g);
        bool pass = w && w->has_rational_scale() && w->rational_scale() == 1 && w->shift == 2;
        pass = pass && spectra_equal_up_to(f, g, 3).equal;
        record("conjugate-ritt-pair", pass);
    }
    {
        bool pass = true;
        Poly z = Poly::variable();
        Poly four(Rational(4));
        for (unsigned long d = 2; d <= 6 && pass; ++d) {
            Poly T = chebyshev(d).poly;
            Poly lhs = (four - z * z) * T.derivative() * T.derivative();
            Poly rhs = Poly(Rational(static_cast<long>(d * d))) * (four - T * T);
            pass = lhs == rhs;
        }
        record("chebyshev-differential-identity", pass);
    }
    {
        bool pass = true;
        for (unsigned long p = 2; p <= 4 && pass; ++p)
            for (unsigned long q = 2; q <= 4 && pass; ++q)
                pass = compose(chebyshev(p).poly, chebyshev(q).poly) == chebyshev(p * q).poly;
        record("chebyshev-composition", pass);
    }
    {
        bool pass = true;
        for (const char* ctext : {"1", "-1", "1/2", "3"}) {
            Poly f = Poly::variable() * Poly::variable() + Poly(parse_rational(ctext));
            SymmetryGroup grp = sigma_group(PolyMap(f), 3);
            pass = pass && grp.order == 2;
        }
        record("quadratic-symmetry-group", pass);
    }
    {
        bool pass = true;
        for (unsigned long m = 4; m <= 6 && pass; ++m) {
            // a pre-simple instance of degree m: odd critical points keep
            // the critical values pairwise distinct
            std::vector<Rational> c;
            for (unsigned long i = 0; i + 2 < m; ++i) c.push_back(Rational(static_cast<long>(2 * i + 1)));
            PolyMap F = build_Pca(c, Rational(1), m);
            pass = is_presimple(F) &&
                   genus_hF(F) == static_cast<long>((m - 2) * (m - 3) / 2);
        }
        record("presimple-genus-table", pass);
    }

    out.results["cases"] = cases;
    out.results["all_pass"] = all_pass;
    if (!all_pass) {
        out.status = "error";
        out.exit_code = 1;
    }
    return out;
}

Outcome execute(const std::string& command, const json& inputs) {
    if (command == "spectrum") return run_spectrum(inputs);
    if (command == "compare") return run_compare(inputs);
    if (command == "ritt") return run_ritt(inputs);
    if (command == "classify") return run_classify(inputs);
    if (command == "genus") return run_genus(inputs);
    if (command == "sac") return run_sac(inputs);
    if (command == "stable-compare") return run_stable_compare(inputs);
    if (command == "conj") return run_conj(inputs);
    if (command == "repro") return run_repro(inputs);
    throw std::runtime_error("unknown command in report: " + command);
}

void print_text(std::ostream& os, const json& j, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                os << pad << key << ":\n";
                print_text(os, value, indent + 1);
            } else {
                os << pad << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                os << pad << "-\n";
                print_text(os, value, indent + 1);
            } else {
                os << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    }
}

int emit(std::ostream& out, const std::string& command, const json& inputs, const Outcome& outcome,
         double seconds, bool as_json) {
    json report;
    report["schema"] = "multispec/1";
    report["command"] = command;
    report["inputs"] = inputs;
    report["results"] = outcome.results;
    report["status"] = outcome.status;
    report["timing_seconds"] = seconds;
    if (as_json) {
        out << report.dump(2) << "\n";
    } else {
        out << "command: " << command << "\n";
        out << "status: " << outcome.status << "\n";
        print_text(out, outcome.results);
    }
    return outcome.exit_code;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"multispec: exact multiplier spectra of polynomial maps"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as a single JSON object");

    std::string f_text, g_text, R_text, report_path;
    unsigned long n = 1, m = 3, k = 1, r = 1, terms = 1, bound = 1;

    CLI::App* sc_spectrum = app.add_subcommand("spectrum", "multiplier spectrum at one level");
    sc_spectrum->add_option("-f", f_text, "polynomial")->required();
    sc_spectrum->add_option("-n", n, "level")->required();

    CLI::App* sc_compare = app.add_subcommand("compare", "compare spectra up to a level");
    sc_compare->add_option("-f", f_text)->required();
    sc_compare->add_option("-g", g_text)->required();
    sc_compare->add_option("-m", m, "levels")->required();

    CLI::App* sc_ritt = app.add_subcommand("ritt", "verify the spectrum progression of a Ritt pair");
    sc_ritt->add_option("-r", r)->required();
    sc_ritt->add_option("-k", k)->required();
    sc_ritt->add_option("-R", R_text)->required();
    sc_ritt->add_option("--terms", terms)->required();

    CLI::App* sc_classify = app.add_subcommand("classify", "classification predicates");
    sc_classify->add_option("-f", f_text)->required();

    CLI::App* sc_genus = app.add_subcommand("genus", "genus of the fiber-product curve");
    sc_genus->add_option("-f", f_text)->required();
    sc_genus->add_option("-g", g_text);

    CLI::App* sc_sac = app.add_subcommand("sac", "superattracting cycle count");
    sc_sac->add_option("-f", f_text)->required();
    sc_sac->add_option("--bound", bound)->required();

    CLI::App* sc_stable = app.add_subcommand("stable-compare", "compare spectra of iterates");
    sc_stable->add_option("-f", f_text)->required();
    sc_stable->add_option("-g", g_text)->required();
    sc_stable->add_option("-k", k)->required();
    sc_stable->add_option("-m", m)->required();

    CLI::App* sc_conj = app.add_subcommand("conj", "affine conjugacy test");
    sc_conj->add_option("-f", f_text)->required();
    sc_conj->add_option("-g", g_text)->required();

    CLI::App* sc_repro = app.add_subcommand("repro", "run the worked-example corpus");

    CLI::App* sc_verify = app.add_subcommand("verify-report", "re-run a JSON report and compare");
    sc_verify->add_option("file", report_path, "report file (defaults to stdin)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->add_flag("--json", as_json, "emit the report as a single JSON object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    std::string command;
    json inputs = json::object();
    if (sc_spectrum->parsed()) {
        command = "spectrum";
        inputs = {{"f", f_text}, {"n", n}};
    } else if (sc_compare->parsed()) {
        command = "compare";
        inputs = {{"f", f_text}, {"g", g_text}, {"m", m}};
    } else if (sc_ritt->parsed()) {
        command = "ritt";
        inputs = {{"r", r}, {"k", k}, {"R", R_text}, {"terms", terms}};
    } else if (sc_classify->parsed()) {
        command = "classify";
        inputs = {{"f", f_text}};
    } else if (sc_genus->parsed()) {
        command = "genus";
        inputs["f"] = f_text;
        if (!g_text.empty()) inputs["g"] = g_text;
    } else if (sc_sac->parsed()) {
        command = "sac";
        inputs = {{"f", f_text}, {"bound", bound}};
    } else if (sc_stable->parsed()) {
        command = "stable-compare";
        inputs = {{"f", f_text}, {"g", g_text}, {"k", k}, {"m", m}};
    } else if (sc_conj->parsed()) {
        command = "conj";
        inputs = {{"f", f_text}, {"g", g_text}};
    } else if (sc_repro->parsed()) {
        command = "repro";
    } else if (sc_verify->parsed()) {
        // verify-report is handled on its own: load, re-run, compare.
        try {
            json report;
            if (report_path.empty()) {
                report = json::parse(std::cin);
            } else {
                std::ifstream in_file(report_path);
                if (!in_file) throw std::runtime_error("cannot open report file: " + report_path);
                report = json::parse(in_file);
            }
            if (report.at("schema").get<std::string>() != "multispec/1")
                throw std::runtime_error("unsupported report schema");
            Outcome rerun = execute(report.at("command").get<std::string>(), report.at("inputs"));
            bool match = rerun.results == report.at("results") &&
                         rerun.status == report.at("status").get<std::string>();
            json inputs_v = {{"command", report.at("command")}};
            Outcome vo;
            vo.results["match"] = match;
            vo.exit_code = match ? 0 : 1;
            if (!match) vo.status = "error";
            auto t = 0.0;
            return emit(out, "verify-report", inputs_v, vo, t, as_json);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
    }

    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = execute(command, inputs);
    } catch (const std::exception& e) {
        outcome.results = json::object();
        outcome.results["message"] = e.what();
        outcome.status = "error";
        outcome.exit_code = 1;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.status == "error" && !as_json) err << "error: " << outcome.results.value("message", "") << "\n";
    return emit(out, command, inputs, outcome, seconds, as_json);
}

}  // namespace multispec

#include "CLI11.hpp"
#include "json.hpp"

#include "geom/incidence.hpp"
#include "geom/measure.hpp"
#include "geom/props.hpp"
#include "geom/script.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace geom;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json report_to_json(const AxiomReport& rep) {
    json j;
    j["id"] = rep.id;
    j["pass"] = rep.pass;
    j["witnesses"] = rep.witnesses;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

std::optional<Point> parse_point_arg(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '(') s = s.substr(1);
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') { parts.push_back(cur); cur.clear(); }
        else if (c != ' ') cur += c;
    }
    parts.push_back(cur);
    if (parts.size() != 3) return std::nullopt;
    auto x = rat_parse(parts[0]), y = rat_parse(parts[1]), z = rat_parse(parts[2]);
    if (!x || !y || !z) return std::nullopt;
    return Point{*x, *y, *z};
}

json interval_json(const DyadicInterval& iv) {
    return json{{"lo", dyadic_str(iv.lo)}, {"hi", dyadic_str(iv.hi)}, {"m", iv.m}};
}

int cmd_check_incidence(const std::string& file, const std::string& axioms, bool theorems,
                        bool as_json, int max_points) {
    FiniteIncidenceModel model = parse_incidence_model(read_file(file));
    std::vector<AxiomReport> reports;
    if (axioms.empty()) {
        reports = check_all_axioms(model, max_points);
    } else {
        std::istringstream ss(axioms);
        std::string id;
        while (std::getline(ss, id, ',')) reports.push_back(check_axiom(model, id, max_points));
    }
    bool axioms_pass = true;
    for (const auto& r : reports) axioms_pass = axioms_pass && r.pass;
    if (theorems && axioms_pass) {
        auto th = check_incidence_theorems(model, max_points);
        reports.insert(reports.end(), th.begin(), th.end());
    }
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;

    if (as_json) {
        json j;
        j["schema"] = 1;
        j["command"] = "check-incidence";
        j["model"] = file;
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
        if (theorems && !axioms_pass)
            j["note"] = "theorems skipped: the incidence axioms fail";
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.id;
            if (!r.pass) {
                std::cout << "  witnesses:";
                for (const auto& w : r.witnesses) {
                    std::cout << " (";
                    for (size_t i = 0; i < w.size(); ++i)
                        std::cout << (i ? " " : "") << w[i];
                    std::cout << ")";
                }
            }
            std::cout << "\n";
        }
        if (theorems && !axioms_pass)
            std::cout << "theorems skipped: the incidence axioms fail\n";
        std::cout << (pass ? "all checks passed" : "checks FAILED") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_axioms(const std::string& model, int cases, std::uint64_t seed,
               const std::string& group, bool as_json, int max_points) {
    if (model != "analytic") {
        // a model file: delegate to the incidence checker
        return cmd_check_incidence(model, "", true, as_json, max_points);
    }
    auto results = run_axiom_suite(cases, seed, group);
    bool pass = true;
    for (const auto& r : results) pass = pass && r.pass();
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["command"] = "axioms";
        j["model"] = "analytic";
        j["cases"] = cases;
        j["seed"] = seed;
        j["properties"] = json::array();
        for (const auto& r : results)
            j["properties"].push_back(json{{"id", r.id},
                                           {"group", r.group},
                                           {"cases", r.cases},
                                           {"failures", r.failures},
                                           {"pass", r.pass()}});
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            std::cout << (r.pass() ? "pass" : "FAIL") << "  [" << r.group << "] " << r.id << "  ("
                      << r.cases - r.failures << "/" << r.cases << ")\n";
        std::cout << (pass ? "all properties passed" : "properties FAILED") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_run(const std::string& file, unsigned precision, bool as_json,
            const std::string& svg_out) {
    Script script;
    try {
        script = parse_script(read_file(file));
    } catch (const ParseError& err) {
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["command"] = "run";
            j["parse_error"] =
                json{{"message", err.message}, {"line", err.line}, {"col", err.col}};
            j["pass"] = false;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << file << ":" << err.line << ":" << err.col << ": error: " << err.message
                      << "\n";
        }
        return 2;
    }
    ExecOptions opt;
    opt.precision = precision;
    opt.svg_override = svg_out;
    RunReport rep = exec_script(script, opt);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["command"] = "run";
        j["precision"] = rep.precision;
        j["statements"] = json::array();
        for (const auto& st : rep.statements)
            j["statements"].push_back(json{{"index", st.index},
                                           {"line", st.line},
                                           {"kind", st.kind},
                                           {"text", st.text},
                                           {"ok", st.ok},
                                           {"detail", st.detail}});
        j["summary"] = json{{"asserts", rep.asserts},
                            {"assert_failures", rep.assert_failures},
                            {"errors", rep.errors}};
        j["pass"] = rep.pass();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& st : rep.statements) {
            std::cout << (st.ok ? "ok  " : "FAIL") << " " << st.line << ": " << st.text;
            if (!st.detail.empty()) std::cout << "   -- " << st.detail;
            std::cout << "\n";
        }
        std::cout << rep.asserts - rep.assert_failures << "/" << rep.asserts
                  << " assertions passed, " << rep.errors << " errors\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_measure(const std::vector<std::string>& len_args,
                const std::vector<std::string>& angle_args, unsigned precision, bool as_json) {
    json j;
    j["schema"] = 1;
    j["command"] = "measure";
    j["precision"] = precision;
    if (!len_args.empty()) {
        auto p = parse_point_arg(len_args[0]);
        auto q = parse_point_arg(len_args[1]);
        if (!p || !q) {
            std::cerr << "measure: bad point (expected x,y,z with rational coordinates)\n";
            return 2;
        }
        LineFrame unit = make_frame({0, 0, 0}, {1, 0, 0});
        Measurement m = length(*p, *q, unit, precision);
        if (as_json) {
            j["kind"] = "length";
            j["exact"] = qv_str(m.exact);
            j["enclosure"] = interval_json(m.enclosure);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << value_str(Value{m}) << "\n";
        }
        return 0;
    }
    if (!angle_args.empty()) {
        auto a = parse_point_arg(angle_args[0]);
        auto o = parse_point_arg(angle_args[1]);
        auto b = parse_point_arg(angle_args[2]);
        if (!a || !o || !b) {
            std::cerr << "measure: bad point (expected x,y,z with rational coordinates)\n";
            return 2;
        }
        Measurement m = angle_measure(*a, *o, *b, precision);
        if (as_json) {
            j["kind"] = "angle";
            j["cos"] = qv_str(m.exact);
            j["pi_exact"] = m.is_pi;
            j["enclosure"] = interval_json(m.enclosure);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << value_str(Value{m}) << "\n";
        }
        return 0;
    }
    std::cerr << "measure: pass --len P Q or --angle A O B\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geomkit: exact-arithmetic Euclidean geometry kernel"};
    app.require_subcommand(1);

    // check-incidence
    std::string ci_file, ci_axioms;
    bool ci_theorems = false, ci_json = false;
    int ci_max_points = kDefaultMaxModelPoints;
    auto* ci = app.add_subcommand("check-incidence", "check incidence axioms A1-A8 (and theorems Th1.1-1.6) on a model file");
    ci->add_option("file", ci_file, "model file")->required();
    ci->add_option("--axioms", ci_axioms, "comma-separated subset, e.g. A1,A2");
    ci->add_flag("--theorems", ci_theorems, "also check the derived theorems Th1.1-1.6");
    ci->add_flag("--json", ci_json, "JSON report");
    ci->add_option("--max-points", ci_max_points, "raise the model size cap");

    // axioms
    std::string ax_model = "analytic", ax_group;
    int ax_cases = 100;
    std::uint64_t ax_seed = 1;
    bool ax_json = false;
    int ax_max_points = kDefaultMaxModelPoints;
    auto* ax = app.add_subcommand("axioms", "run the randomized axiom/theorem suite");
    ax->add_option("--model", ax_model, "'analytic' or a model file");
    ax->add_option("--cases", ax_cases, "cases per property");
    ax->add_option("--seed", ax_seed, "random seed");
    ax->add_option("--group", ax_group, "restrict to one group");
    ax->add_flag("--json", ax_json, "JSON report");
    ax->add_option("--max-points", ax_max_points, "model size cap for file models");

    // run
    std::string run_file, run_svg;
    unsigned run_precision = kDefaultOrder;
    bool run_json = false;
    auto* rn = app.add_subcommand("run", "run a construction script");
    rn->add_option("script", run_file, "script file")->required();
    rn->add_option("--precision", run_precision, "dyadic order for measurements");
    rn->add_flag("--json", run_json, "JSON report");
    rn->add_option("--svg", run_svg, "override the output path of emit statements");

    // measure
    std::vector<std::string> me_len, me_angle;
    unsigned me_precision = kDefaultOrder;
    bool me_json = false;
    auto* me = app.add_subcommand("measure", "measure a length or an angle");
    me->add_option("--len", me_len, "two points x,y,z x,y,z")->expected(2);
    me->add_option("--angle", me_angle, "three points A O B")->expected(3);
    me->add_option("--precision", me_precision, "dyadic order");
    me->add_flag("--json", me_json, "JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ci->parsed())
            return cmd_check_incidence(ci_file, ci_axioms, ci_theorems, ci_json, ci_max_points);
        if (ax->parsed())
            return cmd_axioms(ax_model, ax_cases, ax_seed, ax_group, ax_json, ax_max_points);
        if (rn->parsed()) return cmd_run(run_file, run_precision, run_json, run_svg);
        if (me->parsed()) return cmd_measure(me_len, me_angle, me_precision, me_json);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}

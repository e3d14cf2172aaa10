#include "padrep/certificate.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace padrep {

using nlohmann::json;

void RunConfig::validate() const {
    if (precision_digits < 50) throw DomainError("config: precision must be >= 50 digits");
    if (n_max < 5) throw DomainError("config: n-max must be >= 5");
    if (ell_max < 2) throw DomainError("config: l-max must be >= 2");
    if (format != "json" && format != "markdown") throw DomainError("config: unknown format");
    if (m_override && *m_override < 1) throw DomainError("config: m-override must be positive");
}

json ival_to_json(const Ival& v) {
    auto [digits, exponent] = v.mid_decimal(40);
    char rad[32];
    snprintf(rad, sizeof(rad), "%.3e", v.rad_d());
    return json{{"digits", digits}, {"exponent", exponent}, {"radius", rad}};
}

json config_to_json(const RunConfig& c) {
    json j{{"precision_digits", c.precision_digits},
           {"n_max", c.n_max},
           {"ell_max", c.ell_max},
           {"format", c.format},
           {"threads", c.threads}};
    j["m_override"] = c.m_override ? json(c.m_override->get_str()) : json(nullptr);
    return j;
}

json solutions_to_json(const RepresentationSet& rs) {
    json reps = json::array();
    for (const auto& [value, sols] : rs.by_value) {
        json tuples = json::array();
        for (const Solution& s : sols)
            tuples.push_back({{"n1", s.n1}, {"n2", s.n2}, {"n3", s.n3},
                              {"d", s.digit}, {"l", s.len}});
        reps.push_back({{"N", value.get_str()}, {"tuples", tuples}});
    }
    return json{{"n_max", rs.n_max}, {"ell_max", rs.ell_max},
                {"count", rs.by_value.size()}, {"representations", reps}};
}

json bound_chain_to_json(const BoundChain& bc) {
    return json{{"c1", ival_to_json(bc.c1)},
                {"c2", ival_to_json(bc.c2)},
                {"c3", ival_to_json(bc.c3)},
                {"k1", ival_to_json(bc.k1)},
                {"k2", ival_to_json(bc.k2)},
                {"k3", ival_to_json(bc.k3)},
                {"c1_published", bc.c1_published},
                {"c2_published", bc.c2_published},
                {"c3_published", bc.c3_published},
                {"absolute_bound", bc.absolute_bound.get_str()}};
}

namespace {

json stage_to_json(const StageOutcome& s) {
    json exceptions = json::array();
    for (const SweepException& ex : s.exceptions) {
        json e{{"d", ex.d}, {"k", ex.k}, {"resolution", ex.resolution},
               {"resolved_bound", ex.resolved_bound}};
        if (ex.s >= 0) e["s"] = ex.s;
        if (ex.resolution == "integer-mu") e["mu"] = ex.mu_integer;
        exceptions.push_back(std::move(e));
    }
    return json{{"bound", s.bound},
                {"reported_bound", s.reported_bound},
                {"main_bound", s.main_bound},
                {"homogeneous_bound", s.homogeneous_bound},
                {"escalated_cells", s.escalated_cells},
                {"escalated_bound", s.escalated_bound},
                {"min_epsilon", ival_to_json(s.min_epsilon)},
                {"q_index", s.q_index},
                {"exceptions", exceptions}};
}

}  // namespace

json reduction_to_json(const ReductionCertificate& rc) {
    return json{{"M", rc.M.get_str()},
                {"q_index", rc.q_index},
                {"q", rc.q.get_str()},
                {"stage1", stage_to_json(rc.s1)},
                {"stage2", stage_to_json(rc.s2)},
                {"stage3", stage_to_json(rc.s3)},
                {"search_threshold", rc.search_threshold},
                {"contradiction", rc.contradiction}};
}

json make_certificate(const RunConfig& config, const RepresentationSet* solutions,
                      const BoundChain* bounds, const ReductionCertificate* reduction) {
    json j;
    j["config"] = config_to_json(config);
    j["solutions"] = solutions ? solutions_to_json(*solutions) : json(nullptr);
    j["bounds"] = bounds ? bound_chain_to_json(*bounds) : json(nullptr);
    j["reduction"] = reduction ? reduction_to_json(*reduction) : json(nullptr);
    auto now = std::chrono::system_clock::now().time_since_epoch();
    j["meta"] = {{"tool", "padrep"},
                 {"version", "1.0.0"},
                 {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
    return j;
}

RepresentationSet representation_set_from_json(const json& j) {
    RepresentationSet rs;
    rs.n_max = j.at("n_max").get<unsigned>();
    rs.ell_max = j.at("ell_max").get<unsigned>();
    for (const json& rep : j.at("representations")) {
        mpz_class value(rep.at("N").get<std::string>());
        for (const json& t : rep.at("tuples"))
            rs.by_value[value].push_back({value, t.at("n1").get<unsigned>(),
                                          t.at("n2").get<unsigned>(), t.at("n3").get<unsigned>(),
                                          t.at("d").get<int>(), t.at("l").get<unsigned>()});
    }
    return rs;
}

bool validate_certificate(const json& j, std::string& error) {
    auto fail = [&](const std::string& msg) {
        error = msg;
        return false;
    };
    if (!j.is_object()) return fail("certificate is not a JSON object");
    for (const char* key : {"config", "solutions", "bounds", "reduction", "meta"})
        if (!j.contains(key)) return fail(std::string("missing top-level key '") + key + "'");
    if (!j["config"].is_object()) return fail("config is not an object");
    for (const char* key : {"precision_digits", "n_max", "ell_max"})
        if (!j["config"].contains(key) || !j["config"][key].is_number_integer())
            return fail(std::string("config key '") + key + "' missing or not an integer");
    if (!j["solutions"].is_null()) {
        if (!j["solutions"].is_object() || !j["solutions"].contains("representations") ||
            !j["solutions"]["representations"].is_array())
            return fail("solutions section malformed");
        for (const json& rep : j["solutions"]["representations"]) {
            if (!rep.contains("N") || !rep["N"].is_string())
                return fail("representation without decimal-string N");
            const std::string& n = rep["N"].get_ref<const std::string&>();
            if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
                return fail("representation N is not a decimal string");
        }
    }
    if (!j["bounds"].is_null()) {
        for (const char* key : {"c1", "c2", "c3", "absolute_bound"})
            if (!j["bounds"].contains(key))
                return fail(std::string("bounds key '") + key + "' missing");
        if (!j["bounds"]["absolute_bound"].is_string())
            return fail("bounds.absolute_bound must be a decimal string");
    }
    if (!j["reduction"].is_null()) {
        for (const char* key : {"M", "q", "stage1", "stage2", "stage3", "contradiction"})
            if (!j["reduction"].contains(key))
                return fail(std::string("reduction key '") + key + "' missing");
        if (!j["reduction"]["contradiction"].is_boolean())
            return fail("reduction.contradiction must be a boolean");
    }
    return true;
}

namespace {

std::string ival_str(const json& v) {
    std::string d = v.at("digits").get<std::string>();
    long e = v.at("exponent").get<long>();
    std::string sign;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d = d.substr(1);
    }
    if (d.size() > 10) d = d.substr(0, 10);
    return sign + "0." + d + "e" + std::to_string(e);
}

void stage_markdown(std::ostringstream& out, const json& s, const std::string& name,
                    const std::string& variable) {
    out << "### " << name << " (bounds " << variable << ")\n\n";
    out << "| quantity | value |\n|---|---|\n";
    out << "| bound | " << s.at("bound") << " |\n";
    out << "| reported bound | " << s.at("reported_bound") << " |\n";
    out << "| min epsilon | " << ival_str(s.at("min_epsilon")) << " |\n";
    out << "| convergent index | " << s.at("q_index") << " |\n";
    out << "| exceptions | " << s.at("exceptions").size() << " |\n\n";
    if (!s.at("exceptions").empty()) {
        out << "| d | k | s | resolution | resolved bound |\n|---|---|---|---|---|\n";
        for (const json& ex : s.at("exceptions")) {
            out << "| " << ex.at("d") << " | " << ex.at("k") << " | ";
            if (ex.contains("s"))
                out << ex.at("s");
            else
                out << "-";
            out << " | " << ex.at("resolution").get<std::string>() << " | "
                << ex.at("resolved_bound") << " |\n";
        }
        out << "\n";
    }
}

}  // namespace

std::string certificate_to_markdown(const json& j) {
    std::ostringstream out;
    out << "# Repdigit / Padovan verification report\n\n";
    if (!j.at("solutions").is_null()) {
        const json& s = j["solutions"];
        out << "## Search\n\n";
        out << "Range: n <= " << s.at("n_max") << ", repdigit length <= " << s.at("ell_max")
            << ". Distinct repdigit values found: " << s.at("count") << ".\n\n";
        out << "| N | representations |\n|---|---|\n";
        for (const json& rep : s.at("representations"))
            out << "| " << rep.at("N").get<std::string>() << " | " << rep.at("tuples").size()
                << " |\n";
        out << "\n";
    }
    if (!j.at("bounds").is_null()) {
        const json& b = j["bounds"];
        out << "## Baker bound chain\n\n";
        out << "| constant | derived | published |\n|---|---|---|\n";
        out << "| c1 | " << ival_str(b.at("c1")) << " | " << b.at("c1_published") << " |\n";
        out << "| c2 | " << ival_str(b.at("c2")) << " | " << b.at("c2_published") << " |\n";
        out << "| c3 | " << ival_str(b.at("c3")) << " | " << b.at("c3_published") << " |\n";
        out << "\nAbsolute bound on n1: " << b.at("absolute_bound").get<std::string>() << "\n\n";
    }
    if (!j.at("reduction").is_null()) {
        const json& r = j["reduction"];
        out << "## Reduction\n\n";
        out << "M = " << r.at("M").get<std::string>() << ", convergent q_" << r.at("q_index")
            << " = " << r.at("q").get<std::string>() << "\n\n";
        stage_markdown(out, r.at("stage1"), "Stage 1", "n1 - n2");
        stage_markdown(out, r.at("stage2"), "Stage 2", "n2 - n3");
        stage_markdown(out, r.at("stage3"), "Stage 3", "n1");
        out << "Search threshold: " << r.at("search_threshold") << ". Contradiction: "
            << (r.at("contradiction").get<bool>() ? "yes" : "no") << ".\n";
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return json::parse(f);
}

}  // namespace padrep

#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "padrep/certificate.hpp"
#include "padrep/heights.hpp"
#include "padrep/padovan.hpp"
#include "padrep/reduction.hpp"
#include "padrep/search.hpp"

namespace {

using padrep::RunConfig;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitMismatch = 4;

// The nineteen repdigits the full pipeline must reproduce at defaults.
const std::set<std::string> kExpectedValues = {
    "11",  "22",  "33",  "44",  "55",  "66",   "77",   "88",   "99",  "111",
    "222", "333", "444", "555", "666", "888",  "1111", "3333", "7777"};

void emit(const RunConfig& cfg, const json& cert) {
    std::string text =
        cfg.format == "markdown" ? padrep::certificate_to_markdown(cert) : cert.dump(2) + "\n";
    if (cfg.output_path.empty())
        std::cout << text;
    else
        padrep::write_text_file(cfg.output_path, text);
}

int cmd_search(const RunConfig& cfg, bool check_theorem) {
    padrep::RepresentationSet rs =
        padrep::enumerate_solutions(cfg.n_max, cfg.ell_max, cfg.threads);
    emit(cfg, padrep::make_certificate(cfg, &rs, nullptr, nullptr));
    if (check_theorem && cfg.n_max >= 500 && cfg.ell_max >= 100) {
        std::set<std::string> found;
        for (const mpz_class& v : rs.values()) found.insert(v.get_str());
        if (found != kExpectedValues) {
            std::cerr << "search: solution set disagrees with the expected nineteen values\n";
            return kExitMismatch;
        }
    }
    return kExitOk;
}

int cmd_bounds(const RunConfig& cfg) {
    padrep::PrecisionContext ctx(cfg.precision_digits);
    padrep::PlasticRootSystem roots = padrep::solve_plastic_cubic(ctx);
    padrep::BinetCoefficients coeffs = padrep::binet_coefficients(roots);
    padrep::BoundChain bc = padrep::case_bounds(roots, coeffs);
    emit(cfg, padrep::make_certificate(cfg, nullptr, &bc, nullptr));
    return kExitOk;
}

int cmd_reduce(const RunConfig& cfg) {
    padrep::PrecisionContext ctx(cfg.precision_digits);
    mpz_class M;
    if (cfg.m_override) {
        M = *cfg.m_override;
    } else {
        padrep::PlasticRootSystem roots = padrep::solve_plastic_cubic(ctx);
        padrep::BinetCoefficients coeffs = padrep::binet_coefficients(roots);
        M = padrep::absolute_bound(roots, coeffs);
    }
    padrep::ReductionContext rc = padrep::make_reduction_context(ctx, M);
    padrep::ReductionCertificate cert =
        padrep::run_full_reduction(rc, cfg.n_max, cfg.threads != 1);
    emit(cfg, padrep::make_certificate(cfg, nullptr, nullptr, &cert));
    return cert.contradiction ? kExitOk : kExitMismatch;
}

int cmd_verify_all(const RunConfig& cfg) {
    padrep::RepresentationSet rs =
        padrep::enumerate_solutions(cfg.n_max, cfg.ell_max, cfg.threads);
    for (const auto& [value, sols] : rs.by_value)
        for (const padrep::Solution& s : sols)
            if (!padrep::verify_solution(s)) {
                std::cerr << "verify-all: solution failed recheck for N = " << value.get_str()
                          << "\n";
                return kExitMismatch;
            }

    padrep::PrecisionContext ctx(cfg.precision_digits);
    padrep::PlasticRootSystem roots = padrep::solve_plastic_cubic(ctx);
    padrep::BinetCoefficients coeffs = padrep::binet_coefficients(roots);
    padrep::BoundChain bc = padrep::case_bounds(roots, coeffs);

    mpz_class M = cfg.m_override ? *cfg.m_override : bc.absolute_bound;
    padrep::ReductionContext rc = padrep::make_reduction_context(ctx, M);
    padrep::ReductionCertificate red =
        padrep::run_full_reduction(rc, cfg.n_max, cfg.threads != 1);

    emit(cfg, padrep::make_certificate(cfg, &rs, &bc, &red));

    if (!red.contradiction) {
        std::cerr << "verify-all: reduction did not close under the searched range\n";
        return kExitMismatch;
    }
    if (cfg.n_max >= 500 && cfg.ell_max >= 100) {
        std::set<std::string> found;
        for (const mpz_class& v : rs.values()) found.insert(v.get_str());
        if (found != kExpectedValues) {
            std::cerr << "verify-all: solution set disagrees with the expected nineteen values\n";
            return kExitMismatch;
        }
    }
    return kExitOk;
}

int cmd_report(const RunConfig& cfg, const std::string& input_path) {
    json cert = padrep::read_json_file(input_path);
    std::string err;
    if (!padrep::validate_certificate(cert, err)) {
        std::cerr << "report: invalid certificate: " << err << "\n";
        return kExitMismatch;
    }
    std::string text = padrep::certificate_to_markdown(cert);
    if (cfg.output_path.empty())
        std::cout << text;
    else
        padrep::write_text_file(cfg.output_path, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Repdigits as sums of three Padovan numbers: search, bounds, reduction"};
    app.fallthrough();  // global options may follow the subcommand
    app.require_subcommand(1);

    RunConfig cfg;
    std::string m_override_str;
    app.add_option("--precision", cfg.precision_digits, "working precision in decimal digits");
    app.add_option("--n-max", cfg.n_max, "largest Padovan index searched / reduction threshold");
    app.add_option("--l-max", cfg.ell_max, "largest repdigit length searched");
    app.add_option("--m-override", m_override_str, "override the reduction bound M (decimal)");
    app.add_option("--out", cfg.output_path, "write output to this file instead of stdout");
    app.add_option("--format", cfg.format, "output format: json or markdown");
    app.add_option("--threads", cfg.threads, "worker threads (0 = library default, 1 = serial)");

    CLI::App* sc_search = app.add_subcommand("search", "exhaustive triple search");
    CLI::App* sc_bounds = app.add_subcommand("bounds", "linear-forms bound chain");
    CLI::App* sc_reduce = app.add_subcommand("reduce", "three-stage reduction");
    CLI::App* sc_verify = app.add_subcommand("verify-all", "full pipeline with certificate");
    CLI::App* sc_report = app.add_subcommand("report", "render a certificate as markdown");
    std::string report_input;
    sc_report->add_option("certificate", report_input, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (!m_override_str.empty()) cfg.m_override = mpz_class(m_override_str);
    } catch (const std::invalid_argument&) {
        std::cerr << "error: --m-override is not a decimal integer\n";
        return kExitConfig;
    }

    try {
        cfg.validate();
        if (sc_search->parsed()) return cmd_search(cfg, true);
        if (sc_bounds->parsed()) return cmd_bounds(cfg);
        if (sc_reduce->parsed()) return cmd_reduce(cfg);
        if (sc_verify->parsed()) return cmd_verify_all(cfg);
        if (sc_report->parsed()) return cmd_report(cfg, report_input);
    } catch (const padrep::PrecisionExhausted& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const padrep::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const padrep::UnresolvedException& e) {
        std::cerr << "mathematical mismatch: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}

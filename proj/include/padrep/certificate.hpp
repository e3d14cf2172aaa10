#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "padrep/heights.hpp"
#include "padrep/reduction.hpp"
#include "padrep/search.hpp"

namespace padrep {

struct RunConfig {
    int precision_digits = 400;
    unsigned n_max = 500;
    unsigned ell_max = 100;
    std::optional<mpz_class> m_override;
    std::string output_path;
    std::string format = "json";  // "json" or "markdown"
    int threads = 0;

    void validate() const;
};

/// Lossless JSON forms: big integers as decimal strings, reals as
/// {digits, exponent, radius} with value = 0.digits * 10^exponent.
nlohmann::json ival_to_json(const Ival& v);
nlohmann::json config_to_json(const RunConfig& c);
nlohmann::json solutions_to_json(const RepresentationSet& rs);
nlohmann::json bound_chain_to_json(const BoundChain& bc);
nlohmann::json reduction_to_json(const ReductionCertificate& rc);

/// Top-level certificate {config, solutions, bounds, reduction, meta};
/// absent sections are null.
nlohmann::json make_certificate(const RunConfig& config, const RepresentationSet* solutions,
                                const BoundChain* bounds, const ReductionCertificate* reduction);

RepresentationSet representation_set_from_json(const nlohmann::json& j);

/// Structural check of a persisted certificate; returns an explanation on
/// failure.
bool validate_certificate(const nlohmann::json& j, std::string& error);

std::string certificate_to_markdown(const nlohmann::json& j);

void write_text_file(const std::string& path, const std::string& text);
nlohmann::json read_json_file(const std::string& path);

}  // namespace padrep

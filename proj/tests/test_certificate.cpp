#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padrep/certificate.hpp"

using namespace padrep;
using nlohmann::json;

TEST_CASE("config validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.precision_digits = 10;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = RunConfig{};
    cfg.format = "xml";
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("interval serialization keeps the value and radius") {
    Ival x = Ival::from_str("3.14159265358979", 200);
    json j = ival_to_json(x);
    CHECK(j.contains("digits"));
    CHECK(j.contains("exponent"));
    CHECK(j.contains("radius"));
    CHECK(j["exponent"].get<long>() == 1);
    CHECK(j["digits"].get<std::string>().substr(0, 6) == "314159");
}

TEST_CASE("solution set round-trips through JSON") {
    RepresentationSet rs = enumerate_solutions(60, 6, 1);
    REQUIRE(rs.solution_count() > 0);
    json j = solutions_to_json(rs);
    RepresentationSet back = representation_set_from_json(j);
    CHECK(back == rs);
    CHECK(back.n_max == rs.n_max);
    CHECK(back.ell_max == rs.ell_max);
}

TEST_CASE("serialization is deterministic") {
    RepresentationSet rs = enumerate_solutions(60, 6, 1);
    CHECK(solutions_to_json(rs).dump() == solutions_to_json(rs).dump());
}

TEST_CASE("certificate assembly and structural validation") {
    RunConfig cfg;
    RepresentationSet rs = enumerate_solutions(40, 4, 1);
    json cert = make_certificate(cfg, &rs, nullptr, nullptr);
    for (const char* key : {"config", "solutions", "bounds", "reduction", "meta"})
        CHECK(cert.contains(key));
    CHECK(cert["bounds"].is_null());

    std::string err;
    CHECK(validate_certificate(cert, err));

    json broken = cert;
    broken.erase("meta");
    CHECK_FALSE(validate_certificate(broken, err));
    CHECK(err.find("meta") != std::string::npos);

    broken = cert;
    broken["solutions"]["representations"][0]["N"] = "12x4";
    CHECK_FALSE(validate_certificate(broken, err));

    broken = cert;
    broken["config"] = "not an object";
    CHECK_FALSE(validate_certificate(broken, err));
}

TEST_CASE("markdown rendering mentions the searched values") {
    RunConfig cfg;
    RepresentationSet rs = enumerate_solutions(60, 6, 1);
    json cert = make_certificate(cfg, &rs, nullptr, nullptr);
    std::string md = certificate_to_markdown(cert);
    CHECK(md.find("## Search") != std::string::npos);
    CHECK(md.find("| 11 |") != std::string::npos);
}

TEST_CASE("file round-trip") {
    RunConfig cfg;
    RepresentationSet rs = enumerate_solutions(40, 4, 1);
    json cert = make_certificate(cfg, &rs, nullptr, nullptr);
    const std::string path = "cert_roundtrip_test.json";
    write_text_file(path, cert.dump(2));
    json back = read_json_file(path);
    CHECK(back["solutions"] == cert["solutions"]);
    std::remove(path.c_str());
}

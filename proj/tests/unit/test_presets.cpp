#include <doctest.h>

#include <fstream>

#include "liegeo/metric.hpp"
#include "liegeo/presets.hpp"

using namespace liegeo;

namespace {

bool realization_equal(const std::optional<MatrixRealization>& a,
                       const std::optional<MatrixRealization>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    if (a->basis.size() != b->basis.size()) return false;
    for (size_t i = 0; i < a->basis.size(); ++i)
        if (!(a->basis[i] == b->basis[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("every shipped preset is structurally valid") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        const auto& p = preset(name);
        CHECK(p.sc.antisymmetric());
        CHECK(jacobi_check(p.sc).ok);
        CHECK(p.gram == p.gram.transpose());
        CHECK(!det_exact(p.gram).is_zero());
        REQUIRE(p.realization);
        CHECK(realization_deviation(p.sc, *p.realization).is_zero());
    }
    CHECK(preset_names().size() == 7);
    CHECK_THROWS_AS(preset("nonexistent"), std::invalid_argument);
}

TEST_CASE("checked-in data files reproduce the registry exactly") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        LieAlgebraPreset loaded =
            load_algebra_file(std::string(LIEGEO_DATA_DIR) + "/presets/" + name + ".json");
        const auto& p = preset(name);
        CHECK(loaded.name == p.name);
        CHECK(loaded.labels == p.labels);
        CHECK(loaded.sc == p.sc);
        CHECK(loaded.gram == p.gram);
        CHECK(realization_equal(loaded.realization, p.realization));
    }
}

TEST_CASE("algebra json roundtrip") {
    for (const auto& name : preset_names()) {
        const auto& p = preset(name);
        LieAlgebraPreset back = algebra_from_json(algebra_to_json(p), p.name);
        CHECK(back.sc == p.sc);
        CHECK(back.gram == p.gram);
        CHECK(realization_equal(back.realization, p.realization));
    }
}

TEST_CASE("malformed algebra files are rejected") {
    auto base = algebra_to_json(preset("rxsol2"));

    nlohmann::json bad = base;
    bad["c"].push_back({2, 1, 0, {1, 1, 0, 1}});  // conflicts with the stored c[1][2][0]
    CHECK_THROWS_AS(algebra_from_json(bad, "x"), std::invalid_argument);

    bad = base;
    bad["labels"] = {"X", "Y"};
    CHECK_THROWS_AS(algebra_from_json(bad, "x"), std::invalid_argument);

    bad = base;
    bad["gram"][0][1] = {1, 1, 0, 1};  // asymmetric gram
    CHECK_THROWS_AS(algebra_from_json(bad, "x"), std::invalid_argument);

    bad = base;
    bad["c"][0][3] = {1, 0, 0, 1};  // zero denominator
    CHECK_THROWS_AS(algebra_from_json(bad, "x"), std::domain_error);

    bad = base;
    bad["c"][0][0] = 9;  // index out of range
    CHECK_THROWS_AS(algebra_from_json(bad, "x"), std::invalid_argument);

    CHECK_THROWS_AS(load_algebra_file("/nonexistent/path.json"), std::invalid_argument);
}

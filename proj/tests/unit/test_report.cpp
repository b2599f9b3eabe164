#include <doctest.h>

#include <sstream>

#include "liegeo/report.hpp"

using namespace liegeo;

TEST_CASE("report record shape") {
    ReportRecord rec;
    rec.command = "demo";
    rec.add_input("preset", "rxsol2");
    rec.add_exact("k", QSqrt2(Rational(-1, 2)));
    rec.add_num("residual_value", 0.25);
    rec.check_residual("alpha", 1e-14, 1e-12);
    rec.seed = 7;

    auto j = rec.to_json();
    CHECK(j["command"] == "demo");
    CHECK(j["inputs"]["preset"] == "rxsol2");
    CHECK(j["results"][0]["label"] == "k");
    CHECK(j["results"][0]["exact"] == nlohmann::json::array({-1, 2, 0, 1}));
    CHECK(j["results"][0]["float"] == "-0.5");
    CHECK(j["results"][1]["float"] == "0.25");
    CHECK(j["residuals"]["alpha"] == "1e-14");
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 7);

    rec.check_residual("beta", 2e-12, 1e-12);  // above tolerance flips pass
    CHECK(!rec.pass);

    // identical records print identically
    std::ostringstream a, b;
    rec.print(a);
    rec.print(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().back() == '\n');
}

TEST_CASE("twelve significant digit rendering") {
    CHECK(format_sig12(-2.0) == "-2");
    CHECK(format_sig12(0.5) == "0.5");
    CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
    CHECK(format_sig12(1.4142135623730951) == "1.41421356237");
    CHECK(format_sig12(1e-14) == "1e-14");
}

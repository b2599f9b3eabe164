#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liegeo/qsqrt2.hpp"

namespace liegeo {

// One machine-readable check record, emitted as a single JSON line. Output is
// byte-identical across reruns for the same inputs and seed.
struct ReportRecord {
    struct Value {
        std::string label;
        std::optional<QSqrt2> exact;
        std::optional<double> num;
    };

    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Value> results;
    std::vector<std::pair<std::string, double>> residuals;
    bool pass = true;
    std::optional<uint64_t> seed;

    void add_exact(std::string label, QSqrt2 v) {
        results.push_back({std::move(label), std::move(v), std::nullopt});
    }
    void add_num(std::string label, double v) {
        results.push_back({std::move(label), std::nullopt, v});
    }
    void add_input(std::string key, std::string value) {
        inputs.emplace_back(std::move(key), std::move(value));
    }
    // records the residual and folds "below tolerance" into pass
    void check_residual(std::string label, double value, double tol) {
        residuals.emplace_back(std::move(label), value);
        if (!(value <= tol)) pass = false;
    }

    nlohmann::ordered_json to_json() const;
    void print(std::ostream& os) const;
};

// 12-significant-digit rendering used for the float form of exact scalars.
std::string format_sig12(double v);

}  // namespace liegeo

#include "liegeo/report.hpp"

#include <cstdio>

#include "liegeo/presets.hpp"

namespace liegeo {

std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

nlohmann::ordered_json ReportRecord::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    nlohmann::ordered_json res = nlohmann::ordered_json::array();
    for (const auto& v : results) {
        nlohmann::ordered_json item;
        item["label"] = v.label;
        if (v.exact) {
            item["exact"] = qsqrt2_to_json(*v.exact);
            item["float"] = format_sig12(v.exact->to_double());
        }
        if (v.num) item["float"] = format_sig12(*v.num);
        res.push_back(item);
    }
    j["results"] = res;
    nlohmann::ordered_json rj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : residuals) rj[k] = format_sig12(v);
    j["residuals"] = rj;
    j["pass"] = pass;
    if (seed) j["seed"] = *seed;
    return j;
}

void ReportRecord::print(std::ostream& os) const { os << to_json().dump() << "\n"; }

}  // namespace liegeo

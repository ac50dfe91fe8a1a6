#include "cmdbell/bell.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace cmdbell {

BellReport make_bell_report(const HVModel& m) {
    BellReport report;
    const auto family = chsh_family();
    double max_s = -1e300;
    for (int k = 0; k < 8; ++k) {
        const double s = bell_value(m, family[k]);
        report.members[k] = BellReport::Member{family[k], s, gamma(m.xi, family[k])};
        max_s = std::max(max_s, s);
    }
    report.max_bell_value = max_s;
    report.gamma_max = gamma_max(m.xi);
    const HallMeasure<double> hall = hall_measure(m.xi);
    report.hall_measure = hall.measure;
    report.hall_bound = hall.bound;
    return report;
}

std::string bell_report_to_json(const BellReport& report, int indent) {
    nlohmann::json j;
    j["chsh"] = nlohmann::json::array();
    for (const BellReport::Member& member : report.members) {
        j["chsh"].push_back({
            {"weights",
             {member.weights.w11, member.weights.w12, member.weights.w21, member.weights.w22}},
            {"bound", member.weights.bound},
            {"bell_value", member.bell_value},
            {"gamma", member.gamma},
        });
    }
    j["max_bell_value"] = report.max_bell_value;
    j["gamma_max"] = report.gamma_max;
    j["hall_measure"] = report.hall_measure;
    j["hall_bound"] = report.hall_bound;
    return j.dump(indent);
}

} // namespace cmdbell

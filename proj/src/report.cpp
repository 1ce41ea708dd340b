#include "digitcurve/report.hpp"

#include <cmath>

namespace digitcurve {

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::verdict(const std::string& name, bool pass, nlohmann::json metrics) {
    verdicts_.push_back({{"name", name}, {"pass", pass}, {"metrics", std::move(metrics)}});
}

void Report::failure(const std::string& verdict, nlohmann::json detail) {
    failures_.push_back({{"verdict", verdict}, {"detail", std::move(detail)}});
}

bool Report::ok() const {
    for (const auto& v : verdicts_)
        if (!v["pass"].get<bool>()) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j = {
        {"command", command_}, {"parameters", parameters_}, {"verdicts", verdicts_},
        {"failures", failures_}, {"ok", ok()},
    };
    if (timing_) j["wall_time_ms"] = std::round(wall_time_ms_ * 1000.0) / 1000.0;
    return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace digitcurve

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digitcurve/report.hpp"

namespace digitcurve {

/// Knobs shared by the verification suites. Negative / zero means "suite default".
struct SuiteParams {
    int n = -1;
    int m = 2;
    std::int64_t K = std::int64_t{1} << 20;
    int pattern_len = 2;
    std::size_t samples = 1000;
    int m_max = 8;
    std::uint64_t seed = 1;
    std::size_t horizon = std::size_t{1} << 16;
    std::size_t lookahead = (std::size_t{1} << 20) - (std::size_t{1} << 16);
    unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();  // without "all"

/// Runs one suite ("all" runs every suite) and appends its verdicts to `report`.
/// Throws std::invalid_argument for an unknown name or bad parameters.
void run_suite(const std::string& name, const SuiteParams& p, Report& report);

}  // namespace digitcurve

#pragma once

#include <cstdint>

#include "liegeo/io.hpp"

namespace liegeo::cli {

enum class SuiteLevel { quick, full };

/// Runs the thirteen acceptance checks in order, one report item each.
/// `quick` shrinks sample counts; `full` uses the contractual sizes and
/// also enforces the time limits. exit_code is 0 iff every item passed.
Report run_acceptance(SuiteLevel level, std::uint64_t seed);

}  // namespace liegeo::cli

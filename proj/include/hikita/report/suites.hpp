#pragma once

#include <string>
#include <vector>

#include "hikita/report/report.hpp"

namespace hikita::report {

/// main-theorem, symmetric-center, calogero, wreath, hecke, appendix, coulomb-rank1, dimensions.
const std::vector<std::string>& suite_names();

/// Runs one verification suite. Throws DomainError for an unknown suite or parameters it cannot accept.
Report run_suite(const std::string& suite, const Params& params);

}  // namespace hikita::report

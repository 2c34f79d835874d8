#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rstirling {

/// "1 + 4*q + 8*q^2 + ..." with zero coefficients skipped; "0" when empty.
std::string format_qseries(std::span<const std::int64_t> coefficients);

/// "2,1,0,2"
std::string format_code(std::span<const int> code);

std::vector<int> parse_code(const std::string& text);

}  // namespace rstirling

#include "rstirling/text.hpp"

#include <stdexcept>

namespace rstirling {

std::string format_qseries(std::span<const std::int64_t> coefficients) {
  std::string out;
  for (size_t d = 0; d < coefficients.size(); ++d) {
    const std::int64_t c = coefficients[d];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += '-';
    const std::int64_t a = c < 0 ? -c : c;
    if (d == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) {
        out += std::to_string(a);
        out += '*';
      }
      out += 'q';
      if (d > 1) {
        out += '^';
        out += std::to_string(d);
      }
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_code(std::span<const int> code) {
  std::string out;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(code[i]);
  }
  return out;
}

std::vector<int> parse_code(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    out.push_back(std::stoi(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

}  // namespace rstirling

#include "hstar/report.hpp"

namespace hstar {

std::vector<std::string> render_each(const std::vector<Integer>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string render(const std::vector<Integer>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += to_string(values[i]);
  }
  return out + ")";
}

}  // namespace hstar

#include "pdm/config.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void apply_config(std::istream& in, ParamValues& values) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;

    const auto eq = view.find('=');
    const auto where = "config line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ValidationError(where + ": expected key = value");

    const auto key = trim(view.substr(0, eq));
    const auto text = trim(view.substr(eq + 1));
    const auto param = parse_param(key);
    if (!param || key == "alpha") throw ValidationError(where + ": unknown key '" + std::string(key) + "'");

    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ValidationError(where + ": cannot parse '" + std::string(text) + "' as a number");
    }
    values.set(*param, value);
  }
}

void apply_config_file(const std::filesystem::path& path, ParamValues& values) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  apply_config(in, values);
}

}  // namespace pdm

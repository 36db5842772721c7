#include "ecoalg/fixtures.hpp"

#include "ecoalg/errors.hpp"

namespace ecoalg {

namespace {
const std::pair<std::string, std::string>* lookup(const std::string& name) {
  for (const auto& entry : detail::embedded_fixtures()) {
    const std::string& full = entry.first;
    if (full == name) return &entry;
    const auto dot = full.rfind('.');
    if (dot != std::string::npos && full.substr(0, dot) == name) return &entry;
  }
  return nullptr;
}
}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::embedded_fixtures()) out.push_back(entry.first);
  return out;
}

const std::string& fixture_text(const std::string& name) {
  if (const auto* entry = lookup(name)) return entry->second;
  throw InvalidArgument("no bundled fixture named '" + name + "'");
}

bool has_fixture(const std::string& name) { return lookup(name) != nullptr; }

}  // namespace ecoalg

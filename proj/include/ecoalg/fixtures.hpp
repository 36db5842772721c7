#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ecoalg {

/// Names of the bundled fixtures, with extension (e.g. "torus.sset").
std::vector<std::string> fixture_names();

/// Text of a bundled fixture; accepts the name with or without extension.
const std::string& fixture_text(const std::string& name);

bool has_fixture(const std::string& name);

namespace detail {
const std::vector<std::pair<std::string, std::string>>& embedded_fixtures();
}

}  // namespace ecoalg

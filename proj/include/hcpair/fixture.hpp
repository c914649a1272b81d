#pragma once

#include <optional>

#include "hcpair/pair.hpp"

namespace hcpair {

/// A loaded fixture bundle: the pair, the Grassmann size for suites, and an
/// optional declared Lie block cross-checked against the assembled one.
struct FixtureDocument {
  std::string name;
  Field field;
  std::uint32_t grassmann_n = 6;
  HCPair pair;
  std::optional<LieSuperAlgebra> declared_lie;
};

FixtureDocument load_fixture(const std::string& path);
FixtureDocument parse_fixture_text(const std::string& json_text);

/// Names of the fixtures bundled with the repository.
std::vector<std::string> bundled_fixture_names();

/// Loads a bundled fixture from the given directory.
FixtureDocument load_bundled_fixture(const std::string& dir,
                                     const std::string& name);

}  // namespace hcpair

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gga/format.hpp"

namespace testutil {

inline gga::PermAction mkAction(const std::string& owner,
                                const std::vector<std::string>& tokens,
                                const std::vector<std::string>& gens) {
  auto pts = gga::PointSet::make(owner, tokens);
  std::vector<gga::Permutation> perms;
  for (const auto& g : gens) perms.push_back(gga::Permutation::fromCycles(pts, g));
  return gga::PermAction::make(pts, perms);
}

inline std::string readFile(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data file " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline gga::Gga loadGga(const std::string& name) { return gga::parseAny(readFile(name)); }

}  // namespace testutil

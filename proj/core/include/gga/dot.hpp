#pragma once

#include "gga/scaffold.hpp"

namespace gga {

/// DOT renderings; arc pairs collapse to one undirected edge, self-reverse
/// arcs to a single loop edge.
std::string dotBase(const Gga& g);
std::string dotAugmented(const Gga& g, const AugmentedDigraph& aug);
std::string dotTree(const Gga& g, const AugmentedDigraph& aug, const CoveringTree& t);
std::string dotScaffold(const Scaffolding& s, const Gga& g);
std::string dotTPlus(const AugmentedTree& tp);

}  // namespace gga

#pragma once

#include <string>

#include "folx/relation.hpp"
#include "folx/universe.hpp"

namespace folx {

// Deterministic textual forms. Elements print as their display names,
// tuples as "(x=6, y=3)" (positional: "(6, 3)"), relations as sorted tuple
// lists; the two zero-ary relations print as "true" and "false".
std::string render(Element e, const Universe& universe);
std::string render(const Tuple& t, const Universe& universe);
std::string render(const Relation& r, const Universe& universe);

} // namespace folx

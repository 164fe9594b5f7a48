#pragma once

#include <istream>
#include <string>

#include "adlab/groundset.hpp"

namespace adlab {

// Text format: optional header "@ambient z d=<rank>" or "@ambient mod <N>"
// (default z d=1), then one element per line, lattice coordinates separated
// by commas. '#' starts a comment.
GroundSet parse_set(std::istream& in);
GroundSet parse_set_text(const std::string& text);
GroundSet read_set_file(const std::string& path);
std::string format_set(const GroundSet& a);

// "1,2,5" or "1 2 5" on one line, scalars only
GroundSet parse_inline(const std::string& s, const Ambient& amb = Ambient::Z());

}  // namespace adlab

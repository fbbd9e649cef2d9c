#pragma once

// The ".nsd" text format:
//
//   # comment
//   crossings: <n>
//   edge: (<v>,<a>) (<w>,<b>) <+1|-1>      one per edge
//   over: <v> <0|1>                        one per crossing
//   surface: <orientable|nonorientable> chi=<int>   optional
//   tau: <c> <d>                           optional, cover documents only
//
// Lines may appear in any order. Duplicate declarations are errors.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nsd/cover.hpp"
#include "nsd/scheme.hpp"

namespace nsd {

struct NsdDocument {
  RawScheme raw;
  std::vector<std::pair<int, int>> tau;
};

NsdDocument parse_nsd(std::istream& in, const std::string& file_name = "<input>");
NsdDocument parse_nsd_string(const std::string& text, const std::string& file_name = "<input>");
SignedScheme load_scheme(const std::string& path);

std::string to_nsd(const SignedScheme& scheme);
/// Lifted diagram in the same grammar, all signs +1, with a tau section and
/// trailing comments listing cover edge and face ids.
std::string to_nsd(const CoverDiagram& cover);

}  // namespace nsd

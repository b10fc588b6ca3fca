#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "treealg/selfsim/recursion.hpp"

namespace treealg::selfsim {

// grigorchuk, gupta_sidki, fabrykowski_gupta_bg, bsv, basilica, odometer,
// lamplighter. Dashes and underscores are interchangeable in lookups.
std::vector<std::string> builtin_names();
WreathRecursion          builtin_group(std::string_view name);  // throws not-found

// Text format, one generator per line after the header:
//
//   alphabet 2
//   a inv (1,2) 1 1
//   b inv () a c
//
// Fields: name, "inv" or "-", root permutation in cycle notation, then q
// section words. '#' starts a comment.
WreathRecursion read_group_file(std::istream& in);
WreathRecursion load_group_file(std::string const& path);
void            write_group_file(std::ostream& out, WreathRecursion const& rec);

// Zoo name or path to a group file.
WreathRecursion resolve_group(std::string const& name_or_path);

}  // namespace treealg::selfsim

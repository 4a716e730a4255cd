#pragma once

#include <iosfwd>
#include <string>

#include "hgroup/table.hpp"

namespace hgroup {

/// Text format:
///
///   hypergroup v1
///   name <token>
///   size <N>
///   identity <index>
///   involution <N indices>
///   labels <N tokens>          (optional)
///   haar <N values>            (optional)
///   truncated <R>              (optional)
///   generator <index>          (optional)
///   natural                    (optional, N-indexed family)
///   structure
///   <x> <y> <z> <value>        (value is p/q, an integer, or a decimal)
///   end
///
/// Blank lines and lines starting with '#' are ignored. A table is exact when
/// every value (and every haar weight) is written as an integer or p/q.
HypergroupTable read_hypergroup(std::istream& in);
HypergroupTable load_hypergroup(const std::string& path);
void write_hypergroup(std::ostream& out, const HypergroupTable& h);
void save_hypergroup(const std::string& path, const HypergroupTable& h);
std::string hypergroup_to_string(const HypergroupTable& h);

}  // namespace hgroup

#pragma once

#include <iosfwd>
#include <string>

#include "binpack/core.hpp"

namespace binpack {

// BPX v1 instance text format:
//   bpx 1 <u>
//   <size-decimal> <count>       one line per type
// Blank lines and '#' comments are ignored; comments of the form
// "# key: value" are read back as instance metadata. A file without the
// header is accepted as a flat list (one size per line, auto-aggregated).

Instance read_bpx(std::istream& in, const std::string& origin = "<stream>");
Instance read_bpx_file(const std::string& path);

void write_bpx(const Instance& inst, std::ostream& out);
void write_bpx_file(const Instance& inst, const std::string& path);

}  // namespace binpack

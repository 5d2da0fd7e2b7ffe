#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitcensus::cli {

/// Runs the `orbit-census` front end. Returns the process exit status:
/// 0 ok, 1 usage, 2 capacity, 3 validation failure, 4 numerical.
auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int;

}  // namespace orbitcensus::cli

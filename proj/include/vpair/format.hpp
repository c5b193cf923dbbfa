#ifndef VPAIR_FORMAT_HPP
#define VPAIR_FORMAT_HPP

#include <string>

namespace vpair {

// 12-significant-digit float formatting, locale independent.  Every CSV
// data cell goes through this so identical configs produce byte-identical
// output.
std::string format_double(double v);

// Shortest representation that parses back to the identical double; used
// for config values echoed into metadata so a round trip re-runs exactly.
std::string format_double_exact(double v);

}  // namespace vpair

#endif

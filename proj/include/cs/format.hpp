#pragma once

#include <string>

namespace cs {

// %.17g, C locale: the fixed wire format for CSV cells and CLI scalars.
std::string format_sig17(double v);

// Shortest decimal form that round-trips the double exactly.
std::string format_exact(double v);

}  // namespace cs

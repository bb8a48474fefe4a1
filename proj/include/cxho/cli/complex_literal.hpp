#pragma once

#include <string>
#include <string_view>

#include "cxho/params.hpp"

namespace cxho::cli {

/// Parses `<re>`, `<re>+<im>i` or `<re>-<im>i`; both parts are decimal reals
/// with optional exponent. Throws std::invalid_argument on anything else.
cplx parse_complex(std::string_view text);

/// Parses a full-string real number; throws std::invalid_argument.
double parse_real(std::string_view text);

/// Parses a full-string integer; throws std::invalid_argument.
long long parse_int(std::string_view text);

/// 17 significant digits, "%.17g".
std::string format_real(double x);

/// Inverse of parse_complex for finite values.
std::string format_complex(cplx z);

}  // namespace cxho::cli

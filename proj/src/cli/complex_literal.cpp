#include "cxho/cli/complex_literal.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <stdexcept>

namespace cxho::cli {

namespace {

const std::string kReal = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";

}  // namespace

cplx parse_complex(std::string_view text) {
  static const std::regex re("^\\s*([+-]?" + kReal + ")(?:([+-])(" + kReal + ")i)?\\s*$");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re))
    throw std::invalid_argument("bad complex literal '" + s + "' (expected <re>[+/-]<im>i)");
  const double r = std::stod(m[1].str());
  double i = 0.0;
  if (m[2].matched) {
    i = std::stod(m[3].str());
    if (m[2].str() == "-") i = -i;
  }
  return {r, i};
}

double parse_real(std::string_view text) {
  static const std::regex re("^\\s*[+-]?" + kReal + "\\s*$");
  const std::string s(text);
  if (!std::regex_match(s, re)) throw std::invalid_argument("bad real number '" + s + "'");
  return std::stod(s);
}

long long parse_int(std::string_view text) {
  static const std::regex re("^\\s*[+-]?\\d+\\s*$");
  const std::string s(text);
  if (!std::regex_match(s, re)) throw std::invalid_argument("bad integer '" + s + "'");
  try {
    return std::stoll(s);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("integer out of range '" + s + "'");
  }
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx z) {
  std::string im = format_real(std::abs(z.imag()));
  return format_real(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

}  // namespace cxho::cli

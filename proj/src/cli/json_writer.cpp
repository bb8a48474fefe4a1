#include "cxho/cli/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cxho/cli/complex_literal.hpp"

namespace cxho::cli {

namespace {

void write_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\r': os << "\\r"; break;
      case '\t': os << "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
}

void newline(std::ostream& os, int indent, int depth) {
  if (indent <= 0) return;
  os << '\n' << std::string(static_cast<std::size_t>(indent * depth), ' ');
}

}  // namespace

Json Json::complex(cplx z) {
  Json o = object();
  o.set("re", z.real());
  o.set("im", z.imag());
  return o;
}

Json& Json::set(std::string key, Json value) {
  auto* o = std::get_if<Object>(&v_);
  if (!o) throw std::logic_error("Json::set on non-object");
  o->emplace_back(std::move(key), std::move(value));
  return *this;
}

Json& Json::push(Json value) {
  auto* a = std::get_if<Array>(&v_);
  if (!a) throw std::logic_error("Json::push on non-array");
  a->push_back(std::move(value));
  return *this;
}

void Json::write_impl(std::ostream& os, int indent, int depth) const {
  const char* sep = indent > 0 ? ": " : ":";
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          os << "null";
        } else if constexpr (std::is_same_v<T, bool>) {
          os << (x ? "true" : "false");
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          os << x;
        } else if constexpr (std::is_same_v<T, double>) {
          if (std::isfinite(x))
            os << format_real(x);
          else
            os << "null";
        } else if constexpr (std::is_same_v<T, std::string>) {
          write_string(os, x);
        } else if constexpr (std::is_same_v<T, Array>) {
          if (x.empty()) {
            os << "[]";
            return;
          }
          os << '[';
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) os << ',';
            newline(os, indent, depth + 1);
            x[i].write_impl(os, indent, depth + 1);
          }
          newline(os, indent, depth);
          os << ']';
        } else {
          if (x.empty()) {
            os << "{}";
            return;
          }
          os << '{';
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) os << ',';
            newline(os, indent, depth + 1);
            write_string(os, x[i].first);
            os << sep;
            x[i].second.write_impl(os, indent, depth + 1);
          }
          newline(os, indent, depth);
          os << '}';
        }
      },
      v_);
}

void Json::write(std::ostream& os, int indent) const {
  write_impl(os, indent, 0);
  os << '\n';
}

std::string Json::dump(int indent) const {
  std::ostringstream ss;
  write(ss, indent);
  return ss.str();
}

}  // namespace cxho::cli

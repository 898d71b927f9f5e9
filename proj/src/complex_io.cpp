#include "tornheim/complex_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "tornheim/errors.hpp"

namespace tornheim {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty()) throw DomainError("malformed complex literal: '" + std::string(whole) + "'");
  if (s == "+") return 1.0;
  if (s == "-") return -1.0;
  std::string_view body = s;
  if (body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || end != body.data() + body.size()) {
    throw DomainError("malformed complex literal: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::string_view s = compact;
  if (s.empty()) throw DomainError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};

  s.remove_suffix(1);
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return {0.0, s.empty() ? 1.0 : parse_real(s, text)};
  }
  return {parse_real(s.substr(0, split), text), parse_real(s.substr(split), text)};
}

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  if (!std::signbit(z.imag())) out += '+';
  return out + format_double(z.imag()) + "i";
}

}  // namespace tornheim

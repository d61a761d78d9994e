#include <charconv>
#include <stdexcept>
#include <string>

#include "hring_cli/cli.hpp"

namespace hring::cli {
namespace {

std::invalid_argument bad(std::string_view what, std::string_view text) {
  return std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
}

double number(std::string_view s, std::string_view what, std::string_view whole) {
  if (s.empty()) throw bad(what, whole);
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw bad(what, whole);
  return v;
}

// Coefficient of i: "", "+" and "-" stand for 1 and -1.
double imag_part(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return number(s, "complex number", whole);
}

}  // namespace

double parse_real(std::string_view text) {
  if (text == "golden") return kGolden;
  if (text.find('/') != std::string_view::npos) {
    const Rational q = parse_rational(text);
    if (q.den == 0) throw bad("real number", text);
    return double(q.num) / double(q.den);
  }
  return number(text, "real number", text);
}

cplx parse_complex(std::string_view text) {
  if (text == "golden") return {kGolden, 0.0};
  if (text.empty()) throw bad("complex number", text);
  if (text.back() != 'i') return {number(text, "complex number", text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, imag_part(body, text)};
  return {number(body.substr(0, split), "complex number", text),
          imag_part(body.substr(split), text)};
}

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) throw bad("rational", text);
  auto integer = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw bad("rational", text);
    return v;
  };
  return {integer(text.substr(0, slash)), integer(text.substr(slash + 1))};
}

Window parse_window(std::string_view text) {
  double v[4];
  std::size_t pos = 0;
  for (int k = 0; k < 4; ++k) {
    const std::size_t comma = k < 3 ? text.find(',', pos) : text.size();
    if (comma == std::string_view::npos) throw bad("window", text);
    v[k] = number(text.substr(pos, comma - pos), "window", text);
    pos = comma + 1;
  }
  Window w{v[0], v[1], v[2], v[3]};
  if (!w.valid()) throw bad("window (need re_min<re_max, im_min<im_max)", text);
  return w;
}

std::pair<int, int> parse_size(std::string_view text) {
  const std::size_t x = text.find('x');
  if (x == std::string_view::npos) throw bad("size", text);
  auto integer = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
      throw bad("size", text);
    return v;
  };
  return {integer(text.substr(0, x)), integer(text.substr(x + 1))};
}

}  // namespace hring::cli

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hring/arithmetic.hpp"
#include "hring/render.hpp"

namespace hring::cli {

// "a+bi", "a-bi", "bi", "a", "i"; the token golden is (sqrt 5 - 1)/2.
cplx parse_complex(std::string_view text);
// Real number or golden.
double parse_real(std::string_view text);
// "p/q" in lowest or any terms.
Rational parse_rational(std::string_view text);
// "re_min,re_max,im_min,im_max"
Window parse_window(std::string_view text);
// "WxH"
std::pair<int, int> parse_size(std::string_view text);

// Runs one invocation; args excludes the program name. Returns the process exit code:
// 0 success, 1 numeric failure or failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hring::cli

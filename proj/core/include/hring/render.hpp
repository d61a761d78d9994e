#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hring/dynamics.hpp"

namespace hring {

struct Window {
  double re_min = -2.0, re_max = 2.0;
  double im_min = -2.0, im_max = 2.0;
  bool valid() const { return re_max > re_min && im_max > im_min; }
};

using Rgb = std::array<std::uint8_t, 3>;

struct Palette {
  Rgb ring{0, 160, 0};
  Rgb ring_preimage{170, 150, 0};
  Rgb attracted{255, 255, 255};
  Rgb escape_rational{255, 255, 255};
  Rgb escape_transcendental{200, 200, 200};
  Rgb undecided{0, 0, 0};
};

struct FateImage {
  int width = 0;
  int height = 0;
  Window window;
  std::vector<Fate> fates;  // row-major, row 0 = largest imaginary part
  bool transcendental = false;
  Palette palette;

  const Fate& at(int x, int y) const { return fates[static_cast<std::size_t>(y) * width + x]; }
  Rgb color(const Fate& f) const;
};

// Pixel center of (x, y).
cplx pixel_center(const Window& w, int width, int height, int x, int y);

FateImage render_dynamical(const Map& map, const Window& window, int width, int height,
                           const Budget& budget, unsigned threads = 0);

struct ParamSlice2D {
  std::function<Map(cplx)> map_at;
  std::function<SpherePoint(const Map&)> designated;
  bool transcendental = false;
};

ParamSlice2D e_lambda_plane();
// b -> CubicRat{a, b, u_for_period2(a, b)}; designated point: larger free critical point.
ParamSlice2D cubic_b_plane(cplx a);

FateImage render_parameter(const ParamSlice2D& slice, const Window& window, int width,
                           int height, const Budget& budget, unsigned threads = 0);

std::string encode_ppm(const FateImage& image);
void write_file(const std::string& path, const std::string& bytes);

struct ClassCounts {
  long ring = 0, preimage = 0, attracted = 0, escape = 0, undecided = 0;
};
ClassCounts count_classes(const FateImage& image);

}  // namespace hring

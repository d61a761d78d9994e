#include "hring/render.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "hring/errors.hpp"
#include "hring/parameters.hpp"

namespace hring {
namespace {

// Row-parallel fill; each row is written by exactly one worker, so output is thread-count free.
template <typename PixelFn>
FateImage render_rows(const Window& window, int width, int height, bool transcendental,
                      unsigned threads, PixelFn&& pixel) {
  if (!window.valid() || width < 1 || height < 1)
    throw Error(Errc::DomainError, "render needs a non-degenerate window and positive size");
  FateImage img;
  img.width = width;
  img.height = height;
  img.window = window;
  img.transcendental = transcendental;
  img.fates.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));

  unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  t = std::min<unsigned>(t, static_cast<unsigned>(height));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int y = next++; y < height; y = next++)
      for (int x = 0; x < width; ++x)
        img.fates[static_cast<std::size_t>(y) * width + x] =
            pixel(pixel_center(window, width, height, x, y));
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
    worker();
  }
  return img;
}

SpherePoint larger_free_critical(const Map& map) {
  SpherePoint best = SpherePoint::infinity();
  double best_mod = -1.0;
  for (const CriticalPoint& c : map.critical_points()) {
    if (c.point.is_infinity()) continue;
    const double m = std::abs(c.point.value());
    if (m > best_mod) {
      best_mod = m;
      best = c.point;
    }
  }
  return best;
}

}  // namespace

Rgb FateImage::color(const Fate& f) const {
  switch (f.cls) {
    case FateClass::RotationDomain:
      return f.entry_steps == 0 ? palette.ring : palette.ring_preimage;
    case FateClass::AttractedToCycle:
      return palette.attracted;
    case FateClass::EscapeToInfinity:
      return transcendental ? palette.escape_transcendental : palette.escape_rational;
    case FateClass::Undecided:
      return palette.undecided;
  }
  return palette.undecided;
}

cplx pixel_center(const Window& w, int width, int height, int x, int y) {
  const double re = w.re_min + (x + 0.5) * (w.re_max - w.re_min) / width;
  const double im = w.im_max - (y + 0.5) * (w.im_max - w.im_min) / height;
  return {re, im};
}

FateImage render_dynamical(const Map& map, const Window& window, int width, int height,
                           const Budget& budget, unsigned threads) {
  return render_rows(window, width, height, map.transcendental(), threads,
                     [&](cplx z) { return classify_point(map, z, budget); });
}

ParamSlice2D e_lambda_plane() {
  ParamSlice2D s;
  s.map_at = [](cplx lambda) { return Map{EntireZ2Exp{lambda}}; };
  s.designated = [](const Map&) { return SpherePoint(cplx{-2.0, 0.0}); };
  s.transcendental = true;
  return s;
}

ParamSlice2D cubic_b_plane(cplx a) {
  ParamSlice2D s;
  s.map_at = [a](cplx b) { return Map{CubicRat{a, b, u_for_period2(a, b)}}; };
  s.designated = larger_free_critical;
  return s;
}

FateImage render_parameter(const ParamSlice2D& slice, const Window& window, int width,
                           int height, const Budget& budget, unsigned threads) {
  return render_rows(window, width, height, slice.transcendental, threads, [&](cplx c) {
    try {
      const Map map = slice.map_at(c);
      return classify_point(map, slice.designated(map), budget);
    } catch (const Error&) {
      return Fate{};  // degenerate parameter: left undecided
    }
  });
}

std::string encode_ppm(const FateImage& image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n255\n";
  out.reserve(out.size() + image.fates.size() * 3);
  for (const Fate& f : image.fates) {
    const Rgb c = image.color(f);
    out.append(reinterpret_cast<const char*>(c.data()), c.size());
  }
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw std::runtime_error("failed writing " + path);
}

ClassCounts count_classes(const FateImage& image) {
  ClassCounts c;
  for (const Fate& f : image.fates) {
    switch (f.cls) {
      case FateClass::RotationDomain: ++(f.entry_steps == 0 ? c.ring : c.preimage); break;
      case FateClass::AttractedToCycle: ++c.attracted; break;
      case FateClass::EscapeToInfinity: ++c.escape; break;
      case FateClass::Undecided: ++c.undecided; break;
    }
  }
  return c;
}

}  // namespace hring

#include <doctest.h>

#include <cmath>

#include "properties.hpp"

using namespace hring;
using namespace hring::testing;

TEST_CASE("PPM encoding") {
  FateImage one;
  one.width = one.height = 1;
  Fate ring;
  ring.cls = FateClass::RotationDomain;
  one.fates = {ring};
  const std::string bytes = encode_ppm(one);
  const Rgb g = one.palette.ring;
  CHECK(bytes == std::string("P6\n1 1\n255\n") + std::string{char(g[0]), char(g[1]), char(g[2])});

  FateImage two;
  two.width = two.height = 2;
  two.fates.resize(4);
  const std::string header = "P6\n2 2\n255\n";
  CHECK(encode_ppm(two).size() == header.size() + 12);
}

TEST_CASE("pixel centers") {
  const Window w{-1.0, 1.0, -1.0, 1.0};
  CHECK(pixel_center(w, 2, 2, 0, 0) == cplx{-0.5, 0.5});
  CHECK(pixel_center(w, 2, 2, 1, 1) == cplx{0.5, -0.5});
}

TEST_CASE("rigid rotation renders a single rotation domain") {
  const FateImage img = render_dynamical(Map{RigidRotation{kGolden}}, {-2.0, 2.0, -2.0, 2.0}, 16, 16, Budget{});
  const ClassCounts c = count_classes(img);
  CHECK(c.ring + c.preimage == 256);
}

TEST_CASE("renders are identical across thread counts and runs") {
  Budget b;
  b.ring_period = 2;
  const Window w{-2.9, 1.1, -1.2, 1.2};
  const std::string one = encode_ppm(render_dynamical(fig4_map(), w, 60, 36, b, 1));
  const std::string three = encode_ppm(render_dynamical(fig4_map(), w, 60, 36, b, 3));
  const std::string again = encode_ppm(render_dynamical(fig4_map(), w, 60, 36, b, 3));
  CHECK(one == three);
  CHECK(three == again);
}

TEST_CASE("meromorphic ring plane has ring and attracted pixels") {
  Budget b;
  b.ring_period = 2;
  const ClassCounts c = count_classes(render_dynamical(fig4_map(), {-2.9, 1.1, -1.2, 1.2}, 100, 60, b));
  CHECK(c.ring > 0);
  CHECK(c.attracted > 0);
}

TEST_CASE("cubic ring meets the seed ray") {
  Budget b;
  b.ring_period = 2;
  const Map f = fig1_map();
  const SpherePoint s = find_ring_seed(f, RayScan{{0.0, 0.0}, {0.0, 1.0}, 1e-3, 1.0, 400}, b);
  // a one-column strip along the ray through the seed
  const double y = s.value().imag();
  const FateImage img = render_dynamical(f, {-1e-3, 1e-3, y - 0.05, y + 0.05}, 1, 11, b);
  CHECK(count_classes(img).ring > 0);
}

TEST_CASE("parameter planes") {
  SUBCASE("lambda plane blob at the Siegel parameter") {
    Budget b;
    const cplx lam = siegel_lambda_fixed(kGolden).lambda;
    const Window w{lam.real() - 0.3, lam.real() + 0.3, lam.imag() - 0.3, lam.imag() + 0.3};
    const FateImage img = render_parameter(e_lambda_plane(), w, 9, 9, b);
    const Fate& center = img.at(4, 4);
    CHECK(center.cls != FateClass::EscapeToInfinity);
  }
  SUBCASE("cubic b-plane near the printed b is mixed") {
    Budget b;
    b.ring_period = 2;
    const Window w{kFig1B.real() - 1.0, kFig1B.real() + 1.0, kFig1B.imag() - 1.0, kFig1B.imag() + 1.0};
    const ClassCounts c = count_classes(render_parameter(cubic_b_plane(kFig1A), w, 20, 20, b));
    int kinds = (c.ring + c.preimage > 0) + (c.attracted > 0) + (c.escape > 0) + (c.undecided > 0);
    CHECK(kinds >= 2);
  }
  SUBCASE("constant slice gives a constant image") {
    ParamSlice2D s;
    s.map_at = [](cplx) { return Map{Quadratic{{-0.1, 0.0}}}; };
    s.designated = [](const Map&) { return SpherePoint(cplx{0.0, 0.0}); };
    const FateImage img = render_parameter(s, {-1.0, 1.0, -1.0, 1.0}, 8, 8, Budget{});
    for (const Fate& f : img.fates) CHECK(f.cls == img.fates.front().cls);
  }
}

TEST_CASE("render rejects degenerate windows") {
  CHECK_THROWS_AS((render_dynamical(Map{Quadratic{0.0}}, {1.0, 1.0, 0.0, 1.0}, 4, 4, Budget{})), Error);
  CHECK_THROWS_AS((render_dynamical(Map{Quadratic{0.0}}, {0.0, 1.0, 0.0, 1.0}, 0, 4, Budget{})), Error);
}

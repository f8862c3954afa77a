// Renders the bundled synthetic tree-like training image: a trunk rising from
// the bottom-left corner that forks into channels heading up and to the right,
// so every local direction lies in [0, pi/2].
//
//   vecsim_demo_image <out.pgm>

#include <cmath>
#include <cstdio>
#include <exception>
#include <vector>

#include "vecsim/io.hpp"

namespace {

struct Point {
  double x;
  double y;
};

struct Channel {
  Point from;
  Point control;
  Point to;
  double radius_from;
  double radius_to;
};

void stamp_disk(vecsim::BinaryGrid& grid, Point c, double radius) {
  const int r = static_cast<int>(std::ceil(radius));
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      const int x = static_cast<int>(std::lround(c.x)) + dx;
      const int y = static_cast<int>(std::lround(c.y)) + dy;
      const double ex = x - c.x;
      const double ey = y - c.y;
      if (ex * ex + ey * ey <= radius * radius && grid.contains({x, y})) grid(x, y) = 1;
    }
  }
}

void draw(vecsim::BinaryGrid& grid, const Channel& ch) {
  constexpr int kSamples = 600;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = static_cast<double>(i) / kSamples;
    const double u = 1.0 - t;
    const Point p{u * u * ch.from.x + 2 * u * t * ch.control.x + t * t * ch.to.x,
                  u * u * ch.from.y + 2 * u * t * ch.control.y + t * t * ch.to.y};
    stamp_disk(grid, p, ch.radius_from + t * (ch.radius_to - ch.radius_from));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <out.pgm>\n", argv[0]);
    return 1;
  }
  constexpr int kSize = 183;
  vecsim::BinaryGrid grid(kSize, kSize);

  const std::vector<Channel> channels = {
      // trunk
      {{10, -4}, {16, 30}, {42, 52}, 4.6, 4.0},
      // left limb and its twigs
      {{42, 52}, {50, 85}, {62, 118}, 3.6, 3.0},
      {{62, 118}, {66, 150}, {78, 186}, 3.0, 2.2},
      {{62, 118}, {88, 140}, {122, 160}, 2.8, 2.0},
      {{122, 160}, {140, 170}, {150, 186}, 2.0, 1.6},
      // middle limb
      {{52, 85}, {80, 98}, {104, 116}, 2.8, 2.2},
      {{104, 116}, {122, 132}, {132, 150}, 2.2, 1.8},
      // right limb and its twigs
      {{42, 52}, {80, 58}, {112, 74}, 3.6, 3.0},
      {{112, 74}, {132, 96}, {146, 122}, 2.8, 2.2},
      {{146, 122}, {156, 142}, {160, 170}, 2.2, 1.6},
      {{112, 74}, {150, 80}, {186, 86}, 2.8, 2.2},
      {{150, 80}, {166, 96}, {178, 112}, 2.0, 1.6},
  };
  for (const Channel& ch : channels) draw(grid, ch);

  try {
    vecsim::write_pgm(grid, argv[1]);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  std::printf("wrote %dx%d image, %zu sand cells\n", grid.width(), grid.height(), grid.sand_count());
  return 0;
}

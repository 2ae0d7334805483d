#pragma once

#include <array>
#include <cstdlib>
#include <vector>

namespace gridfleet {

/// Marker for neighborhood slots that fall off the map.
inline constexpr int kInvalidGrid = -1;

/// Number of slots in a 3x3 neighborhood (fixed local order: NW, N, NE,
/// W, C, E, SW, S, SE; slot 4 is the center/stay slot).
inline constexpr int kNeighborhood = 9;
inline constexpr int kStaySlot = 4;

using Neighborhood = std::array<int, kNeighborhood>;

/// Rectangular grid world. Grid id g = y * width + x. North is -y.
class GridMap {
 public:
  GridMap(int width, int height, double cell_edge_km = 1.2);

  int width() const { return width_; }
  int height() const { return height_; }
  double cell_edge_km() const { return cell_edge_km_; }
  int cell_count() const { return width_ * height_; }

  int id_of(int x, int y) const { return y * width_ + x; }
  int x_of(int g) const { return g % width_; }
  int y_of(int g) const { return g / width_; }
  bool contains(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }
  bool valid_id(int g) const { return g >= 0 && g < cell_count(); }

  int manhattan(int a, int b) const {
    return std::abs(x_of(a) - x_of(b)) + std::abs(y_of(a) - y_of(b));
  }
  int chebyshev(int a, int b) const {
    return std::max(std::abs(x_of(a) - x_of(b)), std::abs(y_of(a) - y_of(b)));
  }

  /// The 9 neighborhood slots of g in fixed local order; off-map slots are
  /// kInvalidGrid. Slot k corresponds to offset (dx, dy) with
  /// dx = k % 3 - 1, dy = k / 3 - 1.
  Neighborhood neighborhood9(int g) const;

  /// Center cell: (floor(width/2), floor(height/2)).
  int center() const { return id_of(width_ / 2, height_ / 2); }

 private:
  int width_;
  int height_;
  double cell_edge_km_;
};

/// All grid ids sorted ascending by Chebyshev distance from the map center,
/// ties walked clockwise within each ring starting due north.
std::vector<int> radial_grid_order(const GridMap& map);

}  // namespace gridfleet

#include "core/grid_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridfleet {

GridMap::GridMap(int width, int height, double cell_edge_km)
    : width_(width), height_(height), cell_edge_km_(cell_edge_km) {
  if (width < 3 || height < 3)
    throw std::invalid_argument("GridMap: width and height must be >= 3");
  if (cell_edge_km <= 0.0)
    throw std::invalid_argument("GridMap: cell edge must be positive");
}

Neighborhood GridMap::neighborhood9(int g) const {
  if (!valid_id(g)) throw std::out_of_range("neighborhood9: bad grid id");
  Neighborhood out;
  int cx = x_of(g), cy = y_of(g);
  for (int k = 0; k < kNeighborhood; ++k) {
    int x = cx + k % 3 - 1;
    int y = cy + k / 3 - 1;
    out[k] = contains(x, y) ? id_of(x, y) : kInvalidGrid;
  }
  return out;
}

std::vector<int> radial_grid_order(const GridMap& map) {
  std::vector<int> order;
  order.reserve(map.cell_count());
  int cx = map.x_of(map.center());
  int cy = map.y_of(map.center());
  int max_r = std::max({cx, map.width() - 1 - cx, cy, map.height() - 1 - cy});

  auto push = [&](int x, int y) {
    if (map.contains(x, y)) order.push_back(map.id_of(x, y));
  };

  order.push_back(map.center());
  for (int r = 1; r <= max_r; ++r) {
    for (int x = cx; x <= cx + r; ++x) push(x, cy - r);          // N -> NE corner
    for (int y = cy - r + 1; y <= cy + r; ++y) push(cx + r, y);  // E edge down
    for (int x = cx + r - 1; x >= cx - r; --x) push(x, cy + r);  // S edge west
    for (int y = cy + r - 1; y >= cy - r; --y) push(cx - r, y);  // W edge up
    for (int x = cx - r + 1; x <= cx - 1; ++x) push(x, cy - r);  // back toward N
  }
  return order;
}

}  // namespace gridfleet

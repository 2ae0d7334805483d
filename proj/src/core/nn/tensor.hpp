#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gridfleet::nn {

/// Dense row-major value container. Rank 1 ({n}) and rank 2 ({rows, cols})
/// cover every network in this project.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;

  Tensor() = default;
  Tensor(std::vector<int> s, std::vector<double> values)
      : shape(std::move(s)), v(std::move(values)) {
    if (static_cast<std::size_t>(size_of(shape)) != v.size())
      throw std::invalid_argument("Tensor: value count != product of shape");
  }

  static int size_of(const std::vector<int>& s) {
    int n = 1;
    for (int d : s) {
      if (d <= 0) throw std::invalid_argument("Tensor: nonpositive dimension");
      n *= d;
    }
    return n;
  }

  static Tensor zeros(std::vector<int> s) {
    int n = size_of(s);
    return Tensor(std::move(s), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  }
  static Tensor vec(std::vector<double> values) {
    int n = static_cast<int>(values.size());
    return Tensor({n}, std::move(values));
  }
  static Tensor scalar(double x) { return Tensor({1}, {x}); }

  int size() const { return static_cast<int>(v.size()); }
  int rows() const { return shape.at(0); }
  int cols() const { return shape.at(1); }

  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  double& at2(int r, int c) { return v[static_cast<std::size_t>(r * cols() + c)]; }
  double at2(int r, int c) const { return v[static_cast<std::size_t>(r * cols() + c)]; }
};

inline bool all_finite(const Tensor& t) {
  for (double x : t.v)
    if (!std::isfinite(x)) return false;
  return true;
}

inline void require_finite(const Tensor& t, const char* what) {
  if (!all_finite(t)) throw std::runtime_error(std::string("non-finite values in ") + what);
}

}  // namespace gridfleet::nn

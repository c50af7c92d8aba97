#include "specbound/numerics/polynomial2.hpp"

#include <algorithm>

namespace specbound::numerics {

void Polynomial2::set(int i, int j, double c) {
  if (static_cast<int>(c_.size()) <= i)
    c_.resize(i + 1);
  auto& row = c_[i];
  if (static_cast<int>(row.size()) <= j)
    row.resize(j + 1, 0.0);
  row[j] = c;
}

double Polynomial2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(c_.size()))
    return 0.0;
  const auto& row = c_[i];
  return j < static_cast<int>(row.size()) ? row[j] : 0.0;
}

int Polynomial2::max_y_power() const {
  int m = -1;
  for (const auto& row : c_)
    m = std::max(m, static_cast<int>(row.size()) - 1);
  return m;
}

int Polynomial2::total_degree() const {
  int d = -1;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    for (int j = 0; j < static_cast<int>(c_[i].size()); ++j)
      if (c_[i][j] != 0.0)
        d = std::max(d, i + j);
  return d;
}

bool Polynomial2::depends_on_y() const {
  for (const auto& row : c_)
    for (std::size_t j = 1; j < row.size(); ++j)
      if (row[j] != 0.0)
        return true;
  return false;
}

double Polynomial2::operator()(double x, double y) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    double inner = 0.0;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt)
      inner = inner * y + *jt;
    acc = acc * x + inner;
  }
  return acc;
}

Polynomial2 Polynomial2::partial(int dx, int dy) const {
  Polynomial2 out;
  for (int i = dx; i < static_cast<int>(c_.size()); ++i) {
    for (int j = dy; j < static_cast<int>(c_[i].size()); ++j) {
      double f = c_[i][j];
      if (f == 0.0)
        continue;
      for (int m = 0; m < dx; ++m)
        f *= i - m;
      for (int m = 0; m < dy; ++m)
        f *= j - m;
      out.set(i - dx, j - dy, f);
    }
  }
  return out;
}

} // namespace specbound::numerics

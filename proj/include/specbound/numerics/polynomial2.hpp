#ifndef SPECBOUND_NUMERICS_POLYNOMIAL2_HPP
#define SPECBOUND_NUMERICS_POLYNOMIAL2_HPP

#include <vector>

namespace specbound::numerics {

/// Bivariate polynomial sum c(i,j) x^i y^j on a dense coefficient grid.
/// Used for potential perturbations and test functions on polygons; a
/// univariate polynomial is the special case with only j = 0 terms.
class Polynomial2 {
public:
  Polynomial2() = default;

  void set(int i, int j, double c);
  double coeff(int i, int j) const;
  /// Largest i (resp. j) with storage; -1 when empty.
  int max_x_power() const { return static_cast<int>(c_.size()) - 1; }
  int max_y_power() const;
  int total_degree() const;
  bool depends_on_y() const;

  double operator()(double x, double y = 0.0) const;

  /// Mixed partial derivative d^(dx+dy) / dx^dx dy^dy.
  Polynomial2 partial(int dx, int dy) const;

private:
  std::vector<std::vector<double>> c_; // c_[i][j]
};

} // namespace specbound::numerics

#endif // SPECBOUND_NUMERICS_POLYNOMIAL2_HPP

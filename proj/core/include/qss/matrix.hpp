#ifndef QSS_MATRIX_HPP_
#define QSS_MATRIX_HPP_

#include <algorithm>
#include <complex>

namespace qss {

using complex_t = std::complex<double>;

// Dense 2x2 complex matrix, row-major. Small enough to pass by value.
struct Mat2 {
  complex_t m[2][2] = {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};

  static Mat2 identity() { return Mat2{{{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
      }
    }
    return out;
  }

  Mat2 adjoint() const {
    Mat2 out;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        out.m[i][j] = std::conj(m[j][i]);
      }
    }
    return out;
  }

  // Max elementwise deviation of U * U^dagger from the identity.
  double unitarity_defect() const {
    const Mat2 p = (*this) * adjoint();
    double defect = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const complex_t want = (i == j) ? complex_t{1, 0} : complex_t{0, 0};
        defect = std::max(defect, std::abs(p.m[i][j] - want));
      }
    }
    return defect;
  }

  double max_abs_diff(const Mat2& other) const {
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        d = std::max(d, std::abs(m[i][j] - other.m[i][j]));
      }
    }
    return d;
  }
};

}  // namespace qss

#endif  // QSS_MATRIX_HPP_

#pragma once

#include <complex>
#include <vector>

#include "colehopf/errors.hpp"

namespace colehopf::detail {

/// Factored complex tridiagonal solver (Thomas algorithm). The matrix is
/// factored once; solve() reuses the factorization per right-hand side.
class TridiagFactor {
 public:
  TridiagFactor(std::vector<std::complex<double>> sub, const std::vector<std::complex<double>>& diag,
                const std::vector<std::complex<double>>& sup)
      : sub_(std::move(sub)), cp_(diag.size()), dinv_(diag.size()) {
    const std::size_t n = diag.size();
    std::complex<double> denom = diag[0];
    check(denom);
    dinv_[0] = 1.0 / denom;
    cp_[0] = sup[0] * dinv_[0];
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag[i] - sub_[i] * cp_[i - 1];
      check(denom);
      dinv_[i] = 1.0 / denom;
      cp_[i] = sup[i] * dinv_[i];
    }
  }

  void solve(std::vector<std::complex<double>>& rhs) const {
    const std::size_t n = rhs.size();
    rhs[0] *= dinv_[0];
    for (std::size_t i = 1; i < n; ++i) {
      rhs[i] = (rhs[i] - sub_[i] * rhs[i - 1]) * dinv_[i];
    }
    for (std::size_t i = n - 1; i-- > 0;) {
      rhs[i] -= cp_[i] * rhs[i + 1];
    }
  }

 private:
  static void check(std::complex<double> denom) {
    if (std::abs(denom) < 1e-300) {
      throw Error("singular-tridiagonal", "vanishing pivot in the tridiagonal factorization");
    }
  }

  std::vector<std::complex<double>> sub_, cp_, dinv_;
};

}  // namespace colehopf::detail

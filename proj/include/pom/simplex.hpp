#ifndef POM_SIMPLEX_HPP
#define POM_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pom/error.hpp"

namespace pom {

enum class LpStatus { optimal, infeasible, unbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<T> x;     ///< primal solution
  T objective{};
  std::vector<T> dual;  ///< one multiplier per constraint row
};

/// Dense two-phase tableau simplex for
///   maximize cᵀx  subject to  Ax ≤ b,  x ≥ 0
/// with Bland's rule throughout. T must be an exact field type.
template <class T>
class Simplex {
 public:
  Simplex(std::vector<std::vector<T>> a, std::vector<T> b, std::vector<T> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), m_(a_.size()), n_(c_.size()) {
    if (b_.size() != m_) throw StructuralError("constraint matrix and right-hand side differ in length");
    for (const auto& row : a_)
      if (row.size() != n_) throw StructuralError("constraint row has wrong length");
  }

  LpResult<T> solve() {
    build();
    LpResult<T> out;
    if (!artificial_rows_.empty()) {
      // phase 1: maximize −Σ artificials
      std::vector<T> cost(cols_, T(0));
      for (std::size_t j = art_begin_; j < cols_; ++j) cost[j] = T(-1);
      price(cost);
      if (!iterate(cols_)) throw CertificateFailure("phase one cannot be unbounded");
      if (obj_value_ != T(0)) return out;
      drive_out_artificials();
    }
    std::vector<T> cost(cols_, T(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = c_[j];
    price(cost);
    if (!iterate(art_begin_)) {
      out.status = LpStatus::unbounded;
      return out;
    }
    out.status = LpStatus::optimal;
    out.x.assign(n_, T(0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < n_) out.x[basis_[r]] = rows_[r][cols_];
    out.objective = obj_value_;
    out.dual.assign(m_, T(0));
    for (std::size_t i = 0; i < m_; ++i) out.dual[i] = obj_[n_ + i];
    return out;
  }

  /// Primal feasibility, dual feasibility and equal objectives.
  bool certify(const LpResult<T>& r) const {
    if (r.status != LpStatus::optimal || r.x.size() != n_ || r.dual.size() != m_) return false;
    for (const auto& v : r.x)
      if (v < T(0)) return false;
    for (const auto& v : r.dual)
      if (v < T(0)) return false;
    T primal(0), dual(0);
    for (std::size_t j = 0; j < n_; ++j) primal += c_[j] * r.x[j];
    for (std::size_t i = 0; i < m_; ++i) {
      T lhs(0);
      for (std::size_t j = 0; j < n_; ++j) lhs += a_[i][j] * r.x[j];
      if (lhs > b_[i]) return false;
      dual += b_[i] * r.dual[i];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      T col(0);
      for (std::size_t i = 0; i < m_; ++i) col += a_[i][j] * r.dual[i];
      if (col < c_[j]) return false;
    }
    return primal == dual && primal == r.objective;
  }

 private:
  void build() {
    artificial_rows_.clear();
    for (std::size_t i = 0; i < m_; ++i)
      if (b_[i] < T(0)) artificial_rows_.push_back(i);
    art_begin_ = n_ + m_;
    cols_ = art_begin_ + artificial_rows_.size();
    rows_.assign(m_, std::vector<T>(cols_ + 1, T(0)));
    basis_.assign(m_, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const T sign = b_[i] < T(0) ? T(-1) : T(1);
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign * a_[i][j];
      rows_[i][n_ + i] = sign;
      rows_[i][cols_] = sign * b_[i];
      if (b_[i] < T(0)) {
        rows_[i][art_begin_ + k] = T(1);
        basis_[i] = art_begin_ + k++;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  // obj_[j] = c_Bᵀ B⁻¹ A_j − c_j
  void price(const std::vector<T>& cost) {
    cost_ = cost;
    obj_.assign(cols_, T(0));
    obj_value_ = T(0);
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = -cost[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T& cb = cost[basis_[r]];
      if (cb == T(0)) continue;
      for (std::size_t j = 0; j < cols_; ++j) obj_[j] += cb * rows_[r][j];
      obj_value_ += cb * rows_[r][cols_];
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    const T p = rows_[r][col];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][col] == T(0)) continue;
      const T f = rows_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (obj_[col] != T(0)) {
      const T f = obj_[col];
      for (std::size_t j = 0; j < cols_; ++j) obj_[j] -= f * rows_[r][j];
      obj_value_ -= f * rows_[r][cols_];
    }
    basis_[r] = col;
  }

  // Columns ≥ limit never enter. Returns false on unboundedness.
  bool iterate(std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj_[j] < T(0)) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      T best{};
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const T& a = rows_[r][*enter];
        if (a <= T(0)) continue;
        T ratio = rows_[r][cols_] / a;
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  // After a zero-cost phase one, artificials still basic sit at level zero:
  // pivot each onto a structural column, or drop its row if it is redundant.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < art_begin_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art_begin_ && !col; ++j)
        if (rows_[r][j] != T(0)) col = j;
      if (col) {
        pivot(r, *col);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  std::vector<std::vector<T>> a_;
  std::vector<T> b_, c_;
  std::size_t m_, n_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> artificial_rows_;
  std::size_t art_begin_ = 0, cols_ = 0;
  std::vector<T> cost_, obj_;
  T obj_value_{};
};

template <class T>
LpResult<T> maximize(std::vector<std::vector<T>> a, std::vector<T> b, std::vector<T> c) {
  Simplex<T> lp(std::move(a), std::move(b), std::move(c));
  return lp.solve();
}

}  // namespace pom

#endif  // POM_SIMPLEX_HPP

#include "gini/oracle/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gini/core/types.hpp"
#include "gini/simd/kernels.hpp"

namespace gini::oracle {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& options)
      : m_(lp.rows),
        n_(lp.cols),
        width_(lp.cols + lp.rows + 1),
        opt_(options),
        cells_(m_ * width_, 0.0),
        cost_(width_, 0.0),
        basis_(m_),
        kernels_(simd::kernels()) {
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = lp.b[i] < 0.0 ? -1.0 : 1.0;
      double* r = row(i);
      for (std::size_t j = 0; j < n_; ++j) r[j] = sign * lp.a[i * n_ + j];
      r[n_ + i] = 1.0;
      r[width_ - 1] = sign * lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  // Phase 1: minimize the sum of artificials.
  SimplexStatus phase_one() {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (std::size_t i = 0; i < m_; ++i) kernels_.row_update(cost_.data(), row(i), 1.0, width_);
    for (std::size_t i = 0; i < m_; ++i) cost_[n_ + i] = 0.0;
    const auto status = iterate(n_);
    if (status != SimplexStatus::Optimal) return status;
    if (-cost_[width_ - 1] > opt_.feasibility_tol) return SimplexStatus::Infeasible;
    drive_out_artificials();
    return SimplexStatus::Optimal;
  }

  SimplexStatus phase_two(const std::vector<double>& c) {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_ && c[basis_[i]] != 0.0) {
        kernels_.row_update(cost_.data(), row(i), c[basis_[i]], width_);
      }
    }
    return iterate(n_);
  }

  std::vector<double> solution() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = row(i)[width_ - 1];
    }
    return x;
  }

  long iterations() const { return iterations_; }

 private:
  double* row(std::size_t i) { return cells_.data() + i * width_; }
  const double* row(std::size_t i) const { return cells_.data() + i * width_; }

  // Columns [0, eligible) may enter. Pricing is Dantzig's most negative reduced
  // cost; after a run of degenerate pivots it falls back to Bland's smallest index
  // and stays there until the objective strictly improves, which rules out cycling.
  SimplexStatus iterate(std::size_t eligible) {
    long degenerate_run = 0;
    for (;;) {
      const bool bland = degenerate_run >= opt_.degenerate_switch;
      std::size_t enter = eligible;
      double most_negative = -opt_.cost_tol;
      for (std::size_t j = 0; j < eligible; ++j) {
        if (cost_[j] < most_negative) {
          enter = j;
          if (bland) break;
          most_negative = cost_[j];
        }
      }
      if (enter == eligible) return SimplexStatus::Optimal;

      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = row(i)[enter];
        if (a <= opt_.pivot_tol) continue;
        const double ratio = row(i)[width_ - 1] / a;
        const double slack = 1e-12 * (1.0 + std::fabs(best));
        if (leave == m_ || ratio < best - slack) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + slack && basis_[i] < basis_[leave]) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == m_) return SimplexStatus::Unbounded;
      if (++iterations_ > opt_.iteration_cap) return SimplexStatus::IterationLimit;
      degenerate_run = best <= opt_.degenerate_step ? degenerate_run + 1 : 0;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    double* pr = row(r);
    const double inv = 1.0 / pr[col];
    for (std::size_t j = 0; j < width_; ++j) pr[j] *= inv;
    pr[col] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* ri = row(i);
      const double f = ri[col];
      if (f != 0.0) {
        kernels_.row_update(ri, pr, f, width_);
        ri[col] = 0.0;
      }
    }
    const double f = cost_[col];
    if (f != 0.0) {
      kernels_.row_update(cost_.data(), pr, f, width_);
      cost_[col] = 0.0;
    }
    basis_[r] = col;
  }

  // Artificials left basic at level zero are pivoted out where possible; rows
  // where no original column has a usable entry are redundant and stay inert.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      const double* r = row(i);
      std::size_t col = n_;
      double best = 1e-9;
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::fabs(r[j]) > best) {
          best = std::fabs(r[j]);
          col = j;
        }
      }
      if (col < n_) {
        pivot(i, col);
      } else {
        double* dead = row(i);
        for (std::size_t j = 0; j < n_; ++j) dead[j] = 0.0;
        dead[width_ - 1] = 0.0;
      }
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  SimplexOptions opt_;
  std::vector<double> cells_;
  std::vector<double> cost_;  // reduced costs; last entry is -objective
  std::vector<std::size_t> basis_;
  const simd::KernelTable& kernels_;
  long iterations_ = 0;
};

}  // namespace

SimplexResult solve_simplex(const LinearProgram& lp, const SimplexOptions& options) {
  if (lp.a.size() != lp.rows * lp.cols || lp.b.size() != lp.rows || lp.c.size() != lp.cols) {
    throw DomainError("solve_simplex: inconsistent LinearProgram dimensions");
  }
  Tableau tab(lp, options);
  SimplexResult result;
  result.status = tab.phase_one();
  if (result.status == SimplexStatus::Optimal) result.status = tab.phase_two(lp.c);
  result.iterations = tab.iterations();
  if (result.status == SimplexStatus::Optimal) {
    result.x = tab.solution();
    double obj = 0.0;
    for (std::size_t j = 0; j < lp.cols; ++j) obj += lp.c[j] * result.x[j];
    result.objective = obj;
  }
  return result;
}

}  // namespace gini::oracle

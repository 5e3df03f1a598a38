// Copyright 2026 The pa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pa/lp.hpp"

#include <cstddef>
#include <utility>

#include "pa/errors.hpp"

namespace pa::lp {
namespace {

// Tableau in the layout of the KACTL simplex: rows 0..m-1 are constraints,
// row m is the objective, row m+1 the phase-one objective; column n is the
// auxiliary variable and column n+1 the right-hand side. Labels n..n+m-1 are
// slacks and -1 is the auxiliary.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
          const std::vector<Rational>& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        basic_(m_),
        nonbasic_(n_ + 1),
        d_(m_ + 2, std::vector<Rational>(n_ + 2)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      basic_[i] = n_ + i;
      d_[i][n_] = -1;
      d_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  Result run() {
    Result result;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1].sign() < 0) {
      pivot(r, n_);
      if (!optimize(2) || d_[m_ + 1][n_ + 1].sign() < 0) {
        result.status = Status::kInfeasible;
        return result;
      }
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
          if (!d_[i][j].is_zero() && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
        }
        if (s != -1) pivot(i, s);
      }
    }
    if (!optimize(1)) {
      result.status = Status::kUnbounded;
      return result;
    }
    result.status = Status::kOptimal;
    result.x.assign(n_, Rational());
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && basic_[i] < n_) result.x[basic_[i]] = d_[i][n_ + 1];
    }
    result.value = d_[m_][n_ + 1];
    return result;
  }

 private:
  void pivot(int r, int s) {
    const Rational inv = Rational(1) / d_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s].is_zero()) continue;
      const Rational factor = d_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j) {
        if (j != s && !d_[r][j].is_zero()) d_[i][j] -= d_[r][j] * factor;
      }
      d_[i][s] = -factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) d_[r][j] *= inv;
    }
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Bland's rule: lowest label among improving columns, ties in the ratio
  // test broken by lowest basic label.
  bool optimize(int phase) {
    const int x = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (d_[x][j].sign() < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s].sign() <= 0) continue;
        Rational ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == -1 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<std::vector<Rational>> d_;
};

}  // namespace

Result solve(const Problem& problem) {
  const std::size_t rows = problem.b.size();
  const std::size_t vars = problem.c.size();
  if (problem.a.size() != rows) {
    throw Error(ErrorKind::kDimensionMismatch, "lp: row count differs from rhs");
  }
  for (const auto& row : problem.a) require_same_dim(row.size(), vars, "lp row");

  if (problem.nonnegative) return Tableau(problem.a, problem.b, problem.c).run();

  // Free variables: x = p - q with p, q >= 0.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(2 * vars));
  std::vector<Rational> c(2 * vars);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) {
      a[i][j] = problem.a[i][j];
      a[i][vars + j] = -problem.a[i][j];
    }
  }
  for (std::size_t j = 0; j < vars; ++j) {
    c[j] = problem.c[j];
    c[vars + j] = -problem.c[j];
  }
  Result split = Tableau(a, problem.b, c).run();
  if (split.status != Status::kOptimal) return split;
  Result out;
  out.status = Status::kOptimal;
  out.value = split.value;
  out.x.resize(vars);
  for (std::size_t j = 0; j < vars; ++j) out.x[j] = split.x[j] - split.x[vars + j];
  return out;
}

}  // namespace pa::lp

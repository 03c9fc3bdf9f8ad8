#include "gwl/normal_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gwl {

namespace {

void axpy(IntVector& y, const Int& q, const IntVector& x) {
  for (std::size_t k = 0; k < y.size(); ++k)
    if (x[k] != 0) y[k] -= q * x[k];
}

void negate(IntVector& v) {
  for (auto& x : v) x = -x;
}

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

void check_width(const IntMatrix& rows, std::size_t ncols) {
  for (const auto& r : rows)
    if (r.size() != ncols)
      throw std::invalid_argument("matrix row has " + std::to_string(r.size()) +
                                  " entries, expected " + std::to_string(ncols));
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols) {
  check_width(rows, ncols);
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      have_pivot = true;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[r][col];
        axpy(rows[i], q, rows[r]);
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (rows[r][col] < 0) negate(rows[r]);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(rows[i][col], rows[r][col]);
      if (q != 0) axpy(rows[i], q, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t pivot_column(const IntVector& row) {
  for (std::size_t k = 0; k < row.size(); ++k)
    if (row[k] != 0) return k;
  return row.size();
}

SmithForm smith_normal_form(const IntMatrix& a0, std::size_t n) {
  check_width(a0, n);
  const std::size_t m = a0.size();
  IntMatrix a = a0;
  IntMatrix u = identity(m);
  IntMatrix v = identity(n);

  auto col_op = [&](std::size_t j, const Int& q, std::size_t src) {
    // column j -= q * column src
    for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][src];
    for (std::size_t i = 0; i < n; ++i) v[i][j] -= q * v[i][src];
  };
  auto swap_cols = [&](std::size_t j1, std::size_t j2) {
    if (j1 == j2) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][j1], a[i][j2]);
    for (std::size_t i = 0; i < n; ++i) std::swap(v[i][j1], v[i][j2]);
  };

  const std::size_t diag = std::min(m, n);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) goto finished;
      std::swap(a[t], a[pi]);
      std::swap(u[t], u[pi]);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        axpy(a[i], q, a[t]);
        axpy(u[i], q, u[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        col_op(j, q, t);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole remaining block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = 0; k < n; ++k) a[t][k] += a[i][k];
            for (std::size_t k = 0; k < m; ++k) u[t][k] += u[i][k];
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a[t][t] < 0) {
      negate(a[t]);
      negate(u[t]);
    }
  }
finished:
  SmithForm out;
  out.diagonal.resize(diag);
  for (std::size_t i = 0; i < diag; ++i) out.diagonal[i] = a[i][i];
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

IntVector cokernel_invariants(const IntMatrix& a, std::size_t ncols) {
  const SmithForm snf = smith_normal_form(a, ncols);
  IntVector out;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) out.push_back(d);
  }
  for (std::size_t k = nonzero; k < ncols; ++k) out.push_back(0);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& images, std::size_t image_cols) {
  check_width(images, image_cols);
  const std::size_t n = images.size();
  IntMatrix aug(n, IntVector(image_cols + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(images[i].begin(), images[i].end(), aug[i].begin());
    aug[i][image_cols + i] = 1;
  }
  IntMatrix h = hermite_normal_form(std::move(aug), image_cols + n);
  IntMatrix kernel;
  for (const auto& row : h) {
    if (pivot_column(row) < image_cols) continue;
    kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(image_cols), row.end());
  }
  return kernel;
}

bool solve_in_hnf(const IntMatrix& hnf, IntVector v, IntVector& coords) {
  coords.assign(hnf.size(), 0);
  for (std::size_t k = 0; k < hnf.size(); ++k) {
    const std::size_t p = pivot_column(hnf[k]);
    if (p >= v.size()) return false;
    if (v[p] == 0) continue;
    if (v[p] % hnf[k][p] != 0) return false;
    Int q = v[p] / hnf[k][p];
    axpy(v, q, hnf[k]);
    coords[k] = q;
  }
  return is_zero(v);
}

}  // namespace gwl

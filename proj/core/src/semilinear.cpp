#include "conjlang/semilinear.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "conjlang/error.hpp"

namespace conjlang {

namespace {

void require_square(const Matrix& q, std::size_t m) {
  if (q.size() != m) throw MismatchError("matrix has " + std::to_string(q.size()) + " rows, expected " + std::to_string(m));
  for (const Vec& row : q) {
    if (row.size() != m) throw MismatchError("matrix is not square");
  }
}

void require_dim(const Vec& v, std::size_t m) {
  if (v.size() != m) throw MismatchError("vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(m));
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::int64_t norm_inf(const Vec& v) {
  std::int64_t n = 0;
  for (std::int64_t x : v) n = std::max(n, std::abs(x));
  return n;
}

Matrix minor(const Matrix& q, std::size_t row, std::size_t col) {
  Matrix out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i == row) continue;
    Vec r;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j != col) r.push_back(q[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Matrix identity_matrix(std::size_t m) {
  Matrix q(m, Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) q[i][i] = 1;
  return q;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
  require_square(b, a.size());
  Matrix out;
  for (const Vec& row : a) out.push_back(row_times(row, b));
  return out;
}

Vec row_times(const Vec& v, const Matrix& q) {
  require_square(q, v.size());
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[j] += v[i] * q[i][j];
  }
  return out;
}

// Cofactor expansion; matrices here are tiny.
std::int64_t determinant(const Matrix& q) {
  require_square(q, q.size());
  if (q.empty()) return 1;
  if (q.size() == 1) return q[0][0];
  std::int64_t det = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const std::int64_t term = q[0][j] * determinant(minor(q, 0, j));
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

Matrix matrix_inverse(const Matrix& q) {
  const std::int64_t det = determinant(q);
  if (det != 1 && det != -1) throw std::invalid_argument("matrix has determinant " + std::to_string(det) + ", not +-1");
  const std::size_t m = q.size();
  Matrix inv(m, Vec(m, 0));
  if (m == 1) {
    inv[0][0] = det;
    return inv;
  }
  // inverse = adjugate / det, and 1/det = det here.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t cof = determinant(minor(q, j, i));
      inv[i][j] = ((i + j) % 2 == 0 ? cof : -cof) * det;
    }
  }
  return inv;
}

SemilinearSet sls_point(const Vec& v) { return {v.size(), {LinearSet{v, {}}}}; }

SemilinearSet sls_union(const SemilinearSet& a, const SemilinearSet& b) {
  if (a.dimension != b.dimension) throw MismatchError("semilinear sets of different dimensions");
  SemilinearSet out = a;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  return out;
}

SemilinearSet sls_sum(const SemilinearSet& a, const SemilinearSet& b) {
  if (a.dimension != b.dimension) throw MismatchError("semilinear sets of different dimensions");
  SemilinearSet out{a.dimension, {}};
  for (const LinearSet& x : a.components) {
    for (const LinearSet& y : b.components) {
      LinearSet s{add(x.base, y.base), x.periods};
      s.periods.insert(s.periods.end(), y.periods.begin(), y.periods.end());
      out.components.push_back(std::move(s));
    }
  }
  return out;
}

SemilinearSet sls_image(const SemilinearSet& a, const Matrix& q) {
  require_square(q, a.dimension);
  SemilinearSet out{a.dimension, {}};
  for (const LinearSet& l : a.components) {
    LinearSet img{row_times(l.base, q), {}};
    for (const Vec& p : l.periods) img.periods.push_back(row_times(p, q));
    out.components.push_back(std::move(img));
  }
  return out;
}

SemilinearSet sls_shift(const SemilinearSet& a, const Vec& v) {
  require_dim(v, a.dimension);
  SemilinearSet out = a;
  for (LinearSet& l : out.components) l.base = add(l.base, v);
  return out;
}

// Exact search: if target = sum of periods p_1..p_n, a Steinitz-type
// rearrangement keeps every partial sum within m*P + P of the segment
// [0, target], P the largest period norm. Breadth-first search over the
// lattice points of that box therefore decides membership.
bool linear_member(const LinearSet& l, const Vec& v) {
  require_dim(v, l.base.size());
  Vec target(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) target[i] = v[i] - l.base[i];
  if (norm_inf(target) == 0) return true;
  std::int64_t p_max = 0;
  for (const Vec& p : l.periods) {
    require_dim(p, v.size());
    p_max = std::max(p_max, norm_inf(p));
  }
  if (p_max == 0) return false;
  const auto m = static_cast<std::int64_t>(v.size());
  const std::int64_t radius = norm_inf(target) + 2 * m * p_max + p_max;

  std::map<Vec, bool> seen;
  std::vector<Vec> queue{Vec(v.size(), 0)};
  seen[queue.front()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Vec& p : l.periods) {
      Vec next = add(queue[i], p);
      if (norm_inf(next) > radius) continue;
      if (next == target) return true;
      if (seen.emplace(next, true).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

bool sls_member(const SemilinearSet& a, const Vec& v) {
  require_dim(v, a.dimension);
  return std::any_of(a.components.begin(), a.components.end(),
                     [&](const LinearSet& l) { return linear_member(l, v); });
}

SemilinearSet lattice_image(const Matrix& q) {
  const std::size_t m = q.size();
  require_square(q, m);
  Matrix d = matrix_inverse(q);
  for (std::size_t i = 0; i < m; ++i) d[i][i] -= 1;
  LinearSet l{Vec(m, 0), {}};
  for (const Vec& row : d) {
    if (norm_inf(row) == 0) continue;
    Vec neg(row.size());
    std::transform(row.begin(), row.end(), neg.begin(), [](std::int64_t x) { return -x; });
    l.periods.push_back(row);
    l.periods.push_back(std::move(neg));
  }
  return {m, {std::move(l)}};
}

std::vector<Vec> box_points(std::size_t m, std::int64_t r) {
  std::vector<Vec> out;
  if (r < 0) return out;
  Vec cur(m, -r);
  while (true) {
    out.push_back(cur);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (cur[i] < r) {
        ++cur[i];
        break;
      }
      cur[i] = -r;
      if (i == 0) return out;
    }
    if (m == 0) return out;
  }
}

}  // namespace conjlang

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace conjlang {

using Vec = std::vector<std::int64_t>;
/// Square integer matrix, row-major; vectors act as rows: v -> v.Q.
using Matrix = std::vector<Vec>;

Matrix identity_matrix(std::size_t m);
Matrix matrix_product(const Matrix& a, const Matrix& b);
Vec row_times(const Vec& v, const Matrix& q);
std::int64_t determinant(const Matrix& q);
/// Integer inverse; throws std::invalid_argument unless det = +-1.
Matrix matrix_inverse(const Matrix& q);

/// { base + sum n_i periods[i] : n_i >= 0 }.
struct LinearSet {
  Vec base;
  std::vector<Vec> periods;
};

struct SemilinearSet {
  std::size_t dimension = 0;
  /// Empty list denotes the empty set.
  std::vector<LinearSet> components;
};

SemilinearSet sls_point(const Vec& v);

/// All binary operations throw MismatchError on a dimension mismatch.
SemilinearSet sls_union(const SemilinearSet& a, const SemilinearSet& b);
/// Minkowski sum, componentwise: bases add, periods concatenate.
SemilinearSet sls_sum(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet sls_image(const SemilinearSet& a, const Matrix& q);
SemilinearSet sls_shift(const SemilinearSet& a, const Vec& v);

bool linear_member(const LinearSet& l, const Vec& v);
bool sls_member(const SemilinearSet& a, const Vec& v);

/// The subgroup Z^m (Q^{-1} - I), as base 0 with periods +-rows.
SemilinearSet lattice_image(const Matrix& q);

/// Integer points of [-r, r]^m in lexicographic order.
std::vector<Vec> box_points(std::size_t m, std::int64_t r);

}  // namespace conjlang

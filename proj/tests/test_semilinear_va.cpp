#include <doctest.h>

#include <random>

#include "conjlang/error.hpp"
#include "conjlang/semilinear.hpp"
#include "conjlang/virtually_abelian.hpp"
#include "oracles.hpp"

using namespace conjlang;

namespace {

const std::string kData = CONJLANG_TEST_DATA;

VAPresentation group(const char* file) { return load_presentation(kData + "/" + file); }

VASubset single(const Vec& n, std::size_t coset, std::vector<Vec> periods = {}) {
  return {{VAComponent{SemilinearSet{n.size(), {LinearSet{n, std::move(periods)}}}, coset}}};
}

// Brute membership: all coefficient vectors with entries <= bound.
bool enumerate_member(const LinearSet& l, const Vec& v, int bound) {
  const std::size_t k = l.periods.size();
  std::vector<int> coef(k, 0);
  while (true) {
    Vec x = l.base;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += coef[i] * l.periods[i][j];
    if (x == v) return true;
    std::size_t i = 0;
    while (i < k && coef[i] == bound) coef[i++] = 0;
    if (i == k) return false;
    ++coef[i];
  }
}

}  // namespace

TEST_CASE("matrix helpers") {
  const Matrix swap{{0, 1}, {1, 0}};
  CHECK(determinant(swap) == -1);
  CHECK(matrix_inverse(swap) == swap);
  const Matrix shear{{1, 2}, {0, 1}};
  CHECK(matrix_product(shear, matrix_inverse(shear)) == identity_matrix(2));
  CHECK(row_times({1, 1}, shear) == Vec{1, 3});
  CHECK_THROWS(matrix_inverse(Matrix{{2}}));
  const Matrix m3{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(matrix_product(m3, matrix_inverse(m3)) == identity_matrix(3));
}

TEST_CASE("semilinear operations") {
  const SemilinearSet lattice{2, {LinearSet{{0, 0}, {{2, 0}, {-2, 0}}}}};
  const SemilinearSet s = sls_sum(sls_point({1, 0}), lattice);
  for (int x = -7; x <= 7; ++x) CHECK(sls_member(s, {x, 0}) == (x % 2 != 0));
  CHECK_FALSE(sls_member(s, {1, 1}));

  const SemilinearSet img = sls_image(sls_point({1, 0}), Matrix{{0, 1}, {1, 0}});
  CHECK(sls_member(img, {0, 1}));
  CHECK_FALSE(sls_member(img, {1, 0}));
  CHECK(sls_member(sls_shift(img, {2, 2}), {2, 3}));
  CHECK(sls_member(sls_union(img, sls_point({5, 5})), {5, 5}));
  CHECK_THROWS_AS(sls_union(img, sls_point({1})), MismatchError);
  CHECK_THROWS_AS(sls_member(img, {1}), MismatchError);
}

TEST_CASE("semilinear membership matches coefficient enumeration") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> count(0, 3);
  for (int i = 0; i < 40; ++i) {
    LinearSet l{{entry(rng), entry(rng)}, {}};
    const int k = count(rng);
    for (int j = 0; j < k; ++j) l.periods.push_back({entry(rng), entry(rng)});
    for (const Vec& v : box_points(2, 5)) CHECK(linear_member(l, v) == enumerate_member(l, v, 14));
  }
}

TEST_CASE("lattice images") {
  const SemilinearSet z2 = lattice_image(Matrix{{-1}});
  REQUIRE(z2.components.size() == 1);
  CHECK(z2.components[0].periods == std::vector<Vec>{{-2}, {2}});
  CHECK(lattice_image(identity_matrix(2)).components[0].periods.empty());
  const SemilinearSet anti = lattice_image(Matrix{{0, 1}, {1, 0}});
  std::set<Vec> images;
  for (const Vec& p : box_points(2, 4)) images.insert({p[1] - p[0], p[0] - p[1]});
  for (const Vec& v : box_points(2, 4)) CHECK(sls_member(anti, v) == (images.count(v) > 0));
  CHECK_THROWS(lattice_image(Matrix{{2}}));
}

TEST_CASE("presentations load and validate") {
  const VAPresentation d = group("dinf.json");
  CHECK(d.m == 1);
  CHECK(d.cosets() == 2);
  CHECK(d.names[1] == "flip");
  CHECK_THROWS_AS(group("bad_group.json"), PreconditionError);
  CHECK_THROWS_AS(group("malformed_group.json"), ParseError);
  CHECK_THROWS_AS(group("missing.json"), ParseError);
}

TEST_CASE("group law against faithful models") {
  // Z with N = 2Z: n.s is the integer 2n + s.
  const VAPresentation z = group("z_over_2z.json");
  auto as_int = [](const VAElement& e) { return 2 * e.n[0] + static_cast<std::int64_t>(e.coset); };
  for (int a = -5; a <= 5; ++a) {
    for (int b = -5; b <= 5; ++b) {
      const VAElement x{{a}, 1};
      const VAElement y{{b}, static_cast<std::size_t>(b & 1)};
      CHECK(as_int(va_multiply(z, x, y)) == as_int(x) + as_int(y));
      CHECK(as_int(va_inverse(z, y)) == -as_int(y));
    }
  }

  for (const char* file : {"dinf.json", "z2c2.json"}) {
    const VAPresentation g = group(file);
    const oracle::AffineModel model{g.q};
    for (const Vec& xn : box_points(g.m, 2)) {
      for (const Vec& hn : box_points(g.m, 2)) {
        for (std::size_t xs = 0; xs < g.cosets(); ++xs) {
          for (std::size_t hs = 0; hs < g.cosets(); ++hs) {
            const VAElement c = va_conjugate(g, {xn, xs}, {hn, hs});
            const auto [mn, ms] = model.conjugate(xn, xs, hn, hs);
            CHECK(c.n == mn);
            CHECK(c.coset == ms);
          }
        }
      }
    }
  }
}

TEST_CASE("alpha in the infinite dihedral group") {
  const VAPresentation d = group("dinf.json");
  const VASubset flip = alpha_va(d, single({1}, 1));
  for (int x = -9; x <= 9; ++x) {
    CHECK(va_member(flip, {{x}, 1}) == (x % 2 != 0));
    CHECK_FALSE(va_member(flip, {{x}, 0}));
  }
  const VASubset one = alpha_va(d, single({1}, 0));
  for (int x = -9; x <= 9; ++x) CHECK(va_member(one, {{x}, 0}) == (x == 1 || x == -1));
  const VASubset id = alpha_va(d, single({0}, 0));
  CHECK(va_box(d, id, 5) == std::set<VAElement>{{{0}, 0}});

  CHECK(sls_member(alpha_abelian_subset(d, sls_point({3})), {-3}));
  CHECK(sls_member(alpha_abelian_subset(d, sls_point({3})), {3}));
  CHECK_FALSE(sls_member(alpha_abelian_subset(d, sls_point({3})), {1}));
}

TEST_CASE("brute ball") {
  const VAPresentation d = group("dinf.json");
  const VASubset u = single({1}, 1);
  std::set<VAElement> expected;
  for (int x = -7; x <= 7; x += 2) expected.insert({{x}, 1});
  CHECK(va_brute_ball(d, u, 3) == expected);
  // Radius 0 still conjugates by the coset representatives.
  CHECK(va_brute_ball(d, u, 1, 0) == std::set<VAElement>{{{-1}, 1}, {{1}, 1}});
  const auto small = va_brute_ball(d, u, 2);
  const auto large = va_brute_ball(d, u, 3);
  CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
}

TEST_CASE("alpha on Z^2 by the swap") {
  const VAPresentation g = group("z2c2.json");
  const SemilinearSet a = alpha_abelian_subset(g, sls_point({1, 0}));
  for (const Vec& v : box_points(2, 3)) CHECK(sls_member(a, v) == (v == Vec{1, 0} || v == Vec{0, 1}));

  const VASubset whole = alpha_va(g, single({1, 0}, 0));
  std::set<VAElement> id_part;
  for (const VAElement& e : va_box(g, whole, 4)) {
    if (e.coset == 0) id_part.insert(e);
  }
  std::set<VAElement> expected;
  for (const Vec& v : box_points(2, 4)) {
    if (sls_member(a, v)) expected.insert({v, 0});
  }
  CHECK(id_part == expected);

  // A symmetric set is fixed.
  const SemilinearSet sym{2, {LinearSet{{1, 1}, {{1, 1}}}}};
  for (const Vec& v : box_points(2, 4)) CHECK(sls_member(alpha_abelian_subset(g, sym), v) == sls_member(sym, v));
}

TEST_CASE("alpha contains U and is closed under conjugation on a box") {
  const VAPresentation g = group("z2c2.json");
  const VASubset u = single({1, 2}, 1, {{1, 0}});
  const VASubset a = alpha_va(g, u);
  for (const VAElement& e : va_box(g, u, 4)) CHECK(va_member(a, e));
  for (const VAElement& e : va_box(g, a, 3)) {
    for (const Vec& h : box_points(2, 2)) {
      for (std::size_t s = 0; s < 2; ++s) CHECK(va_member(a, va_conjugate(g, e, {h, s})));
    }
  }
}

TEST_CASE("subset files") {
  const VAPresentation d = group("dinf.json");
  const VASubset u = load_subset(kData + "/dinf_flip1.json", d);
  REQUIRE(u.components.size() == 1);
  CHECK(u.components[0].coset == 1);
  CHECK_THROWS_AS(parse_subset(R"({"components":[{"coset":"nope","base":[1]}]})", d), ParseError);
  CHECK_THROWS_AS(parse_subset(R"({"components":[{"coset":0,"base":[1,2]}]})", d), ParseError);
  CHECK(to_string(d, {{-3}, 1}) == "(-3).flip");
}

#include "conjlang/growth.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "conjlang/conj_langs.hpp"

namespace conjlang {

UdSubset build_ud(int d) {
  if (d < 1 || d > 26) throw std::invalid_argument("degree must lie in 1..26, got " + std::to_string(d));
  // a_1^* ... a_d^*: state i loops on a_i and may step forward to i+1.
  const Alphabet base_alphabet(d);
  NfaBuilder base(base_alphabet);
  for (int i = 0; i < d; ++i) base.add_state();
  base.set_initial(0);
  for (int i = 0; i < d; ++i) {
    base.set_final(static_cast<State>(i));
    base.add_transition(static_cast<State>(i), Alphabet::generator(i), static_cast<State>(i));
    if (i + 1 < d) base.add_epsilon(static_cast<State>(i), static_cast<State>(i + 1));
  }

  // Same shape over {a, b}; each loop on a_i becomes a cycle reading a^i b^i.
  const Alphabet ab(2);
  const Letter a = Alphabet::generator(0);
  const Letter b = Alphabet::generator(1);
  NfaBuilder k(ab);
  for (int i = 0; i < d; ++i) k.add_state();
  k.set_initial(0);
  for (int i = 0; i < d; ++i) {
    const auto hub = static_cast<State>(i);
    k.set_final(hub);
    State at = hub;
    for (int step = 0; step < 2 * (i + 1); ++step) {
      const bool last = step + 1 == 2 * (i + 1);
      const State to = last ? hub : k.add_state();
      k.add_transition(at, step <= i ? a : b, to);
      at = to;
    }
    if (i + 1 < d) k.add_epsilon(hub, static_cast<State>(i + 1));
  }
  return {d, d, base.build(), k.build()};
}

GrowthTable relative_growth(const RationalSubset& u, std::size_t max_n) {
  const Dfa conjgeo = conjgeo_unconstrained(u).conjgeo;
  GrowthTable t;
  t.max_n = max_n;
  t.strict.assign(max_n + 1, 0);
  t.cumulative.assign(max_n + 1, 0);
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::size_t classes = 0;
    // Accepted words are cyclically reduced, so each class is counted once
    // through its least rotation.
    for (const Word& w : enumerate_length(conjgeo, n)) {
      if (least_rotation(w) == w) ++classes;
    }
    t.strict[n] = classes;
    t.cumulative[n] = (n == 0 ? BigInt(0) : t.cumulative[n - 1]) + classes;
  }
  return t;
}

double degree_estimate(const GrowthTable& t, std::size_t n0, std::size_t n1) {
  if (n0 < 1 || n1 <= n0 || n1 > t.max_n) {
    throw std::domain_error("bad window [" + std::to_string(n0) + "," + std::to_string(n1) + "] for table up to " +
                            std::to_string(t.max_n));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto count = static_cast<double>(n1 - n0 + 1);
  for (std::size_t n = n0; n <= n1; ++n) {
    if (t.cumulative[n] == 0) throw std::domain_error("cc(" + std::to_string(n) + ") = 0 inside the window");
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(t.cumulative[n].convert_to<double>());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace conjlang

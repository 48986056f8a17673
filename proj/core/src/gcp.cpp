#include "conjlang/gcp.hpp"

#include "conjlang/automata.hpp"
#include "conjlang/conj_langs.hpp"
#include "conjlang/error.hpp"

namespace conjlang {

namespace {

// Looks for y in V z^{-1} with y w y^{-1} in U, shortest y first.
std::optional<GcpWitness> find_witness(const GcpInstance& instance, const Dfa& shifted, const CyclicReduction& cr,
                                       std::size_t max_len) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const Word& y : enumerate_length(shifted, len)) {
      Word u = reduce(y + cr.core + formal_inverse(y));
      if (!member(instance.u, u)) continue;
      GcpWitness w{std::move(u), reduce(y + cr.conjugator)};
      // Literal check before handing it out.
      if (reduce(formal_inverse(w.v) + w.u + w.v) == reduce(instance.g)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

GcpResult decide_gcp(const GcpInstance& instance, const GcpOptions& options) {
  require_same(instance.u.alphabet(), instance.v.alphabet());
  const Alphabet& alphabet = instance.u.alphabet();
  for (Letter x : instance.g.letters()) {
    if (!alphabet.contains(x)) throw MismatchError("word uses a letter outside the alphabet");
  }
  // g = z^{-1} w z with w cyclically reduced; then g = v^{-1} u v exactly
  // when w = y^{-1} u y for y = v z^{-1}.
  const CyclicReduction cr = cyclic_reduce(reduce(instance.g));
  const RationalSubset shifted(concat(instance.v.source(), word_dfa(alphabet, formal_inverse(cr.conjugator)).to_nfa()));
  const Dfa conjgeo = conjgeo_general(instance.u, shifted).conjgeo;

  GcpResult result;
  result.conjugate = accepts(conjgeo, cr.core);
  if (result.conjugate && options.want_witness) {
    result.witness = find_witness(instance, shifted.reduced(), cr, options.witness_max_len);
  }
  return result;
}

bool decide_double_gcp(const RationalSubset& u, const RationalSubset& v) {
  require_same(u.alphabet(), v.alphabet());
  return !is_empty(intersect(conjgeo_unconstrained(u).conjgeo, conjgeo_unconstrained(v).conjgeo));
}

}  // namespace conjlang

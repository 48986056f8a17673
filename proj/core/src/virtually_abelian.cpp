#include "conjlang/virtually_abelian.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "conjlang/error.hpp"

namespace conjlang {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);
  return obj.at(key);
}

Vec read_vec(const json& j, std::size_t m, const std::string& what) {
  if (!j.is_array() || j.size() != m) throw ParseError(what + ": expected an integer array of length " + std::to_string(m), 0);
  Vec v;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw ParseError(what + ": non-integer entry", 0);
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

Vec negate(const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::size_t inverse_coset(const VAPresentation& g, std::size_t s) {
  for (std::size_t t = 0; t < g.cosets(); ++t) {
    if (g.coset_product[s][t] == 0) return t;
  }
  throw PreconditionError("coset " + std::to_string(s) + " has no inverse in coset_product");
}

void require_element(const VAPresentation& g, const VAElement& e) {
  if (e.n.size() != g.m || e.coset >= g.cosets()) throw MismatchError("element does not belong to the presentation");
}

std::size_t read_coset(const json& j, const VAPresentation& g) {
  if (j.is_number_integer()) {
    const auto c = j.get<std::int64_t>();
    if (c >= 0 && static_cast<std::size_t>(c) < g.cosets()) return static_cast<std::size_t>(c);
  } else if (j.is_string()) {
    for (std::size_t i = 0; i < g.names.size(); ++i) {
      if (g.names[i] == j.get<std::string>()) return i;
    }
  }
  throw ParseError("unknown coset " + j.dump(), 0);
}

VASubset merge_by_coset(const VAPresentation& g, std::vector<VAComponent> parts) {
  std::map<std::size_t, SemilinearSet> by_coset;
  for (VAComponent& c : parts) {
    auto [it, inserted] = by_coset.try_emplace(c.coset, SemilinearSet{g.m, {}});
    it->second = sls_union(it->second, c.set);
  }
  VASubset out;
  for (auto& [coset, set] : by_coset) out.components.push_back({std::move(set), coset});
  return out;
}

}  // namespace

VAPresentation parse_presentation(std::string_view json_text) {
  const json doc = parse_json(json_text);
  VAPresentation g;
  const json& m = field(doc, "m");
  if (!m.is_number_integer() || m.get<std::int64_t>() < 1) throw ParseError("m must be a positive integer", 0);
  g.m = m.get<std::size_t>();
  const json& k_field = field(doc, "cosets");
  if (!k_field.is_number_integer() || k_field.get<std::int64_t>() < 1) throw ParseError("cosets must be a positive integer", 0);
  const auto k = k_field.get<std::size_t>();

  const json& qs = field(doc, "Q");
  if (!qs.is_array() || qs.size() != k) throw ParseError("Q must list one matrix per coset", 0);
  for (std::size_t t = 0; t < k; ++t) {
    if (!qs[t].is_array() || qs[t].size() != g.m) throw ParseError("Q[" + std::to_string(t) + "] must have m rows", 0);
    Matrix q;
    for (std::size_t i = 0; i < g.m; ++i) q.push_back(read_vec(qs[t][i], g.m, "Q[" + std::to_string(t) + "]"));
    g.q.push_back(std::move(q));
  }

  const json& prod = field(doc, "coset_product");
  if (!prod.is_array() || prod.size() != k) throw ParseError("coset_product must be a k x k table", 0);
  for (std::size_t s = 0; s < k; ++s) {
    if (!prod[s].is_array() || prod[s].size() != k) throw ParseError("coset_product must be a k x k table", 0);
    std::vector<std::size_t> row;
    for (const json& r : prod[s]) {
      if (!r.is_number_integer() || r.get<std::int64_t>() < 0 || r.get<std::size_t>() >= k) {
        throw ParseError("coset_product entry out of range", 0);
      }
      row.push_back(r.get<std::size_t>());
    }
    g.coset_product.push_back(std::move(row));
  }

  g.cocycle.assign(k, std::vector<Vec>(k, Vec(g.m, 0)));
  if (doc.contains("cocycle")) {
    const json& c = doc.at("cocycle");
    if (!c.is_array() || c.size() != k) throw ParseError("cocycle must be a k x k table of vectors", 0);
    for (std::size_t s = 0; s < k; ++s) {
      if (!c[s].is_array() || c[s].size() != k) throw ParseError("cocycle must be a k x k table of vectors", 0);
      for (std::size_t t = 0; t < k; ++t) g.cocycle[s][t] = read_vec(c[s][t], g.m, "cocycle");
    }
  }

  if (doc.contains("names")) {
    const json& names = doc.at("names");
    if (!names.is_array() || names.size() != k) throw ParseError("names must list one string per coset", 0);
    for (const json& n : names) {
      if (!n.is_string()) throw ParseError("names must be strings", 0);
      g.names.push_back(n.get<std::string>());
    }
  } else {
    for (std::size_t t = 0; t < k; ++t) g.names.push_back(std::to_string(t));
  }
  validate(g);
  return g;
}

VAPresentation load_presentation(const std::filesystem::path& path) { return parse_presentation(read_file(path)); }

void validate(const VAPresentation& g) {
  const std::size_t k = g.cosets();
  if (g.q.at(0) != identity_matrix(g.m)) throw PreconditionError("Q of the identity coset must be the identity matrix");
  for (std::size_t t = 0; t < k; ++t) {
    const std::int64_t det = determinant(g.q[t]);
    if (det != 1 && det != -1) throw PreconditionError("det Q[" + std::to_string(t) + "] = " + std::to_string(det));
    if (g.coset_product[0][t] != t || g.coset_product[t][0] != t) throw PreconditionError("coset 0 must be neutral");
    if (g.cocycle[0][t] != Vec(g.m, 0) || g.cocycle[t][0] != Vec(g.m, 0)) {
      throw PreconditionError("cocycle must vanish on the identity coset");
    }
    inverse_coset(g, t);
  }
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      if (matrix_product(g.q[s], g.q[t]) != g.q[g.coset_product[s][t]]) {
        throw PreconditionError("Q[" + std::to_string(s) + "] Q[" + std::to_string(t) + "] != Q[r(s,t)]");
      }
    }
  }
  // Associativity on every triple of cosets with a few vector parts.
  std::vector<Vec> samples{Vec(g.m, 0)};
  for (std::size_t i = 0; i < g.m; ++i) {
    Vec e(g.m, 0);
    e[i] = 1;
    samples.push_back(e);
    e[i] = -2;
    samples.push_back(e);
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
          const VAElement x{samples[i], a};
          const VAElement y{samples[(i + 1) % samples.size()], b};
          const VAElement z{samples[(i + 2) % samples.size()], c};
          if (va_multiply(g, va_multiply(g, x, y), z) != va_multiply(g, x, va_multiply(g, y, z))) {
            throw PreconditionError("multiplication is not associative on cosets " + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c));
          }
        }
      }
    }
  }
}

VASubset parse_subset(std::string_view json_text, const VAPresentation& g) {
  const json doc = parse_json(json_text);
  const json& comps = field(doc, "components");
  if (!comps.is_array()) throw ParseError("components must be an array", 0);
  std::vector<VAComponent> parts;
  for (const json& c : comps) {
    LinearSet l{read_vec(field(c, "base"), g.m, "base"), {}};
    if (c.contains("periods")) {
      if (!c.at("periods").is_array()) throw ParseError("periods must be an array", 0);
      for (const json& p : c.at("periods")) l.periods.push_back(read_vec(p, g.m, "period"));
    }
    parts.push_back({SemilinearSet{g.m, {std::move(l)}}, read_coset(field(c, "coset"), g)});
  }
  return merge_by_coset(g, std::move(parts));
}

VASubset load_subset(const std::filesystem::path& path, const VAPresentation& g) {
  return parse_subset(read_file(path), g);
}

VAElement va_multiply(const VAPresentation& g, const VAElement& a, const VAElement& b) {
  require_element(g, a);
  require_element(g, b);
  const Vec moved = row_times(b.n, matrix_inverse(g.q[a.coset]));
  return {add(add(a.n, moved), g.cocycle[a.coset][b.coset]), g.coset_product[a.coset][b.coset]};
}

VAElement va_inverse(const VAPresentation& g, const VAElement& a) {
  require_element(g, a);
  // s t = c(s,t) with r(s,t) = 0 gives s^{-1} = t c^{-1} = (-c.Q_t^{-1}).t.
  const std::size_t s = a.coset;
  const std::size_t t = inverse_coset(g, s);
  const Vec s_inv = row_times(negate(g.cocycle[s][t]), matrix_inverse(g.q[t]));
  // (n.s)^{-1} = s^{-1} n^{-1} = (-n).Q_s . s^{-1}.
  return {add(row_times(negate(a.n), g.q[s]), s_inv), t};
}

VAElement va_conjugate(const VAPresentation& g, const VAElement& x, const VAElement& h) {
  return va_multiply(g, va_multiply(g, va_inverse(g, h), x), h);
}

bool va_member(const VASubset& u, const VAElement& e) {
  for (const VAComponent& c : u.components) {
    if (c.coset == e.coset && sls_member(c.set, e.n)) return true;
  }
  return false;
}

// (h s)^{-1} (n b) (h s) = [n + h(Q_b^{-1} - I)] Q_s . s^{-1} b s.
VASubset alpha_va(const VAPresentation& g, const VASubset& u) {
  std::vector<VAComponent> parts;
  for (const VAComponent& c : u.components) {
    const SemilinearSet w = sls_sum(c.set, lattice_image(g.q[c.coset]));
    for (std::size_t s = 0; s < g.cosets(); ++s) {
      const VAElement twist = va_conjugate(g, VAElement{Vec(g.m, 0), c.coset}, VAElement{Vec(g.m, 0), s});
      parts.push_back({sls_shift(sls_image(w, g.q[s]), twist.n), twist.coset});
    }
  }
  return merge_by_coset(g, std::move(parts));
}

SemilinearSet alpha_abelian_subset(const VAPresentation& g, const SemilinearSet& u) {
  SemilinearSet out{g.m, {}};
  for (const Matrix& q : g.q) out = sls_union(out, sls_image(u, q));
  return out;
}

std::set<VAElement> va_box(const VAPresentation& g, const VASubset& u, std::int64_t r) {
  std::set<VAElement> out;
  for (const Vec& n : box_points(g.m, r)) {
    for (const VAComponent& c : u.components) {
      if (sls_member(c.set, n)) out.insert({n, c.coset});
    }
  }
  return out;
}

std::set<VAElement> va_brute_ball(const VAPresentation& g, const VASubset& u, std::int64_t source_r,
                                  std::int64_t conj_r) {
  const std::set<VAElement> sources = va_box(g, u, source_r);
  const std::vector<Vec> shifts = box_points(g.m, conj_r);
  std::set<VAElement> out;
  for (const VAElement& x : sources) {
    for (std::size_t s = 0; s < g.cosets(); ++s) {
      for (const Vec& h : shifts) out.insert(va_conjugate(g, x, VAElement{h, s}));
    }
  }
  return out;
}

std::string to_string(const VAPresentation& g, const VAElement& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.n.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(e.n[i]);
  }
  out += ").";
  out += e.coset < g.names.size() ? g.names[e.coset] : std::to_string(e.coset);
  return out;
}

}  // namespace conjlang

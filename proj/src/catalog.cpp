#include "gpg/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "gpg/numeric.hpp"

namespace gpg {

namespace {

constexpr std::uint64_t kMaxBuildOrder = 4096;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadParameters, what); }

std::string join(const std::vector<std::uint64_t>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Order implied by the parameters, checked against the family's domain.
// nullopt for external tables.
std::optional<std::uint64_t> checked_order(const GroupSpec& s) {
  const auto& p = s.params;
  auto need = [&](std::size_t k) {
    if (p.size() != k) bad(s.to_text() + ": expected " + std::to_string(k) + " parameter(s)");
  };
  std::uint64_t order = 0;
  switch (s.family) {
    case Family::Cyclic:
      need(1);
      if (p[0] < 1) bad("cyclic order must be >= 1");
      order = p[0];
      break;
    case Family::Abelian:
      if (p.empty()) bad("abelian needs at least one factor");
      order = 1;
      for (auto f : p) {
        if (f < 1) bad("abelian factors must be >= 1");
        order *= f;
        if (order > kMaxBuildOrder) break;
      }
      break;
    case Family::ElementaryAbelian:
      need(2);
      if (!is_prime(p[0])) bad("elementary abelian needs a prime, got " + std::to_string(p[0]));
      if (p[1] < 1) bad("elementary abelian rank must be >= 1");
      order = 1;
      for (std::uint64_t i = 0; i < p[1] && order <= kMaxBuildOrder; ++i) order *= p[0];
      break;
    case Family::Dihedral:
      need(1);
      if (p[0] < 1) bad("dihedral needs m >= 1");
      order = 2 * p[0];
      break;
    case Family::Dicyclic:
      need(1);
      if (p[0] < 2) bad("dicyclic needs m >= 2");
      order = 4 * p[0];
      break;
    case Family::GeneralizedQuaternion:
      need(1);
      if (!is_power_of_two(p[0]) || p[0] < 8) bad("generalized quaternion order must be 2^k with k >= 3");
      order = p[0];
      break;
    case Family::Heisenberg:
      need(1);
      if (!is_prime(p[0])) bad("heisenberg needs a prime, got " + std::to_string(p[0]));
      order = p[0] > 16 ? kMaxBuildOrder + 1 : p[0] * p[0] * p[0];
      break;
    case Family::Symmetric:
      need(1);
      if (p[0] < 1 || p[0] > 6) bad("symmetric degree must be in [1, 6]");
      order = 1;
      for (std::uint64_t k = 2; k <= p[0]; ++k) order *= k;
      break;
    case Family::DirectProduct: {
      if (s.factors.size() != 2) bad("product needs exactly two factors");
      auto a = checked_order(s.factors[0]);
      auto b = checked_order(s.factors[1]);
      if (!a || !b) return std::nullopt;
      order = *a * *b;
      break;
    }
    case Family::ExternalTable:
      if (s.path.empty()) bad("file spec needs a path");
      return std::nullopt;
  }
  if (order > kMaxBuildOrder) {
    throw Error(ErrorKind::TooLarge, s.to_text() + " exceeds the order limit " + std::to_string(kMaxBuildOrder));
  }
  return order;
}

// --- constructors. Tables are correct by construction and built Trusted. ---

FiniteGroup make_cyclic(std::uint64_t n) {
  std::vector<Element> t(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) t[a * n + b] = Element((a + b) % n);
  return validate_and_build(std::move(t), n, Validation::Trusted);
}

// r^i -> i, s r^i -> m + i
FiniteGroup make_dihedral(std::uint64_t m) {
  const std::uint64_t n = 2 * m;
  std::vector<Element> t(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t i = x % m, j = y % m;
      const bool sx = x >= m, sy = y >= m;
      std::uint64_t z;
      if (!sx && !sy) z = (i + j) % m;
      else if (!sx && sy) z = m + (j + m - i) % m;  // r^i s r^j = s r^{j-i}
      else if (sx && !sy) z = m + (i + j) % m;
      else z = (j + m - i) % m;  // s r^i s r^j = r^{j-i}
      t[x * n + y] = Element(z);
    }
  }
  return validate_and_build(std::move(t), n, Validation::Trusted);
}

// a^i b^e -> i + 2m e, with a^{2m} = 1, b^2 = a^m, b a = a^{-1} b.
FiniteGroup make_dicyclic(std::uint64_t m) {
  const std::uint64_t k = 2 * m, n = 4 * m;
  std::vector<Element> t(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t i = x % k, j = y % k, e = x / k, f = y / k;
      std::uint64_t exp_a, exp_b;
      if (e == 0) {
        exp_a = (i + j) % k;
        exp_b = f;
      } else if (f == 0) {
        exp_a = (i + k - j) % k;
        exp_b = 1;
      } else {
        exp_a = (i + k - j + m) % k;
        exp_b = 0;
      }
      t[x * n + y] = Element(exp_a + k * exp_b);
    }
  }
  return validate_and_build(std::move(t), n, Validation::Trusted);
}

// Upper unitriangular [[1,a,c],[0,1,b],[0,0,1]] over F_p, index (a p + b) p + c.
FiniteGroup make_heisenberg(std::uint64_t p) {
  const std::uint64_t n = p * p * p;
  std::vector<Element> t(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t a1 = x / (p * p), b1 = (x / p) % p, c1 = x % p;
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const std::uint64_t a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
      t[x * n + y] = Element((a * p + b) * p + c);
    }
  }
  return validate_and_build(std::move(t), n, Validation::Trusted);
}

FiniteGroup make_symmetric(std::uint64_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    Permutation swap(degree), cycle(degree);
    for (std::uint32_t i = 0; i < degree; ++i) {
      swap[i] = i;
      cycle[i] = std::uint32_t((i + 1) % degree);
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, cycle};
  }
  return closure_from_permutations(degree, gens);
}

FiniteGroup make_abelian(const std::vector<std::uint64_t>& factors) {
  FiniteGroup g = make_cyclic(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, make_cyclic(factors[i]));
  return g;
}

FiniteGroup load_table(const std::string& path, const BuildOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  RawTable raw = read_cayley_table(in);
  if (raw.n > kFullValidationLimit && !options.trust) {
    throw Error(ErrorKind::TooLarge, path + ": order " + std::to_string(raw.n) +
                                         " is above the associativity-check limit; pass --trust to skip it");
  }
  return validate_and_build(std::move(raw.entries), raw.n,
                            raw.n > kFullValidationLimit ? Validation::Trusted : Validation::Full);
}

std::vector<std::uint64_t> parse_uints(std::string_view s, const std::string& context) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    auto tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        tok.size() > 18) {
      throw Error(ErrorKind::Parse, "bad integer list in '" + context + "'");
    }
    out.push_back(std::stoull(std::string(tok)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Splits "(A)x(B)x(C)" into its parenthesized operands.
std::vector<std::string_view> split_product(std::string_view s, const std::string& context) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] != '(') throw Error(ErrorKind::Parse, "expected '(' in '" + context + "'");
    int depth = 0;
    std::size_t end = pos;
    for (; end < s.size(); ++end) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')' && --depth == 0) break;
    }
    if (end >= s.size()) throw Error(ErrorKind::Parse, "unbalanced parentheses in '" + context + "'");
    out.push_back(s.substr(pos + 1, end - pos - 1));
    pos = end + 1;
    if (pos == s.size()) break;
    if (s[pos] != 'x') throw Error(ErrorKind::Parse, "expected 'x' between factors in '" + context + "'");
    ++pos;
  }
  if (out.size() < 2) throw Error(ErrorKind::Parse, "product needs at least two factors: '" + context + "'");
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::cyclic(std::uint64_t n) { return {Family::Cyclic, {n}, {}, {}}; }
GroupSpec GroupSpec::abelian(std::vector<std::uint64_t> f) { return {Family::Abelian, std::move(f), {}, {}}; }
GroupSpec GroupSpec::elementary_abelian(std::uint64_t p, std::uint64_t rank) {
  return {Family::ElementaryAbelian, {p, rank}, {}, {}};
}
GroupSpec GroupSpec::dihedral(std::uint64_t m) { return {Family::Dihedral, {m}, {}, {}}; }
GroupSpec GroupSpec::dicyclic(std::uint64_t m) { return {Family::Dicyclic, {m}, {}, {}}; }
GroupSpec GroupSpec::generalized_quaternion(std::uint64_t order) {
  return {Family::GeneralizedQuaternion, {order}, {}, {}};
}
GroupSpec GroupSpec::heisenberg(std::uint64_t p) { return {Family::Heisenberg, {p}, {}, {}}; }
GroupSpec GroupSpec::symmetric(std::uint64_t n) { return {Family::Symmetric, {n}, {}, {}}; }
GroupSpec GroupSpec::product(GroupSpec left, GroupSpec right) {
  return {Family::DirectProduct, {}, {}, {std::move(left), std::move(right)}};
}
GroupSpec GroupSpec::file(std::string path) { return {Family::ExternalTable, {}, std::move(path), {}}; }

GroupSpec GroupSpec::parse(std::string_view text) {
  const std::string context(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::Parse, "missing ':' in '" + context + "'");
  const std::string_view tag = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);

  GroupSpec spec;
  if (tag == "file") {
    if (rest.empty()) throw Error(ErrorKind::Parse, "file spec needs a path");
    return file(std::string(rest));
  }
  if (tag == "product") {
    auto parts = split_product(rest, context);
    spec = product(parse(parts[0]), parse(parts[1]));
    for (std::size_t i = 2; i < parts.size(); ++i) spec = product(std::move(spec), parse(parts[i]));
    checked_order(spec);
    return spec;
  }

  static const std::map<std::string_view, Family> kTags{
      {"cyclic", Family::Cyclic},         {"abelian", Family::Abelian},
      {"elementary", Family::ElementaryAbelian}, {"dihedral", Family::Dihedral},
      {"dicyclic", Family::Dicyclic},     {"gq", Family::GeneralizedQuaternion},
      {"heisenberg", Family::Heisenberg}, {"symmetric", Family::Symmetric},
  };
  auto it = kTags.find(tag);
  if (it == kTags.end()) throw Error(ErrorKind::Parse, "unknown group family '" + std::string(tag) + "'");
  spec.family = it->second;
  spec.params = parse_uints(rest, context);
  checked_order(spec);
  return spec;
}

std::string GroupSpec::to_text() const {
  switch (family) {
    case Family::Cyclic: return "cyclic:" + join(params, ",");
    case Family::Abelian: return "abelian:" + join(params, ",");
    case Family::ElementaryAbelian: return "elementary:" + join(params, ",");
    case Family::Dihedral: return "dihedral:" + join(params, ",");
    case Family::Dicyclic: return "dicyclic:" + join(params, ",");
    case Family::GeneralizedQuaternion: return "gq:" + join(params, ",");
    case Family::Heisenberg: return "heisenberg:" + join(params, ",");
    case Family::Symmetric: return "symmetric:" + join(params, ",");
    case Family::DirectProduct: {
      // Left-nested products print flat: (A)x(B)x(C).
      std::string left = factors[0].family == Family::DirectProduct
                             ? factors[0].to_text().substr(std::string("product:").size())
                             : "(" + factors[0].to_text() + ")";
      return "product:" + left + "x(" + factors[1].to_text() + ")";
    }
    case Family::ExternalTable: return "file:" + path;
  }
  return {};
}

std::string GroupSpec::name() const {
  auto p0 = [&] { return params.empty() ? std::string("?") : std::to_string(params[0]); };
  switch (family) {
    case Family::Cyclic: return "Z_" + p0();
    case Family::Abelian: {
      std::string out;
      for (std::size_t i = 0; i < params.size(); ++i) out += (i ? " x Z_" : "Z_") + std::to_string(params[i]);
      return out;
    }
    case Family::ElementaryAbelian:
      return params.size() == 2 ? "Z_" + std::to_string(params[0]) + "^" + std::to_string(params[1]) : "?";
    case Family::Dihedral: return params.empty() ? "?" : "D_" + std::to_string(2 * params[0]);
    case Family::Dicyclic: return "Dic_" + p0();
    case Family::GeneralizedQuaternion: return "Q_" + p0();
    case Family::Heisenberg: return "Heis(" + p0() + ")";
    case Family::Symmetric: return "S_" + p0();
    case Family::DirectProduct: return factors[0].name() + " x " + factors[1].name();
    case Family::ExternalTable: return "file(" + path + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Construction

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right) {
  const std::size_t a = left.order(), b = right.order(), n = a * b;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Element x1 = Element(x / b), x2 = Element(x % b);
    for (std::size_t y = 0; y < n; ++y) {
      const Element y1 = Element(y / b), y2 = Element(y % b);
      t[x * n + y] = Element(std::size_t(left.mul(x1, y1)) * b + right.mul(x2, y2));
    }
  }
  return validate_and_build(std::move(t), n, Validation::Trusted);
}

FiniteGroup build(const GroupSpec& spec, const BuildOptions& options) {
  checked_order(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Cyclic: return make_cyclic(p[0]);
    case Family::Abelian: return make_abelian(p);
    case Family::ElementaryAbelian: return make_abelian(std::vector<std::uint64_t>(p[1], p[0]));
    case Family::Dihedral: return make_dihedral(p[0]);
    case Family::Dicyclic: return make_dicyclic(p[0]);
    case Family::GeneralizedQuaternion: return make_dicyclic(p[0] / 4);
    case Family::Heisenberg: return make_heisenberg(p[0]);
    case Family::Symmetric: return make_symmetric(p[0]);
    case Family::DirectProduct:
      return direct_product(build(spec.factors[0], options), build(spec.factors[1], options));
    case Family::ExternalTable: return load_table(spec.path, options);
  }
  bad("unknown family");
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  auto orders = g.element_orders();
  f.element_orders.assign(orders.begin(), orders.end());
  std::sort(f.element_orders.begin(), f.element_orders.end());
  f.abelian = g.is_abelian();
  return f;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<GroupSpec> enumerate_abelian_up_to(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    const auto primes = factorize(n);
    if (primes.empty()) {
      out.push_back(GroupSpec::cyclic(1));
      continue;
    }
    std::vector<std::vector<std::vector<unsigned>>> choices;
    for (auto [p, e] : primes) choices.push_back(partitions(e));

    // Mixed-radix walk over one partition per prime.
    std::vector<std::size_t> pick(primes.size(), 0);
    while (true) {
      std::size_t rank = 0;
      for (std::size_t i = 0; i < primes.size(); ++i) rank = std::max(rank, choices[i][pick[i]].size());
      std::vector<std::uint64_t> invariant(rank, 1);
      for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& part = choices[i][pick[i]];
        for (std::size_t k = 0; k < part.size(); ++k) invariant[k] *= ipow(primes[i].first, part[k]);
      }
      out.push_back(invariant.size() == 1 ? GroupSpec::cyclic(invariant[0]) : GroupSpec::abelian(invariant));

      std::size_t i = primes.size();
      while (i > 0) {
        --i;
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
        if (i == 0) {
          i = primes.size() + 1;
          break;
        }
      }
      if (i == primes.size() + 1) break;
    }
  }
  return out;
}

namespace {

std::uint64_t spec_order(const GroupSpec& s) { return *checked_order(s); }

std::vector<GroupSpec> named_nonabelian_up_to(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t m = 3; 2 * m <= max_order; ++m) out.push_back(GroupSpec::dihedral(m));
  for (std::uint64_t q = 8; q <= max_order; q *= 2) out.push_back(GroupSpec::generalized_quaternion(q));
  for (std::uint64_t m = 3; 4 * m <= max_order; ++m) {
    if (!is_power_of_two(m)) out.push_back(GroupSpec::dicyclic(m));
  }
  for (std::uint64_t p = 2; p * p * p <= max_order; ++p) {
    if (is_prime(p)) out.push_back(GroupSpec::heisenberg(p));
  }
  for (std::uint64_t d = 3, fact = 6; d <= 6 && fact <= max_order; ++d, fact *= d) {
    out.push_back(GroupSpec::symmetric(d));
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> build_catalog(std::uint64_t max_order, const CatalogOptions& options) {
  std::vector<GroupSpec> candidates = enumerate_abelian_up_to(max_order);
  const std::size_t abelian_count = candidates.size();
  const auto named = named_nonabelian_up_to(max_order);
  candidates.insert(candidates.end(), named.begin(), named.end());
  for (const auto& x : named) {
    const std::uint64_t nx = spec_order(x);
    for (std::size_t i = 1; i < abelian_count; ++i) {  // index 0 is the trivial group
      const GroupSpec& a = candidates[i];
      if (nx * spec_order(a) <= max_order) candidates.push_back(GroupSpec::product(x, a));
    }
  }

  std::vector<std::optional<FiniteGroup>> groups(candidates.size());
  std::vector<Fingerprint> prints(candidates.size());
  const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    groups[i] = build(candidates[i]);
    if (options.dedupe) prints[i] = fingerprint(*groups[i]);
  }

  std::vector<CatalogEntry> out;
  std::map<Fingerprint, std::size_t> seen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (options.dedupe && !seen.emplace(std::move(prints[i]), i).second) continue;
    out.push_back(CatalogEntry{std::move(candidates[i]), std::move(*groups[i])});
  }
  return out;
}

std::vector<GroupSpec> catalog_up_to(std::uint64_t max_order, const CatalogOptions& options) {
  std::vector<GroupSpec> out;
  for (auto& e : build_catalog(max_order, options)) out.push_back(std::move(e.spec));
  return out;
}

}  // namespace gpg

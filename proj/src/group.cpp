#include "gpg/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "gpg/numeric.hpp"

namespace gpg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SameElement: return "SameElement";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ConventionUnsupported: return "ConventionUnsupported";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool ElementSet::contains(Element g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out;
  std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end(),
                        std::back_inserter(out.elements_));
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

// ---------------------------------------------------------------------------
// Associativity

std::optional<AssociativityWitness> find_associativity_violation_serial(std::span<const Element> t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          return AssociativityWitness{Element(a), Element(b), Element(c)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<AssociativityWitness> find_associativity_violation(std::span<const Element> t, std::size_t n) {
  // Per-row first violation, so the reported witness does not depend on the
  // schedule.
  constexpr std::int64_t kNone = -1;
  std::vector<std::int64_t> first_bad(n, kNone);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < n && first_bad[a] == kNone; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          first_bad[a] = static_cast<std::int64_t>(b * n + c);
          break;
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (first_bad[a] != kNone) {
      const auto bc = static_cast<std::size_t>(first_bad[a]);
      return AssociativityWitness{Element(a), Element(bc / n), Element(bc % n)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Construction

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Element> table, std::vector<Element> inverses)
    : n_(n), table_(std::move(table)), inverses_(std::move(inverses)), cache_(std::make_shared<OrderCache>()) {}

FiniteGroup validate_and_build(std::vector<Element> table, std::size_t n, Validation mode) {
  if (n == 0) throw Error(ErrorKind::BadParameters, "empty table");
  if (table.size() != n * n) {
    throw Error(ErrorKind::BadParameters, "table has " + std::to_string(table.size()) + " entries, expected " +
                                              std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw Error(ErrorKind::NotClosed, "entry (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                                            ") = " + std::to_string(table[i]) + " is outside [0, n)");
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) {
      ok = table[e * n + g] == g && table[g * n + e] == g;
    }
    if (ok) identity = Element(e);
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no element acts as a two-sided identity");
  const Element e = *identity;

  std::vector<Element> inverses(n);
  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h) {
      if (table[g * n + h] == e && table[h * n + g] == e) {
        inverses[g] = Element(h);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::NoInverse, "element " + std::to_string(g) + " has no two-sided inverse");
  }

  if (mode == Validation::Full) {
    if (auto w = find_associativity_violation(table, n)) {
      throw Error(ErrorKind::NotAssociative, "(" + std::to_string(w->a) + "*" + std::to_string(w->b) + ")*" +
                                                 std::to_string(w->c) + " != " + std::to_string(w->a) + "*(" +
                                                 std::to_string(w->b) + "*" + std::to_string(w->c) + ")");
    }
  }

  if (e != 0) {
    // Swap labels 0 and e.
    auto relabel = [e](Element x) -> Element { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<Element> moved(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        moved[relabel(Element(a)) * n + relabel(Element(b))] = relabel(table[a * n + b]);
      }
    }
    table = std::move(moved);
    std::vector<Element> inv(n);
    for (std::size_t g = 0; g < n; ++g) inv[relabel(Element(g))] = relabel(inverses[g]);
    inverses = std::move(inv);
  }
  return FiniteGroup(n, std::move(table), std::move(inverses));
}

FiniteGroup validate_and_build(const std::vector<std::vector<Element>>& rows, Validation mode) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw Error(ErrorKind::BadParameters, "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                                " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return validate_and_build(std::move(flat), n, mode);
}

// ---------------------------------------------------------------------------
// Queries

void FiniteGroup::check_index(Element g) const {
  if (g >= n_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(g) + " not in group of order " + std::to_string(n_));
  }
}

Element FiniteGroup::inverse(Element g) const {
  check_index(g);
  return inverses_[g];
}

std::span<const Element> FiniteGroup::row(Element g) const {
  check_index(g);
  return std::span<const Element>(table_).subspan(std::size_t(g) * n_, n_);
}

std::uint32_t FiniteGroup::element_order(Element g) const {
  check_index(g);
  std::uint32_t k = 1;
  for (Element x = g; x != identity(); x = mul(x, g)) ++k;
  return k;
}

std::span<const std::uint32_t> FiniteGroup::element_orders() const {
  std::call_once(cache_->once, [this] {
    std::vector<std::uint32_t> orders(n_);
    for (std::size_t g = 0; g < n_; ++g) orders[g] = element_order(Element(g));
    cache_->orders = std::move(orders);
  });
  return cache_->orders;
}

ElementSet FiniteGroup::cyclic_subgroup(Element g) const {
  check_index(g);
  std::vector<Element> powers{identity()};
  for (Element x = g; x != identity(); x = mul(x, g)) powers.push_back(x);
  return ElementSet(std::move(powers));
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : element_orders()) e = std::lcm(e, std::uint64_t(o));
  return e;
}

std::optional<std::uint64_t> FiniteGroup::p_group_prime() const { return prime_power_base(n_); }

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_cyclic() const {
  const auto orders = element_orders();
  return std::any_of(orders.begin(), orders.end(), [this](std::uint32_t o) { return o == n_; });
}

std::vector<ElementSet> FiniteGroup::subgroups_of_order_p(std::uint64_t p) const {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const auto orders = element_orders();
  std::vector<ElementSet> out;
  for (std::size_t g = 0; g < n_; ++g) {
    if (orders[g] != p) continue;
    ElementSet s = cyclic_subgroup(Element(g));
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet FiniteGroup::centralizer(Element x) const {
  check_index(x);
  std::vector<Element> out;
  for (std::size_t g = 0; g < n_; ++g) {
    if (mul(Element(g), x) == mul(x, Element(g))) out.push_back(Element(g));
  }
  return ElementSet(std::move(out));
}

ElementSet FiniteGroup::center() const {
  std::vector<Element> out;
  for (std::size_t g = 0; g < n_; ++g) {
    bool central = true;
    for (std::size_t h = 0; h < n_ && central; ++h) {
      central = table_[g * n_ + h] == table_[h * n_ + g];
    }
    if (central) out.push_back(Element(g));
  }
  return ElementSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Permutation closure

FiniteGroup closure_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                      std::size_t cap) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& p = generators[i];
    std::vector<bool> seen(degree, false);
    bool ok = p.size() == degree;
    for (std::size_t k = 0; ok && k < p.size(); ++k) {
      ok = p[k] < degree && !seen[p[k]];
      if (ok) seen[p[k]] = true;
    }
    if (!ok) {
      throw Error(ErrorKind::NotAPermutation,
                  "generator " + std::to_string(i) + " is not a bijection on [0, " + std::to_string(degree) + ")");
    }
  }

  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(elements[head], gen);
      if (index.contains(next)) continue;
      if (elements.size() >= cap) {
        throw Error(ErrorKind::OrderCapExceeded, "generated group exceeds order cap " + std::to_string(cap));
      }
      index.emplace(next, Element(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  }
  // Composition is associative, so only the cheap checks run.
  return validate_and_build(std::move(table), n, Validation::Trusted);
}

// ---------------------------------------------------------------------------
// Text format

RawTable read_cayley_table(std::istream& in) {
  std::vector<long long> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        values.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
      }
    }
  }
  if (values.empty()) throw Error(ErrorKind::Parse, "missing order line");
  if (values.front() < 1) throw Error(ErrorKind::Parse, "order must be positive");
  RawTable raw;
  raw.n = static_cast<std::size_t>(values.front());
  if (values.size() - 1 != raw.n * raw.n) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(raw.n * raw.n) + " table entries, found " +
                                      std::to_string(values.size() - 1));
  }
  raw.entries.reserve(raw.n * raw.n);
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= static_cast<long long>(raw.n)) {
      throw Error(ErrorKind::NotClosed, "entry " + std::to_string(values[i]) + " is outside [0, n)");
    }
    raw.entries.push_back(static_cast<Element>(values[i]));
  }
  return raw;
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    auto r = g.row(Element(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << r[b];
    }
    out << '\n';
  }
}

}  // namespace gpg

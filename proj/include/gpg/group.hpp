#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "gpg/error.hpp"

namespace gpg {

using Element = std::uint32_t;

// Sorted, duplicate-free set of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  // Sorts and dedupes.
  explicit ElementSet(std::vector<Element> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(Element g) const;
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  ElementSet intersect(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) { return a.elements_ <=> b.elements_; }

 private:
  std::vector<Element> elements_;
};

enum class Validation {
  Full,     // associativity checked (O(n^3))
  Trusted,  // closure, identity and inverses only
};

struct AssociativityWitness {
  Element a, b, c;
};

// Immutable finite group given by its Cayley table. The identity is always
// element 0. Copies share the element-order cache.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t(a) * n_ + b]; }
  Element inverse(Element g) const;
  std::span<const Element> row(Element g) const;
  std::span<const Element> table() const noexcept { return table_; }

  // Smallest k >= 1 with g^k = identity.
  std::uint32_t element_order(Element g) const;
  // All element orders, computed once and cached.
  std::span<const std::uint32_t> element_orders() const;

  ElementSet cyclic_subgroup(Element g) const;
  std::uint64_t exponent() const;
  // Prime p when |G| = p^k, k >= 1. The trivial group returns nullopt.
  std::optional<std::uint64_t> p_group_prime() const;
  bool is_abelian() const;
  bool is_cyclic() const;

  std::vector<ElementSet> subgroups_of_order_p(std::uint64_t p) const;
  ElementSet center() const;
  ElementSet centralizer(Element x) const;

  friend FiniteGroup validate_and_build(std::vector<Element> table, std::size_t n, Validation mode);

 private:
  struct OrderCache {
    std::once_flag once;
    std::vector<std::uint32_t> orders;
  };

  FiniteGroup(std::size_t n, std::vector<Element> table, std::vector<Element> inverses);
  void check_index(Element g) const;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::shared_ptr<OrderCache> cache_;
};

// Checks closure, identity, inverses and (in Full mode) associativity, then
// relabels so the identity sits at index 0. `table` is row-major n*n.
FiniteGroup validate_and_build(std::vector<Element> table, std::size_t n, Validation mode = Validation::Full);
FiniteGroup validate_and_build(const std::vector<std::vector<Element>>& rows, Validation mode = Validation::Full);

// First violation of (ab)c = a(bc) in lexicographic (a, b, c) order.
// OpenMP over `a`; the serial version is the reference used by the tests.
std::optional<AssociativityWitness> find_associativity_violation(std::span<const Element> table, std::size_t n);
std::optional<AssociativityWitness> find_associativity_violation_serial(std::span<const Element> table,
                                                                        std::size_t n);

using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultClosureCap = 2048;

// Group generated by permutations of [0, degree). Elements are indexed in
// breadth-first discovery order, identity first. Product is composition
// (a*b)(x) = a(b(x)).
FiniteGroup closure_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                      std::size_t cap = kDefaultClosureCap);

// Text format: n, then n rows of n indices; '#' starts a comment line.
struct RawTable {
  std::size_t n = 0;
  std::vector<Element> entries;
};
RawTable read_cayley_table(std::istream& in);
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

}  // namespace gpg

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpg/group.hpp"

namespace gpg {

enum class Family {
  Cyclic,
  Abelian,
  ElementaryAbelian,
  Dihedral,
  Dicyclic,
  GeneralizedQuaternion,
  Heisenberg,
  Symmetric,
  DirectProduct,
  ExternalTable,
};

// Serializable description of a group. Text forms:
//   cyclic:12  abelian:4,2  elementary:3,2  dihedral:4  dicyclic:3  gq:16
//   heisenberg:3  symmetric:4  product:(dihedral:4)x(cyclic:3)  file:path.tbl
// dihedral:m has order 2m, dicyclic:m order 4m, gq:N order N = 2^k,
// elementary:p,k is (Z_p)^k.
struct GroupSpec {
  Family family = Family::Cyclic;
  std::vector<std::uint64_t> params;
  std::string path;                // ExternalTable only
  std::vector<GroupSpec> factors;  // DirectProduct only, two entries

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec abelian(std::vector<std::uint64_t> factors);
  static GroupSpec elementary_abelian(std::uint64_t p, std::uint64_t rank);
  static GroupSpec dihedral(std::uint64_t m);
  static GroupSpec dicyclic(std::uint64_t m);
  static GroupSpec generalized_quaternion(std::uint64_t order);
  static GroupSpec heisenberg(std::uint64_t p);
  static GroupSpec symmetric(std::uint64_t n);
  static GroupSpec product(GroupSpec left, GroupSpec right);
  static GroupSpec file(std::string path);

  static GroupSpec parse(std::string_view text);
  std::string to_text() const;
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct BuildOptions {
  // Skip associativity checking for external tables larger than 256.
  bool trust = false;
};

inline constexpr std::size_t kFullValidationLimit = 256;

FiniteGroup build(const GroupSpec& spec, const BuildOptions& options = {});

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right);

// Cheap isomorphism invariant used for catalog dedupe.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::uint32_t> element_orders;  // sorted
  bool abelian = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

// Integer partitions of n, each in non-increasing order.
std::vector<std::vector<unsigned>> partitions(unsigned n);

// One spec per isomorphism class of abelian groups of order 1..max_order,
// in order of group order. Cyclic classes come out as `cyclic:n`, the rest
// as `abelian:` with invariant factors in decreasing order.
std::vector<GroupSpec> enumerate_abelian_up_to(std::uint64_t max_order);

struct CatalogOptions {
  bool dedupe = true;
};

struct CatalogEntry {
  GroupSpec spec;
  FiniteGroup group;
};

// Abelian enumeration, then the named non-abelian families (dihedral,
// generalized quaternion, dicyclic, Heisenberg, symmetric) and their direct
// products with non-trivial abelian groups. Dedupe keeps the first member of
// each fingerprint class. Not every group of a given order is present.
std::vector<CatalogEntry> build_catalog(std::uint64_t max_order, const CatalogOptions& options = {});
std::vector<GroupSpec> catalog_up_to(std::uint64_t max_order, const CatalogOptions& options = {});

}  // namespace gpg

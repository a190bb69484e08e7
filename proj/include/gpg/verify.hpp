#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gpg/catalog.hpp"
#include "gpg/powergraph.hpp"

namespace gpg {

enum class TheoremId { T2_2, T3_1, T3_4, L4_1, L4_2, L4_3, T4_4, T5_1, T5_2, PruferShadow };

const char* to_string(TheoremId id);

enum class Verdict {
  Confirmed,
  // No counterexamples, but some groups fail under this convention while
  // passing under the punctured one.
  ConventionDiscrepancy,
  CounterexamplesFound,
  NotApplicable,
};

const char* to_string(Verdict v);

struct Finding {
  GroupSpec group;
  std::string observed;
  std::string expected;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::T2_2;
  VertexConvention convention = VertexConvention::Punctured;
  std::size_t groups_tested = 0;
  std::uint64_t max_order = 0;
  Verdict verdict = Verdict::NotApplicable;
  bool catalog_relative = false;
  std::vector<Finding> counterexamples;
  std::vector<Finding> discrepancies;
  std::vector<std::string> notes;
  double runtime_ms = 0.0;
};

// Result of checking one theorem's property on one group.
struct Outcome {
  bool holds = true;
  std::string observed;
  std::string expected;
};

// The per-group property behind each theorem. Deterministic in its inputs,
// so a recorded finding can be reproduced by rebuilding its group.
Outcome evaluate(TheoremId id, const GroupSpec& spec, const FiniteGroup& group, VertexConvention c);

// Runs the checks over one catalog, built once.
class Verifier {
 public:
  explicit Verifier(std::uint64_t max_order, const CatalogOptions& options = {});

  std::uint64_t max_order() const noexcept { return max_order_; }
  const std::vector<CatalogEntry>& catalog() const noexcept { return catalog_; }

  TheoremReport check_completeness_abelian(VertexConvention c) const;
  TheoremReport check_completeness_nonabelian(VertexConvention c) const;
  TheoremReport check_pgroup_components(VertexConvention c) const;
  // Four primes, a prime >= 7, allowed prime sets; in that order.
  std::vector<TheoremReport> check_planarity_prime_lemmas(VertexConvention c) const;
  TheoremReport check_abelian_planarity_classification(VertexConvention c) const;
  // Odd p-groups first, then 2-groups.
  std::vector<TheoremReport> check_nonabelian_pgroup_planarity(VertexConvention c) const;
  // Truncations Z_{p^k} <= max_order for p in {2, 3, 5, 7}.
  TheoremReport check_prufer_shadow(VertexConvention c) const;

  // Every check for every convention, ordered by (theorem, convention).
  std::vector<TheoremReport> run_all(const std::vector<VertexConvention>& conventions) const;

 private:
  struct Subject {
    GroupSpec spec;
    std::shared_ptr<const FiniteGroup> group;
  };

  std::vector<Subject> select(bool (*keep)(const FiniteGroup&)) const;
  void add_targeted(std::vector<Subject>& subjects, const std::vector<GroupSpec>& specs) const;
  TheoremReport run(TheoremId id, VertexConvention c, const std::vector<Subject>& subjects,
                    bool catalog_relative) const;

  std::uint64_t max_order_;
  std::vector<CatalogEntry> catalog_;
};

// Truncation chain Z_p, ..., Z_{p^depth}; requires p^depth <= 4096.
TheoremReport check_prufer_shadow(std::uint64_t p, unsigned depth, VertexConvention c);

std::vector<TheoremReport> run_all(std::uint64_t max_order, const std::vector<VertexConvention>& conventions,
                                   const CatalogOptions& options = {});

// True when any report under the punctured convention found counterexamples.
bool has_punctured_counterexamples(const std::vector<TheoremReport>& reports);

struct JsonOptions {
  bool include_runtime = false;  // off by default so output is reproducible
  int indent = 2;
};

std::string reports_to_json(const std::vector<TheoremReport>& reports, const JsonOptions& options = {});

}  // namespace gpg

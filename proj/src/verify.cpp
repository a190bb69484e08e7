#include "gpg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "json.hpp"

#include "gpg/numeric.hpp"
#include "gpg/planarity.hpp"

namespace gpg {

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T2_2: return "T2.2";
    case TheoremId::T3_1: return "T3.1";
    case TheoremId::T3_4: return "T3.4";
    case TheoremId::L4_1: return "L4.1";
    case TheoremId::L4_2: return "L4.2";
    case TheoremId::L4_3: return "L4.3";
    case TheoremId::T4_4: return "T4.4";
    case TheoremId::T5_1: return "T5.1";
    case TheoremId::T5_2: return "T5.2";
    case TheoremId::PruferShadow: return "PruferShadow";
  }
  return "Unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::ConventionDiscrepancy: return "ConventionDiscrepancy";
    case Verdict::CounterexamplesFound: return "CounterexamplesFound";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

namespace {

std::string set_text(const std::vector<std::uint64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

const char* planar_text(bool planar) { return planar ? "planar" : "non-planar"; }
const char* complete_text(bool complete) { return complete ? "complete" : "not complete"; }

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool is_generalized_quaternion(const GroupSpec& spec, const FiniteGroup& g) {
  switch (spec.family) {
    case Family::GeneralizedQuaternion: return true;
    case Family::Dicyclic: return is_power_of_two(spec.params.at(0));
    case Family::ExternalTable: {
      // Non-cyclic 2-group with a single involution.
      if (!is_power_of_two(g.order()) || g.order() < 8 || g.is_cyclic()) return false;
      const auto orders = g.element_orders();
      return std::count(orders.begin(), orders.end(), 2u) == 1;
    }
    default: return false;
  }
}

bool is_elementary_abelian(const FiniteGroup& g, std::uint64_t p) {
  return g.is_abelian() && g.p_group_prime() == p && g.exponent() == p;
}

// Membership in the five planar families of the abelian classification.
bool in_planar_abelian_families(const FiniteGroup& g) {
  if (is_elementary_abelian(g, 2) || is_elementary_abelian(g, 3) || is_elementary_abelian(g, 5)) return true;
  return g.is_cyclic() && (g.order() == 4 || g.order() == 6);
}

const Fingerprint& d8_fingerprint() {
  static const Fingerprint fp = fingerprint(build(GroupSpec::dihedral(4)));
  return fp;
}

Outcome completeness_iff(bool complete, bool expected, const char* family) {
  Outcome o;
  o.holds = complete == expected;
  o.observed = complete_text(complete);
  o.expected = std::string(complete_text(expected)) + (expected ? " (is " : " (is not ") + family + ")";
  if (!o.holds) o.expected += expected ? "; 'if' direction fails" : "; 'only if' direction fails";
  return o;
}

}  // namespace

Outcome evaluate(TheoremId id, const GroupSpec& spec, const FiniteGroup& g, VertexConvention c) {
  const SimpleGraph gp = generalized_power_graph(g, c);
  const std::uint64_t n = g.order();
  Outcome o;

  switch (id) {
    case TheoremId::T2_2:
      return completeness_iff(is_complete(gp), g.is_cyclic() && prime_power_base(n).has_value(),
                              "cyclic of prime-power order");

    case TheoremId::T3_1:
      return completeness_iff(is_complete(gp), is_generalized_quaternion(spec, g), "generalized quaternion");

    case TheoremId::PruferShadow: {
      const bool complete = is_complete(gp);
      o.holds = complete;
      o.observed = complete_text(complete);
      if (gp.vertex_count() == 0) o.observed += " (empty vertex set)";
      o.expected = "complete";
      return o;
    }

    case TheoremId::T3_4: {
      const auto p = g.p_group_prime();
      if (!p) throw Error(ErrorKind::BadParameters, spec.to_text() + " is not a p-group");
      const auto components = connected_components(gp);
      bool all_complete = true;
      for (const auto& comp : components) all_complete = all_complete && is_complete(induced_subgraph(gp, comp));
      const std::size_t subgroups = g.subgroups_of_order_p(*p).size();
      o.holds = all_complete && components.size() == subgroups;
      o.observed = "components=" + std::to_string(components.size()) + ", all complete=" + (all_complete ? "yes" : "no");
      o.expected = "components=" + std::to_string(subgroups) + " (subgroups of order " + std::to_string(*p) +
                   "), all complete=yes";
      return o;
    }

    case TheoremId::L4_1: {
      const auto verdict = is_planar(gp);
      const auto clique = contains_k5_clique(gp);
      o.holds = !verdict.planar && clique.has_value();
      o.observed = planar_text(verdict.planar);
      if (clique) {
        o.observed += ", K5 witness {";
        for (std::size_t i = 0; i < clique->size(); ++i) {
          o.observed += (i ? "," : "") + std::to_string(gp.label((*clique)[i]));
        }
        o.observed += "}";
      } else {
        o.observed += ", no K5";
      }
      o.expected = "non-planar with a K5 subgraph";
      return o;
    }

    case TheoremId::L4_2: {
      const bool planar = is_planar(gp).planar;
      o.holds = !planar;
      o.observed = planar_text(planar);
      if (gp.vertex_count() == 0) o.observed += " (empty vertex set)";
      o.expected = "non-planar (order divisible by a prime >= 7)";
      return o;
    }

    case TheoremId::L4_3: {
      const bool planar = is_planar(gp).planar;
      const auto primes = distinct_prime_divisors(n);
      using P = std::vector<std::uint64_t>;
      const bool allowed = primes == P{2} || primes == P{3} || primes == P{5} || primes == P{2, 3};
      o.holds = !planar || allowed;
      o.observed = std::string(planar_text(planar)) + ", primes " + set_text(primes);
      if (gp.vertex_count() == 0) o.observed += " (empty vertex set)";
      o.expected = allowed ? "any" : "non-planar (prime set not {p} for p<=5 or {2,3})";
      return o;
    }

    case TheoremId::T4_4: {
      const bool planar = is_planar(gp).planar;
      const bool listed = in_planar_abelian_families(g);
      o.holds = planar == listed;
      o.observed = planar_text(planar);
      if (gp.vertex_count() == 0) o.observed += " (empty vertex set)";
      o.expected = std::string(planar_text(listed)) + (listed ? " (in the five planar families)" : " (not listed)");
      return o;
    }

    case TheoremId::T5_1: {
      const auto p = g.p_group_prime();
      if (!p) throw Error(ErrorKind::BadParameters, spec.to_text() + " is not a p-group");
      const bool planar = is_planar(gp).planar;
      const auto components = connected_components(gp);
      const std::uint64_t expected_count = (n - 1) / (*p - 1);
      bool shapes_ok = true;
      for (const auto& comp : components) {
        shapes_ok = shapes_ok && comp.size() == *p - 1 && is_complete(induced_subgraph(gp, comp));
      }
      const std::uint64_t exponent = g.exponent();
      o.holds = !planar || (exponent == *p && components.size() == expected_count && shapes_ok);
      o.observed = std::string(planar_text(planar)) + ", exponent " + std::to_string(exponent) + ", " +
                   std::to_string(components.size()) + " components" + (shapes_ok ? " all K_" : " not all K_") +
                   std::to_string(*p - 1);
      o.expected = "if planar: exponent " + std::to_string(*p) + ", " + std::to_string(expected_count) +
                   " components all K_" + std::to_string(*p - 1);
      return o;
    }

    case TheoremId::T5_2: {
      const bool planar = is_planar(gp).planar;
      const bool is_d8 = fingerprint(g) == d8_fingerprint();
      o.holds = planar == is_d8;
      o.observed = planar_text(planar);
      o.expected = std::string(planar_text(is_d8)) + (is_d8 ? " (D_8)" : " (not D_8)");
      return o;
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// Verifier

Verifier::Verifier(std::uint64_t max_order, const CatalogOptions& options)
    : max_order_(max_order), catalog_(build_catalog(max_order, options)) {}

std::vector<Verifier::Subject> Verifier::select(bool (*keep)(const FiniteGroup&)) const {
  std::vector<Subject> out;
  for (const auto& entry : catalog_) {
    if (entry.group.order() >= 2 && keep(entry.group)) {
      // Non-owning alias into the catalog.
      out.push_back({entry.spec, std::shared_ptr<const FiniteGroup>(std::shared_ptr<void>{}, &entry.group)});
    }
  }
  return out;
}

void Verifier::add_targeted(std::vector<Subject>& subjects, const std::vector<GroupSpec>& specs) const {
  for (const auto& spec : specs) {
    const bool present = std::any_of(subjects.begin(), subjects.end(), [&](const Subject& s) {
      return s.spec == spec;
    });
    if (!present) subjects.push_back({spec, std::make_shared<const FiniteGroup>(build(spec))});
  }
}

TheoremReport Verifier::run(TheoremId id, VertexConvention c, const std::vector<Subject>& subjects,
                            bool catalog_relative) const {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.theorem = id;
  report.convention = c;
  report.max_order = max_order_;
  report.catalog_relative = catalog_relative;
  report.groups_tested = subjects.size();

  enum class Status { Pass, Discrepancy, Counterexample };
  std::vector<Status> status(subjects.size(), Status::Pass);
  std::vector<Outcome> outcomes(subjects.size());
  const auto count = static_cast<std::int64_t>(subjects.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& s = subjects[i];
    outcomes[i] = evaluate(id, s.spec, *s.group, c);
    if (outcomes[i].holds) continue;
    status[i] = Status::Counterexample;
    if (c == VertexConvention::Strict && evaluate(id, s.spec, *s.group, VertexConvention::Punctured).holds) {
      status[i] = Status::Discrepancy;
    }
  }
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    if (status[i] == Status::Pass) continue;
    Finding f{subjects[i].spec, std::move(outcomes[i].observed), std::move(outcomes[i].expected)};
    (status[i] == Status::Discrepancy ? report.discrepancies : report.counterexamples).push_back(std::move(f));
  }

  if (subjects.empty()) {
    report.verdict = Verdict::NotApplicable;
  } else if (!report.counterexamples.empty()) {
    report.verdict = Verdict::CounterexamplesFound;
  } else if (!report.discrepancies.empty()) {
    report.verdict = Verdict::ConventionDiscrepancy;
  } else {
    report.verdict = Verdict::Confirmed;
  }
  if (catalog_relative) {
    report.notes.push_back("only-if direction checked over catalog groups only, not all groups of each order");
  }
  if (!report.discrepancies.empty()) {
    report.notes.push_back("discrepancies fail under strict but hold under punctured");
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

TheoremReport Verifier::check_completeness_abelian(VertexConvention c) const {
  return run(TheoremId::T2_2, c, select([](const FiniteGroup& g) { return g.is_abelian(); }), false);
}

TheoremReport Verifier::check_completeness_nonabelian(VertexConvention c) const {
  return run(TheoremId::T3_1, c, select([](const FiniteGroup& g) { return !g.is_abelian(); }), true);
}

TheoremReport Verifier::check_pgroup_components(VertexConvention c) const {
  if (includes_identity(c)) {
    TheoremReport r;
    r.theorem = TheoremId::T3_4;
    r.convention = c;
    r.max_order = max_order_;
    r.catalog_relative = true;
    r.verdict = Verdict::NotApplicable;
    r.notes.push_back(std::string(to_string(ErrorKind::ConventionUnsupported)) +
                      ": the isolated identity vertex adds one component; count not adjusted");
    return r;
  }
  return run(TheoremId::T3_4, c, select([](const FiniteGroup& g) { return g.p_group_prime().has_value(); }), true);
}

std::vector<TheoremReport> Verifier::check_planarity_prime_lemmas(VertexConvention c) const {
  std::vector<TheoremReport> out;

  auto four_primes = select([](const FiniteGroup& g) {
    return g.is_abelian() && distinct_prime_divisors(g.order()).size() >= 4;
  });
  add_targeted(four_primes, {GroupSpec::cyclic(210)});
  out.push_back(run(TheoremId::L4_1, c, four_primes, false));
  out.back().notes.push_back("targeted beyond the order bound: cyclic:210");

  auto big_prime = select([](const FiniteGroup& g) {
    const auto primes = distinct_prime_divisors(g.order());
    return !primes.empty() && primes.back() >= 7;
  });
  add_targeted(big_prime, {GroupSpec::cyclic(14), GroupSpec::cyclic(21), GroupSpec::dihedral(7)});
  out.push_back(run(TheoremId::L4_2, c, big_prime, true));

  auto abelian = select([](const FiniteGroup& g) { return g.is_abelian(); });
  add_targeted(abelian, {GroupSpec::cyclic(10), GroupSpec::cyclic(15)});
  out.push_back(run(TheoremId::L4_3, c, abelian, false));
  return out;
}

TheoremReport Verifier::check_abelian_planarity_classification(VertexConvention c) const {
  return run(TheoremId::T4_4, c, select([](const FiniteGroup& g) { return g.is_abelian(); }), false);
}

std::vector<TheoremReport> Verifier::check_nonabelian_pgroup_planarity(VertexConvention c) const {
  std::vector<TheoremReport> out;
  out.push_back(run(TheoremId::T5_1, c, select([](const FiniteGroup& g) {
                      const auto p = g.p_group_prime();
                      return !g.is_abelian() && (p == 3u || p == 5u);
                    }),
                    true));
  out.push_back(run(TheoremId::T5_2, c, select([](const FiniteGroup& g) {
                      return !g.is_abelian() && g.p_group_prime() == 2u;
                    }),
                    true));
  return out;
}

TheoremReport Verifier::check_prufer_shadow(VertexConvention c) const {
  std::vector<Subject> chain;
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint64_t q = p; q <= std::max<std::uint64_t>(max_order_, p); q *= p) {
      chain.push_back({GroupSpec::cyclic(q), std::make_shared<const FiniteGroup>(build(GroupSpec::cyclic(q)))});
    }
  }
  auto report = run(TheoremId::PruferShadow, c, chain, false);
  if (c == VertexConvention::Strict) {
    report.notes.push_back("Z_p under strict has no vertices and is vacuously complete");
  }
  return report;
}

std::vector<TheoremReport> Verifier::run_all(const std::vector<VertexConvention>& conventions) const {
  std::vector<TheoremReport> out;
  for (VertexConvention c : conventions) {
    out.push_back(check_completeness_abelian(c));
    out.push_back(check_completeness_nonabelian(c));
    out.push_back(check_pgroup_components(c));
    for (auto& r : check_planarity_prime_lemmas(c)) out.push_back(std::move(r));
    out.push_back(check_abelian_planarity_classification(c));
    for (auto& r : check_nonabelian_pgroup_planarity(c)) out.push_back(std::move(r));
    out.push_back(check_prufer_shadow(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const TheoremReport& a, const TheoremReport& b) {
    return std::pair(a.theorem, a.convention) < std::pair(b.theorem, b.convention);
  });
  return out;
}

// ---------------------------------------------------------------------------

TheoremReport check_prufer_shadow(std::uint64_t p, unsigned depth, VertexConvention c) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (depth < 1) throw Error(ErrorKind::BadParameters, "depth must be >= 1");
  std::uint64_t top = 1;
  for (unsigned k = 0; k < depth; ++k) {
    top *= p;
    if (top > 4096) throw Error(ErrorKind::TooLarge, "p^K must not exceed 4096");
  }
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.theorem = TheoremId::PruferShadow;
  report.convention = c;
  report.max_order = top;
  for (std::uint64_t q = p; q <= top; q *= p) {
    const GroupSpec spec = GroupSpec::cyclic(q);
    const Outcome o = evaluate(TheoremId::PruferShadow, spec, build(spec), c);
    ++report.groups_tested;
    if (!o.holds) report.counterexamples.push_back({spec, o.observed, o.expected});
    if (q == p && c == VertexConvention::Strict) {
      report.notes.push_back(spec.name() + " under strict has no vertices and is vacuously complete");
    }
  }
  report.verdict = report.counterexamples.empty() ? Verdict::Confirmed : Verdict::CounterexamplesFound;
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<TheoremReport> run_all(std::uint64_t max_order, const std::vector<VertexConvention>& conventions,
                                   const CatalogOptions& options) {
  return Verifier(max_order, options).run_all(conventions);
}

bool has_punctured_counterexamples(const std::vector<TheoremReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const TheoremReport& r) {
    return r.convention == VertexConvention::Punctured && r.verdict == Verdict::CounterexamplesFound;
  });
}

namespace {

nlohmann::ordered_json findings_json(const std::vector<Finding>& findings) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& f : findings) {
    out.push_back({{"group", f.group.to_text()}, {"observed", f.observed}, {"expected", f.expected}});
  }
  return out;
}

}  // namespace

std::string reports_to_json(const std::vector<TheoremReport>& reports, const JsonOptions& options) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["theorem"] = to_string(r.theorem);
    j["convention"] = to_string(r.convention);
    j["census"] = {{"groups_tested", r.groups_tested}, {"max_order", r.max_order}};
    j["verdict"] = to_string(r.verdict);
    j["catalog_relative"] = r.catalog_relative;
    j["counterexamples"] = findings_json(r.counterexamples);
    j["discrepancies"] = findings_json(r.discrepancies);
    j["notes"] = r.notes;
    if (options.include_runtime) j["runtime_ms"] = r.runtime_ms;
    out.push_back(std::move(j));
  }
  return out.dump(options.indent) + "\n";
}

}  // namespace gpg

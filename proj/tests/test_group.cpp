#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gpg/catalog.hpp"
#include "gpg/group.hpp"
#include "gpg/numeric.hpp"

using namespace gpg;

namespace {

FiniteGroup zn(std::size_t n) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = Element((a + b) % n);
  return validate_and_build(rows);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

// Powers of g by repeated multiplication, independent of cyclic_subgroup.
std::set<Element> powers(const FiniteGroup& g, Element x) {
  std::set<Element> out{0};
  Element p = x;
  while (out.insert(p).second) p = g.mul(p, x);
  return out;
}

}  // namespace

TEST_CASE("trivial and order-2 tables") {
  const auto t = validate_and_build({{0}});
  CHECK(t.order() == 1);
  CHECK(t.identity() == 0);
  CHECK_FALSE(t.p_group_prime().has_value());

  const auto z2 = validate_and_build({{0, 1}, {1, 0}});
  CHECK(z2.inverse(0) == 0);
  CHECK(z2.inverse(1) == 1);
}

TEST_CASE("validation errors") {
  CHECK(kind_of([] { validate_and_build({{0, 1}, {1, 1}}); }) == ErrorKind::NoInverse);
  CHECK(kind_of([] { validate_and_build({{0, 2}, {1, 0}}); }) == ErrorKind::NotClosed);
  CHECK(kind_of([] { validate_and_build({{1, 1}, {1, 1}}); }) == ErrorKind::NoIdentity);
  CHECK(kind_of([] { validate_and_build({{0, 1}, {1}}); }) == ErrorKind::BadParameters);

  // A Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    validate_and_build(loop);
    FAIL("accepted a non-associative table");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
  }
  std::vector<Element> flat;
  for (const auto& r : loop) flat.insert(flat.end(), r.begin(), r.end());
  const auto w = find_associativity_violation(flat, 5);
  REQUIRE(w.has_value());
  CHECK(loop[loop[w->a][w->b]][w->c] != loop[w->a][loop[w->b][w->c]]);
  const auto ws = find_associativity_violation_serial(flat, 5);
  REQUIRE(ws.has_value());
  CHECK(ws->a == w->a);
  CHECK(ws->b == w->b);
  CHECK(ws->c == w->c);
  // Trusted mode skips the check.
  CHECK(validate_and_build(loop, Validation::Trusted).order() == 5);
}

TEST_CASE("identity is relabeled to index 0") {
  // Z_3 with identity stored at index 2.
  const auto g = validate_and_build({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(g.order() == 3);
  for (Element x = 0; x < 3; ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, 0) == x);
  }
  CHECK(g.element_order(1) == 3);
}

TEST_CASE("element orders and cyclic subgroups") {
  const auto z12 = zn(12);
  CHECK(z12.element_order(4) == 3);
  CHECK(z12.element_order(0) == 1);
  CHECK(z12.cyclic_subgroup(3).elements() == std::vector<Element>{0, 3, 6, 9});
  CHECK(z12.cyclic_subgroup(0).elements() == std::vector<Element>{0});
  CHECK(kind_of([&] { z12.element_order(12); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { z12.cyclic_subgroup(99); }) == ErrorKind::IndexOutOfRange);

  const auto d8 = build(GroupSpec::dihedral(4));
  CHECK(d8.element_order(1) == 4);  // rotation r

  const auto q8 = build(GroupSpec::generalized_quaternion(8));
  for (Element x = 0; x < 8; ++x) {
    if (q8.element_order(x) != 4) continue;
    const auto c = q8.cyclic_subgroup(x);
    CHECK(c.size() == 4);
    bool has_involution = false;
    for (Element y : c) has_involution = has_involution || q8.element_order(y) == 2;
    CHECK(has_involution);
  }
}

TEST_CASE("exponent and p-group detection") {
  CHECK(build(GroupSpec::abelian({4, 2})).exponent() == 4);
  CHECK(build(GroupSpec::elementary_abelian(3, 2)).exponent() == 3);

  // Heisenberg(3): lcm of orders computed by brute force.
  const auto h = build(GroupSpec::heisenberg(3));
  std::uint64_t l = 1;
  for (Element x = 0; x < h.order(); ++x) l = std::lcm(l, std::uint64_t(powers(h, x).size()));
  CHECK(l == 3);
  CHECK(h.exponent() == 3);

  CHECK(h.p_group_prime() == 3u);
  CHECK_FALSE(zn(12).p_group_prime().has_value());
  CHECK(zn(2).p_group_prime() == 2u);
}

TEST_CASE("subgroups of order p") {
  const auto z33 = build(GroupSpec::elementary_abelian(3, 2));
  // Oracle: distinct <x> over non-identity x.
  std::set<std::set<Element>> seen;
  for (Element x = 1; x < 9; ++x) seen.insert(powers(z33, x));
  CHECK(seen.size() == 4);
  CHECK(z33.subgroups_of_order_p(3).size() == 4);

  CHECK(build(GroupSpec::generalized_quaternion(16)).subgroups_of_order_p(2).size() == 1);
  CHECK(zn(6).subgroups_of_order_p(5).empty());
  CHECK(kind_of([] { zn(6).subgroups_of_order_p(4); }) == ErrorKind::NotPrime);
}

TEST_CASE("center and centralizer") {
  const auto z6 = zn(6);
  CHECK(z6.center().size() == 6);

  const auto d8 = build(GroupSpec::dihedral(4));
  CHECK(d8.centralizer(1) == d8.cyclic_subgroup(1));
  CHECK(d8.centralizer(1).size() == 4);
  CHECK(d8.center().size() == 2);
  CHECK(kind_of([&] { d8.centralizer(8); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("group invariants over the catalog") {
  for (const auto& entry : build_catalog(48)) {
    const auto& g = entry.group;
    CAPTURE(entry.spec.to_text());
    const auto center = g.center();
    for (Element x = 0; x < g.order(); ++x) {
      const auto c = g.cyclic_subgroup(x);
      REQUIRE(c.size() == g.element_order(x));
      REQUIRE(g.order() % g.element_order(x) == 0);
      const auto cx = g.centralizer(x);
      REQUIRE(cx.contains(x));
      REQUIRE(center.is_subset_of(cx));
    }
    // Intersections of cyclic subgroups are closed.
    for (Element x = 1; x < g.order(); x += 3) {
      for (Element y = 2; y < g.order(); y += 5) {
        const auto meet = g.cyclic_subgroup(x).intersect(g.cyclic_subgroup(y));
        for (Element a : meet)
          for (Element b : meet) REQUIRE(meet.contains(g.mul(a, b)));
      }
    }
  }
}

TEST_CASE("permutation closure") {
  const auto z3 = closure_from_permutations(3, {{1, 2, 0}});
  CHECK(z3.order() == 3);
  CHECK(z3.is_cyclic());

  const auto s3 = closure_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());

  // Q_8 as the regular representation: i and j acting on {±1, ±i, ±j, ±k}
  // indexed 1,i,j,k,-1,-i,-j,-k = 0..7.
  const Permutation i_perm = {1, 4, 3, 6, 5, 0, 7, 2};
  const Permutation j_perm = {2, 7, 4, 1, 6, 3, 0, 5};
  const auto q8 = closure_from_permutations(8, {i_perm, j_perm});
  CHECK(q8.order() == 8);
  const auto orders = q8.element_orders();
  CHECK(std::count(orders.begin(), orders.end(), 2u) == 1);

  CHECK(kind_of([] { closure_from_permutations(3, {{0, 0, 1}}); }) == ErrorKind::NotAPermutation);
  CHECK(kind_of([] { closure_from_permutations(3, {{0, 1}}); }) == ErrorKind::NotAPermutation);
  CHECK(kind_of([] { closure_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100); }) ==
        ErrorKind::OrderCapExceeded);
}

TEST_CASE("closure output revalidates") {
  const auto s4 = closure_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(s4.order() == 24);
  std::vector<Element> flat(s4.table().begin(), s4.table().end());
  CHECK(validate_and_build(flat, 24).order() == 24);
}

TEST_CASE("cayley table text round trip") {
  const auto d = build(GroupSpec::dihedral(3));
  std::ostringstream out;
  write_cayley_table(out, d);
  std::istringstream in("# a comment\n" + out.str());
  const auto raw = read_cayley_table(in);
  CHECK(raw.n == 6);
  const auto back = validate_and_build(raw.entries, raw.n);
  CHECK(std::equal(back.table().begin(), back.table().end(), d.table().begin()));

  std::istringstream bad_entry("2\n0 1\n1 5\n");
  CHECK(kind_of([&] { read_cayley_table(bad_entry); }) == ErrorKind::NotClosed);
  std::istringstream negative("2\n0 1\n1 -1\n");
  CHECK(kind_of([&] { read_cayley_table(negative); }) == ErrorKind::NotClosed);
  std::istringstream short_table("3\n0 1 2\n1 2 0\n");
  CHECK(kind_of([&] { read_cayley_table(short_table); }) == ErrorKind::Parse);
  std::istringstream junk("x\n");
  CHECK(kind_of([&] { read_cayley_table(junk); }) == ErrorKind::Parse);
}

TEST_CASE("parallel and serial associativity checks agree on random tables") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<Element> t(n * n);
    // Random Latin square from a cyclic table with shuffled rows and columns,
    // plus a few perturbations to break associativity sometimes.
    std::vector<Element> rp(n), cp(n);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = Element((rp[a] + cp[b]) % n);
    if (trial % 2) t[rng() % (n * n)] = Element(rng() % n);
    const auto p = find_associativity_violation(t, n);
    const auto s = find_associativity_violation_serial(t, n);
    REQUIRE(p.has_value() == s.has_value());
    if (p) {
      CHECK(p->a == s->a);
      CHECK(p->b == s->b);
      CHECK(p->c == s->c);
    }
  }
}

TEST_CASE("numeric helpers") {
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(distinct_prime_divisors(210) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(prime_power_base(81) == 3u);
  CHECK_FALSE(prime_power_base(12).has_value());
  CHECK_FALSE(prime_power_base(1).has_value());
  CHECK(ipow(3, 4) == 81);
}

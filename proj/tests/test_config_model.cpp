#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "confmodel/config_model.hpp"
#include "confmodel/stats.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace confmodel;

namespace {

Bipartition split(std::size_t n, std::vector<std::size_t> a) { return Bipartition::from_a(n, a); }

/// All degree sequences on 1..max_vertices vertices with total <= max_total.
std::vector<DegreeSequence> small_sequences(std::size_t max_vertices, std::size_t max_total) {
  std::vector<DegreeSequence> out;
  std::vector<std::size_t> d;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (!d.empty()) out.emplace_back(d);
    if (d.size() == max_vertices) return;
    for (std::size_t k = 0; k <= left; ++k) {
      d.push_back(k);
      rec(left - k);
      d.pop_back();
    }
  };
  rec(max_total);
  return out;
}

std::vector<Bipartition> all_bipartitions(std::size_t n) {
  std::vector<Bipartition> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> in_a(n);
    for (std::size_t v = 0; v < n; ++v) in_a[v] = (mask >> v) & 1;
    out.emplace_back(in_a);
  }
  return out;
}

/// Pearson statistic of observed counts against a uniform law on k bins.
double chi_square_uniform(const std::vector<std::size_t>& counts) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  const double expected = total / static_cast<double>(counts.size());
  double x = 0.0;
  for (auto c : counts) x += (c - expected) * (c - expected) / expected;
  return x;
}

/// Upper 0.999 quantile of chi-square with k degrees of freedom (Wilson-Hilferty).
double chi_square_critical(double k) {
  const double z = 3.090;
  const double a = 2.0 / (9.0 * k);
  return k * std::pow(1.0 - a + z * std::sqrt(a), 3.0);
}

}  // namespace

TEST_CASE("half-edge system") {
  HalfEdgeSystem sys({2, 0, 3});
  CHECK(sys.size() == 5);
  CHECK(sys.owner(2) == 2);
  CHECK(sys.label(4) == HalfEdge{2, 2});
  CHECK(sys.id({2, 0}) == 2);
  CHECK_THROWS_AS(sys.id({1, 0}), std::out_of_range);
  CHECK_THROWS_AS(sys.id({3, 0}), std::out_of_range);
  CHECK_THROWS(Matching(sys, {{0, 1}, {1, 2}}));
  CHECK_THROWS(Matching(sys, {{0, 5}}));
  CHECK_THROWS(Matching(sys, {{3, 3}}));
  Matching m(sys, {{4, 0}});
  CHECK(m.pairs()[0] == Matching::Pair{0, 4});
  CHECK(m.unmatched_counts(sys) == std::vector<std::size_t>{1, 0, 2});
  CHECK(m.unmatched_total(sys) == 3);
}

TEST_CASE("graph of matching") {
  HalfEdgeSystem s11({1, 1});
  CHECK(graph_of_matching(s11, Matching(s11, {{0, 1}})) == Multigraph(2, {{0, 1}}));
  HalfEdgeSystem s2({2});
  CHECK(graph_of_matching(s2, Matching(s2, {{0, 1}})) == Multigraph(1, {{0, 0}}));
  HalfEdgeSystem s22({2, 2});
  CHECK(graph_of_matching(s22, Matching(s22, {{0, 2}, {1, 3}})) == Multigraph(2, {{0, 1}, {0, 1}}));
  CHECK_THROWS(graph_of_matching(s11, Matching::trusted({{0, 7}})));
}

TEST_CASE("uniform configuration-model samples") {
  RandomStream rng(31);
  CHECK(sample_uniform_graph({1, 1}, rng) == Multigraph(2, {{0, 1}}));
  CHECK(sample_uniform_graph({3}, rng) == Multigraph(1, {{0, 0}}));

  HalfEdgeSystem sys({1, 1, 1, 1});
  std::map<Matching, std::size_t> freq;
  const std::size_t reps = 10000;
  for (std::size_t r = 0; r < reps; ++r) ++freq[sample_uniform_matching(sys, rng)];
  CHECK(freq.size() == 3);
  const double sigma = binomial_sigma(1.0 / 3.0, reps);
  for (auto& [m, c] : freq) CHECK(std::abs(c / double(reps) - 1.0 / 3.0) <= 3 * sigma);
}

TEST_CASE("maximal matchings are enumerated exactly once each") {
  for (std::size_t h = 0; h <= 7; ++h) {
    std::vector<std::size_t> d(h, 1);
    HalfEdgeSystem sys{DegreeSequence(d)};
    auto list = enumerate_maximal_matchings(sys);
    auto oracle = oracle::maximal_by_permutation(h);
    CHECK(std::set<Matching>(list.begin(), list.end()).size() == list.size());
    CHECK(list.size() == oracle.size());
    std::set<std::size_t> multiplicity;
    for (auto& [m, c] : oracle) multiplicity.insert(c);
    CHECK(multiplicity.size() == 1);
    for (const auto& m : list) CHECK(oracle.count(m) == 1);
  }
}

TEST_CASE("class enumeration") {
  HalfEdgeSystem s22({2, 2});
  auto bp = split(2, {0});
  CHECK(enumerate_class(s22, bp, {0, 0, 1}).size() == 4);
  auto loops = enumerate_class(s22, bp, {1, 1, 0});
  REQUIRE(loops.size() == 1);
  CHECK(graph_of_matching(s22, loops[0]) == Multigraph(2, {{0, 0}, {1, 1}}));
  CHECK(enumerate_class(s22, bp, {0, 0, 2}).size() == 2);
  CHECK(enumerate_class(s22, bp, {2, 0, 0}).empty());
  HalfEdgeSystem s11({1, 1});
  auto empty = enumerate_class(s11, split(2, {0}), {0, 0, 0});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].size() == 0);
  HalfEdgeSystem big({7, 6});
  CHECK_THROWS_AS(enumerate_class(big, split(2, {0}), {0, 0, 1}), std::domain_error);
}

TEST_CASE("class enumeration agrees with subset enumeration") {
  for (const auto& d : small_sequences(3, 6)) {
    HalfEdgeSystem sys(d);
    auto all = oracle::all_partial_matchings(sys.size());
    for (const auto& bp : all_bipartitions(d.size())) {
      std::map<PairingCounts, std::set<Matching>> by_class;
      for (const auto& m : all) by_class[classify(sys, bp, m)].insert(m);
      for (auto& [c, set] : by_class) {
        auto list = enumerate_class(sys, bp, c);
        CHECK(list.size() == set.size());
        CHECK(std::set<Matching>(list.begin(), list.end()) == set);
      }
    }
  }
}

TEST_CASE("sampling within a class") {
  RandomStream rng(32);
  HalfEdgeSystem s22({2, 2});
  auto bp = split(2, {0});
  for (int r = 0; r < 50; ++r)
    CHECK(graph_of_matching(s22, sample_in_class(s22, bp, {1, 1, 0}, rng)) == Multigraph(2, {{0, 0}, {1, 1}}));
  std::map<Matching, std::size_t> freq;
  const std::size_t reps = 10000;
  for (std::size_t r = 0; r < reps; ++r) ++freq[sample_in_class(s22, bp, {0, 0, 2}, rng)];
  CHECK(freq.size() == 2);
  for (auto& [m, c] : freq) CHECK(std::abs(c / double(reps) - 0.5) <= 3 * binomial_sigma(0.5, reps));
  CHECK_THROWS_WITH(sample_in_class(s22, bp, {2, 0, 0}, rng), doctest::Contains("infeasible (α,β,γ)"));
}

TEST_CASE("sample_simple") {
  RandomStream rng(33);
  CHECK(sample_simple({1, 1}, rng, 1) == Multigraph(2, {{0, 1}}));
  try {
    sample_simple({2, 2}, rng, 50);
    FAIL("expected failure");
  } catch (const SimpleSamplingError& e) {
    CHECK(e.attempts() == 50);
  }
  for (int r = 0; r < 20; ++r) CHECK(sample_simple({2, 2, 2}, rng) == Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  // two simple graphs have degrees (2,2,1,1); rejection keeps them equally likely
  HalfEdgeSystem sys({2, 2, 1, 1});
  std::map<std::vector<Multigraph::Edge>, std::size_t> freq;
  for (int r = 0; r < 3000; ++r) ++freq[sample_simple(sys.degrees(), rng).canonical_edges()];
  CHECK(freq.size() == 2);
  for (auto& [edges, c] : freq) {
    CHECK(Multigraph(4, edges).is_simple());
  }
  std::vector<std::size_t> counts;
  for (auto& [e, c] : freq) counts.push_back(c);
  CHECK(chi_square_uniform(counts) <= chi_square_critical(counts.size() - 1.0));
}

TEST_CASE("pairing lemma: each target has alpha+1 predecessors") {
  for (const auto& d : small_sequences(4, 8)) {
    HalfEdgeSystem sys(d);
    for (const auto& bp : all_bipartitions(d.size())) {
      const std::size_t da = bp.degree_a(d), db = bp.degree_b(d);
      for (std::size_t a = 0; 2 * a <= da; ++a)
        for (std::size_t b = 0; 2 * b <= db; ++b)
          for (std::size_t g = 0; 2 * a + g <= da && 2 * b + g <= db; ++g) {
            PairingCounts c{a, b, g};
            struct Step {
              PairingKind kind;
              PairingCounts next;
              std::size_t expected;
            };
            for (auto [kind, next, expected] :
                 {Step{PairingKind::a_internal, PairingCounts{a + 1, b, g}, a + 1},
                  Step{PairingKind::b_internal, PairingCounts{a, b + 1, g}, b + 1},
                  Step{PairingKind::cross, PairingCounts{a, b, g + 1}, g + 1}}) {
              if (!next.feasible(da, db)) continue;
              auto counts = predecessor_counts(sys, bp, c, kind);
              CHECK(counts.size() == enumerate_class(sys, bp, next).size());
              for (auto& [m, k] : counts) CHECK(k == expected);
            }
          }
    }
  }
}

TEST_CASE("sequential pairing histories are uniform in any order") {
  RandomStream rng(34);
  std::size_t instances = 0;
  for (const auto& d : small_sequences(3, 6)) {
    HalfEdgeSystem sys(d);
    for (const auto& bp : all_bipartitions(d.size())) {
      const std::size_t da = bp.degree_a(d), db = bp.degree_b(d);
      for (std::size_t a = 0; 2 * a <= da; ++a)
        for (std::size_t b = 0; 2 * b <= db; ++b)
          for (std::size_t g = 0; 2 * a + g <= da && 2 * b + g <= db; ++g) {
            auto order = default_order({a, b, g});
            std::shuffle(order.begin(), order.end(), rng.engine());
            auto tally = count_histories(sys, bp, order);
            auto target = enumerate_class(sys, bp, {a, b, g});
            CHECK(tally.uniform());
            CHECK(tally.choices_state_independent);
            CHECK(tally.arrivals.size() == target.size());
            ++instances;
          }
    }
  }
  CHECK(instances > 100);
}

TEST_CASE("order of pairings does not change the law") {
  HalfEdgeSystem sys({2, 1, 2, 1});
  auto bp = split(4, {0, 1});
  PairingCounts c{1, 1, 1};
  auto target = enumerate_class(sys, bp, c);
  RandomStream rng(35);
  std::vector<std::vector<PairingKind>> orders{
      {PairingKind::a_internal, PairingKind::b_internal, PairingKind::cross},
      {PairingKind::cross, PairingKind::a_internal, PairingKind::b_internal},
      {PairingKind::b_internal, PairingKind::cross, PairingKind::a_internal}};
  for (const auto& order : orders) {
    auto tally = count_histories(sys, bp, order);
    CHECK(tally.uniform());
    CHECK(tally.arrivals.size() == target.size());
    std::map<Matching, std::size_t> freq;
    for (const auto& m : target) freq[m] = 0;
    const std::size_t reps = 6000;
    for (std::size_t r = 0; r < reps; ++r) ++freq.at(sample_in_class(sys, bp, order, rng));
    std::vector<std::size_t> counts;
    for (auto& [m, k] : freq) counts.push_back(k);
    CHECK(chi_square_uniform(counts) <= chi_square_critical(counts.size() - 1.0));
  }
}

TEST_CASE("conditioning on the cross count gives the uniform class law") {
  RandomStream rng(36);
  struct Case {
    DegreeSequence d;
    std::vector<std::size_t> a;
  };
  for (const auto& [d, a] : {Case{{2, 2, 2, 2}, {0, 1}}, Case{{3, 1, 2, 2}, {0}}, Case{{1, 2, 3}, {1}},
                             Case{{2, 3, 2}, {0, 2}}}) {
    HalfEdgeSystem sys(d);
    auto bp = split(d.size(), a);
    const std::size_t da = bp.degree_a(d), db = bp.degree_b(d);
    std::map<std::size_t, std::map<Matching, std::size_t>> by_gamma;
    const std::size_t reps = 40000;
    for (std::size_t r = 0; r < reps; ++r) {
      auto m = sample_uniform_matching(sys, rng);
      ++by_gamma[classify(sys, bp, m).gamma][m];
    }
    for (auto& [g, freq] : by_gamma) {
      PairingCounts c{(da - g) / 2, (db - g) / 2, g};
      auto target = enumerate_class(sys, bp, c);
      CHECK(freq.size() <= target.size());
      std::vector<std::size_t> counts;
      for (const auto& m : target) counts.push_back(freq.count(m) ? freq.at(m) : 0);
      std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
      if (counts.size() < 2 || total < 20 * counts.size()) continue;
      CHECK(chi_square_uniform(counts) <= chi_square_critical(counts.size() - 1.0));
    }
  }
}

TEST_CASE("even total degree gives perfect matchings") {
  RandomStream rng(37);
  for (int t = 0; t < 500; ++t) {
    auto d = gen::degrees(1 + rng.below(12), 5, rng);
    HalfEdgeSystem sys(d);
    auto m = sample_uniform_matching(sys, rng);
    CHECK(m.unmatched_total(sys) == sys.size() % 2);
    auto g = graph_of_matching(sys, m);
    if (sys.size() % 2 == 0) CHECK(g.degrees() == d.values());
  }
}

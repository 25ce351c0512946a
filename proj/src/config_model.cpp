#include "confmodel/config_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace confmodel {

HalfEdgeSystem::HalfEdgeSystem(DegreeSequence degrees) : degrees_(std::move(degrees)) {
  offset_.reserve(degrees_.size());
  for (std::size_t v = 0; v < degrees_.size(); ++v) {
    offset_.push_back(owner_.size());
    owner_.insert(owner_.end(), degrees_[v], v);
  }
}

std::size_t HalfEdgeSystem::id(HalfEdge e) const {
  if (e.vertex >= degrees_.size() || e.index >= degrees_[e.vertex])
    throw std::out_of_range("half-edge (" + std::to_string(e.vertex) + "," + std::to_string(e.index) +
                            ") not in the system");
  return offset_[e.vertex] + e.index;
}

Matching::Matching(const HalfEdgeSystem& sys, std::vector<Pair> pairs) {
  std::vector<bool> used(sys.size(), false);
  for (auto [x, y] : pairs) {
    if (x >= sys.size() || y >= sys.size()) throw std::out_of_range("matching refers to a half-edge outside the system");
    if (x == y || used[x] || used[y]) throw std::invalid_argument("matching pairs are not disjoint");
    used[x] = used[y] = true;
  }
  *this = trusted(std::move(pairs));
}

Matching Matching::trusted(std::vector<Pair> pairs) {
  Matching m;
  for (auto& [x, y] : pairs)
    if (x > y) std::swap(x, y);
  std::sort(pairs.begin(), pairs.end());
  m.pairs_ = std::move(pairs);
  return m;
}

std::vector<std::size_t> Matching::unmatched_counts(const HalfEdgeSystem& sys) const {
  std::vector<std::size_t> c(sys.degrees().values());
  for (auto [x, y] : pairs_) {
    --c[sys.owner(x)];
    --c[sys.owner(y)];
  }
  return c;
}

Bipartition Bipartition::from_a(std::size_t n, std::span<const std::size_t> a) {
  std::vector<bool> in_a(n, false);
  for (auto v : a) {
    if (v >= n) throw std::out_of_range("bipartition vertex out of range");
    in_a[v] = true;
  }
  return Bipartition(std::move(in_a));
}

std::vector<std::size_t> Bipartition::a_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < in_a_.size(); ++v)
    if (in_a_[v]) out.push_back(v);
  return out;
}

std::vector<std::size_t> Bipartition::b_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < in_a_.size(); ++v)
    if (!in_a_[v]) out.push_back(v);
  return out;
}

std::size_t Bipartition::degree_a(const DegreeSequence& d) const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (in_a_[v]) total += d[v];
  return total;
}

std::size_t Bipartition::degree_b(const DegreeSequence& d) const { return d.total() - degree_a(d); }

Multigraph graph_of_matching(const HalfEdgeSystem& sys, const Matching& m) {
  Multigraph g(sys.vertex_count());
  for (auto [x, y] : m.pairs()) {
    if (x >= sys.size() || y >= sys.size()) throw std::out_of_range("matching refers to a half-edge outside the system");
    g.add_edge(sys.owner(x), sys.owner(y));
  }
  return g;
}

PairingCounts classify(const HalfEdgeSystem& sys, const Bipartition& bp, const Matching& m) {
  PairingCounts c;
  for (auto [x, y] : m.pairs()) {
    const bool ax = bp.in_a(sys.owner(x)), ay = bp.in_a(sys.owner(y));
    if (ax && ay)
      ++c.alpha;
    else if (!ax && !ay)
      ++c.beta;
    else
      ++c.gamma;
  }
  return c;
}

Matching sample_uniform_matching(const HalfEdgeSystem& sys, RandomStream& rng) {
  std::vector<std::size_t> order(sys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng.engine());
  std::vector<Matching::Pair> pairs;
  pairs.reserve(order.size() / 2);
  for (std::size_t k = 0; k + 1 < order.size(); k += 2) pairs.emplace_back(order[k], order[k + 1]);
  return Matching::trusted(std::move(pairs));
}

Multigraph sample_uniform_graph(const DegreeSequence& d, RandomStream& rng) {
  if (d.empty()) throw std::invalid_argument("sample_uniform_graph: empty degree sequence");
  // Direct construction without the Matching detour; same shuffle, same pairs.
  std::vector<std::size_t> stubs;
  stubs.reserve(d.total());
  for (std::size_t v = 0; v < d.size(); ++v) stubs.insert(stubs.end(), d[v], v);
  std::shuffle(stubs.begin(), stubs.end(), rng.engine());
  Multigraph g(d.size());
  for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) g.add_edge(stubs[k], stubs[k + 1]);
  return g;
}

std::vector<PairingKind> default_order(const PairingCounts& c) {
  std::vector<PairingKind> order;
  order.insert(order.end(), c.alpha, PairingKind::a_internal);
  order.insert(order.end(), c.beta, PairingKind::b_internal);
  order.insert(order.end(), c.gamma, PairingKind::cross);
  return order;
}

namespace {

PairingCounts counts_of(std::span<const PairingKind> order) {
  PairingCounts c;
  for (auto k : order) {
    if (k == PairingKind::a_internal) ++c.alpha;
    if (k == PairingKind::b_internal) ++c.beta;
    if (k == PairingKind::cross) ++c.gamma;
  }
  return c;
}

void require_feasible(const HalfEdgeSystem& sys, const Bipartition& bp, const PairingCounts& c) {
  if (bp.vertex_count() != sys.vertex_count()) throw std::invalid_argument("bipartition size mismatch");
  if (!c.feasible(bp.degree_a(sys.degrees()), bp.degree_b(sys.degrees())))
    throw std::invalid_argument("infeasible (α,β,γ) = (" + std::to_string(c.alpha) + "," + std::to_string(c.beta) +
                                "," + std::to_string(c.gamma) + ")");
}

std::size_t take(std::vector<std::size_t>& pool, RandomStream& rng) {
  const std::size_t k = rng.below(pool.size());
  std::swap(pool[k], pool.back());
  const std::size_t h = pool.back();
  pool.pop_back();
  return h;
}

}  // namespace

Matching sample_in_class(const HalfEdgeSystem& sys, const Bipartition& bp, const PairingCounts& c,
                         RandomStream& rng) {
  const auto order = default_order(c);
  return sample_in_class(sys, bp, order, rng);
}

Matching sample_in_class(const HalfEdgeSystem& sys, const Bipartition& bp, std::span<const PairingKind> order,
                         RandomStream& rng) {
  require_feasible(sys, bp, counts_of(order));
  std::vector<std::size_t> free_a, free_b;
  for (std::size_t h = 0; h < sys.size(); ++h) (bp.in_a(sys.owner(h)) ? free_a : free_b).push_back(h);
  std::vector<Matching::Pair> pairs;
  pairs.reserve(order.size());
  for (auto kind : order) {
    switch (kind) {
      case PairingKind::a_internal: {
        const auto x = take(free_a, rng);
        pairs.emplace_back(x, take(free_a, rng));
        break;
      }
      case PairingKind::b_internal: {
        const auto x = take(free_b, rng);
        pairs.emplace_back(x, take(free_b, rng));
        break;
      }
      case PairingKind::cross: {
        const auto x = take(free_a, rng);
        pairs.emplace_back(x, take(free_b, rng));
        break;
      }
    }
  }
  return Matching::trusted(std::move(pairs));
}

namespace {

// Canonical recursion: the smallest undecided half-edge is either left
// unmatched (if its side still has unmatched budget) or paired with a later
// undecided half-edge, partners in increasing order.
class ClassEnumerator {
 public:
  ClassEnumerator(const HalfEdgeSystem& sys, const Bipartition& bp, const PairingCounts& c)
      : sys_(sys), bp_(bp), remaining_(c), decided_(sys.size(), false) {
    const auto& d = sys.degrees();
    unmatched_a_ = bp.degree_a(d) - 2 * c.alpha - c.gamma;
    unmatched_b_ = bp.degree_b(d) - 2 * c.beta - c.gamma;
  }

  std::vector<Matching> run() {
    recurse(0);
    return std::move(out_);
  }

 private:
  bool side_a(std::size_t h) const { return bp_.in_a(sys_.owner(h)); }

  void recurse(std::size_t from) {
    while (from < decided_.size() && decided_[from]) ++from;
    if (from == decided_.size()) {
      if (remaining_ == PairingCounts{} && unmatched_a_ == 0 && unmatched_b_ == 0)
        out_.push_back(Matching::trusted(current_));
      return;
    }
    decided_[from] = true;
    const bool a = side_a(from);
    for (std::size_t h = from + 1; h < decided_.size(); ++h) {
      if (decided_[h]) continue;
      const bool b_side = !side_a(h);
      std::size_t* slot = nullptr;
      if (a && !b_side)
        slot = &remaining_.alpha;
      else if (!a && b_side)
        slot = &remaining_.beta;
      else
        slot = &remaining_.gamma;
      if (*slot == 0) continue;
      --*slot;
      decided_[h] = true;
      current_.emplace_back(from, h);
      recurse(from + 1);
      current_.pop_back();
      decided_[h] = false;
      ++*slot;
    }
    std::size_t& budget = a ? unmatched_a_ : unmatched_b_;
    if (budget > 0) {
      --budget;
      recurse(from + 1);
      ++budget;
    }
    decided_[from] = false;
  }

  const HalfEdgeSystem& sys_;
  const Bipartition& bp_;
  PairingCounts remaining_;
  std::size_t unmatched_a_ = 0, unmatched_b_ = 0;
  std::vector<bool> decided_;
  std::vector<Matching::Pair> current_;
  std::vector<Matching> out_;
};

}  // namespace

std::vector<Matching> enumerate_class(const HalfEdgeSystem& sys, const Bipartition& bp, const PairingCounts& c) {
  if (sys.size() > kEnumerationBudget)
    throw std::domain_error("enumeration budget exceeded (total degree " + std::to_string(sys.size()) + " > " +
                            std::to_string(kEnumerationBudget) + ")");
  if (bp.vertex_count() != sys.vertex_count()) throw std::invalid_argument("bipartition size mismatch");
  if (!c.feasible(bp.degree_a(sys.degrees()), bp.degree_b(sys.degrees()))) return {};
  return ClassEnumerator(sys, bp, c).run();
}

std::vector<Matching> enumerate_maximal_matchings(const HalfEdgeSystem& sys) {
  // With every vertex in A, M(floor(|H|/2), 0, 0) is the set of maximal matchings.
  Bipartition all_a(std::vector<bool>(sys.vertex_count(), true));
  return enumerate_class(sys, all_a, PairingCounts{sys.size() / 2, 0, 0});
}

SimpleSamplingError::SimpleSamplingError(std::size_t attempts)
    : std::runtime_error("no simple graph after " + std::to_string(attempts) + " attempts"), attempts_(attempts) {}

Multigraph sample_simple(const DegreeSequence& d, RandomStream& rng, std::size_t max_tries) {
  if (max_tries == 0) throw std::invalid_argument("sample_simple: max_tries must be at least 1");
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Multigraph g = sample_uniform_graph(d, rng);
    if (g.is_simple()) return g;
  }
  throw SimpleSamplingError(max_tries);
}

bool HistoryTally::uniform() const {
  if (arrivals.empty()) return true;
  const auto first = arrivals.begin()->second;
  return std::all_of(arrivals.begin(), arrivals.end(), [&](const auto& kv) { return kv.second == first; });
}

namespace {

class HistoryCounter {
 public:
  HistoryCounter(const HalfEdgeSystem& sys, const Bipartition& bp, std::span<const PairingKind> order,
                 HistoryTally& tally)
      : sys_(sys), bp_(bp), order_(order), tally_(tally), matched_(sys.size(), false) {
    tally_.choices_per_step.assign(order.size(), 0);
    seen_step_.assign(order.size(), false);
  }

  void run() { step(0); }

 private:
  bool side_a(std::size_t h) const { return bp_.in_a(sys_.owner(h)); }

  void step(std::size_t t) {
    if (t == order_.size()) {
      ++tally_.arrivals[Matching::trusted(current_)];
      ++tally_.histories;
      return;
    }
    const PairingKind kind = order_[t];
    std::uint64_t choices = 0;
    for (std::size_t x = 0; x < matched_.size(); ++x) {
      if (matched_[x]) continue;
      for (std::size_t y = x + 1; y < matched_.size(); ++y) {
        if (matched_[y]) continue;
        const bool ax = side_a(x), ay = side_a(y);
        const bool allowed = kind == PairingKind::a_internal   ? (ax && ay)
                             : kind == PairingKind::b_internal ? (!ax && !ay)
                                                               : (ax != ay);
        if (!allowed) continue;
        ++choices;
        matched_[x] = matched_[y] = true;
        current_.emplace_back(x, y);
        step(t + 1);
        current_.pop_back();
        matched_[x] = matched_[y] = false;
      }
    }
    if (!seen_step_[t]) {
      seen_step_[t] = true;
      tally_.choices_per_step[t] = choices;
    } else if (tally_.choices_per_step[t] != choices) {
      tally_.choices_state_independent = false;
    }
  }

  const HalfEdgeSystem& sys_;
  const Bipartition& bp_;
  std::span<const PairingKind> order_;
  HistoryTally& tally_;
  std::vector<bool> matched_;
  std::vector<bool> seen_step_;
  std::vector<Matching::Pair> current_;
};

}  // namespace

HistoryTally count_histories(const HalfEdgeSystem& sys, const Bipartition& bp, std::span<const PairingKind> order) {
  require_feasible(sys, bp, counts_of(order));
  HistoryTally tally;
  HistoryCounter(sys, bp, order, tally).run();
  return tally;
}

std::map<Matching, std::uint64_t> predecessor_counts(const HalfEdgeSystem& sys, const Bipartition& bp,
                                                     const PairingCounts& c, PairingKind kind) {
  std::map<Matching, std::uint64_t> tally;
  for (const auto& m : enumerate_class(sys, bp, c)) {
    std::vector<bool> matched(sys.size(), false);
    for (auto [x, y] : m.pairs()) matched[x] = matched[y] = true;
    for (std::size_t x = 0; x < sys.size(); ++x) {
      if (matched[x]) continue;
      for (std::size_t y = x + 1; y < sys.size(); ++y) {
        if (matched[y]) continue;
        const bool ax = bp.in_a(sys.owner(x)), ay = bp.in_a(sys.owner(y));
        const bool allowed = kind == PairingKind::a_internal   ? (ax && ay)
                             : kind == PairingKind::b_internal ? (!ax && !ay)
                                                               : (ax != ay);
        if (!allowed) continue;
        auto pairs = m.pairs();
        pairs.emplace_back(x, y);
        ++tally[Matching::trusted(std::move(pairs))];
      }
    }
  }
  return tally;
}

}  // namespace confmodel

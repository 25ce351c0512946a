#include "confmodel/degree.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace confmodel {

std::size_t DegreeSequence::total() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0});
}

std::size_t DegreeSequence::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

DegreeSequence DegreeSequence::concat(const DegreeSequence& other) const {
  std::vector<std::size_t> out = degrees_;
  out.insert(out.end(), other.degrees_.begin(), other.degrees_.end());
  return DegreeSequence(std::move(out));
}

void DegreeDistribution::finish() {
  mean_ = 0.0;
  for (auto [k, p] : probs_) mean_ += static_cast<double>(k) * p;
}

DegreeDistribution DegreeDistribution::from_probabilities(const std::map<std::size_t, double>& probs) {
  DegreeDistribution mu;
  double sum = 0.0;
  for (auto [k, p] : probs) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw std::invalid_argument("degree distribution: probability of degree " + std::to_string(k) +
                                  " is negative or not finite");
    sum += p;
    if (p > 0.0) mu.probs_[k] = p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("degree distribution: probabilities sum to " + std::to_string(sum));
  mu.finish();
  return mu;
}

DegreeDistribution DegreeDistribution::from_rationals(const std::map<std::size_t, Rational>& probs) {
  DegreeDistribution mu;
  Rational sum = 0;
  std::map<std::size_t, Rational> exact;
  for (const auto& [k, p] : probs) {
    if (p < Rational(0)) throw std::invalid_argument("degree distribution: negative probability");
    sum += p;
    if (p > Rational(0)) {
      exact[k] = p;
      mu.probs_[k] = to_double(p);
    }
  }
  if (sum != Rational(1)) throw std::invalid_argument("degree distribution: probabilities sum to " + to_string(sum));
  mu.exact_ = std::move(exact);
  mu.finish();
  return mu;
}

DegreeDistribution DegreeDistribution::point_mass(std::size_t k) {
  return from_rationals({{k, Rational(1)}});
}

DegreeDistribution DegreeDistribution::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("degree distribution: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.empty())
    throw std::invalid_argument("degree distribution: expected a nonempty JSON object");
  std::map<std::size_t, double> probs;
  double sum = 0.0;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("degree distribution: key '" + key + "' is not a natural number");
    if (!it.value().is_number())
      throw std::invalid_argument("degree distribution: value for '" + key + "' is not a number");
    double p = it.value().get<double>();
    if (p < 0.0) throw std::invalid_argument("degree distribution: negative probability for '" + key + "'");
    probs[std::stoull(key)] += p;
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("degree distribution: probabilities sum to " + std::to_string(sum));
  for (auto& [k, p] : probs) p /= sum;
  // Renormalized sums can still drift by a few ulps.
  DegreeDistribution mu;
  for (auto [k, p] : probs)
    if (p > 0.0) mu.probs_[k] = p;
  mu.finish();
  return mu;
}

std::string DegreeDistribution::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (auto [k, p] : probs_) j[std::to_string(k)] = p;
  return j.dump();
}

double DegreeDistribution::probability(std::size_t k) const {
  auto it = probs_.find(k);
  return it == probs_.end() ? 0.0 : it->second;
}

std::size_t DegreeDistribution::max_degree() const { return probs_.empty() ? 0 : probs_.rbegin()->first; }

DegreeDistribution DegreeDistribution::mixture(const DegreeDistribution& other, double theta) const {
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("mixture weight must lie in [0, 1]");
  if (exact_ && other.exact_ && theta == 0.5) {
    std::map<std::size_t, Rational> mix;
    for (const auto& [k, p] : *exact_) mix[k] += p / 2;
    for (const auto& [k, p] : *other.exact_) mix[k] += p / 2;
    return from_rationals(mix);
  }
  DegreeDistribution mu;
  for (auto [k, p] : probs_) mu.probs_[k] += theta * p;
  for (auto [k, p] : other.probs_) mu.probs_[k] += (1.0 - theta) * p;
  std::erase_if(mu.probs_, [](const auto& kv) { return kv.second <= 0.0; });
  mu.finish();
  return mu;
}

double mean(const DegreeDistribution& mu) { return mu.mean(); }

namespace {

// Walks degrees from the top down; returns sum_{i>=1} |tail_i| where
// tail_i = sum_{k>=i} diff(k), given the support union in descending order.
template <class Value, class Lookup>
Value tail_sum_distance(const std::vector<std::size_t>& desc_support, Lookup diff) {
  Value total = 0;
  Value tail = 0;
  for (std::size_t idx = 0; idx < desc_support.size(); ++idx) {
    std::size_t k = desc_support[idx];
    tail += diff(k);
    // tail is constant for i in (next_k, k]; count only i >= 1.
    std::size_t next_k = idx + 1 < desc_support.size() ? desc_support[idx + 1] : 0;
    std::size_t lo = std::max<std::size_t>(next_k + 1, 1);
    if (k >= lo) {
      Value width = static_cast<long long>(k - lo + 1);
      total += (tail < Value(0) ? -tail : tail) * width;
    }
  }
  return total;
}

std::vector<std::size_t> descending_union(const std::map<std::size_t, double>& a,
                                          const std::map<std::size_t, double>& b) {
  std::vector<std::size_t> keys;
  for (const auto& kv : a) keys.push_back(kv.first);
  for (const auto& kv : b) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end(), std::greater<>());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

double wasserstein(const DegreeDistribution& mu, const DegreeDistribution& mu2) {
  if (auto exact = wasserstein_exact(mu, mu2)) return to_double(*exact);
  auto keys = descending_union(mu.probabilities(), mu2.probabilities());
  return tail_sum_distance<double>(keys, [&](std::size_t k) { return mu.probability(k) - mu2.probability(k); });
}

std::optional<Rational> wasserstein_exact(const DegreeDistribution& mu, const DegreeDistribution& mu2) {
  if (!mu.exact() || !mu2.exact()) return std::nullopt;
  const auto& a = *mu.exact();
  const auto& b = *mu2.exact();
  auto keys = descending_union(mu.probabilities(), mu2.probabilities());
  auto lookup = [](const std::map<std::size_t, Rational>& m, std::size_t k) {
    auto it = m.find(k);
    return it == m.end() ? Rational(0) : it->second;
  };
  return tail_sum_distance<Rational>(keys, [&](std::size_t k) { return lookup(a, k) - lookup(b, k); });
}

DegreeDistribution empirical(const DegreeSequence& d) {
  if (d.empty()) throw std::invalid_argument("empty degree sequence");
  std::map<std::size_t, long long> counts;
  for (auto k : d) ++counts[k];
  std::map<std::size_t, Rational> probs;
  const auto n = static_cast<long long>(d.size());
  for (auto [k, c] : counts) probs[k] = Rational(c, n);
  return DegreeDistribution::from_rationals(probs);
}

std::uint64_t sorted_l1(const DegreeSequence& d, const DegreeSequence& d2) {
  if (d.size() != d2.size()) throw std::invalid_argument("length mismatch");
  std::vector<std::size_t> a = d.values(), b = d2.values();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return total;
}

DegreeSequence sample_iid(const DegreeDistribution& mu, std::size_t n, RandomStream& rng) {
  if (n == 0) throw std::invalid_argument("sample_iid: n must be at least 1");
  std::vector<std::size_t> support;
  std::vector<double> weights;
  for (auto [k, p] : mu.probabilities()) {
    support.push_back(k);
    weights.push_back(p);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::vector<std::size_t> out(n);
  for (auto& x : out) x = support[pick(rng.engine())];
  return DegreeSequence(std::move(out));
}

}  // namespace confmodel

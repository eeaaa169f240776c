#include "confembed/rep.hpp"

#include <algorithm>
#include <unordered_map>

#include "confembed/error.hpp"

namespace confembed {

namespace {

void require_dominant(const Weight& w, const char* op) {
  if (!w.is_dominant_integral()) {
    fail(ErrorKind::Usage, std::string(op) + " requires a dominant integral weight, got " + w.to_string());
  }
}

BigInt guarded_dim(const Weight& w, const RepConfig& config) {
  const BigInt d = weyl_dim(w);
  if (d > config.dimension_guard) {
    fail(ErrorKind::Resource, "dim V(" + w.to_string() + ") = " + d.str() +
                                  " exceeds the dimension guard " +
                                  std::to_string(config.dimension_guard));
  }
  return d;
}

IntVec dominant_of(const RootSystem& rs, IntVec v) {
  reflect_to_dominant(rs, v);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightSystem

WeightSystem::WeightSystem(Weight highest, std::map<IntVec, std::uint64_t> dominant)
    : highest_(std::move(highest)), dominant_(std::move(dominant)) {}

std::uint64_t WeightSystem::multiplicity(const IntVec& w) const {
  auto it = dominant_.find(dominant_of(highest_.system(), w));
  return it == dominant_.end() ? 0 : it->second;
}

std::uint64_t WeightSystem::multiplicity(const Weight& w) const {
  if (w.system().type() != highest_.system().type()) {
    fail(ErrorKind::Usage, "weight from a different root system");
  }
  if (!w.is_integral()) return 0;
  return multiplicity(w.to_ints());
}

std::map<IntVec, std::uint64_t> WeightSystem::expand() const {
  std::map<IntVec, std::uint64_t> out;
  for (const auto& [dom, mult] : dominant_) {
    for (auto& w : weyl_orbit(highest_.system(), dom)) out.emplace(std::move(w), mult);
  }
  return out;
}

std::uint64_t WeightSystem::total() const {
  std::uint64_t sum = 0;
  for (const auto& [dom, mult] : dominant_) {
    sum += mult * weyl_orbit(highest_.system(), dom).size();
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Decomposition

Decomposition::Decomposition(std::shared_ptr<const RootSystem> system) : system_(std::move(system)) {}

void Decomposition::add(const IntVec& w, std::uint64_t multiplicity) {
  if (static_cast<int>(w.size()) != system_->rank() ||
      std::any_of(w.begin(), w.end(), [](std::int64_t c) { return c < 0; })) {
    fail(ErrorKind::Usage, "decomposition keys must be dominant integral weights");
  }
  if (multiplicity == 0) return;
  terms_[w] += multiplicity;
}

void Decomposition::add(const Weight& w, std::uint64_t multiplicity) {
  if (w.system().type() != system_->type()) {
    fail(ErrorKind::Usage, "weight from a different root system");
  }
  add(w.to_ints(), multiplicity);
}

std::uint64_t Decomposition::multiplicity(const IntVec& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t Decomposition::multiplicity(const Weight& w) const {
  if (w.system().type() != system_->type() || !w.is_integral()) return 0;
  return multiplicity(w.to_ints());
}

std::vector<std::pair<Weight, std::uint64_t>> Decomposition::entries() const {
  std::vector<std::pair<Weight, std::uint64_t>> out;
  out.reserve(terms_.size());
  for (const auto& [w, m] : terms_) out.emplace_back(system_->weight(w), m);
  return out;
}

BigInt Decomposition::total_dimension() const {
  BigInt total = 0;
  for (const auto& [w, m] : terms_) total += weyl_dim(system_->weight(w)) * m;
  return total;
}

bool Decomposition::operator==(const Decomposition& other) const {
  return system_->type() == other.system_->type() && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------
// Freudenthal

WeightSystem weight_multiplicities(const Weight& lambda, const RepConfig& config) {
  require_dominant(lambda, "weight_multiplicities");
  guarded_dim(lambda, config);
  const RootSystem& rs = lambda.system();
  const IntVec top = lambda.to_ints();
  const auto& roots = rs.positive_root_coords();
  const auto& levels = rs.positive_root_levels();

  // Dominant weights of V(lambda): closed under subtracting positive roots
  // while staying dominant (covers in the dominance order are positive roots).
  std::unordered_map<IntVec, std::int64_t, IntVecHash> depth{{top, 0}};
  std::vector<IntVec> order{top};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const IntVec mu = order[head];
    const std::int64_t d = depth[mu];
    for (std::size_t r = 0; r < roots.size(); ++r) {
      IntVec nu = mu;
      bool dominant = true;
      for (std::size_t k = 0; k < nu.size(); ++k) {
        nu[k] -= roots[r][k];
        if (nu[k] < 0) dominant = false;
      }
      if (!dominant || depth.contains(nu)) continue;
      std::int64_t height = 0;
      for (auto x : levels[r]) height += x;
      depth.emplace(nu, d + height);
      order.push_back(std::move(nu));
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](const IntVec& a, const IntVec& b) { return depth[a] < depth[b]; });

  auto shifted_norm = [&](const IntVec& w) {
    IntVec s = w;
    for (auto& c : s) c += 1;
    return rs.scaled_inner(s, s);
  };
  const std::int64_t top_norm = shifted_norm(top);

  std::unordered_map<IntVec, std::uint64_t, IntVecHash> mult{{top, 1}};
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const IntVec& mu = order[idx];
    std::int64_t numerator = 0;
    for (const auto& alpha : roots) {
      IntVec nu = mu;
      while (true) {
        for (std::size_t k = 0; k < nu.size(); ++k) nu[k] += alpha[k];
        auto it = mult.find(dominant_of(rs, nu));
        if (it == mult.end()) break;
        numerator += 2 * rs.scaled_inner(nu, alpha) * static_cast<std::int64_t>(it->second);
      }
    }
    const std::int64_t denominator = top_norm - shifted_norm(mu);
    if (denominator <= 0 || numerator % denominator != 0 || numerator <= 0) {
      fail(ErrorKind::Construction, "Freudenthal recursion failed at " + rs.weight(mu).to_string());
    }
    mult.emplace(mu, static_cast<std::uint64_t>(numerator / denominator));
  }
  return WeightSystem(lambda, std::map<IntVec, std::uint64_t>(mult.begin(), mult.end()));
}

// ---------------------------------------------------------------------------
// Klimyk

Decomposition tensor_decompose(const Weight& lambda, const Weight& mu, const RepConfig& config) {
  if (lambda.system().type() != mu.system().type()) {
    fail(ErrorKind::Usage, "tensor product of weights from different root systems");
  }
  require_dominant(lambda, "tensor_decompose");
  require_dominant(mu, "tensor_decompose");
  const BigInt dim_lambda = guarded_dim(lambda, config);
  const BigInt dim_mu = guarded_dim(mu, config);

  // Iterate over the weights of the smaller factor.
  const bool swap = dim_lambda < dim_mu;
  const Weight& big = swap ? mu : lambda;
  const Weight& small = swap ? lambda : mu;

  const RootSystem& rs = lambda.system();
  const IntVec base = big.to_ints();
  std::map<IntVec, std::int64_t> acc;
  const WeightSystem ws = weight_multiplicities(small, config);
  for (const auto& [nu, m] : ws.expand()) {
    IntVec w = base;
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += nu[k] + 1;
    const int sign = reflect_to_dominant(rs, w);
    if (std::any_of(w.begin(), w.end(), [](std::int64_t c) { return c == 0; })) continue;
    for (auto& c : w) c -= 1;
    acc[w] += sign * static_cast<std::int64_t>(m);
  }

  Decomposition out(lambda.system_ptr());
  for (const auto& [w, m] : acc) {
    if (m < 0) fail(ErrorKind::Construction, "negative multiplicity in Klimyk sum");
    if (m > 0) out.add(w, static_cast<std::uint64_t>(m));
  }
  return out;
}

Rational dynkin_index_rep(const Weight& lambda) {
  const BigInt d = weyl_dim(lambda);
  return Rational(d) * casimir(lambda) / (2 * Rational(lambda.system().dimension()));
}

}  // namespace confembed

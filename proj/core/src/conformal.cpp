#include "confembed/conformal.hpp"

#include <algorithm>
#include <set>

#include "confembed/error.hpp"

namespace confembed {

namespace {

// Coefficients from the constant term up.
using Poly = std::vector<Rational>;
using IntPoly = std::vector<BigInt>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly add(Poly a, const Poly& b, int sign = 1) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  return a;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly clear_denominators(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p) l = boost::multiprecision::lcm(l, denominator_of(c));
  IntPoly out;
  for (const auto& c : p) out.push_back(numerator_of(c) * (l / denominator_of(c)));
  trim(out);
  BigInt g = 0;
  for (const auto& c : out) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (auto& c : out) c /= g;
  return out;
}

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

// Synthetic division by (q x - r); the caller guarantees exactness.
IntPoly deflate(const IntPoly& p, const BigInt& r, const BigInt& q) {
  const std::size_t n = p.size() - 1;
  std::vector<Rational> out(n);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = Rational(p[i + 1]) + carry * make_rational(r, q);
    out[i] = carry / q;
  }
  Poly as_rational(out.begin(), out.end());
  return clear_denominators(as_rational);
}

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

struct RootSearch {
  std::set<Rational> roots;
  IntPoly residual;  // degree >= 1 factor without rational roots, if any
};

RootSearch rational_roots(IntPoly p) {
  RootSearch out;
  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == 0) ++zeros;
  if (zeros > 0) {
    out.roots.insert(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
  }
  bool found = true;
  while (p.size() > 1 && found) {
    found = false;
    const auto ps = divisors(p.front());
    const auto qs = divisors(p.back());
    for (const auto& q : qs) {
      for (const auto& r : ps) {
        for (const BigInt& signed_r : {r, BigInt(-r)}) {
          const Rational x = make_rational(signed_r, q);
          if (evaluate(p, x) != 0) continue;
          out.roots.insert(x);
          p = deflate(p, numerator_of(x), denominator_of(x));
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (p.size() > 1) out.residual = p;
  return out;
}

std::string poly_to_string(const IntPoly& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    BigInt c = p[i];
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (c != 1 || i == 0) out += c.str();
    if (i >= 1) out += "k";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

struct Term {
  Rational numerator;
  Poly denominator;  // linear in k
};

std::vector<Term> eigenvalue_terms(const EmbeddingSpec& spec, const BranchingComponent& c) {
  const auto simple = spec.simple_factor_indices();
  if (c.factor_weights.size() != simple.size()) {
    fail(ErrorKind::Validation, "component at grading " + std::to_string(c.grading) +
                                    " has the wrong number of factor weights");
  }
  std::vector<Term> terms;
  for (std::size_t m = 0; m < simple.size(); ++m) {
    const auto& f = spec.factors[simple[m]];
    terms.push_back({casimir(c.factor_weights[m]), {Rational(2 * f.dual_coxeter()), 2 * f.index}});
  }
  if (c.center_norm != 0) terms.push_back({c.center_norm, {Rational(0), Rational(2)}});
  return terms;
}

std::string component_label(const BranchingComponent& c) { return "component@" + std::to_string(c.grading); }

}  // namespace

Rational sugawara_central_charge(LieType t, const Rational& k) {
  const auto rs = root_system(t);
  const Rational shifted = k + rs->dual_coxeter();
  if (shifted == 0) fail(ErrorKind::Domain, "critical level k = " + to_string(k) + " for " + t.to_string());
  return k * rs->dimension() / shifted;
}

Rational lowest_conformal_weight(const SubalgebraFactor& factor, const Weight& mu, const Rational& k_prime) {
  if (!factor.is_simple()) fail(ErrorKind::Usage, "lowest conformal weight needs a simple factor");
  if (mu.system().type() != factor.type) {
    fail(ErrorKind::Usage, "weight " + mu.to_string() + " is not a " + factor.type.to_string() + " weight");
  }
  const Rational shifted = k_prime + factor.dual_coxeter();
  if (shifted == 0) {
    fail(ErrorKind::Domain, "critical level k' = " + to_string(k_prime) + " for " + factor.label());
  }
  return casimir(mu) / (2 * shifted);
}

Rational l0_eigenvalue(const EmbeddingSpec& spec, const BranchingComponent& component, const Rational& k) {
  Rational total = 0;
  for (const auto& t : eigenvalue_terms(spec, component)) {
    const Rational d = t.denominator[0] + t.denominator[1] * k;
    if (d == 0) fail(ErrorKind::Domain, "pole at k = " + to_string(k) + " in the L(0) eigenvalue");
    total += t.numerator / d;
  }
  return total;
}

CentralChargeCheck central_charge_check(const EmbeddingSpec& spec, const Rational& k) {
  CentralChargeCheck out;
  out.rhs = sugawara_central_charge(spec.ambient, k);
  out.lhs = Rational(spec.abelian_dimension());
  for (const auto& f : spec.factors)
    if (f.is_simple()) out.lhs += sugawara_central_charge(f.type, f.index * k);
  out.equal = out.lhs == out.rhs;
  return out;
}

std::vector<Rational> level_poles(const EmbeddingSpec& spec) {
  std::set<Rational> poles;
  poles.insert(Rational(-root_system(spec.ambient)->dual_coxeter()));
  for (const auto& f : spec.factors)
    if (f.is_simple()) poles.insert(Rational(-f.dual_coxeter()) / f.index);
  for (const auto& c : spec.components)
    if (c.center_norm != 0) poles.insert(Rational(0));
  return {poles.rbegin(), poles.rend()};
}

LevelSolveResult solve_conformal_levels(const EmbeddingSpec& spec) {
  if (spec.components.empty()) fail(ErrorKind::Usage, "spec '" + spec.display_name() + "' has no components");
  LevelSolveResult result;
  const auto poles = level_poles(spec);
  for (const auto& p : poles) result.diagnostics.push_back("excluded pole k = " + to_string(p));

  std::optional<std::set<Rational>> common;
  std::vector<std::set<Rational>> per_component;
  for (const auto& c : spec.components) {
    // prod D_t - sum_t N_t prod_{s != t} D_s = 0
    const auto terms = eigenvalue_terms(spec, c);
    Poly all{Rational(1)};
    for (const auto& t : terms) all = multiply(all, t.denominator);
    Poly sum{Rational(0)};
    for (std::size_t t = 0; t < terms.size(); ++t) {
      Poly prod{terms[t].numerator};
      for (std::size_t s = 0; s < terms.size(); ++s)
        if (s != t) prod = multiply(prod, terms[s].denominator);
      sum = add(sum, prod);
    }
    const IntPoly cleared = clear_denominators(add(all, sum, -1));
    if (cleared.empty()) {
      result.diagnostics.push_back(component_label(c) + ": eigenvalue is identically 1, no constraint");
      per_component.emplace_back();
      continue;
    }
    RootSearch search = rational_roots(cleared);
    if (!search.residual.empty()) {
      result.diagnostics.push_back(component_label(c) + ": discarded factor without rational roots: " +
                                   poly_to_string(search.residual));
    }
    std::set<Rational> roots;
    for (const auto& r : search.roots)
      if (std::find(poles.begin(), poles.end(), r) == poles.end()) roots.insert(r);
    per_component.push_back(roots);
    if (!common) {
      common = roots;
    } else {
      std::set<Rational> both;
      std::set_intersection(common->begin(), common->end(), roots.begin(), roots.end(),
                            std::inserter(both, both.begin()));
      common = std::move(both);
    }
  }
  if (!common) common.emplace();

  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    for (const auto& r : per_component[i]) {
      if (!common->contains(r)) {
        result.diagnostics.push_back(component_label(spec.components[i]) + ": root k = " + to_string(r) +
                                     " is not shared by every component");
      }
    }
  }

  for (auto it = common->rbegin(); it != common->rend(); ++it) {
    LevelSolution s;
    s.k = *it;
    for (const auto& f : spec.factors) s.factor_levels.push_back(f.index * s.k);
    for (const auto& c : spec.components) s.eigenvalue_witnesses.push_back(l0_eigenvalue(spec, c, s.k));
    const auto cc = central_charge_check(spec, s.k);
    s.central_charge_lhs = cc.lhs;
    s.central_charge_rhs = cc.rhs;
    result.solutions.push_back(std::move(s));
  }
  return result;
}

}  // namespace confembed

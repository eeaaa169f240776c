#pragma once

// Combinatorial data of simple Lie algebras.
//
// Simple roots and fundamental weights use Bourbaki numbering (see
// docs/conventions.md for the diagrams). The invariant form is normalized so
// that the highest root has (theta, theta) = 2. Weights are stored in the
// fundamental-weight basis.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "confembed/rational.hpp"

namespace confembed {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Throws Error(Construction) naming the violated bound.
  void check() const;

  /// "G2", "D5", ...; the family letter is case-insensitive.
  static LieType parse(std::string_view text);
  std::string to_string() const;

  auto operator<=>(const LieType&) const = default;
};

using IntVec = std::vector<std::int64_t>;

class RootSystem;

/// Rational coordinate vector on the fundamental weights of one root system.
class Weight {
 public:
  Weight(std::shared_ptr<const RootSystem> system, std::vector<Rational> coords);
  Weight(std::shared_ptr<const RootSystem> system, const IntVec& coords);

  const RootSystem& system() const { return *system_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return system_; }
  const std::vector<Rational>& coords() const { return coords_; }
  int rank() const { return static_cast<int>(coords_.size()); }

  bool is_integral() const;
  bool is_dominant_integral() const;
  /// Throws Error(Usage) if some coordinate is not an integer.
  IntVec to_ints() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  Weight operator*(const Rational& scalar) const;

  /// Same Lie type and identical coordinates.
  bool operator==(const Weight& other) const;

  /// Bracketed coordinates, e.g. "[1,0,0,1]".
  std::string to_string() const;
  /// Combination of fundamental weights, e.g. "ω1+2ω3"; "0" for the zero weight.
  std::string label() const;

 private:
  void require_same_system(const Weight& other) const;

  std::shared_ptr<const RootSystem> system_;
  std::vector<Rational> coords_;
};

class RootSystem : public std::enable_shared_from_this<RootSystem> {
 public:
  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// cartan()[i][j] = 2(a_i, a_j)/(a_j, a_j). Row i is a_i in fundamental coordinates.
  const std::vector<IntVec>& cartan() const { return cartan_; }
  /// d_i = (a_i, a_i)/2 in the normalized form.
  const std::vector<Rational>& symmetrizers() const { return symmetrizers_; }
  /// (w_i, w_j) in the normalized form.
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  /// gram() multiplied by gram_scale(); all entries are integers.
  const std::vector<IntVec>& scaled_gram() const { return scaled_gram_; }
  std::int64_t gram_scale() const { return gram_scale_; }
  std::int64_t scaled_inner(const IntVec& a, const IntVec& b) const;

  /// Positive roots in fundamental coordinates, sorted by height; the last one is theta.
  const std::vector<IntVec>& positive_root_coords() const { return positive_roots_; }
  /// Same roots as coefficient vectors on the simple roots.
  const std::vector<IntVec>& positive_root_levels() const { return positive_root_levels_; }
  const IntVec& simple_root(int i) const { return cartan_[i]; }

  std::vector<Weight> positive_roots() const;
  Weight theta() const;
  Weight rho() const;
  Weight zero() const;
  /// Fundamental weight w_i, 1-based Bourbaki index.
  Weight fundamental(int i) const;
  Weight weight(const IntVec& coords) const;
  Weight weight(std::vector<Rational> coords) const;

  int dual_coxeter() const { return dual_coxeter_; }
  std::uint64_t dimension() const { return dimension_; }

  /// Simple-root coordinates of an integral weight lying in the root lattice
  /// (throws Error(Usage) otherwise).
  IntVec to_root_coords(const IntVec& fundamental_coords) const;

 private:
  RootSystem() = default;
  friend std::shared_ptr<const RootSystem> build_root_system(LieType t);

  LieType type_;
  std::vector<IntVec> cartan_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<Rational> symmetrizers_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<IntVec> scaled_gram_;
  std::int64_t gram_scale_ = 1;
  std::vector<IntVec> positive_roots_;
  std::vector<IntVec> positive_root_levels_;
  int dual_coxeter_ = 0;
  std::uint64_t dimension_ = 0;
};

/// Builds the full root system (fresh instance).
std::shared_ptr<const RootSystem> build_root_system(LieType t);
/// Process-wide cache over build_root_system; thread-safe.
std::shared_ptr<const RootSystem> root_system(LieType t);

Rational inner_product(const Weight& a, const Weight& b);

/// (lambda, lambda + 2 rho). Requires a dominant integral weight.
Rational casimir(const Weight& lambda);

/// Weyl dimension formula. Requires a dominant integral weight.
BigInt weyl_dim(const Weight& lambda);

struct DominantShift {
  Weight weight;
  int sign;  // +1 / -1 determinant of the reflecting element, 0 on a wall
};

/// Reflects an integral (rho-shifted) weight into the dominant chamber.
DominantShift to_dominant_shifted(const Weight& lambda);

/// In-place version on integer coordinates; returns the determinant sign of the
/// reflecting element (never 0; check for zero coordinates separately).
int reflect_to_dominant(const RootSystem& system, IntVec& coords);

/// Weyl-orbit of a dominant integral weight, generated by simple reflections.
std::vector<IntVec> weyl_orbit(const RootSystem& system, const IntVec& dominant);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

}  // namespace confembed

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liesq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A weight in fundamental-weight coordinates (Dynkin labels).
using Weight = std::vector<int>;

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

/// One simple compact factor, identified by Cartan family and rank.
struct SimpleType {
  Family family;
  int rank;

  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;

  /// Cartan name, e.g. "A3", "E6".
  std::string name() const;
  /// Compact-form name, e.g. "su(4)", "so(7)", "sp(2)", "e6".
  std::string compact_name() const;

  /// Accepts Cartan names ("A3", "g2") and compact aliases
  /// ("su4", "so7", "sp2"), case-insensitive.  Rejects invalid ranks
  /// (B needs rank >= 2, D rank >= 3, C rank >= 1, ...).
  static std::optional<SimpleType> parse(const std::string& s);
};

/// A direct sum of simple factors, e.g. "su2+su2".
struct SemisimpleAlgebra {
  std::vector<SimpleType> factors;

  bool operator==(const SemisimpleAlgebra&) const = default;
  auto operator<=>(const SemisimpleAlgebra&) const = default;

  int rank() const;
  std::string name() const;  // '+'-joined compact names
  static std::optional<SemisimpleAlgebra> parse(const std::string& s);

  /// Split a concatenated weight vector into per-factor slices.
  std::vector<Weight> split(const Weight& w) const;
  Weight join(const std::vector<Weight>& parts) const;
};

/// Root-system data for one simple type.  Construction is cheap for the
/// ranks we handle (<= 8); instances are cached via get().
class RootSystem {
 public:
  explicit RootSystem(SimpleType t);

  /// Shared, lazily built instance (immutable after construction).
  static const RootSystem& get(SimpleType t);

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }

  /// Row a is the simple root alpha_a written in fundamental-weight
  /// coordinates: cartan[a][b] = <alpha_a, alpha_b^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// d_a = (alpha_a|alpha_a)/2, normalised so long roots have d_a = 1.
  const std::vector<Rat>& half_norms() const { return half_norms_; }

  struct Root {
    Weight fund;              // fundamental-weight coordinates
    std::vector<int> simple;  // simple-root coordinates
    int height;
  };
  const std::vector<Root>& positive_roots() const { return positive_; }

  /// Highest root in fundamental coordinates (= adjoint highest weight).
  const Weight& highest_root() const { return highest_root_; }

  /// Invariant inner product of two weights given in fundamental
  /// coordinates, normalised so long roots have squared length 2.
  Rat inner(const Weight& x, const Weight& y) const;

  /// (x | alpha) for a positive root alpha given in simple-root coords.
  Rat inner_with_root(const Weight& x, const std::vector<int>& alpha_simple) const;

  /// Reflect v through the wall of simple root a (fundamental coords).
  Weight simple_reflection(const Weight& v, int a) const;

  /// Unique dominant Weyl conjugate of v (no rho shift).
  Weight dominant_conjugate(Weight v) const;

  /// rho-shifted reduction: returns the dominant weight mu and sign with
  /// w(v + rho) = mu + rho, sign = det(w); sign 0 if v + rho lies on a
  /// chamber wall (in which case mu is unspecified but valid).
  std::pair<Weight, int> dominant_reduce(Weight v) const;

  /// Dimension of the irreducible representation with highest weight
  /// lambda (Weyl dimension formula, exact).
  Int weyl_dim(const Weight& lambda) const;

  /// Dominant weights of the irrep with highest weight lambda, with
  /// multiplicities (Freudenthal recursion).  Cached per lambda.
  const std::map<Weight, Int>& dominant_weights(const Weight& lambda) const;

  /// Full weight system (every weight with its multiplicity).
  std::map<Weight, Int> weight_system(const Weight& lambda) const;

  /// True if lambda - mu is a non-negative integer combination of
  /// simple roots ("mu below lambda in the root order").
  bool below(const Weight& lambda, const Weight& mu) const;

  /// (A^-1)(lambda - mu): simple-root coordinates of the difference,
  /// or nullopt if they are not non-negative integers.
  std::optional<std::vector<int>> root_coords_of_difference(const Weight& lambda,
                                                            const Weight& mu) const;

 private:
  SimpleType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> half_norms_;
  std::vector<std::vector<Rat>> cartan_inv_;  // A^{-1}, exact
  std::vector<Root> positive_;
  Weight highest_root_;
  Weight rho_;

  mutable std::map<Weight, std::map<Weight, Int>> dom_cache_;

  void build_cartan();
  void build_half_norms();
  void build_positive_roots();
};

/// Validate that a weight has the right length and non-negative entries.
void check_dominant_weight(const SimpleType& t, const Weight& w);
void check_dominant_weight(const SemisimpleAlgebra& g, const Weight& w);

std::string weight_to_string(const Weight& w);
std::optional<Weight> weight_from_string(const std::string& s);

}  // namespace liesq

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oalgdim/rational.hpp"

namespace oalgdim {

enum class Series { A, B, C, D, E, F, G, GL };

/// Which of the two opposite systems of roots is declared positive.
enum class Orientation { Upper, Lower };

Series parse_series(std::string_view text);
std::string to_string(Series series);
Orientation parse_orientation(std::string_view text);
std::string to_string(Orientation orientation);

/// A positive root together with its coroot.  `support` holds the
/// coefficients with respect to the (oriented) simple roots, so it is always
/// nonnegative; `ambient` and `coroot` are coordinate vectors in the weight
/// space and its dual.
struct Root {
  IntVector support;
  IntVector ambient;
  IntVector coroot;
  int height() const;
};

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

inline constexpr std::uint64_t kDefaultGroupCap = 5040;

/// Immutable root data of a split reductive group.
///
/// Semisimple series use coordinates with respect to the fundamental weights,
/// so that the pairing with the i-th simple coroot is the i-th coordinate.
/// GL_n uses the n epsilon coordinates.  The pairing is always the plain dot
/// product of a weight vector with a coroot vector.
class RootDatum : public std::enable_shared_from_this<RootDatum> {
 public:
  Series series() const { return series_; }
  /// As requested: n for GL_n, the semisimple rank otherwise.
  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  int ambient_dim() const { return ambient_dim_; }
  Orientation orientation() const { return orientation_; }

  const std::vector<IntVector>& simple_roots() const { return simple_roots_; }
  const std::vector<IntVector>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  int num_pos_roots() const { return static_cast<int>(positive_roots_.size()); }

  /// Cartan integers <alpha_i, alpha_j^vee> (orientation independent).
  const std::vector<IntVector>& cartan() const { return cartan_; }

  const RationalVector& rho() const { return rho_; }
  /// Coweight with alpha(t) = 1 for every simple root alpha.
  const RationalVector& t_vec() const { return t_; }

  std::uint64_t weyl_order() const { return weyl_order_; }
  std::uint64_t group_cap() const { return group_cap_; }

  /// "A3/upper"; equal fingerprints mean identical data.
  std::string fingerprint() const;
  /// "A3"; identifies the Coxeter system, which ignores orientation.
  std::string coxeter_name() const;

  /// The same group with every root negated.
  DatumPtr flipped() const;

  DatumPtr ptr() const { return shared_from_this(); }

 private:
  friend DatumPtr build_root_datum(Series, int, Orientation, std::uint64_t);
  RootDatum() = default;

  Series series_ = Series::A;
  int rank_ = 0;
  int ambient_dim_ = 0;
  Orientation orientation_ = Orientation::Upper;
  std::vector<IntVector> cartan_;
  std::vector<IntVector> simple_roots_;
  std::vector<IntVector> simple_coroots_;
  std::vector<Root> positive_roots_;
  RationalVector rho_;
  RationalVector t_;
  std::uint64_t weyl_order_ = 1;
  std::uint64_t group_cap_ = kDefaultGroupCap;
};

/// Builds the datum; throws UnsupportedType for unknown (series, rank) pairs
/// and RankTooLarge when |W| exceeds `group_cap`.
DatumPtr build_root_datum(Series series, int rank,
                          Orientation orientation = Orientation::Upper,
                          std::uint64_t group_cap = kDefaultGroupCap);

/// Order of the Weyl group, computed from the classification (no enumeration).
/// Saturates at UINT64_MAX.
std::uint64_t weyl_group_order(Series series, int rank);

/// A weight in the coordinates of its datum.
class Weight {
 public:
  Weight(DatumPtr datum, RationalVector coords);

  static Weight zero(const DatumPtr& datum);
  static Weight rho(const DatumPtr& datum);
  static Weight minus_rho(const DatumPtr& datum);

  const DatumPtr& datum() const { return datum_; }
  const RationalVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  bool operator==(const Weight& other) const;

  std::string to_string() const;

 private:
  DatumPtr datum_;
  RationalVector coords_;
};

void require_same_datum(const RootDatum& a, const RootDatum& b);

Rational pairing(const Weight& lambda, const IntVector& coroot);
/// Pairing with the i-th simple coroot (0-based).
Rational pairing(const Weight& lambda, int simple_index);

bool is_integral(const Weight& lambda);
void require_integral(const Weight& lambda);

/// <lambda + rho, alpha^vee> >= 0 for all simple alpha.
bool dot_dominant(const Weight& lambda);
/// Simple roots (0-based) with <lambda + rho, alpha^vee> = 0.
std::vector<int> singular_support(const Weight& lambda);
/// Simple roots with <lambda, alpha^vee> a nonnegative integer (no rho shift).
std::vector<int> maximal_parabolic_for(const Weight& lambda);

/// Number of positive roots whose support lies inside `levi`.
int levi_positive_roots(const RootDatum& datum, const std::vector<int>& levi);
/// dim g/p_I = #positive roots - #positive roots of the Levi of I.
int dim_g_mod_p(const RootDatum& datum, const std::vector<int>& levi);

/// Parses "1,3" into 0-based simple indices, validating the range.
std::vector<int> parse_simple_subset(const RootDatum& datum, std::string_view text);

}  // namespace oalgdim

#pragma once

#include <string>
#include <vector>

#include "oalgdim/error.hpp"
#include "oalgdim/goldie.hpp"
#include "oalgdim/rootdata.hpp"
#include "oalgdim/weyl.hpp"

namespace oalgdim {

/// Canonical dimension of the representation induced from a generalized
/// Verma module for the standard parabolic of `levi`: dim g/p.
int dim_parabolic_induction(const RootDatum& datum, const std::vector<int>& levi);

struct BoundsReport {
  int r_min = 0;   // half the dimension of the minimal nilpotent orbit
  int upper = 0;   // 2 * #positive roots
  std::vector<std::string> hypothesis_warnings;
};

/// Upper bound 2 #Phi+ for representations with infinitesimal character and
/// lower bound r_min = h^vee - 1 for nonzero dimension.  Warnings flag the
/// small primes excluded for types B, C, F4 (p = 2) and G2 (p = 2, 3).
BoundsReport dim_bounds(const RootDatum& datum, int p);

/// Dual Coxeter number of the simple factor (0 for the abelian GL_1).
int dual_coxeter_number(Series series, int rank);

enum class TrianguCase { Generic, Special };

/// Parameter (delta1, delta2, L) of a trianguline representation; the
/// characters are opaque labels used only for reporting.
struct TrianguParam {
  std::string delta1 = "delta1";
  std::string delta2 = "delta2";
  TrianguCase kind = TrianguCase::Generic;
  std::string line = "L";
};

struct Constituent {
  std::string name;
  int dim = 0;
};

struct TrianguReport {
  int dim = 0;
  std::vector<Constituent> constituents;
  int upper_bound = 0;
};

TrianguReport gl2_trianguline_dim(const TrianguParam& param);

// --- line bundles on the Drinfeld half space --------------------------------

/// Index of the unique nonvanishing cohomology degree (or the wall index).
int drinfeld_i0(int d, int r, int s);

/// Which (z, mu) pair feeds step j = 0..d-1.
enum class StepPairing {
  Aligned,  // (z_{j+1}, mu_{j+1})
  Lagged,   // (z_j, mu_{j+1})
};

std::string to_string(StepPairing pairing);
StepPairing parse_step_pairing(std::string_view text);

struct DrinfeldConfig {
  StepPairing pairing = StepPairing::Lagged;
  Orientation orientation = Orientation::Upper;
  bool self_test = true;
};

struct DrinfeldWeight {
  int i = 0;
  Weight mu;
  int word_index = 0;  // mu = w_{word_index} . lambda
};

/// The weights mu_{i,lambda}, i = 1..d, for lambda = (r, s, ..., s) in GL_{d+1}.
std::vector<DrinfeldWeight> drinfeld_weights(int d, int r, int s, Orientation orientation = Orientation::Upper);
std::vector<DrinfeldWeight> drinfeld_weights(const DatumPtr& datum, int r, int s);

/// w_j = s_j ... s_1 in GL_{d+1}.
WeylElement drinfeld_w(const DatumPtr& datum, int j);
/// Block permutation z_j (cyclic shift k -> k + j mod d+1); IndexOutOfRange
/// unless 0 <= j <= d.
WeylElement drinfeld_z(const DatumPtr& datum, int j);
WeylElement drinfeld_z(int d, int j);

struct DrinfeldStep {
  int j = 0;
  int mu_index = 0;
  Weight mu;
  int z_index = 0;
  WeylElement z;
  Weight conjugated;  // z^{-1} . mu
  Weight dominant;    // v^{-1} . conjugated
  WeylElement v;
  std::vector<int> singular;
  GoldieReport goldie;
};

struct DrinfeldReport {
  int d = 0;
  int r = 0;
  int s = 0;
  int i0 = 0;
  DrinfeldConfig config;
  int num_pos_roots = 0;
  std::vector<DrinfeldStep> steps;
  int min_m = 0;
  int dim = 0;
};

/// #Phi+ - min_j m_{v_j} for H^0 of the line bundle of lambda = (r, s, ..., s).
DrinfeldReport drinfeld_dim(int d, int r, int s, const DrinfeldConfig& config = {},
                            std::uint64_t group_cap = kDefaultGroupCap);

/// Recomputes (d, r, s) = (1, 0, 0) and throws CalibrationError unless the
/// answer is 1.  Runs at most once per configuration and process.
void drinfeld_self_test(const DrinfeldConfig& config);

}  // namespace oalgdim

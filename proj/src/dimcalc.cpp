#include "oalgdim/dimcalc.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "oalgdim/error.hpp"

namespace oalgdim {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

}  // namespace

int dim_parabolic_induction(const RootDatum& datum, const std::vector<int>& levi) {
  return dim_g_mod_p(datum, levi);
}

int dual_coxeter_number(Series series, int rank) {
  switch (series) {
    case Series::A: return rank + 1;
    case Series::B: return 2 * rank - 1;
    case Series::C: return rank + 1;
    case Series::D: return 2 * rank - 2;
    case Series::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    case Series::F: return 9;
    case Series::G: return 4;
    case Series::GL: return rank >= 2 ? rank : 0;
  }
  fail(ErrorKind::UnsupportedType, "unknown series");
}

BoundsReport dim_bounds(const RootDatum& datum, int p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime");
  BoundsReport out;
  const int h = dual_coxeter_number(datum.series(), datum.rank());
  out.r_min = h > 0 ? h - 1 : 0;
  out.upper = 2 * datum.num_pos_roots();
  const std::string name = datum.coxeter_name();
  switch (datum.series()) {
    case Series::B:
    case Series::C:
    case Series::F:
      if (p == 2) out.hypothesis_warnings.push_back(name + ": simplicity of induced modules needs p > 2");
      break;
    case Series::G:
      if (p == 2 || p == 3) {
        out.hypothesis_warnings.push_back(name + ": simplicity of induced modules needs p > 3");
      }
      break;
    default:
      break;
  }
  return out;
}

TrianguReport gl2_trianguline_dim(const TrianguParam& param) {
  const DatumPtr gl2 = build_root_datum(Series::GL, 2);
  const int principal = dim_parabolic_induction(*gl2, {});
  // W(delta1, delta2) is finite dimensional, like the simple module of a
  // dominant regular weight.
  const int finite = dim_simple_hw(Weight::zero(gl2)).dim;
  // St^an is the quotient of B^an by the smaller-dimensional W.
  const int steinberg = std::max(principal, finite);

  TrianguReport out;
  const std::string d1 = param.delta1;
  const std::string d2 = param.delta2;
  if (param.kind == TrianguCase::Generic) {
    out.constituents = {{"B^an(" + d1 + "," + d2 + ")", principal}, {"B^an(" + d2 + "," + d1 + ")", principal}};
  } else {
    out.constituents = {{"W(" + d1 + "," + d2 + ")", finite},
                        {"St^an(" + d1 + "," + d2 + ")", steinberg},
                        {"B^an(" + d2 + "," + d1 + ")", principal}};
  }
  // An extension has the larger of the two dimensions.
  for (const auto& c : out.constituents) out.dim = std::max(out.dim, c.dim);
  out.upper_bound = dim_bounds(*gl2, 2).upper;
  if (out.dim > out.upper_bound) {
    fail(ErrorKind::InternalBoundViolation, "trianguline dimension exceeds 2 #Phi+");
  }
  return out;
}

int drinfeld_i0(int d, int r, int s) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be at least 1");
  if (r >= s) return 0;
  if (s >= r + d + 1) return d;
  return s - r - 1;
}

std::string to_string(StepPairing pairing) {
  return pairing == StepPairing::Aligned ? "aligned" : "lagged";
}

StepPairing parse_step_pairing(std::string_view text) {
  if (text == "aligned") return StepPairing::Aligned;
  if (text == "lagged") return StepPairing::Lagged;
  fail(ErrorKind::InvalidArgument, "pairing must be 'aligned' or 'lagged', got '" + std::string(text) + "'");
}

WeylElement drinfeld_w(const DatumPtr& datum, int j) {
  if (j < 0 || j > datum->semisimple_rank()) fail(ErrorKind::IndexOutOfRange, "w_j needs 0 <= j <= d");
  std::vector<int> word;
  for (int k = j; k >= 1; --k) word.push_back(k - 1);
  return WeylElement::from_word(datum, word);
}

WeylElement drinfeld_z(const DatumPtr& datum, int j) {
  if (datum->series() != Series::GL) fail(ErrorKind::UnsupportedType, "z_j is defined for GL_{d+1}");
  const int d = datum->rank() - 1;
  if (j < 0 || j > d) {
    fail(ErrorKind::IndexOutOfRange, "z_j needs 0 <= j <= " + std::to_string(d) + ", got " + std::to_string(j));
  }
  // The cyclic shift e_k -> e_{k+1} is s_1 s_2 ... s_d; z_j is its j-th power.
  std::vector<int> cycle(d);
  for (int k = 0; k < d; ++k) cycle[k] = k;
  const WeylElement shift = WeylElement::from_word(datum, cycle);
  WeylElement out = WeylElement::identity(datum);
  for (int k = 0; k < j; ++k) out = out * shift;
  return out;
}

WeylElement drinfeld_z(int d, int j) { return drinfeld_z(build_root_datum(Series::GL, d + 1), j); }

std::vector<DrinfeldWeight> drinfeld_weights(const DatumPtr& datum, int r, int s) {
  const int d = datum->rank() - 1;
  const int i0 = drinfeld_i0(d, r, s);
  RationalVector coords(d + 1, Rational(s));
  coords[0] = r;
  const Weight lambda(datum, coords);
  std::vector<DrinfeldWeight> out;
  for (int i = 1; i <= d; ++i) {
    const int index = i <= i0 ? i - 1 : i;
    out.push_back(DrinfeldWeight{i, dot_apply(drinfeld_w(datum, index), lambda), index});
  }
  return out;
}

std::vector<DrinfeldWeight> drinfeld_weights(int d, int r, int s, Orientation orientation) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be at least 1");
  return drinfeld_weights(build_root_datum(Series::GL, d + 1, orientation), r, s);
}

DrinfeldReport drinfeld_dim(int d, int r, int s, const DrinfeldConfig& config, std::uint64_t group_cap) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be at least 1");
  const DatumPtr datum = build_root_datum(Series::GL, d + 1, config.orientation, group_cap);
  if (config.self_test) drinfeld_self_test(config);

  DrinfeldReport report;
  report.d = d;
  report.r = r;
  report.s = s;
  report.i0 = drinfeld_i0(d, r, s);
  report.config = config;
  report.num_pos_roots = datum->num_pos_roots();

  const auto weights = drinfeld_weights(datum, r, s);
  for (int j = 0; j < d; ++j) {
    const int z_index = config.pairing == StepPairing::Aligned ? j + 1 : j;
    const Weight& mu = weights[j].mu;
    const WeylElement z = drinfeld_z(datum, z_index);
    const Weight conjugated = dot_apply(z.inverse(), mu);
    const DominantConjugate conj = dominant_conjugate(conjugated);
    GoldieReport goldie = goldie_degree(conj.w);

    if (!dot_dominant(conj.mu) || dot_apply(conj.w.inverse(), conjugated) != conj.mu ||
        !is_max_coset_rep(conj.w, conj.singular) || goldie.m < 0 || goldie.m > report.num_pos_roots) {
      fail(ErrorKind::InternalBoundViolation, "step " + std::to_string(j) + " failed its invariants");
    }
    report.steps.push_back(DrinfeldStep{j, j + 1, mu, z_index, z, conjugated, conj.mu, conj.w, conj.singular,
                                        std::move(goldie)});
  }
  report.min_m = std::min_element(report.steps.begin(), report.steps.end(), [](const auto& a, const auto& b) {
                   return a.goldie.m < b.goldie.m;
                 })->goldie.m;
  report.dim = report.num_pos_roots - report.min_m;
  if (report.min_m >= report.num_pos_roots) {
    fail(ErrorKind::InternalBoundViolation, "every step is finite dimensional (min m = #Phi+)");
  }
  return report;
}

void drinfeld_self_test(const DrinfeldConfig& config) {
  static std::mutex mutex;
  static std::set<std::pair<int, int>> verified;
  const std::pair<int, int> key{static_cast<int>(config.pairing), static_cast<int>(config.orientation)};
  {
    std::lock_guard lock(mutex);
    if (verified.count(key)) return;
  }
  DrinfeldConfig probe = config;
  probe.self_test = false;
  int dim = -1;
  try {
    dim = drinfeld_dim(1, 0, 0, probe).dim;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalBoundViolation) throw;
  }
  if (dim != 1) {
    const std::string got = dim < 0 ? "no positive dimension" : std::to_string(dim);
    fail(ErrorKind::CalibrationError, "self-test (d,r,s) = (1,0,0) gave " + got + " instead of 1 for pairing=" +
                                          to_string(config.pairing) + " orientation=" + to_string(config.orientation));
  }
  std::lock_guard lock(mutex);
  verified.insert(key);
}

}  // namespace oalgdim

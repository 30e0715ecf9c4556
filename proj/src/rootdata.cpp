#include "oalgdim/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "oalgdim/error.hpp"

namespace oalgdim {

namespace {

using Matrix = std::vector<IntVector>;

Matrix chain_cartan(int n) {
  Matrix c(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  }
  return c;
}

void link(Matrix& c, int i, int j) {
  c[i][j] = -1;
  c[j][i] = -1;
}

// c[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering (0-based here).
Matrix cartan_matrix(Series series, int n) {
  switch (series) {
    case Series::A:
    case Series::GL:
      return chain_cartan(n);
    case Series::B: {
      Matrix c = chain_cartan(n);
      c[n - 2][n - 1] = -2;  // alpha_n short
      return c;
    }
    case Series::C: {
      Matrix c = chain_cartan(n);
      c[n - 1][n - 2] = -2;  // alpha_n long
      return c;
    }
    case Series::D: {
      Matrix c(n, IntVector(n, 0));
      for (int i = 0; i < n; ++i) c[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 1);
      return c;
    }
    case Series::E: {
      Matrix c(n, IntVector(n, 0));
      for (int i = 0; i < n; ++i) c[i][i] = 2;
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      return c;
    }
    case Series::F: {
      Matrix c = chain_cartan(4);
      c[1][2] = -2;  // alpha_2 long, alpha_3 short
      return c;
    }
    case Series::G: {
      Matrix c = chain_cartan(2);
      c[1][0] = -3;  // alpha_1 short, alpha_2 long
      return c;
    }
  }
  fail(ErrorKind::UnsupportedType, "unknown series");
}

bool supported(Series series, int rank) {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 3;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
    case Series::GL: return rank >= 1;
  }
  return false;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out = saturating_mul(out, static_cast<std::uint64_t>(k));
  return out;
}

std::uint64_t pow2(int n) {
  std::uint64_t out = 1;
  for (int k = 0; k < n; ++k) out = saturating_mul(out, 2);
  return out;
}

// Solves c x = 1 exactly (Gauss-Jordan over the rationals).
RationalVector solve_all_ones(const Matrix& c) {
  const std::size_t n = c.size();
  std::vector<RationalVector> aug(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = c[i][j];
    aug[i][n] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(ErrorKind::InternalBoundViolation, "singular Cartan matrix");
    std::swap(aug[pivot], aug[col]);
    const Rational inv = Rational(1) / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      const Rational factor = aug[row][col];
      for (std::size_t k = col; k <= n; ++k) aug[row][k] -= factor * aug[col][k];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

IntVector combine(const IntVector& coeffs, const std::vector<IntVector>& basis, int dim) {
  IntVector out(dim, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (int k = 0; k < dim; ++k) out[k] += coeffs[i] * basis[i][k];
  }
  return out;
}

// All positive (root, coroot) pairs in simple coordinates, closed under the
// simple reflections starting from the simple roots.
std::vector<std::pair<IntVector, IntVector>> close_positive_roots(const Matrix& c) {
  const int n = static_cast<int>(c.size());
  std::set<std::pair<IntVector, IntVector>> seen;
  std::queue<std::pair<IntVector, IntVector>> todo;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert({e, e});
    todo.push({e, e});
  }
  while (!todo.empty()) {
    auto [root, coroot] = todo.front();
    todo.pop();
    for (int j = 0; j < n; ++j) {
      long long root_pair = 0;    // <beta, alpha_j^vee>
      long long coroot_pair = 0;  // <alpha_j, beta^vee>
      for (int i = 0; i < n; ++i) {
        root_pair += root[i] * c[i][j];
        coroot_pair += coroot[i] * c[j][i];
      }
      IntVector r2 = root;
      IntVector c2 = coroot;
      r2[j] -= root_pair;
      c2[j] -= coroot_pair;
      const bool positive = std::all_of(r2.begin(), r2.end(), [](long long v) { return v >= 0; });
      if (!positive) continue;
      if (seen.insert({r2, c2}).second) todo.push({r2, c2});
    }
  }
  std::vector<std::pair<IntVector, IntVector>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto ha = std::accumulate(a.first.begin(), a.first.end(), 0LL);
    const auto hb = std::accumulate(b.first.begin(), b.first.end(), 0LL);
    if (ha != hb) return ha < hb;
    return a.first > b.first;
  });
  return out;
}

}  // namespace

Series parse_series(std::string_view text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  static const std::map<std::string, Series, std::less<>> names{
      {"A", Series::A}, {"B", Series::B}, {"C", Series::C}, {"D", Series::D},
      {"E", Series::E}, {"F", Series::F}, {"G", Series::G}, {"GL", Series::GL}};
  const auto it = names.find(upper);
  if (it == names.end()) fail(ErrorKind::UnsupportedType, "unknown series '" + std::string(text) + "'");
  return it->second;
}

std::string to_string(Series series) {
  switch (series) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E: return "E";
    case Series::F: return "F";
    case Series::G: return "G";
    case Series::GL: return "GL";
  }
  return "?";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "upper") return Orientation::Upper;
  if (text == "lower") return Orientation::Lower;
  fail(ErrorKind::InvalidArgument, "orientation must be 'upper' or 'lower', got '" + std::string(text) + "'");
}

std::string to_string(Orientation orientation) {
  return orientation == Orientation::Upper ? "upper" : "lower";
}

int Root::height() const {
  return static_cast<int>(std::accumulate(support.begin(), support.end(), 0LL));
}

std::uint64_t weyl_group_order(Series series, int rank) {
  switch (series) {
    case Series::A: return factorial(rank + 1);
    case Series::B:
    case Series::C: return saturating_mul(pow2(rank), factorial(rank));
    case Series::D: return saturating_mul(pow2(rank - 1), factorial(rank));
    case Series::E:
      return rank == 6 ? 51840ULL : rank == 7 ? 2903040ULL : 696729600ULL;
    case Series::F: return 1152;
    case Series::G: return 12;
    case Series::GL: return factorial(rank);
  }
  return 0;
}

std::string RootDatum::fingerprint() const {
  return coxeter_name() + "/" + to_string(orientation_);
}

std::string RootDatum::coxeter_name() const {
  return to_string(series_) + std::to_string(rank_);
}

DatumPtr RootDatum::flipped() const {
  return build_root_datum(series_, rank_,
                          orientation_ == Orientation::Upper ? Orientation::Lower : Orientation::Upper,
                          group_cap_);
}

DatumPtr build_root_datum(Series series, int rank, Orientation orientation, std::uint64_t group_cap) {
  if (!supported(series, rank)) {
    fail(ErrorKind::UnsupportedType,
         "unsupported root datum " + to_string(series) + std::to_string(rank));
  }
  const std::uint64_t order = weyl_group_order(series, rank);
  if (order > group_cap) {
    fail(ErrorKind::RankTooLarge, "|W| = " + std::to_string(order) + " for " + to_string(series) +
                                      std::to_string(rank) + " exceeds the cap " +
                                      std::to_string(group_cap));
  }

  auto datum = std::shared_ptr<RootDatum>(new RootDatum());
  datum->series_ = series;
  datum->rank_ = rank;
  datum->orientation_ = orientation;
  datum->weyl_order_ = order;
  datum->group_cap_ = group_cap;

  const int ss_rank = series == Series::GL ? rank - 1 : rank;
  datum->cartan_ = cartan_matrix(series, ss_rank);

  if (series == Series::GL) {
    const int n = rank;
    datum->ambient_dim_ = n;
    for (int i = 0; i + 1 < n; ++i) {
      IntVector alpha(n, 0);
      alpha[i] = 1;
      alpha[i + 1] = -1;
      datum->simple_roots_.push_back(alpha);
      datum->simple_coroots_.push_back(alpha);
    }
    datum->rho_.resize(n);
    datum->t_.resize(n);
    for (int i = 0; i < n; ++i) {
      datum->rho_[i] = n - 1 - i;
      datum->t_[i] = n - 1 - i;
    }
  } else {
    datum->ambient_dim_ = ss_rank;
    for (int i = 0; i < ss_rank; ++i) {
      datum->simple_roots_.push_back(datum->cartan_[i]);
      IntVector e(ss_rank, 0);
      e[i] = 1;
      datum->simple_coroots_.push_back(e);
    }
    datum->rho_.assign(ss_rank, Rational(1));
    datum->t_ = solve_all_ones(datum->cartan_);
  }

  const int dim = datum->ambient_dim_;
  for (const auto& [support, cosupport] : close_positive_roots(datum->cartan_)) {
    Root root;
    root.support = support;
    root.ambient = combine(support, datum->simple_roots_, dim);
    root.coroot = combine(cosupport, datum->simple_coroots_, dim);
    datum->positive_roots_.push_back(std::move(root));
  }

  if (orientation == Orientation::Lower) {
    auto negate = [](IntVector& v) {
      for (auto& x : v) x = -x;
    };
    for (auto& v : datum->simple_roots_) negate(v);
    for (auto& v : datum->simple_coroots_) negate(v);
    for (auto& root : datum->positive_roots_) {
      negate(root.ambient);
      negate(root.coroot);
    }
    for (auto& x : datum->rho_) x = -x;
    for (auto& x : datum->t_) x = -x;
  }
  return datum;
}

Weight::Weight(DatumPtr datum, RationalVector coords) : datum_(std::move(datum)), coords_(std::move(coords)) {
  if (!datum_) fail(ErrorKind::InvalidArgument, "weight without root datum");
  if (static_cast<int>(coords_.size()) != datum_->ambient_dim()) {
    fail(ErrorKind::InvalidArgument, "weight for " + datum_->fingerprint() + " needs " +
                                         std::to_string(datum_->ambient_dim()) + " coordinates, got " +
                                         std::to_string(coords_.size()));
  }
}

Weight Weight::zero(const DatumPtr& datum) {
  return Weight(datum, RationalVector(datum->ambient_dim(), Rational(0)));
}

Weight Weight::rho(const DatumPtr& datum) { return Weight(datum, datum->rho()); }

Weight Weight::minus_rho(const DatumPtr& datum) { return -rho(datum); }

Weight Weight::operator+(const Weight& other) const {
  require_same_datum(*datum_, *other.datum_);
  RationalVector out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
  return Weight(datum_, std::move(out));
}

Weight Weight::operator-(const Weight& other) const { return *this + (-other); }

Weight Weight::operator-() const {
  RationalVector out = coords_;
  for (auto& x : out) x = -x;
  return Weight(datum_, std::move(out));
}

bool Weight::operator==(const Weight& other) const {
  return datum_->fingerprint() == other.datum_->fingerprint() && coords_ == other.coords_;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += oalgdim::to_string(coords_[i]);
  }
  return out + ")";
}

void require_same_datum(const RootDatum& a, const RootDatum& b) {
  if (&a != &b && a.fingerprint() != b.fingerprint()) {
    fail(ErrorKind::DatumMismatch, "objects from " + a.fingerprint() + " and " + b.fingerprint());
  }
}

Rational pairing(const Weight& lambda, const IntVector& coroot) {
  if (coroot.size() != lambda.size()) {
    fail(ErrorKind::DatumMismatch, "coroot has " + std::to_string(coroot.size()) +
                                       " coordinates, weight has " + std::to_string(lambda.size()));
  }
  Rational out = 0;
  for (std::size_t i = 0; i < coroot.size(); ++i) {
    if (coroot[i] != 0) out += lambda.coords()[i] * coroot[i];
  }
  return out;
}

Rational pairing(const Weight& lambda, int simple_index) {
  const auto& coroots = lambda.datum()->simple_coroots();
  if (simple_index < 0 || simple_index >= static_cast<int>(coroots.size())) {
    fail(ErrorKind::IndexOutOfRange, "simple root index " + std::to_string(simple_index + 1) +
                                         " out of range for " + lambda.datum()->fingerprint());
  }
  return pairing(lambda, coroots[simple_index]);
}

bool is_integral(const Weight& lambda) {
  const int n = lambda.datum()->semisimple_rank();
  for (int i = 0; i < n; ++i) {
    if (!is_integer(pairing(lambda, i))) return false;
  }
  return true;
}

void require_integral(const Weight& lambda) {
  if (!is_integral(lambda)) {
    fail(ErrorKind::NonIntegralWeight, "weight " + lambda.to_string() + " is not integral");
  }
}

bool dot_dominant(const Weight& lambda) {
  require_integral(lambda);
  const Weight shifted = lambda + Weight::rho(lambda.datum());
  const int n = lambda.datum()->semisimple_rank();
  for (int i = 0; i < n; ++i) {
    if (pairing(shifted, i) < 0) return false;
  }
  return true;
}

std::vector<int> singular_support(const Weight& lambda) {
  require_integral(lambda);
  const Weight shifted = lambda + Weight::rho(lambda.datum());
  std::vector<int> out;
  const int n = lambda.datum()->semisimple_rank();
  for (int i = 0; i < n; ++i) {
    if (pairing(shifted, i) == 0) out.push_back(i);
  }
  return out;
}

std::vector<int> maximal_parabolic_for(const Weight& lambda) {
  require_integral(lambda);
  std::vector<int> out;
  const int n = lambda.datum()->semisimple_rank();
  for (int i = 0; i < n; ++i) {
    if (pairing(lambda, i) >= 0) out.push_back(i);
  }
  return out;
}

int levi_positive_roots(const RootDatum& datum, const std::vector<int>& levi) {
  std::vector<bool> in_levi(datum.semisimple_rank(), false);
  for (int i : levi) {
    if (i < 0 || i >= datum.semisimple_rank()) {
      fail(ErrorKind::IndexOutOfRange, "simple root index " + std::to_string(i + 1) +
                                           " out of range for " + datum.fingerprint());
    }
    in_levi[i] = true;
  }
  int count = 0;
  for (const auto& root : datum.positive_roots()) {
    bool inside = true;
    for (std::size_t i = 0; i < root.support.size(); ++i) {
      if (root.support[i] != 0 && !in_levi[i]) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
  }
  return count;
}

int dim_g_mod_p(const RootDatum& datum, const std::vector<int>& levi) {
  return datum.num_pos_roots() - levi_positive_roots(datum, levi);
}

std::vector<int> parse_simple_subset(const RootDatum& datum, std::string_view text) {
  std::vector<int> out;
  for (const auto& value : parse_rational_list(text)) {
    if (!is_integer(value)) fail(ErrorKind::InvalidArgument, "simple root index must be an integer");
    const auto index = boost::multiprecision::numerator(value);
    if (index < 1 || index > datum.semisimple_rank()) {
      fail(ErrorKind::IndexOutOfRange, "simple root index " + index.str() + " out of range 1.." +
                                           std::to_string(datum.semisimple_rank()));
    }
    out.push_back(static_cast<int>(index) - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oalgdim

#include "oalgdim/goldie.hpp"

#include <numeric>

#include "oalgdim/error.hpp"

namespace oalgdim {

namespace {

// y^{-1}(t) for every y, by u_y = s(u_{ys}) along right descents.
std::vector<std::vector<Integer>> inverse_images(const WeylGroup& g, const std::vector<Integer>& t) {
  const RootDatum& datum = *g.datum();
  const int n = datum.ambient_dim();
  std::vector<std::vector<Integer>> u(g.size());
  u[0] = t;
  for (int y = 1; y < g.size(); ++y) {
    const int s = g.word(y).back();
    const auto& prev = u[g.right_mult(y, s)];
    const auto& alpha = datum.simple_roots()[s];
    const auto& coroot = datum.simple_coroots()[s];
    Integer value = 0;
    for (int k = 0; k < n; ++k) value += prev[k] * alpha[k];
    u[y] = prev;
    for (int k = 0; k < n; ++k) u[y][k] -= value * coroot[k];
  }
  return u;
}

std::vector<Integer> integral_multiple(const RationalVector& t) {
  Integer lcm = 1;
  for (const auto& x : t) {
    const Integer den = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<Integer> out;
  out.reserve(t.size());
  for (const auto& x : t) out.push_back(boost::multiprecision::numerator(Rational(x * lcm)));
  return out;
}

void check_t(const RootDatum& datum, const RationalVector& t) {
  if (static_cast<int>(t.size()) != datum.ambient_dim()) {
    fail(ErrorKind::InvalidArgument, "t needs " + std::to_string(datum.ambient_dim()) + " coordinates");
  }
  for (const auto& alpha : datum.simple_roots()) {
    Rational value = 0;
    for (std::size_t k = 0; k < t.size(); ++k) value += t[k] * alpha[k];
    if (value != 1) fail(ErrorKind::InvalidArgument, "t must satisfy alpha(t) = 1 for every simple root");
  }
}

// m! / prod e_i! with m = sum e_i.
Integer multinomial(const std::vector<int>& exponents) {
  Integer out = 1;
  int used = 0;
  for (int e : exponents) {
    for (int k = 1; k <= e; ++k) {
      ++used;
      out *= used;
      out /= k;
    }
  }
  return out;
}

// Depth-first walk over exponent vectors of total degree `remaining`,
// carrying the products prod_{i < var} u_i^{e_i} for every support element.
class MonomialSearch {
 public:
  MonomialSearch(std::vector<Integer> coeffs, std::vector<std::vector<Integer>> points)
      : coeffs_(std::move(coeffs)), points_(std::move(points)), dim_(points_.empty() ? 0 : points_[0].size()) {}

  // True (and fills `exponents`, `sum`) if some monomial of degree m has a
  // nonzero coefficient sum.
  bool find_nonzero(int m, std::vector<int>& exponents, Integer& sum) {
    exponents.assign(dim_, 0);
    if (dim_ == 0) {
      sum = 0;
      for (const auto& c : coeffs_) sum += c;
      return m == 0 && sum != 0;
    }
    return walk(0, m, coeffs_, exponents, sum);
  }

 private:
  bool walk(std::size_t var, int remaining, const std::vector<Integer>& partial, std::vector<int>& exponents,
            Integer& sum) {
    if (var + 1 == dim_) {
      exponents[var] = remaining;
      sum = 0;
      for (std::size_t j = 0; j < partial.size(); ++j) {
        if (partial[j] == 0) continue;
        sum += partial[j] * boost::multiprecision::pow(points_[j][var], static_cast<unsigned>(remaining));
      }
      return sum != 0;
    }
    std::vector<Integer> next = partial;
    for (int e = 0; e <= remaining; ++e) {
      if (e > 0) {
        for (std::size_t j = 0; j < next.size(); ++j) next[j] *= points_[j][var];
      }
      exponents[var] = e;
      if (walk(var + 1, remaining - e, next, exponents, sum)) return true;
    }
    exponents[var] = 0;
    return false;
  }

  std::vector<Integer> coeffs_;
  std::vector<std::vector<Integer>> points_;
  std::size_t dim_;
};

}  // namespace

Integer ACoeffRow::at(const WeylElement& y) const {
  for (const auto& [element, value] : entries) {
    if (element == y) return value;
  }
  return 0;
}

int GoldieCertificate::total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

ACoeffRow a_coeffs(const WeylElement& w) { return ACoeffRow{w, inverse_kl_row(w)}; }

int goldie_degree_of_row(const DatumPtr& datum, const std::vector<Integer>& row, const RationalVector& t,
                         GoldieCertificate* certificate) {
  check_t(*datum, t);
  const auto group = WeylGroup::of(datum);
  if (static_cast<int>(row.size()) != group->size()) {
    fail(ErrorKind::InvalidArgument, "coefficient row has the wrong length");
  }
  const auto images = inverse_images(*group, integral_multiple(t));
  std::vector<Integer> coeffs;
  std::vector<std::vector<Integer>> points;
  for (int y = 0; y < group->size(); ++y) {
    if (row[y] == 0) continue;
    coeffs.push_back(row[y]);
    points.push_back(images[y]);
  }
  MonomialSearch search(std::move(coeffs), std::move(points));
  const int bound = datum->num_pos_roots();
  std::vector<int> exponents;
  Integer sum;
  for (int m = 0; m <= bound; ++m) {
    if (search.find_nonzero(m, exponents, sum)) {
      if (certificate) {
        certificate->exponents = exponents;
        certificate->coefficient = multinomial(exponents) * sum;
      }
      return m;
    }
  }
  fail(ErrorKind::InternalBoundViolation,
       "no nonvanishing degree m <= " + std::to_string(bound) + " in " + datum->fingerprint());
}

GoldieReport goldie_degree(const WeylElement& w) { return goldie_degree(w, w.datum()->t_vec()); }

GoldieReport goldie_degree(const WeylElement& w, const RationalVector& t) {
  const DatumPtr& datum = w.datum();
  auto engine = KLEngine::of(datum);
  const auto group = WeylGroup::of(datum);
  const auto row = engine->inverse_row(group->index_of(w));
  GoldieReport report{w, 0, {}, datum->num_pos_roots(), 0};
  report.m = goldie_degree_of_row(datum, row, t, &report.certificate);
  report.dim = report.num_pos_roots - report.m;
  return report;
}

std::vector<int> goldie_profile(const DatumPtr& datum) {
  auto engine = KLEngine::of(datum);
  const auto group = WeylGroup::of(datum);
  std::vector<int> out;
  out.reserve(group->size());
  for (int w = 0; w < group->size(); ++w) {
    out.push_back(goldie_degree_of_row(datum, engine->inverse_row(w), datum->t_vec()));
  }
  return out;
}

SimpleDimReport dim_simple_hw(const Weight& lambda) {
  const DominantConjugate conj = dominant_conjugate(lambda);
  GoldieReport goldie = goldie_degree(conj.w);
  const int dim = goldie.dim;
  return SimpleDimReport{lambda, conj.mu, conj.singular, std::move(goldie), dim};
}

}  // namespace oalgdim

// Brute-force canonical basis of the Hecke algebra.  Shares nothing with the
// KL recursion in kl.cpp except the group tables, so the two can be checked
// against each other.

#include <map>

#include "oalgdim/error.hpp"
#include "oalgdim/kl.hpp"

namespace oalgdim {

namespace {

// Laurent polynomial in v (q = v^2) with machine coefficients; |W| <= 24
// keeps every coefficient tiny.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(int exponent, long long coeff) {
    Laurent out;
    if (coeff != 0) out.terms_[exponent] = coeff;
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, long long>& terms() const { return terms_; }

  Laurent& operator+=(const Laurent& other) {
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
  }
  Laurent operator*(const Laurent& other) const {
    Laurent out;
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : other.terms_) out.add(e1 + e2, c1 * c2);
    }
    return out;
  }
  Laurent operator-() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }
  Laurent bar() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_[-e] = c;
    return out;
  }
  Laurent negative_part() const {
    Laurent out;
    for (const auto& [e, c] : terms_) {
      if (e < 0) out.terms_[e] = c;
    }
    return out;
  }

 private:
  void add(int e, long long c) {
    if (c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  std::map<int, long long> terms_;
};

using HeckeElement = std::vector<Laurent>;  // coefficients on the basis v^{-l(y)} T_y

// Left multiplication by the normalized generator of s.
HeckeElement left_generator(const WeylGroup& g, int s, const HeckeElement& h) {
  const Laurent v_minus_vinv = [] {
    Laurent l = Laurent::monomial(1, 1);
    l += Laurent::monomial(-1, -1);
    return l;
  }();
  HeckeElement out(h.size());
  for (int y = 0; y < g.size(); ++y) {
    if (h[y].is_zero()) continue;
    const int sy = g.left_mult(s, y);
    out[sy] += h[y];
    if (g.length(sy) < g.length(y)) out[y] += v_minus_vinv * h[y];
  }
  return out;
}

// bar of the generator of s is the generator minus (v - v^{-1}).
HeckeElement left_bar_generator(const WeylGroup& g, int s, const HeckeElement& h) {
  HeckeElement out = left_generator(g, s, h);
  Laurent shift = Laurent::monomial(-1, 1);
  shift += Laurent::monomial(1, -1);
  for (int y = 0; y < g.size(); ++y) {
    if (!h[y].is_zero()) out[y] += shift * h[y];
  }
  return out;
}

}  // namespace

std::vector<std::vector<KLPolynomial>> hecke_oracle_table(const DatumPtr& datum) {
  if (datum->weyl_order() > static_cast<std::uint64_t>(kHeckeOracleMaxOrder)) {
    fail(ErrorKind::OracleTooLarge, "Hecke oracle limited to |W| <= " + std::to_string(kHeckeOracleMaxOrder) +
                                        ", " + datum->coxeter_name() + " has " +
                                        std::to_string(datum->weyl_order()));
  }
  const auto group = WeylGroup::of(datum);
  const WeylGroup& g = *group;
  const int n = g.size();

  // r[y][x]: coefficient of the x-th basis element in bar(basis element y).
  std::vector<HeckeElement> bar_basis(n);
  for (int y = 0; y < n; ++y) {
    HeckeElement h(n);
    h[0] = Laurent::monomial(0, 1);
    const auto& word = g.word(y);
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = left_bar_generator(g, *it, h);
    bar_basis[y] = std::move(h);
  }

  std::vector<std::vector<KLPolynomial>> table(n, std::vector<KLPolynomial>(n));
  for (int w = 0; w < n; ++w) {
    std::vector<Laurent> p(n);
    p[w] = Laurent::monomial(0, 1);
    for (int x = w - 1; x >= 0; --x) {
      Laurent rhs;
      for (int y = x + 1; y <= w; ++y) {
        if (p[y].is_zero() || bar_basis[y][x].is_zero()) continue;
        rhs += p[y].bar() * bar_basis[y][x];
      }
      // p_x - bar(p_x) = rhs with p_x in v^{-1} Z[v^{-1}]
      Laurent check = rhs;
      check += rhs.bar();
      if (!check.is_zero() || rhs.terms().count(0)) {
        fail(ErrorKind::InternalBoundViolation, "bar-invariance system is inconsistent");
      }
      p[x] = rhs.negative_part();
    }
    for (int x = 0; x <= w; ++x) {
      if (p[x].is_zero()) continue;
      const int shift = g.length(w) - g.length(x);
      std::vector<Integer> coeffs;
      for (const auto& [e, c] : p[x].terms()) {
        const int power = e + shift;
        if (power < 0 || power % 2 != 0) {
          fail(ErrorKind::InternalBoundViolation, "odd power of v in a KL polynomial");
        }
        const auto k = static_cast<std::size_t>(power / 2);
        if (coeffs.size() <= k) coeffs.resize(k + 1, Integer(0));
        coeffs[k] = c;
      }
      table[x][w] = KLPolynomial(std::move(coeffs));
    }
  }
  return table;
}

KLPolynomial hecke_oracle(const WeylElement& x, const WeylElement& w) {
  require_same_datum(*x.datum(), *w.datum());
  const auto table = hecke_oracle_table(x.datum());
  const auto group = WeylGroup::of(x.datum());
  return table[group->index_of(x)][group->index_of(w)];
}

}  // namespace oalgdim

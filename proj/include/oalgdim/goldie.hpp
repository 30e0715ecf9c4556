#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oalgdim/kl.hpp"
#include "oalgdim/weyl.hpp"

namespace oalgdim {

/// Coefficients a(w, w') of [L(w.mu)] = sum_{w'} a(w, w') [M(w'.mu)] for a
/// regular dominant mu.  Only nonzero entries are stored, in group index order.
struct ACoeffRow {
  WeylElement w;
  std::vector<std::pair<WeylElement, Integer>> entries;

  Integer at(const WeylElement& y) const;
};

/// A monomial xi^exponents whose coefficient in p_m is nonzero.
struct GoldieCertificate {
  std::vector<int> exponents;
  Integer coefficient;

  int total_degree() const;
};

struct GoldieReport {
  WeylElement w;
  int m = 0;
  GoldieCertificate certificate;
  int num_pos_roots = 0;
  int dim = 0;  // num_pos_roots - m
};

/// The multiplicity matrix B[w', w] = [M(w'.mu) : L(w.mu)] = P_{w',w}(1) is
/// unitriangular for the Bruhat order; the row is row w of its inverse.
ACoeffRow a_coeffs(const WeylElement& w);

/// Least m with p_m(xi) = sum_{w'} a(w, w') <xi, w'^{-1} t>^m not identically
/// zero, decided by expanding p_m into monomials.
GoldieReport goldie_degree(const WeylElement& w);
/// Same with an explicit coweight t; throws InvalidArgument unless
/// alpha(t) = 1 for every simple root.
GoldieReport goldie_degree(const WeylElement& w, const RationalVector& t);

/// Low-level form: `row` is indexed by group index.  Returns m and fills the
/// certificate.  Throws InternalBoundViolation if no m <= #positive roots works.
int goldie_degree_of_row(const DatumPtr& datum, const std::vector<Integer>& row, const RationalVector& t,
                         GoldieCertificate* certificate = nullptr);

/// m_w for every w, in group index order.
std::vector<int> goldie_profile(const DatumPtr& datum);

struct SimpleDimReport {
  Weight lambda;
  Weight mu;
  std::vector<int> singular;
  GoldieReport goldie;
  int dim = 0;
};

/// dim L(lambda) = #positive roots - m_w where lambda = w . mu, w in W^S.
SimpleDimReport dim_simple_hw(const Weight& lambda);

}  // namespace oalgdim

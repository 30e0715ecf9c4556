#pragma once

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "oalgdim/rootdata.hpp"

namespace oalgdim {

/// An element of the Weyl group, stored as its integer matrix on the weight
/// coordinates of its datum.  Equality compares matrices, so two words for
/// the same element always compare equal.
class WeylElement {
 public:
  static WeylElement identity(const DatumPtr& datum);
  static WeylElement simple(const DatumPtr& datum, int index);
  /// Product s_{word[0]} s_{word[1]} ... (0-based indices).
  static WeylElement from_word(const DatumPtr& datum, std::span<const int> word);

  const DatumPtr& datum() const { return datum_; }
  int dim() const { return dim_; }
  long long entry(int row, int col) const { return matrix_[row * dim_ + col]; }

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  /// Canonical reduced word: repeatedly strip the smallest left descent.
  std::vector<int> reduced_word() const;
  /// True when l(s_i w) < l(w).
  bool has_left_descent(int index) const;
  bool has_right_descent(int index) const;

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& other) const;
  bool operator!=(const WeylElement& other) const { return !(*this == other); }

  /// Linear action on weight coordinates.
  RationalVector apply(const RationalVector& v) const;
  IntVector apply(const IntVector& v) const;
  /// Contragredient action on coweights: <w lambda, w x> = <lambda, x>.
  RationalVector apply_dual(const RationalVector& x) const;
  IntVector apply_dual(const IntVector& x) const;

  /// "e" or "s1s2s1" (1-based).
  std::string to_string() const;

 private:
  WeylElement(DatumPtr datum, std::vector<long long> matrix);

  DatumPtr datum_;
  int dim_ = 0;
  std::vector<long long> matrix_;
  int length_ = 0;
};

std::string word_to_string(std::span<const int> word);
/// Parses "1,2,1" (1-based, empty allowed) into 0-based indices.
std::vector<int> parse_word(const RootDatum& datum, std::string_view text);

Weight act(const WeylElement& w, const Weight& lambda);
/// w . lambda = w(lambda + rho) - rho.
Weight dot_apply(const WeylElement& w, const Weight& lambda);

/// Bruhat order by the subword criterion, walked along the reduced word of w.
bool bruhat_leq(const WeylElement& x, const WeylElement& w);

/// Explicit enumeration of W with multiplication tables.  Indices are ordered
/// by nondecreasing length; index 0 is the identity.  Instances are shared
/// through `WeylGroup::of` and are immutable once published.
class WeylGroup {
 public:
  static std::shared_ptr<const WeylGroup> of(const DatumPtr& datum);

  const DatumPtr& datum() const { return datum_; }
  int size() const { return static_cast<int>(length_.size()); }
  int rank() const { return rank_; }
  int longest() const { return size() - 1; }

  int length(int w) const { return length_[w]; }
  int left_mult(int s, int w) const { return left_[w * rank_ + s]; }
  int right_mult(int w, int s) const { return right_[w * rank_ + s]; }
  int inverse(int w) const { return inverse_[w]; }
  bool left_descent(int s, int w) const { return length_[left_mult(s, w)] < length_[w]; }
  bool right_descent(int w, int s) const { return length_[right_mult(w, s)] < length_[w]; }
  const std::vector<int>& word(int w) const { return words_[w]; }
  int multiply(int x, int y) const;
  int from_word(std::span<const int> word) const;

  bool bruhat_leq(int x, int w) const;

  int index_of(const WeylElement& w) const;
  WeylElement element(int w) const;

 private:
  explicit WeylGroup(DatumPtr datum);

  DatumPtr datum_;
  int rank_ = 0;
  std::vector<int> length_;
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::string, int> index_;
};

/// All of W in index order (RankTooLarge beyond the datum's cap).
std::vector<WeylElement> enumerate_group(const DatumPtr& datum);
WeylElement longest_element(const DatumPtr& datum);
/// Longest element of the parabolic subgroup W_S.
WeylElement longest_element(const DatumPtr& datum, const std::vector<int>& subset);

/// W_S and the maximal-length representatives W^S of the left cosets w W_S.
struct CosetData {
  std::vector<int> subset;
  std::vector<WeylElement> stabilizer;
  std::vector<WeylElement> max_reps;
};
CosetData coset_data(const DatumPtr& datum, const std::vector<int>& subset);

/// True when w is the longest element of w W_S.
bool is_max_coset_rep(const WeylElement& w, const std::vector<int>& subset);

struct DominantConjugate {
  Weight mu;
  WeylElement w;
  std::vector<int> singular;
};

/// lambda = w . mu with mu dot-dominant, S = singular_support(mu) and w the
/// longest element of w W_S.
DominantConjugate dominant_conjugate(const Weight& lambda);

/// Distinct weights of the dot orbit, sorted by the coordinates.
std::vector<Weight> dot_orbit(const Weight& lambda);

}  // namespace oalgdim

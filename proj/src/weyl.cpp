#include "oalgdim/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "oalgdim/error.hpp"

namespace oalgdim {

namespace {

IntVector integer_rho(const RootDatum& datum) {
  IntVector out;
  out.reserve(datum.rho().size());
  for (const auto& x : datum.rho()) out.push_back(static_cast<long long>(boost::multiprecision::numerator(x)));
  return out;
}

long long dot(const IntVector& a, const IntVector& b) {
  long long out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

// s_i on an integer weight vector.
void reflect_in_place(const RootDatum& datum, int i, IntVector& v) {
  const long long p = dot(v, datum.simple_coroots()[i]);
  if (p == 0) return;
  const auto& alpha = datum.simple_roots()[i];
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= p * alpha[k];
}

std::string key_of(const IntVector& v) {
  std::string out;
  for (long long x : v) {
    out += std::to_string(x);
    out += ',';
  }
  return out;
}

void check_index(const RootDatum& datum, int index) {
  if (index < 0 || index >= datum.semisimple_rank()) {
    fail(ErrorKind::IndexOutOfRange, "simple reflection index " + std::to_string(index + 1) +
                                         " out of range for " + datum.fingerprint());
  }
}

}  // namespace

WeylElement::WeylElement(DatumPtr datum, std::vector<long long> matrix)
    : datum_(std::move(datum)), dim_(datum_->ambient_dim()), matrix_(std::move(matrix)) {
  const IntVector image = apply(integer_rho(*datum_));
  for (const auto& root : datum_->positive_roots()) {
    if (dot(image, root.coroot) < 0) ++length_;
  }
}

WeylElement WeylElement::identity(const DatumPtr& datum) {
  const int n = datum->ambient_dim();
  std::vector<long long> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return WeylElement(datum, std::move(m));
}

WeylElement WeylElement::simple(const DatumPtr& datum, int index) {
  check_index(*datum, index);
  const int n = datum->ambient_dim();
  const auto& alpha = datum->simple_roots()[index];
  const auto& coroot = datum->simple_coroots()[index];
  std::vector<long long> m(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r * n + c] = (r == c ? 1 : 0) - alpha[r] * coroot[c];
  }
  return WeylElement(datum, std::move(m));
}

WeylElement WeylElement::from_word(const DatumPtr& datum, std::span<const int> word) {
  WeylElement out = identity(datum);
  for (int i : word) out = out * simple(datum, i);
  return out;
}

bool WeylElement::has_left_descent(int index) const {
  check_index(*datum_, index);
  const IntVector image = apply(integer_rho(*datum_));
  return dot(image, datum_->simple_coroots()[index]) < 0;
}

bool WeylElement::has_right_descent(int index) const { return inverse().has_left_descent(index); }

std::vector<int> WeylElement::reduced_word() const {
  std::vector<int> word;
  IntVector v = apply(integer_rho(*datum_));
  const int n = datum_->semisimple_rank();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < n; ++i) {
      if (dot(v, datum_->simple_coroots()[i]) < 0) {
        word.push_back(i);
        reflect_in_place(*datum_, i, v);
        progress = true;
        break;
      }
    }
  }
  return word;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  require_same_datum(*datum_, *other.datum_);
  const int n = dim_;
  std::vector<long long> m(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const long long a = matrix_[r * n + k];
      if (a == 0) continue;
      for (int c = 0; c < n; ++c) m[r * n + c] += a * other.matrix_[k * n + c];
    }
  }
  return WeylElement(datum_, std::move(m));
}

WeylElement WeylElement::inverse() const {
  auto word = reduced_word();
  std::reverse(word.begin(), word.end());
  return from_word(datum_, word);
}

bool WeylElement::operator==(const WeylElement& other) const {
  return datum_->fingerprint() == other.datum_->fingerprint() && matrix_ == other.matrix_;
}

RationalVector WeylElement::apply(const RationalVector& v) const {
  RationalVector out(dim_, Rational(0));
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (matrix_[r * dim_ + c] != 0) out[r] += v[c] * matrix_[r * dim_ + c];
    }
  }
  return out;
}

IntVector WeylElement::apply(const IntVector& v) const {
  IntVector out(dim_, 0);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out[r] += matrix_[r * dim_ + c] * v[c];
  }
  return out;
}

RationalVector WeylElement::apply_dual(const RationalVector& x) const {
  const WeylElement inv = inverse();
  RationalVector out(dim_, Rational(0));
  for (int k = 0; k < dim_; ++k) {
    for (int j = 0; j < dim_; ++j) {
      if (inv.matrix_[j * dim_ + k] != 0) out[k] += x[j] * inv.matrix_[j * dim_ + k];
    }
  }
  return out;
}

IntVector WeylElement::apply_dual(const IntVector& x) const {
  const WeylElement inv = inverse();
  IntVector out(dim_, 0);
  for (int k = 0; k < dim_; ++k) {
    for (int j = 0; j < dim_; ++j) out[k] += x[j] * inv.matrix_[j * dim_ + k];
  }
  return out;
}

std::string WeylElement::to_string() const { return word_to_string(reduced_word()); }

std::string word_to_string(std::span<const int> word) {
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i + 1);
  return out;
}

std::vector<int> parse_word(const RootDatum& datum, std::string_view text) {
  std::vector<int> word;
  for (const auto& value : parse_rational_list(text)) {
    if (!is_integer(value)) fail(ErrorKind::InvalidArgument, "reflection index must be an integer");
    const auto index = boost::multiprecision::numerator(value);
    if (index < 1 || index > datum.semisimple_rank()) {
      fail(ErrorKind::IndexOutOfRange, "reflection index " + index.str() + " out of range 1.." +
                                           std::to_string(datum.semisimple_rank()));
    }
    word.push_back(static_cast<int>(index) - 1);
  }
  return word;
}

Weight act(const WeylElement& w, const Weight& lambda) {
  require_same_datum(*w.datum(), *lambda.datum());
  return Weight(lambda.datum(), w.apply(lambda.coords()));
}

Weight dot_apply(const WeylElement& w, const Weight& lambda) {
  const Weight rho = Weight::rho(lambda.datum());
  return act(w, lambda + rho) - rho;
}

bool bruhat_leq(const WeylElement& x, const WeylElement& w) {
  require_same_datum(*x.datum(), *w.datum());
  if (x.length() > w.length()) return false;
  const RootDatum& datum = *x.datum();
  const IntVector rho = integer_rho(datum);
  IntVector image = x.apply(rho);
  for (int s : w.reduced_word()) {
    if (dot(image, datum.simple_coroots()[s]) < 0) reflect_in_place(datum, s, image);
  }
  return image == rho;
}

// --- WeylGroup --------------------------------------------------------------

WeylGroup::WeylGroup(DatumPtr datum) : datum_(std::move(datum)), rank_(datum_->semisimple_rank()) {
  const RootDatum& d = *datum_;
  std::vector<IntVector> images{integer_rho(d)};
  index_.emplace(key_of(images[0]), 0);
  length_.push_back(0);
  // Breadth-first in the Cayley graph of left multiplication, so distance
  // from the identity is the length and indices come out length-sorted.
  for (std::size_t head = 0; head < images.size(); ++head) {
    for (int s = 0; s < rank_; ++s) {
      IntVector next = images[head];
      reflect_in_place(d, s, next);
      auto key = key_of(next);
      auto it = index_.find(key);
      int idx;
      if (it == index_.end()) {
        idx = static_cast<int>(images.size());
        index_.emplace(std::move(key), idx);
        images.push_back(std::move(next));
        length_.push_back(length_[head] + 1);
      } else {
        idx = it->second;
      }
      left_.push_back(idx);
    }
  }
  if (static_cast<std::uint64_t>(images.size()) != d.weyl_order()) {
    fail(ErrorKind::InternalBoundViolation, "enumerated " + std::to_string(images.size()) +
                                                " elements, expected " + std::to_string(d.weyl_order()));
  }
  const int n = size();
  words_.resize(n);
  for (int w = 1; w < n; ++w) {
    for (int s = 0; s < rank_; ++s) {
      const int shorter = left_mult(s, w);
      if (length_[shorter] < length_[w]) {
        words_[w].push_back(s);
        words_[w].insert(words_[w].end(), words_[shorter].begin(), words_[shorter].end());
        break;
      }
    }
  }
  inverse_.resize(n);
  for (int w = 0; w < n; ++w) {
    int acc = 0;
    for (int s : words_[w]) acc = left_mult(s, acc);
    inverse_[w] = acc;
  }
  right_.resize(left_.size());
  for (int w = 0; w < n; ++w) {
    for (int s = 0; s < rank_; ++s) right_[w * rank_ + s] = inverse_[left_mult(s, inverse_[w])];
  }
}

std::shared_ptr<const WeylGroup> WeylGroup::of(const DatumPtr& datum) {
  static std::shared_mutex mutex;
  static std::map<std::string, std::shared_ptr<const WeylGroup>> registry;
  const std::string key = datum->fingerprint();
  {
    std::shared_lock lock(mutex);
    if (auto it = registry.find(key); it != registry.end()) return it->second;
  }
  if (datum->weyl_order() > datum->group_cap()) {
    fail(ErrorKind::RankTooLarge, "|W| of " + datum->fingerprint() + " exceeds the cap");
  }
  // Built outside the lock; a concurrent duplicate build yields an identical
  // group and only one of them is kept.
  auto group = std::shared_ptr<const WeylGroup>(new WeylGroup(datum));
  std::unique_lock lock(mutex);
  return registry.try_emplace(key, std::move(group)).first->second;
}

int WeylGroup::multiply(int x, int y) const {
  int acc = y;
  const auto& wx = words_[x];
  for (auto it = wx.rbegin(); it != wx.rend(); ++it) acc = left_mult(*it, acc);
  return acc;
}

int WeylGroup::from_word(std::span<const int> word) const {
  int acc = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_index(*datum_, *it);
    acc = left_mult(*it, acc);
  }
  return acc;
}

bool WeylGroup::bruhat_leq(int x, int w) const {
  if (length_[x] > length_[w]) return false;
  for (int s : words_[w]) {
    if (left_descent(s, x)) x = left_mult(s, x);
  }
  return x == 0;
}

int WeylGroup::index_of(const WeylElement& w) const {
  require_same_datum(*w.datum(), *datum_);
  const auto it = index_.find(key_of(w.apply(integer_rho(*datum_))));
  if (it == index_.end()) fail(ErrorKind::InternalBoundViolation, "element not found in W");
  return it->second;
}

WeylElement WeylGroup::element(int w) const {
  if (w < 0 || w >= size()) fail(ErrorKind::IndexOutOfRange, "group index out of range");
  return WeylElement::from_word(datum_, words_[w]);
}

// --- derived operations -----------------------------------------------------

std::vector<WeylElement> enumerate_group(const DatumPtr& datum) {
  const auto group = WeylGroup::of(datum);
  std::vector<WeylElement> out;
  out.reserve(group->size());
  for (int w = 0; w < group->size(); ++w) out.push_back(group->element(w));
  return out;
}

WeylElement longest_element(const DatumPtr& datum) {
  std::vector<int> all(datum->semisimple_rank());
  for (int i = 0; i < datum->semisimple_rank(); ++i) all[i] = i;
  return longest_element(datum, all);
}

WeylElement longest_element(const DatumPtr& datum, const std::vector<int>& subset) {
  IntVector image = integer_rho(*datum);
  std::vector<int> prefix;  // w = s_{prefix.back()} ... s_{prefix.front()}
  bool progress = true;
  while (progress) {
    progress = false;
    for (int s : subset) {
      check_index(*datum, s);
      if (dot(image, datum->simple_coroots()[s]) > 0) {
        reflect_in_place(*datum, s, image);
        prefix.push_back(s);
        progress = true;
        break;
      }
    }
  }
  std::reverse(prefix.begin(), prefix.end());
  return WeylElement::from_word(datum, prefix);
}

bool is_max_coset_rep(const WeylElement& w, const std::vector<int>& subset) {
  const WeylElement inv = w.inverse();
  return std::all_of(subset.begin(), subset.end(), [&](int s) { return inv.has_left_descent(s); });
}

CosetData coset_data(const DatumPtr& datum, const std::vector<int>& subset) {
  const auto group = WeylGroup::of(datum);
  std::vector<bool> in_subset(datum->semisimple_rank(), false);
  for (int s : subset) {
    check_index(*datum, s);
    in_subset[s] = true;
  }
  CosetData out;
  out.subset = subset;
  for (int w = 0; w < group->size(); ++w) {
    const auto& word = group->word(w);
    if (std::all_of(word.begin(), word.end(), [&](int s) { return in_subset[s]; })) {
      out.stabilizer.push_back(group->element(w));
    }
    bool maximal = true;
    for (int s : subset) maximal = maximal && group->right_descent(w, s);
    if (maximal) out.max_reps.push_back(group->element(w));
  }
  return out;
}

DominantConjugate dominant_conjugate(const Weight& lambda) {
  require_integral(lambda);
  const DatumPtr& datum = lambda.datum();
  const Weight rho = Weight::rho(datum);
  Weight shifted = lambda + rho;
  std::vector<int> word;
  const int n = datum->semisimple_rank();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < n; ++i) {
      if (pairing(shifted, i) < 0) {
        shifted = act(WeylElement::simple(datum, i), shifted);
        word.push_back(i);
        progress = true;
        break;
      }
    }
  }
  // shifted = s_{word.back()} ... s_{word.front()} (lambda + rho), so
  // lambda = w . mu with w = s_{word.front()} ... s_{word.back()}.
  const Weight mu = shifted - rho;
  WeylElement w = WeylElement::from_word(datum, word);
  const std::vector<int> singular = singular_support(mu);
  progress = true;
  while (progress) {
    progress = false;
    for (int s : singular) {
      if (!w.has_right_descent(s)) {
        w = w * WeylElement::simple(datum, s);
        progress = true;
      }
    }
  }
  return DominantConjugate{mu, w, singular};
}

std::vector<Weight> dot_orbit(const Weight& lambda) {
  std::map<RationalVector, Weight> seen;
  for (const auto& w : enumerate_group(lambda.datum())) {
    Weight image = dot_apply(w, lambda);
    seen.emplace(image.coords(), image);
  }
  std::vector<Weight> out;
  for (auto& [coords, weight] : seen) out.push_back(weight);
  return out;
}

}  // namespace oalgdim

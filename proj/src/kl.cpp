#include "oalgdim/kl.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "oalgdim/error.hpp"

namespace oalgdim {

// --- KLPolynomial -----------------------------------------------------------

KLPolynomial::KLPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void KLPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer KLPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Integer KLPolynomial::at_one() const {
  Integer out = 0;
  for (const auto& c : coeffs_) out += c;
  return out;
}

KLPolynomial& KLPolynomial::add_shifted(const KLPolynomial& other, int shift, const Integer& scale) {
  if (other.is_zero() || scale == 0) return *this;
  const std::size_t need = other.coeffs_.size() + static_cast<std::size_t>(shift);
  if (coeffs_.size() < need) coeffs_.resize(need, Integer(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k + shift] += scale * other.coeffs_[k];
  trim();
  return *this;
}

std::string KLPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string KLPolynomial::to_csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ",";
    out += coeffs_[k].str();
  }
  return out;
}

const KLPolynomial* KLColumn::find(int x) const {
  const auto it = std::lower_bound(lower.begin(), lower.end(), x);
  if (it == lower.end() || *it != x) return nullptr;
  return &polys[static_cast<std::size_t>(it - lower.begin())];
}

// --- KLCache ----------------------------------------------------------------

std::shared_ptr<const KLColumn> KLCache::find(int w) const {
  std::shared_lock lock(mutex_);
  const auto it = columns_.find(w);
  return it == columns_.end() ? nullptr : it->second;
}

std::shared_ptr<const KLColumn> KLCache::insert(int w, std::shared_ptr<const KLColumn> column) {
  std::unique_lock lock(mutex_);
  return columns_.try_emplace(w, std::move(column)).first->second;
}

std::vector<std::pair<int, std::shared_ptr<const KLColumn>>> KLCache::snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<int, std::shared_ptr<const KLColumn>>> out(columns_.begin(), columns_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void KLCache::clear() {
  std::unique_lock lock(mutex_);
  columns_.clear();
}

KLCacheStats KLCache::stats() const {
  KLCacheStats out;
  out.hits = hits_.load(std::memory_order_relaxed);
  out.misses = misses_.load(std::memory_order_relaxed);
  std::shared_lock lock(mutex_);
  out.columns = columns_.size();
  for (const auto& [w, column] : columns_) out.entries += column->lower.size();
  return out;
}

// --- KLEngine ---------------------------------------------------------------

KLEngine::KLEngine(std::shared_ptr<const WeylGroup> group)
    : group_(std::move(group)), cache_(group_->datum()->coxeter_name()) {}

std::shared_ptr<KLEngine> KLEngine::of(const DatumPtr& datum) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<KLEngine>> registry;
  const std::string key = datum->coxeter_name();
  std::lock_guard lock(mutex);
  auto& slot = registry[key];
  if (!slot) slot = std::make_shared<KLEngine>(WeylGroup::of(datum));
  return slot;
}

std::shared_ptr<const KLColumn> KLEngine::column(int w) {
  if (auto found = cache_.find(w)) {
    cache_.record_hit();
    return found;
  }
  cache_.record_miss();
  return cache_.insert(w, compute_column(w));
}

KLPolynomial KLEngine::poly(int x, int w) {
  const auto col = column(w);
  const KLPolynomial* p = col->find(x);
  return p ? *p : KLPolynomial();
}

Integer KLEngine::at_one(int x, int w) {
  const auto col = column(w);
  const auto it = std::lower_bound(col->lower.begin(), col->lower.end(), x);
  if (it == col->lower.end() || *it != x) return 0;
  return col->at_one[static_cast<std::size_t>(it - col->lower.begin())];
}

std::shared_ptr<const KLColumn> KLEngine::compute_column(int w) {
  const WeylGroup& g = *group_;
  auto out = std::make_shared<KLColumn>();
  if (w == 0) {
    out->lower = {0};
    out->polys = {KLPolynomial::one()};
    out->at_one = {Integer(1)};
    return out;
  }

  const int s = g.word(w).front();
  const int v = g.left_mult(s, w);
  const auto col_v = column(v);

  // z < v with sz < z and mu(z, v) != 0 contribute correction terms.
  struct Correction {
    int z;
    Integer mu;
    std::shared_ptr<const KLColumn> col;
  };
  std::vector<Correction> corrections;
  for (std::size_t k = 0; k < col_v->lower.size(); ++k) {
    const int z = col_v->lower[k];
    if (z == v || !g.left_descent(s, z)) continue;
    const int gap = g.length(v) - g.length(z);
    if (gap % 2 == 0) continue;
    const Integer mu = col_v->polys[k].coeff((gap - 1) / 2);
    if (mu != 0) corrections.push_back({z, mu, nullptr});
  }
  for (auto& c : corrections) c.col = column(c.z);

  // x <= w iff min(x, sx) <= v.
  std::vector<int> lower;
  lower.reserve(2 * col_v->lower.size());
  for (int x : col_v->lower) {
    lower.push_back(x);
    lower.push_back(g.left_mult(s, x));
  }
  std::sort(lower.begin(), lower.end());
  lower.erase(std::unique(lower.begin(), lower.end()), lower.end());

  const int len_w = g.length(w);
  out->lower = lower;
  out->polys.reserve(lower.size());
  out->at_one.reserve(lower.size());
  for (int x : lower) {
    const bool descent = g.left_descent(s, x);
    KLPolynomial p;
    if (const auto* q = col_v->find(g.left_mult(s, x))) p.add_shifted(*q, descent ? 0 : 1);
    if (const auto* q = col_v->find(x)) p.add_shifted(*q, descent ? 1 : 0);
    for (const auto& c : corrections) {
      if (const auto* q = c.col->find(x)) p.add_shifted(*q, (len_w - g.length(c.z)) / 2, -c.mu);
    }
    if (p.coeff(0) != 1) {
      fail(ErrorKind::InternalBoundViolation,
           "P_{x,w} without constant term 1 at x=" + word_to_string(g.word(x)) +
               " w=" + word_to_string(g.word(w)));
    }
    for (const auto& c : p.coeffs()) {
      if (c < 0) {
        fail(ErrorKind::InternalBoundViolation,
             "negative KL coefficient at x=" + word_to_string(g.word(x)) + " w=" + word_to_string(g.word(w)));
      }
    }
    out->at_one.push_back(p.at_one());
    out->polys.push_back(std::move(p));
  }
  return out;
}

std::vector<Integer> KLEngine::inverse_row(int w) {
  const WeylGroup& g = *group_;
  const int w0 = g.longest();
  const int top = g.multiply(w0, w);
  const auto col = column(top);
  std::vector<Integer> row(g.size(), Integer(0));
  for (std::size_t k = 0; k < col->lower.size(); ++k) {
    const int y = g.multiply(w0, col->lower[k]);
    const bool odd = (g.length(w) + g.length(y)) % 2 != 0;
    row[y] = odd ? Integer(-col->at_one[k]) : col->at_one[k];
  }
  return row;
}

KLPolynomial kl_poly(const WeylElement& x, const WeylElement& w) {
  require_same_datum(*x.datum(), *w.datum());
  auto engine = KLEngine::of(x.datum());
  // Indices agree across orientations, so the datum's own group is used.
  const auto group = WeylGroup::of(x.datum());
  return engine->poly(group->index_of(x), group->index_of(w));
}

std::vector<std::pair<WeylElement, Integer>> inverse_kl_row(const WeylElement& w) {
  auto engine = KLEngine::of(w.datum());
  const auto group = WeylGroup::of(w.datum());
  const auto row = engine->inverse_row(group->index_of(w));
  std::vector<std::pair<WeylElement, Integer>> out;
  for (int y = 0; y < group->size(); ++y) {
    if (row[y] != 0) out.emplace_back(group->element(y), row[y]);
  }
  return out;
}

}  // namespace oalgdim

#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oalgdim/weyl.hpp"

namespace oalgdim {

/// Dense polynomial in q; coeffs()[k] is the coefficient of q^k.  The zero
/// polynomial has no coefficients.
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<Integer> coeffs);
  static KLPolynomial one() { return KLPolynomial({Integer(1)}); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int k) const;
  Integer at_one() const;

  KLPolynomial& add_shifted(const KLPolynomial& other, int shift, const Integer& scale = 1);

  bool operator==(const KLPolynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const KLPolynomial& other) const { return !(*this == other); }

  /// "0", "1", "1+q", "2q^2+q^3".
  std::string to_string() const;
  /// "c0,c1,..." as used in the cache file; the zero polynomial is "0".
  std::string to_csv() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// All P_{x,w} for one w, for the x <= w in Bruhat order, sorted by index.
struct KLColumn {
  std::vector<int> lower;
  std::vector<KLPolynomial> polys;
  std::vector<Integer> at_one;

  /// nullptr when x is not below w.
  const KLPolynomial* find(int x) const;
};

struct KLCacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t columns = 0;
  std::uint64_t entries = 0;
};

/// Memo table of KL columns for one Coxeter system.  Lookups take a shared
/// lock; insertion is per key and keeps the first value (recomputation of a
/// key by several threads produces identical columns).
class KLCache {
 public:
  explicit KLCache(std::string coxeter_name) : name_(std::move(coxeter_name)) {}

  const std::string& name() const { return name_; }
  std::shared_ptr<const KLColumn> find(int w) const;
  std::shared_ptr<const KLColumn> insert(int w, std::shared_ptr<const KLColumn> column);
  std::vector<std::pair<int, std::shared_ptr<const KLColumn>>> snapshot() const;
  void clear();

  KLCacheStats stats() const;
  void record_hit() const { hits_.fetch_add(1, std::memory_order_relaxed); }
  void record_miss() const { misses_.fetch_add(1, std::memory_order_relaxed); }

 private:
  std::string name_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<int, std::shared_ptr<const KLColumn>> columns_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Kazhdan-Lusztig polynomials of one Weyl group, computed column by column
/// with the left-descent recursion and memoized in a `KLCache`.
class KLEngine {
 public:
  explicit KLEngine(std::shared_ptr<const WeylGroup> group);

  /// Shared engine for the Coxeter system of `datum` (orientation ignored).
  static std::shared_ptr<KLEngine> of(const DatumPtr& datum);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  KLCache& cache() { return cache_; }
  const KLCache& cache() const { return cache_; }

  KLPolynomial poly(int x, int w);
  Integer at_one(int x, int w);
  std::shared_ptr<const KLColumn> column(int w);

  /// Row w of the inverse of B[x,y] = P_{x,y}(1), via the KL inversion
  /// formula: entry y is (-1)^{l(w)+l(y)} P_{w0 y, w0 w}(1).  Only y >= w
  /// can be nonzero; the result is indexed by group index.
  std::vector<Integer> inverse_row(int w);

  /// Writes the cache file for every cached column.
  void save(std::ostream& out) const;
  /// Replaces cached columns by the file contents.  Throws VersionMismatch on
  /// a header for another group and CorruptCache on a damaged body.
  void load(std::istream& in);

 private:
  std::shared_ptr<const KLColumn> compute_column(int w);

  std::shared_ptr<const WeylGroup> group_;
  KLCache cache_;
};

KLPolynomial kl_poly(const WeylElement& x, const WeylElement& w);

/// Independent slow path: canonical basis of the Hecke algebra by triangular
/// elimination against the bar involution.  Limited to |W| <= 24.
KLPolynomial hecke_oracle(const WeylElement& x, const WeylElement& w);
/// Full table P[x][w] from the oracle, indexed like `WeylGroup`.
std::vector<std::vector<KLPolynomial>> hecke_oracle_table(const DatumPtr& datum);

inline constexpr int kHeckeOracleMaxOrder = 24;

/// Nonzero entries of row w of the inverse of [P_{x,y}(1)], in index order.
std::vector<std::pair<WeylElement, Integer>> inverse_kl_row(const WeylElement& w);

void save_cache(const KLEngine& engine, const std::filesystem::path& path);
void load_cache(KLEngine& engine, const std::filesystem::path& path);

}  // namespace oalgdim

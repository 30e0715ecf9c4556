// Line-oriented KL cache file:
//
//   KLCACHE 1 <series> <rank>
//   <x-word>;<w-word>;<c0>,<c1>,...      (one per x <= w, sorted)
//   CHECKSUM <fnv1a-64 hex> <record count>
//
// Words are comma-separated 1-based simple reflection indices (canonical
// reduced words); the identity is the empty word.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "oalgdim/error.hpp"
#include "oalgdim/kl.hpp"

namespace oalgdim {

namespace {

constexpr int kCacheVersion = 1;

std::uint64_t fnv1a(std::uint64_t hash, std::string_view text) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string csv_word(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(word[i] + 1);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void corrupt(const std::string& why) { fail(ErrorKind::CorruptCache, "corrupt KL cache: " + why); }

int parse_element(const WeylGroup& g, const std::string& text) {
  std::vector<int> word;
  if (!text.empty()) {
    for (const auto& part : split(text, ',')) {
      if (part.empty() || part.size() > 3 ||
          !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        corrupt("bad word '" + text + "'");
      }
      const int index = std::stoi(part);
      if (index < 1 || index > g.rank()) corrupt("reflection index out of range in '" + text + "'");
      word.push_back(index - 1);
    }
  }
  const int w = g.from_word(word);
  if (g.word(w) != word) corrupt("non-canonical word '" + text + "'");
  return w;
}

}  // namespace

void KLEngine::save(std::ostream& out) const {
  const RootDatum& datum = *group_->datum();
  std::vector<std::string> records;
  for (const auto& [w, column] : cache_.snapshot()) {
    const std::string w_word = csv_word(group_->word(w));
    for (std::size_t k = 0; k < column->lower.size(); ++k) {
      records.push_back(csv_word(group_->word(column->lower[k])) + ";" + w_word + ";" +
                        column->polys[k].to_csv());
    }
  }
  std::sort(records.begin(), records.end());
  std::uint64_t hash = kFnvOffset;
  out << "KLCACHE " << kCacheVersion << " " << to_string(datum.series()) << " " << datum.rank() << "\n";
  for (const auto& line : records) {
    hash = fnv1a(hash, line);
    hash = fnv1a(hash, "\n");
    out << line << "\n";
  }
  out << "CHECKSUM " << hex64(hash) << " " << records.size() << "\n";
}

void KLEngine::load(std::istream& in) {
  const RootDatum& datum = *group_->datum();
  std::string line;
  if (!std::getline(in, line)) corrupt("empty file");
  {
    std::istringstream header(line);
    std::string magic, series;
    int version = 0, rank = 0;
    if (!(header >> magic >> version >> series >> rank) || magic != "KLCACHE") corrupt("bad header");
    if (version != kCacheVersion) {
      fail(ErrorKind::VersionMismatch, "cache version " + std::to_string(version) + ", expected " +
                                           std::to_string(kCacheVersion));
    }
    if (series != to_string(datum.series()) || rank != datum.rank()) {
      fail(ErrorKind::VersionMismatch, "cache is for " + series + std::to_string(rank) + ", session is " +
                                           datum.coxeter_name());
    }
  }

  const WeylGroup& g = *group_;
  std::map<int, std::map<int, KLPolynomial>> columns;
  std::uint64_t hash = kFnvOffset;
  std::size_t count = 0;
  bool sealed = false;
  while (std::getline(in, line)) {
    if (line.rfind("CHECKSUM ", 0) == 0) {
      std::istringstream trailer(line.substr(9));
      std::string digest;
      std::size_t expected = 0;
      if (!(trailer >> digest >> expected)) corrupt("bad checksum line");
      if (digest != hex64(hash) || expected != count) corrupt("checksum mismatch");
      sealed = true;
      break;
    }
    hash = fnv1a(hash, line);
    hash = fnv1a(hash, "\n");
    ++count;
    const auto fields = split(line, ';');
    if (fields.size() != 3) corrupt("bad record '" + line + "'");
    const int x = parse_element(g, fields[0]);
    const int w = parse_element(g, fields[1]);
    std::vector<Integer> coeffs;
    for (const auto& c : split(fields[2], ',')) {
      if (c.empty() || !std::all_of(c.begin(), c.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        corrupt("bad coefficient in '" + line + "'");
      }
      coeffs.emplace_back(c);
    }
    if (!columns[w].emplace(x, KLPolynomial(std::move(coeffs))).second) corrupt("duplicate record");
  }
  if (!sealed) corrupt("missing checksum line (truncated?)");
  if (std::getline(in, line) && !line.empty()) corrupt("data after checksum line");

  std::vector<std::pair<int, std::shared_ptr<const KLColumn>>> parsed;
  for (auto& [w, entries] : columns) {
    auto column = std::make_shared<KLColumn>();
    for (int x = 0; x < g.size(); ++x) {
      const bool below = g.bruhat_leq(x, w);
      const auto it = entries.find(x);
      if (below != (it != entries.end())) corrupt("column " + word_to_string(g.word(w)) + " is incomplete");
      if (!below) continue;
      column->lower.push_back(x);
      column->at_one.push_back(it->second.at_one());
      column->polys.push_back(std::move(it->second));
    }
    parsed.emplace_back(w, std::move(column));
  }
  cache_.clear();
  for (auto& [w, column] : parsed) cache_.insert(w, std::move(column));
}

void save_cache(const KLEngine& engine, const std::filesystem::path& path) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write cache file " + tmp);
    engine.save(out);
    if (!out) fail(ErrorKind::InvalidArgument, "failed writing cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void load_cache(KLEngine& engine, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read cache file " + path.string());
  engine.load(in);
}

}  // namespace oalgdim

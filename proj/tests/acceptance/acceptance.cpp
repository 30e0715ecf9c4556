// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"

using namespace oalgdim;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) notes << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << "threw: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) c.require(false, "over time limit");
  if (!c.ok) ++failures;
  std::printf("%s %d %s (%.2fs, limit %.0fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, limit_s,
              c.notes.str().empty() ? "" : ": ", c.notes.str().c_str());
  std::fflush(stdout);
}

std::vector<Weight> box(const DatumPtr& d, int b) {
  std::vector<Weight> out;
  const int n = d->ambient_dim();
  std::vector<int> v(n, -b);
  while (true) {
    out.push_back(Weight(d, RationalVector(v.begin(), v.end())));
    int k = 0;
    while (k < n && v[k] == b) v[k++] = -b;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

// Goldie profile from the test-side pipeline: triangular inverse of [P(1)]
// and explicit powers of the linear forms.
std::vector<int> oracle_profile(const DatumPtr& d, const RationalVector& t) {
  auto engine = KLEngine::of(d);
  const auto& g = engine->group();
  const int n = g.size();
  std::vector<std::vector<Integer>> b(n, std::vector<Integer>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) b[x][y] = engine->at_one(x, y);
  const auto inv = oracle::invert_unitriangular(b);
  const oracle::Group og(d);
  std::vector<int> loc(n);
  for (int y = 0; y < n; ++y) loc[y] = oracle::locate(og, g.element(y));
  std::vector<int> out;
  for (int w = 0; w < n; ++w) {
    std::vector<Integer> coeffs(og.size());
    for (int y = 0; y < n; ++y) coeffs[loc[y]] = inv[w][y];
    out.push_back(oracle::goldie_degree_by_powers(og, coeffs, t, d->num_pos_roots()));
  }
  return out;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  ::pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "oalgdim";

  criterion(1, "KL polynomials agree with the Hecke-algebra oracle on all pairs of A1, A2, A3", 30, [](Check& c) {
    std::size_t pairs = 0;
    for (int rank = 1; rank <= 3; ++rank) {
      const auto d = build_root_datum(Series::A, rank);
      KLEngine engine(WeylGroup::of(d));
      const auto table = hecke_oracle_table(d);
      const int n = engine.group().size();
      for (int x = 0; x < n; ++x)
        for (int w = 0; w < n; ++w) {
          ++pairs;
          c.require(engine.poly(x, w).coeffs() == table[x][w].coeffs(),
                    "mismatch in A" + std::to_string(rank) + " at " + std::to_string(x) + "," + std::to_string(w));
        }
    }
    c.require(pairs == 4 + 36 + 576, "pair count");
    const auto a3 = build_root_datum(Series::A, 3);
    const auto p = kl_poly(WeylElement::from_word(a3, std::vector<int>{1}),
                           WeylElement::from_word(a3, std::vector<int>{1, 0, 2, 1}));
    c.require(p.coeffs() == std::vector<Integer>{1, 1}, "P_{s2,s2s1s3s2} != 1+q");
  });

  criterion(2, "[P(1)] times [a] is the identity for A1, A2, A3, B2", 10, [](Check& c) {
    for (auto [series, rank] : std::vector<std::pair<Series, int>>{{Series::A, 1}, {Series::A, 2}, {Series::A, 3},
                                                                  {Series::B, 2}}) {
      const auto d = build_root_datum(series, rank);
      auto engine = KLEngine::of(d);
      const auto& g = engine->group();
      const int n = g.size();
      std::vector<std::vector<Integer>> a(n);
      for (int w = 0; w < n; ++w) {
        a[w].assign(n, 0);
        for (const auto& [y, v] : a_coeffs(g.element(w)).entries) a[w][g.index_of(y)] = v;
      }
      for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
          Integer sum = 0;
          for (int y = 0; y < n; ++y) sum += engine->at_one(x, y) * a[y][z];
          c.require(sum == (x == z ? 1 : 0), "not the identity for " + d->coxeter_name());
        }
    }
  });

  criterion(3, "Goldie profile A2 = (3,1,1,1,1,0); m_e = #roots and m_w0 = 0 on A3, B2", 60, [](Check& c) {
    const auto a2 = build_root_datum(Series::A, 2);
    const auto profile = goldie_profile(a2);
    c.require(profile == std::vector<int>{3, 1, 1, 1, 1, 0}, "A2 profile");
    c.require(profile == oracle_profile(a2, a2->t_vec()), "A2 profile differs from the expansion oracle");
    std::vector<int> dims;
    for (int m : profile) dims.push_back(a2->num_pos_roots() - m);
    c.require(dims == std::vector<int>{0, 2, 2, 2, 2, 3}, "A2 dims");
    for (auto [series, rank] : std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::B, 2}}) {
      const auto d = build_root_datum(series, rank);
      const auto p = goldie_profile(d);
      c.require(p.front() == d->num_pos_roots() && p.back() == 0, "endpoints of " + d->coxeter_name());
      c.require(p == oracle_profile(d, d->t_vec()), "profile of " + d->coxeter_name() + " differs from the oracle");
    }
  });

  criterion(4, "dim g/p for every standard parabolic of GL_{d+1}, d <= 4", 5, [](Check& c) {
    for (int d = 1; d <= 4; ++d) {
      const auto gl = build_root_datum(Series::GL, d + 1);
      for (const auto& subset : oracle::all_subsets(d)) {
        c.require(dim_parabolic_induction(*gl, subset) == oracle::gl_g_mod_p(d + 1, subset),
                  "GL" + std::to_string(d + 1));
      }
    }
  });

  criterion(5, "GL2 trianguline dimension is 1 in both cases", 1, [](Check& c) {
    const auto g = gl2_trianguline_dim({"d1", "d2", TrianguCase::Generic, "L"});
    const auto s = gl2_trianguline_dim({"d1", "d2", TrianguCase::Special, "L"});
    c.require(g.dim == 1 && s.dim == 1, "dim");
    std::vector<int> gd, sd;
    for (const auto& x : g.constituents) gd.push_back(x.dim);
    for (const auto& x : s.constituents) sd.push_back(x.dim);
    c.require(gd == std::vector<int>{1, 1}, "generic constituents");
    c.require(sd == std::vector<int>{0, 1, 1}, "special constituents");
    c.require(g.upper_bound == 2 && g.dim <= g.upper_bound && s.dim <= s.upper_bound, "upper bound");
  });

  criterion(6, "Drinfeld anchors with default config; d = 2 sweep with re-validated traces", 90, [](Check& c) {
    drinfeld_self_test(DrinfeldConfig{});
    for (auto [d, r, s] : std::vector<std::tuple<int, int, int>>{{1, 0, 0}, {1, 3, 1}, {1, 0, 5}}) {
      c.require(drinfeld_dim(d, r, s).dim == 1, "anchor");
    }
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 2; ++s) {
        const auto start = std::chrono::steady_clock::now();
        const auto rep = drinfeld_dim(2, r, s);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string tag = "(2," + std::to_string(r) + "," + std::to_string(s) + ")";
        c.require(secs < 10, tag + " too slow");
        c.require(rep.dim >= 1 && rep.dim <= 3, tag + " out of [1,3]");
        c.require(rep.steps.size() == 2, tag + " step count");
        const auto datum = rep.steps.front().v.datum();
        const auto elements = enumerate_group(datum);
        int min_m = rep.num_pos_roots;
        for (const auto& step : rep.steps) {
          c.require(dot_dominant(step.dominant), tag + " dominance");
          c.require(dot_apply(step.v, step.dominant) == step.conjugated, tag + " reconstruction");
          int longest = 0;
          for (const auto& u : elements)
            if (dot_apply(u, step.dominant) == step.conjugated) longest = std::max(longest, u.length());
          c.require(step.v.length() == longest, tag + " v not maximal in its coset");
          c.require(step.goldie.m >= 0 && step.goldie.m < rep.num_pos_roots, tag + " m bound");
          const auto profile = oracle_profile(datum, datum->t_vec());
          c.require(profile[WeylGroup::of(datum)->index_of(step.v)] == step.goldie.m, tag + " m vs oracle");
          min_m = std::min(min_m, step.goldie.m);
        }
        c.require(rep.dim == rep.num_pos_roots - min_m, tag + " dim formula");
      }
  });

  criterion(7, "dim_simple_hw on the box |lambda| <= 3 for A1, A2, B2 is 0 or within [r_min, 2#roots]", 60,
            [](Check& c) {
              for (auto [series, rank] : std::vector<std::pair<Series, int>>{{Series::A, 1}, {Series::A, 2},
                                                                            {Series::B, 2}}) {
                const auto d = build_root_datum(series, rank);
                const auto bounds = dim_bounds(*d, 5);
                c.require(bounds.r_min == oracle::half_min_orbit_dim(series, rank), "r_min");
                for (const auto& lambda : box(d, 3)) {
                  const int dim = dim_simple_hw(lambda).dim;
                  c.require(dim == 0 || (bounds.r_min <= dim && dim <= bounds.upper), lambda.to_string());
                }
              }
            });

  criterion(8, "two choices of t give the same m_w on GL2 and GL3", 5, [](Check& c) {
    for (int n : {2, 3}) {
      const auto d = build_root_datum(Series::GL, n);
      RationalVector other(n);
      // any t with alpha(t) = 1 on simple roots is valid; shift by a central 7/2
      for (int i = 0; i < n; ++i) other[i] = d->t_vec()[i] + Rational(7, 2);
      for (const auto& w : enumerate_group(d)) {
        c.require(goldie_degree(w, d->t_vec()).m == goldie_degree(w, other).m, "GL" + std::to_string(n));
      }
      c.require(oracle_profile(d, other) == oracle_profile(d, d->t_vec()), "oracle GL" + std::to_string(n));
    }
  });

  criterion(9, "cache round trip is byte-identical; warm and cold runs agree", 60, [&cli](Check& c) {
    const auto a3 = build_root_datum(Series::A, 3);
    KLEngine full(WeylGroup::of(a3));
    for (int w = 0; w < full.group().size(); ++w) full.column(w);
    std::ostringstream first;
    full.save(first);
    KLEngine reloaded(WeylGroup::of(a3));
    std::istringstream in(first.str());
    reloaded.load(in);
    std::ostringstream second;
    reloaded.save(second);
    c.require(first.str() == second.str(), "stream round trip");
    for (int x = 0; x < full.group().size(); ++x)
      for (int w = 0; w < full.group().size(); ++w)
        c.require(full.poly(x, w).coeffs() == reloaded.poly(x, w).coeffs(), "polynomial changed");

    std::random_device rd;
    const fs::path dir = fs::temp_directory_path() / ("oalgdim-accept-" + std::to_string(rd()));
    fs::create_directories(dir);
    const std::vector<std::string> invocations = {
        "kl table --type A --rank 3",
        "dim simple --type B --rank 2 --weight -1,-1 --trace",
        "dim drinfeld --d 2 --r 0 --s 2 --trace",
    };
    for (const auto& args : invocations) {
      const fs::path cache = dir / "run.cache";
      fs::remove(cache);
      const std::string cmd = "'" + cli + "' " + args + " --json --cache '" + cache.string() + "' 2>/dev/null";
      auto cold = nlohmann::ordered_json::parse(capture(cmd));
      c.require(fs::exists(cache), "cold run wrote no cache");
      const std::string bytes = [&] {
        std::ifstream f(cache, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(f), {});
      }();
      auto warm = nlohmann::ordered_json::parse(capture(cmd));
      c.require(warm["manifest"]["cache"]["loaded"] == true, "warm run did not load");
      c.require(warm["manifest"]["cache"]["misses"] == 0, "warm run recomputed");
      cold.erase("manifest");
      warm.erase("manifest");
      c.require(cold.dump() == warm.dump(), "result fields differ for " + args);
      std::ifstream f(cache, std::ios::binary);
      c.require(std::string(std::istreambuf_iterator<char>(f), {}) == bytes, "warm run changed the file");
    }
    fs::remove_all(dir);
  });

  return failures == 0 ? 0 : 1;
}

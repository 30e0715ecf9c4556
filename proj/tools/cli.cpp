#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oalgdim/dimcalc.hpp"
#include "oalgdim/error.hpp"
#include "oalgdim/goldie.hpp"
#include "oalgdim/kl.hpp"

namespace oalgdim::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kVersion = OALGDIM_VERSION;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankTooLarge:
    case ErrorKind::OracleTooLarge:
      return kExitRefused;
    case ErrorKind::InternalBoundViolation:
    case ErrorKind::CalibrationError:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(value));
  }
  return Json(value.str());
}

Json rational_json(const Rational& value) {
  if (is_integer(value)) return integer_json(boost::multiprecision::numerator(value));
  return Json(to_string(value));
}

Json weight_json(const Weight& lambda) {
  Json out = Json::array();
  for (const auto& c : lambda.coords()) out.push_back(rational_json(c));
  return out;
}

Json rational_vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(rational_json(c));
  return out;
}

Json one_based(const std::vector<int>& indices) {
  Json out = Json::array();
  for (int i : indices) out.push_back(i + 1);
  return out;
}

Json poly_json(const KLPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_json(c));
  return Json{{"poly", p.to_string()}, {"coeffs", coeffs}};
}

Json certificate_json(const GoldieCertificate& c) {
  return Json{{"exponents", c.exponents}, {"coefficient", integer_json(c.coefficient)}};
}

// "e", "s2s1", "2,1" or "" name the same kind of element.
WeylElement parse_element(const DatumPtr& datum, const std::string& text) {
  if (text.empty() || text == "e") return WeylElement::identity(datum);
  if (text.front() != 's') return WeylElement::from_word(datum, parse_word(*datum, text));
  std::string csv;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 's') {
      if (i + 1 >= text.size() || text[i + 1] == 's') fail(ErrorKind::InvalidArgument, "malformed word '" + text + "'");
      if (!csv.empty()) csv += ',';
    } else {
      csv += text[i];
    }
  }
  return WeylElement::from_word(datum, parse_word(*datum, csv));
}

struct Options {
  std::string type;
  int rank = 0;
  std::string orientation = "upper";
  std::optional<std::string> weight;
  std::string parabolic;
  std::string x;
  std::string w;
  int d = 1;
  int r = 0;
  int s = 0;
  std::string pairing = "lagged";
  std::optional<int> p;
  std::string case_name = "generic";
  std::string delta1 = "delta1";
  std::string delta2 = "delta2";
  std::string line = "L";
  bool json = false;
  bool trace = false;
  std::string cache;
  bool cache_readonly = false;
  std::uint64_t cap = kDefaultGroupCap;
};

// Persistent KL cache for one group: loaded before the computation and
// written back afterwards when new columns were computed.
class CacheSession {
 public:
  CacheSession(const Options& opts, const DatumPtr& datum) : engine_(KLEngine::of(datum)) {
    if (!opts.cache.empty()) {
      path_ = opts.cache;
    } else if (const char* dir = std::getenv("OALGDIM_CACHE_DIR"); dir && *dir) {
      path_ = fs::path(dir) / ("kl-" + datum->coxeter_name() + ".cache");
    }
    readonly_ = opts.cache_readonly;
    if (path_ && fs::exists(*path_)) {
      load_cache(*engine_, *path_);
      loaded_ = true;
    }
    start_ = engine_->cache().stats();
  }

  void finish() {
    const auto now = engine_->cache().stats();
    hits_ = now.hits - start_.hits;
    misses_ = now.misses - start_.misses;
    if (path_ && !readonly_ && (misses_ > 0 || !loaded_)) {
      if (path_->has_parent_path()) fs::create_directories(path_->parent_path());
      save_cache(*engine_, *path_);
      saved_ = true;
    }
  }

  Json json() const {
    const auto now = engine_->cache().stats();
    return Json{{"path", path_ ? Json(path_->string()) : Json(nullptr)},
                {"readonly", readonly_},
                {"loaded", loaded_},
                {"saved", saved_},
                {"hits", hits_},
                {"misses", misses_},
                {"columns", now.columns},
                {"entries", now.entries}};
  }

 private:
  std::shared_ptr<KLEngine> engine_;
  std::optional<fs::path> path_;
  bool readonly_ = false;
  bool loaded_ = false;
  bool saved_ = false;
  KLCacheStats start_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

struct Outcome {
  Json result = Json::object();
  DatumPtr datum;
  std::optional<CacheSession> cache;
  Json config = Json::object();
};

DatumPtr datum_from(const Options& opts) {
  if (opts.type.empty()) fail(ErrorKind::InvalidArgument, "--type is required");
  if (opts.rank <= 0) fail(ErrorKind::InvalidArgument, "--rank must be positive");
  return build_root_datum(parse_series(opts.type), opts.rank, parse_orientation(opts.orientation), opts.cap);
}

Weight weight_from(const Options& opts, const DatumPtr& datum) {
  if (!opts.weight) fail(ErrorKind::InvalidArgument, "--weight is required");
  RationalVector coords = parse_rational_list(*opts.weight);
  if (static_cast<int>(coords.size()) != datum->ambient_dim()) {
    fail(ErrorKind::InvalidArgument, "--weight needs " + std::to_string(datum->ambient_dim()) + " coordinates for " +
                                         datum->coxeter_name() + ", got " + std::to_string(coords.size()));
  }
  return Weight(datum, std::move(coords));
}

Json datum_json(const DatumPtr& datum) {
  return Json{{"type", to_string(datum->series())},
              {"rank", datum->rank()},
              {"orientation", to_string(datum->orientation())},
              {"fingerprint", datum->fingerprint()},
              {"weyl_order", datum->weyl_order()},
              {"num_pos_roots", datum->num_pos_roots()}};
}

void root_info(const Options& opts, Outcome& o) {
  o.datum = datum_from(opts);
  const RootDatum& d = *o.datum;
  Json roots = Json::array();
  for (const auto& root : d.positive_roots()) {
    roots.push_back(Json{{"support", root.support}, {"ambient", root.ambient}, {"coroot", root.coroot},
                         {"height", root.height()}});
  }
  o.result = Json{{"type", to_string(d.series())},
                  {"rank", d.rank()},
                  {"semisimple_rank", d.semisimple_rank()},
                  {"orientation", to_string(d.orientation())},
                  {"weyl_order", d.weyl_order()},
                  {"num_pos_roots", d.num_pos_roots()},
                  {"cartan", d.cartan()},
                  {"simple_roots", d.simple_roots()},
                  {"simple_coroots", d.simple_coroots()},
                  {"rho", rational_vector_json(d.rho())},
                  {"t", rational_vector_json(d.t_vec())},
                  {"dual_coxeter_number", dual_coxeter_number(d.series(), d.rank())},
                  {"positive_roots", roots}};
}

void weyl_orbit(const Options& opts, Outcome& o) {
  o.datum = datum_from(opts);
  const Weight lambda = weight_from(opts, o.datum);
  const DominantConjugate conj = dominant_conjugate(lambda);
  const auto orbit = dot_orbit(lambda);
  Json list = Json::array();
  for (const auto& mu : orbit) list.push_back(weight_json(mu));
  o.result = Json{{"weight", weight_json(lambda)},
                  {"dominant", weight_json(conj.mu)},
                  {"w", conj.w.to_string()},
                  {"singular", one_based(conj.singular)},
                  {"orbit_size", orbit.size()},
                  {"orbit", list}};
}

void kl_poly_cmd(const Options& opts, Outcome& o) {
  o.datum = datum_from(opts);
  o.cache.emplace(opts, o.datum);
  const WeylElement x = parse_element(o.datum, opts.x);
  const WeylElement w = parse_element(o.datum, opts.w);
  const KLPolynomial p = kl_poly(x, w);
  o.result = Json{{"x", x.to_string()}, {"w", w.to_string()}, {"bruhat_leq", bruhat_leq(x, w)}};
  o.result.update(poly_json(p));
  o.result["at_one"] = integer_json(p.at_one());
}

void kl_table(const Options& opts, Outcome& o) {
  o.datum = datum_from(opts);
  o.cache.emplace(opts, o.datum);
  auto engine = KLEngine::of(o.datum);
  const auto group = WeylGroup::of(o.datum);
  Json entries = Json::array();
  int max_degree = 0;
  std::size_t count = 0;
  for (int w = 0; w < group->size(); ++w) {
    const auto column = engine->column(w);
    for (std::size_t k = 0; k < column->lower.size(); ++k) {
      const KLPolynomial& p = column->polys[k];
      max_degree = std::max(max_degree, p.degree());
      ++count;
      if (opts.trace || !p.is_zero()) {
        Json row{{"x", word_to_string(group->word(column->lower[k]))}, {"w", word_to_string(group->word(w))}};
        row.update(poly_json(p));
        entries.push_back(std::move(row));
      }
    }
  }
  o.result = Json{{"group_order", group->size()}, {"pairs", count}, {"max_degree", max_degree}, {"entries", entries}};
}

void dim_simple(const Options& opts, Outcome& o) {
  o.datum = datum_from(opts);
  const Weight lambda = weight_from(opts, o.datum);
  o.cache.emplace(opts, o.datum);
  const SimpleDimReport report = dim_simple_hw(lambda);
  o.result = Json{{"dim", report.dim},
                  {"m", report.goldie.m},
                  {"w", report.goldie.w.to_string()},
                  {"lambda", weight_json(report.lambda)},
                  {"mu", weight_json(report.mu)},
                  {"singular", one_based(report.singular)},
                  {"num_pos_roots", report.goldie.num_pos_roots},
                  {"certificate", certificate_json(report.goldie.certificate)}};
  if (opts.trace) {
    Json row = Json::array();
    for (const auto& [y, a] : a_coeffs(report.goldie.w).entries) {
      row.push_back(Json{{"y", y.to_string()}, {"a", integer_json(a)}});
    }
    o.result["a_coeffs"] = row;
  }
}

void dim_induced(const Options& opts, Outcome& o) {
  o.datum = datum_from(opts);
  const auto levi = parse_simple_subset(*o.datum, opts.parabolic);
  o.result = Json{{"dim", dim_parabolic_induction(*o.datum, levi)},
                  {"parabolic", one_based(levi)},
                  {"num_pos_roots", o.datum->num_pos_roots()},
                  {"levi_pos_roots", levi_positive_roots(*o.datum, levi)}};
}

void dim_bounds_cmd(const Options& opts, Outcome& o) {
  o.datum = datum_from(opts);
  if (!opts.p) fail(ErrorKind::InvalidArgument, "--p is required");
  const BoundsReport report = dim_bounds(*o.datum, *opts.p);
  o.result = Json{{"r_min", report.r_min},
                  {"upper", report.upper},
                  {"p", *opts.p},
                  {"hypothesis_warnings", report.hypothesis_warnings}};
}

void dim_gl2ps(const Options& opts, Outcome& o) {
  TrianguParam param;
  param.delta1 = opts.delta1;
  param.delta2 = opts.delta2;
  param.line = opts.line;
  if (opts.case_name == "generic") {
    param.kind = TrianguCase::Generic;
  } else if (opts.case_name == "special") {
    param.kind = TrianguCase::Special;
  } else {
    fail(ErrorKind::InvalidArgument, "--case must be 'generic' or 'special'");
  }
  o.datum = build_root_datum(Series::GL, 2);
  const TrianguReport report = gl2_trianguline_dim(param);
  Json constituents = Json::array();
  for (const auto& c : report.constituents) constituents.push_back(Json{{"name", c.name}, {"dim", c.dim}});
  o.result = Json{{"dim", report.dim},
                  {"case", opts.case_name},
                  {"L", opts.line},
                  {"constituents", constituents},
                  {"upper_bound", report.upper_bound}};
}

void dim_drinfeld(const Options& opts, Outcome& o) {
  if (opts.d < 1) fail(ErrorKind::InvalidArgument, "--d must be at least 1");
  if (opts.d > kMaxDrinfeldD) {
    fail(ErrorKind::RankTooLarge, "--d " + std::to_string(opts.d) + " exceeds the cap " + std::to_string(kMaxDrinfeldD));
  }
  DrinfeldConfig config;
  config.pairing = parse_step_pairing(opts.pairing);
  config.orientation = parse_orientation(opts.orientation);
  o.config["pairing"] = to_string(config.pairing);
  o.datum = build_root_datum(Series::GL, opts.d + 1, config.orientation, opts.cap);
  o.cache.emplace(opts, o.datum);
  const DrinfeldReport report = drinfeld_dim(opts.d, opts.r, opts.s, config, opts.cap);
  o.result = Json{{"dim", report.dim},
                  {"d", report.d},
                  {"r", report.r},
                  {"s", report.s},
                  {"i0", report.i0},
                  {"min_m", report.min_m},
                  {"num_pos_roots", report.num_pos_roots}};
  if (opts.trace) {
    Json steps = Json::array();
    for (const auto& step : report.steps) {
      steps.push_back(Json{{"j", step.j},
                           {"mu_index", step.mu_index},
                           {"mu", weight_json(step.mu)},
                           {"z_index", step.z_index},
                           {"z", step.z.to_string()},
                           {"conjugated", weight_json(step.conjugated)},
                           {"dominant", weight_json(step.dominant)},
                           {"v", step.v.to_string()},
                           {"singular", one_based(step.singular)},
                           {"v_is_max_coset_rep", is_max_coset_rep(step.v, step.singular)},
                           {"m", step.goldie.m},
                           {"certificate", certificate_json(step.goldie.certificate)}});
    }
    o.result["steps"] = steps;
  }
}

Json collect_inputs(const CLI::App& app) {
  Json out = Json::object();
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& results = opt->results();
    std::string name = opt->get_name();
    if (name.rfind("--", 0) == 0) name = name.substr(2);
    if (opt->get_type_size() == 0) {
      out[name] = true;
    } else {
      out[name] = results.empty() ? std::string() : results.back();
    }
  }
  return out;
}

void emit_text(std::ostream& out, const Json& result) {
  for (const auto& [key, value] : result.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

bool wants_json(const std::vector<std::string>& args) {
  for (const auto& a : args) {
    if (a == "--json") return true;
  }
  return false;
}

int report_error(std::ostream& out, std::ostream& err, bool json, const std::string& kind, const std::string& message,
                 int code) {
  if (json) {
    out << Json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump(2) << "\n";
  }
  err << "error: " << kind << ": " << message << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const bool json_requested = wants_json(args);
  Options opts;
  CLI::App app("Canonical dimensions of highest weight and induced representations", "oalgdim");
  app.set_version_flag("--version", kVersion);
  app.add_option("--type", opts.type, "Root system series: A B C D E F G GL");
  app.add_option("--rank", opts.rank, "Rank (n for GL_n)");
  app.add_option("--orientation", opts.orientation, "upper or lower positive system")->capture_default_str();
  app.add_option("--weight", opts.weight, "Comma-separated exact rationals");
  app.add_option("--parabolic", opts.parabolic, "Comma-separated simple root indices (1-based)");
  app.add_option("--x", opts.x, "Weyl element: e, s2s1 or 2,1");
  app.add_option("--w", opts.w, "Weyl element: e, s2s1 or 2,1");
  app.add_option("--d", opts.d, "Drinfeld dimension d")->capture_default_str();
  app.add_option("--r", opts.r, "Line bundle weight r")->capture_default_str();
  app.add_option("--s", opts.s, "Line bundle weight s")->capture_default_str();
  app.add_option("--pairing", opts.pairing, "Drinfeld step pairing: lagged or aligned")->capture_default_str();
  app.add_option("--p", opts.p, "Prime for hypothesis warnings");
  app.add_option("--case", opts.case_name, "Trianguline case: generic or special")->capture_default_str();
  app.add_option("--delta1", opts.delta1, "Label of the first character");
  app.add_option("--delta2", opts.delta2, "Label of the second character");
  app.add_option("--L", opts.line, "Label of the L-invariant");
  app.add_flag("--json", opts.json, "Machine-readable output");
  app.add_flag("--trace", opts.trace, "Include the full audit trace");
  app.add_option("--cache", opts.cache, "KL cache file (default $OALGDIM_CACHE_DIR/kl-<type><rank>.cache)");
  app.add_flag("--cache-readonly", opts.cache_readonly, "Never write the cache file");
  app.add_option("--cap", opts.cap, "Largest Weyl group order to enumerate")->capture_default_str();
  app.require_subcommand(1);
  app.fallthrough();

  using Handler = void (*)(const Options&, Outcome&);
  std::vector<std::tuple<CLI::App*, std::string, Handler>> leaves;
  auto group = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help, Handler handler) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    leaves.emplace_back(sub, parent->get_name() + " " + name, handler);
  };
  CLI::App* root = group("root", "Root data");
  leaf(root, "info", "Roots, coroots, rho and t", root_info);
  CLI::App* weyl = group("weyl", "Weyl group");
  leaf(weyl, "orbit", "Dot orbit and dominant conjugate of --weight", weyl_orbit);
  CLI::App* kl = group("kl", "Kazhdan-Lusztig polynomials");
  leaf(kl, "poly", "P_{x,w} for --x and --w", kl_poly_cmd);
  leaf(kl, "table", "All nonzero P_{x,w}", kl_table);
  CLI::App* dim = group("dim", "Canonical dimensions");
  leaf(dim, "simple", "dim L(--weight)", dim_simple);
  leaf(dim, "induced", "dim of the induction from --parabolic", dim_induced);
  leaf(dim, "bounds", "Lower and upper bounds", dim_bounds_cmd);
  leaf(dim, "gl2ps", "GL_2 trianguline representation", dim_gl2ps);
  leaf(dim, "drinfeld", "Line bundle on the Drinfeld half space", dim_drinfeld);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(out, err, json_requested, "UsageError", e.what(), kExitUsage);
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    for (auto& [sub, command, handler] : leaves) {
      if (!sub->parsed()) continue;
      Outcome outcome;
      outcome.config["orientation"] = opts.orientation;
      handler(opts, outcome);
      if (outcome.cache) outcome.cache->finish();
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                                  started);
      if (!opts.json) {
        emit_text(out, outcome.result);
        return kExitOk;
      }
      Json keys = Json::array();
      for (const auto& [key, value] : outcome.result.items()) keys.push_back(key);
      Json manifest{{"tool", "oalgdim"},
                    {"version", kVersion},
                    {"command", command},
                    {"datum", outcome.datum ? datum_json(outcome.datum) : Json(nullptr)},
                    {"config", outcome.config},
                    {"cache", outcome.cache ? outcome.cache->json() : Json(nullptr)},
                    {"wall_time_ms", elapsed.count()},
                    {"inputs", collect_inputs(app)},
                    {"outputs", keys}};
      Json doc = outcome.result;
      doc["manifest"] = std::move(manifest);
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    return report_error(out, err, opts.json, std::string(to_string(e.kind())), e.what(), exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    return report_error(out, err, opts.json, "Internal", e.what(), kExitInternal);
  }
  return report_error(out, err, opts.json, "UsageError", "no command given", kExitUsage);
}

}  // namespace oalgdim::cli

#include "morava/cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "morava/classifier/classifier.hpp"
#include "morava/io/json.hpp"
#include "morava/padic/padic_int.hpp"
#include "morava/powerseries/newton.hpp"
#include "morava/powerseries/weierstrass.hpp"
#include "morava/stabilizer/stabilizer.hpp"
#include "morava/ttspaces/finite_space.hpp"
#include "morava/ttspaces/nodescent.hpp"

namespace morava::cli {

namespace fs = std::filesystem;
using io::Json;

void RunConfig::validate() const {
  if (prime == 2) {
    throw ConfigError("p = 2 is not supported: the unramified quadratic setup and its test calibration assume odd p");
  }
  if (!is_prime(prime)) throw ConfigError("--prime must be an odd prime, got " + std::to_string(prime));
  if (degree < 2) throw ConfigError("--degree (series truncation D) must be at least 2");
  if (modulus < 1) throw ConfigError("--modulus must be positive");
  if (target < 1) throw ConfigError("--target must be positive");
  if (precision < modulus + 2) {
    throw ConfigError("--precision must be at least --modulus + 2 (" + std::to_string(modulus + 2) + ")");
  }
  if (precision > max_precision(prime)) {
    throw ConfigError("--precision " + std::to_string(precision) + " exceeds the 64-bit limit " +
                      std::to_string(max_precision(prime)) + " for p = " + std::to_string(prime));
  }
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("MORAVA_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return "morava-cache";
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["prime"] = cfg.prime;
  j["precision"] = cfg.precision;
  j["degree"] = cfg.degree;
  j["target"] = cfg.target;
  j["modulus"] = cfg.modulus;
  j["seed"] = std::to_string(cfg.seed);
  j["format"] = cfg.format == Format::Json ? "json" : "csv";
  j["cache_dir"] = cfg.cache_dir;
  j["assume_density"] = cfg.assume_density;
  return j;
}

// Everything that changes a computed artifact; format and cache location
// do not.
std::string artifact_key(const RunConfig& cfg) {
  return std::to_string(cfg.prime) + "/" + std::to_string(cfg.precision) + "/" + std::to_string(cfg.degree) + "/" +
         std::to_string(cfg.target) + "/" + std::to_string(cfg.modulus) + "/" + std::to_string(cfg.seed);
}

struct Report {
  Json json;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const RunConfig& cfg, const Report& r, std::ostream& out) {
  if (cfg.format == Format::Json) {
    out << r.json.dump(2) << '\n';
    return;
  }
  out << "# config " << config_json(cfg).dump() << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_field(r.columns[i]);
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

Report new_report(const RunConfig& cfg, const std::string& command) {
  Report r;
  r.json["config"] = config_json(cfg);
  r.json["command"] = command;
  return r;
}

std::string coeff_text(const WittElem& c) { return io::pair_json(c).dump(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TruncatedSeries load_series(const RunConfig& cfg, const std::string& path) {
  TruncatedSeries f = io::series_from_json(io::parse(read_file(path)));
  if (f.prime() != cfg.prime) {
    throw ConfigError("series is over p = " + std::to_string(f.prime()) + " but --prime is " +
                      std::to_string(cfg.prime));
  }
  return f;
}

// Working window: the smaller of the file's and the configuration's.
TruncatedSeries windowed(const RunConfig& cfg, const TruncatedSeries& f, int& D) {
  D = std::min(f.truncation(), cfg.degree);
  return f.reduced(std::min(f.precision(), cfg.precision));
}

fs::path cache_path(const RunConfig& cfg, const std::string& stem, const std::string& key) {
  fs::path dir = cfg.cache_dir.empty() ? fs::path(default_cache_dir()) : fs::path(cfg.cache_dir);
  fs::create_directories(dir);
  return dir / (stem + "-" + hex(fnv1a(artifact_key(cfg) + "|" + key)) + ".jsonl");
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

// Orbit points per residue disc: the affine coordinate mod the maximal
// ideal, written a+bw in F_{p^2}, or "inf" off the affine chart.
Json residue_histogram(const OrbitCertificate& cert) {
  std::map<std::string, int> counts;
  for (const auto& e : cert.entries) {
    const auto z = e.point.affine_coordinate();
    if (!z) {
      ++counts["inf"];
      continue;
    }
    const WittElem r = z->coeffs().front().residue();
    ++counts[std::to_string(r.c0().residue()) + "+" + std::to_string(r.c1().residue()) + "w"];
  }
  Json j = Json::object();
  for (const auto& [disc, n] : counts) j[disc] = n;
  return j;
}

OrbitCertificate load_certificate(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  return io::read_certificate(in);
}

void add_prepared(Report& r, const PreparedForm& pf) {
  r.json["n"] = pf.n;
  r.json["degree"] = pf.degree();
  r.json["P"] = io::polynomial_json(pf.P);
  r.columns = {"field", "value"};
  r.rows.push_back({"n", std::to_string(pf.n)});
  r.rows.push_back({"degree", std::to_string(pf.degree())});
  for (std::size_t i = 0; i < pf.P.size(); ++i) r.rows.push_back({"P" + std::to_string(i), coeff_text(pf.P[i])});
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ZeroSeries& e) {
    err << "error: " << e.what() << '\n';
    return kZeroSeries;
  } catch (const TruncationTooCoarse& e) {
    err << "error: " << e.what() << '\n';
    return kTruncationTooCoarse;
  } catch (const MissingCertificate& e) {
    err << "error: " << e.what() << " (pass --assume-density to proceed without it)\n";
    return kMissingCertificate;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

ExtElem parse_point(const RunConfig& cfg, const std::string& spec) {
  const QuadraticModulus mod = QuadraticModulus::canonical(cfg.prime);
  const int n = cfg.precision;
  std::size_t used = 0;
  long long v = 0;
  bool numeric = !spec.empty();
  try {
    v = std::stoll(spec, &used);
  } catch (const std::exception&) {
    numeric = false;
  }
  if (numeric && used == spec.size()) {
    return ExtElem::embed(ExtRing::base(mod, n), WittElem::from_signed(mod, n, v, 0));
  }
  const Json j = io::parse(read_file(spec));
  if (j.contains("poly")) {
    std::vector<WittElem> poly;
    for (const Json& c : j.at("poly")) poly.push_back(io::pair_from_json(mod, n, c));
    return adjoin_root(poly).mu;
  }
  const WittElem w = io::witt_from_json(j);
  if (!(w.modulus() == mod)) throw ConfigError("point is not over the configured prime");
  const WittElem r = w.reduced(std::min(n, w.precision()));
  return ExtElem::embed(ExtRing::base(mod, r.precision()), r);
}

}  // namespace

int cmd_weierstrass(const RunConfig& cfg, const std::string& series_file, std::ostream& out, std::ostream& err) {
  return run_guarded(
      [&] {
        cfg.validate();
        int D = 0;
        const TruncatedSeries F = windowed(cfg, load_series(cfg, series_file), D);
        const PreparedForm pf = weierstrass_prep(F, D);
        const TruncatedSeries residual = pf.reconstruct() - F.truncated(D);
        Report r = new_report(cfg, "weierstrass");
        r.json["input"] = {{"prime", F.prime()}, {"precision", F.precision()}, {"truncation", D}};
        add_prepared(r, pf);
        r.json["U"] = io::series_json(pf.U).at("coeffs");
        r.json["residual"] = residual.is_zero() ? "0" : residual.to_string();
        for (int i = 0; i < pf.U.truncation(); ++i) r.rows.push_back({"U" + std::to_string(i), coeff_text(pf.U.coeff(i))});
        r.rows.push_back({"residual", r.json["residual"].get<std::string>()});
        emit(cfg, r, out);
        return residual.is_zero() ? kOk : kUsage;
      },
      err);
}

int cmd_orbit(const RunConfig& cfg, const std::string& point, std::ostream& out, std::ostream& err) {
  return run_guarded(
      [&] {
        cfg.validate();
        const ProjPoint base = ProjPoint::affine(parse_point(cfg, point));
        const fs::path path = cache_path(cfg, "orbit", io::point_json(base).dump() +
                                                          io::polynomial_json(base.ring()->poly()).dump());
        Report r = new_report(cfg, "orbit");
        r.json["base"] = io::point_json(base);
        int code = kOk;
        OrbitCertificate cert{base, cfg.modulus, cfg.seed, cfg.target, {}};
        try {
          cert = orbit_enumerate(base, {cfg.target, cfg.modulus, cfg.seed, 0});
        } catch (const BudgetExhausted& e) {
          cert = e.partial();
          code = kBudgetExhausted;
          err << "error: " << e.what() << "; partial certificate written\n";
        }
        write_text(path, io::certificate_text(cert));
        const Verdict v = verify_certificate(load_certificate(path));
        r.json["certificate_file"] = path.string();
        r.json["points"] = cert.size();
        r.json["modulus"] = cert.modulus;
        r.json["complete"] = code == kOk;
        r.json["verified"] = v.ok;
        r.json["residue_histogram"] = residue_histogram(cert);
        r.columns = {"index", "a0", "a1", "x", "y"};
        for (std::size_t i = 0; i < cert.entries.size(); ++i) {
          const auto& e = cert.entries[i];
          r.rows.push_back({std::to_string(i), coeff_text(e.gamma.a0), coeff_text(e.gamma.a1),
                            io::ext_json(e.point.x()).dump(), io::ext_json(e.point.y()).dump()});
        }
        emit(cfg, r, out);
        if (!v.ok) {
          err << "error: certificate failed re-verification: " << v.message << '\n';
          return static_cast<int>(kUsage);
        }
        return code;
      },
      err);
}

int cmd_classify(const RunConfig& cfg, const std::string& series_file, std::ostream& out, std::ostream& err) {
  return run_guarded(
      [&] {
        cfg.validate();
        int D = 0;
        const TruncatedSeries full = windowed(cfg, load_series(cfg, series_file), D);
        if (full.is_zero()) throw ZeroSeries();
        if (full.weierstrass_degree() >= D) throw TruncationTooCoarse(full.weierstrass_degree(), D);
        const TruncatedSeries F = full.truncated(D);
        Report r = new_report(cfg, "classify");
        ClassifyOptions opts{cfg.target, cfg.modulus, cfg.seed, 0};
        int code = kOk;
        std::optional<Classification> c;
        std::optional<OrbitCertificate> cert;
        try {
          c = classify_principal(F, opts);
          cert = c->certificate;
        } catch (const BudgetExhausted& e) {
          cert = e.partial();
          code = kBudgetExhausted;
          err << "error: " << e.what() << "; partial certificate written\n";
        }
        if (c) {
          r.json["verdict"] = verdict_name(c->verdict);
          add_prepared(r, c->prepared);
          r.rows.insert(r.rows.begin(), {"verdict", verdict_name(c->verdict)});
        } else {
          r.json["verdict"] = nullptr;
          r.columns = {"field", "value"};
        }
        if (cert) {
          const fs::path path = cache_path(cfg, "classify", io::series_json(F).dump());
          write_text(path, io::certificate_text(*cert));
          const Verdict v = verify_certificate(load_certificate(path));
          r.json["certificate_file"] = path.string();
          r.json["certificate_points"] = cert->size();
          r.json["modulus"] = cert->modulus;
          r.json["certificate_verified"] = v.ok;
          r.rows.push_back({"certificate_file", path.string()});
          r.rows.push_back({"certificate_points", std::to_string(cert->size())});
        } else {
          r.json["certificate_file"] = nullptr;
        }
        if (c && c->polygon) r.json["newton_polygon"] = io::polygon_json(*c->polygon);
        if (c && (c->verdict == VerdictKind::UnitIdeal || c->verdict == VerdictKind::PPower)) {
          r.json["radical"] = ideal_name(radical_of_principal(*c));
          r.rows.push_back({"radical", r.json["radical"].get<std::string>()});
        }
        Json primes = Json::array();
        for (const auto& ip : invariant_prime_list()) primes.push_back({{"symbol", ip.symbol}, {"ideal", ideal_name(ip.ideal)}});
        r.json["invariant_primes"] = primes;
        emit(cfg, r, out);
        return code;
      },
      err);
}

int cmd_coeq(const RunConfig& cfg, const std::string& mode, int n, std::ostream& out, std::ostream& err) {
  return run_guarded(
      [&] {
        cfg.validate();
        Report r = new_report(cfg, "coeq");
        r.json["mode"] = mode;
        if (mode == "chain") {
          if (n < 0 || n > 62) throw ConfigError("chain length must be in 0..62");
          const FiniteSpace c = chain_spectrum(n);
          const auto subsets = thomason_subsets(c);
          r.json["n"] = n;
          r.json["space"] = io::space_json(c);
          Json list = Json::array();
          r.columns = {"index", "subset"};
          for (std::size_t i = 0; i < subsets.size(); ++i) {
            Json s = Json::array();
            std::string text;
            for (int x : subsets[i]) {
              s.push_back(c.label(x));
              text += (text.empty() ? "" : " ") + c.label(x);
            }
            list.push_back(s);
            r.rows.push_back({std::to_string(i), "{" + text + "}"});
          }
          r.json["thomason_subsets"] = list;
          r.json["count"] = subsets.size();
          emit(cfg, r, out);
          return static_cast<int>(kOk);
        }
        if (mode != "nodescent") throw ConfigError("coeq mode must be 'chain' or 'nodescent'");
        if (n < 1 || n > 3) throw ConfigError("nodescent degree must be in 1..3");
        const QuadraticModulus mod = QuadraticModulus::canonical(cfg.prime);
        SymbolicE0Space space = build_e0_space(mod, n);
        NodescentOptions opts;
        opts.assume_density = cfg.assume_density;
        const OrbitOptions orbit{cfg.target, cfg.modulus, cfg.seed, 0};
        std::vector<std::string> labels;
        for (const auto& pt : space.points) labels.push_back(pt.label);
        auto path_for = [&](const OrbitClass& cls) {
          return cache_path(cfg, "density", labels.at(cls.members.front()));
        };
        opts.certify = [&](const SymbolicE0Space& s, const OrbitClass& cls) -> std::optional<OrbitCertificate> {
          const fs::path path = path_for(cls);
          if (fs::exists(path)) {
            try {
              return load_certificate(path);
            } catch (const Error&) {
              // Unreadable cache entries are recomputed.
            }
          }
          return orbit_density_certificate(s, cls, cfg.precision, orbit);
        };
        opts.record = [&](const OrbitClass& cls, const OrbitCertificate& cert) {
          const fs::path path = path_for(cls);
          const std::string text = io::certificate_text(cert);
          if (!fs::exists(path) || read_file(path.string()) != text) write_text(path, text);
          return path.string();
        };
        const NodescentReport rep = nodescent_demo(std::move(space), opts);
        Json body = io::nodescent_json(rep);
        for (auto it = body.begin(); it != body.end(); ++it) r.json[it.key()] = it.value();
        r.columns = {"class", "merged_into", "certificate", "assumed"};
        for (const auto& m : rep.merges) {
          r.rows.push_back({m.class_label, m.merged_into, m.certificate_ref, m.assumed ? "true" : "false"});
        }
        emit(cfg, r, out);
        return static_cast<int>(kOk);
      },
      err);
}

namespace {

struct Check {
  std::string name;
  int samples = 0;
  bool ok = true;
  std::string detail;
};

using Rng = std::mt19937_64;

WittElem rnd(Rng& g, const QuadraticModulus& mod, int n) {
  const std::uint64_t m = checked_power(mod.p, n);
  const std::uint64_t a = g() % m;
  return WittElem(mod, n, a, g() % m);
}

WittElem rnd_unit(Rng& g, const QuadraticModulus& mod, int n) {
  for (;;) {
    WittElem w = rnd(g, mod, n);
    if (w.is_unit()) return w;
  }
}

std::vector<WittElem> rnd_supported(Rng& g, const QuadraticModulus& mod, int n, int d) {
  std::vector<WittElem> poly{rnd_unit(g, mod, n - 1).mul_p_power(1)};
  if (d == 1) poly[0] = rnd(g, mod, n - 1).mul_p_power(1);
  for (int i = 1; i < d; ++i) poly.push_back(rnd(g, mod, n - 1).mul_p_power(1));
  poly.emplace_back(mod, n, 1, 0);
  return poly;
}

TruncatedSeries rnd_series(Rng& g, const QuadraticModulus& mod, int n, int D, bool unit) {
  std::vector<WittElem> cs;
  for (int i = 0; i < D; ++i) cs.push_back(i == 0 && unit ? rnd_unit(g, mod, n) : rnd(g, mod, n));
  return TruncatedSeries::from_coeffs(mod, n, D, cs);
}

Check fail(Check c, std::string detail) {
  c.ok = false;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

int cmd_selftest(const RunConfig& cfg, const SelftestOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(
      [&] {
        cfg.validate();
        const QuadraticModulus mod = QuadraticModulus::canonical(cfg.prime);
        const int N = cfg.precision, D = cfg.degree;
        Rng g(cfg.seed);
        std::vector<Check> checks;

        {
          Check c{"padic inverse", 50};
          for (int i = 0; i < c.samples && c.ok; ++i) {
            const WittElem x = rnd_unit(g, mod, N);
            if (!(x * x.inverse() == WittElem(mod, N, 1, 0))) c = fail(c, "x * x^-1 != 1 for " + x.to_string());
          }
          checks.push_back(c);
        }
        {
          Check c{"frobenius automorphism", 50};
          for (int i = 0; i < c.samples && c.ok; ++i) {
            const WittElem x = rnd(g, mod, N), y = rnd(g, mod, N);
            if (!(frobenius(x * y) == frobenius(x) * frobenius(y)) || !(frobenius(frobenius(x)) == x)) {
              c = fail(c, "sigma is not a multiplicative involution at " + x.to_string());
            }
          }
          checks.push_back(c);
        }
        {
          Check c{"weierstrass round-trip", 30};
          for (int i = 0; i < c.samples && c.ok; ++i) {
            const TruncatedSeries F = rnd_series(g, mod, N, D, false).mul_p_power(static_cast<int>(g() % 3)).reduced(N);
            if (F.is_zero()) continue;
            const PreparedForm pf = weierstrass_prep(F);
            if (!(pf.reconstruct() == F) || !is_distinguished(pf.P) || !pf.U.coeff(0).is_unit()) {
              c = fail(c, "p^n P U != F for " + F.to_string());
            }
          }
          checks.push_back(c);
        }
        {
          Check c{"group law", 50};
          const OrderElem e = OrderElem::identity(mod, N);
          for (int i = 0; i < c.samples && c.ok; ++i) {
            const OrderElem a{rnd_unit(g, mod, N), rnd(g, mod, N)}, b{rnd_unit(g, mod, N), rnd(g, mod, N)},
                d{rnd_unit(g, mod, N), rnd(g, mod, N)};
            if (!(gamma_mul(gamma_mul(a, b), d) == gamma_mul(a, gamma_mul(b, d)))) c = fail(c, "associativity");
            else if (!(gamma_mul(a, gamma_inv(a)) == e)) c = fail(c, "inverse");
            else if (!(gamma_mul(a, b).norm() == a.norm() * b.norm())) c = fail(c, "norm multiplicativity");
          }
          checks.push_back(c);
        }
        {
          Check c{"action composition", 50};
          for (int i = 0; i < c.samples && c.ok; ++i) {
            const AdjoinedRoot root = adjoin_root(rnd_supported(g, mod, N, 1 + static_cast<int>(g() % 2)));
            const ProjPoint x = ProjPoint::affine(root.mu);
            const OrderElem a{rnd_unit(g, mod, N), rnd(g, mod, N)}, b{rnd_unit(g, mod, N), rnd(g, mod, N)};
            const ProjPoint lhs = act(gamma_mul(a, b), x), rhs = act(b, act(a, x));
            if (!(lhs.x().reduced(N - 2) == rhs.x().reduced(N - 2)) || !(lhs.y().reduced(N - 2) == rhs.y().reduced(N - 2))) {
              c = fail(c, "x.(ab) != (x.a).b");
            }
          }
          checks.push_back(c);
        }
        {
          const int kmax = std::min(5, N / 2);
          Check c{"derivative gap", 10 * kmax};
          const auto ring = ExtRing::base(mod, N);
          for (int i = 0; i < 10 && c.ok; ++i) {
            const ExtElem mu = ExtElem::embed(ring, rnd(g, mod, N - 1).mul_p_power(1));
            for (int k = 1; k <= kmax && c.ok; ++k) {
              if (derivative_check(mu, k).floor_value() < k) c = fail(c, "gap below k = " + std::to_string(k));
            }
          }
          checks.push_back(c);
        }
        {
          Check c{"certificate soundness", 1};
          const AdjoinedRoot root = adjoin_root(rnd_supported(g, mod, N, 2));
          const OrbitCertificate cert = orbit_enumerate(ProjPoint::affine(root.mu), {20, cfg.modulus, cfg.seed, 0});
          std::istringstream in(io::certificate_text(cert));
          OrbitCertificate reloaded = io::read_certificate(in);
          if (opts.corrupt_certificate && reloaded.entries.size() > 2) {
            reloaded.entries[1].point = reloaded.entries[2].point;
          }
          const Verdict v = verify_certificate(reloaded);
          if (!v.ok) c = fail(c, v.message);
          checks.push_back(c);
        }
        {
          Check c{"classifier unit scaling", 10};
          for (int i = 0; i < c.samples && c.ok; ++i) {
            const int d = 1 + static_cast<int>(g() % 2);
            const TruncatedSeries F = polynomial_series(rnd_supported(g, mod, N, d), D) * rnd_series(g, mod, N, D, true);
            const TruncatedSeries UF = rnd_series(g, mod, N, D, true) * F;
            const ClassifyOptions co{8, cfg.modulus, cfg.seed, 0};
            const Classification a = classify_principal(F, co), b = classify_principal(UF, co);
            if (a.verdict != b.verdict || a.n() != b.n() || a.degree() != b.degree()) c = fail(c, "verdict changed");
            else if (a.verdict == VerdictKind::NotInvariant && static_cast<int>(a.certificate->size()) <= a.degree()) {
              c = fail(c, "certificate not stronger than deg P");
            }
          }
          checks.push_back(c);
        }
        {
          Check c{"thomason subsets", 7};
          for (int n = 0; n <= 6 && c.ok; ++n) {
            if (thomason_subsets(chain_spectrum(n)).size() != static_cast<std::size_t>(n + 2)) {
              c = fail(c, "chain of length " + std::to_string(n + 1));
            }
          }
          checks.push_back(c);
        }
        {
          Check c{"nodescent", 1};
          NodescentOptions no;
          no.certify = [&](const SymbolicE0Space& s, const OrbitClass& cls) {
            return orbit_density_certificate(s, cls, N, {8, cfg.modulus, cfg.seed, 0});
          };
          const NodescentReport rep = nodescent_demo(build_e0_space(mod, 1), no);
          if (!rep.spectral_is_chain) c = fail(c, "spectral coequalizer is not a 3-point chain");
          checks.push_back(c);
        }

        Report r = new_report(cfg, "selftest");
        Json list = Json::array();
        r.columns = {"property", "samples", "status", "detail"};
        const Check* first_failure = nullptr;
        for (const Check& c : checks) {
          list.push_back({{"property", c.name}, {"samples", c.samples}, {"ok", c.ok}, {"detail", c.detail}});
          r.rows.push_back({c.name, std::to_string(c.samples), c.ok ? "pass" : "FAIL", c.detail});
          if (!c.ok && first_failure == nullptr) first_failure = &c;
        }
        r.json["checks"] = list;
        r.json["passed"] = first_failure == nullptr;
        emit(cfg, r, out);
        if (first_failure != nullptr) {
          err << "selftest failed: " << first_failure->name << ": " << first_failure->detail << '\n';
          return static_cast<int>(kSelftestFailed);
        }
        return static_cast<int>(kOk);
      },
      err);
}

}  // namespace morava::cli

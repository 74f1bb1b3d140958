#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "morava/cli/commands.hpp"

using namespace morava::cli;

int main(int argc, char** argv) {
  CLI::App app{"morava: Weierstrass preparation, stabilizer orbits and invariant ideals at height 2"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::string cache_dir;
  app.add_option("--prime", cfg.prime, "odd prime p")->capture_default_str();
  app.add_option("--precision", cfg.precision, "p-adic precision N")->capture_default_str();
  app.add_option("--degree", cfg.degree, "series truncation D (terms kept)")->capture_default_str();
  app.add_option("--target", cfg.target, "orbit points to certify")->capture_default_str();
  app.add_option("--modulus", cfg.modulus, "distinctness modulus k (points differ mod p^k)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "certificate directory")->envname("MORAVA_CACHE_DIR");
  app.add_flag("--assume-density", cfg.assume_density, "accept orbit classes without density certificates");

  std::string series_file, point, mode;
  int n = 2;
  SelftestOptions st;

  auto* weier = app.add_subcommand("weierstrass", "prepare F = p^n P U");
  weier->add_option("series", series_file, "series JSON file")->required();
  auto* orbit = app.add_subcommand("orbit", "certify distinct points of the orbit of [mu : 1]");
  orbit->add_option("point", point, "integer mu, or JSON file with a WittElem or {\"poly\": [...]}")->required();
  auto* classify = app.add_subcommand("classify", "decide invariance of the ideal (F)");
  classify->add_option("series", series_file, "series JSON file")->required();
  auto* coeq = app.add_subcommand("coeq", "coequalizers: chain spectrum or the descent counterexample");
  coeq->add_option("mode", mode, "chain | nodescent")->required()->check(CLI::IsMember({"chain", "nodescent"}));
  coeq->add_option("n", n, "chain: n (n+1 points); nodescent: maximal degree d")->capture_default_str();
  auto* selftest = app.add_subcommand("selftest", "run the invariant suite at reduced sizes");
  selftest->add_flag("--inject-corrupt-certificate", st.corrupt_certificate)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  cfg.cache_dir = cache_dir.empty() ? default_cache_dir() : cache_dir;

  if (*weier) return cmd_weierstrass(cfg, series_file, std::cout, std::cerr);
  if (*orbit) return cmd_orbit(cfg, point, std::cout, std::cerr);
  if (*classify) return cmd_classify(cfg, series_file, std::cout, std::cerr);
  if (*coeq) return cmd_coeq(cfg, mode, n, std::cout, std::cerr);
  return cmd_selftest(cfg, st, std::cout, std::cerr);
}

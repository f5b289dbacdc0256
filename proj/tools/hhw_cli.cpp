#include "hhw/cherednik.hpp"
#include "hhw/errors.hpp"
#include "hhw/io.hpp"
#include "hhw/presets.hpp"
#include "hhw/verify.hpp"
#include "hhw/wreath.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t size_cap_from_env() {
  const char* raw = std::getenv("HH_SIZE_CAP");
  if (raw == nullptr || *raw == '\0') return hhw::kDefaultSizeCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("HH_SIZE_CAP must be a positive integer, got '" + std::string(raw) + "'");
  }
}

hhw::BettiTable parse_betti_list(const std::string& text) {
  std::vector<long> dims;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
      dims.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--betti expects comma-separated integers, got '" + text + "'");
    }
  }
  return hhw::BettiTable::from_vector(dims);
}

struct Options {
  std::string preset = "weyl";
  std::string group = "A";
  int max_q = 6;
  int max_t = 12;
  int n = 2;
  int degree = 2;
  std::string betti;
  std::string word;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string format = "plain";
};

int run_series(const Options& o) {
  std::string name = o.preset;
  if (o.group == "B") name = hhw::type_b_preset(name);
  const hhw::AlgebraPreset p = hhw::load_preset(name);
  const hhw::BiSeries s = hhw::generating_series_product(p.betti, p.d, o.max_q, o.max_t);
  std::cout << hhw::emit(s, hhw::parse_format(o.format));
  return 0;
}

int run_betti(const Options& o) {
  const hhw::AlgebraPreset p = hhw::load_preset(o.preset);
  const hhw::BettiTable t = hhw::hh_cohomology_wreath(p.betti, p.d, o.n);
  std::cout << hhw::emit(t, hhw::parse_format(o.format), o.n);
  return 0;
}

int run_hilb(const Options& o) {
  const hhw::BettiTable t = hhw::hilb_poincare(parse_betti_list(o.betti), o.n);
  std::cout << hhw::emit(t, hhw::parse_format(o.format), o.n);
  return 0;
}

int run_deform(const Options& o) {
  const hhw::AlgebraPreset p = hhw::load_preset(o.preset);
  std::cout << hhw::deformation_parameter_count(p.betti, p.d, o.n) << '\n';
  return 0;
}

int run_reduce(const Options& o) {
  const hhw::Word w = hhw::parse_word(o.word, o.n);
  std::cout << hhw::normal_order(w, o.n).to_string() << '\n';
  return 0;
}

int run_cherednik_verify(const Options& o) {
  const hhw::PbwReport r = hhw::pbw_dimension_check(o.n, o.degree);
  std::cout << (r.passed ? "PASS" : "FAIL") << " pbw n=" << o.n << " D=" << o.degree
            << ": expected " << r.expected << ", counted " << r.counted << ", rank " << r.rank
            << ", filtration " << (r.filtration_ok ? "ok" : "violated") << '\n';
  return r.passed ? 0 : kExitFailure;
}

int run_verify(const Options& o) {
  hhw::VerifyOptions opt;
  opt.seed = o.seed;
  opt.size_cap = size_cap_from_env();
  const hhw::Format f = hhw::parse_format(o.format);
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = hhw::suite_names();
  else
    suites.push_back(o.suite);
  bool ok = true;
  for (const auto& s : suites) {
    const hhw::SuiteReport r = hhw::run_suite(s, opt);
    std::cout << hhw::emit(r, f) << std::flush;
    ok = ok && r.passed();
  }
  return ok ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild (co)homology of wreath products and Cherednik algebras"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;

  const std::vector<std::string> formats{"json", "csv", "plain"};

  auto* series = app.add_subcommand("series", "Generating series of HH^* over n");
  series->add_option("--preset", o.preset, "Algebra preset")->capture_default_str();
  series->add_option("--group", o.group, "A or B")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  series->add_option("--max-q", o.max_q)->check(CLI::NonNegativeNumber)->capture_default_str();
  series->add_option("--max-t", o.max_t)->check(CLI::NonNegativeNumber)->capture_default_str();
  series->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
  series->callback([&] { action = run_series; });

  auto* betti = app.add_subcommand("betti", "Betti table of HH^*(A(n))");
  betti->add_option("--preset", o.preset)->capture_default_str();
  betti->add_option("-n", o.n)->check(CLI::NonNegativeNumber)->capture_default_str();
  betti->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
  betti->callback([&] { action = run_betti; });

  auto* hilb = app.add_subcommand("hilb", "Orbifold Poincare polynomial of S^n X");
  hilb->add_option("--betti", o.betti, "b0,b1,b2")->required();
  hilb->add_option("-n", o.n)->check(CLI::NonNegativeNumber)->capture_default_str();
  hilb->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
  hilb->callback([&] { action = run_hilb; });

  auto* deform = app.add_subcommand("deform", "Number of deformation parameters of A(n)");
  deform->add_option("--preset", o.preset)->capture_default_str();
  deform->add_option("-n", o.n)->check(CLI::PositiveNumber)->capture_default_str();
  deform->callback([&] { action = run_deform; });

  auto* cher = app.add_subcommand("cherednik", "Rational Cherednik algebra H(n, k)");
  cher->require_subcommand(1);
  auto* reduce = cher->add_subcommand("reduce", "Normal form of a word");
  reduce->add_option("-n", o.n)->check(CLI::PositiveNumber)->capture_default_str();
  reduce->add_option("word", o.word, "e.g. \"p1 x1\"")->required();
  reduce->callback([&] { action = run_reduce; });
  auto* cverify = cher->add_subcommand("verify", "PBW dimension check up to degree D");
  cverify->add_option("-n", o.n)->check(CLI::PositiveNumber)->capture_default_str();
  cverify->add_option("D", o.degree)->check(CLI::NonNegativeNumber)->capture_default_str();
  cverify->callback([&] { action = run_cherednik_verify; });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices{"all"};
  for (const auto& s : hhw::suite_names()) suite_choices.push_back(s);
  verify->add_option("suite", o.suite)->check(CLI::IsMember(suite_choices))->capture_default_str();
  verify->add_option("--seed", o.seed)->capture_default_str();
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
  verify->callback([&] { action = run_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "hhw: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hhw::ResourceError& e) {
    std::cerr << "hhw: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "hhw: " << e.what() << '\n';
    return kExitFailure;
  }
}

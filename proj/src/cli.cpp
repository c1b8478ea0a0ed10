#include "ncjacobi/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "ncjacobi/hirota.hpp"
#include "ncjacobi/jacobi.hpp"
#include "ncjacobi/partitions.hpp"
#include "ncjacobi/special.hpp"

namespace ncjacobi::cli {

namespace {

std::vector<Rational> default_logs(int rank) {
  // l_i = i - r/2 sums to zero.
  std::vector<Rational> l;
  for (int i = 0; i <= rank; ++i) l.push_back(Rational(2 * i - rank, 2));
  return l;
}

EpsilonParams default_eps(int rank) { return {rank, Rational(1), Rational(2)}; }

VerificationReport jacobi_both(int cutoff, const RunConfig& cfg) {
  const ChargeConvention conv =
      cfg.mutation == Mutation::split_charge ? ChargeConvention::naive : ChargeConvention::from_split;
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-jacobi";
  rep.parameters = {{"cutoff", cutoff}, {"identities", {"Z(Y)", "Z^T(Y)"}}};
  if (conv == ChargeConvention::naive) rep.parameters["mutation"] = "split-charge";
  rep.absorb(verify_jacobi(cutoff, {false, cfg.threads, conv}));
  rep.absorb(verify_jacobi(cutoff, {true, cfg.threads, conv}));
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport hirota(int max_grade, const RunConfig& cfg) {
  return verify_bilinear(max_grade, {cfg.threads, cfg.mutation != Mutation::raw_tilde,
                                     cfg.mutation == Mutation::rho});
}

VerificationReport w1inf(int k, int d, int order, int m_range, int cutoff, const RunConfig& cfg) {
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-w1inf";
  rep.parameters = {{"K", k}, {"degree_cap", d}, {"order_v", order}, {"m_range", m_range}, {"cutoff", cutoff}};
  const VerificationReport b = verify_bosfert(k, d, order, m_range);
  rep.absorb(b);
  rep.convention_notes = b.convention_notes;
  if (cutoff > 0) rep.absorb(verify_toeplitz_jacobi(k, d, cutoff, cfg.threads));
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport qchar(int rank, int cutoff, const RunConfig& cfg) {
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-qchar";
  rep.parameters = {{"rank", rank}, {"cutoff", cutoff}, {"nodes", rank + 1}};
  const auto cd = CouplingData::from_logs(default_logs(rank));
  for (int i = 0; i <= rank; ++i) {
    VerificationReport sub = verify_qchar_jacobi(default_eps(rank), cd, i, cutoff, cfg.threads);
    sub.identity += "[i=" + std::to_string(i) + "]";
    rep.absorb(sub);
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport red34(int rank, int order, int z_range) {
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-red34";
  rep.parameters = {{"rank", rank}, {"order_q", order}, {"z_range", z_range}};
  const auto cd = CouplingData::from_logs(default_logs(rank));
  for (int i = 0; i <= rank; ++i) {
    VerificationReport sub = verify_red34(default_eps(rank), cd, i, order, z_range);
    sub.identity += "[i=" + std::to_string(i) + "]";
    rep.absorb(sub);
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport fay(int samples, int xi_samples, int max_rank) {
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-fay";
  rep.parameters = {{"samples", samples}, {"xi_samples", xi_samples}, {"xi_max_rank", max_rank}};
  rep.absorb(verify_fay_sweep(samples));
  rep.absorb(verify_xi_solver(xi_samples, max_rank));
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

std::optional<Mutation> parse_mutation(const std::string& s) {
  static const std::map<std::string, Mutation> names{{"none", Mutation::none},
                                                     {"split-charge", Mutation::split_charge},
                                                     {"raw-tilde", Mutation::raw_tilde},
                                                     {"rho", Mutation::rho}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::split_charge: return "split-charge";
    case Mutation::raw_tilde: return "raw-tilde";
    case Mutation::rho: return "rho";
    default: return "none";
  }
}

}  // namespace

VerificationReport run_all(const std::string& profile, const RunConfig& cfg) {
  if (profile != "quick" && profile != "full") throw std::invalid_argument("unknown profile " + profile);
  const bool full = profile == "full";
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "all";
  rep.parameters = {{"profile", profile}};
  if (cfg.mutation != Mutation::none) rep.parameters["mutation"] = mutation_name(cfg.mutation);

  std::vector<std::function<VerificationReport()>> steps{
      [&] { return full ? verify_bijection_sweep(12, 6, 16) : verify_bijection_sweep(8, 4, 12); },
      [&] { return full ? verify_psi_sweep(6, 4, 12) : verify_psi_sweep(5, 3, 8); },
      [&] { return verify_snake_sweep(full ? 8 : 6); },
      [&] { return verify_split(full ? 8 : 6, full ? 5 : 3, cfg.threads); },
      [&] { return jacobi_both(full ? 6 : 4, cfg); },
      [&] { return hirota(full ? 12 : 8, cfg); },
      [&] { return verify_classical_jtp(full ? 30 : 20, full ? 5 : 4); },
      [&] { return full ? w1inf(3, 2, 12, 5, 0, cfg) : w1inf(3, 1, 8, 4, 0, cfg); },
      [&] { return full ? w1inf(4, 2, 12, 5, 3, cfg) : w1inf(4, 2, 8, 4, 2, cfg); },
      [&] { return qchar(0, full ? 4 : 3, cfg); },
      [&] { return qchar(1, full ? 4 : 3, cfg); },
      [&] { return qchar(2, full ? 4 : 2, cfg); },
      [&] { return red34(0, full ? 4 : 3, full ? 3 : 2); },
      [&] { return red34(1, full ? 4 : 2, full ? 3 : 2); },
      [&] { return full ? fay(20, 50, 4) : fay(10, 10, 4); },
  };
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& step : steps) {
    const VerificationReport sub = step();
    runs.push_back({{"identity", sub.identity},
                    {"parameters", sub.parameters},
                    {"terms_checked", sub.terms_checked},
                    {"failures", sub.failures.size()}});
    rep.absorb(sub);
  }
  rep.parameters["runs"] = std::move(runs);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for noncommutative Jacobi, bilinear and triple-product identities", "ncjacobi"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string json_path;
  unsigned threads = 1;
  bool no_timing = false;
  std::string mutation = "none";
  app.add_option("--json", json_path, "Write the report as one JSON object to PATH");
  app.add_option("--threads", threads, "Worker threads (NCJACOBI_THREADS overrides)")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms = 0 (byte-deterministic output)");
  app.add_option("--inject-mutation", mutation, "Deliberate defect: none, split-charge, raw-tilde, rho")
      ->check(CLI::IsMember({"none", "split-charge", "raw-tilde", "rho"}));

  struct Params {
    int max_weight, m_range, cutoff, max_grade, order, rank, degree_cap, times;
  };
  std::map<std::string, Params> p;
  std::function<VerificationReport(const RunConfig&)> job;
  std::string profile = "quick";

  auto sub = [&](const std::string& name, const std::string& help, Params defaults) {
    p[name] = defaults;
    return app.add_subcommand(name, help);
  };
  auto opt_max_weight = [&](CLI::App* s, const std::string& n) {
    s->add_option("--max-weight", p[n].max_weight, "Largest |lambda|")->capture_default_str()->check(CLI::Range(0, 40));
  };
  auto opt_m_range = [&](CLI::App* s, const std::string& n) {
    s->add_option("--m-range", p[n].m_range, "Largest |M|")->capture_default_str()->check(CLI::Range(0, 40));
  };
  auto opt_cutoff = [&](CLI::App* s, const std::string& n) {
    s->add_option("--cutoff", p[n].cutoff, "Truncation R >= 1")->capture_default_str()->check(CLI::Range(1, 15));
  };
  auto opt_order = [&](CLI::App* s, const std::string& n) {
    s->add_option("--order", p[n].order, "Truncation order")->capture_default_str()->check(CLI::Range(0, 200));
  };
  auto opt_rank = [&](CLI::App* s, const std::string& n) {
    s->add_option("--rank", p[n].rank, "Quiver rank r")->capture_default_str()->check(CLI::Range(0, 8));
  };

  {
    const std::string n = "verify-bijection";
    auto* s = sub(n, "(M, lambda) <-> (Sigma+, Sigma-) roundtrips", {12, 6, 8, 0, 0, 0, 0, 0});
    opt_max_weight(s, n);
    opt_m_range(s, n);
    opt_cutoff(s, n);
    s->callback([&, n] {
      job = [&, n](const RunConfig&) {
        return verify_bijection_sweep(p[n].max_weight, p[n].m_range, 2 * p[n].cutoff);
      };
    });
  }
  {
    const std::string n = "verify-psi";
    auto* s = sub(n, "psi generating-function identity and its expansions", {6, 4, 0, 0, 12, 0, 0, 0});
    opt_max_weight(s, n);
    opt_m_range(s, n);
    opt_order(s, n);
    s->callback([&, n] {
      job = [&, n](const RunConfig&) { return verify_psi_sweep(p[n].max_weight, p[n].m_range, p[n].order); };
    });
  }
  {
    const std::string n = "verify-snake";
    auto* s = sub(n, "snake classes, bounds and coverage", {8, 0, 0, 0, 0, 0, 0, 0});
    opt_max_weight(s, n);
    s->callback([&, n] { job = [&, n](const RunConfig&) { return verify_snake_sweep(p[n].max_weight); }; });
  }
  {
    const std::string n = "verify-split";
    auto* s = sub(n, "split factorization of X_lambda", {8, 5, 0, 0, 0, 0, 0, 0});
    opt_max_weight(s, n);
    opt_m_range(s, n);
    s->callback([&, n] {
      job = [&, n](const RunConfig& c) { return verify_split(p[n].max_weight, p[n].m_range, c.threads); };
    });
  }
  {
    const std::string n = "verify-jacobi";
    auto* s = sub(n, "both noncommutative Jacobi identities, termwise", {0, 0, 6, 0, 0, 0, 0, 0});
    opt_cutoff(s, n);
    s->callback([&, n] { job = [&, n](const RunConfig& c) { return jacobi_both(p[n].cutoff, c); }; });
  }
  {
    const std::string n = "verify-hirota";
    auto* s = sub(n, "bilinear identity by grade blocks", {0, 0, 0, 12, 0, 0, 0, 0});
    s->add_option("--max-grade", p[n].max_grade, "Largest grade")->capture_default_str()->check(CLI::Range(0, 30));
    s->callback([&, n] { job = [&, n](const RunConfig& c) { return hirota(p[n].max_grade, c); }; });
  }
  {
    const std::string n = "verify-classical-jtp";
    auto* s = sub(n, "classical Jacobi triple product coefficients", {0, 5, 0, 0, 30, 0, 0, 0});
    opt_order(s, n);
    opt_m_range(s, n);
    s->callback([&, n] {
      job = [&, n](const RunConfig&) { return verify_classical_jtp(p[n].order, p[n].m_range); };
    });
  }
  {
    const std::string n = "verify-w1inf";
    auto* s = sub(n, "higher-times triple product and Toeplitz Jacobi", {0, 5, 3, 0, 12, 0, 2, 4});
    opt_order(s, n);
    opt_m_range(s, n);
    s->add_option("--times", p[n].times, "Highest time K (>= 3)")->capture_default_str()->check(CLI::Range(3, 12));
    s->add_option("--degree-cap", p[n].degree_cap, "Nilpotent total degree cap D")->capture_default_str()->check(CLI::Range(0, 12));
    s->add_option("--cutoff", p[n].cutoff, "Toeplitz Jacobi truncation R (0 skips)")->capture_default_str()->check(CLI::Range(0, 15));
    s->callback([&, n] {
      job = [&, n](const RunConfig& c) {
        return w1inf(p[n].times, p[n].degree_cap, p[n].order, p[n].m_range, p[n].cutoff, c);
      };
    });
  }
  {
    const std::string n = "verify-qchar";
    auto* s = sub(n, "q-character Theta-transform factorization (all nodes i)", {0, 0, 4, 0, 0, 2, 0, 0});
    opt_rank(s, n);
    opt_cutoff(s, n);
    s->callback([&, n] { job = [&, n](const RunConfig& c) { return qchar(p[n].rank, p[n].cutoff, c); }; });
  }
  {
    const std::string n = "verify-red34";
    auto* s = sub(n, "classical-limit commutative identity (all nodes i)", {0, 3, 0, 0, 4, 1, 0, 0});
    opt_rank(s, n);
    opt_order(s, n);
    opt_m_range(s, n);
    s->callback([&, n] {
      job = [&, n](const RunConfig&) { return red34(p[n].rank, p[n].order, p[n].m_range); };
    });
  }
  {
    const std::string n = "verify-fay";
    auto* s = sub(n, "Fay-type epsilon identity and the xi solver", {0, 0, 0, 0, 0, 4, 0, 0});
    opt_rank(s, n);
    s->callback([&, n] { job = [&, n](const RunConfig&) { return fay(20, 50, std::max(1, p[n].rank)); }; });
  }
  {
    auto* s = app.add_subcommand("all", "every identity at the chosen profile");
    s->add_option("--profile", profile, "quick or full")->capture_default_str()->check(CLI::IsMember({"quick", "full"}));
    s->callback([&] { job = [&](const RunConfig& c) { return run_all(profile, c); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  RunConfig cfg;
  cfg.threads = threads;
  if (const char* env = std::getenv("NCJACOBI_THREADS"); env && *env) {
    try {
      const int t = std::stoi(env);
      if (t < 1) throw std::invalid_argument("");
      cfg.threads = static_cast<unsigned>(t);
    } catch (const std::exception&) {
      err << "NCJACOBI_THREADS must be a positive integer\n";
      return 2;
    }
  }
  cfg.mutation = *parse_mutation(mutation);

  VerificationReport rep;
  try {
    rep = job(cfg);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (no_timing) rep.elapsed_ms = 0;

  out << summary_line(rep) << "\n";
  for (std::size_t k = 0; k < rep.failures.size() && k < 10; ++k) {
    const auto& f = rep.failures[k];
    out << "  FAIL " << f.index << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
  }
  if (rep.failures.size() > 10) out << "  ... " << rep.failures.size() - 10 << " more failures\n";
  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << json_path << "\n";
      return 2;
    }
    f << to_json(rep).dump(2) << "\n";
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace ncjacobi::cli

#include "skewmorph/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>

#include <CLI11.hpp>

#include "skewmorph/constructions.hpp"
#include "skewmorph/finite_field.hpp"
#include "skewmorph/morphism.hpp"
#include "skewmorph/number_theory.hpp"
#include "skewmorph/pm_format.hpp"
#include "skewmorph/search.hpp"
#include "skewmorph/splitting.hpp"

namespace skewmorph {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

SignMatrix load_pm(const std::string& path) {
  auto in = open_input(path);
  return read_pm(in);
}

QuhPair load_quh(const std::string& path) {
  auto in = open_input(path);
  return read_quh(in);
}

void print_verdict(std::ostream& out, const NonexistenceVerdict& v) {
  if (v.empty()) {
    out << "EMPTY witness=" << *v.witness << '\n';
  } else {
    out << "UNKNOWN\n";
  }
}

// Verdict of the applicable Legendre criterion, if any, for H(n, X_m).
std::optional<NonexistenceVerdict> criterion_for(std::int64_t n, std::int64_t m) {
  if (n % 2 == 0 || !is_prime(m) || m % 4 != 3) return std::nullopt;
  if (m == 3) return x3_emptiness(n);
  return nonexistence_witness(n, m);
}

int verify_file(std::ostream& out, const std::string& path, const std::string& kind) {
  std::string failure;
  if (kind == "quh") {
    const QuhDefect defect = quh_defect(load_quh(path));
    if (defect != QuhDefect::None) failure = std::string(describe(defect));
  } else {
    const SignMatrix h = load_pm(path);
    const Index n = h.order();
    const SignMatrix::Storage sym = h.entries() + h.entries().transpose();
    if (kind == "skew" && sym != SignMatrix::Storage::Identity(n, n) * 2) {
      failure = "H+Ht != 2I";
    } else if (!h.zero_free()) {
      failure = "zero entry";
    } else if (!is_hadamard(h)) {
      failure = "HHt != nI";
    }
  }
  if (failure.empty()) {
    out << "OK\n";
    return kExitOk;
  }
  out << "FAIL: " << failure << '\n';
  return kExitFail;
}

int minpoly_check(std::ostream& out, const std::string& path) {
  const SignMatrix h = load_pm(path);
  const std::int64_t m = h.order() - 1;
  if (m < 1) throw ParameterError("minpoly-check needs a matrix of order at least 2");
  const bool skew = is_skew_hadamard(h);
  const bool quadratic = skew_quadratic_check(h);
  const bool quartic = quartic_identity_check(h);
  out << "order " << h.order() << " m=" << m << '\n';
  out << "skew-hadamard: " << (skew ? "yes" : "no") << '\n';
  out << "H^2 = 2H - (m+1)I: " << (quadratic ? "holds" : "fails") << '\n';
  out << "H^4 + 2(m-1)H^2 + (m+1)^2 I = 0: " << (quartic ? "holds" : "fails") << '\n';
  if (quartic_is_minimal(m)) {
    out << "minimal: yes (m+1 not a perfect square)\n";
  } else {
    out << "minimal: no (m+1 = " << integer_sqrt(m + 1) << "^2)\n";
  }
  return quartic ? kExitOk : kExitFail;
}

int search_command(std::ostream& out, std::ostream& err, int n, std::int64_t m, std::uint64_t budget) {
  SearchOptions options;
  options.node_budget = budget;
  const SearchOutcome outcome = exhaustive_search(n, m, options);
  out << to_string(outcome.status) << " nodes=" << outcome.nodes_explored << '\n';
  if (outcome.witness) write_quh(out, *outcome.witness);
  if (outcome.status == SearchStatus::Found) {
    if (const auto verdict = criterion_for(n, m); verdict && verdict->empty()) {
      err << "inconsistent: found a QUH matrix but criterion reports EMPTY witness=" << *verdict->witness << '\n';
      return kExitFail;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew-Hadamard morphisms, QUH constructions and nonexistence criteria", "skewmorph"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::int64_t q = 0, p = 0, n = 0, m = 0, max_n = 0, limit = 0;
  int t = 0;
  std::uint64_t budget = SearchOptions{}.node_budget;
  std::string file, skew_file, kind;

  auto* paley = app.add_subcommand("paley", "Paley skew-Hadamard matrix of order q+1 (PM)");
  paley->add_option("q", q, "prime power, q = 3 mod 4")->required();
  paley->callback([&] { action = [&] { write_pm(out, paley_skew(q)); return 0; }; });

  auto* jac = app.add_subcommand("jacobsthal", "Jacobsthal matrix of GF(q) (PM)");
  jac->add_option("q", q, "odd prime power")->required();
  jac->callback([&] {
    action = [&] {
      const auto pp = prime_power(q);
      if (!pp || pp->prime == 2) throw ParameterError("q must be an odd prime power");
      if (q >= kMaxPmOrder) throw ParameterError("q too large");
      write_pm(out, jacobsthal(GfField::create(pp->prime, pp->exponent)));
      return 0;
    };
  });

  auto* fks = app.add_subcommand("fks", "FKS QUH matrix of order q^t (QUH)");
  fks->add_option("q", q, "prime power, q = 3 mod 4")->required();
  fks->add_option("t", t, "recursion depth")->required();
  fks->callback([&] { action = [&] { write_quh(out, fks_quh(q, t)); return 0; }; });

  auto* morph = app.add_subcommand("morph", "real Hadamard matrix from a QUH file and a skew PM file");
  morph->add_option("quh", file, "QUH-format file")->required();
  morph->add_option("skew", skew_file, "PM-format skew-Hadamard file")->required();
  morph->callback([&] {
    action = [&] {
      const QuhPair quh = load_quh(file);
      const SignMatrix skew = load_pm(skew_file);
      write_pm(out, apply_morphism(quh, skew).matrix);
      return 0;
    };
  });

  auto* verify = app.add_subcommand("verify", "check a matrix file");
  verify->add_option("file", file, "PM or QUH file")->required();
  verify->add_option("--kind", kind, "hadamard | skew | quh")
      ->required()
      ->check(CLI::IsMember({"hadamard", "skew", "quh"}));
  verify->callback([&] { action = [&] { return verify_file(out, file, kind); }; });

  auto* minpoly = app.add_subcommand("minpoly-check", "quartic identity and minimality for a skew matrix");
  minpoly->add_option("file", file, "PM file")->required();
  minpoly->callback([&] { action = [&] { return minpoly_check(out, file); }; });

  auto* nonexist = app.add_subcommand("nonexist", "Legendre nonexistence criterion for H(n, X_p)");
  nonexist->add_option("n", n, "odd order")->required();
  nonexist->add_option("p", p, "prime, p = 3 mod 4")->required();
  nonexist->callback([&] {
    action = [&] {
      if (p == 3) {
        if (n < 1) throw ParameterError("n must be positive");
        print_verdict(out, x3_emptiness(n));
      } else {
        print_verdict(out, nonexistence_witness(n, p));
      }
      return 0;
    };
  });

  auto* table = app.add_subcommand("table", "odd n <= N with H(n, X_p) shown empty");
  table->add_option("p", p, "prime, p = 3 mod 4")->required();
  table->add_option("--max-n", max_n, "largest n")->required();
  table->callback([&] {
    action = [&] {
      for (const auto row : emptiness_table(p, max_n)) out << row << '\n';
      return 0;
    };
  });

  auto* split = app.add_subcommand("split-type", "splitting of q in Q[sqrt(-p), sqrt(s)]");
  split->add_option("q", q, "odd prime")->required();
  split->add_option("p", p, "prime, p = 3 mod 4")->required();
  split->callback([&] { action = [&] { out << to_string(split_type(q, p)) << '\n'; return 0; }; });

  auto* density = app.add_subcommand("density", "proportion of primes meeting the criterion");
  density->add_option("p", p, "prime, p = 3 mod 4")->required();
  density->add_option("--limit", limit, "largest prime considered")->required();
  density->callback([&] {
    action = [&] {
      const DensityResult d = density_scan(p, limit);
      out << "qualifying=" << d.qualifying << " sampled=" << d.sampled << " proportion=" << d.numerator << '/'
          << d.denominator << " approx=" << std::fixed << std::setprecision(6) << d.value() << '\n';
      return 0;
    };
  });

  auto* search = app.add_subcommand("search", "exhaustive search for H(n, X_m)");
  search->add_option("n", n, "order")->required();
  search->add_option("m", m, "parameter")->required();
  search->add_option("--budget", budget, "node budget");
  search->callback([&] {
    action = [&] {
      if (n < 1 || n > kMaxSearchOrder) throw ParameterError("search order out of range");
      return search_command(out, err, static_cast<int>(n), m, budget);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
  }
  return kExitUsage;
}

}  // namespace skewmorph

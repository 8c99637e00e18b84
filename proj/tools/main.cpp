// Command-line front end: gamma tables, q- and (q,t)-characters, dimensions,
// freezing and folding, plus the acceptance selftest.  Exit codes: 0 success,
// 1 domain error, 2 usage error.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qtchar/cache.hpp"
#include "qtchar/io.hpp"
#include "qtchar/selftest.hpp"

using namespace qtchar;

namespace {

struct GlobalOpts {
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "text";
  long long cap = 200000;
  int threads = 1;
  bool verbose = false;
};

std::string default_cache_dir() {
  if (const char* env = std::getenv("QTCHAR_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/qtchar";
  return ".qtchar-cache";
}

LieType parse_type(const std::string& family, int rank) {
  require(family.size() == 1, ErrorKind::ParseError, "family must be one of A, B, C, D");
  return {family_from_char(family[0]), rank};
}

// Prints a pointed element in the requested format; reconstructs from the
// cached JSON when available so repeated runs are byte-identical.
void print_element(const GlobalOpts& g, const CartanData& cd, const nlohmann::json& j) {
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    const auto [top, body] = element_from_json(cd, j);
    std::cout << element_text(cd, top, body);
  }
}

nlohmann::json compute_or_load(const GlobalOpts& g, Engine& eng, const std::string& kind,
                               const Monomial& m) {
  const CacheKey key{std::string(1, static_cast<char>(eng.cartan().family)), eng.cartan().rank,
                     kind, monomial_str(m)};
  DiskCache cache(g.cache_dir);
  if (!g.no_cache) {
    if (auto hit = cache.load(key)) {
      if (g.verbose) std::cerr << "cache hit: " << key.canonical() << "\n";
      return *hit;
    }
  }
  nlohmann::json value;
  if (kind == "chiqt") {
    const auto kl = eng.chi_qt(m);
    if (g.verbose) {
      int max_deg = 0;
      for (const auto& [mm, q] : kl.q)
        for (const auto& [e, c] : q.terms()) max_deg = std::max(max_deg, -e / 2);
      std::cerr << "dominant set size " << kl.dominant_set_size << ", " << kl.q.size()
                << " nonzero KL coefficients, max t^{-1}-degree " << max_deg << ", support "
                << kl.chi.body().size() << "\n";
    }
    value = element_json(eng.cartan(), kl.chi.top(), kl.chi.body(), false);
  } else if (kind == "chiq") {
    value = element_json(eng.cartan(), m, eng.chi_q(m), true);
  } else if (kind == "ft") {
    const Pointed f = eng.f_t(m);
    if (g.verbose)
      std::cerr << "closure size " << eng.dominance_closure(m).members.size() << ", support "
                << f.body().size() << "\n";
    value = element_json(eng.cartan(), f.top(), f.body(), false);
  } else if (kind == "et") {
    const Pointed e = eng.e_t(m);
    value = element_json(eng.cartan(), e.top(), e.body(), false);
  } else {
    fail(ErrorKind::Internal, "unknown cache kind " + kind);
  }
  if (!g.no_cache) cache.store(key, value);
  return value;
}

std::string signed_monomial_str(const CartanData& cd, const Monomial& m, bool signed_labels) {
  if (!signed_labels) return monomial_str(m, "Yo");
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& e : m.entries()) {
    out += "Yo[" + std::to_string(internal_to_signed(cd, e.node)) + "," + std::to_string(e.p) +
           "]";
    if (e.exp != 1) out += "^" + std::to_string(e.exp);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q- and (q,t)-characters for quantum loop algebras of classical type"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  g.cache_dir = default_cache_dir();
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (env QTCHAR_CACHE_DIR)");
  app.add_flag("--no-cache", g.no_cache, "Disable the on-disk result cache");
  app.add_option("--format", g.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", g.cap, "Monomial-closure safety bound")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads,
                 "Worker threads (output is identical for any value)");
  app.add_flag("--verbose", g.verbose, "Diagnostics on stderr (set sizes, Q degrees)");

  std::string family = "A", from_family = "A";
  int rank = 1, from_rank = 2, to_rank = 1;
  int node_i = 1, node_j = 1, shift_u = 0;
  std::string monomial_text = "1", object = "chiqt", labeling = "standard", filter;
  bool t1 = false, verify = false, unfold = false, verify_sigma = false;

  auto* gamma_cmd = app.add_subcommand("gamma", "Pairing gamma_ij(u) and series c'_ij(u)");
  gamma_cmd->fallthrough();
  gamma_cmd->add_option("--type", family)->required();
  gamma_cmd->add_option("--rank", rank)->required();
  gamma_cmd->add_option("--i", node_i)->required();
  gamma_cmd->add_option("--j", node_j)->required();
  gamma_cmd->add_option("--u", shift_u)->required();

  auto add_char_cmd = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    cmd->add_option("--type", family)->required();
    cmd->add_option("--rank", rank)->required();
    cmd->add_option("--monomial", monomial_text)->required();
    return cmd;
  };
  auto* chift_cmd = add_char_cmd("chi-ft", "F_t(m) via the deformed recursion");
  chift_cmd->add_flag("--t1", t1, "Classical recursion at t = 1");
  auto* chiqt_cmd = add_char_cmd("chi-qt", "Canonical-basis (q,t)-character of L(m)");
  auto* chiq_cmd = add_char_cmd("chi-q", "q-character of the simple module L(m)");
  auto* dim_cmd = add_char_cmd("dim", "Dimension of the simple module L(m)");

  auto* freeze_cmd = app.add_subcommand("freeze", "Freeze a higher-rank character");
  freeze_cmd->fallthrough();
  freeze_cmd->add_option("--from-type", from_family)->required();
  freeze_cmd->add_option("--from-rank", from_rank)->required();
  freeze_cmd->add_option("--to-rank", to_rank)->required();
  freeze_cmd->add_option("--monomial", monomial_text)->required();
  freeze_cmd->add_option("--object", object)
      ->check(CLI::IsMember({"chiq", "chiqt", "ft", "et"}));
  freeze_cmd->add_flag("--verify", verify, "Recompute the small side independently");

  auto* fold_cmd = app.add_subcommand("fold", "Twisted q-character via folding");
  fold_cmd->fallthrough();
  fold_cmd->add_option("--type", family)->required();
  fold_cmd->add_option("--rank", rank)->required();
  fold_cmd->add_option("--monomial", monomial_text)->required();
  fold_cmd->add_flag("--unfold", unfold, "Also print the unfolded expansion");
  fold_cmd->add_flag("--verify-sigma", verify_sigma, "Check sigma-invariance of the unfolding");
  fold_cmd->add_option("--labeling", labeling, "Node labels: standard (1..n) or signed")
      ->check(CLI::IsMember({"standard", "signed"}));

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest_cmd->fallthrough();
  selftest_cmd->add_option("--filter", filter, "Only criteria whose name contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    if (gamma_cmd->parsed()) {
      GammaTable gt(cartan_data(parse_type(family, rank)));
      const long long gam = gt.gamma_ij(node_i, node_j, shift_u);
      const long long cp = gt.cprime(node_i, node_j, shift_u);
      if (g.format == "json") {
        nlohmann::json j{{"gamma", gam}, {"cprime", cp}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "gamma = " << gam << "\n" << "cprime = " << cp << "\n";
      }
    } else if (chift_cmd->parsed()) {
      Engine eng(parse_type(family, rank), g.cap);
      const Monomial m = parse_monomial(eng.cartan(), monomial_text);
      if (t1) {
        const TorusElement f = eng.f_classical(m);
        const nlohmann::json j = element_json(eng.cartan(), m, f, true);
        print_element(g, eng.cartan(), j);
      } else {
        print_element(g, eng.cartan(), compute_or_load(g, eng, "ft", m));
      }
    } else if (chiqt_cmd->parsed()) {
      Engine eng(parse_type(family, rank), g.cap);
      const Monomial m = parse_monomial(eng.cartan(), monomial_text);
      print_element(g, eng.cartan(), compute_or_load(g, eng, "chiqt", m));
    } else if (chiq_cmd->parsed()) {
      Engine eng(parse_type(family, rank), g.cap);
      const Monomial m = parse_monomial(eng.cartan(), monomial_text);
      print_element(g, eng.cartan(), compute_or_load(g, eng, "chiq", m));
    } else if (dim_cmd->parsed()) {
      Engine eng(parse_type(family, rank), g.cap);
      const Monomial m = parse_monomial(eng.cartan(), monomial_text);
      const nlohmann::json j = compute_or_load(g, eng, "chiq", m);
      long long dim = 0;
      for (const auto& term : j.at("terms")) dim += term.at("c").get<long long>();
      if (g.format == "json") {
        std::cout << nlohmann::json{{"dim", dim}}.dump() << "\n";
      } else {
        std::cout << dim << "\n";
      }
    } else if (freeze_cmd->parsed()) {
      const LieType big_type = parse_type(from_family, from_rank);
      const auto inc = DiagramInclusion::standard(big_type.family, to_rank, from_rank);
      Engine big(big_type, g.cap);
      Engine small({big_type.family, to_rank}, g.cap);
      const Monomial mt = parse_monomial(big.cartan(), monomial_text);
      require(mt.dominant(), ErrorKind::NotIDominant, "monomial is not dominant");

      Pointed y = [&]() {
        if (object == "chiq") return Pointed(big.cartan(), mt, big.chi_q(mt));
        if (object == "chiqt") return big.chi_qt(mt).chi;
        if (object == "ft") return big.f_t(mt);
        return big.e_t(mt);
      }();
      const Pointed frozen = freeze(inc, y);
      const bool t_one = (object == "chiq");
      nlohmann::json out = element_json(small.cartan(), frozen.top(), frozen.body(), t_one);

      bool verified = true;
      if (verify) {
        const Monomial m = res_monomial(inc, mt);
        const TorusElement independent = [&]() {
          if (object == "chiq") return small.chi_q(m);
          if (object == "chiqt") return small.chi_qt(m).chi.body();
          if (object == "ft") return small.f_t(m).body();
          return small.e_t(m).body();
        }();
        verified = frozen.body() == independent;
        if (g.format == "json") out["verify"] = verified ? "equal" : "mismatch";
      }
      print_element(g, small.cartan(), out);
      if (g.format != "json" && verify)
        std::cout << (verified ? "verify: equal\n" : "verify: MISMATCH\n");
      if (!verified) return 1;
    } else if (fold_cmd->parsed()) {
      const LieType type = parse_type(family, rank);
      const FoldingDatum fd = FoldingDatum::standard(type);
      Engine eng(type, g.cap);
      const bool signed_labels = (labeling == "signed");
      const Monomial m = signed_labels ? parse_monomial_signed(fd.cartan, monomial_text)
                                       : parse_monomial(eng.cartan(), monomial_text);
      const TwistedPointed chi = chi_q_twisted(fd, eng, m);

      if (g.format == "json") {
        nlohmann::json j = twisted_json(fd, chi);
        if (unfold) j["unfolded"] = unfolded_json(unfold_expand(fd, chi.body));
        if (verify_sigma)
          j["sigma_invariant"] = sigma_invariant(fd, unfold_expand(fd, chi.body));
        std::cout << j.dump(2) << "\n";
      } else {
        TorusElement body(key_of(fd.cartan));
        for (const auto& [mm, c] : chi.body.terms()) body.add_term(mm, HalfT::t_pow_half(0, c));
        for (const auto& [mm, c] : sorted_terms(fd.cartan, chi.top, body)) {
          const long long v = c.ev1();
          if (v != 1) std::cout << v << "*";
          std::cout << signed_monomial_str(fd.cartan, mm, signed_labels) << "\n";
        }
        if (unfold) {
          std::cout << "unfolded:\n";
          for (const auto& [um, c] : unfold_expand(fd, chi.body)) {
            if (c != 1) std::cout << c << "*";
            std::cout << unfolded_str(um) << "\n";
          }
        }
        if (verify_sigma) {
          const bool ok = sigma_invariant(fd, unfold_expand(fd, chi.body));
          std::cout << "sigma-invariant: " << (ok ? "yes" : "NO") << "\n";
          if (!ok) return 1;
        }
      }
    } else if (selftest_cmd->parsed()) {
      const int failures = run_selftest(filter, std::cout);
      return failures == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <optional>

#include "lrlab/constructions.hpp"
#include "lrlab/error.hpp"
#include "lrlab/json.hpp"
#include "lrlab/lab/cone.hpp"
#include "lrlab/lab/theorem.hpp"
#include "lrlab/lab/transfer.hpp"
#include "lrlab/lab/verify.hpp"
#include "lrlab/parallel.hpp"
#include "lrlab/power.hpp"
#include "lrlab/product.hpp"
#include "lrlab/signed_vector.hpp"

namespace lrlab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition partition_arg(const std::string& name, const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const Error& e) {
    throw UsageError("invalid partition for " + name + " '" + text + "': " + e.what());
  }
}

int length_arg(const std::string& name, int l) {
  if (l < 1) throw UsageError(name + " must be at least 1, got " + std::to_string(l));
  return l;
}

void require_fits(const std::string& name, const Partition& p, int l) {
  if (p.length() > l) {
    throw UsageError(name + " = " + to_string(p) + " has more than --l " + std::to_string(l) + " parts");
  }
}

void print_element(std::ostream& out, const LRElement& m) {
  std::size_t width = 0;
  for (const auto& [p, mult] : m) width = std::max(width, to_string(p).size());
  for (const auto& [p, mult] : m) out << std::left << std::setw(static_cast<int>(width)) << to_string(p) << "  " << to_decimal(mult) << '\n';
  out << "terms " << m.size() << ", total multiplicity " << to_decimal(total_multiplicity(m)) << '\n';
}

std::string bounds_text(const lab::Bounds& b) {
  std::string s;
  auto add = [&](const char* name, const std::optional<int>& v) {
    if (!v) return;
    if (!s.empty()) s += ' ';
    s += std::string(name) + '=' + std::to_string(*v);
  };
  add("max_weight", b.max_weight);
  add("max_length", b.max_length);
  add("max_distance", b.max_distance);
  add("max_shift", b.max_shift);
  return s;
}

void print_report(std::ostream& out, const lab::VerificationReport& r, bool timing) {
  out << lab::lemma_name(r.lemma) << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases << " cases";
  if (!r.passed()) out << ", " << r.failures.size() << " failures";
  if (timing) out << ", " << r.elapsed.count() << " ms";
  out << ")\n  bounds: " << bounds_text(r.bounds) << '\n';
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  for (const auto& f : r.failures) {
    out << "  counterexample:";
    for (const auto& [k, v] : f.inputs) out << ' ' << k << '=' << v;
    out << " -- " << f.reason << '\n';
  }
}

std::string property_text(const lab::PropertyResult& r) {
  return "fails at n=" + std::to_string(r.n) + " with B=" + to_string(*r.counterexample);
}

struct Globals {
  bool json = false;
  unsigned threads = 1;
  std::string cache;
  bool timing = false;
};

using Action = std::function<int(std::ostream&)>;

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Littlewood-Richardson algebra laboratory", "lrlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--cache", g.cache, "Power cache file (LRPOW1)");

  Action action;
  std::string s_a, s_b;
  int l = 0, n = 0;

  // mul
  auto* mul_cmd = app.add_subcommand("mul", "A (x) B, in L or in L(l) with --l");
  mul_cmd->add_option("A", s_a)->required();
  mul_cmd->add_option("B", s_b)->required();
  mul_cmd->add_option("--l", l, "Length cap");
  mul_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const Partition a = partition_arg("A", s_a), b = partition_arg("B", s_b);
      Cap cap;
      if (mul_cmd->count("--l")) cap = length_arg("--l", l);
      const LRElement m = mul(a, b, cap);
      if (g.json) o << to_json(m).dump() << '\n';
      else print_element(o, m);
      return kOk;
    };
  });

  // power
  auto* power_cmd = app.add_subcommand("power", "A^(x)n, in L or in L(l) with --l");
  power_cmd->add_option("A", s_a)->required();
  power_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  power_cmd->add_option("--l", l, "Length cap");
  power_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const Partition a = partition_arg("A", s_a);
      Cap cap;
      if (power_cmd->count("--l")) cap = length_arg("--l", l);
      const LRElement m = tensor_power(a, n, cap);
      if (g.json) o << to_json(m).dump() << '\n';
      else print_element(o, m);
      return kOk;
    };
  });

  // dominance
  auto* dom_cmd = app.add_subcommand("dominance", "Compare A and B in dominance order");
  dom_cmd->add_option("A", s_a)->required();
  dom_cmd->add_option("B", s_b)->required();
  dom_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const Partition a = partition_arg("A", s_a), b = partition_arg("B", s_b);
      const Dominance d = dominance_compare(a, b);
      if (g.json) {
        json j = {{"A", to_json(a)}, {"B", to_json(b)}, {"relation", std::string(dominance_name(d))}};
        if (d == Dominance::Greater || d == Dominance::Less || d == Dominance::Equal) j["distance"] = distance(a, b);
        o << j.dump() << '\n';
      } else {
        o << dominance_name(d);
        if (d == Dominance::Greater || d == Dominance::Less || d == Dominance::Equal) o << " (distance " << distance(a, b) << ')';
        o << '\n';
      }
      return kOk;
    };
  });

  // interpolate
  auto* interp_cmd = app.add_subcommand("interpolate", "Interpolating sequence from A down to B");
  interp_cmd->add_option("A", s_a)->required();
  interp_cmd->add_option("B", s_b)->required();
  interp_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const Partition a = partition_arg("A", s_a), b = partition_arg("B", s_b);
      const auto seq = interpolating_sequence(a, b);
      if (g.json) {
        json j = json::array();
        for (const auto& p : seq) j.push_back(to_json(p));
        o << j.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < seq.size(); ++i) o << 'P' << i << "  " << to_string(seq[i]) << '\n';
      }
      return kOk;
    };
  });

  // gj
  std::string s_j;
  auto* gj_cmd = app.add_subcommand("gj", "G_J(A) for one subdivision J, or all of them");
  gj_cmd->add_option("A", s_a)->required();
  gj_cmd->add_option("--l", l, "Length")->required();
  gj_cmd->add_option("--J", s_j, "Subdivision, e.g. 1,2|3");
  gj_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const int len = length_arg("--l", l);
      const Partition a = partition_arg("A", s_a);
      require_fits("A", a, len);
      std::vector<Subdivision> subs;
      if (gj_cmd->count("--J")) {
        try {
          subs.push_back(parse_subdivision(s_j, len));
        } catch (const Error& e) {
          throw UsageError("invalid subdivision for --J '" + s_j + "': " + e.what());
        }
      } else {
        subs = enumerate_subdivisions(len);
      }
      json j = json::array();
      for (const auto& s : subs) {
        const Partition gp = build_G(a, s);
        if (g.json) j.push_back({{"J", to_json(s)}, {"G", to_json(gp)}});
        else o << to_string(s) << "  " << to_string(gp) << '\n';
      }
      if (g.json) o << j.dump() << '\n';
      return kOk;
    };
  });

  // hj
  int beta = 0, delta = 0, m_raw = 0, n_raw = 0;
  auto* hj_cmd = app.add_subcommand("hj", "H_J(A) from column indices (--beta, --delta) or blocks (--m, --n)");
  hj_cmd->add_option("A", s_a)->required();
  hj_cmd->add_option("--l", l, "Length")->required();
  hj_cmd->add_option("--J", s_j, "Subdivision, e.g. 1,2|3")->required();
  auto* beta_opt = hj_cmd->add_option("--beta", beta, "Column beta");
  auto* delta_opt = hj_cmd->add_option("--delta", delta, "Column delta");
  auto* m_opt = hj_cmd->add_option("--m", m_raw, "Block m");
  auto* n_opt = hj_cmd->add_option("--n", n_raw, "Block n");
  beta_opt->needs(delta_opt);
  delta_opt->needs(beta_opt);
  m_opt->needs(n_opt);
  n_opt->needs(m_opt);
  beta_opt->excludes(m_opt);
  m_opt->excludes(beta_opt);
  hj_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const int len = length_arg("--l", l);
      const Partition a = partition_arg("A", s_a);
      require_fits("A", a, len);
      Subdivision s = Subdivision::trivial(len);
      try {
        s = parse_subdivision(s_j, len);
      } catch (const Error& e) {
        throw UsageError("invalid subdivision for --J '" + s_j + "': " + e.what());
      }
      HConstruction h;
      if (beta_opt->count()) h = build_H(a, s, beta, delta);
      else if (m_opt->count()) h = build_H_raw(a, s, m_raw, n_raw);
      else throw UsageError("hj needs --beta/--delta or --m/--n");
      if (g.json) {
        o << json{{"m", h.m}, {"n", h.n}, {"entries", h.entries.entries()},
                  {"partition", h.partition ? to_json(*h.partition) : json(nullptr)}}.dump()
          << '\n';
      } else {
        o << "m=" << h.m << " n=" << h.n << "  " << to_string(h.entries);
        o << (h.partition ? "  partition " + to_string(*h.partition) : std::string("  not a partition")) << '\n';
      }
      return kOk;
    };
  });

  // verify
  std::string lemma;
  bool all = false;
  lab::Bounds over;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive lemma sweeps");
  auto* lemma_opt = verify_cmd->add_option("--lemma", lemma, "Lemma id, e.g. CHI");
  auto* all_opt = verify_cmd->add_flag("--all", all, "Every lemma at its bounds");
  lemma_opt->excludes(all_opt);
  verify_cmd->add_option("--max-weight", over.max_weight, "Weight bound");
  verify_cmd->add_option("--max-l", over.max_length, "Length bound");
  verify_cmd->add_option("--max-distance", over.max_distance, "Dominance distance bound");
  verify_cmd->add_option("--max-shift", over.max_shift, "Determinant shift bound");
  verify_cmd->add_flag("--timing", g.timing, "Include elapsed time (not reproducible)");
  verify_cmd->callback([&] {
    action = [&](std::ostream& o) {
      std::vector<lab::LemmaId> ids;
      if (all) {
        ids = lab::all_lemmas();
      } else if (!lemma.empty()) {
        try {
          ids.push_back(lab::parse_lemma(lemma));
        } catch (const Error& e) {
          throw UsageError(std::string("--lemma: ") + e.what());
        }
      } else {
        throw UsageError("verify needs --lemma ID or --all");
      }
      bool ok = true;
      json reports = json::array();
      for (lab::LemmaId id : ids) {
        const auto r = lab::verify_lemma(id, over);
        ok = ok && r.passed();
        if (g.json) reports.push_back(lab::to_json(r, g.timing));
        else print_report(o, r, g.timing);
      }
      if (g.json) o << (all ? reports : reports.at(0)).dump() << '\n';
      return ok ? kOk : kFail;
    };
  });

  // nsearch
  int n_max = 0;
  bool with_bound = false;
  auto* ns_cmd = app.add_subcommand("nsearch", "Smallest uniform exponent on the window [N, nmax]");
  ns_cmd->add_option("A", s_a)->required();
  ns_cmd->add_option("--l", l, "Length")->required();
  ns_cmd->add_option("--nmax", n_max, "Largest exponent")->required();
  ns_cmd->add_flag("--bound", with_bound, "Also compute the cone bound (l <= 3)");
  ns_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const int len = length_arg("--l", l);
      const Partition a = partition_arg("A", s_a);
      require_fits("A", a, len);
      if (n_max < len) throw UsageError("--nmax must be at least --l");
      const auto s = lab::minimal_uniform_exponent(a, len, n_max);
      std::optional<lab::BoundDetails> bound;
      if (with_bound) bound = lab::theorem_bound(a, len);
      if (g.json) {
        json j = lab::to_json(s);
        if (bound) j = {{"search", j}, {"bound", lab::to_json(*bound)}};
        o << j.dump() << '\n';
      } else {
        o << "threshold " << (s.threshold ? std::to_string(*s.threshold) : std::string("unknown"));
        for (const auto& r : s.by_n) {
          if (!r.holds) o << "; " << property_text(r);
        }
        o << '\n';
        if (bound) {
          o << "bound " << bound->bound << " (M=" << bound->max_term << ", |Phi|=" << bound->fractional_points
            << ", cones=" << bound->simplicial_cones << ", rank=" << bound->rank << ")\n";
        }
      }
      return s.threshold ? kOk : kFail;
    };
  });

  // cone
  auto* cone_cmd = app.add_subcommand("cone", "Cone membership of B for A, with a generator decomposition");
  cone_cmd->add_option("B", s_b)->required();
  cone_cmd->add_option("A", s_a)->required();
  cone_cmd->add_option("--l", l, "Length")->required();
  cone_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const int len = length_arg("--l", l);
      const Partition a = partition_arg("A", s_a), b = partition_arg("B", s_b);
      require_fits("A", a, len);
      require_fits("B", b, len);
      lab::ConeCertificate c = lab::cone_membership(b, a, len);
      if (c.member) c = lab::cone_generator_decomposition(b, a, len);
      if (g.json) {
        o << lab::to_json(c).dump() << '\n';
      } else if (!c.member) {
        o << "not a member\n";
      } else {
        o << "member, n=" << *c.n << '\n';
        for (const auto& [j, kappa] : *c.decomposition) o << "  " << to_string(kappa) << "  G" << to_string(j) << " = " << to_string(build_G(a, j)) << '\n';
      }
      return kOk;
    };
  });

  // transfer
  int d = 0, t_max = 0;
  bool spot = false;
  auto* tr_cmd = app.add_subcommand("transfer", "Support witness: b^(x)tM inside a^(x)tN in L(d)");
  tr_cmd->add_option("a", s_a)->required();
  tr_cmd->add_option("b", s_b)->required();
  tr_cmd->add_option("--d", d, "Rank")->required();
  tr_cmd->add_option("--tmax", t_max, "Largest t")->required();
  tr_cmd->add_flag("--spot-check", spot, "Re-check 10 sampled summands with the tableau rule");
  tr_cmd->callback([&] {
    action = [&](std::ostream& o) {
      const int rank = length_arg("--d", d);
      const Partition a = partition_arg("a", s_a), b = partition_arg("b", s_b);
      const auto w = lab::transfer_witness(a, b, rank, t_max);
      std::optional<std::size_t> confirmed;
      if (spot) confirmed = lab::spot_check_witness(w, a, b, rank);
      if (g.json) {
        json j = lab::to_json(w);
        if (confirmed) j = {{"witness", j}, {"spot_checked", *confirmed}};
        o << j.dump() << '\n';
      } else {
        o << "M=" << w.m << " N=" << w.n << " t=" << w.t << "  |supp b^" << w.t * w.m << "|=" << w.support_b
          << " |supp a^" << w.t * w.n << "|=" << w.support_a << '\n';
        if (confirmed) o << "spot check: " << *confirmed << " summands confirmed\n";
      }
      return kOk;
    };
  });

  // cache
  std::string cache_action;
  auto* cache_cmd = app.add_subcommand("cache", "Inspect or remove the power cache file");
  cache_cmd->add_option("action", cache_action, "show | clear")->required()->check(CLI::IsMember({"show", "clear"}));
  cache_cmd->callback([&] {
    action = [&](std::ostream& o) {
      if (g.cache.empty()) throw UsageError("cache needs --cache PATH");
      if (cache_action == "clear") {
        const bool removed = std::filesystem::remove(g.cache);
        if (g.json) o << json{{"removed", removed}}.dump() << '\n';
        else o << (removed ? "removed " : "no cache at ") << g.cache << '\n';
        return kOk;
      }
      ProductEngine engine;
      load_power_cache(g.cache, engine);
      json j = json::array();
      for (const auto& [key, value] : engine.power_entries()) {
        if (g.json) {
          j.push_back({{"partition", to_json(key.base)}, {"n", key.exponent}, {"cap", key.cap ? json(*key.cap) : json(nullptr)}, {"terms", value->size()}});
        } else {
          o << to_string(key.base) << " n=" << key.exponent << " cap=" << (key.cap ? std::to_string(*key.cap) : "-")
            << " terms=" << value->size() << '\n';
        }
      }
      if (g.json) o << j.dump() << '\n';
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    set_worker_count(g.threads);
    const bool use_cache = !g.cache.empty() && !cache_cmd->parsed();
    if (use_cache) load_power_cache(g.cache, default_engine());
    const int code = action(out);
    if (use_cache) save_power_cache(g.cache, default_engine());
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case Errc::BudgetExceeded: return kBudget;
      case Errc::NoDecomposition:
      case Errc::NotFoundWithin: return kFail;
      default: return kUsage;
    }
  }
}

}  // namespace lrlab::cli

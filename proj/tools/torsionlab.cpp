// torsionlab command-line tool.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "torsionlab/catalan.hpp"
#include "torsionlab/serialize.hpp"
#include "torsionlab/specs.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct RunConfig {
  Scalar field = 2;
  std::size_t dim_bound = 2;
  std::size_t cap = 2000;
  double budget = 600.0;
  bool json = false;
  std::string dot;
  bool op = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::string target;
  std::vector<Check> checks;
  json data = json::object();

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  int emit(const RunConfig& cfg) const {
    if (cfg.json) {
      json j = {{"target", target}, {"pass", pass()}, {"data", data}};
      json cs = json::array();
      for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      j["checks"] = cs;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
      }
      std::cout << target << ": " << (pass() ? "PASS" : "FAIL") << "\n";
    }
    return pass() ? kPass : kFail;
  }
};

void write_dot(const RunConfig& cfg, const std::string& text) {
  if (cfg.dot.empty()) return;
  std::ofstream out(cfg.dot);
  if (!out) throw UsageError("cannot write " + cfg.dot);
  out << text;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

EnumerationLimits limits(const RunConfig& cfg) { return {cfg.cap, cfg.budget}; }

// ---------------------------------------------------------------------------

int cmd_catalan(const RunConfig& cfg, const std::string& kind, std::size_t n) {
  FinLattice l;
  json extra = json::object();
  std::string iso_line;
  if (kind == "dyck") {
    if (n < 1 || n > 8) throw UsageError("dyck requires 1 <= n <= 8");
    l = dyck_lattice(n);
  } else if (kind == "tamari") {
    if (n < 1 || n > 8) throw UsageError("tamari requires 1 <= n <= 8");
    l = tamari_lattice(n);
  } else if (kind == "typeA") {
    if (n < 1 || n > 5) throw UsageError("typeA requires 1 <= n <= 5");
    l = typeA_torsion_lattice(n);
    const bool iso = lattice_isomorphic(l, tamari_lattice(n + 1)).has_value();
    iso_line = "isomorphic to tamari " + std::to_string(n + 1) + ": " + yes(iso);
    extra["isomorphic_to_tamari"] = iso;
  } else {
    throw UsageError("kind must be dyck, tamari or typeA");
  }
  const bool dist = is_distributive(l), sd = is_semidistributive(l);
  write_dot(cfg, lattice_to_dot(l, kind + std::to_string(n)));
  if (cfg.json) {
    json j = {{"kind", kind}, {"n", n}, {"size", l.size()}, {"distributive", dist},
              {"semidistributive", sd}, {"lattice", lattice_to_json(l)}};
    j.update(extra);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << kind << " " << n << ": size " << l.size() << "\n"
              << "distributive: " << yes(dist) << "\n"
              << "semidistributive: " << yes(sd) << "\n";
    if (!iso_line.empty()) std::cout << iso_line << "\n";
  }
  return kPass;
}

int cmd_omega(const RunConfig& cfg, const std::string& spec, std::size_t n) {
  const Poset p = parse_poset_spec(spec, cfg.op);
  const Algebra a = incidence_algebra(opposite(p), cfg.field);
  if (n == 1) {
    const FinLattice l = omega_lattice_via_simples(a);
    const std::size_t ideals = order_ideals(p).size();
    write_dot(cfg, lattice_to_dot(l, "omega"));
    if (cfg.json) {
      std::cout << json{{"spec", spec}, {"n", 1}, {"size", l.size()}, {"ideals", ideals},
                        {"distributive", is_distributive(l)}, {"lattice", lattice_to_json(l)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "omega-torsion pairs: " << l.size() << "\n"
                << "order ideals of the poset: " << ideals << "\n";
    }
    return kPass;
  }
  if (n != 2) throw UsageError("--n must be 1 or 2");
  const Catalog c(a, cfg.dim_bound);
  const auto t = enumerate_torsion_pairs(c, limits(cfg));
  std::size_t count = 0;
  for (const auto& pr : t.pairs) count += is_omega_n(c, pr, 2, OmegaRoute::ext);
  if (cfg.json) {
    std::cout << json{{"spec", spec}, {"n", 2}, {"size", count}, {"torsion_pairs", t.pairs.size()}}.dump(2)
              << "\n";
  } else {
    std::cout << "omega_2-torsion pairs: " << count << " of " << t.pairs.size() << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// verify targets

void verify_thm1(Report& r, std::size_t n) {
  try {
    const auto iso = verify_theorem_1(n);
    r.add("Dyck_" + std::to_string(n) + " isomorphic to the omega lattice", true,
          std::to_string(iso.size()) + " elements");
    r.data["mapping"] = iso;
  } catch (const VerificationFailed& e) {
    r.add("Dyck_" + std::to_string(n) + " isomorphic to the omega lattice", false, e.what());
  }
}

void verify_thm2(Report& r, std::size_t n) {
  const FinLattice tam = tamari_lattice(n);
  const auto con = congruence_lattice(tam).lattice;
  const auto dyck = dyck_lattice(n);
  const auto iso = lattice_isomorphic(con, dyck);
  r.add("Con(Tam_" + std::to_string(n) + ") isomorphic to Dyck_" + std::to_string(n),
        iso.has_value(),
        "sizes " + std::to_string(con.size()) + " and " + std::to_string(dyck.size()));
  const auto iso_dual = lattice_isomorphic(con, dual(dyck));
  r.data["isomorphic"] = iso.has_value();
  r.data["isomorphic_to_dual"] = iso_dual.has_value();
  if (iso) r.data["mapping"] = *iso;
  if (iso_dual) r.data["dual_mapping"] = *iso_dual;
  if (!iso) {
    r.data["note"] = iso_dual ? "Con(Tam_n) is isomorphic to the dual of the Dyck lattice"
                              : "no isomorphism to the Dyck lattice or its dual";
  }
  if (n >= 2) {
    const auto f = forcing_poset(tam);
    const auto target = opposite(interval_poset(n - 1));
    r.add("forcing poset of Tam_" + std::to_string(n) + " isomorphic to Int([" +
              std::to_string(n - 1) + "])^op",
          poset_isomorphic(f, target).has_value());
    r.add("Con(Tam_" + std::to_string(n) + ") isomorphic to ideals of the forcing poset",
          lattice_isomorphic(con, ideal_lattice(f)).has_value());
  }
}

std::vector<std::pair<std::string, Algebra>> algebras_for(const RunConfig& cfg,
                                                          const std::string& spec) {
  std::vector<std::pair<std::string, Algebra>> out;
  if (spec.empty()) {
    out.emplace_back("example", example_algebra(cfg.field));
    out.emplace_back("int:2", parse_algebra_spec("int:2", cfg.field, cfg.op));
  } else {
    out.emplace_back(spec, parse_algebra_spec(spec, cfg.field, cfg.op));
  }
  return out;
}

void verify_prop_main(Report& r, const RunConfig& cfg, const std::string& spec) {
  for (auto& [name, a] : algebras_for(cfg, spec)) {
    const Catalog c(a, cfg.dim_bound);
    const auto t = enumerate_torsion_pairs(c, limits(cfg));
    for (std::size_t n = 1; n <= 2; ++n) {
      std::size_t bad = 0;
      for (const auto& pr : t.pairs) {
        const bool e = is_omega_n(c, pr, n, OmegaRoute::ext);
        if (e != is_omega_n(c, pr, n, OmegaRoute::syzygy) ||
            e != is_omega_n(c, pr, n, OmegaRoute::cosyzygy)) {
          ++bad;
        }
      }
      r.add(name + ": Ext, syzygy and cosyzygy routes agree for n=" + std::to_string(n), bad == 0,
            std::to_string(t.pairs.size()) + " pairs, " + std::to_string(bad) + " disagreements");
    }
  }
}

void verify_lemma_omega(Report& r, const RunConfig& cfg, const std::string& spec) {
  for (auto& [name, a] : algebras_for(cfg, spec)) {
    const Catalog c(a, cfg.dim_bound);
    const auto t = enumerate_torsion_pairs(c, limits(cfg));
    std::size_t bad = 0;
    for (const auto& pr : t.pairs) {
      const bool w = is_omega_n(c, pr, 1, OmegaRoute::ext);
      const bool hc = is_hereditary(c, pr) && is_cohereditary(c, pr);
      const bool serre = is_serre(c, pr.tors) && is_serre(c, pr.free);
      if (w != hc || w != serre) ++bad;
    }
    r.add(name + ": omega iff hereditary and cohereditary iff both classes Serre", bad == 0,
          std::to_string(bad) + " counterexamples");
    for (std::size_t n = 1; n <= 2; ++n) {
      std::vector<bool> in(t.pairs.size());
      for (std::size_t i = 0; i < t.pairs.size(); ++i) {
        in[i] = is_omega_n(c, t.pairs[i], n, OmegaRoute::ext);
      }
      bool closed = true;
      for (std::size_t x = 0; x < in.size(); ++x) {
        for (std::size_t y = 0; y < in.size(); ++y) {
          if (in[x] && in[y] && (!in[t.lattice.meet(x, y)] || !in[t.lattice.join(x, y)])) {
            closed = false;
          }
        }
      }
      r.add(name + ": omega_" + std::to_string(n) + " pairs closed under meet and join", closed);
    }
    r.add(name + ": torsion lattice semidistributive", is_semidistributive(t.lattice));
    r.add(name + ": omega lattice distributive", is_distributive(omega_lattice_via_simples(a)));
  }
}

void verify_example(Report& r, const RunConfig& cfg) {
  const Algebra a = example_algebra(cfg.field);
  const Catalog c(a, cfg.dim_bound);
  r.add("5 indecomposables", c.size() == 5, std::to_string(c.size()));
  const auto gd = global_dimension(a, 6);
  r.add("global dimension 2", !gd.exceeded && gd.value == 2, std::to_string(gd.value));
  r.add("P2 is injective", isomorphic(a, a.projective(1), a.injective(1)));
  const auto t = enumerate_torsion_pairs(c, limits(cfg));
  r.add("6 torsion pairs", t.pairs.size() == 6, std::to_string(t.pairs.size()));

  auto idx = [&](const Module& m) { return *c.index_of(m); };
  const auto s1 = idx(a.simple(0)), s2 = idx(a.simple(1));
  const auto p1 = idx(a.projective(0)), p2 = idx(a.projective(1)), i1 = idx(a.injective(0));
  auto cls = [&](std::vector<std::size_t> v) { return bitset_of(c.size(), v); };
  const Subcat zero = c.empty(), all = c.all(), f1 = cls({s1}), f2 = cls({s2}),
               add1 = cls({s1, p1}), add2 = cls({s2, p2, i1});

  std::map<Subcat, std::size_t> at;
  for (std::size_t i = 0; i < t.pairs.size(); ++i) at[t.pairs[i].tors] = i;
  const std::vector<Subcat> expected{zero, f1, f2, add1, add2, all};
  bool classes_ok = at.size() == 6;
  for (const auto& e : expected) classes_ok = classes_ok && at.count(e);
  r.add("torsion classes 0, 1, 2, (1,P1), (2,P2,I1), all", classes_ok);
  if (classes_ok) {
    std::set<std::pair<std::size_t, std::size_t>> want{{at[zero], at[f1]},  {at[zero], at[f2]},
                                                       {at[f1], at[add1]},  {at[f2], at[add2]},
                                                       {at[add1], at[all]}, {at[add2], at[all]}};
    std::set<std::pair<std::size_t, std::size_t>> got(t.lattice.covers().begin(),
                                                      t.lattice.covers().end());
    r.add("Hasse diagram matches", want == got);
  }
  auto select = [&](auto pred) {
    std::set<Subcat> s;
    for (const auto& pr : t.pairs) {
      if (pred(pr)) s.insert(pr.tors);
    }
    return s;
  };
  r.add("hereditary: 0, Filt(1), Filt(2), all",
        select([&](const auto& p) { return is_hereditary(c, p); }) ==
            std::set<Subcat>{zero, f1, f2, all});
  r.add("cohereditary: 0, add(1+P1), add(2+I1+P2), all",
        select([&](const auto& p) { return is_cohereditary(c, p); }) ==
            std::set<Subcat>{zero, add1, add2, all});
  r.add("omega: 0, all", select([&](const auto& p) {
                           return is_omega_n(c, p, 1, OmegaRoute::ext);
                         }) == std::set<Subcat>{zero, all});
  r.add("omega_2: 0, Filt(2), add(1+P1), all", select([&](const auto& p) {
                                                 return is_omega_n(c, p, 2, OmegaRoute::ext);
                                               }) == std::set<Subcat>{zero, f2, add1, all});
  json names = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) names.push_back(c.name(i));
  r.data["indecomposables"] = names;
  r.data["torsion_lattice"] = torsion_lattice_to_json(c, t, annotate(c, t));
}

int cmd_verify(const RunConfig& cfg, const std::string& target, std::optional<std::size_t> n,
               const std::string& spec) {
  Report r;
  r.target = target;
  if (target == "thm1") {
    const std::size_t k = n.value_or(5);
    if (k < 2 || k > 8) throw UsageError("thm1 requires 2 <= n <= 8");
    verify_thm1(r, k);
  } else if (target == "thm2") {
    const std::size_t k = n.value_or(3);
    if (k < 1 || k > 6) throw UsageError("thm2 requires 1 <= n <= 6");
    verify_thm2(r, k);
  } else if (target == "prop-main") {
    verify_prop_main(r, cfg, spec);
  } else if (target == "lemma-omega") {
    verify_lemma_omega(r, cfg, spec);
  } else if (target == "example") {
    verify_example(r, cfg);
  } else {
    throw UsageError("unknown verify target " + target);
  }
  return r.emit(cfg);
}

int cmd_tors(const RunConfig& cfg, const std::string& spec) {
  const Algebra a = parse_algebra_spec(spec, cfg.field, cfg.op);
  const Catalog c(a, cfg.dim_bound);
  const auto t = enumerate_torsion_pairs(c, limits(cfg));
  const auto notes = annotate(c, t);
  std::vector<std::size_t> counts(notes.names.size(), 0);
  std::vector<std::string> dot_notes;
  for (const auto& row : notes.flags) {
    std::string s;
    for (std::size_t q = 0; q < row.size(); ++q) {
      counts[q] += row[q];
      if (row[q]) s += (s.empty() ? "" : " ") + notes.names[q];
    }
    dot_notes.push_back(s);
  }
  write_dot(cfg, lattice_to_dot(t.lattice, "torsion", dot_notes));
  if (cfg.json) {
    json j = torsion_lattice_to_json(c, t, notes);
    j["spec"] = spec;
    j["field"] = cfg.field;
    for (std::size_t q = 0; q < notes.names.size(); ++q) j["counts"][notes.names[q]] = counts[q];
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "indecomposables: " << c.size() << "\n"
              << "torsion pairs: " << t.pairs.size() << "\n";
    for (std::size_t q = 0; q < notes.names.size(); ++q) {
      std::cout << notes.names[q] << ": " << counts[q] << "\n";
    }
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion pairs, omega_n-torsion pairs and Catalan lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "prime field characteristic")
      ->check([](const std::string& s) {
        try {
          return is_prime(std::stoull(s)) ? std::string() : "not a prime";
        } catch (...) {
          return std::string("not a number");
        }
      });
  app.add_option("--dim-bound", cfg.dim_bound, "bound on dimension-vector entries")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "time budget in seconds")->check(CLI::PositiveNumber);
  app.add_option("--cap", cfg.cap, "maximum number of torsion classes")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--dot", cfg.dot, "write a DOT Hasse diagram to FILE");
  app.add_flag("--op", cfg.op, "use the opposite poset");

  std::string kind, spec, target;
  std::size_t n = 0;
  std::optional<std::size_t> vn;
  std::size_t omega_n = 1;

  auto* catalan = app.add_subcommand("catalan", "Dyck, Tamari and type A torsion lattices");
  catalan->add_option("kind", kind, "dyck, tamari or typeA")
      ->required()
      ->check(CLI::IsMember({"dyck", "tamari", "typeA"}));
  catalan->add_option("n", n, "size parameter")->required();

  auto* omega = app.add_subcommand("omega", "omega-torsion pairs of an incidence algebra");
  omega->add_option("poset", spec, "int:n or a JSON poset file")->required();
  omega->add_option("--n", omega_n, "the n of omega_n (1 or 2)");

  auto* verify = app.add_subcommand("verify", "run a verification");
  verify->add_option("target", target, "thm1, thm2, prop-main, lemma-omega or example")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "prop-main", "lemma-omega", "example"}));
  verify->add_option("--n", vn, "size parameter");
  verify->add_option("--algebra", spec, "algebra spec for prop-main and lemma-omega");

  auto* tors = app.add_subcommand("tors", "enumerate torsion pairs of an algebra");
  tors->add_option("algebra", spec, "example, int:n, An:n or a JSON algebra file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*catalan) return cmd_catalan(cfg, kind, n);
    if (*omega) return cmd_omega(cfg, spec, omega_n);
    if (*verify) return cmd_verify(cfg, target, vn, spec);
    if (*tors) return cmd_tors(cfg, spec);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotInCatalog& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const EndTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

// liftforge: build, verify and explore matroid lifts from circuit-space
// structure, gain-graph instantiations, derived matroids, dual projections,
// and brute-force conjecture instances.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liftforge/acceptance.hpp"
#include "liftforge/catalog.hpp"
#include "liftforge/derived.hpp"
#include "liftforge/duallift.hpp"
#include "liftforge/errors.hpp"
#include "liftforge/gain.hpp"
#include "liftforge/lift.hpp"
#include "liftforge/matroid.hpp"
#include "liftforge/parallel.hpp"
#include "liftforge/spec_io.hpp"

namespace lf = liftforge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct GlobalOptions {
  int workers = 1;
  bool json_output = false;
  std::uint64_t seed = 0;
  int max_ground = 0;  // 0: leave default
};

void apply_globals(const GlobalOptions& g) {
  lf::set_worker_count(g.workers);
  if (g.max_ground > 0) {
    if (g.max_ground > lf::caps::max_full_ground()) {
      std::cerr << "note: --max-ground can only lower the capacity; keeping "
                << lf::caps::max_full_ground() << "\n";
    } else {
      lf::caps::set_max_full_ground(g.max_ground);
    }
  }
}

void apply_env() {
  if (const char* env = std::getenv("LIFTFORGE_MAX_GROUND")) {
    int v = std::atoi(env);
    if (v > 0 && v <= lf::caps::max_full_ground()) {
      lf::caps::set_max_full_ground(v);
    } else if (v > lf::caps::max_full_ground()) {
      std::cerr << "note: LIFTFORGE_MAX_GROUND only lowers the capacity; keeping "
                << lf::caps::max_full_ground() << "\n";
    }
  }
}

// Builtin circuit-space names for `lift construct --n`.
lf::CircuitSpace resolve_space(const lf::Matroid& m, const std::string& spec) {
  lf::CircuitFamily family = lf::circuit_family(m);
  int c = family.size();
  if (spec == "zero") return lf::circuit_space(std::move(family), lf::rank_zero_matroid(c));
  if (spec == "free") return lf::circuit_space(std::move(family), lf::free_matroid(c));
  if (spec == "rank3") return lf::rank3_circuit_space(m);
  if (spec == "pair-graph") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& circ : family.sets) {
      auto e = circ.elements();
      if (e.size() != 2) {
        throw lf::ParseError("builtin pair-graph needs every circuit to be a pair");
      }
      edges.emplace_back(e[0], e[1]);
    }
    return lf::circuit_space(std::move(family), lf::graphic_matroid(m.size(), std::move(edges)));
  }
  if (spec.rfind("uniform:", 0) == 0) {
    int r = std::atoi(spec.c_str() + 8);
    return lf::circuit_space(std::move(family), lf::uniform_matroid(r, c));
  }
  return lf::circuit_space(std::move(family), lf::load_matroid(spec).matroid);
}

lf::SmallSet resolve_class(const lf::CircuitFamily& family, const std::string& spec) {
  if (spec == "all") return lf::SmallSet::first_n(family.size());
  if (spec == "none") return lf::SmallSet{};
  lf::SmallSet out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    int i = std::stoi(cur);
    if (i < 0 || i >= family.size()) throw lf::ParseError("circuit index out of range: " + cur);
    out.set(i);
    cur.clear();
  };
  for (char ch : spec) {
    if (ch == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else {
      throw lf::ParseError("bad circuit index list '" + spec + "'");
    }
  }
  flush();
  return out;
}

void print_named(const lf::NamedMatroid& nm, bool as_json, bool with_bases = false) {
  if (as_json) {
    json j;
    j["name"] = nm.name;
    j["ground"] = nm.matroid.size();
    j["rank"] = nm.matroid.rank();
    if (nm.matroid.size() <= lf::caps::max_full_ground()) {
      json circuits = json::array();
      for (const auto& c : nm.matroid.circuits()) circuits.push_back(c.to_string());
      j["circuits"] = circuits;
    }
    if (nm.matroid.size() <= 12) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "0x%016llx",
                    static_cast<unsigned long long>(lf::rank_table_hash(nm.matroid)));
      j["table_hash"] = buf;
    }
    if (with_bases) j["bases"] = lf::bases_line(nm.matroid);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << lf::show_matroid(nm);
    if (with_bases) std::cout << lf::bases_line(nm.matroid) << "\n";
  }
}

int report_verdict(const std::string& name, bool pass, const std::string& witness, bool as_json) {
  if (as_json) {
    json j;
    j["check"] = name;
    j["pass"] = pass;
    if (!pass) j["witness"] = witness;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) std::cout << "  witness: " << witness << "\n";
  }
  return pass ? kExitOk : kExitVerificationFailure;
}

void print_lab_report(const lf::LabReport& r, bool as_json, const std::string& json_out) {
  json j;
  j["instance"] = r.instance;
  j["family_is_matroid"] = r.family_is_matroid;
  j["closure_condition"] = r.star_pass;
  j["lift_isomorphic"] = r.lift_isomorphic;
  j["success"] = r.success;
  j["counterexample_candidate"] = r.counterexample_candidate;
  j["witness_count"] = r.witness_count;
  j["notes"] = r.notes;
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << j.dump(2) << "\n";
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.text();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid lift constructions, labeled-graph instantiations, and brute-force verifiers"};
  app.require_subcommand(1);
  apply_env();

  GlobalOptions glob;
  app.add_option("--workers", glob.workers, "parallel workers for enumeration")->capture_default_str();
  app.add_flag("--json", glob.json_output, "emit JSON instead of text");
  app.add_option("--seed", glob.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--max-ground", glob.max_ground, "lower the full-enumeration ground capacity");
  // Runs after parsing, before any subcommand callback.
  app.parse_complete_callback([&] { apply_globals(glob); });

  int exit_code = kExitOk;

  // ---- show / verify ----
  auto* show = app.add_subcommand("show", "print a matroid deterministically");
  {
    auto opt_m = std::make_shared<std::string>();
    auto opt_bases = std::make_shared<bool>(false);
    show->add_option("--m", *opt_m, "matroid spec (file or inline)")->required();
    show->add_flag("--bases", *opt_bases, "also print a bases definition line");
    show->callback([&, opt_m, opt_bases] {
      print_named(lf::load_matroid(*opt_m), glob.json_output, *opt_bases);
    });
  }

  auto* verify = app.add_subcommand("verify", "verification helpers");
  auto* verify_axioms = verify->add_subcommand("axioms", "rank-axiom check");
  {
    auto opt_m = std::make_shared<std::string>();
    verify_axioms->add_option("--m", *opt_m, "matroid spec")->required();
    verify_axioms->callback([&, opt_m] {
      lf::NamedMatroid nm = lf::load_matroid(*opt_m);
      lf::Verdict v = lf::check_rank_axioms(nm.matroid, glob.seed);
      exit_code = report_verdict("rank-axioms(" + nm.name + ")", v.pass, v.witness,
                                 glob.json_output);
    });
  }

  // ---- lift ----
  auto* lift_cmd = app.add_subcommand("lift", "circuit-space lifts");
  {
    auto* construct = lift_cmd->add_subcommand("construct", "build the lifted matroid");
    auto opt_m = std::make_shared<std::string>();
    auto opt_n = std::make_shared<std::string>();
    auto no_check = std::make_shared<bool>(false);
    construct->add_option("--m", *opt_m, "base matroid spec")->required();
    construct->add_option("--n", *opt_n,
                          "circuit-space matroid: spec file, or zero|free|rank3|pair-graph|uniform:<r>")
        ->required();
    construct->add_flag("--no-check", *no_check, "skip the closure-condition check");
    construct->callback([&, opt_m, opt_n, no_check] {
      lf::NamedMatroid nm = lf::load_matroid(*opt_m);
      lf::CircuitSpace ns = resolve_space(nm.matroid, *opt_n);
      lf::Matroid lifted = lf::lift(nm.matroid, ns, !*no_check);
      print_named({nm.name + "^N", lifted}, glob.json_output);
    });

    auto* star = lift_cmd->add_subcommand("verify-star", "check the closure condition");
    auto s_m = std::make_shared<std::string>();
    auto s_n = std::make_shared<std::string>();
    star->add_option("--m", *s_m, "base matroid spec")->required();
    star->add_option("--n", *s_n, "circuit-space matroid spec or builtin")->required();
    star->callback([&, s_m, s_n] {
      lf::NamedMatroid nm = lf::load_matroid(*s_m);
      lf::CircuitSpace ns = resolve_space(nm.matroid, *s_n);
      lf::StarReport rep = lf::satisfies_star(ns);
      exit_code = report_verdict("closure-condition", rep.pass, rep.witness, glob.json_output);
    });

    auto* bry = lift_cmd->add_subcommand("brylawski", "elementary lift from a linear class");
    auto b_m = std::make_shared<std::string>();
    auto b_class = std::make_shared<std::string>();
    bry->add_option("--m", *b_m, "base matroid spec")->required();
    bry->add_option("--class", *b_class, "circuit indices like 0,2,5 or all|none")->required();
    bry->callback([&, b_m, b_class] {
      lf::NamedMatroid nm = lf::load_matroid(*b_m);
      lf::CircuitFamily family = lf::circuit_family(nm.matroid);
      lf::SmallSet cls = resolve_class(family, *b_class);
      lf::Matroid lifted = lf::brylawski(nm.matroid, cls);
      print_named({nm.name + "'", lifted}, glob.json_output);
    });
  }

  // ---- gain ----
  auto* gain = app.add_subcommand("gain", "fully labeled complete graphs");
  auto g_n = std::make_shared<int>(3);
  auto g_group = std::make_shared<std::string>("Z2");
  gain->add_option("--n", *g_n, "vertex count (>= 3)")->capture_default_str();
  gain->add_option("--group", *g_group, "group name (Z2, Z2xZ2, S3, trivial) or Cayley file")
      ->capture_default_str();
  auto make_graph = [g_n, g_group] {
    return lf::GainGraph::complete(*g_n, lf::load_group(*g_group));
  };
  {
    auto* build = gain->add_subcommand("build", "print the labeled graph");
    build->callback([&, make_graph] {
      lf::GainGraph g = make_graph();
      if (glob.json_output) {
        json j;
        j["vertices"] = g.vertex_count();
        j["group"] = g.group().name();
        j["edges"] = json::array();
        for (int i = 0; i < g.edge_count(); ++i) j["edges"].push_back(g.edge_name(i));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "gain graph K_" << g.vertex_count() << " over " << g.group().name() << "\n";
        std::cout << "edges " << g.edge_count() << "\n";
        for (int i = 0; i < g.edge_count(); ++i) {
          std::cout << "  " << i << ": " << g.edge_name(i) << "\n";
        }
      }
    });

    auto* cycles = gain->add_subcommand("cycles", "list cycles with walk values");
    cycles->callback([&, make_graph] {
      lf::GainGraph g = make_graph();
      auto cyc = lf::enumerate_cycles(g);
      json arr = json::array();
      for (const auto& c : cyc) {
        auto vals = lf::phi_values(g, c);
        if (glob.json_output) {
          json jc;
          jc["edges"] = c.edges.to_string();
          jc["balanced"] = lf::is_balanced(g, c);
          json names = json::array();
          for (int v : vals) names.push_back(g.group().element_name(v));
          jc["values"] = names;
          arr.push_back(jc);
        } else {
          std::cout << c.edges.to_string() << (lf::is_balanced(g, c) ? " balanced " : " unbalanced ");
          for (int v : vals) std::cout << g.group().element_name(v) << " ";
          std::cout << "\n";
        }
      }
      if (glob.json_output) {
        json j;
        j["cycles"] = arr;
        j["count"] = cyc.size();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "cycles " << cyc.size() << "\n";
      }
    });

    auto* lg = gain->add_subcommand("lg", "the elementary lift of the balanced cycles");
    lg->callback([&, make_graph] {
      lf::GainGraph g = make_graph();
      lf::Matroid m = lf::lg_matroid(g);
      print_named({m.label(), m}, glob.json_output);
    });

    auto* pglift = gain->add_subcommand("pglift", "rank-i labeled lift via projective truncation");
    auto p = std::make_shared<int>(2);
    auto jj = std::make_shared<int>(2);
    auto ii = std::make_shared<int>(1);
    pglift->add_option("--p", *p, "prime")->capture_default_str();
    pglift->add_option("--j", *jj, "label-group exponent (group is Z_p^j)")->capture_default_str();
    pglift->add_option("--i", *ii, "lift rank, 1 <= i <= j")->capture_default_str();
    pglift->callback([&, p, jj, ii, g_n] {
      lf::PgLift pg = lf::pg_truncation_lift(*g_n, *p, *jj, *ii);
      print_named({pg.lifted.label(), pg.lifted}, glob.json_output);
    });

    auto* diagnose = gain->add_subcommand("diagnose", "label-class diagnostics for a lift");
    auto d_m = std::make_shared<std::string>("lg");
    diagnose->add_option("--m", *d_m, "lift spec: lg | pglift:<i> | matroid spec file")
        ->capture_default_str();
    diagnose->callback([&, d_m, make_graph, g_n] {
      lf::GainGraph g = make_graph();
      lf::Matroid m;
      if (*d_m == "lg") {
        m = lf::lg_matroid(g);
      } else if (d_m->rfind("pglift:", 0) == 0) {
        const auto& orders = g.group().cyclic_orders();
        if (orders.empty()) throw lf::ParseError("pglift diagnostics need an abelian p-group");
        int i = std::atoi(d_m->c_str() + 7);
        m = lf::pg_truncation_lift(*g_n, orders[0], static_cast<int>(orders.size()), i).lifted;
      } else {
        m = lf::load_matroid(*d_m).matroid;
      }
      lf::Verdict member = lf::class_membership(m, g);
      if (!member.pass) {
        exit_code = report_verdict("labeling-respect", false, member.witness, glob.json_output);
        return;
      }
      lf::TildeReport rep = lf::tilde_relation(m, g);
      json j;
      j["labeling_respect"] = true;
      json classes = json::array();
      for (const auto& cl : rep.classes) {
        json names = json::array();
        for (int a : cl) names.push_back(g.group().element_name(a));
        classes.push_back(names);
      }
      j["classes"] = classes;
      j["per_label_facts"] = rep.local.pass;
      j["generated_closures"] = rep.generated.pass;
      j["equivalence"] = rep.equivalence.pass;
      j["class_rank"] = rep.class_rank.pass;
      j["class_subgroup"] = rep.subgroup.pass;
      if (glob.json_output) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "labeling-respect: PASS\n";
        std::cout << "label classes:";
        for (const auto& cl : rep.classes) {
          std::cout << " {";
          for (size_t i = 0; i < cl.size(); ++i) {
            std::cout << (i ? "," : "") << g.group().element_name(cl[i]);
          }
          std::cout << "}";
        }
        std::cout << "\n";
        auto line = [&](const std::string& name, const lf::Verdict& v) {
          std::cout << name << ": " << (v.pass ? "PASS" : "FAIL " + v.witness) << "\n";
        };
        line("per-label facts", rep.local);
        line("generated closures", rep.generated);
        line("equivalence", rep.equivalence);
        line("class rank", rep.class_rank);
        line("class subgroup", rep.subgroup);
      }
      if (!rep.pass()) exit_code = kExitVerificationFailure;
    });
  }

  // ---- derived ----
  auto* derived_cmd = app.add_subcommand("derived", "derived matroids of representations");
  auto d_rep = std::make_shared<std::string>();
  derived_cmd->add_option("--rep", *d_rep, "linear matroid spec (the representation)")->required();
  {
    auto* compute = derived_cmd->add_subcommand("compute", "the derived matroid");
    compute->callback([&, d_rep] {
      lf::Representation rep = lf::load_representation(*d_rep);
      lf::CircuitSpace ns = lf::derived_circuit_space(rep);
      print_named({"derived", ns.n}, glob.json_output);
    });
    auto* free_lift = derived_cmd->add_subcommand("prop62", "lift by the derived matroid (free)");
    free_lift->callback([&, d_rep] {
      lf::Representation rep = lf::load_representation(*d_rep);
      lf::Matroid lifted = lf::derived_free_lift(rep);
      print_named({"derived-lift", lifted}, glob.json_output);
    });
    auto* trunc = derived_cmd->add_subcommand("trunc-n", "rank-k truncation of the derived matroid");
    auto kk = std::make_shared<int>(1);
    trunc->add_option("--k", *kk, "target rank")->required();
    trunc->callback([&, d_rep, kk] {
      lf::Representation rep = lf::load_representation(*d_rep);
      lf::CircuitSpace ns = lf::truncated_derived_space(rep, *kk);
      print_named({"derived-trunc", ns.n}, glob.json_output);
    });
  }

  // ---- project ----
  auto* project_cmd = app.add_subcommand("project", "hyperplane-space projections");
  auto p_k = std::make_shared<std::string>();
  auto p_n = std::make_shared<std::string>();
  project_cmd->add_option("--k", *p_k, "base matroid spec")->required();
  project_cmd->add_option("--n", *p_n, "hyperplane-space matroid spec or zero|free|uniform:<r>");
  auto resolve_hspace = [p_k, p_n] {
    lf::NamedMatroid nk = lf::load_matroid(*p_k);
    auto hyps = lf::hyperplanes(nk.matroid);
    int h = static_cast<int>(hyps.size());
    lf::Matroid n;
    if (p_n->empty()) throw lf::ParseError("--n is required");
    if (*p_n == "zero") {
      n = lf::rank_zero_matroid(h);
    } else if (*p_n == "free") {
      n = lf::free_matroid(h);
    } else if (p_n->rfind("uniform:", 0) == 0) {
      n = lf::uniform_matroid(std::atoi(p_n->c_str() + 8), h);
    } else {
      n = lf::load_matroid(*p_n).matroid;
    }
    return lf::hyperplane_space(nk.matroid, std::move(n));
  };
  {
    auto* construct = project_cmd->add_subcommand("construct", "build the projection");
    auto no_check = std::make_shared<bool>(false);
    construct->add_flag("--no-check", *no_check, "skip the dual closure-condition check");
    construct->callback([&, resolve_hspace, no_check] {
      lf::HyperplaneSpace hs = resolve_hspace();
      lf::Matroid projected = lf::project(hs, !*no_check);
      print_named({"projection", projected}, glob.json_output);
    });
    auto* star = project_cmd->add_subcommand("verify-star", "check the dual closure condition");
    star->callback([&, resolve_hspace] {
      lf::StarReport rep = lf::satisfies_dual_star(resolve_hspace());
      exit_code = report_verdict("dual-closure-condition", rep.pass, rep.witness, glob.json_output);
    });
    auto* bridge = project_cmd->add_subcommand("bridge", "compare with the dualized lift route");
    bridge->callback([&, resolve_hspace] {
      lf::Verdict v = lf::duality_bridge(resolve_hspace());
      exit_code = report_verdict("duality-bridge", v.pass, v.witness, glob.json_output);
    });
  }

  // ---- lab ----
  auto* lab = app.add_subcommand("lab", "brute-force conjecture instances");
  auto json_out = std::make_shared<std::string>();
  lab->add_option("--json-out", *json_out, "also write the report to a JSON file");
  auto allow6 = std::make_shared<bool>(false);
  lab->add_flag("--allow-ground-6", *allow6, "raise the instance ground limit from 5 to 6");
  {
    auto* c72 = lab->add_subcommand("c72", "search all spaces on the circuits of m");
    auto m72 = std::make_shared<std::string>(), k72 = std::make_shared<std::string>();
    c72->add_option("--m", *m72)->required();
    c72->add_option("--k", *k72)->required();
    c72->callback([&, m72, k72, json_out] {
      lf::LabReport r = lf::conjecture72_search(lf::load_matroid(*m72).matroid,
                                                lf::load_matroid(*k72).matroid);
      print_lab_report(r, glob.json_output, *json_out);
      if (!r.success) exit_code = kExitVerificationFailure;
    });
    auto* c73 = lab->add_subcommand("c73", "build the predicted space for a lift k of m");
    auto m73 = std::make_shared<std::string>(), k73 = std::make_shared<std::string>();
    c73->add_option("--m", *m73)->required();
    c73->add_option("--k", *k73)->required();
    c73->callback([&, m73, k73, json_out, allow6] {
      lf::LabReport r = lf::conjecture73_family(lf::load_matroid(*m73).matroid,
                                                lf::load_matroid(*k73).matroid, *allow6 ? 6 : 5);
      print_lab_report(r, glob.json_output, *json_out);
      if (!r.success) exit_code = kExitVerificationFailure;
    });
    auto* c82 = lab->add_subcommand("dual-c82", "hyperplane-side instance via duality");
    auto k82 = std::make_shared<std::string>(), m82 = std::make_shared<std::string>();
    c82->add_option("--k", *k82)->required();
    c82->add_option("--m", *m82)->required();
    c82->callback([&, k82, m82, json_out, allow6] {
      lf::LabReport r = lf::dual_projection_family(lf::load_matroid(*k82).matroid,
                                                   lf::load_matroid(*m82).matroid, *allow6 ? 6 : 5);
      print_lab_report(r, glob.json_output, *json_out);
      if (!r.success) exit_code = kExitVerificationFailure;
    });
  }

  // ---- accept ----
  auto* accept = app.add_subcommand("accept", "run the acceptance suite");
  {
    auto filter = std::make_shared<std::string>();
    auto timings = std::make_shared<bool>(false);
    accept->add_option("--filter", *filter, "run only criteria whose name contains this");
    accept->add_flag("--timings", *timings, "append wall-clock timings (non-deterministic output)");
    accept->callback([&, filter, timings] {
      auto results = lf::run_acceptance(*filter);
      bool all = true;
      if (glob.json_output) {
        json arr = json::array();
        for (const auto& r : results) {
          json j;
          j["id"] = r.id;
          j["name"] = r.name;
          j["pass"] = r.pass;
          j["detail"] = r.detail;
          if (*timings) j["seconds"] = r.seconds;
          arr.push_back(j);
          all = all && r.pass;
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& r : results) {
          std::printf("[%2d] %-4s %-26s %s", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                      r.detail.c_str());
          if (*timings) std::printf("  (%.2fs)", r.seconds);
          std::printf("\n");
          all = all && r.pass;
        }
        std::printf("%s\n", all ? "acceptance: ALL PASS" : "acceptance: FAILURES");
      }
      if (results.empty() || !all) exit_code = kExitVerificationFailure;
    });
  }

  // Let parent-level options (--rep, --k, --n, --group, ...) appear after the
  // nested verb, e.g. `derived compute --rep file`.
  for (CLI::App* parent : {lift_cmd, gain, derived_cmd, project_cmd, lab, verify}) {
    for (CLI::App* child : parent->get_subcommands([](CLI::App*) { return true; })) {
      child->fallthrough();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const lf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lf::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lf::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const lf::ConstructionError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return exit_code;
}

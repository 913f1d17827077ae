// Acceptance run: one PASS/FAIL/SKIP line per criterion, exact comparisons only.
// Exit status is nonzero iff some criterion failed.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include "leech/leech_build.hpp"

using namespace leech;

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && status != Status::Fail) {
      status = Status::Fail;
      detail = what;
    }
  }
};

struct Context {
  std::vector<GlueData> glue;
  std::map<std::string, NiemeierLattice> lattices;
  EnumOptions opts;
  bool slow = false;
  std::string deephole_file;

  const NiemeierLattice& get(const std::string& label) {
    auto it = lattices.find(label);
    if (it == lattices.end()) it = lattices.emplace(label, assemble_niemeier(find_glue(glue, label), opts)).first;
    return it->second;
  }
};

const std::vector<std::string> kSweepLabels{"A24", "D24", "D16E8", "E8^3", "A1^24"};

std::vector<std::size_t> sweep_indices(const NiemeierLattice& n, bool slow) {
  std::vector<std::size_t> idx;
  if (n.label() == "A1^24" && !slow) {
    // 32 codewords spread over the sorted code by a stride coprime to 4096.
    for (std::size_t k = 0; k < 32; ++k) idx.push_back((k * 127) % n.codewords().size());
  } else {
    idx.resize(n.codewords().size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
  }
  return idx;
}

Rat pair26(const LatticeDesc& l, const HypVector& x, const HypVector& y) {
  return bilinear(x.coordinates(), to_rational(l.gram()), y.coordinates());
}

Outcome c1_assembly(Context& ctx) {
  Outcome o;
  for (const auto& g : ctx.glue) {
    const auto& n = ctx.get(g.label);
    std::set<Int> hs;
    for (const auto& t : g.components) hs.insert(coxeter_number(t, CoxeterMode::RootCount));
    o.require(hs.size() == 1, g.label + ": component Coxeter numbers differ");
    const Int h = *hs.begin();
    o.require(n.lattice().is_even(), g.label + ": not even");
    o.require(abs(determinant(n.gram())) == 1, g.label + ": |det| != 1");
    o.require(n.gram().rows() == 24, g.label + ": rank != 24");
    auto roots = short_vectors(n.lattice(), Int(2), ctx.opts);
    o.require(Int(static_cast<unsigned long>(roots.size())) == 24 * h, g.label + ": root count != 24h");
  }
  if (o.status == Status::Pass) o.detail = std::to_string(ctx.glue.size()) + " types";
  return o;
}

Outcome c2_weyl(Context& ctx) {
  Outcome o;
  for (const auto& g : ctx.glue) {
    const auto& n = ctx.get(g.label);
    RatVector rho_theta;
    for (const auto& t : g.components) {
      RatVector r = weyl_vector_component(t);
      rho_theta.insert(rho_theta.end(), r.begin(), r.end());
    }
    RatVector rho = n.to_n(rho_theta);
    o.require(is_integral(rho), g.label + ": rho not in N");
    if (!is_integral(rho)) continue;
    IntVector r = to_integer(rho);
    const Int& h = n.coxeter();
    o.require(n.lattice().pair(r, r) == -2 * h * (h + 1), g.label + ": <rho, rho> != -2h(h+1)");
  }
  if (o.status == Status::Pass) o.detail = std::to_string(ctx.glue.size()) + " types";
  return o;
}

Outcome c3_coxeter(Context& ctx) {
  Outcome o;
  std::set<ADEType> types;
  for (const auto& g : ctx.glue) types.insert(g.components.begin(), g.components.end());
  for (const auto& t : types) {
    std::set<Int> values;
    for (auto m : {CoxeterMode::RootCount, CoxeterMode::WeylNorm, CoxeterMode::HighestRoot, CoxeterMode::CoxeterElement})
      values.insert(coxeter_number(t, m));
    o.require(values.size() == 1, to_string(t) + ": modes disagree");
  }
  if (o.status == Status::Pass) o.detail = std::to_string(types.size()) + " component types, 4 modes each";
  return o;
}

Outcome c4_theorem_zero(Context& ctx) {
  Outcome o;
  for (const auto& g : ctx.glue) {
    const auto& n = ctx.get(g.label);
    ConstructedLattice c = construct_leech(n, n.codewords().front());
    LeechVerdict v = certify_leech(c.lattice, {false, ctx.opts});
    o.require(v.passed(), g.label + ": " + v.to_json().dump());
  }
  if (o.status == Status::Pass) o.detail = std::to_string(ctx.glue.size()) + " types certified";
  return o;
}

Outcome c5_corollary(Context& ctx) {
  Outcome o;
  for (const auto& g : ctx.glue) {
    const auto& n = ctx.get(g.label);
    ConstructedLattice thm = construct_leech(n, n.codewords().front());
    ConstructedLattice cor = corollary_zero(n);
    o.require(thm.basis == cor.basis, g.label + ": sublattices differ");
    o.require(thm.lattice.gram() == cor.lattice.gram(), g.label + ": forms differ");
  }
  if (o.status == Status::Pass) o.detail = std::to_string(ctx.glue.size()) + " types";
  return o;
}

Outcome c6_sweeps(Context& ctx) {
  Outcome o;
  std::size_t total = 0;
  for (const auto& label : kSweepLabels) {
    const auto& n = ctx.get(label);
    for (std::size_t k : sweep_indices(n, ctx.slow)) {
      ConstructedLattice c = construct_leech(n, n.codewords()[k]);
      LeechVerdict v = certify_leech(c.lattice, {false, ctx.opts});
      o.require(v.passed(), label + " codeword " + std::to_string(k) + ": " + v.to_json().dump());
      ++total;
    }
  }
  if (o.status == Status::Pass)
    o.detail = std::to_string(total) + " lattices certified" + (ctx.slow ? " (full A1^24 sweep)" : " (A1^24 sample of 32)");
  return o;
}

Outcome c7_oracle(Context& ctx) {
  Outcome o;
  std::size_t total = 0;
  for (const auto& label : kSweepLabels) {
    const auto& n = ctx.get(label);
    auto sections = enumerate_section_classes(n, ctx.opts);
    o.require(sections.size() == n.codewords().size(), label + ": section class count != |code|");
    std::set<RatVector> from_sections, from_reps;
    for (const auto& s : sections) from_sections.insert(s.v);
    for (const auto& g : n.codewords()) from_reps.insert(to_rational(canonical_representative(n, g)));
    o.require(from_sections == from_reps, label + ": section projections != {v_gamma}");
    for (std::size_t k : sweep_indices(n, ctx.slow)) {
      ConstructedLattice c = construct_leech(n, n.codewords()[k]);
      OracleAgreement a = check_against_oracle(n, c, sections);
      o.require(a.same_module, label + " codeword " + std::to_string(k) + ": complement module differs");
      o.require(a.same_gram, label + " codeword " + std::to_string(k) + ": complement Gram differs");
      o.require(a.section_found, label + " codeword " + std::to_string(k) + ": v_gamma not a section class");
      ++total;
    }
  }
  if (o.status == Status::Pass) o.detail = std::to_string(total) + " (N, gamma) pairs";
  return o;
}

Outcome c8_walls(Context& ctx) {
  Outcome o;
  for (const auto& g : ctx.glue) {
    const auto& n = ctx.get(g.label);
    const Int& h = n.coxeter();
    for (std::size_t i = 0; i < n.component_count(); ++i) {
      const IntVector& m = n.component(i).m;
      o.require(std::accumulate(m.begin(), m.end(), Int(0)) == h, g.label + ": sum of m != h");
    }
    LatticeDesc l = build_LN(n);
    HypVector w = make_hyp(h + 1, h, n.rho());
    o.require(pair26(l, w, w) == 0, g.label + ": w not isotropic");
    o.require(pair26(l, w, z_vector(24)) == 1, g.label + ": <w, z> != 1");
    for (std::size_t k = 0; k < 24; ++k)
      o.require(pair26(l, w, make_hyp(0, 0, n.simple_root(k))) == 1, g.label + ": <w, r> != 1");
    for (std::size_t i = 0; i < n.component_count(); ++i) {
      IntVector mu = n.highest_root(i);
      for (auto& x : mu) x = -x;
      o.require(pair26(l, w, make_hyp(1, 0, mu)) == 1, g.label + ": <w, theta> != 1");
    }
  }
  if (o.status == Status::Pass) o.detail = std::to_string(ctx.glue.size()) + " types";
  return o;
}

Outcome c9_norm4(Context& ctx) {
  Outcome o;
  const auto& n = ctx.get("D16E8");
  ConstructedLattice c = construct_leech(n, n.codewords().back());
  LeechVerdict v = certify_leech(c.lattice, {true, ctx.opts});
  o.require(v.passed(), "D16E8 output not certified");
  o.require(v.norm4_count == 196560u, "norm-4 count " + std::to_string(v.norm4_count.value_or(0)));
  if (o.status == Status::Pass) o.detail = "D16E8 codeword 1: 196560 vectors of norm 4";
  return o;
}

Outcome c10_deephole(Context& ctx) {
  Outcome o;
  if (!std::filesystem::exists(ctx.deephole_file)) return {Status::Skip, "no deep-hole input at " + ctx.deephole_file};
  DeepHoleInput d = load_deep_hole(ctx.deephole_file);
  DeepHoleReport r = deep_hole_checks(d, ctx.opts);
  o.require(r.input_valid, "input rejected: " + r.input_error);
  o.require(r.distance_sq == Rat(2), "d(c, L)^2 != 2");
  o.require(r.primitive, "hc not primitive");
  o.require(r.xi0.size() == 48, "card Xi_0 = " + std::to_string(r.xi0.size()));
  o.require(r.xi1_count == 4096, "card Xi_1 = " + std::to_string(r.xi1_count));
  o.require(r.msum, "msum identity fails");
  o.require(r.type == parse_label("A1^24"), "type " + format_label(r.type));
  if (o.status == Status::Pass) o.detail = "A1^24: d^2 = 2, hc primitive, Xi_0 = 48, Xi_1 = 4096, msum holds";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  Context ctx;
  ctx.deephole_file = std::string(LEECH_DATA_DIR) + "/deepholes/A1_24.json";
  app.add_flag("--slow", ctx.slow, "sweep all 4096 codewords of A1^24");
  app.add_option("--jobs", ctx.opts.jobs, "enumeration threads");
  app.add_option("--deephole", ctx.deephole_file, "deep-hole input of type A1^24");
  CLI11_PARSE(app, argc, argv);

  ctx.glue = load_glue_file(default_glue_path());

  const std::vector<std::pair<std::string, std::function<Outcome(Context&)>>> criteria{
      {"1 Niemeier assembly", c1_assembly},         {"2 Weyl identities", c2_weyl},
      {"3 Coxeter cross-validation", c3_coxeter},   {"4 theorem at gamma = 0", c4_theorem_zero},
      {"5 corollary equivalence", c5_corollary},    {"6 codeword sweeps", c6_sweeps},
      {"7 oracle agreement", c7_oracle},            {"8 m-function and walls", c8_walls},
      {"9 norm-4 count", c9_norm4},                 {"10 deep-hole utility", c10_deephole},
  };
  bool failed = false;
  for (const auto& [name, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run(ctx);
    } catch (const std::exception& e) {
      o = {Status::Fail, e.what()};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "SKIP";
    std::cout << "[" << tag << "] criterion " << name << ": " << o.detail << " (" << std::fixed
              << std::setprecision(2) << dt << " s)\n";
    failed = failed || o.status == Status::Fail;
  }
  return failed ? 1 : 0;
}

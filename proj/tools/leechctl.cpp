// leechctl: assemble Niemeier lattices, build Leech lattices from their glue
// codewords, certify and export them.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage or I/O error.
// Reports go to stdout and are deterministic; timings go to stderr.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "leech/leech_build.hpp"

using namespace leech;
using codec::Json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  Json& inputs() { return doc_["inputs"]; }
  Json& results() { return doc_["results"]; }

  void check(const std::string& module, const std::string& name, bool passed, const std::string& detail = {}) {
    Json c;
    c["module"] = module;
    c["check"] = name;
    c["passed"] = passed;
    if (!detail.empty()) c["detail"] = detail;
    doc_["checks"].push_back(c);
    ok_ = ok_ && passed;
  }

  void failure(const InvariantError& e) { check(e.module(), e.check(), false, e.what()); }
  void output(const std::string& path) { doc_["outputs"].push_back(path); }

  int emit() {
    if (!doc_.contains("checks")) doc_["checks"] = Json::array();
    doc_["passed"] = ok_;
    std::cout << doc_.dump(2) << "\n";
    return ok_ ? 0 : kExitFail;
  }

 private:
  Json doc_;
  bool ok_ = true;
};

class Stopwatch {
 public:
  explicit Stopwatch(std::string what) : what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "[time] " << what_ << ": " << dt << " s\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

struct Options {
  std::string glue;
  std::string label;
  std::string codeword = "0";
  std::string format = "json";
  std::string out;
  std::string file;
  bool oracle = false;
  bool corollary = false;
  bool deep = false;
  bool deephole = false;
  bool positive = false;
  unsigned jobs = 1;

  EnumOptions enumeration() const { return {jobs}; }
};

std::vector<GlueData> load_glue(const Options& o) {
  try {
    return load_glue_file(o.glue.empty() ? default_glue_path() : o.glue);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

NiemeierLattice assemble(const Options& o, Report& report) {
  auto all = load_glue(o);
  const GlueData* glue = nullptr;
  try {
    glue = &find_glue(all, o.label);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  report.inputs()["label"] = glue->label;
  Stopwatch t("assemble " + glue->label);
  return assemble_niemeier(*glue, o.enumeration());
}

std::vector<std::size_t> select_codewords(const NiemeierLattice& n, const std::string& selector) {
  const std::size_t count = n.codewords().size();
  if (selector == "all") {
    std::vector<std::size_t> all(count);
    for (std::size_t i = 0; i < count; ++i) all[i] = i;
    return all;
  }
  std::size_t pos = 0;
  unsigned long k = 0;
  try {
    k = std::stoul(selector, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != selector.size() || selector[0] == '-')
    throw UsageError("--codeword expects an index or 'all', got '" + selector + "'");
  if (k >= count)
    throw UsageError("codeword index " + selector + " out of range; " + n.label() + " has " + std::to_string(count) +
                     " codewords");
  return {k};
}

std::string file_stem(const std::string& label) {
  std::string s = label;
  std::replace(s.begin(), s.end(), '^', '_');
  return s;
}

void write_output(const std::string& path, const std::string& text, Report& report) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("cannot write " + path);
  report.output(path);
}

std::string render(const Json& doc) { return doc.dump(1) + "\n"; }

Json codeword_json(const Codeword& c) {
  Json j = Json::array();
  for (const auto& cls : c.classes) j.push_back(codec::encode(cls));
  return j;
}

int cmd_list(const Options& o) {
  Report report("list");
  report.inputs()["glue"] = o.glue.empty() ? "bundled" : o.glue;
  for (const auto& g : load_glue(o)) {
    Json entry;
    entry["label"] = g.label;
    Json comps = Json::array();
    for (const auto& t : g.components) comps.push_back(to_string(t));
    entry["components"] = comps;
    entry["coxeter"] = codec::encode(root_component(g.components.front()).coxeter);
    entry["glue_generators"] = g.glue.size();
    report.results().push_back(entry);
  }
  return report.emit();
}

int cmd_construct(const Options& o) {
  Report report("construct");
  report.inputs()["codeword"] = o.codeword;
  report.inputs()["oracle"] = o.oracle;
  report.inputs()["corollary"] = o.corollary;
  report.inputs()["deep"] = o.deep;
  std::optional<NiemeierLattice> n;
  try {
    n.emplace(assemble(o, report));
    report.check("niemeier", "assemble", true);
  } catch (const InvariantError& e) {
    report.failure(e);
    return report.emit();
  }
  auto selected = select_codewords(*n, o.codeword);
  if (!o.out.empty()) std::filesystem::create_directories(o.out);

  std::vector<HypVector> sections;
  if (o.oracle) {
    try {
      Stopwatch t("section classes");
      sections = enumerate_section_classes(*n, o.enumeration());
      report.check("hyperbolic", "section-classes", true, std::to_string(sections.size()) + " classes");
    } catch (const InvariantError& e) {
      report.failure(e);
    }
  }
  if (o.corollary) {
    try {
      Stopwatch t("corollary");
      corollary_zero(*n);
      report.check("leech-build", "corollary-equivalence", true);
    } catch (const InvariantError& e) {
      report.failure(e);
    }
  }

  for (std::size_t k : selected) {
    const Codeword& gamma = n->codewords()[k];
    Json entry;
    entry["codeword_index"] = k;
    entry["gamma"] = codeword_json(gamma);
    const std::string tag = "codeword " + std::to_string(k);
    try {
      Stopwatch t("construct and certify " + tag);
      ConstructedLattice c = construct_leech(*n, gamma);
      entry["n_gamma"] = codec::encode(c.n_gamma);
      entry["a_gamma"] = codec::encode(c.a_gamma);
      entry["index"] = codec::encode(c.index);
      LeechVerdict v = certify_leech(c.lattice, {o.deep, o.enumeration()});
      entry["verdict"] = v.to_json();
      report.check("leech-build", "certify " + tag, v.passed());
      if (o.deep) report.check("leech-build", "norm4-count " + tag, v.norm4_count == 196560u);
      if (o.oracle) {
        OracleAgreement a = check_against_oracle(*n, c, sections);
        entry["oracle"] = {{"same_module", a.same_module}, {"same_gram", a.same_gram}, {"section_found", a.section_found}};
        report.check("hyperbolic", "oracle " + tag, a.passed());
      }
      if (!o.out.empty()) {
        std::string path = o.out + "/" + file_stem(n->label()) + ".g" + std::to_string(k) + (o.format == "gap" ? ".g" : ".json");
        std::string text = o.format == "gap"
                               ? export_lattice_gap(o.positive ? negate(c.lattice) : c.lattice,
                                                    n->label() + "/" + std::to_string(k))
                               : render(export_constructed(c, o.positive));
        write_output(path, text, report);
      }
    } catch (const InvariantError& e) {
      report.failure(e);
    }
    report.results().push_back(entry);
  }
  return report.emit();
}

int cmd_verify(const Options& o) {
  Report report("verify");
  report.inputs()["file"] = o.file;
  report.inputs()["deep"] = o.deep;
  report.inputs()["deephole"] = o.deephole;
  Json doc;
  try {
    doc = codec::read_file(o.file);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (o.deephole) {
    DeepHoleInput d;
    try {
      d = parse_deep_hole(doc);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    Stopwatch t("deep-hole checks");
    DeepHoleReport r = deep_hole_checks(d, o.enumeration());
    report.results() = r.to_json();
    report.check("hyperbolic", "deep-hole-input", r.input_valid, r.input_error);
    report.check("hyperbolic", "distance", r.deep_hole,
                 "d(c, L)^2 = " + (r.distance_sq ? to_string(*r.distance_sq) : std::string(">2")));
    if (r.deep_hole) {
      report.check("hyperbolic", "affine-components", r.affine_components);
      report.check("hyperbolic", "primitive", r.primitive);
      report.check("hyperbolic", "msum", r.msum);
      report.check("hyperbolic", "thetais", r.thetais);
      if (r.declared_type_matches) report.check("hyperbolic", "declared-type", *r.declared_type_matches);
      if (r.declared_coxeter_matches) report.check("hyperbolic", "declared-coxeter", *r.declared_coxeter_matches);
    }
    return report.emit();
  }
  std::optional<LatticeDesc> l;
  try {
    l.emplace(import_lattice(doc));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (l->signature() == Signature::PositiveDefinite) l.emplace(negate(*l));
  Stopwatch t("certify");
  LeechVerdict v = certify_leech(*l, {o.deep, o.enumeration()});
  report.results() = v.to_json();
  report.check("leech-build", "rank", v.rank_ok(), std::to_string(v.rank));
  report.check("leech-build", "negative-definite", v.negative_definite);
  report.check("leech-build", "even", v.even);
  report.check("leech-build", "unimodular", v.unimodular);
  report.check("leech-build", "rootless", v.rootless, std::to_string(v.root_count) + " roots");
  if (o.deep) report.check("leech-build", "norm4-count", v.norm4_count == 196560u);
  return report.emit();
}

int cmd_export(const Options& o) {
  Report report("export");
  report.inputs()["codeword"] = o.codeword;
  report.inputs()["deephole"] = o.deephole;
  report.inputs()["format"] = o.format;
  std::optional<NiemeierLattice> n;
  try {
    n.emplace(assemble(o, report));
    report.check("niemeier", "assemble", true);
    std::string text;
    if (o.deephole) {
      std::size_t k = select_codewords(*n, o.codeword).front();
      ConstructedLattice c = construct_leech(*n, n->codewords()[k]);
      text = render(encode_deep_hole(deep_hole_from_construction(*n, c)));
    } else if (o.codeword != "none") {
      auto selected = select_codewords(*n, o.codeword);
      if (selected.size() != 1) throw UsageError("export writes one lattice; pick a single codeword");
      ConstructedLattice c = construct_leech(*n, n->codewords()[selected.front()]);
      LeechVerdict v = certify_leech(c.lattice, {false, o.enumeration()});
      report.check("leech-build", "certify", v.passed());
      text = o.format == "gap" ? export_lattice_gap(o.positive ? negate(c.lattice) : c.lattice,
                                                    n->label() + "/" + std::to_string(selected.front()))
                               : render(export_constructed(c, o.positive));
    } else {
      text = o.format == "gap" ? export_niemeier_gap(*n) : render(export_niemeier(*n));
    }
    write_output(o.out, text, report);
  } catch (const InvariantError& e) {
    report.failure(e);
  }
  return report.emit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Niemeier lattices and the Leech lattice, in exact arithmetic"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--glue", o.glue, "glue data file (default: bundled)");
  app.add_option("--jobs", o.jobs, "worker threads for enumeration")->check(CLI::Range(1u, 256u));

  auto* list = app.add_subcommand("list", "list the bundled Niemeier types");

  auto* construct = app.add_subcommand("construct", "build and certify Lambda(gamma) for codewords of N");
  construct->add_option("label", o.label, "Niemeier type, e.g. A1^24")->required();
  construct->add_option("--codeword", o.codeword, "codeword index or 'all'");
  construct->add_flag("--oracle", o.oracle, "cross-check against the hyperbolic oracle");
  construct->add_flag("--corollary", o.corollary, "check the gamma = 0 congruence form");
  construct->add_flag("--deep", o.deep, "count vectors of norm 4");
  construct->add_option("--out", o.out, "directory for exported lattices");
  construct->add_option("--format", o.format, "export format")->check(CLI::IsMember({"json", "gap"}));
  construct->add_flag("--positive", o.positive, "export the positive-definite form");

  auto* verify = app.add_subcommand("verify", "certify a lattice file or check a deep-hole file");
  verify->add_option("file", o.file, "input file")->required();
  verify->add_flag("--deep", o.deep, "count vectors of norm 4");
  verify->add_flag("--deephole", o.deephole, "the file is a deep-hole input");

  auto* exp = app.add_subcommand("export", "write N, Lambda(gamma) or a deep hole to a file");
  exp->add_option("label", o.label, "Niemeier type")->required();
  exp->add_option("--codeword", o.codeword, "codeword index, or 'none' for N itself")->default_val("none");
  exp->add_flag("--deephole", o.deephole, "write the deep hole of Lambda(gamma) attached to f_N");
  exp->add_option("--out", o.out, "output file")->required();
  exp->add_option("--format", o.format, "json or gap")->check(CLI::IsMember({"json", "gap"}));
  exp->add_flag("--positive", o.positive, "export the positive-definite form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    if (*list) return cmd_list(o);
    if (*construct) return cmd_construct(o);
    if (*verify) return cmd_verify(o);
    if (*exp) {
      if (o.deephole && o.codeword == "none") o.codeword = "0";
      return cmd_export(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "leechctl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "leechctl: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

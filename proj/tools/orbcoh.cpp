// orbcoh: command-line front end for orbifold cohomology computations.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbcoh/error.hpp"
#include "orbcoh/io.hpp"

namespace {

using orbcoh::Error;
using orbcoh::ErrorKind;
using orbcoh::io::Json;

constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::ClosureCapExceeded:
    case ErrorKind::EnumerationCapExceeded: return kExitCap;
    default: return kExitValidation;
  }
}

struct Options {
  std::string format = "table";
  std::size_t cap = orbcoh::group::kDefaultClosureCap;
  std::string model;
  std::string file;
  std::size_t k = 1;
  bool product_one = false;
  bool verify = false;
  bool oracle = false;
  int d1 = 0, d2 = 0;
  int r = 0, a = 0, delta = 0;
  unsigned genus = 0, rank = 1;
  std::vector<std::string> marks;
  std::string c = "0";
  std::string tuple;
};

class Runner {
 public:
  explicit Runner(const Options& opt) : opt_(opt) {}

  bool json() const { return opt_.format == "json"; }

  void emit(const Json& j, const std::string& text) {
    if (json())
      out_ << j.dump(2) << "\n";
    else
      out_ << text;
  }

  std::string output() const { return out_.str(); }
  int status = 0;

  orbcoh::group::FiniteMatrixGroup group() const { return orbcoh::io::load_group(opt_.file, opt_.cap); }

  void require_model(std::initializer_list<const char*> allowed) const {
    for (const char* m : allowed)
      if (opt_.model == m) return;
    std::string list;
    for (const char* m : allowed) list += (list.empty() ? "" : "|") + std::string(m);
    throw Error(ErrorKind::ValidationError, "--model must be one of " + list);
  }

  void sectors() {
    const orbcoh::sectors::SectorAnalysis analysis(group());
    if (opt_.k <= 1 && !opt_.product_one)
      emit(orbcoh::io::sectors_json(analysis), orbcoh::io::sectors_text(analysis));
    else
      emit(orbcoh::io::multi_sectors_json(analysis, opt_.k, opt_.product_one),
           orbcoh::io::multi_sectors_text(analysis, opt_.k, opt_.product_one));
  }

  void table(const orbcoh::models::CohomologyTable& t) { emit(orbcoh::io::to_json(t), orbcoh::io::to_text(t)); }

  void betti() {
    require_model({"torus"});
    table(orbcoh::models::betti_torus(orbcoh::io::load_torus(opt_.file), opt_.cap));
  }

  void hodge() {
    require_model({"linear"});
    table(orbcoh::models::hodge_linear(orbcoh::sectors::SectorAnalysis(group())));
  }

  void cohomology() {
    require_model({"point"});
    table(orbcoh::models::cohomology_point(group()));
  }

  orbcoh::ring::GradedRing build_ring(std::optional<orbcoh::group::FiniteMatrixGroup>& g) const {
    if (opt_.model == "wp") return orbcoh::ring::ring_wp(opt_.d1, opt_.d2);
    g.emplace(group());
    if (opt_.model == "point") return orbcoh::ring::ring_point(*g);
    return orbcoh::ring::ring_linear(orbcoh::sectors::SectorAnalysis(*g));
  }

  void ring() {
    require_model({"point", "linear", "wp"});
    std::optional<orbcoh::group::FiniteMatrixGroup> g;
    const auto ring = build_ring(g);
    Json j;
    j["ring"] = orbcoh::io::to_json(ring);
    std::string text = orbcoh::io::to_text(ring);
    if (opt_.verify) {
      const auto report = orbcoh::ring::verify_ring(ring);
      j["verify"] = orbcoh::io::to_json(report);
      text += orbcoh::io::to_text(report);
      if (!report.passed()) status = kExitVerify;
    }
    if (opt_.oracle) {
      if (opt_.model != "point") throw Error(ErrorKind::ValidationError, "--oracle applies to --model point");
      const auto mismatch = orbcoh::ring::compare_structure(ring, orbcoh::ring::center_oracle(*g));
      j["oracle"] = mismatch ? "mismatch: " + *mismatch : std::string("exact");
      text += "oracle match: " + (mismatch ? "MISMATCH (" + *mismatch + ")" : std::string("exact")) + "\n";
      if (mismatch) status = kExitVerify;
    }
    emit(j, text);
  }

  void pairing() {
    require_model({"point", "wp"});
    std::optional<orbcoh::group::FiniteMatrixGroup> g;
    const auto ring = build_ring(g);
    emit(orbcoh::io::pairing_json(ring), orbcoh::io::pairing_text(ring));
  }

  void catalog_bv() { table(orbcoh::models::catalog_bv(opt_.r, opt_.a, opt_.delta)); }
  void catalog_wp() { table(orbcoh::models::catalog_wp(opt_.d1, opt_.d2)); }

  void orbicurve_chi() {
    orbcoh::orbicurve::OrbiBundleData data;
    data.genus = opt_.genus;
    data.rank = opt_.rank;
    for (const auto& m : opt_.marks) data.marks.push_back(orbcoh::orbicurve::parse_mark(m));
    data.c = orbcoh::parse_rational(opt_.c);
    const auto cls = orbcoh::orbicurve::classify_validate(data);
    const auto chi = orbcoh::orbicurve::euler_characteristic(data);
    Json j;
    j["valid"] = cls.valid;
    j["desing_chern"] = orbcoh::to_string(cls.desingularized_chern);
    j["euler_characteristic"] = orbcoh::to_string(chi);
    emit(j, "valid\nc1(|E|) = " + orbcoh::to_string(cls.desingularized_chern) + "\nchi = " + orbcoh::to_string(chi) + "\n");
  }

  void orbicurve_glue() {
    orbcoh::group::Tuple quad;
    std::stringstream ss(opt_.tuple);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
        quad.push_back(static_cast<orbcoh::group::Index>(v));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "--tuple: malformed index \"" + part + "\"");
      }
    }
    const orbcoh::sectors::SectorAnalysis analysis(group());
    const auto report = orbcoh::orbicurve::glue_index_check(analysis, quad);
    emit(orbcoh::io::to_json(report), orbcoh::io::to_text(report));
    if (!report.passed()) status = kExitVerify;
  }

 private:
  const Options& opt_;
  std::ostringstream out_;
};

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("ORBCOH_CAP")) {
    try {
      opt.cap = std::stoull(env);
    } catch (const std::logic_error&) {
      std::cerr << "error: ORBCOH_CAP must be a positive integer\n";
      return kExitParse;
    }
  }

  CLI::App app{"Orbifold cohomology of finite-group quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cap", opt.cap, "Group closure cap")->check(CLI::PositiveNumber);

  std::function<void(Runner&)> action;
  auto bind = [&](CLI::App* sub, void (Runner::*fn)()) { sub->callback([&, fn] { action = [fn](Runner& r) { (r.*fn)(); }; }); };

  auto* sectors = app.add_subcommand("sectors", "Twisted sectors or k-multi-sectors of a linear action");
  sectors->add_option("file", opt.file, "Group file")->required();
  sectors->add_option("--k", opt.k, "Tuple arity")->check(CLI::PositiveNumber);
  sectors->add_flag("--product-one", opt.product_one, "Only tuples with product 1");
  bind(sectors, &Runner::sectors);

  auto* betti = app.add_subcommand("betti", "Orbifold Betti numbers of a torus quotient");
  betti->add_option("--model", opt.model)->required();
  betti->add_option("file", opt.file)->required();
  bind(betti, &Runner::betti);

  auto* hodge = app.add_subcommand("hodge", "Orbifold Hodge numbers of C^n/G");
  hodge->add_option("--model", opt.model)->required();
  hodge->add_option("file", opt.file)->required();
  bind(hodge, &Runner::hodge);

  auto* cohomology = app.add_subcommand("cohomology", "Orbifold cohomology of a point quotient");
  cohomology->add_option("--model", opt.model)->required();
  cohomology->add_option("file", opt.file)->required();
  bind(cohomology, &Runner::cohomology);

  auto* ring = app.add_subcommand("ring", "Orbifold cup-product ring");
  ring->add_option("--model", opt.model)->required();
  ring->add_option("file", opt.file);
  ring->add_option("--d1", opt.d1);
  ring->add_option("--d2", opt.d2);
  ring->add_flag("--verify", opt.verify, "Check the ring axioms");
  ring->add_flag("--oracle", opt.oracle, "Compare with the group-algebra centre");
  bind(ring, &Runner::ring);

  auto* pairing = app.add_subcommand("pairing", "Orbifold Poincare pairing matrix");
  pairing->add_option("--model", opt.model)->required();
  pairing->add_option("file", opt.file);
  pairing->add_option("--d1", opt.d1);
  pairing->add_option("--d2", opt.d2);
  bind(pairing, &Runner::pairing);

  auto* catalog = app.add_subcommand("catalog", "Closed-form catalog families");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  auto* bv = catalog->add_subcommand("bv", "Borcea-Voisin threefold");
  bv->add_option("--r", opt.r)->required();
  bv->add_option("--a", opt.a)->required();
  bv->add_option("--delta", opt.delta)->required();
  bind(bv, &Runner::catalog_bv);
  auto* wp = catalog->add_subcommand("wp", "Weighted projective line");
  wp->add_option("--d1", opt.d1)->required();
  wp->add_option("--d2", opt.d2)->required();
  bind(wp, &Runner::catalog_wp);

  auto* orbicurve = app.add_subcommand("orbicurve", "Orbifold bundles over 2-orbifolds");
  orbicurve->require_subcommand(1);
  orbicurve->fallthrough();
  auto* chi = orbicurve->add_subcommand("chi", "Validate a bundle and compute its Euler characteristic");
  chi->add_option("--genus", opt.genus)->required();
  chi->add_option("--rank", opt.rank)->required();
  chi->add_option("--mark", opt.marks, "m:e1,...,en");
  chi->add_option("--c", opt.c, "First Chern number p/q")->required();
  bind(chi, &Runner::orbicurve_chi);
  auto* glue = orbicurve->add_subcommand("glue", "Check the gluing index identities on a 4-tuple");
  glue->add_option("file", opt.file)->required();
  glue->add_option("--tuple", opt.tuple, "i,j,k,l")->required();
  bind(glue, &Runner::orbicurve_glue);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if ((opt.model == "point" || opt.model == "linear") && opt.file.empty()) {
    std::cerr << "error: --model " << opt.model << " needs a group file\n";
    return kExitParse;
  }

  Runner runner(opt);
  try {
    action(runner);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  std::cout << runner.output();
  return runner.status;
}

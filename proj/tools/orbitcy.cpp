#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbitcy/endoalg.hpp"
#include "orbitcy/geom.hpp"
#include "orbitcy/rigid.hpp"
#include "orbitcy/workbench.hpp"

using namespace orbitcy;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CategorySpec spec_or_usage(const std::string& text) {
  try {
    return parse_spec(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(e.what()) + "\n" + spec_usage());
  }
}

int cmd_catalog() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& name : preset_catalog()) {
    nlohmann::ordered_json e{{"name", name}};
    // Families are templates; show their smallest member.
    std::string sample = name;
    if (name == "A(n,t)") sample = "A(1,1)";
    if (name == "Dfam(n,t)") sample = "Dfam(1,1)";
    if (name == "Dk(k,n)") sample = "Dk(2,2)";
    const CategorySpec s = parse_spec(sample);
    if (sample != name) e["example"] = sample;
    e["grammar"] = s.grammar();
    e["objects"] = OrbitCategory(s).size();
    out.push_back(e);
  }
  std::cout << out.dump(2) << "\n";
  return kPass;
}

int cmd_ar_quiver(const std::string& cat, const std::string& format) {
  const OrbitCategory c(spec_or_usage(cat));
  if (format == "dot")
    std::cout << c.ar_dot();
  else
    std::cout << c.to_json() << "\n";
  return kPass;
}

int cmd_rigids(const std::string& cat) {
  const OrbitCategory c(spec_or_usage(cat));
  const RigidSet rs = indec_rigids(c);
  std::cout << rigid_report_json(c, rs, maximal_rigids(c, rs)) << "\n";
  return rs.symmetric ? kPass : kFail;
}

int cmd_maximal_rigids(const std::string& cat, bool check_ct) {
  const OrbitCategory c(spec_or_usage(cat));
  const RigidSet rs = indec_rigids(c);
  const auto mr = maximal_rigids(c, rs);
  int ct = 0;
  for (const auto& m : mr) {
    std::string line = "[";
    for (std::size_t k = 0; k < m.objects.size(); ++k) line += (k ? ", " : "") + c.label(m.objects[k]);
    line += "]";
    if (check_ct) line += m.cluster_tilting ? " cluster tilting" : " not cluster tilting";
    ct += m.cluster_tilting ? 1 : 0;
    std::cout << line << "\n";
  }
  std::cout << mr.size() << " maximal rigids";
  if (check_ct) std::cout << ", " << (ct == 0 ? std::string("none") : std::to_string(ct)) << " cluster tilting";
  std::cout << "\n";
  return kPass;
}

int cmd_endo(const std::string& cat, int object) {
  const OrbitCategory c(spec_or_usage(cat));
  const RigidSet rs = indec_rigids(c);
  const auto mr = maximal_rigids(c, rs);
  if (object < 0 || object >= static_cast<int>(mr.size()))
    throw UsageError("--object must lie in [0, " + std::to_string(mr.size()) + ")");
  const AlgebraTable a = endo_algebra(c, mr[static_cast<std::size_t>(object)].objects);
  std::cout << presentation_json(present(a)) << "\n";
  return a.associative() ? kPass : kFail;
}

int cmd_verify_tables(const Sweep& s) {
  const auto rows = verify_tables(s);
  std::cout << tables_json(rows) << "\n";
  for (const auto& r : rows)
    if (!r.pass) return kFail;
  return kPass;
}

int cmd_geom(const std::string& cat) {
  const OrbitCategory c(spec_or_usage(cat));
  CrossValidation cv;
  try {
    cv = cross_validate(c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& l : cv.lines) std::cout << l << "\n";
  std::cout << (cv.pass ? "geometric model agrees" : "geometric model DISAGREES") << "\n";
  return cv.pass ? kPass : kFail;
}

int cmd_compare(const std::string& left, const std::string& right) {
  const OrbitCategory c(spec_or_usage(left)), d(spec_or_usage(right));
  const ComparisonReport r = compare(c, d);
  std::cout << comparison_json(c, d, r) << "\n";
  return r.supports_equivalence ? kPass : kFail;
}

int cmd_gorenstein() {
  const GorensteinDemo g = gorenstein_demo();
  for (const auto& l : g.lines) std::cout << l << "\n";
  return g.pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite 2-Calabi-Yau orbit categories: rigid objects, endomorphism algebras, tables"};
  app.require_subcommand(1);
  bool seedless = false;
  app.add_flag("--seedless", seedless, "Accepted for scripts; every computation is deterministic");

  std::string cat, format = "json", left, right;
  bool check_ct = false;
  int object = 0;
  Sweep sweep;

  app.add_subcommand("catalog", "List preset categories");
  auto* ar = app.add_subcommand("ar-quiver", "AR quiver of the orbit category");
  ar->add_option("--cat", cat, "Preset or Db(...) grammar")->required();
  ar->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  auto* rig = app.add_subcommand("rigids", "Indecomposable rigid objects and their compatibility");
  rig->add_option("--cat", cat)->required();
  auto* mrg = app.add_subcommand("maximal-rigids", "Maximal rigid objects");
  mrg->add_option("--cat", cat)->required();
  mrg->add_flag("--check-ct", check_ct, "Report cluster tilting status");
  auto* endo = app.add_subcommand("endo", "Presentation of End(T) for a maximal rigid T");
  endo->add_option("--cat", cat)->required();
  endo->add_option("--object", object, "Index into the maximal rigid list");
  auto* vt = app.add_subcommand("verify-tables", "Recompute every table row in the sweep");
  vt->add_option("--n", sweep.n_max, "Largest n for the A rows")->check(CLI::Range(0, 6));
  vt->add_option("--t", sweep.t_max, "Largest t")->check(CLI::Range(1, 4));
  vt->add_option("--k", sweep.k_max, "Largest k for the Dk rows (kn <= 10)")->check(CLI::Range(1, 10));
  auto* geo = app.add_subcommand("geom", "Compare the arc model with the orbit category");
  geo->add_option("--cat", cat)->required();
  auto* cmp = app.add_subcommand("compare", "Evidence for an equivalence of rigid subcategories");
  cmp->add_option("--left", left)->required();
  cmp->add_option("--right", right)->required();
  app.add_subcommand("gorenstein-demo", "Stable category of a Gorenstein algebra that is not 2-CY-tilted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "catalog") return cmd_catalog();
    if (sub == "ar-quiver") return cmd_ar_quiver(cat, format);
    if (sub == "rigids") return cmd_rigids(cat);
    if (sub == "maximal-rigids") return cmd_maximal_rigids(cat, check_ct);
    if (sub == "endo") return cmd_endo(cat, object);
    if (sub == "verify-tables") return cmd_verify_tables(sweep);
    if (sub == "geom") return cmd_geom(cat);
    if (sub == "compare") return cmd_compare(left, right);
    if (sub == "gorenstein-demo") return cmd_gorenstein();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

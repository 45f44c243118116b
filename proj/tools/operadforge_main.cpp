// operadforge: exact computations with presented quadratic operads and the
// Gelfand-Varchenko style algebras attached to them.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "operadforge/cooperad.hpp"
#include "operadforge/groebner.hpp"
#include "operadforge/koszul.hpp"
#include "operadforge/operad_engine.hpp"
#include "operadforge/parser.hpp"
#include "operadforge/presets.hpp"
#include "operadforge/report.hpp"

using namespace operadforge;

namespace {

ParamAssignment parse_params(const std::string& text) {
  return text.empty() ? ParamAssignment{} : ParamAssignment::parse(text);
}

nlohmann::json component_report_json(const ComponentReport& rep) {
  nlohmann::json j;
  j["preset"] = rep.preset;
  j["params"] = rep.params;
  j["n"] = rep.n;
  j["dim_free"] = rep.dim_free;
  j["rank_ideal"] = rep.rank_ideal;
  j["dim"] = rep.dim;
  j["field"] = rep.field;
  j["stable"] = rep.stable;
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

int element_arity(const std::string& text) {
  // letters a..e used in the element; they must form a prefix of the alphabet
  int maxidx = 0;
  for (char c : text)
    if (c >= 'a' && c <= 'e') maxidx = std::max(maxidx, c - 'a' + 1);
  return maxidx == 0 ? 2 : maxidx;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for quadratic operads and Gelfand-Varchenko algebras"};
  app.require_subcommand(1);

  std::string preset_name, params_text, mode = "exact", element_text, compare_path;
  std::string a_name, b_name, c_name, check_name, sizes_text, config_path, out_path;
  int arity = 3, degree = 5;

  auto* dim = app.add_subcommand("dim", "dimension of an operad component");
  dim->add_option("preset", preset_name)->required();
  dim->add_option("--n", arity)->required();
  dim->add_option("--params", params_text);
  dim->add_option("--mode", mode)->check(CLI::IsMember({"exact", "modular"}));

  auto* member = app.add_subcommand("member", "ideal membership of an element");
  member->add_option("--preset", preset_name)->required();
  member->add_option("--params", params_text);
  member->add_option("--element", element_text)->required();

  auto* dual = app.add_subcommand("dual", "quadratic dual presentation");
  dual->add_option("preset", preset_name)->required();
  dual->add_option("--params", params_text);
  dual->add_option("--compare", compare_path);

  auto* ktest = app.add_subcommand("koszul-test", "generating-series Koszulness test");
  ktest->add_option("presetP", a_name)->required();
  ktest->add_option("presetPdual", b_name)->required();
  ktest->add_option("--degree", degree);
  ktest->add_option("--params", params_text);

  auto* species = app.add_subcommand("species", "composition-product dimension");
  species->add_option("--a", a_name)->required();
  species->add_option("--b", b_name)->required();
  species->add_option("--n", arity)->required();
  species->add_option("--params", params_text);

  auto* xi = app.add_subcommand("xi", "distributive-law hypothesis check at arity 4");
  xi->add_option("--a", a_name)->required();
  xi->add_option("--b", b_name)->required();
  xi->add_option("--c", c_name)->required();
  xi->add_option("--params", params_text);

  auto* algebra = app.add_subcommand("algebra", "finitely presented algebra commands");
  auto* algdim = algebra->add_subcommand("dim", "quotient dimension via Groebner basis");
  algdim->add_option("preset", preset_name)->required();
  algdim->add_option("--n", arity)->required();
  algdim->add_option("--params", params_text);

  auto* coop = app.add_subcommand("cooperad", "cocomposition checks");
  coop->add_option("--check", check_name)->required()->check(CLI::IsMember({"rho", "coassoc", "dimmatch"}));
  coop->add_option("--sizes", sizes_text);
  coop->add_option("--n", arity);
  coop->add_option("--params", params_text);

  auto* suite = app.add_subcommand("suite", "run the verification suite");
  suite->add_option("--config", config_path);
  suite->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dim) {
      auto rep = component_dimension(operad_preset(preset_name), parse_params(params_text), arity,
                										 mode == "exact" ? FieldMode::Exact : FieldMode::Modular);
      std::cout << component_report_json(rep).dump(2) << "\n";
      return 0;
    }
    if (*member) {
      auto pres = operad_preset(preset_name);
      auto pa = parse_params(params_text);
      Element el = parse_element(element_text, pres, element_arity(element_text));
      OperadEngine eng(pres, pa);
      bool in = eng.in_ideal(el);
      std::cout << (in ? "true" : "false") << "\n";
      return in ? 0 : 1;
    }
    if (*dual) {
      auto d = quadratic_dual(operad_preset(preset_name), parse_params(params_text));
      std::cout << print_operad_presentation(d.presentation);
      if (!compare_path.empty()) {
        auto other = parse_operad_presentation(read_file(compare_path));
        OperadEngine eng(other, parse_params(params_text), 3);
        bool eq = subspace_equal(d.dual_span, eng.ideal(3).matrix);
        std::cout << "# relation spans " << (eq ? "equal" : "differ") << "\n";
        return eq ? 0 : 1;
      }
      return 0;
    }
    if (*ktest) {
      auto pa = parse_params(params_text);
      auto primes = default_rank_primes();
      auto dims_of = [&](const std::string& name) {
        OperadEngine e(operad_preset(name), pa, 4, 5);
        DimensionTable d;
        for (int k = 1; k <= std::min(degree, 4); ++k) d.push_back(e.dim(k));
        for (int k = 5; k <= degree; ++k) d.push_back(e.dim_modular(k, primes).dim);
        return d;
      };
      auto r = koszulness_series_test(dims_of(a_name), dims_of(b_name), degree);
      if (r.pass) {
        std::cout << "pass: composition equals t through degree " << degree << "\n";
        return 0;
      }
      std::cout << "fail at degree " << r.first_fail_degree << "\n";
      return 1;
    }
    if (*species) {
      auto pa = parse_params(params_text);
      OperadEngine ea(operad_preset(a_name), pa), eb(operad_preset(b_name), pa);
      DimensionTable da, db;
      for (int k = 1; k <= arity; ++k) {
        da.push_back(ea.dim(k));
        db.push_back(eb.dim(k));
      }
      std::cout << "dim (" << a_name << " o " << b_name << ")(" << arity
                << ") = " << species_compose_dims(da, db, arity) << "\n";
      return 0;
    }
    if (*xi) {
      auto r = xi_check(operad_preset(a_name), operad_preset(b_name), operad_preset(c_name),
                        parse_params(params_text));
      std::cout << "species " << r.species_dim << (r.equal ? " == " : " != ") << "operad "
                << r.operad_dim << "\n";
      return r.equal ? 0 : 1;
    }
    if (*algdim) {
      auto gb = buchberger(algebra_preset(preset_name, arity), parse_params(params_text),
                           MonomialOrder{});
      auto d = algebra_dimension(gb);
      if (d)
        std::cout << *d << "\n";
      else
        std::cout << "infinite\n";
      return 0;
    }
    if (*coop) {
      auto pa = parse_params(params_text);
      std::vector<int> sizes;
      std::istringstream is(sizes_text);
      std::string tok;
      while (std::getline(is, tok, ',')) sizes.push_back(std::stoi(tok));
      if (check_name == "rho") {
        if (sizes.size() != 2) throw std::runtime_error("rho needs --sizes |I|,|J|");
        LabelSet I, J;
        for (int k = 1; k <= sizes[0]; ++k) I.push_back(Label::of(k));
        for (int k = sizes[0] + 1; k <= sizes[0] + sizes[1]; ++k) J.push_back(Label::of(k));
        bool ok = rho_well_defined(I, J, pa);
        std::cout << (ok ? "well-defined" : "NOT well-defined") << "\n";
        return ok ? 0 : 1;
      }
      if (check_name == "coassoc") {
        if (sizes.size() != 3) throw std::runtime_error("coassoc needs --sizes |I|,|J|,|K|");
        bool ok = coassociativity_check(sizes[0], sizes[1], sizes[2], pa);
        std::cout << (ok ? "coassociative" : "NOT coassociative") << "\n";
        return ok ? 0 : 1;
      }
      auto r = dim_match_operad(arity, pa);
      std::cout << "algebra " << r.algebra_dim << (r.equal ? " == " : " != ") << "operad "
                << r.operad_dim << "\n";
      return r.equal ? 0 : 1;
    }
    if (*suite) {
      SuiteConfig cfg = config_path.empty()
                            ? SuiteConfig::defaults()
                            : SuiteConfig::from_json_text(read_file(config_path));
      if (!out_path.empty()) cfg.out_path = out_path;
      Report rep = run_suite(cfg);
      std::ofstream out(cfg.out_path);
      out << rep.to_json();
      for (const auto& line : rep.criterion_lines()) std::cout << line << "\n";
      std::cout << (rep.all_pass() ? "suite: all claims passed" : "suite: some claims FAILED")
                << " (report: " << cfg.out_path << ")\n";
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

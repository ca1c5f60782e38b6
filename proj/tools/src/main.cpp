#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "vknot/errors.hpp"
#include "vknot_tools/report.hpp"

namespace {

constexpr int kValidationExit = 2;
constexpr int kHypothesisExit = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace vknot::tools;

  CLI::App app{"Virtual knot composition and volume bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::optional<std::string> table;
  app.add_flag("--json", json, "Emit a single JSON document");
  app.add_option("--table", table, "Volume table file (JSON)");

  const std::map<std::string, KindChoice> kinds{
      {"auto", KindChoice::Auto}, {"nonsingular", KindChoice::Nonsingular}, {"singular", KindChoice::Singular}};
  const std::map<std::string, bool> orientations{{"match", true}, {"reverse", false}};

  std::string code;
  auto* analyze = app.add_subcommand("analyze", "Surface, predicates and corks of a diagram");
  analyze->add_option("diagram", code, "Gauss code, @file or catalog name")->required();

  ComposeArgs compose;
  std::string orientation = "match";
  auto* comp = app.add_subcommand("compose", "Compose two diagrams through corks");
  comp->add_option("diagram1", compose.code1)->required();
  comp->add_option("arc1", compose.arc1)->required();
  comp->add_option("diagram2", compose.code2)->required();
  comp->add_option("arc2", compose.arc2)->required();
  comp->add_option("--kind", compose.kind)->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  comp->add_option("--orientation", orientation)->check(CLI::IsMember({"match", "reverse"}));

  std::string arc;
  auto* dbl = app.add_subcommand("double", "Cork double of a diagram");
  dbl->add_option("diagram", code)->required();
  dbl->add_option("arc", arc)->required();

  SequenceArgs seq;
  auto* sequence = app.add_subcommand("sequence", "Member (i, j) of the unbounded-volume family");
  sequence->add_option("diagram1", seq.code1)->required();
  sequence->add_option("arc1", seq.arc1)->required();
  sequence->add_option("diagram2", seq.code2)->required();
  sequence->add_option("arc2", seq.arc2)->required();
  sequence->add_option("i", seq.i)->required();
  sequence->add_option("j", seq.j)->required();

  bool dump = false;
  std::optional<std::string> load;
  auto* tbl = app.add_subcommand("table", "Show or validate volume tables");
  auto* dump_flag = tbl->add_flag("--dump", dump, "Print the built-in table");
  tbl->add_option("--load", load, "Validate and print a table file")->excludes(dump_flag);

  std::vector<std::string> ids;
  int cusps = 0;
  auto* bound = app.add_subcommand("bound", "Volume bound from two table entries or a cusp count");
  auto* ids_opt = bound->add_option("entries", ids, "Two table entry ids")->expected(2);
  bound->add_option("--cusps", cusps, "Cusp count for the n v3 bound")->excludes(ids_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kValidationExit;
  }

  try {
    Report r;
    if (*analyze) {
      r = cmd_analyze(code);
    } else if (*comp) {
      compose.orientation_matched = orientations.at(orientation);
      compose.table = table;
      r = cmd_compose(compose);
    } else if (*dbl) {
      r = cmd_double(code, arc, table);
    } else if (*sequence) {
      r = cmd_sequence(seq);
    } else if (*tbl) {
      r = cmd_table(load ? load : table);
      if (!json) {
        std::cout << r.results["entries"].dump(2) << "\n";
        return 0;
      }
    } else if (ids.size() == 2) {
      r = cmd_bound(ids[0], ids[1], table);
    } else if (*bound->get_option("--cusps")) {
      r = cmd_bound_cusps(cusps);
    } else {
      std::cerr << "error: bound needs two entry ids or --cusps\n";
      return kValidationExit;
    }
    std::cout << (json ? render_json(r) : render_text(r));
  } catch (const vknot::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return e.category() == vknot::ErrorCategory::Hypothesis ? kHypothesisExit : kValidationExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

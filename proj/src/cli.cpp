#include "ultratree/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ultratree/error.hpp"
#include "ultratree/json_io.hpp"
#include "ultratree/ultrametric.hpp"
#include "ultratree/verify.hpp"

namespace ultratree::cli {

namespace {

using io::json;

std::vector<Rational> parse_value_list(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(Rational::parse(item));
  if (values.empty()) throw Error(ErrorCode::UsageError, "--values needs at least one entry");
  return values;
}

void maybe_write(const std::string& path, const json& j) {
  if (!path.empty()) io::write_json_file(path, j);
}

/// Tree files may carry labels; classify and counterexample ignore them.
Tree read_tree(const std::string& path) { return io::tree_from_json(io::read_json_file(path)); }

int cmd_distance(const std::string& file, const std::string& json_out, std::ostream& out) {
  const auto space = build_ultrametric(io::labeled_tree_from_json(io::read_json_file(file)));
  out << io::distance_csv(space);
  maybe_write(json_out, io::to_json(space));
  return kExitOk;
}

int cmd_check_us(const std::string& file, const std::string& json_out, std::ostream& out) {
  const auto space = io::space_from_json(io::read_json_file(file));
  const auto witness = us_witness(space);
  out << (witness.present() ? *witness.point : "NOT-US") << '\n';
  maybe_write(json_out, json{{"witness", witness.present() ? json(*witness.point) : json(nullptr)}});
  return witness.present() ? kExitOk : kExitNegative;
}

int cmd_realize(const std::string& file, const std::string& json_out, std::ostream& out) {
  const auto space = io::space_from_json(io::read_json_file(file));
  const auto star = realize_as_star(space);
  const json j = io::to_json(star);
  out << j.dump(2) << '\n';
  maybe_write(json_out, j);
  return kExitOk;
}

int cmd_classify(const std::string& file, const std::string& json_out, std::ostream& out) {
  const Tree tree = read_tree(file);
  const TreeClass cls = classify(tree);
  out << tree_tag_name(cls.tag) << '\n';
  json centers = json::array();
  for (VertexIndex v : cls.centers) centers.push_back(tree.name(v));
  maybe_write(json_out, json{{"tag", tree_tag_name(cls.tag)},
                             {"centers", centers},
                             {"longest_path", longest_path_length(tree)}});
  return kExitOk;
}

int cmd_isometric(const std::string& a, const std::string& b, const std::string& json_out, std::ostream& out) {
  const bool same = check_isometric(io::space_from_json(io::read_json_file(a)),
                                    io::space_from_json(io::read_json_file(b)));
  out << (same ? "true" : "false") << '\n';
  maybe_write(json_out, json{{"isometric", same}});
  return same ? kExitOk : kExitNegative;
}

int cmd_counterexample(const std::string& file, const std::string& json_out, std::ostream& out) {
  const auto lt = counterexample_labeling(read_tree(file));
  const json j = io::to_json(lt);
  out << j.dump(2) << '\n';
  maybe_write(json_out, j);
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  int max_order = 6;
  std::string values = "0,1,2";
  int jobs = 0;
  bool serial = false;
  bool allow_large = false;
};

int cmd_verify(const VerifyArgs& args, const std::string& json_out, std::ostream& out, std::ostream& err) {
  const auto theorem = parse_theorem(args.theorem);
  if (!theorem) throw Error(ErrorCode::UsageError, "unknown theorem '" + args.theorem + "'");
  VerifyOptions options;
  options.max_order = args.max_order;
  options.values = parse_value_list(args.values);
  options.jobs = args.jobs;
  options.execution = args.serial ? Execution::Serial : Execution::Parallel;
  options.allow_large = args.allow_large;
  if (args.allow_large && expected_case_count(*theorem, args.max_order, normalize_values(options.values).size()) >
                              kDefaultCaseBudget)
    err << "ultratree: warning: large run, this may take minutes\n";

  const auto report = verify(*theorem, options);
  out << "theorem " << theorem_id(report.theorem) << ": " << (report.passed() ? "pass" : "FAIL") << '\n';
  out << "cases checked: " << report.cases_checked << '\n';
  for (const auto& s : report.subchecks) out << "  " << s.name << " [" << s.mode << "]: " << s.cases << '\n';
  out << "failures: " << report.failures.size() << '\n';
  out << "elapsed: " << report.elapsed.count() << " ms\n";
  for (const auto& cert : report.failures)
    out << "  " << claim_id(cert.claim) << " on " << io::to_json(cert.tree).dump() << ": " << cert.evidence << '\n';
  maybe_write(json_out, to_json(report));
  return report.passed() ? kExitOk : kExitNegative;
}

int report_error(std::ostream& err, ErrorCode code, const std::string& message) {
  err << "ultratree: error[" << error_code_name(code) << "]: " << message << '\n';
  return kExitError;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ultratree: ultrametric spaces generated by labeled trees", "ultratree"};
  app.require_subcommand(1, 1);

  std::string json_out;
  std::string file;
  std::string other;
  VerifyArgs verify_args;

  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", json_out, "Also write JSON output to this file"); };

  auto* distance = app.add_subcommand("distance", "Distance matrix (CSV) of a labeled tree");
  distance->add_option("file", file, "Labeled-tree JSON")->required();
  add_json(distance);

  auto* check_us = app.add_subcommand("check-us", "Print a US witness point or NOT-US");
  check_us->add_option("file", file, "Space JSON")->required();
  add_json(check_us);

  auto* realize = app.add_subcommand("realize", "Labeled star generating a US space");
  realize->add_option("file", file, "Space JSON")->required();
  add_json(realize);

  auto* classify_cmd = app.add_subcommand("classify", "Star, DoubleStar or Other");
  classify_cmd->add_option("file", file, "Tree JSON")->required();
  add_json(classify_cmd);

  auto* isometric = app.add_subcommand("isometric", "Decide whether two spaces are isometric");
  isometric->add_option("a", file, "First space JSON")->required();
  isometric->add_option("b", other, "Second space JSON")->required();
  add_json(isometric);

  auto* counterexample = app.add_subcommand("counterexample", "Labeling of a long tree whose space is not US");
  counterexample->add_option("file", file, "Tree JSON")->required();
  add_json(counterexample);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check over all small labeled trees");
  verify_cmd->add_option("--theorem", verify_args.theorem, "nondeg | main | lemmas | classify")
      ->required()
      ->check(CLI::IsMember({"nondeg", "main", "lemmas", "classify"}));
  verify_cmd->add_option("--max-order", verify_args.max_order, "Largest tree order")->capture_default_str();
  verify_cmd->add_option("--values", verify_args.values, "Comma-separated label values")->capture_default_str();
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--serial", verify_args.serial, "Use the serial reference driver");
  verify_cmd->add_flag("--allow-large", verify_args.allow_large, "Lift the case budget");
  add_json(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, ErrorCode::UsageError, e.what());
  }

  try {
    if (distance->parsed()) return cmd_distance(file, json_out, out);
    if (check_us->parsed()) return cmd_check_us(file, json_out, out);
    if (realize->parsed()) return cmd_realize(file, json_out, out);
    if (classify_cmd->parsed()) return cmd_classify(file, json_out, out);
    if (isometric->parsed()) return cmd_isometric(file, other, json_out, out);
    if (counterexample->parsed()) return cmd_counterexample(file, json_out, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, json_out, out, err);
  } catch (const Error& e) {
    const int code = report_error(err, e.code(), e.what());
    // A tree or space that lacks the property asked about is a negative answer, not bad input.
    if (e.code() == ErrorCode::NotUS || e.code() == ErrorCode::NoLongPath) return kExitNegative;
    return code;
  } catch (const nlohmann::json::exception& e) {
    return report_error(err, ErrorCode::ParseError, e.what());
  }
  return report_error(err, ErrorCode::UsageError, "no subcommand");
}

}  // namespace ultratree::cli

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "titsindex/catalog.hpp"
#include "titsindex/equivalence.hpp"
#include "titsindex/json_io.hpp"
#include "titsindex/render.hpp"
#include "titsindex/tables.hpp"

namespace {

using namespace titsindex;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnavailable = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RuleTables load_rules(const std::string& flag_path) {
  if (!flag_path.empty()) return load_rules_file(flag_path);
  if (const char* env = std::getenv("TITS_RULES"); env && *env) {
    return load_rules_file(env);
  }
  return builtin_rules();
}

std::pair<Family, int> resolve_family(const std::string& type_flag, int rank_flag) {
  std::string label = type_flag;
  bool has_digit = std::any_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
  if (rank_flag > 0 && !has_digit) label += std::to_string(rank_flag);
  auto [family, label_rank] = parse_family(label);
  int rank = 0;
  if (label_rank) {
    rank = *label_rank;
    if (rank_flag > 0 && rank_flag != rank) {
      throw DomainError("--rank contradicts the rank in --type");
    }
  } else if (rank_flag > 0) {
    rank = rank_flag;
  } else if (auto fixed = fixed_rank(family)) {
    rank = *fixed;
  } else {
    throw DomainError("family " + family_label(family) + " needs --rank");
  }
  return {family, rank};
}

int run_enumerate(const std::string& type_flag, int rank_flag, int prime,
                  const std::string& format, const RuleTables& rules) {
  auto [family, rank] = resolve_family(type_flag, rank_flag);
  std::vector<TitsIndex> indexes = enumerate_indexes(family, rank, prime, rules);
  if (format == "text") {
    for (size_t i = 0; i < indexes.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << render_text(indexes[i]) << "\n";
    }
  } else {
    ordered_json doc;
    doc["schema"] = "tits-enumeration/1";
    doc["family"] = family_label(family);
    doc["rank"] = rank;
    doc["prime"] = prime;
    doc["count"] = indexes.size();
    ordered_json list = ordered_json::array();
    for (const auto& index : indexes) {
      list.push_back(ordered_json::parse(index_to_json(index)));
    }
    doc["indexes"] = std::move(list);
    std::cout << doc.dump(2) << "\n";
  }
  return kExitOk;
}

int run_validate(const std::string& path) {
  ParsedIndex parsed = parse_index_lenient(read_input(path));
  if (parsed.findings.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const auto& finding : parsed.findings) {
    std::cout << finding.code << ": " << finding.message << "\n";
  }
  return kExitDomain;
}

int run_render(const std::string& path, const std::string& format, bool ascii_only) {
  TitsIndex index = index_from_json(read_input(path));
  if (format == "svg") {
    std::cout << render_svg(index);
  } else if (format == "tikz") {
    std::cout << render_tikz(index);
  } else {
    RenderOptions options;
    options.ascii_only = ascii_only;
    std::cout << render_text(index, options) << "\n";
  }
  return kExitOk;
}

ordered_json verdict_json(const Verdict& v, bool with_prime) {
  ordered_json j;
  if (with_prime) j["prime"] = v.prime;
  j["verdict"] = verdict_name(v.kind);
  j["criterion"] = v.criterion;
  j["citations"] = v.citations;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

int run_equiv(const std::string& path1, const std::string& path2, int prime,
              bool all, const RuleTables& rules) {
  InvariantProfile p1 = profile_from_json(read_input(path1));
  InvariantProfile p2 = profile_from_json(read_input(path2));
  Verdict v;
  if (all) {
    v = motivic_equivalent(p1, p2, rules);
    ordered_json j = verdict_json(v, false);
    ordered_json per_prime = ordered_json::array();
    if (p1.family == p2.family && p1.rank == p2.rank) {
      for (int p : torsion_primes(type_of(p1.family), p1.rank)) {
        per_prime.push_back(verdict_json(motivic_equivalent_mod_p(p1, p2, p, rules), true));
      }
    }
    j["per_prime"] = std::move(per_prime);
    std::cout << j.dump(2) << "\n";
  } else {
    v = motivic_equivalent_mod_p(p1, p2, prime, rules);
    std::cout << verdict_json(v, true).dump(2) << "\n";
  }
  return v.unavailable() ? kExitUnavailable : kExitOk;
}

int run_tables(const std::string& out_dir, const RuleTables& rules) {
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  std::vector<TableDocument> tables = golden_tables(rules);
  for (const auto& table : tables) {
    std::ofstream out(dir / table.filename, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + (dir / table.filename).string() + "'");
    out << table.json_text;
    std::cout << "wrote " << (dir / table.filename).string() << "\n";
  }
  std::ofstream diagrams(dir / "diagrams.txt", std::ios::binary);
  diagrams << all_diagrams(tables);
  std::cout << "wrote " << (dir / "diagrams.txt").string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tits p-index catalog for absolutely simple algebraic groups"};
  app.require_subcommand(1);
  std::string rules_path;
  app.add_option("--rules", rules_path,
                 "path to a rules-table override (default: built-in; the "
                 "TITS_RULES environment variable is also honored)");

  std::string type_flag;
  int rank_flag = 0;
  int prime = 0;
  std::string format = "json";
  CLI::App* enumerate = app.add_subcommand("enumerate", "list all Tits p-indexes of a family");
  enumerate->add_option("--type", type_flag, "family label (1A, 2A, B, C, 1D, 2D, 3D4, G2, F4, 1E6, 2E6, E7, E8; A/D/E6 alias the inner forms)")->required();
  enumerate->add_option("--rank", rank_flag, "rank n for the letter families");
  enumerate->add_option("--prime", prime, "the prime p")->required();
  enumerate->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string validate_path;
  CLI::App* validate_cmd = app.add_subcommand("validate", "check an index file against the index axioms");
  validate_cmd->add_option("file", validate_path, "index JSON file ('-' for stdin)")->required();

  std::string render_path;
  std::string render_format = "text";
  bool ascii_only = false;
  CLI::App* render_cmd = app.add_subcommand("render", "render an index file");
  render_cmd->add_option("file", render_path, "index JSON file ('-' for stdin)")->required();
  render_cmd->add_option("--format", render_format, "text, svg or tikz")
      ->check(CLI::IsMember({"text", "svg", "tikz"}));
  render_cmd->add_flag("--ascii-only", ascii_only, "substitute ### for the triple-edge glyph");

  std::string profile1, profile2;
  int equiv_prime = 0;
  bool equiv_all = false;
  CLI::App* equiv_cmd = app.add_subcommand("equiv", "decide motivic equivalence of two profiles");
  equiv_cmd->add_option("profile1", profile1, "profile JSON file")->required();
  equiv_cmd->add_option("profile2", profile2, "profile JSON file")->required();
  CLI::Option* prime_opt = equiv_cmd->add_option("--prime", equiv_prime, "decide mod this prime");
  CLI::Option* all_opt = equiv_cmd->add_flag("--all", equiv_all, "decide at every torsion prime");
  prime_opt->excludes(all_opt);

  std::string out_dir = "tables";
  CLI::App* tables_cmd = app.add_subcommand("tables", "regenerate the catalog tables as golden files");
  tables_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RuleTables rules = load_rules(rules_path);
    if (enumerate->parsed()) return run_enumerate(type_flag, rank_flag, prime, format, rules);
    if (validate_cmd->parsed()) return run_validate(validate_path);
    if (render_cmd->parsed()) return run_render(render_path, render_format, ascii_only);
    if (equiv_cmd->parsed()) {
      if (!equiv_all && equiv_prime == 0) {
        std::cerr << "equiv needs --prime or --all\n";
        return kExitUsage;
      }
      return run_equiv(profile1, profile2, equiv_prime, equiv_all, rules);
    }
    if (tables_cmd->parsed()) return run_tables(out_dir, rules);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

// Copyright 2026 The treedist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "treedist/contour.h"
#include "treedist/cost.h"
#include "treedist/errors.h"
#include "treedist/generate.h"
#include "treedist/mapping.h"
#include "treedist/oracle.h"
#include "treedist/seq_align.h"
#include "treedist/ted_classic.h"
#include "treedist/ted_gap.h"
#include "treedist/tree.h"

namespace treedist {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string costs = "unit";
  std::string gap_open;
  std::string gap_extend;
  bool mapping = false;
  bool counters = false;
  bool machine = false;
  std::string quantum = "1";
};

Rational ParseNumberFlag(const std::string& name, const std::string& text) {
  auto value = Rational::Parse(text);
  if (!value) throw UsageError(name + ": not a number: '" + text + "'");
  return *value;
}

// Gap parameters default to a = 0, b = 1 when `required` is false.
CostModel MakeModel(const Flags& f, const CLI::App* cmd, bool gaps,
                    bool required) {
  const bool has_open = cmd->get_option("--gap-open")->count() > 0;
  const bool has_extend = cmd->get_option("--gap-extend")->count() > 0;
  Rational a = 0;
  Rational b = 1;
  if (gaps) {
    if (required && (!has_open || !has_extend)) {
      throw UsageError("--gap-open and --gap-extend are required");
    }
    if (has_open) a = ParseNumberFlag("--gap-open", f.gap_open);
    if (has_extend) b = ParseNumberFlag("--gap-extend", f.gap_extend);
  } else if (has_open || has_extend) {
    throw UsageError("gap flags are not accepted by this command");
  }
  if (f.costs == "unit") return CostModel::Unit(a, b);
  constexpr std::string_view kTable = "table:";
  if (f.costs.rfind(kTable, 0) == 0) {
    return CostModel::FromTable(
        RelabelTable::Load(f.costs.substr(kTable.size())), a, b);
  }
  throw UsageError("--costs must be 'unit' or 'table:<path>'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("Io", "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LabeledTree LoadTree(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    return LabeledTree::Parse(ReadFile(arg.substr(1)));
  }
  return LabeledTree::Parse(arg);
}

void AddOutputFlags(CLI::App* cmd, Flags* f, bool mapping, bool counters) {
  if (mapping) cmd->add_flag("--mapping", f->mapping, "Print a witness mapping");
  if (counters) {
    cmd->add_flag("--counters", f->counters, "Print DP work counters");
  }
  cmd->add_flag("--machine", f->machine, "Print one JSON line");
}

void AddCostFlags(CLI::App* cmd, Flags* f) {
  cmd->add_option("--costs", f->costs, "unit | table:<path>");
  cmd->add_option("--gap-open", f->gap_open, "Gap open a");
  cmd->add_option("--gap-extend", f->gap_extend, "Gap extend b");
}

struct Report {
  std::string model;
  std::string distance;
  int m = 0;
  int n = 0;
  std::vector<std::pair<std::string, long long>> counters;
  std::optional<std::string> mapping;
  Json mapping_json;
};

void Emit(const Report& r, const Flags& f, std::ostream& out) {
  if (f.machine) {
    Json j;
    j["distance"] = r.distance;
    j["model"] = r.model;
    j["sizes"] = {r.m, r.n};
    Json counters = Json::object();
    for (const auto& [k, v] : r.counters) counters[k] = v;
    j["counters"] = counters;
    if (r.mapping) j["mapping"] = r.mapping_json;
    out << j.dump() << "\n";
    return;
  }
  out << "distance=" << r.distance << "\n";
  if (r.mapping) out << "mapping=" << *r.mapping << "\n";
  if (f.counters) {
    out << "counters:";
    for (const auto& [k, v] : r.counters) out << " " << k << "=" << v;
    out << "\n";
  }
}

void SetMapping(Report* r, const LabeledTree& t1, const LabeledTree& t2,
                const EditMapping& mapping) {
  r->mapping = FormatMapping(t1, t2, mapping);
  r->mapping_json = Json::array();
  for (const auto& [u, v] : mapping.pairs) {
    r->mapping_json.push_back({u + 1, v + 1});
  }
}

// Exhaustive DP-versus-oracle sweep over every labeled tree pair with up
// to max_size nodes over {x, y}, plus alignments over {A, B}.
int RunVerify(int max_size, std::ostream& out, std::ostream& err) {
  if (max_size < 1) throw UsageError("--max-size must be positive");
  const std::vector<std::string> alphabet = {"x", "y"};
  const std::vector<std::pair<int, int>> gap_settings = {
      {0, 1}, {1, 1}, {2, 1}, {1, 3}};
  const auto shapes = ShapesUpTo(max_size);
  std::vector<std::vector<LabeledTree>> labeled;
  for (const auto& s : shapes) labeled.push_back(AllLabelings(s, alphabet));

  long long classic_pairs = 0;
  long long general_pairs = 0;
  long long subtree_pairs = 0;
  auto mismatch = [&](std::string_view model, const std::string& params,
                      const LabeledTree& t1, const LabeledTree& t2,
                      const CostModel& cm, Cost dp, Cost oracle) {
    err << "MISMATCH model=" << model << params << " t1=" << t1.ToBracket()
        << " t2=" << t2.ToBracket() << " dp=" << cm.Format(dp)
        << " oracle=" << cm.Format(oracle) << "\n";
    return kExitDomainError;
  };
  const CostModel unit = CostModel::Unit();
  for (std::size_t s1 = 0; s1 < shapes.size(); ++s1) {
    for (std::size_t s2 = 0; s2 < shapes.size(); ++s2) {
      const ShapePairOracle oracle(shapes[s1], shapes[s2]);
      const bool binary =
          shapes[s1].MaxArity() <= 2 && shapes[s2].MaxArity() <= 2;
      for (const auto& t1 : labeled[s1]) {
        for (const auto& t2 : labeled[s2]) {
          const Cost dp = TreeDistance(t1, t2, unit, false).distance;
          const Cost want =
              oracle.Distance(t1, t2, unit, MappingModel::kClassic);
          if (dp != want) {
            return mismatch("classic", "", t1, t2, unit, dp, want);
          }
          ++classic_pairs;
          for (const auto& [a, b] : gap_settings) {
            const CostModel gm = CostModel::Unit(a, b);
            const std::string params =
                " a=" + std::to_string(a) + " b=" + std::to_string(b);
            const Cost sub = GapDistanceSubtree(t1, t2, gm, false).distance;
            const Cost sub_want =
                oracle.Distance(t1, t2, gm, MappingModel::kSubtreeGap);
            if (sub != sub_want) {
              return mismatch("subtree", params, t1, t2, gm, sub, sub_want);
            }
            ++subtree_pairs;
            if (!binary) continue;
            const Cost gen =
                GapDistanceGeneral(t1, t2, gm, {.with_mapping = false})
                    .distance;
            const Cost gen_want =
                oracle.Distance(t1, t2, gm, MappingModel::kGeneralGap);
            if (gen != gen_want) {
              return mismatch("general", params, t1, t2, gm, gen, gen_want);
            }
            ++general_pairs;
          }
        }
      }
    }
  }
  out << "classic: " << classic_pairs << " pairs ok\n";
  out << "general: " << general_pairs << " pairs ok\n";
  out << "subtree: " << subtree_pairs << " pairs ok\n";

  std::vector<std::string> strings = {""};
  for (std::size_t k = 0; k < strings.size(); ++k) {
    if (static_cast<int>(strings[k].size()) == max_size) continue;
    strings.push_back(strings[k] + "A");
    strings.push_back(strings[k] + "B");
  }
  long long align_pairs = 0;
  for (const auto& [a, b] : gap_settings) {
    const CostModel gm = CostModel::Unit(a, b);
    for (const auto& x : strings) {
      for (const auto& y : strings) {
        const Cost dp = Align(x, y, gm).distance;
        const Cost want = BruteForceAlignmentCost(x, y, gm);
        if (dp != want) {
          err << "MISMATCH model=align a=" << a << " b=" << b << " s1=\"" << x
              << "\" s2=\"" << y << "\" dp=" << gm.Format(dp)
              << " oracle=" << gm.Format(want) << "\n";
          return kExitDomainError;
        }
        ++align_pairs;
      }
    }
  }
  out << "align: " << align_pairs << " pairs ok\n";
  return kExitOk;
}

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Tree edit distances: classic, general-gap, subtree-gap",
               "treedist"};
  app.require_subcommand(1);
  Flags f;

  auto* ted = app.add_subcommand("ted", "Classic tree edit distance");
  std::string tree1;
  std::string tree2;
  ted->add_option("tree1", tree1, "Bracket tree or @file")->required();
  ted->add_option("tree2", tree2, "Bracket tree or @file")->required();
  AddCostFlags(ted, &f);
  AddOutputFlags(ted, &f, true, true);

  auto* general =
      app.add_subcommand("ted-gap-general", "General-gap distance (binary)");
  general->add_option("tree1", tree1)->required();
  general->add_option("tree2", tree2)->required();
  AddCostFlags(general, &f);
  AddOutputFlags(general, &f, true, true);

  auto* subtree =
      app.add_subcommand("ted-gap-subtree", "Complete-subtree-gap distance");
  subtree->add_option("tree1", tree1)->required();
  subtree->add_option("tree2", tree2)->required();
  AddCostFlags(subtree, &f);
  AddOutputFlags(subtree, &f, true, true);

  auto* seq = app.add_subcommand("seq-align", "Affine-gap global alignment");
  std::string s1;
  std::string s2;
  seq->add_option("s1", s1)->required();
  seq->add_option("s2", s2)->required();
  AddCostFlags(seq, &f);
  AddOutputFlags(seq, &f, false, false);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive mapping search");
  std::string model_name;
  oracle->add_option("tree1", tree1)->required();
  oracle->add_option("tree2", tree2)->required();
  oracle->add_option("--model", model_name, "classic | general | subtree")
      ->required();
  AddCostFlags(oracle, &f);
  AddOutputFlags(oracle, &f, false, true);

  auto* contour = app.add_subcommand("contour", "Terrain contour trees");
  contour->require_subcommand(1);
  auto* build = contour->add_subcommand("build", "Build a contour tree");
  std::string csv1;
  std::string csv2;
  std::string emit;
  build->add_option("csv", csv1)->required();
  build->add_option("--emit", emit, "bracket");
  build->add_option("--quantum", f.quantum, "Height bucket size");
  auto* compare = contour->add_subcommand("compare", "Compare two terrains");
  compare->add_option("csv1", csv1)->required();
  compare->add_option("csv2", csv2)->required();
  compare->add_option("--quantum", f.quantum, "Height bucket size");
  AddCostFlags(compare, &f);
  AddOutputFlags(compare, &f, false, false);

  auto* verify = app.add_subcommand("verify", "Run DP-versus-oracle suites");
  int max_size = 4;
  verify->add_option("--max-size", max_size, "Largest tree size");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "Usage: " << e.what() << "\n";
    return kExitUsage;
  }

  Report r;
  if (ted->parsed()) {
    const CostModel model = MakeModel(f, ted, false, false);
    const auto t1 = LoadTree(tree1);
    const auto t2 = LoadTree(tree2);
    const auto res = TreeDistance(t1, t2, model, f.mapping);
    r = {"classic", model.Format(res.distance), t1.size(), t2.size(),
         {{"forest_cells", res.counters.forest_cells},
          {"tree_pairs", res.counters.tree_pairs}},
         std::nullopt, {}};
    if (f.mapping) SetMapping(&r, t1, t2, res.mapping);
  } else if (general->parsed() || subtree->parsed()) {
    const bool is_general = general->parsed();
    const CostModel model = MakeModel(f, is_general ? general : subtree, true, true);
    const auto t1 = LoadTree(tree1);
    const auto t2 = LoadTree(tree2);
    const auto res =
        is_general
            ? GapDistanceGeneral(t1, t2, model, {.with_mapping = f.mapping})
            : GapDistanceSubtree(t1, t2, model, f.mapping);
    r = {is_general ? "general" : "subtree", model.Format(res.distance),
         t1.size(), t2.size(),
         {{"cells", res.counters.cells},
          {"anchor_pairs", res.counters.anchor_pairs}},
         std::nullopt, {}};
    if (f.mapping) SetMapping(&r, t1, t2, res.mapping);
  } else if (seq->parsed()) {
    const CostModel model = MakeModel(f, seq, true, false);
    const auto res = Align(s1, s2, model);
    const auto rows = AlignmentRows(res.columns);
    if (f.machine) {
      Json j;
      j["distance"] = model.Format(res.distance);
      j["model"] = "align";
      j["sizes"] = {s1.size(), s2.size()};
      j["counters"] = Json::object();
      j["alignment"] = {rows.first, rows.second};
      out << j.dump() << "\n";
    } else {
      out << "distance=" << model.Format(res.distance) << "\n"
          << rows.first << "\n"
          << rows.second << "\n";
    }
    return kExitOk;
  } else if (oracle->parsed()) {
    const auto which = ParseModelName(model_name);
    if (!which) throw UsageError("--model must be classic, general or subtree");
    const bool gaps = *which != MappingModel::kClassic;
    const CostModel model = MakeModel(f, oracle, gaps, gaps);
    const auto t1 = LoadTree(tree1);
    const auto t2 = LoadTree(tree2);
    const auto res = OracleDistance(t1, t2, model, *which);
    r = {std::string(ModelName(*which)), model.Format(res.distance),
         t1.size(), t2.size(),
         {{"mappings", res.mappings}, {"feasible", res.feasible}},
         std::nullopt, {}};
    SetMapping(&r, t1, t2, res.mapping);
  } else if (build->parsed()) {
    if (!emit.empty() && emit != "bracket") {
      throw UsageError("--emit accepts only 'bracket'");
    }
    const Rational quantum = ParseNumberFlag("--quantum", f.quantum);
    const auto ct = BuildContourTree(Terrain::Load(csv1), quantum);
    if (emit == "bracket") {
      out << ct.tree.ToBracket() << "\n";
    } else {
      out << "nodes=" << ct.nodes.size() << "\n"
          << "edges=" << ct.edges.size() << "\n"
          << "tree=" << ct.tree.ToBracket() << "\n";
    }
    return kExitOk;
  } else if (compare->parsed()) {
    const CostModel model = MakeModel(f, compare, true, false);
    const Rational quantum = ParseNumberFlag("--quantum", f.quantum);
    const auto res = CompareTerrains(Terrain::Load(csv1), Terrain::Load(csv2),
                                     model, quantum);
    r = {"subtree", model.Format(res.distance), res.tree1.size(),
         res.tree2.size(), {}, std::nullopt, {}};
    Emit(r, f, out);
    if (!f.machine) {
      out << "tree1=" << res.tree1.ToBracket() << "\n"
          << "tree2=" << res.tree2.ToBracket() << "\n";
    }
    return kExitOk;
  } else if (verify->parsed()) {
    return RunVerify(max_size, out, err);
  }
  Emit(r, f, out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  try {
    return Dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << "Usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "Error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace treedist

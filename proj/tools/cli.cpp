#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "handle3/classify.hpp"
#include "handle3/error.hpp"
#include "handle3/io.hpp"
#include "handle3/moves.hpp"

namespace handle3 {

namespace {

constexpr const char* kSchema = "handle3/1";

struct UsageError {
  std::string message;
};

struct IoError {
  std::string message;
};

struct Output {
  json data;
  std::string human;
};

struct Context {
  std::vector<std::string> warnings;
};

using Action = std::function<Output(Context&)>;

ManifoldForm parse_manifold(const std::string& s, Context& ctx) {
  if (s == "s3" || s == "S3") return ManifoldForm::sphere3();
  const auto comma = s.find(',');
  long p = 0, q = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    size_t used = 0;
    p = std::stol(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const auto rest = s.substr(comma + 1);
    q = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
  } catch (const std::logic_error&) {
    throw UsageError{"--manifold: expected 's3' or 'p,q', got '" + s + "'"};
  }
  const auto m = normalize(p, q);
  if (m.is_sphere() || m.p != p || m.q != q)
    ctx.warnings.push_back("manifold " + s + " normalized to " + to_string(m));
  return m;
}

std::array<int, 3> parse_genera(const std::vector<int>& g) {
  if (g.size() != 3) throw UsageError{"--genera: expected three comma-separated integers"};
  return {g[0], g[1], g[2]};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError{"cannot read '" + path + "'"};
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

json case_json(const ProfileCase& c) {
  json inc;
  const char* keys[3] = {"f12", "f13", "f23"};
  for (int q = 0; q < 3; ++q) inc[keys[q]] = c.incidence[q];
  json j{{"patches", to_json(c.patches)}, {"b", c.b}, {"incidence", inc}};
  j["case"] = c.case_number ? json(c.case_number) : json(nullptr);
  return j;
}

std::string case_line(const ProfileCase& c) {
  return (c.case_number ? "case " + std::to_string(c.case_number) : std::string("unmatched")) +
         ": " + to_string(c.patches) + " b=" + std::to_string(c.b);
}

std::string decomposition_summary(const Decomposition& d) {
  const Profile p{d.shapes(0), d.shapes(1), d.shapes(2)};
  std::string s = to_string(d.manifold) + " (" + std::to_string(d.genera[0]) + "," +
                  std::to_string(d.genera[1]) + "," + std::to_string(d.genera[2]) +
                  ";" + std::to_string(d.b()) + ") " + to_string(p);
  if (auto m = identify_case(d)) s += " [" + to_string(m->id) + "]";
  return s;
}

std::string move_line(const MoveRecord& m) {
  switch (m.kind) {
    case MoveKind::type0:
      return "type0 H" + std::to_string(m.pair[0]) + ",H" + std::to_string(m.pair[1]);
    case MoveKind::type1:
      return "type1 H" + std::to_string(m.handlebody) + " loci " +
             std::to_string(m.locus_endpoints[0]) + "," + std::to_string(m.locus_endpoints[1]);
    case MoveKind::type1_destab:
      return "type1_destab H" + std::to_string(m.witness.handlebody) + " loci " +
             std::to_string(m.witness.loci[0]) + "," + std::to_string(m.witness.loci[1]);
  }
  return "";
}

json audit_rows(const ManifoldForm& m) {
  json rows = json::array();
  for (const auto& r : consistency_report(m))
    rows.push_back({{"manifold", to_json(m)},
                    {"name", to_string(m)},
                    {"case", to_json(r.id)},
                    {"theorem", r.theorem},
                    {"derived", r.derived}});
  return rows;
}

std::vector<ManifoldForm> lens_spaces_up_to(int max_p) {
  std::set<ManifoldForm> seen;
  for (int p = 2; p <= max_p; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) seen.insert(normalize(p, q));
  return {seen.begin(), seen.end()};
}

bool use_color(bool is_tty) {
  const char* env = std::getenv("HANDLE3_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return is_tty;
}

std::string paint(const std::string& s, const char* code, bool color) {
  return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

json envelope(const std::string& command, const std::vector<std::string>& warnings) {
  return {{"schema", kSchema}, {"command", command}, {"warnings", warnings}};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, bool is_tty) {
  CLI::App app{"Three-handlebody decompositions of the 3-sphere and lens spaces", "handle3"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "Machine-readable JSON output");

  Action action;
  std::string command;
  std::vector<CLI::App*> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    leaves.push_back(sub);
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };

  // lens
  auto* lens = group("lens", "Lens space arithmetic");
  long p1 = 0, q1 = 0, p2 = 0, q2 = 0;
  auto* l_norm = leaf(lens, "normalize", "Normal form of L(p,q)");
  l_norm->add_option("p", p1)->required();
  l_norm->add_option("q", q1)->required();
  l_norm->final_callback([&] {
    action = [&](Context&) {
      const auto m = normalize(p1, q1);
      return Output{{{"manifold", to_json(m)}, {"name", to_string(m)}}, to_string(m)};
    };
  });
  auto* l_homeo = leaf(lens, "homeo", "Are L(p,q) and L(p',q') homeomorphic");
  l_homeo->add_option("p", p1)->required();
  l_homeo->add_option("q", q1)->required();
  l_homeo->add_option("p2", p2)->required();
  l_homeo->add_option("q2", q2)->required();
  l_homeo->final_callback([&] {
    action = [&](Context&) {
      const auto a = normalize(p1, q1), b = normalize(p2, q2);
      const bool h = is_homeomorphic(a, b);
      return Output{{{"homeomorphic", h}, {"a", to_string(a)}, {"b", to_string(b)}}, yes_no(h)};
    };
  });
  auto* l_diff = leaf(lens, "diffeotopy", "Diffeotopy group of L(p,q)");
  l_diff->add_option("p", p1)->required();
  l_diff->add_option("q", q1)->required();
  l_diff->final_callback([&] {
    action = [&](Context&) {
      const auto m = normalize(p1, q1);
      const auto g = diffeotopy_group(m);
      return Output{{{"manifold", to_string(m)},
                     {"group", to_string(g.group)},
                     {"generator", to_string(g.generator)},
                     {"clause", g.clause}},
                    std::string(to_string(g.group)) + " (" + to_string(g.generator) + ")"};
    };
  });
  auto* l_core = leaf(lens, "core-criterion", "Are the two cores of L(p,q) isotopic");
  l_core->add_option("p", p1)->required();
  l_core->add_option("q", q1)->required();
  l_core->final_callback([&] {
    action = [&](Context&) {
      const auto m = normalize(p1, q1);
      const bool c = core_isotopy_criterion(m);
      return Output{{{"manifold", to_string(m)}, {"core_isotopic", c}}, yes_no(c)};
    };
  });

  // decomp
  auto* decomp = group("decomp", "Decompositions");
  std::string file, file2, manifold_str;
  std::vector<int> genera_v;
  int max_loci = 4, case_number = 0;
  bool explain = false;
  auto* d_val = leaf(decomp, "validate", "Check a decomposition JSON file");
  d_val->add_option("file", file)->required();
  d_val->final_callback([&] {
    action = [&](Context&) {
      const auto d = decomposition_from_json(read_json_file(file));
      const auto report = validate(d);
      json vs = json::array();
      std::vector<std::string> lines;
      for (const auto& v : report) {
        vs.push_back({{"rule", v.rule}, {"detail", v.detail}});
        lines.push_back(v.rule + ": " + v.detail);
      }
      json data{{"valid", report.empty()}, {"violations", vs}, {"decomposition", to_json(d)}};
      const auto m = identify_case(d);
      data["case"] = m ? to_json(m->id) : json(nullptr);
      std::string human = report.empty() ? "valid: " + decomposition_summary(d)
                                         : "invalid\n" + join(lines, "\n");
      return Output{data, human};
    };
  });
  auto* d_enum = leaf(decomp, "enumerate", "Enumerate the surviving patch profiles");
  d_enum->add_option("--genera", genera_v, "g1,g2,g3")->required()->delimiter(',');
  d_enum->add_option("--manifold", manifold_str, "s3 or p,q")->required();
  d_enum->add_option("--max-loci", max_loci, "Largest branch count")
      ->check(CLI::PositiveNumber);
  d_enum->add_flag("--explain", explain, "Also list pruned candidates and the rules that fired");
  d_enum->final_callback([&] {
    action = [&](Context& ctx) {
      const auto m = parse_manifold(manifold_str, ctx);
      const auto g = parse_genera(genera_v);
      const auto r = enumerate_profiles_explained(m, g, max_loci);
      json cases = json::array();
      std::vector<std::string> lines;
      for (const auto& c : r.cases) {
        cases.push_back(case_json(c));
        lines.push_back(case_line(c));
      }
      json data{{"manifold", to_json(m)}, {"genera", g}, {"max_loci", max_loci},
                {"cases", cases}};
      if (explain) {
        json pruned = json::array();
        for (const auto& c : r.pruned) {
          pruned.push_back({{"patches", to_json(c.patches)}, {"b", c.b}, {"rules", c.rules}});
          lines.push_back("pruned: " + to_string(c.patches) + " b=" + std::to_string(c.b) +
                          " by " + join(c.rules, ","));
        }
        data["pruned"] = pruned;
      }
      std::string head = std::to_string(r.cases.size()) + " case" +
                         (r.cases.size() == 1 ? "" : "s");
      lines.insert(lines.begin(), head);
      return Output{data, join(lines, "\n")};
    };
  });
  auto* d_fix = leaf(decomp, "fixture", "Standard decomposition for a classified case");
  d_fix->add_option("--genera", genera_v, "g1,g2,g3")->required()->delimiter(',');
  d_fix->add_option("--manifold", manifold_str, "s3 or p,q")->required();
  d_fix->add_option("--case", case_number, "Case number")->required();
  d_fix->final_callback([&] {
    action = [&](Context& ctx) {
      const auto m = parse_manifold(manifold_str, ctx);
      const auto d = standard_decomposition(m, CaseId{parse_genera(genera_v), case_number});
      return Output{{{"decomposition", to_json(d)}}, to_json(d).dump(2)};
    };
  });

  // moves
  auto* moves = group("moves", "Stabilization moves");
  auto* m_apply = leaf(moves, "apply", "Apply a move script");
  m_apply->add_option("decomposition", file)->required();
  m_apply->add_option("script", file2)->required();
  m_apply->final_callback([&] {
    action = [&](Context&) {
      const auto d = decomposition_from_json(read_json_file(file));
      const auto script = script_from_json(read_json_file(file2));
      const auto states = apply_script(d, script);
      json js = json::array();
      std::vector<std::string> lines;
      for (size_t k = 0; k < states.size(); ++k) {
        js.push_back(to_json(states[k]));
        lines.push_back(std::to_string(k) + ": " + decomposition_summary(states[k]));
      }
      return Output{{{"states", js}, {"decomposition", to_json(states.back())}},
                    join(lines, "\n")};
    };
  });
  auto* m_cand = leaf(moves, "candidates", "List destabilization witnesses");
  m_cand->add_option("decomposition", file)->required();
  m_cand->final_callback([&] {
    action = [&](Context& ctx) {
      const auto d = decomposition_from_json(read_json_file(file));
      const auto c = destabilization_candidates(d);
      json ws = json::array();
      std::vector<std::string> lines;
      for (const auto& w : c.witnesses) {
        ws.push_back(to_json(w));
        lines.push_back("H" + std::to_string(w.handlebody) + " loci " +
                        std::to_string(w.loci[0]) + "," + std::to_string(w.loci[1]));
      }
      for (int i : c.indeterminate)
        ctx.warnings.push_back("H" + std::to_string(i) + " has unknown curve classes");
      if (lines.empty()) lines.push_back(c.indeterminate.empty() ? "none" : "indeterminate");
      return Output{{{"witnesses", ws}, {"indeterminate", c.indeterminate}}, join(lines, "\n")};
    };
  });
  auto* m_red = leaf(moves, "reduce", "Greedy destabilization to a minimal decomposition");
  m_red->add_option("decomposition", file)->required();
  m_red->final_callback([&] {
    action = [&](Context&) {
      const auto d = decomposition_from_json(read_json_file(file));
      const auto r = stable_reduce(d);
      std::vector<std::string> lines;
      for (const auto& m : r.script) lines.push_back(move_line(m));
      lines.push_back("terminal: " + decomposition_summary(r.terminal));
      return Output{{{"decomposition", to_json(r.terminal)},
                     {"script", to_json(r.script)},
                     {"steps", r.script.size()}},
                    join(lines, "\n")};
    };
  });

  // classify
  auto* cls = group("classify", "Isotopy-class counts");
  std::string backend_str = "theorem";
  int max_p = 0;
  auto* c_count = leaf(cls, "count", "Isotopy classes of a classified case");
  c_count->add_option("--manifold", manifold_str, "s3 or p,q")->required();
  c_count->add_option("--genera", genera_v, "g1,g2,g3")->required()->delimiter(',');
  c_count->add_option("--case", case_number, "Case number")->required();
  c_count->add_option("--backend", backend_str, "theorem or derived")
      ->check(CLI::IsMember({"theorem", "derived"}));
  c_count->final_callback([&] {
    action = [&](Context& ctx) {
      const auto m = parse_manifold(manifold_str, ctx);
      const CaseId c{parse_genera(genera_v), case_number};
      const auto b = backend_str == "derived" ? Backend::derived : Backend::theorem;
      const auto r = isotopy_class_count(m, c, b);
      if (r.discrepancy_flag) ctx.warnings.push_back("theorem and derived backends disagree");
      json subs = json::array();
      for (const auto& s : derived_subcases(m, c))
        subs.push_back({{"label", s.label},
                        {"pattern", s.pattern ? json(to_string(*s.pattern)) : json(nullptr)},
                        {"side_swap", s.side_swap}});
      return Output{{{"manifold", to_json(m)},
                     {"case", to_json(c)},
                     {"count", r.count},
                     {"backend", to_string(r.backend)},
                     {"discrepancy", r.discrepancy_flag},
                     {"subcases", subs}},
                    std::to_string(r.count)};
    };
  });
  auto* c_audit = leaf(cls, "audit", "Cases where the two backends disagree");
  auto* audit_m = c_audit->add_option("--manifold", manifold_str, "s3 or p,q");
  c_audit->add_option("--max-p", max_p, "Audit every lens space with p up to this")
      ->check(CLI::PositiveNumber)
      ->excludes(audit_m);
  c_audit->final_callback([&] {
    action = [&](Context& ctx) {
      json rows = json::array();
      if (!manifold_str.empty()) {
        rows = audit_rows(parse_manifold(manifold_str, ctx));
      } else if (max_p > 0) {
        for (const auto& m : lens_spaces_up_to(max_p))
          for (auto& r : audit_rows(m)) rows.push_back(r);
      } else {
        throw UsageError{"audit needs --manifold or --max-p"};
      }
      std::vector<std::string> lines;
      for (const auto& r : rows)
        lines.push_back(r.at("name").get<std::string>() + " " +
                        r.at("case").at("name").get<std::string>() + ": theorem " +
                        std::to_string(r.at("theorem").get<int>()) + ", derived " +
                        std::to_string(r.at("derived").get<int>()));
      if (lines.empty()) lines.push_back("no disagreements");
      return Output{{{"disagreements", rows}}, join(lines, "\n")};
    };
  });
  auto* c_table = leaf(cls, "table", "Counts for every classified case");
  c_table->add_option("--max-p", max_p, "Largest p")->required()->check(CLI::PositiveNumber);
  c_table->final_callback([&] {
    action = [&](Context&) {
      auto ms = lens_spaces_up_to(max_p);
      ms.insert(ms.begin(), ManifoldForm::sphere3());
      json rows = json::array();
      std::vector<std::string> lines{"manifold,genera,case,theorem,derived"};
      for (const auto& m : ms)
        for (const auto& c : classified_cases()) {
          const int t = isotopy_class_count(m, c, Backend::theorem).count;
          const int d = isotopy_class_count(m, c, Backend::derived).count;
          rows.push_back({{"manifold", to_string(m)},
                          {"case", to_json(c)},
                          {"theorem", t},
                          {"derived", d}});
          lines.push_back(to_string(m) + "," + std::to_string(c.genera[0]) +
                          std::to_string(c.genera[1]) + std::to_string(c.genera[2]) + "," +
                          std::to_string(c.case_number) + "," + std::to_string(t) + "," +
                          std::to_string(d));
        }
      return Output{{{"rows", rows}}, join(lines, "\n")};
    };
  });

  CliResult res;
  const bool color = use_color(is_tty);
  const bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
  auto fail = [&](int code, const std::string& kind, const std::string& message,
                  const std::vector<std::string>& warnings) {
    res.exit_code = code;
    if (wants_json) {
      auto env = envelope(command, warnings);
      env["status"] = "error";
      env["error"] = {{"code", kind}, {"message", message}};
      res.out = env.dump(2) + "\n";
    } else {
      for (const auto& w : warnings) res.err += paint("warning:", "33", color) + " " + w + "\n";
      res.err += paint("error:", "31", color) + " " + kind + ": " + message + "\n";
    }
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    fail(2, "UsageError", e.what(), {});
    return res;
  }
  for (auto* l : leaves)
    if (l->parsed()) command = l->get_parent()->get_name() + " " + l->get_name();
  if (!action) {
    fail(2, "UsageError", "missing subcommand", {});
    return res;
  }

  Context ctx;
  try {
    auto out = action(ctx);
    if (json_out) {
      auto env = envelope(command, ctx.warnings);
      env["status"] = "ok";
      env["data"] = out.data;
      res.out = env.dump(2) + "\n";
    } else {
      for (const auto& w : ctx.warnings)
        res.err += paint("warning:", "33", color) + " " + w + "\n";
      res.out = out.human + "\n";
    }
  } catch (const UsageError& e) {
    fail(2, "UsageError", e.message, ctx.warnings);
  } catch (const IoError& e) {
    fail(1, "IOError", e.message, ctx.warnings);
  } catch (const Error& e) {
    fail(1, std::string(error_name(e.code())), e.what(), ctx.warnings);
  }
  return res;
}

}  // namespace handle3

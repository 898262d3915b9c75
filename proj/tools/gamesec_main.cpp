#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gamesec/laws.hpp"

using namespace gamesec;
using nlohmann::json;

namespace {

struct Session {
  std::string lattice_path;
  std::string bounds_text = "2,8";
  std::string format = "text";
  unsigned long long seed = 7;
  bool witness = false;

  Bounds bounds() const {
    Bounds b;
    if (std::sscanf(bounds_text.c_str(), "%d,%d", &b.copy_bound,
                    &b.max_len) != 2 ||
        b.copy_bound < 1 || b.max_len < 2 || b.max_len % 2 != 0)
      throw std::runtime_error("--bounds expects K,L with K >= 1 and L even");
    return b;
  }

  SecurityLattice lattice() const {
    if (lattice_path.empty()) return builtin_l4();
    return SecurityLattice::parse_file(lattice_path);
  }
};

void emit(const Session& s, const json& report, const std::string& text) {
  if (s.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

json play_json(const GameView& v, const Play& p) {
  json out = json::array();
  for (const std::string& t : play_tags(v, p)) out.push_back(t);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_lattice_validate(const Session& s, const std::string& path) {
  SecurityLattice lat = SecurityLattice::parse_file(path);
  json elems = json::array();
  for (LevelId l = 0; l < lat.size(); ++l) elems.push_back(lat.name(l));
  json rep{{"command", "lattice validate"},
           {"file", path},
           {"valid", true},
           {"elements", elems},
           {"bottom", lat.name(lat.bottom())},
           {"fingerprint", lat.fingerprint()}};
  std::ostringstream t;
  t << "valid join-semilattice: " << lat.size() << " elements, bottom "
    << lat.name(lat.bottom()) << "\n";
  emit(s, rep, t.str());
  return 0;
}

int cmd_type_level(const Session& s, const std::string& type_text) {
  SecurityLattice lat = s.lattice();
  TypePtr t = parse_type(type_text, lat);
  json levels = json::array();
  std::ostringstream txt;
  txt << "Level(" << show_type(t, lat) << ") = {";
  bool first = true;
  for (LevelId l : level_of_type(t, lat)) {
    levels.push_back(lat.name(l));
    txt << (first ? "" : ", ") << lat.name(l);
    first = false;
  }
  txt << "}\n";
  json rep{{"command", "type level"},
           {"type", show_type(t, lat)},
           {"levels", levels}};
  emit(s, rep, txt.str());
  return 0;
}

int cmd_flow_check(const Session& s, const std::string& from,
                   const std::string& to, const std::string& context) {
  SecurityLattice lat = s.lattice();
  Bounds bd = s.bounds();
  TypePtr a = parse_type(from, lat), b = parse_type(to, lat);
  FlowVerdict v = no_flow(a, b, bd, lat);
  json rep{{"command", "flow check"},
           {"from", show_type(a, lat)},
           {"to", show_type(b, lat)},
           {"bounds", {{"copy_bound", bd.copy_bound}, {"max_len", bd.max_len}}},
           {"no_flow", v.no_flow}};
  std::ostringstream txt;
  txt << show_type(a, lat) << (v.no_flow ? " -/-> " : " --> ")
      << show_type(b, lat) << (v.no_flow ? " (no flow)" : " (flow possible)")
      << "\n";
  if (v.witness && s.witness) {
    const GameView& wv = v.witness->view();
    json plays = json::array();
    for (const Play& p : v.witness->plays) plays.push_back(play_json(wv, p));
    rep["witness"] = {{"game", show_type(v.witness->game, lat)},
                      {"plays", plays}};
    for (const Play& p : v.witness->plays)
      if (!p.empty()) txt << "  witness play: " << play_str(wv, p) << "\n";
  }
  if (!context.empty()) {
    // Demonstration: exhaust the strategies on (A (x) C) -o B and report
    // whether any of them moves in A.
    TypePtr cx = parse_type(context, lat);
    TypePtr g = limp(tensor(a, cx), b);
    int moving = 0, total = 0;
    for (const Strategy& st : enumerate_strategies(g, bd, lat)) {
      ++total;
      moving += moves_in_component(st, Component::A);
    }
    rep["context"] = {{"type", show_type(cx, lat)},
                      {"strategies", total},
                      {"moving_in_source", moving}};
    txt << "  context " << show_type(cx, lat) << ": " << moving << " of "
        << total << " strategies move in the source\n";
  }
  emit(s, rep, txt.str());
  return v.no_flow ? 0 : 1;
}

int cmd_dcc(const Session& s, const std::string& mode,
            const std::string& path) {
  SecurityLattice lat = s.lattice();
  Bounds bd = s.bounds();
  Program p = parse_program(read_file(path), lat);
  if (mode == "nocheck") {
    std::vector<Directive> kept;
    for (const Directive& d : p.directives)
      if (d.k == Directive::K::NonInterference) kept.push_back(d);
    p.directives = std::move(kept);
  }
  bool deep = mode == "run";
  std::vector<DirectiveResult> rs = run_program(p, bd, lat, deep);
  json items = json::array();
  std::ostringstream txt;
  bool all_ok = true;
  for (const DirectiveResult& r : rs) {
    all_ok = all_ok && r.ok;
    items.push_back({{"line", r.line},
                     {"kind", r.kind},
                     {"ok", r.ok},
                     {"message", r.message}});
    txt << (r.ok ? "ok  " : "FAIL") << "  line " << r.line << "  " << r.kind
        << ": " << r.message << "\n";
  }
  json rep{{"command", "dcc " + mode},
           {"file", path},
           {"deep", deep},
           {"bounds", {{"copy_bound", bd.copy_bound}, {"max_len", bd.max_len}}},
           {"ok", all_ok},
           {"directives", items}};
  emit(s, rep, txt.str());
  return all_ok ? 0 : 1;
}

int cmd_laws(const Session& s) {
  Bounds bd = s.bounds();
  std::vector<LawReport> reports = run_all_laws(s.seed, bd, builtin_l4());
  json rep = laws_json(reports);
  rep["command"] = "laws test";
  rep["seed"] = s.seed;
  rep["bounds"] = {{"copy_bound", bd.copy_bound}, {"max_len", bd.max_len}};
  std::ostringstream txt;
  int failures = 0;
  for (const LawReport& r : reports) {
    int inc = 0;
    for (const LawCase& c : r.cases) inc += c.verdict == "inconclusive";
    failures += r.failures();
    txt << r.suite << ": " << r.cases.size() << " cases, " << r.failures()
        << " failures, " << inc << " inconclusive\n";
    for (const LawCase& c : r.cases)
      if (c.verdict == "fail")
        txt << "  FAIL " << c.law << " [" << c.objects << "] " << c.witness
            << "\n";
  }
  txt << (failures == 0 ? "all suites pass\n" : "failures detected\n");
  emit(s, rep, txt.str());
  return failures == 0 ? 0 : 1;
}

int cmd_trace(const Session& s, const std::string& ta, const std::string& tb,
              const std::string& tc, int si, int ti) {
  SecurityLattice lat = s.lattice();
  Bounds bd = s.bounds();
  TypePtr a = parse_type(ta, lat), b = parse_type(tb, lat),
          c = parse_type(tc, lat);
  std::vector<Strategy> ss = enumerate_strategies(limp(a, b), bd, lat, si + 1);
  std::vector<Strategy> ts = enumerate_strategies(limp(b, c), bd, lat, ti + 1);
  if (si >= static_cast<int>(ss.size()) || ti >= static_cast<int>(ts.size()))
    throw std::runtime_error("strategy index out of range for these games");
  const Strategy &sigma = ss[si], &tau = ts[ti];
  std::vector<std::vector<std::string>> traces =
      interaction_traces(sigma, tau);
  Strategy comp = compose(sigma, tau);
  const GameView& ev = comp.view();
  json jt = json::array();
  std::ostringstream txt;
  txt << "interactions of sigma[" << si << "] : " << show_type(sigma.game, lat)
      << " with tau[" << ti << "] : " << show_type(tau.game, lat) << "\n";
  for (const std::vector<std::string>& tr : traces) {
    json row = json::array();
    txt << "  ";
    for (size_t i = 0; i < tr.size(); ++i) {
      row.push_back(tr[i]);
      txt << (i ? " . " : "") << tr[i];
    }
    txt << "\n";
    jt.push_back(std::move(row));
  }
  json plays = json::array();
  txt << "after hiding, on " << show_type(comp.game, lat) << ":\n";
  for (const Play& p : comp.plays) {
    plays.push_back(play_json(ev, p));
    txt << "  " << (p.empty() ? "(empty)" : play_str(ev, p)) << "\n";
  }
  json rep{{"command", "trace"},
           {"bounds", {{"copy_bound", bd.copy_bound}, {"max_len", bd.max_len}}},
           {"interactions", jt},
           {"composite", plays},
           {"truncated", comp.truncated}};
  emit(s, rep, txt.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gamesec: justified games with security levels - strategies, "
      "information flow, and a core dependency calculus"};
  app.require_subcommand(1);
  Session s;
  app.add_option("--lattice", s.lattice_path,
                 "Security lattice file (default: built-in 4-point lattice)");
  app.add_option("--bounds", s.bounds_text, "Copy bound and play length: K,L");
  app.add_option("--format", s.format, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", s.seed, "Corpus seed for the law suites");
  app.add_flag("--witness", s.witness, "Include witness plays in reports");

  auto* lattice = app.add_subcommand("lattice", "Lattice file operations");
  std::string lat_file;
  auto* validate = lattice->add_subcommand("validate", "Validate a lattice");
  validate->add_option("file", lat_file, "Lattice file")->required();

  auto* type = app.add_subcommand("type", "Type-level queries");
  std::string type_text;
  auto* level = type->add_subcommand("level", "Initial levels of a type");
  level->add_option("type", type_text, "Game type")->required();

  auto* flow = app.add_subcommand("flow", "Information-flow analysis");
  std::string from_text, to_text, ctx_text;
  auto* fcheck = flow->add_subcommand("check", "Decide the no-flow relation");
  fcheck->add_option("--from", from_text, "Source type")->required();
  fcheck->add_option("--to", to_text, "Target type")->required();
  fcheck->add_option("--context", ctx_text,
                     "Context type C for the (A (x) C) -o B demonstration");

  auto* dcc = app.add_subcommand("dcc", "Dependency-calculus programs");
  std::string dcc_file_check, dcc_file_run, dcc_file_nocheck;
  dcc->add_subcommand("check", "Typecheck and normalize directives")
      ->add_option("file", dcc_file_check, "Program file")
      ->required();
  dcc->add_subcommand("run", "Typecheck with semantic verification")
      ->add_option("file", dcc_file_run, "Program file")
      ->required();
  dcc->add_subcommand("nocheck", "Non-interference directives only")
      ->add_option("file", dcc_file_nocheck, "Program file")
      ->required();

  auto* laws = app.add_subcommand("laws", "Law and property suites");
  laws->add_subcommand("test", "Run all suites on the built-in lattice");

  auto* trace = app.add_subcommand(
      "trace", "Print strategy interactions before hiding");
  std::string tr_a, tr_b, tr_c;
  int tr_si = 0, tr_ti = 0;
  trace->add_option("A", tr_a, "Domain type of sigma")->required();
  trace->add_option("B", tr_b, "Shared middle type")->required();
  trace->add_option("C", tr_c, "Codomain type of tau")->required();
  trace->add_option("--sigma", tr_si, "Index of sigma among enumerated");
  trace->add_option("--tau", tr_ti, "Index of tau among enumerated");

  // Session options like --lattice may appear after a subcommand name;
  // let unmatched options fall through to the main app at any depth.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands(
             [](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);
  try {
    if (validate->parsed()) return cmd_lattice_validate(s, lat_file);
    if (level->parsed()) return cmd_type_level(s, type_text);
    if (fcheck->parsed())
      return cmd_flow_check(s, from_text, to_text, ctx_text);
    if (dcc->parsed()) {
      if (dcc->get_subcommand("check")->parsed())
        return cmd_dcc(s, "check", dcc_file_check);
      if (dcc->get_subcommand("run")->parsed())
        return cmd_dcc(s, "run", dcc_file_run);
      if (dcc->get_subcommand("nocheck")->parsed())
        return cmd_dcc(s, "nocheck", dcc_file_nocheck);
    }
    if (laws->parsed()) return cmd_laws(s);
    if (trace->parsed())
      return cmd_trace(s, tr_a, tr_b, tr_c, tr_si, tr_ti);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

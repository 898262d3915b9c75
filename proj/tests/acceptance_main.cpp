// Acceptance gate: one line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gamesec/laws.hpp"

using namespace gamesec;

namespace {

int g_failures = 0;

void report(int n, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << "criterion " << n << " (" << what << "): "
            << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

void check(int n, const std::string& what,
           const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    report(n, what, ok, detail);
  } catch (const std::exception& e) {
    report(n, what, false, e.what());
  }
}

std::string summarize(const LawReport& r) {
  std::ostringstream ss;
  ss << r.failures() << " failures in " << r.cases.size() << " cases";
  for (const LawCase& c : r.cases)
    if (c.verdict == "fail") {
      ss << "; first: " << c.law << " [" << c.objects << "] " << c.witness;
      break;
    }
  return ss.str();
}

int conclusive(const LawReport& r) {
  int n = 0;
  for (const LawCase& c : r.cases) n += c.verdict == "pass";
  return n;
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot run: " + cmd);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  if (pclose(p) != 0) throw std::runtime_error("command failed: " + cmd);
  return out;
}

std::string data_path(const std::string& name) {
  return std::string(GAMESEC_TEST_DATA) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const SecurityLattice& lat = builtin_l4();
  Bounds bd{2, 8};
  Corpus corpus = make_corpus(7, lat);

  check(1, "category laws on the generated corpus", [&] {
    if (static_cast<int>(corpus.types.size()) < 30)
      return std::make_pair(false, std::string("corpus too small"));
    LawReport r = suite_category(corpus, bd, lat);
    bool ok = r.failures() == 0 && conclusive(r) > 0;
    return std::make_pair(ok, summarize(r));
  });

  check(2, "skeleton round-trips and preorder agreement", [&] {
    LawReport r = suite_skeleton(corpus, bd, lat);
    bool ok = r.failures() == 0 && conclusive(r) > 0;
    return std::make_pair(ok, summarize(r));
  });

  check(3, "level-monad structural equalities", [&] {
    LawReport r = suite_monad(corpus, bd, lat);
    bool ok = r.failures() == 0 && conclusive(r) > 0;
    return std::make_pair(ok, summarize(r));
  });

  check(4, "no-flow in both directions over corpus pairs", [&] {
    LawReport r = suite_noflow(corpus, lat);
    bool witnessed = false, sound = false;
    for (const LawCase& c : r.cases) {
      witnessed |= c.law == "noflow-witness" && c.verdict == "pass";
      sound |= c.law == "noflow-sound" && c.verdict == "pass";
    }
    bool ok = r.failures() == 0 && witnessed && sound;
    return std::make_pair(ok, summarize(r));
  });

  check(5, "no natural transformation between incomparable monads", [&] {
    LawReport r = suite_naturality(bd, lat);
    // The suite enumerates every candidate component on
    // T_a Nat -o T_b Nat and refutes the naturality square for each.
    int refuted = 0;
    for (const LawCase& c : r.cases)
      refuted += c.law == "square-refuted" && c.verdict == "pass";
    bool ok = r.failures() == 0 && refuted > 0;
    return std::make_pair(ok, summarize(r));
  });

  check(6, "erasure preserves bounded totality", [&] {
    LawReport r = suite_erasure(corpus, bd, lat);
    bool ok = r.failures() == 0 && conclusive(r) > 0;
    return std::make_pair(ok, summarize(r));
  });

  check(7, "deletion example end to end", [&] {
    SecurityLattice chain =
        SecurityLattice::parse_file(data_path("example1.lat"));
    Program p = parse_program(slurp(data_path("example1.dcc")), chain);
    auto rs = run_program(p, bd, chain, false);
    bool all_ok = !rs.empty();
    for (const auto& r : rs) all_ok = all_ok && r.ok;
    if (!all_ok)
      return std::make_pair(false, std::string("chain lattice run failed"));
    // The normal form is a closed proof of dfile from the assumptions.
    TermPtr nf;
    for (const Directive& d : p.directives)
      if (d.k == Directive::K::Normalize) nf = normalize(d.term);
    if (!nf || free_vars(nf) !=
                   std::set<std::string>({"auth", "deleg", "req"}))
      return std::make_pair(false,
                            std::string("normal form uses the wrong set of "
                                        "assumptions"));
    SecurityLattice mutated =
        SecurityLattice::parse_file(data_path("example1_mutated.lat"));
    Program pm = parse_program(slurp(data_path("example1.dcc")), mutated);
    auto rsm = run_program(pm, bd, mutated, false);
    for (const auto& r : rsm)
      if (!r.ok && r.message.find("not protected") != std::string::npos &&
          r.message.find("admin") != std::string::npos &&
          r.message.find("bob") != std::string::npos)
        return std::make_pair(true, std::string());
    return std::make_pair(
        false, std::string("mutated lattice did not raise the protection "
                           "error naming the levels"));
  });

  check(8, "syntactic freeness matches semantic movement", [&] {
    LawReport r = suite_noninterference(bd, lat);
    bool ok = r.failures() == 0 &&
              static_cast<int>(r.cases.size()) >= 30;
    return std::make_pair(ok, summarize(r));
  });

  check(9, "law reports are byte-identical across runs", [&] {
    const char* bin = std::getenv("GAMESEC_BIN");
    if (bin) {
      std::string cmd =
          std::string(bin) + " --seed 7 --format json laws test";
      std::string a = run_capture(cmd), b = run_capture(cmd);
      return std::make_pair(!a.empty() && a == b,
                            std::string("CLI outputs differ"));
    }
    std::string a = laws_json(run_all_laws(7, bd, lat)).dump(2);
    std::string b = laws_json(run_all_laws(7, bd, lat)).dump(2);
    return std::make_pair(a == b, std::string("reports differ"));
  });

  return g_failures == 0 ? 0 : 1;
}

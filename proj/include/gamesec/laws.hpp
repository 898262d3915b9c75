#pragma once

#include "gamesec/dcc.hpp"
#include "json.hpp"

namespace gamesec {

/// Four-point lattice bot < a,b < top with a,b incomparable; the default
/// setting for the law and property suites.
const SecurityLattice& builtin_l4();

struct LawCase {
  std::string law;
  std::string objects;
  std::string verdict;  // pass | fail | inconclusive
  std::string witness;
};

struct LawReport {
  std::string suite;
  Bounds bounds;
  unsigned long long seed = 0;
  std::vector<LawCase> cases;

  int failures() const;
  nlohmann::json to_json() const;
};

/// Seeded corpus of small game types over the L4 lattice (flat arity
/// <= 2, constructor depth <= 3), plus the strategy samples the suites
/// draw from.
struct Corpus {
  unsigned long long seed = 0;
  std::vector<TypePtr> types;
};

Corpus make_corpus(unsigned long long seed, const SecurityLattice& lat,
                   int min_types = 32);

LawReport suite_category(const Corpus& c, Bounds bd,
                         const SecurityLattice& lat);
LawReport suite_skeleton(const Corpus& c, Bounds bd,
                         const SecurityLattice& lat);
LawReport suite_comonad(const Corpus& c, Bounds bd,
                        const SecurityLattice& lat);
LawReport suite_monad(const Corpus& c, Bounds bd, const SecurityLattice& lat);
LawReport suite_naturality(Bounds bd, const SecurityLattice& lat);
LawReport suite_noflow(const Corpus& c, const SecurityLattice& lat);
LawReport suite_erasure(const Corpus& c, Bounds bd,
                        const SecurityLattice& lat);
LawReport suite_noninterference(Bounds bd, const SecurityLattice& lat);

/// All eight suites over a fresh corpus; deterministic given the seed.
std::vector<LawReport> run_all_laws(unsigned long long seed, Bounds bd,
                                    const SecurityLattice& lat);

nlohmann::json laws_json(const std::vector<LawReport>& reports);

}  // namespace gamesec

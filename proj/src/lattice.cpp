#include "gamesec/lattice.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace gamesec {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

const std::string& SecurityLattice::name(LevelId l) const {
  if (l < 0 || l >= size()) throw LatticeError("level id out of range");
  return names_[l];
}

LevelId SecurityLattice::level(const std::string& id) const {
  auto r = find(id);
  if (!r) throw LatticeError("unknown lattice element: " + id);
  return *r;
}

std::optional<LevelId> SecurityLattice::find(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == id) return i;
  return std::nullopt;
}

LevelId SecurityLattice::join(LevelId a, LevelId b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    throw LatticeError("level id out of range");
  return at(a, b);
}

SecurityLattice SecurityLattice::parse(const std::string& text) {
  SecurityLattice lat;
  std::optional<std::string> bottom_name;
  struct JoinDecl {
    std::string a, b, r;
    int line;
  };
  std::vector<JoinDecl> joins;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "elements:") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (lat.find(toks[i]))
          throw LatticeError("line " + std::to_string(lineno) +
                             ": duplicate element " + toks[i]);
        lat.names_.push_back(toks[i]);
      }
    } else if (head == "bottom:") {
      if (toks.size() != 2)
        throw LatticeError("line " + std::to_string(lineno) +
                           ": expected `bottom: <id>`");
      bottom_name = toks[1];
    } else if (head == "join:") {
      if (toks.size() != 5 || toks[3] != "=")
        throw LatticeError("line " + std::to_string(lineno) +
                           ": expected `join: <id> <id> = <id>`");
      joins.push_back({toks[1], toks[2], toks[4], lineno});
    } else {
      throw LatticeError("line " + std::to_string(lineno) +
                         ": unknown directive " + head);
    }
  }

  if (lat.names_.empty()) throw LatticeError("no elements declared");
  if (!bottom_name) throw LatticeError("missing bottom declaration");
  lat.bottom_ = lat.level(*bottom_name);

  const int n = lat.size();
  lat.table_.assign(n * n, -1);
  auto set = [&](LevelId a, LevelId b, LevelId r, int lineno) {
    LevelId& cell = lat.table_[a * n + b];
    if (cell != -1 && cell != r) {
      std::string where =
          lineno ? " (line " + std::to_string(lineno) + ")" : "";
      throw LatticeError("commutativity error: contradictory entries for " +
                         lat.names_[a] + " join " + lat.names_[b] + where);
    }
    cell = r;
  };
  // Implied joins: idempotence and the bottom unit.
  for (int i = 0; i < n; ++i) {
    set(i, i, i, 0);
    set(lat.bottom_, i, i, 0);
    set(i, lat.bottom_, i, 0);
  }
  for (const auto& j : joins) {
    LevelId a = lat.level(j.a), b = lat.level(j.b), r = lat.level(j.r);
    set(a, b, r, j.line);
    set(b, a, r, j.line);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lat.table_[a * n + b] == -1)
        throw LatticeError("non-total join table: no entry for " +
                           lat.names_[a] + " join " + lat.names_[b]);
  {
    std::string fp;
    for (const auto& nm : lat.names_) fp += nm + ",";
    fp += "|" + std::to_string(lat.bottom_) + "|";
    for (LevelId v : lat.table_) fp += std::to_string(v) + ",";
    lat.fingerprint_ = std::move(fp);
  }
  return lat;
}

SecurityLattice SecurityLattice::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LatticeError("cannot open lattice file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<std::string> SecurityLattice::law_violations() const {
  std::vector<std::string> out;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    if (at(a, a) != a)
      out.push_back("idempotence fails: " + names_[a] + " join " + names_[a] +
                    " = " + names_[at(a, a)]);
    if (at(bottom_, a) != a)
      out.push_back("bottom is not a unit at " + names_[a]);
    for (int b = 0; b < n; ++b) {
      if (at(a, b) != at(b, a))
        out.push_back("commutativity fails at (" + names_[a] + ", " +
                      names_[b] + ")");
      for (int c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c)))
          out.push_back("associativity fails at (" + names_[a] + ", " +
                        names_[b] + ", " + names_[c] + ")");
      }
    }
  }
  return out;
}

}  // namespace gamesec

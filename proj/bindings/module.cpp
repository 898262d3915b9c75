#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gamesec/laws.hpp"

namespace py = pybind11;
using namespace gamesec;

namespace {

using LatPtr = std::shared_ptr<SecurityLattice>;

/// Value wrapper: pybind11 holders cannot own pointer-to-const directly.
struct PyType {
  TypePtr t;
};

/// Strategies reference their lattice by pointer; the Python wrapper
/// keeps the owning handle alive alongside the carrier.
struct PyStrategy {
  LatPtr lat;
  Strategy s;

  std::vector<std::vector<std::string>> plays() const {
    std::vector<std::vector<std::string>> out;
    for (const Play& p : s.plays) out.push_back(play_tags(s.view(), p));
    return out;
  }
};

PyStrategy wrap(LatPtr lat, Strategy s) { return {std::move(lat), std::move(s)}; }

PyType ty(TypePtr t) { return {std::move(t)}; }

}  // namespace

PYBIND11_MODULE(_gamesec, m) {
  m.doc() =
      "Justified games with security levels: strategies, composition, "
      "information flow, and a core dependency calculus.";

  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<MembershipError>(m, "MembershipError");
  py::register_exception<CoercionError>(m, "CoercionError");
  py::register_exception<ProtectionError>(m, "ProtectionError");
  py::register_exception<TypeError>(m, "DccTypeError");

  py::class_<SecurityLattice, LatPtr>(m, "SecurityLattice")
      .def_static(
          "parse",
          [](const std::string& text) {
            return std::make_shared<SecurityLattice>(
                SecurityLattice::parse(text));
          },
          py::arg("text"))
      .def_static(
          "parse_file",
          [](const std::string& path) {
            return std::make_shared<SecurityLattice>(
                SecurityLattice::parse_file(path));
          },
          py::arg("path"))
      .def("__len__", &SecurityLattice::size)
      .def("name", &SecurityLattice::name)
      .def("find", &SecurityLattice::find)
      .def("bottom", &SecurityLattice::bottom)
      .def("leq", &SecurityLattice::leq)
      .def("join", &SecurityLattice::join)
      .def_property_readonly("fingerprint", &SecurityLattice::fingerprint);

  m.def("builtin_l4",
        [] { return std::make_shared<SecurityLattice>(builtin_l4()); });

  py::class_<Bounds>(m, "Bounds")
      .def(py::init([](int k, int L) { return Bounds{k, L}; }),
           py::arg("copy_bound") = 2, py::arg("max_len") = 8)
      .def_readwrite("copy_bound", &Bounds::copy_bound)
      .def_readwrite("max_len", &Bounds::max_len);

  py::class_<PyType>(m, "GameType")
      .def("__eq__", [](const PyType& a, const PyType& b) {
        return type_equal(a.t, b.t);
      })
      .def("key", [](const PyType& a) { return a.t->key(); });

  m.def(
      "flat",
      [](const std::string& name, int arity, LevelId level) {
        return ty(flat(name, arity, level));
      },
      py::arg("name"), py::arg("arity"), py::arg("level"));
  m.def("unit_type", [] { return ty(unit_type()); });
  m.def("tensor", [](const PyType& a, const PyType& b) {
    return ty(tensor(a.t, b.t));
  });
  m.def("with_", [](const PyType& a, const PyType& b) {
    return ty(with(a.t, b.t));
  });
  m.def("limp", [](const PyType& a, const PyType& b) {
    return ty(limp(a.t, b.t));
  });
  m.def("bang", [](const PyType& a) { return ty(bang(a.t)); });
  m.def("monad", [](LevelId l, const PyType& a) { return ty(monad(l, a.t)); });
  m.def("arrow", [](const PyType& a, const PyType& b) {
    return ty(arrow(a.t, b.t));
  });
  m.def(
      "parse_type",
      [](const std::string& text, const LatPtr& lat) {
        return ty(parse_type(text, *lat));
      },
      py::arg("text"), py::arg("lattice"));
  m.def("show_type", [](const PyType& t, const LatPtr& lat) {
    return show_type(t.t, *lat);
  });
  m.def("normalize_monads", [](const PyType& t, const LatPtr& lat) {
    return ty(normalize_monads(t.t, *lat));
  });
  m.def("erase_type", [](const PyType& t, LevelId l, const LatPtr& lat) {
    return ty(erase_type(t.t, l, *lat));
  });
  m.def("level_of_type", [](const PyType& t, const LatPtr& lat) {
    std::vector<std::string> out;
    for (LevelId l : level_of_type(t.t, *lat)) out.push_back(lat->name(l));
    return out;
  });
  m.def("rhd", [](const PyType& a, const PyType& b, const LatPtr& lat) {
    return rhd(a.t, b.t, *lat);
  });

  m.def(
      "moves",
      [](const PyType& t, int k, const LatPtr& lat) {
        const GameView& v = denote(t.t, k, *lat);
        std::vector<py::dict> out;
        for (const MoveInfo& mi : v.moves) {
          py::dict d;
          d["tag"] = mi.tag->str();
          d["polarity"] = mi.pol == Pol::O ? "O" : "P";
          d["kind"] = mi.kind == Kind::Q ? "Q" : "A";
          d["level"] = lat->name(mi.level);
          d["justifier"] =
              mi.justifier < 0
                  ? py::object(py::none())
                  : py::object(py::str(v.moves[mi.justifier].tag->str()));
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("type"), py::arg("copy_bound"), py::arg("lattice"));

  m.def(
      "enumerate_plays",
      [](const PyType& t, int max_len, int k, const LatPtr& lat) {
        const GameView& v = denote(t.t, k, *lat);
        std::vector<std::vector<std::string>> out;
        for (const Play& p : enumerate_plays(t.t, max_len, k, *lat))
          out.push_back(play_tags(v, p));
        return out;
      },
      py::arg("type"), py::arg("max_len"), py::arg("copy_bound"),
      py::arg("lattice"));

  m.def(
      "validate_play",
      [](const PyType& t, int k, const LatPtr& lat,
         const std::vector<std::string>& tags) {
        const GameView& v = denote(t.t, k, *lat);
        Play p = play_from_tags(v, tags);
        std::vector<std::string> out;
        for (const PlayDiagnostic& d : validate_play(t.t, k, *lat, p))
          out.push_back(d.reason);
        return out;
      },
      py::arg("type"), py::arg("copy_bound"), py::arg("lattice"),
      py::arg("tags"));

  py::class_<PyStrategy>(m, "Strategy")
      .def_property_readonly(
          "game", [](const PyStrategy& s) { return ty(s.s.game); })
      .def_property_readonly(
          "truncated", [](const PyStrategy& s) { return s.s.truncated; })
      .def_property_readonly("plays", &PyStrategy::plays)
      .def("__len__",
           [](const PyStrategy& s) { return s.s.plays.size(); });

  m.def(
      "strategy",
      [](const PyType& game, const Bounds& bd, const LatPtr& lat,
         const std::vector<std::vector<std::string>>& plays) {
        return wrap(lat, strategy_from_tags(game.t, bd, *lat, plays));
      },
      py::arg("game"), py::arg("bounds"), py::arg("lattice"),
      py::arg("plays"));
  m.def("copycat", [](const PyType& t, const Bounds& bd, const LatPtr& lat) {
    return wrap(lat, copycat(t.t, bd, *lat));
  });
  m.def("is_strategy", [](const PyStrategy& s) {
    Verdict v = is_strategy(s.s);
    return py::make_tuple(v.ok, v.law);
  });
  m.def("is_skeleton", [](const PyStrategy& s) {
    Verdict v = is_skeleton(s.s);
    return py::make_tuple(v.ok, v.law);
  });
  m.def("saturate",
        [](const PyStrategy& s) { return wrap(s.lat, saturate(s.s)); });
  m.def("extract_skeleton", [](const PyStrategy& s) {
    return wrap(s.lat, extract_skeleton(s.s));
  });
  m.def("compose", [](const PyStrategy& a, const PyStrategy& b) {
    return wrap(a.lat, compose(a.s, b.s));
  });
  m.def("tensor_strategy", [](const PyStrategy& a, const PyStrategy& b) {
    return wrap(a.lat, tensor_strategy(a.s, b.s));
  });
  m.def("promote",
        [](const PyStrategy& s) { return wrap(s.lat, promote(s.s)); });
  m.def("counit", [](const PyType& t, const Bounds& bd, const LatPtr& lat) {
    return wrap(lat, counit(t.t, bd, *lat));
  });
  m.def("unit_eta",
        [](LevelId l, const PyType& t, const Bounds& bd, const LatPtr& lat) {
          return wrap(lat, unit_eta(l, t.t, bd, *lat));
        });
  m.def("coerce",
        [](LevelId l, LevelId lp, const PyType& t, const Bounds& bd,
           const LatPtr& lat) {
          return wrap(lat, coerce(l, lp, t.t, bd, *lat));
        });
  m.def(
      "enumerate_strategies",
      [](const PyType& t, const Bounds& bd, const LatPtr& lat,
         int max_results) {
        std::vector<PyStrategy> out;
        for (Strategy& s : enumerate_strategies(t.t, bd, *lat, max_results))
          out.push_back(wrap(lat, std::move(s)));
        return out;
      },
      py::arg("type"), py::arg("bounds"), py::arg("lattice"),
      py::arg("max_results") = 1 << 30);

  m.def(
      "no_flow",
      [](const PyType& a, const PyType& b, const Bounds& bd,
         const LatPtr& lat) {
        FlowVerdict v = no_flow(a.t, b.t, bd, *lat);
        py::dict d;
        d["no_flow"] = v.no_flow;
        if (v.witness) {
          std::vector<std::vector<std::string>> ws;
          for (const Play& p : v.witness->plays)
            ws.push_back(play_tags(v.witness->view(), p));
          d["witness"] = ws;
        }
        return d;
      },
      py::arg("from_type"), py::arg("to_type"), py::arg("bounds"),
      py::arg("lattice"));

  m.def(
      "dcc_run",
      [](const std::string& text, const Bounds& bd, const LatPtr& lat,
         bool deep) {
        Program p = parse_program(text, *lat);
        std::vector<py::dict> out;
        for (const DirectiveResult& r : run_program(p, bd, *lat, deep)) {
          py::dict d;
          d["line"] = r.line;
          d["kind"] = r.kind;
          d["ok"] = r.ok;
          d["message"] = r.message;
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("text"), py::arg("bounds"), py::arg("lattice"),
      py::arg("deep") = false);

  m.def(
      "dcc_normalize",
      [](const std::string& term, const LatPtr& lat) {
        return show_term(normalize(parse_term(term, *lat)), *lat);
      },
      py::arg("term"), py::arg("lattice"));

  m.def(
      "laws",
      [](unsigned long long seed, const Bounds& bd) {
        return laws_json(run_all_laws(seed, bd, builtin_l4())).dump(2);
      },
      py::arg("seed") = 7, py::arg("bounds") = Bounds{});
}

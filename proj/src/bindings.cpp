#include "ietlab/revfact.hpp"
#include "ietlab/saf.hpp"
#include "ietlab/workspace.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ietlab;

namespace {

Word word_from_pairs(const std::vector<std::pair<std::string, int>>& pairs) {
  Word w;
  for (const auto& [name, e] : pairs) w.push_back({name, e});
  return w;
}

py::dict factorization_dict(const FactorizationResult& r) {
  py::dict d;
  d["factors"] = r.factors;
  d["orders"] = r.factor_orders;
  d["kind"] = r.kind == FactorKind::Involutions ? "involutions" : "periodic";
  d["recomposition_checked"] = r.recomposition_checked;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ietlab, m) {
  m.doc() = "exact interval exchange transformations";

  static py::exception<Error> exc(m, "IetLabError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<SymbolTable>(m, "SymbolTable")
      .def(py::init<>())
      .def("register_symbol", &SymbolTable::register_symbol, py::arg("name"),
           py::arg("witness"))
      .def("size", &SymbolTable::size)
      .def("scalar",
           [](const SymbolTable& t, const std::string& text) {
             return Scalar::parse(t, text);
           },
           "Parse a scalar expression such as '1/4 - alpha'.");

  py::class_<Scalar>(m, "Scalar")
      .def("__str__", &Scalar::to_string)
      .def("__repr__",
           [](const Scalar& s) { return "Scalar(" + s.to_string() + ")"; })
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("__lt__", [](const Scalar& a, const Scalar& b) { return a < b; })
      .def("__le__", [](const Scalar& a, const Scalar& b) { return a <= b; })
      .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
      .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
      .def("__neg__", [](const Scalar& a) { return -a; })
      .def("is_rational", &Scalar::is_rational);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("parse", &Permutation::parse, py::arg("text"),
                  py::arg("n_hint") = -1)
      .def("__str__", &Permutation::to_string)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("cycles", &Permutation::to_cycle_string)
      .def("order", [](const Permutation& p) { return p.order(); });

  py::class_<GnElement>(m, "GnElement")
      .def("__str__", &GnElement::to_string)
      .def("__repr__", &GnElement::to_string)
      .def("__eq__", [](const GnElement& a, const GnElement& b) { return a == b; })
      .def("n", &GnElement::n)
      .def("sigma", &GnElement::sigma)
      .def("is_identity", &GnElement::is_identity)
      .def("is_involution", [](const GnElement& g) { return is_involution(g); });

  py::class_<Iet>(m, "Iet")
      .def_static("identity", &Iet::identity)
      .def_static("rotation", &Iet::rotation, py::arg("angle"))
      .def("__str__", &Iet::to_string)
      .def("__repr__", &Iet::to_string)
      .def("__eq__", [](const Iet& a, const Iet& b) { return a == b; })
      .def("pieces", &Iet::pieces)
      .def("is_identity", &Iet::is_identity)
      .def("__call__", [](const Iet& f, const Scalar& x) { return evaluate(f, x); });

  m.def("parse_iet",
        [](const SymbolTable& t, const std::string& text) {
          return parse_iet_body(t, text);
        },
        py::arg("table"), py::arg("text"));
  m.def("parse_gn",
        [](const SymbolTable& t, const std::string& text) {
          return parse_gn_body(t, text);
        },
        py::arg("table"), py::arg("text"));

  // group operations, overloaded on both value kinds
  m.def("compose", [](const Iet& f, const Iet& g) { return compose(f, g); });
  m.def("compose",
        [](const GnElement& f, const GnElement& g) { return compose(f, g); });
  m.def("inverse", [](const Iet& f) { return inverse(f); });
  m.def("inverse", [](const GnElement& f) { return inverse(f); });
  m.def("power", [](const Iet& f, long long k) { return power(f, k); });
  m.def("power", [](const GnElement& f, long long k) { return power(f, k); });
  m.def("to_iet", &to_iet);
  m.def("from_iet", &from_iet, py::arg("f"), py::arg("n"));

  m.def("order",
        [](const GnElement& g) -> py::object {
          OrderResult r = order(g);
          if (!r.finite) return py::none();
          return py::cast(static_cast<long long>(r.value));
        },
        "Order of a block-group element; None when infinite.");
  m.def("period",
        [](const Iet& f, long long budget) -> py::object {
          auto p = period(f, budget);
          if (!p) return py::none();
          return py::cast(*p);
        },
        py::arg("f"), py::arg("budget") = 10000);
  m.def("rank", [](const GnElement& g) { return rank(g); });
  m.def("a_morphism_is_zero",
        [](const GnElement& g) { return a_morphism(g).is_zero(); });

  m.def("saf",
        [](const Iet& f) {
          SafTensor s = saf(f);
          py::dict d;
          d["zero"] = wedge_normal_form(s).is_zero();
          d["text"] = s.is_zero() ? "0" : s.to_string();
          return d;
        },
        "The scissors invariant: {'zero': bool, 'text': wedge normal form}.");

  m.def("decompose",
        [](const Iet& f, long long budget) {
          py::list out;
          for (const Component& c : decompose(f, budget).components) {
            py::dict d;
            std::ostringstream sup;
            for (size_t k = 0; k < c.support.size(); ++k)
              sup << (k ? " u " : "") << "[" << c.support[k].left.to_string()
                  << ", " << c.support[k].right.to_string() << ")";
            d["support"] = sup.str();
            d["kind"] = c.kind == ComponentKind::Periodic   ? "periodic"
                        : c.kind == ComponentKind::Minimal  ? "minimal"
                                                            : "unresolved";
            if (c.kind == ComponentKind::Periodic) d["period"] = c.period;
            if (c.kind == ComponentKind::Minimal)
              d["rank"] = c.certificate->q_rank_value;
            out.append(d);
          }
          return out;
        },
        py::arg("f"), py::arg("budget") = 10000);

  m.def("strengthen_reverser", &strengthen_reverser, py::arg("f"), py::arg("h"));
  m.def("factor_four_involutions", &factor_four_involutions);
  m.def("factor_periodic_two_involutions",
        [](const Iet& f, long long budget) {
          return factorization_dict(factor_periodic_two_involutions(f, budget));
        },
        py::arg("f"), py::arg("budget") = 10000);
  m.def("finite_order_reverser", &finite_order_reverser, py::arg("f"), py::arg("h"),
        py::arg("budget") = 10000);
  m.def("factor_reversible_four_involutions",
        [](const Iet& f, const Iet& h, long long budget) {
          return factorization_dict(factor_reversible_four_involutions(f, h, budget));
        },
        py::arg("f"), py::arg("h"), py::arg("budget") = 10000);
  m.def("six_involutions_rr",
        [](int p, const Scalar& d1, const std::string& r, long long budget) {
          return factorization_dict(
              six_involutions_rr(p, d1, parse_rational(r), budget));
        },
        py::arg("p"), py::arg("d1"), py::arg("r"), py::arg("budget") = 10000);
  m.def("two_restricted_rotation_map", &two_restricted_rotation_map, py::arg("l1"),
        py::arg("d1"), py::arg("d2"));

  py::class_<MarkedAction>(m, "MarkedAction")
      .def("generator", &MarkedAction::generator, py::arg("name"),
           py::return_value_policy::copy)
      .def("generator_names",
           [](const MarkedAction& a) {
             std::vector<std::string> names;
             for (const auto& [name, g] : a.generators) names.push_back(name);
             return names;
           })
      .def("relation_count",
           [](const MarkedAction& a) { return a.relations.size(); });

  m.def("builtin_example_names", &builtin_example_names);
  m.def("builtin_example", &builtin_example, py::arg("table"), py::arg("name"));
  m.def("eval_word",
        [](const MarkedAction& a, const std::vector<std::pair<std::string, int>>& w) {
          return eval_word(a, word_from_pairs(w));
        });
  m.def("check_relations", &check_relations);
  m.def("bs_faithfulness",
        [](const MarkedAction& a, long long budget) {
          FaithfulnessReport r = bs_faithfulness(a, budget);
          py::dict d;
          d["decided"] = r.decided;
          d["faithful"] = r.faithful;
          d["witness"] = r.witness;
          return d;
        },
        py::arg("action"), py::arg("budget") = 10000);
  m.def("bounded_freeness",
        [](const MarkedAction& a, int bound) {
          FreenessReport r = bounded_freeness(a, bound);
          py::dict d;
          d["clean"] = r.clean;
          d["word"] = word_to_string(r.word);
          return d;
        },
        py::arg("action"), py::arg("bound") = 5);
  m.def("minimality_certificate",
        [](const MarkedAction& a) {
          MinimalityCertificate c = minimality_certificate(a);
          py::dict d;
          d["n"] = c.n;
          d["transitive"] = c.transitive;
          d["angle_rank"] = c.angle_rank;
          d["valid"] = c.valid;
          return d;
        });

  // workspace text round trips, for tooling
  m.def("load_value",
        [](const std::string& content) -> py::object {
          Workspace ws;
          WorkspaceValue v = load_value(ws, content);
          py::object out = std::visit(
              [](const auto& x) { return py::cast(x); }, v);
          return out;
        },
        "Parse a value file ('symbol' headers plus an iet/gn/action body).");

  m.def("run_cli",
        [](const std::vector<std::string>& args, const std::string& input) {
          std::istringstream in(input);
          std::ostringstream out, err;
          int code = run_cli(args, in, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("input") = std::string(),
        "Run one CLI invocation; returns (exit_code, stdout, stderr).");
}

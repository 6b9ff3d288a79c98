#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cocoakit/families.hpp"
#include "cocoakit/io.hpp"
#include "cocoakit/lasso.hpp"
#include "cocoakit/lowerbound.hpp"
#include "cocoakit/ops.hpp"

namespace py = pybind11;
using namespace cocoakit;

namespace {

LassoWord as_lasso(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_lasso(obj.cast<std::string>());
  return obj.cast<LassoWord>();
}

std::vector<std::pair<std::string, std::string>> as_mapping(const py::dict& d) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : d)
    out.emplace_back(item.first.cast<std::string>(),
                     item.second.cast<std::string>());
  return out;
}

py::object contains_result(const ContainsResult& r) {
  py::object witness = r.witness ? py::cast(format_lasso(*r.witness))
                                 : py::none();
  return py::make_tuple(r.holds, witness);
}

}  // namespace

PYBIND11_MODULE(_cocoakit, m) {
  m.doc() = "omega-automata with transition-based acceptance and chains of "
            "co-Büchi automata";

  py::register_exception<Error>(m, "CocoaError");

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<std::string>>())
      .def("__len__", &Alphabet::size)
      .def("symbols", &Alphabet::symbols)
      .def("index_of", &Alphabet::index_of)
      .def("__eq__", [](const Alphabet& a, const Alphabet& b) { return a == b; })
      .def("__repr__", [](const Alphabet& a) {
        std::string out = "Alphabet([";
        for (int i = 0; i < a.size(); ++i)
          out += (i ? ", '" : "'") + a.symbol(i) + "'";
        return out + "])";
      });

  py::class_<LassoWord>(m, "LassoWord")
      .def(py::init<std::vector<std::string>, std::vector<std::string>>(),
           py::arg("stem"), py::arg("loop"))
      .def_readonly("stem", &LassoWord::stem)
      .def_readonly("loop", &LassoWord::loop)
      .def("__str__", &format_lasso)
      .def("__repr__",
           [](const LassoWord& w) {
             return "LassoWord('" + format_lasso(w) + "')";
           });
  m.def("parse_lasso", &parse_lasso);

  py::class_<Automaton>(m, "Automaton")
      .def_property_readonly("state_count", &Automaton::state_count)
      .def_property_readonly("initial", &Automaton::initial)
      .def_property_readonly("alphabet", &Automaton::alphabet)
      .def_property_readonly("colors", &Automaton::color_set)
      .def("label", &Automaton::label)
      .def("to_text",
           [](const Automaton& a, const std::string& name) {
             return print_aut(a, name);
           },
           py::arg("name") = "aut")
      .def("to_hoa",
           [](const Automaton& a, const std::string& name) {
             return print_hoa(a, name);
           },
           py::arg("name") = "aut")
      .def("__repr__", [](const Automaton& a) {
        return "<Automaton states=" + std::to_string(a.state_count()) +
               " letters=" + std::to_string(a.alphabet().size()) + ">";
      });

  py::class_<AutomatonBuilder>(m, "AutomatonBuilder")
      .def(py::init<Alphabet, int, int>(), py::arg("alphabet"),
           py::arg("state_count"), py::arg("initial"))
      .def("add_edge",
           [](AutomatonBuilder& b, int src, const std::string& symbol,
              int color, int target) -> AutomatonBuilder& {
             return b.add_edge(src, symbol, color, target);
           },
           py::return_value_policy::reference_internal)
      .def("set_label", &AutomatonBuilder::set_label,
           py::return_value_policy::reference_internal)
      .def("build",
           [](AutomatonBuilder& b) { return std::move(b).build(); });

  py::class_<Cocoa>(m, "Cocoa")
      .def(py::init<std::vector<Automaton>>())
      .def_property_readonly("member_count", &Cocoa::member_count)
      .def("member", &Cocoa::member, py::arg("level"),
           "1-based chain member access")
      .def_property_readonly("alphabet", &Cocoa::alphabet)
      .def("to_text",
           [](const Cocoa& c, const std::string& name) {
             return print_cocoa(c, name);
           },
           py::arg("name") = "cocoa")
      .def("__len__", &Cocoa::member_count)
      .def("__repr__", [](const Cocoa& c) {
        return "<Cocoa members=" + std::to_string(c.member_count()) +
               " size=" + std::to_string(cocoa_size(c)) + ">";
      });

  // core
  m.def("validate_automaton", [](const Automaton& a) {
    std::vector<std::string> out;
    for (const Diagnostic& d : validate_automaton(a))
      out.push_back(d.message(a.alphabet()));
    return out;
  });
  m.def("is_deterministic", &is_deterministic);
  m.def("is_cobuchi", &is_cobuchi);
  m.def("reachable_restrict", &reachable_restrict);
  m.def("rename_letters", [](const Automaton& a, const py::dict& mapping) {
    return rename_letters(a, as_mapping(mapping));
  });
  m.def("scc_decompose", [](const Automaton& a) {
    std::vector<std::vector<int>> out;
    for (const Scc& s : scc_decompose(a)) out.push_back(s.states);
    return out;
  });
  m.def("terminal_sccs", [](const Automaton& a) {
    std::vector<std::vector<int>> out;
    for (const Scc& s : terminal_sccs(a)) out.push_back(s.states);
    return out;
  });
  m.def("same_structure", &same_structure);

  // lasso evaluation
  m.def("dpw_color", [](const Automaton& a, const py::object& w) {
    return dpw_color(a, as_lasso(w));
  });
  m.def("dpw_accepts", [](const Automaton& a, const py::object& w) {
    return dpw_accepts(a, as_lasso(w));
  });
  m.def("ncw_accepts", [](const Automaton& a, const py::object& w) {
    return ncw_accepts(a, as_lasso(w));
  });
  m.def("cocoa_color", [](const Cocoa& c, const py::object& w) {
    return cocoa_color(c, as_lasso(w));
  });
  m.def("cocoa_accepts", [](const Cocoa& c, const py::object& w) {
    return cocoa_accepts(c, as_lasso(w));
  });

  // chain operations
  m.def("chain_validate", [](const Cocoa& c) {
    std::vector<std::string> out;
    for (const ChainDiagnostic& d : chain_validate(c))
      out.push_back(d.message());
    return out;
  });
  m.def("cocoa_complement", &cocoa_complement);
  m.def("cocoa_size", &cocoa_size);
  m.def("universal_cobuchi", &universal_cobuchi);
  m.def("empty_cobuchi", &empty_cobuchi);

  // constructions and decision procedures
  m.def("dcw_conjunction",
        py::overload_cast<const std::vector<Automaton>&>(&dcw_conjunction));
  m.def("dcw_disjunction",
        py::overload_cast<const std::vector<Automaton>&>(&dcw_disjunction));
  m.def("mh_determinize", &mh_determinize);
  m.def("cocoa_to_dpw", &cocoa_to_dpw);
  m.def("dpw_complement", &dpw_complement);
  m.def("dpw_contains", [](const Automaton& a, const Automaton& b) {
    return contains_result(dpw_contains(a, b));
  });
  m.def("dpw_equivalent", [](const Automaton& a, const Automaton& b) {
    return contains_result(dpw_equivalent(a, b));
  });
  m.def("is_empty", [](const Automaton& a) {
    auto w = multi_parity_witness({{&a, Polarity::RequireAccepting}});
    py::object witness = w ? py::cast(format_lasso(*w)) : py::none();
    return py::make_tuple(!w.has_value(), witness);
  });
  m.def("residual_partition", [](const Automaton& a) {
    return residual_partition(a).classes;
  });
  m.def("residual_count", [](const Automaton& a) {
    return residual_partition(a).class_count();
  });

  // family generators and oracles
  m.def("gen_prop1_dpw", &gen_prop1_dpw);
  m.def("gen_prop1_cocoa", &gen_prop1_cocoa);
  m.def("gen_cocoa_C", &gen_cocoa_C);
  m.def("lasso_in_C_member", [](int k, int j, const py::object& w) {
    return lasso_in_C_member(k, j, as_lasso(w));
  });
  m.def("gen_dcw_L", &gen_dcw_L);
  m.def("gen_dcw_Lhat", &gen_dcw_Lhat);
  m.def("lasso_in_L", [](int k, int i, const py::object& w) {
    return lasso_in_L(k, i, as_lasso(w));
  });
  m.def("lasso_in_Lhat", [](int k, int j, const py::object& w) {
    return lasso_in_Lhat(k, j, as_lasso(w));
  });
  m.def("greatest_pair", [](int k, const py::object& w) {
    IndexPair p = greatest_pair(k, as_lasso(w));
    return py::make_tuple(p.i, p.j);
  });
  m.def("gen_dpw_P", &gen_dpw_P);
  m.def("gen_dpw_Phat", &gen_dpw_Phat);
  m.def("gamma", [](int k, int u) {
    std::vector<std::pair<int, int>> out;
    for (const IndexPair& p : gamma(k, u)) out.emplace_back(p.i, p.j);
    return out;
  });
  m.def("nondominated", [](const std::vector<std::pair<int, int>>& pairs) {
    std::vector<IndexPair> in;
    for (auto [i, j] : pairs) in.push_back({i, j});
    std::vector<std::pair<int, int>> out;
    for (const IndexPair& p : nondominated(in)) out.emplace_back(p.i, p.j);
    return out;
  });
  m.def("gen_cocoa_theorem2", &gen_cocoa_theorem2);
  m.def("gen_cocoa_theorem2_nondominated", &gen_cocoa_theorem2_nondominated);
  m.def("gen_example31_dpw", &gen_example31_dpw);
  m.def("lasso_in_example31", [](const py::object& w) {
    return lasso_in_example31(as_lasso(w));
  });

  // lower-bound certificates
  m.def("certify_lower_bound", [](const Automaton& dpw, int k) {
    CertifyResult result = certify_lower_bound(dpw, k);
    if (auto* violation = std::get_if<LowerBoundViolation>(&result))
      throw Error(ErrorCode::Invalid, violation->message());
    const auto& cert = std::get<LowerBoundCertificate>(result);
    return py::make_tuple(cert.bound, serialize_certificate(cert));
  });
  m.def("verify_certificate",
        [](const Automaton& dpw, const std::string& text) {
          return verify_certificate(dpw, parse_certificate(text));
        });

  // text formats
  m.def("parse_aut", &parse_aut);
  m.def("parse_cocoa", &parse_cocoa);
  m.def("print_aut", &print_aut);
  m.def("print_cocoa", &print_cocoa);
  m.def("print_hoa", &print_hoa);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <variant>

#include "zlab/algebra.hpp"
#include "zlab/classify.hpp"
#include "zlab/error.hpp"
#include "zlab/io.hpp"
#include "zlab/lemmas.hpp"
#include "zlab/search.hpp"
#include "zlab/waid.hpp"

namespace py = pybind11;
using namespace zlab;

namespace {

// std::string first: the variant caster needs a default-constructible first alternative.
using IdentityArg = std::variant<std::string, Identity>;

bool is_equation(const std::string& s) {
  return s.find('=') != std::string::npos || s.find("≈") != std::string::npos;
}

/// An Identity object, an equation "lhs = rhs", or an (nmXpq) name or alias.
Identity to_identity(const IdentityArg& arg) {
  if (const auto* id = std::get_if<Identity>(&arg)) return *id;
  const auto& s = std::get<std::string>(arg);
  return is_equation(s) ? parse_identity(s, s) : identity_from_name(s);
}

/// Identities a model must satisfy for one constraint: a variety (with its
/// base), an (nmXpq) name (relative to S), or a bare equation.
std::vector<Identity> constraint(const IdentityArg& arg) {
  if (const auto* id = std::get_if<Identity>(&arg)) return {*id};
  const auto& s = std::get<std::string>(arg);
  if (is_equation(s)) return {parse_identity(s, s)};
  return flatten(variety(s));
}

std::vector<Identity> identities_or_all(const std::optional<std::vector<IdentityArg>>& ids) {
  if (!ids) return enumerate_waids(4);
  std::vector<Identity> out;
  for (const auto& a : *ids) out.push_back(to_identity(a));
  return out;
}

RenderStyle style_of(const std::string& s) {
  if (s == "sugared") return RenderStyle::sugared;
  if (s == "expanded") return RenderStyle::expanded;
  throw py::value_error("style must be 'sugared' or 'expanded'");
}

}  // namespace

PYBIND11_MODULE(_zlab, m) {
  m.doc() = "Weak associative laws in symmetric implication zroupoids";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SyntaxError>(m, "TermSyntaxError", base);
  py::register_exception<NameError>(m, "UnknownNameError", base);
  py::register_exception<EvalError>(m, "EvalError", base);
  py::register_exception<DataError>(m, "DataError", base);
  py::register_exception<RangeError>(m, "RangeError", base);

  py::class_<Term>(m, "Term")
      .def_property_readonly("kind",
                             [](const Term& t) {
                               switch (t.kind()) {
                                 case Term::Kind::Variable: return "var";
                                 case Term::Kind::Zero: return "zero";
                                 case Term::Kind::Arrow: return "arrow";
                               }
                               return "?";
                             })
      .def_property_readonly("name", &Term::name)
      .def_property_readonly("left",
                             [](const Term& t) -> py::object {
                               return t.is_arrow() ? py::cast(t.left()) : py::none();
                             })
      .def_property_readonly("right",
                             [](const Term& t) -> py::object {
                               return t.is_arrow() ? py::cast(t.right()) : py::none();
                             })
      .def_property_readonly("length", &Term::length)
      .def_property_readonly("depth", &Term::depth)
      .def("variables", [](const Term& t) { return variables_of(t).distinct; })
      .def("occurrences", [](const Term& t) { return variables_of(t).occurrences; })
      .def(
          "render",
          [](const Term& t, const std::string& style, bool unicode) {
            return render_term(t, style_of(style),
                               unicode ? Notation::unicode : Notation::ascii);
          },
          py::arg("style") = "sugared", py::arg("unicode") = false)
      .def("__str__", [](const Term& t) { return render_term(t); })
      .def("__repr__", [](const Term& t) { return "Term('" + render_term(t) + "')"; })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", [](const Term& t) { return py::hash(py::str(render_term(t))); });

  m.def("parse_term", [](const std::string& s) { return parse_term(s); }, py::arg("text"));
  m.def("var", &Term::var, py::arg("name"));
  m.def("zero", &Term::zero);
  m.def("arrow", &Term::arrow, py::arg("left"), py::arg("right"));
  m.def("prime", &Term::prime, py::arg("t"));
  m.def("meet", &Term::meet, py::arg("s"), py::arg("t"));
  m.def(
      "eval_term",
      [](const Term& t, const FiniteZroupoid& alg, const std::map<std::string, Element>& env) {
        Environment e(env.begin(), env.end());
        return eval_term(t, alg, e);
      },
      py::arg("term"), py::arg("algebra"), py::arg("env") = std::map<std::string, Element>{});

  py::class_<Identity>(m, "Identity")
      .def_readonly("lhs", &Identity::lhs)
      .def_readonly("rhs", &Identity::rhs)
      .def_readonly("name", &Identity::name)
      .def_readonly("alias", &Identity::alias)
      .def_property_readonly("display_name", &Identity::display_name)
      .def_readonly("length", &Identity::length)
      .def_readonly("var_count", &Identity::var_count)
      .def_readonly("word_letter", &Identity::word_letter)
      .def_property_readonly("brackets",
                             [](const Identity& id) -> py::object {
                               if (!id.brackets) return py::none();
                               return py::make_tuple(id.brackets->p, id.brackets->q);
                             })
      .def_readonly("weak_associative", &Identity::weak_associative)
      .def("same_equation", &Identity::same_equation)
      .def(
          "render",
          [](const Identity& id, const std::string& style, bool unicode) {
            return render_identity(id, style_of(style),
                                   unicode ? Notation::unicode : Notation::ascii);
          },
          py::arg("style") = "sugared", py::arg("unicode") = false)
      .def("__str__", [](const Identity& id) { return render_identity(id); })
      .def("__repr__", [](const Identity& id) {
        return "Identity(" + id.display_name() + ": " + render_identity(id) + ")";
      });

  m.def("parse_identity", [](const std::string& s, const std::string& name) {
    return parse_identity(s, name);
  }, py::arg("text"), py::arg("name") = "");
  m.def("identity_from_name", [](const std::string& s) { return identity_from_name(s); },
        py::arg("name"));
  m.def("name_of", &name_of, py::arg("identity"));
  m.def("resolve_alias", [](const std::string& s) { return resolve_alias(s); });
  m.def("enumerate_waids", &enumerate_waids, py::arg("max_len") = 4);

  py::class_<FiniteZroupoid>(m, "FiniteZroupoid")
      .def(py::init([](const std::string& name, const std::vector<std::vector<Element>>& rows) {
             return FiniteZroupoid::from_rows(name, rows);
           }),
           py::arg("name"), py::arg("rows"))
      .def_property("name", &FiniteZroupoid::name, &FiniteZroupoid::set_name)
      .def_property_readonly("size", &FiniteZroupoid::size)
      .def("rows", &FiniteZroupoid::rows)
      .def("at", &FiniteZroupoid::at)
      .def("same_table", &FiniteZroupoid::same_table)
      .def("to_json", [](const FiniteZroupoid& a) { return algebra_to_json(a).dump(); })
      .def("__repr__", [](const FiniteZroupoid& a) {
        return "FiniteZroupoid('" + a.name() + "', size=" + std::to_string(a.size()) + ")";
      });

  m.def("catalog", [] {
    std::map<std::string, FiniteZroupoid> out;
    for (const auto& [k, v] : catalog()) out.emplace(k, v);
    return out;
  });
  m.def("catalog_algebra", [](const std::string& s) { return catalog_algebra(s); });
  m.def("parse_algebras", [](const std::string& s) { return parse_algebras(s); });
  m.def("load_algebras", &load_algebras, py::arg("path"));

  py::class_<SatisfactionReport>(m, "SatisfactionReport")
      .def_readonly("holds", &SatisfactionReport::holds)
      .def_readonly("witness", &SatisfactionReport::witness)
      .def_readonly("lhs_value", &SatisfactionReport::lhs_value)
      .def_readonly("rhs_value", &SatisfactionReport::rhs_value)
      .def_readonly("failed", &SatisfactionReport::failed)
      .def("__bool__", [](const SatisfactionReport& r) { return r.holds; });

  m.def("satisfies", [](const FiniteZroupoid& a, const IdentityArg& id) {
    return satisfies(a, to_identity(id));
  }, py::arg("algebra"), py::arg("identity"));
  m.def("member_of", [](const FiniteZroupoid& a, const std::string& v) {
    return member_of(a, variety(v));
  }, py::arg("algebra"), py::arg("variety"));
  m.def("varieties", &registered_variety_names);

  m.def(
      "enumerate_models",
      [](std::size_t size, const std::vector<IdentityArg>& satisfy,
         const std::vector<IdentityArg>& fail, bool iso_reduce, std::optional<std::size_t> limit,
         unsigned threads, std::size_t size_cap) {
        SearchSpec spec;
        spec.size = size;
        spec.iso_reduce = iso_reduce;
        spec.limit = limit;
        spec.threads = threads;
        spec.size_cap = size_cap;
        for (const auto& s : satisfy)
          for (auto& id : constraint(s)) spec.must_satisfy.push_back(std::move(id));
        for (const auto& f : fail) spec.must_fail.push_back(to_identity(f));
        py::gil_scoped_release release;
        return enumerate_models(spec);
      },
      py::arg("size"), py::arg("satisfy") = std::vector<IdentityArg>{},
      py::arg("fail") = std::vector<IdentityArg>{}, py::arg("iso_reduce") = true,
      py::arg("limit") = py::none(), py::arg("threads") = 1,
      py::arg("size_cap") = kDefaultSizeCap);
  m.def(
      "find_separator",
      [](const IdentityArg& in, const IdentityArg& out, std::size_t max_size, unsigned threads,
         std::size_t size_cap) {
        const auto a = to_identity(in), b = to_identity(out);
        py::gil_scoped_release release;
        return find_separator(a, b, max_size, threads, size_cap);
      },
      py::arg("id_in"), py::arg("id_out"), py::arg("max_size"), py::arg("threads") = 1,
      py::arg("size_cap") = kDefaultSizeCap);
  m.def("canonical_form", [](const FiniteZroupoid& a) { return canonical_form(a).cells; });
  m.def("are_isomorphic", &are_isomorphic);

  py::class_<Block>(m, "Block")
      .def_readonly("label", &Block::label)
      .def_readonly("representative", &Block::representative)
      .def_readonly("members", &Block::members)
      .def_readonly("fingerprint", &Block::fingerprint)
      .def("__repr__", [](const Block& b) {
        return "Block('" + b.label + "', " + std::to_string(b.members.size()) + " members)";
      });

  py::class_<PartitionReport>(m, "PartitionReport")
      .def_readonly("blocks", &PartitionReport::blocks)
      .def_readonly("models", &PartitionReport::models)
      .def_readonly("diff", &PartitionReport::diff)
      .def_readonly("compared_full", &PartitionReport::compared_full)
      .def("find_block", &PartitionReport::find_block, py::return_value_policy::reference_internal)
      .def("block_containing", &PartitionReport::block_containing,
           py::return_value_policy::reference_internal);

  m.def(
      "induced_partition",
      [](const std::optional<std::vector<IdentityArg>>& ids,
         const std::vector<FiniteZroupoid>& models, unsigned threads) {
        const auto list = identities_or_all(ids);
        py::gil_scoped_release release;
        return induced_partition(list, models, threads);
      },
      py::arg("ids"), py::arg("models"), py::arg("threads") = 1);
  m.def(
      "classify_up_to",
      [](std::size_t max_size, const std::optional<std::vector<IdentityArg>>& ids,
         unsigned threads, std::size_t size_cap) {
        const auto list = identities_or_all(ids);
        py::gil_scoped_release release;
        return classify_up_to(max_size, list, threads, size_cap);
      },
      py::arg("max_size"), py::arg("ids") = py::none(), py::arg("threads") = 1,
      py::arg("size_cap") = kDefaultSizeCap);
  m.def("symmetric_models_up_to", &symmetric_models_up_to, py::arg("max_size"),
        py::arg("threads") = 1, py::arg("size_cap") = kDefaultSizeCap);
  m.def("expected_classification", [] {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& b : expected_classification().blocks)
      for (const auto& e : b.members) out[b.key].push_back(e.name);
    return out;
  });

  py::class_<Poset>(m, "Poset")
      .def_property_readonly("labels",
                             [](const Poset& p) {
                               std::vector<std::string> out;
                               for (const auto& n : p.nodes) out.push_back(n.label);
                               return out;
                             })
      .def_readonly("merged_landmarks", &Poset::merged_landmarks)
      .def("edges", &Poset::hasse_labels)
      .def("less_equal", [](const Poset& p, const std::string& a, const std::string& b) {
        return p.less_equal(a, b);
      })
      .def("meet", [](const Poset& p, const std::string& a, const std::string& b) {
        return p.meet(a, b);
      });
  m.def(
      "inclusion_poset",
      [](const PartitionReport& r, bool with_landmarks) { return inclusion_poset(r, with_landmarks); },
      py::arg("report"), py::arg("with_landmarks") = false);
  m.def("hasse_dot", &hasse_dot, py::arg("poset"));

  m.def(
      "lemma_suite",
      [](const FiniteZroupoid& a) {
        const auto r = lemma_suite(a);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& c : r.clauses) out.emplace_back(c.name, to_string(c.status));
        return out;
      },
      py::arg("algebra"));
}

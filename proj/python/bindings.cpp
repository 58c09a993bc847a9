// Python entry points. Structured values cross the boundary as JSON text in
// the same schema the command line tool reads and writes; the package
// wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biplane/error.hpp"
#include "biplane/io.hpp"

namespace py = pybind11;
using namespace biplane;

namespace {

Drawing drawing_of(const std::string& text) { return drawing_from_json(parse_json(text)); }
ColoredGraph graph_of(const std::string& text) { return graph_from_json(parse_json(text)); }

Drawing generate(const std::string& family, const py::dict& params) {
  auto need = [&](const char* key) {
    if (!params.contains(key)) throw Error(ErrorCode::DomainError, "family " + family + " needs " + key);
    return params[key].cast<int>();
  };
  if (family == "tube") return gen_tube(need("k"));
  if (family == "box") return gen_box(need("k"), need("n"));
  if (family == "two-strips") return gen_two_strips(need("k"));
  if (family == "odd") return gen_odd(need("v"));
  if (family == "extremal") return gen_extremal(need("v"));
  if (family == "kab") return gen_complete_bipartite(need("a"), need("b"));
  throw Error(ErrorCode::DomainError, "unknown family " + family);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // Deliberately leaked: the type must outlive the interpreter's module teardown.
  static PyObject* error_type = PyErr_NewException("biplane._core.BiplaneError", PyExc_ValueError, nullptr);
  m.add_object("BiplaneError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def("beta", &beta, py::arg("v"));
  m.def("bound_check", [](const std::string& g) { return dump(to_json(bound_check(graph_of(g)))); });
  m.def("complete_bipartite", [](int a, int b) { return dump(to_json(complete_bipartite(a, b))); });
  m.def("is_isomorphic", [](const std::string& a, const std::string& b) { return isomorphic(graph_of(a), graph_of(b)); });

  m.def("generate", [](const std::string& family, const py::dict& params) { return dump(to_json(generate(family, params))); });
  m.def("verify", [](const std::string& d, int level) { return dump(to_json(verify(drawing_of(d), level))); });
  m.def("classify", [](const std::string& d) { return dump(to_json(classify_edges(drawing_of(d)))); });
  m.def("census", [](const std::string& d) { return dump(to_json(census_check(drawing_of(d)))); });
  m.def("analyze", [](const std::string& d) { return dump(to_json(analyze(drawing_of(d)))); });
  m.def("render_svg", [](const std::string& d) { return render_svg(drawing_of(d)); });

  m.def(
      "decide",
      [](const std::string& g, std::optional<double> timeout, int jobs) {
        SearchOptions o;
        o.timeout_seconds = timeout;
        o.jobs = jobs;
        DecideResult r;
        {
          py::gil_scoped_release release;
          r = decide_one_planar(graph_of(g), o);
        }
        return dump(to_json(r));
      },
      py::arg("graph"), py::arg("timeout") = py::none(), py::arg("jobs") = 1);
  m.def(
      "beta_exhaustive",
      [](int v, std::optional<double> timeout) {
        BetaSearchOptions o;
        o.timeout_seconds = timeout;
        BetaSearchResult r;
        {
          py::gil_scoped_release release;
          r = beta_exhaustive(v, o);
        }
        return dump(to_json(r));
      },
      py::arg("v"), py::arg("timeout") = py::none());
  m.def("crbound", [](int m_, long long lb, const std::vector<int>& hosts) {
    return dump(to_json(cr_counting_chain(m_, lb, hosts)));
  });
  m.def("refute_k37", [] { return dump(to_json(refute_k37())); });
}

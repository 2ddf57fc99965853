#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shintani/cache.hpp"
#include "shintani/commands.hpp"
#include "shintani/errors.hpp"
#include "shintani/oracle.hpp"

namespace py = pybind11;
using namespace shintani;

namespace {

std::string run(const std::string& command, const std::string& config, const std::string& suite)
{
    const Json j = Json::parse(config, nullptr, false);
    if (j.is_discarded())
        config_error("BadConfig", "config is not valid JSON");
    return canonical(run_command(command, parse_run_config(j), suite));
}

std::string oracle_l0(const std::vector<std::string>& minpoly, long D)
{
    FieldSpec s;
    for (const auto& c : minpoly)
        s.minpoly.push_back(parse_integer(c));
    auto K = NumberField::create(s);
    return canonical(to_json(norm_induced_l0(*K, DirichletCharacter::kronecker(D))));
}

} // namespace

PYBIND11_MODULE(_shintani, m)
{
    m.doc() = "Shintani cocycle pipeline";
    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = error;
            py::object inst = err(e.what());
            inst.attr("code") = e.code();
            inst.attr("exit_code") = static_cast<int>(e.kind());
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });
    m.def("run", &run, py::arg("command"), py::arg("config"), py::arg("suite") = "",
          py::call_guard<py::gil_scoped_release>(), "Run a CLI command on a JSON config; returns canonical JSON");
    m.def("oracle_l0", &oracle_l0, py::arg("minpoly"), py::arg("discriminant"),
          "L(psi o N, 0) for the Kronecker character of the given discriminant");
    m.def("cache_key", [](const std::string& s) { return cache_key(Json::parse(s)); });
}

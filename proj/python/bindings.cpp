#include "godeaux/commands.hpp"
#include "godeaux/curve_verify.hpp"
#include "godeaux/embedded.hpp"
#include "godeaux/scene.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace godeaux;

namespace {

CommandOptions options(const std::string& curve, std::uint64_t modp, const std::string& eigenspace, int threads,
                       const std::string& scene_dir, bool quick) {
    CommandOptions o;
    o.curve_path = curve;
    o.modp = modp;
    o.eigenspace = eigenspace;
    o.threads = threads;
    o.scene_dir = scene_dir;
    o.quick = quick;
    return o;
}

Point3 point(const std::vector<std::string>& coords) {
    if (coords.size() != 3) throw DomainError("a point needs three coordinates");
    return {parse_scalar(coords[0], nullptr), parse_scalar(coords[1], nullptr), parse_scalar(coords[2], nullptr)};
}

using Command = Report (*)(const SceneFile&, const CommandOptions&);

void bind_command(py::module_& m, const char* name, Command f, const char* doc) {
    m.def(
        name,
        [f](const SceneFile& s, const std::string& curve, std::uint64_t modp, const std::string& eigenspace, int threads,
            const std::string& scene_dir, bool quick) {
            py::gil_scoped_release release;
            return f(s, options(curve, modp, eigenspace, threads, scene_dir, quick));
        },
        py::arg("scene"), py::arg("curve") = "", py::arg("modp") = 0, py::arg("eigenspace") = "",
        py::arg("threads") = 1, py::arg("scene_dir") = ".", py::arg("quick") = false, doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact linear systems of singular plane curves and double plane invariants";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);
    py::register_exception<SceneError>(m, "SceneError", PyExc_ValueError);

    py::enum_<Status>(m, "Status").value("OK", Status::Ok).value("NEGATIVE", Status::Negative).value("ERROR", Status::Error);

    py::class_<Report>(m, "Report")
        .def_readonly("task", &Report::task)
        .def_readonly("status", &Report::status)
        .def_readonly("lines", &Report::lines)
        .def_property_readonly("exit_code", &Report::exit_code)
        .def("text", &Report::text)
        .def("json", &Report::json)
        .def("__repr__", [](const Report& r) { return "<Report " + r.task + " " + status_name(r.status) + ">"; });

    py::class_<SceneFile>(m, "Scene")
        .def_property_readonly("degree", [](const SceneFile& s) { return s.degree; })
        .def_property_readonly("tasks", [](const SceneFile& s) { return s.tasks; })
        .def_property_readonly("points", [](const SceneFile& s) {
            std::vector<std::string> out;
            for (const auto& p : s.points) out.push_back(p.name);
            return out;
        })
        .def_property_readonly("singularities", [](const SceneFile& s) { return s.sings.size(); })
        .def("text", [](const SceneFile& s) { return write_scene(s); })
        .def("__eq__", [](const SceneFile& a, const SceneFile& b) { return a == b; });

    m.def("parse_scene", &parse_scene, py::arg("text"), "Parse and validate scene text");
    m.def(
        "builtin_scene", [](const std::string& name) {
            auto t = embedded_file("scenes/" + name + ".scene");
            if (!t) throw DomainError("no builtin scene " + name);
            return parse_scene(*t);
        },
        py::arg("name"));
    m.def("embedded_names", &embedded_names);

    bind_command(m, "dim", &cmd_dim, "Dimension of the scene's linear system");
    bind_command(m, "solve", &cmd_solve, "Solve the scene's linear system");
    bind_command(m, "verify", &cmd_verify, "Verify a curve against the scene");
    bind_command(m, "invariants", &cmd_invariants, "Double cover invariants");
    bind_command(m, "torsion", &cmd_torsion, "Du Val torsion criterion");
    bind_command(m, "locus", &cmd_locus, "Parameter locus of a one-parameter scene");

    m.def(
        "reproduce",
        [](const std::string& target, std::uint64_t modp, bool quick, const std::string& out_dir) {
            CommandOptions o;
            o.modp = modp;
            o.quick = quick;
            o.out_dir = out_dir;
            py::gil_scoped_release release;
            return cmd_reproduce(target, o);
        },
        py::arg("target"), py::arg("modp") = 0, py::arg("quick") = false, py::arg("out_dir") = "");

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "godeaux");
            std::vector<const char*> argv;
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool; returns (exit code, stdout, stderr)");

    m.def(
        "multiplicity_at",
        [](const std::string& form, const std::vector<std::string>& p) {
            return multiplicity_at(parse_form(form), ProjPoint(point(p)));
        },
        py::arg("form"), py::arg("point"));
    m.def(
        "absolute_factor_count", [](const std::string& form) { return absolute_factor_count(parse_form(form)); },
        py::arg("form"));
    m.def(
        "normalize", [](const std::string& form) { return parse_form(form).normalize_integer().str(); },
        py::arg("form"));
}

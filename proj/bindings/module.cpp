#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leonard/io.hpp"
#include "leonard/relatives.hpp"
#include "leonard/transition.hpp"
#include "leonard/verification.hpp"

namespace py = pybind11;
using namespace leonard;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const Matrix& M) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(format_element(M.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

/// A validated Leonard system plus its parameter array, the unit of work
/// for every exposed operation.
class PySystem {
  public:
    explicit PySystem(const std::string& json_text) {
        ParameterArrayFile file = parse_parameter_json(json_text);
        auto [sys, pa] = build_from_file(file);
        sys_ = std::make_unique<LeonardSystem>(std::move(sys));
        pa_ = std::make_unique<ParameterArray>(std::move(pa));
    }

    std::size_t d() const { return sys_->d(); }
    std::string field() const { return sys_->field().name(); }

    std::vector<std::vector<std::string>> a() const { return matrix_strings(sys_->A()); }
    std::vector<std::vector<std::string>> a_star() const { return matrix_strings(sys_->Astar()); }
    std::vector<std::vector<std::string>> idempotent(std::size_t i) const {
        return matrix_strings(sys_->E(i));
    }
    std::vector<std::vector<std::string>> dual_idempotent(std::size_t i) const {
        return matrix_strings(sys_->Estar(i));
    }

    std::string array_json() const { return parameter_file_to_json(to_parameter_file(*pa_)); }

    std::vector<std::tuple<std::string, bool, std::string>> validate() const {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : validate_system(*sys_).conditions)
            out.emplace_back(c.name, c.pass, c.detail);
        return out;
    }

    std::vector<std::pair<std::string, std::string>> orbit_arrays() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& g : D4Element::all()) {
            ParameterArray rel = transform_parameter_array(g, *pa_);
            std::string label = g.short_name().empty() ? "1" : g.short_name();
            out.emplace_back(label, parameter_file_to_json(to_parameter_file(rel)));
        }
        return out;
    }

    py::dict transition(const std::string& from, const std::string& to) const {
        BasisTag src = parse_tag(from), tgt = parse_tag(to);
        GramForm gram = compute_gram(*sys_);
        TransitionContext ctx(*sys_, gram, anchor_vectors(*sys_));
        TransitionFormula f = formula(src, tgt);
        Matrix T = evaluate(f, ctx);
        bool ok = T == oracle_change_of_basis(ctx.basis(src), ctx.basis(tgt));
        py::dict out;
        out["matrix"] = matrix_strings(T);
        out["equation"] = f.equation_tag;
        out["formula"] = format_formula(f);
        out["verified"] = ok;
        return out;
    }

    std::string verify_json(const std::vector<std::string>& suites, bool relatives,
                            bool rescale_check) const {
        VerifyOptions opt;
        opt.suites = suites;
        opt.relatives = relatives;
        opt.rescale_check = rescale_check;
        return report_to_json(run_verification(*sys_, *pa_, opt));
    }

  private:
    std::unique_ptr<LeonardSystem> sys_;
    std::unique_ptr<ParameterArray> pa_;
};

std::vector<std::string> list_tags() {
    std::vector<std::string> out;
    for (const auto& tag : all_basis_tags()) out.push_back(tag_name(tag));
    return out;
}

} // namespace

PYBIND11_MODULE(_leonardpairs, m) {
    m.doc() = "Exact Leonard-system construction, the 24 distinguished bases, and "
              "closed-form transition maps verified against a change-of-basis oracle.";

    // translators run newest-first, so the subclass goes second
    py::register_exception<Error>(m, "MathError", PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PySystem>(m, "System")
        .def(py::init<const std::string&>(), py::arg("json_text"),
             "Build and validate a system from a parameter-array JSON document.")
        .def_property_readonly("d", &PySystem::d)
        .def_property_readonly("field", &PySystem::field)
        .def("a", &PySystem::a, "Matrix A as exact scalar strings.")
        .def("a_star", &PySystem::a_star)
        .def("idempotent", &PySystem::idempotent, py::arg("i"))
        .def("dual_idempotent", &PySystem::dual_idempotent, py::arg("i"))
        .def("array_json", &PySystem::array_json,
             "The completed parameter array as a JSON document.")
        .def("validate", &PySystem::validate,
             "Per-condition verdicts (name, pass, detail) of the system checks.")
        .def("orbit_arrays", &PySystem::orbit_arrays,
             "Parameter arrays of all 8 relatives as (label, json) pairs.")
        .def("transition", &PySystem::transition, py::arg("source"), py::arg("target"),
             "Evaluate one transition map; returns matrix, equation tag, formula text, "
             "and whether it matched the change-of-basis oracle.")
        .def("verify_json", &PySystem::verify_json, py::arg("suites") = std::vector<std::string>{},
             py::arg("relatives") = false, py::arg("rescale_check") = false,
             "Run verification suites; returns the JSON report.");

    m.def("basis_tags", &list_tags, "The 24 basis tag names in report order.");
    m.attr("__version__") = "1.0.0";
}

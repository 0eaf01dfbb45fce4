#include "adjpow/coefficients.hpp"
#include "adjpow/combinatorics.hpp"
#include "adjpow/lie_oracle.hpp"
#include "adjpow/render.hpp"
#include "adjpow/self_check.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using namespace adjpow;

py::int_ to_py(const ExactInteger& value) {
    const auto text = value.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::object to_py(const ExactRational& value) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(boost::multiprecision::numerator(value)),
                    to_py(boost::multiprecision::denominator(value)));
}

py::list to_py(std::span<const ExactInteger> values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

py::tuple to_tuple(const std::vector<int>& values) {
    py::tuple out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i];
    return out;
}

py::dict irrep_dict(const IrrepMultiset& multiset) {
    py::dict out;
    for (const auto& [labels, count] : multiset) out[to_tuple(labels.a)] = to_py(count);
    return out;
}

py::dict stable_dict(const StableMultiset& multiset) {
    py::dict out;
    for (const auto& [label, count] : multiset) {
        out[py::make_tuple(to_tuple(label.left), to_tuple(label.right))] = to_py(count);
    }
    return out;
}

py::object parse_json(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact decomposition coefficients of adjoint tensor powers of A_n";

    py::register_exception<ExactDivisionError>(m, "ExactDivisionError", PyExc_ArithmeticError);
    py::register_exception<OracleError>(m, "OracleError", PyExc_RuntimeError);
    // Translators run newest first, so the derived type is registered last.
    auto& domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CostLimitError>(m, "CostLimitError", domain_error.ptr());

    m.def("factorial", [](int k) { return to_py(factorial(k)); }, py::arg("k"));
    m.def("binomial", [](int k, int j) { return to_py(binomial(k, j)); },
          py::arg("k"), py::arg("j"));

    m.def("euler_table", [](int max_index) {
        const auto table = euler_table(max_index);
        py::list rows;
        for (int k = 0; k <= max_index; ++k) rows.append(to_py(table.row(k)));
        return rows;
    }, py::arg("max_index"));

    m.def("higher_derangement_table", [](int max_index) {
        const auto table = higher_derangement_table(max_index);
        py::list rows;
        for (int n = 0; n <= max_index; ++n) rows.append(to_py(table.row(n)));
        return rows;
    }, py::arg("max_index"));

    m.def("derangement", [](int k, const std::string& method) {
        return to_py(derangement(k, parse_derangement_method(method)));
    }, py::arg("k"), py::arg("method") = "adjacent");

    m.def("derangement_enumeration_oracle",
          [](int k) { return to_py(derangement_enumeration_oracle(k)); }, py::arg("k"));

    m.def("higher_derangement", [](int n, int k, const std::string& method) {
        return to_py(higher_derangement(n, k, parse_higher_derangement_method(method)));
    }, py::arg("n"), py::arg("k"), py::arg("method") = "table");

    m.def("egf_coefficients", [](int k, int order) {
        const auto series = egf_coefficients(k, order);
        py::list out;
        for (const auto& c : series.coefficients) out.append(to_py(c));
        return out;
    }, py::arg("k"), py::arg("order"));

    m.def("coefficient_main", [](int k, int j) { return to_py(coefficient_main(k, j)); },
          py::arg("k"), py::arg("j"));
    m.def("coefficient_contraction",
          [](int k, int p) { return to_py(coefficient_contraction(k, p)); },
          py::arg("k"), py::arg("p"));
    m.def("coefficient_rows_recurrence", [](int max_power) {
        py::list rows;
        for (const auto& row : coefficient_rows_recurrence(max_power).rows) {
            rows.append(to_py(row.values));
        }
        return rows;
    }, py::arg("max_power"));
    m.def("coefficient_row", [](int k) { return to_py(coefficient_row(k).values); },
          py::arg("k"));
    m.def("render_table", [](int max_power, const std::string& format) {
        return render_table(decomposition_table(max_power), parse_format(format));
    }, py::arg("max_power"), py::arg("format") = "markdown");

    m.def("weyl_dimension", [](std::vector<int> labels, int n) {
        const Rank rank(n);
        return to_py(weyl_dimension(make_labels(std::move(labels), rank), rank));
    }, py::arg("labels"), py::arg("n"));

    m.def("freudenthal_weights", [](std::vector<int> labels, int n) {
        const Rank rank(n);
        py::dict out;
        for (const auto& [weight, m] : freudenthal_weights(make_labels(std::move(labels), rank), rank)) {
            out[to_tuple(weight.coords())] = to_py(m);
        }
        return out;
    }, py::arg("labels"), py::arg("n"));

    m.def("adjoint_power", [](int k, int n) { return irrep_dict(adjoint_power(k, Rank(n))); },
          py::arg("k"), py::arg("n"));

    m.def("extract_y_contents", [](int k_max, int n) {
        py::list out;
        for (const auto& block : extract_y_contents(k_max, Rank(n)).contents) {
            out.append(stable_dict(block));
        }
        return out;
    }, py::arg("k_max"), py::arg("n"));

    m.def("stable_to_dynkin", [](std::vector<int> left, std::vector<int> right, int n) {
        return to_tuple(stable_to_dynkin(StableLabel{std::move(left), std::move(right)}, Rank(n)).a);
    }, py::arg("left"), py::arg("right"), py::arg("n"));

    m.def("dynkin_to_stable", [](std::vector<int> labels, int n) {
        const Rank rank(n);
        const auto label = dynkin_to_stable(make_labels(std::move(labels), rank), rank);
        return py::make_tuple(to_tuple(label.left), to_tuple(label.right));
    }, py::arg("labels"), py::arg("n"));

    m.def("verify_stable_decomposition", [](int k_max, int n) {
        return parse_json(report_to_json(verify_stable_decomposition(k_max, Rank(n))));
    }, py::arg("k_max"), py::arg("n"));

    m.def("verify_combinatorics", [](int max_index) {
        return parse_json(report_to_json(verify_combinatorics(max_index)));
    }, py::arg("max_index"));
}

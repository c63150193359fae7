#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffeo/amplitudes.hpp"
#include "diffeo/bell.hpp"
#include "diffeo/diffeoeq.hpp"
#include "diffeo/json_io.hpp"
#include "diffeo/legendre.hpp"

namespace py = pybind11;
using namespace diffeo;

namespace {

std::map<Indeterminate, Rational> to_assignment(const std::map<std::string, std::string>& values) {
    std::map<Indeterminate, Rational> assignment;
    for (const auto& [name, value] : values) {
        const auto var = Indeterminate::from_name(name);
        if (!var) throw py::value_error("unknown indeterminate '" + name + "'");
        assignment[*var] = parse_rational(value);
    }
    return assignment;
}

py::dict report_to_dict(const Report& report) {
    py::list items;
    for (const auto& item : report.items) {
        py::dict row;
        row["name"] = item.name;
        row["ok"] = item.ok;
        if (!item.ok) {
            row["lhs"] = item.lhs;
            row["rhs"] = item.rhs;
        }
        items.append(std::move(row));
    }
    py::dict out;
    out["suite"] = report.suite;
    out["passed"] = report.all_ok();
    out["items"] = std::move(items);
    return out;
}

std::string bn_string(int n, const std::string& method, int trials, std::uint64_t seed,
                      const std::map<std::string, std::string>& coeffs) {
    if (n < 1) throw py::value_error("n must be >= 1");
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(n + 1);
    Polynomial poly;
    if (method == "closed") {
        poly = b_closed(n, diffeo);
    } else if (method == "inverse") {
        poly = b_inverse(n, diffeo);
    } else if (method == "direct" || method == "recurrence") {
        if (n > (method == "direct" ? 7 : 9))
            throw py::value_error("tree-based methods support n <= 7 (direct) / 9 (recurrence)");
        const FeynmanRules rules{diffeo};
        SplitMix64 rng(seed);
        for (int trial = 0; trial < trials; ++trial) {
            const KinematicPoint point = sample_kinematic_point(std::max(n, 2), rng);
            const Polynomial value =
                method == "direct" ? b_direct(n, rules, point) : b_recurrence(n, rules, point);
            if (trial == 0)
                poly = value;
            else if (!(value == poly))
                throw std::runtime_error("b_" + std::to_string(n) + " varied across kinematic points");
        }
    } else {
        throw py::value_error("method must be direct|recurrence|closed|inverse");
    }
    return poly.substitute(to_assignment(coeffs)).str();
}

std::vector<std::string> series_coeff_strings(const Series& series) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(series.order()) + 1);
    for (int n = 0; n <= series.order(); ++n) out.push_back(series.coeff(n).str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact amplitudes, Bell identities and series inversion for scalar field diffeomorphisms";

    m.def("bell", [](int n, int k, const std::map<std::string, std::string>& subst) {
              const int needed = std::max(n - k + 1, 1);
              return bell_fast(n, k, BellArgs::symbolic(needed)).substitute(to_assignment(subst)).str();
          },
          py::arg("n"), py::arg("k"), py::arg("subst") = std::map<std::string, std::string>{},
          "Partial Bell polynomial B_{n,k} as a canonical string");

    m.def("b_poly", &bn_string, py::arg("n"), py::arg("method") = "closed", py::arg("trials") = 20,
          py::arg("seed") = 42, py::arg("coeffs") = std::map<std::string, std::string>{},
          "Tree-series coefficient b_n by the chosen route");

    m.def("d_coeff", [](int r) { return FeynmanRules{Diffeomorphism::symbolic(r + 1)}.d_coeff(r).str(); },
          py::arg("r"), "Kinematic vertex coefficient d_r");
    m.def("c_coeff", [](int r) { return FeynmanRules{Diffeomorphism::symbolic(r + 1)}.c_coeff(r).str(); },
          py::arg("r"), "Massive vertex coefficient c_r");

    m.def("inverse_series",
          [](int order, const std::string& kind) {
              Series inverse = invert(series_from_diffeo(Diffeomorphism::symbolic(order)));
              if (kind == "egf") inverse = inverse.to_kind(SeriesKind::EGF);
              else if (kind != "ogf") throw py::value_error("kind must be 'egf' or 'ogf'");
              return series_coeff_strings(inverse);
          },
          py::arg("order"), py::arg("kind") = "egf",
          "Coefficients of the compositional inverse of the generic diffeomorphism");

    m.def("legendre_coeffs",
          [](int order) {
              const Diffeomorphism diffeo = Diffeomorphism::symbolic(order);
              return series_coeff_strings(legendre_transform(build_A(diffeo, order), order));
          },
          py::arg("order"), "OGF coefficients of the Legendre transform of the generic action");

    m.def("loday_coeffs",
          [](int order) {
              return series_coeff_strings(loday_inverse(Diffeomorphism::symbolic(order), order));
          },
          py::arg("order"), "Inverse-series coefficients from the signed rooted-tree sum");

    m.def("w_coeff",
          [](int s, int n) {
              return w_coeff(InteractingTheory::symbolic(std::max(s, 3), std::max(n, s) + 1), s, n).str();
          },
          py::arg("s"), py::arg("n"), "Transformed interaction-vertex Feynman rule w_n^(s)");
    m.def("W_coeff",
          [](int s, int n) {
              return W_coeff(InteractingTheory::symbolic(std::max(s, 3), std::max(n, s) + 1), s, n).str();
          },
          py::arg("s"), py::arg("n"), "Single-interaction-vertex amplitude W_n^(s)");

    m.def("verify",
          [](const std::string& suite, std::optional<int> order, int trials, std::uint64_t seed) {
              if (suite == "genfunc") return report_to_dict(check_genfunc_definition(order.value_or(12), order.value_or(12)));
              if (suite == "localization") return report_to_dict(check_lemma_localization(order.value_or(12)));
              if (suite == "starter") return report_to_dict(check_starter(order.value_or(12)));
              if (suite == "cvijovic") return report_to_dict(check_cvijovic(order.value_or(12)));
              if (suite == "ode") return report_to_dict(check_ode_suite(order.value_or(10)));
              if (suite == "recurrences") {
                  Report combined = check_recurrence2(order.value_or(10));
                  combined.suite = "recurrences";
                  combined.merge(check_recurrence3(order.value_or(10)));
                  return report_to_dict(combined);
              }
              if (suite == "smatrix") return report_to_dict(check_smatrix(5, order.value_or(8)));
              if (suite == "legendre") {
                  Report combined = check_legendre_b_relation(order.value_or(10));
                  combined.merge(check_loday_vs_invert(order.value_or(8)));
                  return report_to_dict(combined);
              }
              if (suite == "amplitudes") {
                  Report combined = check_amplitude_independence(order.value_or(5), trials, seed);
                  combined.merge(check_b_agreement(order.value_or(5), order.value_or(5) + 2, seed));
                  return report_to_dict(combined);
              }
              throw py::value_error("unknown suite '" + suite + "'");
          },
          py::arg("suite"), py::arg("order") = std::nullopt, py::arg("trials") = 20,
          py::arg("seed") = 42, "Run one verification suite and return its report");

    m.def("poly_eval",
          [](const std::string& poly, const std::map<std::string, std::string>& assignment) {
              return rational_str(Polynomial::parse(poly).eval(to_assignment(assignment)));
          },
          py::arg("poly"), py::arg("assignment"),
          "Exact evaluation of a canonical polynomial string");

    m.def("series_json",
          [](int order, const std::string& kind) {
              Series inverse = invert(series_from_diffeo(Diffeomorphism::symbolic(order)));
              if (kind == "egf") inverse = inverse.to_kind(SeriesKind::EGF);
              return series_to_json(inverse).dump();
          },
          py::arg("order"), py::arg("kind") = "ogf",
          "Inverse series in the documented JSON wire format");

    m.attr("__version__") = "1.0.0";
}

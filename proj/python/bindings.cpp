#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddgray/assembly.hpp"
#include "oddgray/cli.hpp"
#include "oddgray/factor.hpp"
#include "oddgray/flippable.hpp"
#include "oddgray/spanning.hpp"
#include "oddgray/verify.hpp"

namespace py = pybind11;
using namespace oddgray;

namespace {

std::vector<std::string> strings(const std::vector<Bitstring>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

std::vector<Bitstring> bitstrings(const std::vector<std::string>& xs) {
    std::vector<Bitstring> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(Bitstring::parse(x));
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::list failures;
    for (const auto& f : r.failures) failures.append(py::make_tuple(f.check, f.item));
    py::dict d;
    d["passed"] = r.passed();
    d["failures"] = failures;
    return d;
}

std::vector<std::pair<std::string, int>> tuple_members(const FlippableTuple& t) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& m : t.members()) out.emplace_back(m.word.to_string(), m.mark);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hamilton cycles in odd graphs and middle levels graphs";

    m.def("enumerate_dyck", [](int k) {
        std::vector<std::string> out;
        for (const auto& x : enumerate_dyck(k)) out.push_back(x.to_string());
        return out;
    }, py::arg("k"));
    m.def("binomial", &binomial);
    m.def("catalan", &catalan);
    m.def("mirror", [](const std::string& x) { return mirror(Bitstring::parse(x)).to_string(); });
    m.def("pi", [](const std::string& x) { return pi(DyckWord::parse(x)); }, py::arg("x"));
    m.def("path", [](const std::string& x) { return strings(path(DyckWord::parse(x)).vertices); },
          py::arg("x"));
    m.def("factor", [](int k) {
        std::vector<std::vector<std::string>> out;
        for (const auto& p : factor(k)) out.push_back(strings(p.vertices));
        return out;
    }, py::arg("k"));
    m.def("pattern", [](const std::string& name) { return tuple_members(pattern(Pattern::parse(name))); },
          py::arg("name"));
    m.def("tree_json", [](int k, std::optional<std::uint64_t> family) {
        TreeBuilder builder;
        const SpanningTree t = family ? builder.counting_tree(k, *family) : builder.T(k);
        return tree_json(k, family, t);
    }, py::arg("k"), py::arg("family") = py::none());
    m.def("family_bits", &family_bits, py::arg("k"));
    m.def("hamilton_odd", [](int k, std::optional<std::uint64_t> family) {
        return strings(hamilton_odd(k, family).vertices);
    }, py::arg("k"), py::arg("family") = py::none());
    m.def("hamilton_middle_levels", [](int k, std::optional<std::uint64_t> family) {
        return strings(hamilton_middle_levels(k, family).vertices);
    }, py::arg("k"), py::arg("family") = py::none());
    m.def("verify_certificate", [](int k, const std::string& target, const std::vector<std::string>& vs) {
        return report_dict(verify_certificate({k, parse_target(target), bitstrings(vs)}));
    }, py::arg("k"), py::arg("target"), py::arg("vertices"));
    m.def("brute_force_hamilton", [](int k, const std::string& target) -> std::optional<std::vector<std::string>> {
        auto c = brute_force_hamilton(k, parse_target(target));
        if (!c) return std::nullopt;
        return strings(*c);
    }, py::arg("k"), py::arg("target"));
    m.def("verify_tree", [](int k, std::optional<std::uint64_t> family) {
        return report_dict(verify_tree(k, family));
    }, py::arg("k"), py::arg("family") = py::none());
    m.def("verify_psi", [](int k) { return report_dict(verify_psi(k)); }, py::arg("k"));
    m.def("verify_factor", [](int k) { return report_dict(verify_factor(k)); }, py::arg("k"));
}

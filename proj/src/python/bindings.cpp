#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfrob/apery.hpp"
#include "pfrob/denumerant.hpp"
#include "pfrob/error.hpp"
#include "pfrob/harness.hpp"
#include "pfrob/triangular.hpp"

namespace py = pybind11;

namespace {

using Gens = std::vector<std::int64_t>;

pfrob::GeneratorSet gens_of(const Gens& g) { return pfrob::GeneratorSet::normalize(g); }

py::int_ to_py(const pfrob::BigInt& v) {
    auto text = pfrob::to_string(v);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

pfrob::CountDomain domain_of(bool positive) {
    return positive ? pfrob::CountDomain::positive : pfrob::CountDomain::nonnegative;
}

py::dict values_dict(const pfrob::harness::Values& vs) {
    py::dict d;
    for (const auto& [k, v] : vs) d[py::str(k)] = v;
    return d;
}

py::dict report_dict(const pfrob::harness::ClaimReport& r) {
    py::dict d;
    d["claim_id"] = r.claim_id;
    d["params"] = values_dict(r.params);
    d["expected"] = values_dict(r.expected);
    d["engine"] = values_dict(r.engine);
    d["oracle"] = r.oracle ? py::object(values_dict(*r.oracle)) : py::none();
    d["verdict"] = pfrob::harness::to_string(r.verdict);
    d["note"] = r.note;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "p-Frobenius numbers, p-Apery sets and denumerants";

    static py::exception<pfrob::Error> error(m, "PfrobError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const pfrob::Error& e) {
            py::set_error(error, (std::string(pfrob::to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def("normalize", [](const Gens& g) {
        auto A = gens_of(g);
        return Gens(A.gens().begin(), A.gens().end());
    }, py::arg("gens"));
    m.def("triangular", &pfrob::triangular, py::arg("n"));
    m.def("triangular_triple", [](std::int64_t n) {
        auto A = pfrob::triangular_triple(n);
        return Gens(A.gens().begin(), A.gens().end());
    }, py::arg("n"));

    m.def("denumerant", [](const Gens& g, std::int64_t n) { return pfrob::denumerant(gens_of(g), n); },
          py::arg("gens"), py::arg("n"));
    m.def("denumerant_table", [](const Gens& g, std::int64_t capacity) {
        auto t = pfrob::denumerant_table(gens_of(g), capacity);
        return std::vector<std::uint64_t>(t.counts().begin(), t.counts().end());
    }, py::arg("gens"), py::arg("capacity"));
    m.def("representations", [](const Gens& g, std::int64_t n, std::size_t limit) {
        auto reps = pfrob::enumerate_representations(gens_of(g), n, limit);
        std::vector<Gens> out;
        for (auto& r : reps.items) out.push_back(std::move(r.coeffs));
        return out;
    }, py::arg("gens"), py::arg("n"), py::arg("limit") = 1000);

    m.def("p_apery_set", [](const Gens& g, std::int64_t p) { return pfrob::p_apery_set(gens_of(g), p).m; },
          py::arg("gens"), py::arg("p"));
    m.def("p_frobenius", [](const Gens& g, std::int64_t p) { return pfrob::p_frobenius(gens_of(g), p); },
          py::arg("gens"), py::arg("p"));
    m.def("p_sylvester_number", [](const Gens& g, std::int64_t p, bool positive) {
        return pfrob::p_sylvester_number(gens_of(g), p, domain_of(positive));
    }, py::arg("gens"), py::arg("p"), py::arg("positive") = false);
    m.def("p_sylvester_sum", [](const Gens& g, std::int64_t p) { return pfrob::p_sylvester_sum(gens_of(g), p); },
          py::arg("gens"), py::arg("p"));
    m.def("p_power_sum", [](const Gens& g, std::int64_t p, int mu) {
        return to_py(pfrob::p_power_sum(gens_of(g), p, mu));
    }, py::arg("gens"), py::arg("p"), py::arg("mu"));
    m.def("p_frobenius_summary", [](const Gens& g, std::int64_t p, const std::vector<int>& mus, bool positive) {
        auto s = pfrob::p_frobenius_summary(gens_of(g), p, mus, domain_of(positive));
        py::dict d;
        d["g"] = s.g;
        d["n"] = s.n_count;
        d["s"] = s.s_sum;
        py::dict sums;
        for (const auto& [mu, v] : s.power_sums) sums[py::int_(mu)] = to_py(v);
        d["power_sums"] = sums;
        return d;
    }, py::arg("gens"), py::arg("p"), py::arg("mus") = std::vector<int>{}, py::arg("positive") = false);
    m.def("exact_rep_frobenius", [](const Gens& g, std::int64_t p) {
        return pfrob::exact_rep_frobenius(gens_of(g), p);
    }, py::arg("gens"), py::arg("p"));

    m.def("two_var_g", &pfrob::two_var_g, py::arg("a"), py::arg("b"), py::arg("p"));
    m.def("two_var_n", &pfrob::two_var_n, py::arg("a"), py::arg("b"), py::arg("p"));
    m.def("two_var_s", &pfrob::two_var_s, py::arg("a"), py::arg("b"), py::arg("p"));

    m.def("g_p0", &pfrob::g_p0, py::arg("n"));
    m.def("g_p1", &pfrob::g_p1, py::arg("n"));
    m.def("g_p2", &pfrob::g_p2, py::arg("n"));
    m.def("g_p3_to_10", &pfrob::g_p3_to_10, py::arg("n"), py::arg("p"));
    m.def("theorem1_point", [](std::int64_t n, std::int64_t p) {
        auto pt = pfrob::theorem1_point(n, p);
        return py::make_tuple(pt.p_index, pt.g_value);
    }, py::arg("n"), py::arg("p"));

    m.def("claim_ids", [] {
        std::vector<std::string> ids;
        for (const auto& c : pfrob::harness::registry()) ids.push_back(c.id);
        return ids;
    });
    m.def("verify", [](const std::string& suite, bool probe) {
        auto claims = pfrob::harness::matching_claims(suite);
        if (claims.empty()) throw pfrob::Error(pfrob::Errc::unknown_claim, "no claim matches '" + suite + "'");
        py::list out;
        for (const auto* c : claims) {
            std::vector<pfrob::harness::ClaimReport> reports;
            {
                py::gil_scoped_release release;
                reports = pfrob::harness::verify_claim(*c, {probe});
            }
            for (const auto& r : reports) out.append(report_dict(r));
        }
        return out;
    }, py::arg("suite") = "all", py::arg("probe") = false);
}

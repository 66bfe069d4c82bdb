#include "linkhom/formulas.hpp"
#include "linkhom/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using linkhom::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: throw std::invalid_argument("unsupported JSON value");
    }
}

linkhom::LengthVector parse(const std::string& text) { return linkhom::LengthVector::parse(text); }

linkhom::SubsetMask mask_from(const std::vector<int>& elements) {
    linkhom::SubsetMask m;
    for (int i : elements) m = m.with(i);
    return m;
}

}  // namespace

PYBIND11_MODULE(_linkhom, m) {
    m.doc() = "exact chamber, Morse and intersection-ring invariants of linkage moduli spaces";

    py::register_exception<linkhom::NonGenericError>(m, "NonGenericError", PyExc_ValueError);

    m.def("classify_subset", [](const std::string& lengths, const std::vector<int>& subset) {
        return to_string(linkhom::classify_subset(parse(lengths), mask_from(subset)));
    });
    m.def("is_generic", [](const std::string& lengths) { return linkhom::is_generic(parse(lengths)); });
    m.def("dominating_index",
          [](const std::string& lengths) { return linkhom::dominating_index(parse(lengths)); });
    m.def("is_d_regular", [](const std::string& lengths, int d) {
        return linkhom::is_d_regular(parse(lengths), d);
    });
    m.def("dim_moduli", &linkhom::dim_moduli);
    m.def("codim_stratum", &linkhom::codim_stratum);

    m.def("descriptor_id", [](const std::string& lengths) {
        return linkhom::descriptor(parse(lengths)).id();
    });
    m.def("same_chamber", [](const std::string& a, const std::string& b) {
        return linkhom::same_chamber(parse(a), parse(b));
    });
    m.def("enumerate_chambers", [](int n, int dim) {
        py::list out;
        for (const linkhom::Chamber& c : linkhom::enumerate_chambers(n))
            out.append(json_to_py(linkhom::chamber_record(c, dim)));
        return out;
    }, py::arg("n"), py::arg("dim") = 0);

    m.def("a_vector", [](const std::string& lengths) {
        return linkhom::a_vector(parse(lengths).sorted());
    });
    m.def("betti_counts", [](const std::string& lengths) {
        return linkhom::betti_counts(parse(lengths));
    });
    m.def("filtration", [](const std::string& lengths) { return linkhom::filtration(parse(lengths)); });

    m.def("morse_data_table", [](int d, int k, int s) {
        return json_to_py(linkhom::to_json(linkhom::morse_data_table(d, k, s)));
    }, py::arg("d"), py::arg("k"), py::arg("s") = 1);

    m.def("graded_ranks", [](const std::string& lengths, int d) {
        return linkhom::graded_ranks(parse(lengths), d);
    });
    m.def("first_ih_rank", [](const std::string& lengths, int d) {
        return linkhom::first_ih_rank(parse(lengths), d).rank;
    });
    m.def("distinguish", [](const std::string& a, const std::string& b, int d) {
        return json_to_py(linkhom::to_json(linkhom::distinguish(parse(a), parse(b), d)));
    });
    m.def("sweep", [](int n, int d) { return json_to_py(linkhom::to_json(linkhom::sweep(n, d))); });
    m.def("shape_space_ring", [](int d, int n) {
        linkhom::ShapeSpaceRing r = linkhom::shape_space_ring(d, n);
        py::dict out;
        out["presentation"] = r.presentation;
        out["x_degree"] = r.x_degree;
        out["x_power"] = r.x_power;
        out["two_torsion"] = r.two_torsion;
        return out;
    });

    m.def("smith_normal_form", [](const std::vector<std::vector<std::int64_t>>& rows) {
        linkhom::IntMatrix a;
        for (const auto& row : rows) a.emplace_back(row.begin(), row.end());
        linkhom::SmithResult r = linkhom::smith_normal_form(std::move(a));
        std::vector<std::int64_t> diagonal;
        for (const linkhom::Int& v : r.diagonal) diagonal.push_back(v.convert_to<std::int64_t>());
        return py::make_tuple(diagonal, r.rank);
    });

    m.def("analyze", [](const std::string& lengths, int d) {
        return json_to_py(linkhom::analysis_report(parse(lengths), d));
    });
}

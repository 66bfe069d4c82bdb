#include "linkhom/report.hpp"

#include "linkhom/formulas.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace linkhom {

namespace {

json int_to_json(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer too large for JSON");
    return json(v.convert_to<std::int64_t>());
}

}  // namespace

json to_json(const Rational& r) {
    return json::array({int_to_json(numerator(r)), int_to_json(denominator(r))});
}

json to_json(const EpsRational& v) {
    json out = json::array();
    for (const Rational& c : v.coeffs()) out.push_back(to_json(c));
    return out;
}

json to_json(const LengthVector& lengths) {
    json out = json::array();
    for (const EpsRational& e : lengths.entries()) out.push_back(to_json(e));
    return out;
}

EpsRational eps_rational_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const json& pair : j)
        coeffs.emplace_back(Int(pair.at(0).get<std::int64_t>()), Int(pair.at(1).get<std::int64_t>()));
    return EpsRational(std::move(coeffs));
}

LengthVector length_vector_from_json(const json& j) {
    std::vector<EpsRational> entries;
    for (const json& e : j) entries.push_back(eps_rational_from_json(e));
    return LengthVector(std::move(entries));
}

json to_json(const SubsetMask& subset) { return json(subset.elements()); }

json to_json(const ChamberDescriptor& desc) {
    json shorts = json::array();
    for (SubsetMask j : desc.shorts) shorts.push_back(to_json(j));
    return json{{"n", desc.n}, {"shorts", shorts}, {"empty", desc.empty_flag}, {"id", desc.id()}};
}

json to_json(const FaceComplex& cx) {
    json faces = json::array();
    for (SubsetMask f : cx.faces) faces.push_back(to_json(f));
    return json{{"vertices", cx.vertices()}, {"faces", faces}};
}

json to_json(const HomologyGroup& g) {
    json torsion = json::array();
    for (const Int& t : g.torsion) torsion.push_back(int_to_json(t));
    return json{{"free", g.free_rank}, {"torsion", torsion}};
}

json to_json(const MorseDataTable& table) {
    json groups = json::array();
    for (const auto& [r, group] : table.groups) {
        json g = to_json(group);
        g["r"] = r;
        groups.push_back(g);
    }
    return json{{"d", table.d},       {"k", table.k},           {"s", table.s},
                {"top_dim", table.top_dim}, {"groups", groups}, {"warnings", table.warnings}};
}

json to_json(const DistinguishVerdict& v) {
    return json{{"same_chamber", v.same_chamber},
                {"rings_isomorphic", v.rings_isomorphic},
                {"theorem_applicable", v.theorem_applicable},
                {"consistent_with_theorem", v.consistent_with_theorem},
                {"warnings", v.warnings}};
}

json to_json(const SweepReport& report) {
    json violations = json::array();
    for (const auto& [a, b] : report.violations) violations.push_back(json::array({a, b}));
    return json{{"n", report.n},
                {"d", report.d},
                {"pairs_checked", report.pairs_checked},
                {"violations", violations},
                {"ok", report.violations.empty()}};
}

json analysis_report(const LengthVector& lengths, int d) {
    LengthVector sorted = lengths.sorted();
    require_generic(sorted);
    int n = sorted.size();
    std::vector<std::string> warnings;

    json r;
    r["input"] = to_json(lengths);
    r["input_text"] = lengths.str();
    r["ordered"] = to_json(sorted);
    r["ordered_text"] = sorted.str();
    r["n"] = n;
    r["d"] = d;
    r["generic"] = true;
    r["dominating_index"] = dominating_index(lengths);
    r["d_regular"] = is_d_regular(sorted, d);
    r["empty"] = is_empty_moduli(sorted);

    if (d >= 3 && n > d) {
        r["dim_moduli"] = dim_moduli(n, d);
        json codims = json::array();
        for (int k = 2; k <= d - 2; ++k) codims.push_back(codim_stratum(n, d, k));
        r["stratum_codims"] = codims;
    } else {
        r["dim_moduli"] = nullptr;
        r["stratum_codims"] = nullptr;
        warnings.push_back("dimension and codimension formulas need n > d >= 3");
    }

    r["a_vector"] = a_vector(sorted);
    {
        json families = json::array();
        for (int k = 0; k <= n - 3; ++k) {
            json family = json::array();
            for (SubsetMask j : short_sets(sorted, k)) family.push_back(to_json(j));
            families.push_back(family);
        }
        r["s_families"] = families;
    }
    r["chamber_id"] = descriptor(sorted).id();
    r["betti_m3"] = betti_counts(sorted);
    r["filtration"] = filtration(sorted);

    if (d >= 4 && n > d) {
        FirstIhRank rank = first_ih_rank(sorted, d);
        r["first_ih_rank"] = rank.rank;
        r["first_ih_coefficients"] = rank.coefficients;
        warnings.insert(warnings.end(), rank.warnings.begin(), rank.warnings.end());
    } else {
        r["first_ih_rank"] = nullptr;
        r["first_ih_coefficients"] = nullptr;
        warnings.push_back("first intersection rank needs n > d >= 4");
    }

    if (d >= 4 && d % 2 == 0) {
        r["ring_graded_ranks"] = graded_ranks(sorted, d);
        if (!is_d_regular(sorted, d))
            warnings.push_back("ring ranks computed outside the d-regular range of the theorem");
    } else {
        r["ring_graded_ranks"] = nullptr;
        warnings.push_back("ring ranks are computed for even d >= 4 only");
    }
    r["face_complex"] = to_json(short_complex(sorted));
    r["warnings"] = warnings;
    return r;
}

json chamber_record(const Chamber& chamber, int d) {
    json record;
    if (d >= 2) record = analysis_report(chamber.representative, d);
    record["id"] = chamber.desc.id();
    record["n"] = chamber.desc.n;
    json shorts = json::array();
    for (SubsetMask j : chamber.desc.shorts) shorts.push_back(to_json(j));
    record["shorts"] = shorts;
    record["empty"] = chamber.desc.empty_flag;
    record["representative"] = to_json(chamber.representative);
    record["representative_text"] = chamber.representative.str();
    json regular_for = json::array();
    for (int dd = 2; dd <= chamber.desc.n; ++dd)
        if (is_d_regular(chamber.representative, dd)) regular_for.push_back(dd);
    record["regular_for"] = regular_for;
    if (d < 2) {
        record["a_vector"] = a_vector(chamber.representative.sorted());
        record["betti_m3"] = betti_counts(chamber.representative);
        record["filtration"] = filtration(chamber.representative);
    }
    return record;
}

namespace {

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_value(const json& value) {
    if (value.is_null()) return "";
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
    if (value.is_array()) {
        std::string out;
        bool first = true;
        for (const json& item : value) {
            if (!first) out += "|";
            out += item.is_array() || item.is_object() ? item.dump() : csv_value(item);
            first = false;
        }
        return out;
    }
    return value.dump();
}

}  // namespace

std::string csv_header(const json& record) {
    std::string out;
    bool first = true;
    for (auto it = record.begin(); it != record.end(); ++it) {
        if (!first) out += ",";
        out += csv_escape(it.key());
        first = false;
    }
    return out;
}

std::string csv_row(const json& record) {
    std::string out;
    bool first = true;
    for (auto it = record.begin(); it != record.end(); ++it) {
        if (!first) out += ",";
        out += csv_escape(csv_value(it.value()));
        first = false;
    }
    return out;
}

}  // namespace linkhom

#include "linkhom/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using linkhom::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    out << text << "\n";
}

std::string render_records(const std::vector<json>& records, const std::string& format) {
    if (format == "csv") {
        std::string text;
        if (!records.empty()) text = linkhom::csv_header(records.front());
        for (const json& r : records) {
            text += "\n";
            text += linkhom::csv_row(r);
        }
        return text;
    }
    json array = json::array();
    for (const json& r : records) array.push_back(r);
    return array.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chamber, Morse and intersection-ring invariants of linkage moduli spaces"};
    app.require_subcommand(1);
    int rc = 0;

    std::string lengths_text, out_path, a_text, b_text, format = "json";
    int n = 0, dim = 0, cells = 0, scale = 1;
    bool regular_only = false;

    auto* analyze = app.add_subcommand("analyze", "full invariant report for one length vector");
    analyze->add_option("--lengths", lengths_text, "comma separated exact entries, e.g. 1,1,3/2,2")
        ->required();
    analyze->add_option("--dim", dim, "ambient dimension d >= 2")->required()->check(CLI::Range(2, 1000));
    analyze->add_option("--out", out_path, "output file (default stdout)");
    analyze->callback([&] {
        json r = linkhom::analysis_report(linkhom::LengthVector::parse(lengths_text), dim);
        emit(r.dump(2), out_path);
    });

    auto* chambers = app.add_subcommand("chambers", "enumerate chambers up to permutation");
    chambers->add_option("--n", n, "number of links, 4..8")->required()->check(CLI::Range(4, 8));
    chambers->add_option("--dim", dim, "embed the full analysis for this d")->check(CLI::Range(2, 1000));
    chambers->add_flag("--regular-only", regular_only, "keep only d-regular chambers (needs --dim)");
    chambers->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    chambers->add_option("--out", out_path, "output file (default stdout)");
    chambers->callback([&] {
        if (regular_only && dim == 0) throw std::invalid_argument("--regular-only needs --dim");
        std::vector<linkhom::Chamber> list =
            regular_only ? linkhom::regular_chambers(n, dim) : linkhom::enumerate_chambers(n);
        std::vector<json> records;
        for (const linkhom::Chamber& c : list) records.push_back(linkhom::chamber_record(c, dim));
        emit(render_records(records, format), out_path);
    });

    auto* distinguish = app.add_subcommand("distinguish", "compare two vectors by chamber and ring");
    distinguish->add_option("--a", a_text, "first length vector")->required();
    distinguish->add_option("--b", b_text, "second length vector")->required();
    distinguish->add_option("--dim", dim, "ambient dimension")->required()->check(CLI::Range(2, 1000));
    distinguish->add_option("--out", out_path, "output file (default stdout)");
    distinguish->callback([&] {
        linkhom::DistinguishVerdict v = linkhom::distinguish(
            linkhom::LengthVector::parse(a_text), linkhom::LengthVector::parse(b_text), dim);
        emit(linkhom::to_json(v).dump(2), out_path);
        if (!v.consistent_with_theorem) rc = 1;
    });

    auto* morse_data = app.add_subcommand("morse-data", "intersection homology of one Morse datum");
    morse_data->add_option("--dim", dim, "ambient dimension d >= 4")->required()->check(CLI::Range(4, 64));
    morse_data->add_option("--cells", cells, "number of merged links k")->required()->check(CLI::Range(1, 64));
    morse_data->add_option("--perversity-scale", scale, "0 or 1")->check(CLI::Range(0, 1));
    morse_data->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    morse_data->add_option("--out", out_path, "output file (default stdout)");
    morse_data->callback([&] {
        linkhom::MorseDataTable table = linkhom::morse_data_table(dim, cells, scale);
        if (format == "text") {
            std::string text = "top dimension " + std::to_string(table.top_dim);
            for (const auto& [r, g] : table.groups)
                text += "\n  offset " + std::to_string(r) + ": " + g.str();
            for (const std::string& w : table.warnings) text += "\nwarning: " + w;
            emit(text, out_path);
        } else {
            emit(linkhom::to_json(table).dump(2), out_path);
        }
    });

    auto* sweep = app.add_subcommand("sweep", "pairwise ring-vs-chamber check over regular chambers");
    sweep->add_option("--n", n, "number of links, 4..7")->required()->check(CLI::Range(4, 7));
    sweep->add_option("--dim", dim, "even ambient dimension >= 4")->required()->check(CLI::Range(4, 1000));
    sweep->add_option("--out", out_path, "output file (default stdout)");
    sweep->callback([&] {
        if (dim % 2 != 0) throw std::invalid_argument("sweep needs an even dimension");
        linkhom::SweepReport report = linkhom::sweep(n, dim);
        emit(linkhom::to_json(report).dump(2), out_path);
        if (!report.violations.empty()) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const linkhom::NonGenericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

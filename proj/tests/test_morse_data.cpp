#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linkhom/formulas.hpp"
#include "linkhom/morse_data.hpp"

#include <set>

using namespace linkhom;

TEST_CASE("cell enumeration") {
    auto small = enumerate_cells(4, 1);
    REQUIRE(small.size() == 2);
    CHECK(small[0].rows == std::vector<int>{0, 0});
    CHECK(small[0].dimension() == 1);
    CHECK(small[1].rows == std::vector<int>{1, 0});
    CHECK(small[1].dimension() == 2);

    auto cells = enumerate_cells(4, 3);
    REQUIRE(cells.size() == 4);
    std::multiset<long long> dims;
    for (const SymbolicCell& c : cells) dims.insert(c.dimension());
    CHECK(dims == std::multiset<long long>{3, 4, 6, 8});
    CHECK(*dims.rbegin() == dim_moduli(6, 4));

    auto big = enumerate_cells(6, 5);
    bool found_top = false;
    for (const SymbolicCell& c : big)
        if (c.rows == std::vector<int>{5, 4, 3, 2}) {
            found_top = true;
            CHECK(c.dimension() == 19);
            CHECK(c.dimension() == dim_moduli(8, 6));
        }
    CHECK(found_top);
    CHECK_THROWS_AS(enumerate_cells(3, 2), std::invalid_argument);
}

TEST_CASE("cell counts stay stable") {
    // golden counts for k = 1..d+4
    const std::vector<std::vector<std::size_t>> expected = {
        {2, 3, 4, 5, 6, 7, 8, 9},
        {2, 4, 7, 11, 16, 22, 29, 37, 46},
        {2, 4, 8, 15, 26, 42, 64, 93, 130, 176},
        {2, 4, 8, 16, 31, 57, 99, 163, 256, 386, 562},
        {2, 4, 8, 16, 32, 63, 120, 219, 382, 638, 1024, 1586},
    };
    for (int d = 4; d <= 8; ++d)
        for (int k = 1; k <= d + 4; ++k) {
            auto cells = enumerate_cells(d, k);
            CHECK(cells.size() == expected[d - 4][k - 1]);
            std::set<std::vector<int>> unique;
            long long top = 0;
            for (const SymbolicCell& c : cells) {
                unique.insert(c.rows);
                top = std::max(top, c.dimension());
            }
            CHECK(unique.size() == cells.size());
            if (k >= d - 2) CHECK(top == dim_moduli(k + 3, d));
        }
}

TEST_CASE("allowability by row counts") {
    // scale zero keeps the top cell only
    for (int d = 4; d <= 8; ++d)
        for (int k = d - 2; k <= d + 3; ++k) {
            int allowed = 0;
            long long top_dim = dim_moduli(k + 3, d);
            for (const SymbolicCell& c : enumerate_cells(d, k))
                if (is_allowable(c, 0)) {
                    ++allowed;
                    CHECK(c.dimension() == top_dim);
                }
            CHECK(allowed == 1);
        }

    {
        std::vector<std::vector<int>> allowed;
        for (const SymbolicCell& c : enumerate_cells(4, 3))
            if (is_allowable(c, 1)) allowed.push_back(c.rows);
        CHECK(allowed == std::vector<std::vector<int>>{{2, 1}, {3, 2}});
    }
    {
        int allowed = 0;
        for (const SymbolicCell& c : enumerate_cells(6, 5))
            if (is_allowable(c, 1)) ++allowed;
        CHECK(allowed == 4);
    }
    // one cell per scale-one dimension, d-2 of them in total
    for (int d = 4; d <= 8; ++d) {
        int k = d + 1;
        std::set<long long> dims;
        int count = 0;
        for (const SymbolicCell& c : enumerate_cells(d, k))
            if (is_allowable(c, 1)) {
                dims.insert(c.dimension());
                ++count;
            }
        CHECK(count == d - 2);
        CHECK(static_cast<int>(dims.size()) == count);
    }

    SymbolicCell top = enumerate_cells(4, 3).back();
    CHECK_THROWS_AS(is_allowable(top, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_allowable(top, -1), std::invalid_argument);
}

TEST_CASE("row-count rule matches the codimension inequality") {
    for (int d = 4; d <= 8; ++d)
        for (int k = 1; k <= d + 4; ++k)
            for (int s = 0; s <= k + 2 - d; ++s)
                for (const SymbolicCell& c : enumerate_cells(d, k))
                    CHECK(is_allowable(c, s) == is_allowable_codim(c, s));
}

TEST_CASE("scale-one subcomplex boundaries") {
    {
        IntegerChainComplex cx = p1_subcomplex(5, 4);
        long long top = dim_moduli(7, 5);
        // cells in offsets 0, 2, 3; the only nonzero boundary is times two
        CHECK(cx.cells(static_cast<int>(top)) == 1);
        CHECK(cx.cells(static_cast<int>(top) - 1) == 0);
        CHECK(cx.boundary(static_cast<int>(top) - 2) == IntMatrix{{Int(2)}});
        CHECK(cx.boundary_condition_holds());
        auto h = cx.homology();
        CHECK(h.at(static_cast<int>(top)) == HomologyGroup{1, {}});
        CHECK(h.at(static_cast<int>(top) - 3) == HomologyGroup{0, {Int(2)}});
        CHECK(h.at(static_cast<int>(top) - 2) == HomologyGroup{0, {}});
    }
    {
        IntegerChainComplex cx = p1_subcomplex(4, 3);
        long long top = dim_moduli(6, 4);
        auto h = cx.homology();
        CHECK(h.at(static_cast<int>(top)) == HomologyGroup{1, {}});
        CHECK(h.at(static_cast<int>(top) - 2) == HomologyGroup{1, {}});
    }
    {
        // alternating coefficients, ending with a doubled map into the lowest cell
        IntegerChainComplex cx = p1_subcomplex(7, 6);
        long long top = dim_moduli(9, 7);
        CHECK(cx.boundary(static_cast<int>(top) - 2) == IntMatrix{{Int(2)}});  // from offset 2
        CHECK(cx.boundary(static_cast<int>(top) - 3) == IntMatrix{{Int(0)}});
        CHECK(cx.boundary(static_cast<int>(top) - 4) == IntMatrix{{Int(2)}});
        CHECK(cx.boundary_condition_holds());
    }
    CHECK_THROWS_AS(p1_subcomplex(5, 3), std::invalid_argument);
}

namespace {

void check_table(const MorseDataTable& table, const std::map<int, HomologyGroup>& expected) {
    CHECK(table.groups == expected);
}

HomologyGroup z() { return HomologyGroup{1, {}}; }
HomologyGroup z2() { return HomologyGroup{0, {Int(2)}}; }

}  // namespace

TEST_CASE("datum homology tables") {
    check_table(morse_data_table(5, 4, 1), {{0, z()}, {3, z2()}});
    check_table(morse_data_table(4, 3, 1), {{0, z()}, {2, z()}});
    check_table(morse_data_table(6, 5, 0), {{0, z()}});
    CHECK(morse_data_table(4, 3, 1).warnings.size() == 1);
    CHECK(morse_data_table(5, 4, 1).warnings.empty());
    CHECK(morse_data_table(5, 4, 1).top_dim == dim_moduli(7, 5));

    CHECK_THROWS_AS(morse_data_table(5, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(morse_data_table(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(morse_data_table(5, 2, 0), std::invalid_argument);

    // the table does not depend on the datum size
    for (int d = 4; d <= 7; ++d) {
        auto reference = morse_data_table(d, d - 1, 1).groups;
        for (int k = d; k <= d + 4; ++k) CHECK(morse_data_table(d, k, 1).groups == reference);
    }
}

#pragma once

// The two polynomial tables that define the loop: f (the correction term of
// the product) and h (the correction term of the inverse). Concrete
// multiplication, symbolic multiplication and validation all read these.

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "moufang/errors.hpp"
#include "moufang/poly.hpp"

namespace moufang {

/// Which argument blocks a table may read.
enum class TableArity { Binary, Unary };

class FormulaTable {
public:
    FormulaTable(TableArity arity, std::array<Poly, kCoordCount> coords) : arity_(arity), coords_(std::move(coords)) {}

    TableArity arity() const { return arity_; }
    /// Coordinate polynomial k, 1-based.
    const Poly& coord(int k) const {
        if (k < 1 || k > kCoordCount) throw IndexOutOfRange("table coordinate " + std::to_string(k) + " outside 1..19");
        return coords_[k - 1];
    }
    const std::array<Poly, kCoordCount>& coords() const { return coords_; }

    /// Copy with coordinate k replaced.
    FormulaTable with_coord(int k, Poly p) const {
        FormulaTable t = *this;
        t.coord(k);
        t.coords_[k - 1] = std::move(p);
        return t;
    }

    friend bool operator==(const FormulaTable&, const FormulaTable&) = default;

private:
    TableArity arity_;
    std::array<Poly, kCoordCount> coords_;
};

namespace detail {

inline FormulaTable table_from_strings(TableArity arity, const std::array<std::string_view, kCoordCount>& src) {
    std::array<Poly, kCoordCount> coords;
    for (int k = 0; k < kCoordCount; ++k) coords[k] = src[k] == "0" ? Poly{} : parse_poly(src[k]);
    return FormulaTable(arity, std::move(coords));
}

}  // namespace detail

/// f_1..f_19, read from blocks X (left factor) and Y (right factor).
inline const FormulaTable& f_table() {
    static const FormulaTable table = detail::table_from_strings(TableArity::Binary, {
        "0", "0", "0", "0",
        "-x2*y1",
        "-x3*y1",
        "-x4*y1",
        "-x3*y2",
        "-x4*y2",
        "-x4*y3",
        "-x2*x3*y1 - x2*y1*y3 + x5*y3 - x8*y1",
        "-x2*x4*y1 - x2*y1*y4 + x5*y4 - x9*y1",
        "-x3*y1*y2 + x6*y2 + x8*y1",
        "-x3*x4*y1 - x3*y1*y4 + x6*y4 - x10*y1",
        "-x4*y1*y2 + x7*y2 + x9*y1",
        "-x4*y1*y3 + x7*y3 + x10*y1",
        "-x3*x4*y2 - x3*y2*y4 + x8*y4 - x10*y2",
        "-x4*y2*y3 + x9*y3 + x10*y2",
        "-x1*x2*x4*y3 + x1*x2*y3*y4 + x1*x3*y2*y4 + x1*x4*y2*y3 - x1*y2*y3*y4"
        " - x2*x3*x4*y1 + x2*x3*y1*y4 + x2*x4*y1*y3 + x3*x4*y1*y2 - x3*y1*y2*y4 + x1*x8*y4"
        " - x1*x9*y3 + x1*x10*y2 - x1*y2*y10 + x1*y3*y9 - x1*y4*y8 - x2*x6*y4 + x2*x7*y3 - x2*x10*y1"
        " + x2*y1*y10 - x2*y3*y7 + x2*y4*y6 + x3*x5*y4 - x3*x7*y2 + x3*x9*y1 - x3*y1*y9 + x3*y2*y7"
        " - x3*y4*y5 - x4*x5*y3 + x4*x6*y2 - x4*x8*y1 + x4*y1*y8 - x4*y2*y6 + x4*y3*y5",
    });
    return table;
}

/// h_1..h_19, read from block X only.
inline const FormulaTable& h_table() {
    static const FormulaTable table = detail::table_from_strings(TableArity::Unary, {
        "0", "0", "0", "0",
        "-x1*x2",
        "-x1*x3",
        "-x1*x4",
        "-x2*x3",
        "-x2*x4",
        "-x3*x4",
        "-x1*x8 + x3*x5",
        "-x1*x9 + x4*x5",
        "x1*x2*x3 + x1*x8 + x2*x6",
        "-x1*x10 + x4*x6",
        "x1*x2*x4 + x1*x9 + x2*x7",
        "x1*x3*x4 + x1*x10 + x3*x7",
        "-x2*x10 + x4*x8",
        "x2*x3*x4 + x2*x10 + x3*x9",
        "-x1*x2*x3*x4",
    });
    return table;
}

/// The product table and the inverse table, as one loop definition.
struct Tables {
    FormulaTable f;
    FormulaTable h;

    static const Tables& shipped() {
        static const Tables tables{f_table(), h_table()};
        return tables;
    }
};

// ---------------------------------------------------------------------------
// Fixture text format: one monomial per line, "coord; coeff; factors", e.g.
//   11; 2; x2*x3*y1
// '#' starts a comment line. Coefficients are written in {1, 2}.

inline FormulaTable parse_table_fixture(std::string_view text, TableArity arity) {
    std::array<std::vector<Term>, kCoordCount> terms;
    std::size_t offset = 0;
    while (offset < text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(offset, end - offset);
        const std::size_t line_start = offset;
        offset = end + 1;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;

        const auto semi1 = line.find(';');
        const auto semi2 = semi1 == std::string_view::npos ? semi1 : line.find(';', semi1 + 1);
        if (semi2 == std::string_view::npos) throw ParseError(line_start, "fixture line needs 'coord; coeff; factors'");

        auto to_int = [&](std::string_view field, std::size_t at) {
            std::string s(field);
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(s, &used);
            } catch (const std::exception&) {
                throw ParseError(line_start + at, "expected an integer");
            }
            if (s.find_first_not_of(" \t\r", used) != std::string::npos) throw ParseError(line_start + at, "trailing characters");
            return v;
        };
        const int coord = to_int(line.substr(0, semi1), 0);
        const int coeff = to_int(line.substr(semi1 + 1, semi2 - semi1 - 1), semi1 + 1);
        if (coord < 1 || coord > kCoordCount) throw ParseError(line_start, "coordinate outside 1..19");
        if (coeff != 1 && coeff != 2) throw ParseError(line_start + semi1 + 1, "coefficient must be 1 or 2");

        Poly factors;
        try {
            factors = parse_poly(line.substr(semi2 + 1));
        } catch (const ParseError& e) {
            throw ParseError(line_start + semi2 + 1 + e.position(), e.reason());
        }
        if (factors.term_count() != 1 || factors.terms().front().coeff != Gf3::one())
            throw ParseError(line_start + semi2 + 1, "factors must be a single product of variables");
        terms[coord - 1].push_back({factors.terms().front().monomial, Gf3{coeff}});
    }
    std::array<Poly, kCoordCount> coords;
    for (int k = 0; k < kCoordCount; ++k) coords[k] = Poly::from_terms(terms[k]);
    return FormulaTable(arity, std::move(coords));
}

inline FormulaTable load_table_fixture(const std::string& path, TableArity arity) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open table fixture " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_table_fixture(buf.str(), arity);
}

/// Loads f_table.txt and h_table.txt from a directory.
inline Tables load_tables(const std::string& dir) {
    return Tables{load_table_fixture(dir + "/f_table.txt", TableArity::Binary),
                  load_table_fixture(dir + "/h_table.txt", TableArity::Unary)};
}

inline std::string format_table_fixture(const FormulaTable& table) {
    std::string out;
    for (int k = 1; k <= kCoordCount; ++k)
        for (const auto& t : table.coord(k).terms())
            out += std::to_string(k) + "; " + std::to_string(t.coeff.value()) + "; " + t.monomial.to_string() + "\n";
    return out;
}

// ---------------------------------------------------------------------------

struct TableReport {
    std::array<std::size_t, kCoordCount> term_counts{};
    int max_degree = 0;
    /// Variable indices read, per block.
    std::map<char, std::set<int>> indices_read;
    std::size_t total_terms = 0;
};

/// Checks the structural invariants of a table and reports its shape.
/// Throws ValidationFailure naming the first violated invariant.
inline TableReport validate_table(const FormulaTable& table, std::string_view name) {
    auto fail = [&](int k, const std::string& what) {
        throw ValidationFailure(std::string(name) + "_" + std::to_string(k) + ": " + what);
    };
    TableReport report;
    for (int k = 1; k <= kCoordCount; ++k) {
        const Poly& p = table.coord(k);
        report.term_counts[k - 1] = p.term_count();
        report.total_terms += p.term_count();
        if (k <= 4 && !p.is_zero()) fail(k, "coordinates 1..4 must be zero");
        for (const auto& t : p.terms()) {
            if (t.monomial.degree() > 4) fail(k, "total degree exceeds 4");
            if (!t.monomial.twos().empty()) fail(k, "exponent exceeds 1");
            for (auto [v, e] : t.monomial.factors()) {
                if (v.index() > 10) fail(k, "reads coordinate " + std::to_string(v.index()) + " (only 1..10 allowed)");
                const bool allowed = v.block() == Block::X || (v.block() == Block::Y && table.arity() == TableArity::Binary);
                if (!allowed) fail(k, "variable " + v.name() + " outside the table's argument blocks");
                report.indices_read[block_letter(v.block())].insert(v.index());
            }
            report.max_degree = std::max(report.max_degree, t.monomial.degree());
        }
    }
    return report;
}

struct TablesReport {
    TableReport f;
    TableReport h;
};

inline TablesReport validate_tables(const Tables& tables = Tables::shipped()) {
    if (tables.f.arity() != TableArity::Binary) throw ValidationFailure("f-table must read two arguments");
    if (tables.h.arity() != TableArity::Unary) throw ValidationFailure("h-table must read one argument");
    return {validate_table(tables.f, "f"), validate_table(tables.h, "h")};
}

}  // namespace moufang

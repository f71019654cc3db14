#pragma once

// The loop (F_3^19, o) with x o y = x + y + f(x, y) and x^-1 = -x + h(x).

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moufang/errors.hpp"
#include "moufang/formula_tables.hpp"
#include "moufang/gf3.hpp"

namespace moufang {

/// A 19-tuple over GF(3). Coordinates are 1-based in at(); operator[] is
/// 0-based.
class LoopElement {
public:
    constexpr LoopElement() = default;
    explicit LoopElement(const std::array<Gf3, kCoordCount>& coords) : coords_(coords) {}
    LoopElement(std::initializer_list<int> values) {
        if (values.size() != kCoordCount) throw IndexOutOfRange("a loop element has exactly 19 coordinates");
        int i = 0;
        for (int v : values) coords_[i++] = Gf3{v};
    }

    Gf3 at(int i) const {
        check_index(i);
        return coords_[i - 1];
    }
    void set(int i, Gf3 v) {
        check_index(i);
        coords_[i - 1] = v;
    }
    Gf3 operator[](std::size_t k) const { return coords_[k]; }
    Gf3& operator[](std::size_t k) { return coords_[k]; }
    const std::array<Gf3, kCoordCount>& coords() const { return coords_; }

    bool is_identity() const {
        for (Gf3 c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Coordinates with nonzero value, 1-based.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < kCoordCount; ++i)
            if (!coords_[i].is_zero()) s.push_back(i + 1);
        return s;
    }

    /// 2 bits per coordinate; injective.
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (int i = 0; i < kCoordCount; ++i) k |= std::uint64_t{coords_[i].value()} << (2 * i);
        return k;
    }

    // Vector-space operations of the underlying F_3^19 (not loop operations).
    friend LoopElement operator+(LoopElement a, const LoopElement& b) {
        for (int i = 0; i < kCoordCount; ++i) a.coords_[i] += b.coords_[i];
        return a;
    }
    friend LoopElement operator-(LoopElement a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }
    friend LoopElement operator*(Gf3 s, LoopElement a) {
        for (auto& c : a.coords_) c *= s;
        return a;
    }

    friend bool operator==(const LoopElement&, const LoopElement&) = default;

private:
    static void check_index(int i) {
        if (i < 1 || i > kCoordCount) throw IndexOutOfRange("coordinate " + std::to_string(i) + " outside 1..19");
    }

    std::array<Gf3, kCoordCount> coords_{};
};

struct LoopElementHash {
    std::size_t operator()(const LoopElement& x) const { return std::hash<std::uint64_t>{}(x.key()); }
};

inline LoopElement identity() { return LoopElement{}; }

inline LoopElement basis(int i) {
    if (i < 1 || i > kCoordCount) throw IndexOutOfRange("basis index " + std::to_string(i) + " outside 1..19");
    LoopElement e;
    e.set(i, Gf3::one());
    return e;
}

/// Keeps only coordinates lo..hi (1-based, inclusive).
inline LoopElement restrict_to(const LoopElement& x, int lo, int hi) {
    LoopElement r;
    for (int i = lo; i <= hi; ++i) r.set(i, x.at(i));
    return r;
}

namespace detail {

/// A formula table flattened for fast evaluation. Each factor is an index
/// into the concatenation (x_1..x_19, y_1..y_19); exponent 2 repeats it.
class CompiledTable {
public:
    explicit CompiledTable(const FormulaTable& table) {
        for (int k = 1; k <= kCoordCount; ++k) {
            starts_[k - 1] = static_cast<std::uint32_t>(terms_.size());
            for (const auto& t : table.coord(k).terms()) {
                CompiledTerm ct{t.coeff.value(), static_cast<std::uint32_t>(factors_.size()), 0};
                for (auto [v, e] : t.monomial.factors()) {
                    if (v.block() != Block::X && v.block() != Block::Y)
                        throw ValidationFailure("table reads variable " + v.name() + " outside blocks x and y");
                    if (v.block() == Block::Y && table.arity() == TableArity::Unary)
                        throw ValidationFailure("unary table reads variable " + v.name());
                    const auto slot = static_cast<std::uint8_t>((v.block() == Block::Y ? kCoordCount : 0) + v.index() - 1);
                    for (int r = 0; r < e; ++r) factors_.push_back(slot);
                }
                ct.factor_count = static_cast<std::uint32_t>(factors_.size()) - ct.first_factor;
                terms_.push_back(ct);
            }
        }
        starts_[kCoordCount] = static_cast<std::uint32_t>(terms_.size());
    }

    /// Value of coordinate k (0-based) at the concatenated argument values.
    int eval(int k, const std::array<std::uint8_t, 2 * kCoordCount>& args) const {
        int sum = 0;
        for (std::uint32_t t = starts_[k]; t < starts_[k + 1]; ++t) {
            const CompiledTerm& term = terms_[t];
            int prod = term.coeff;
            for (std::uint32_t f = 0; f < term.factor_count && prod != 0; ++f) prod *= args[factors_[term.first_factor + f]];
            sum += prod;
        }
        return sum;
    }

private:
    struct CompiledTerm {
        std::uint8_t coeff;
        std::uint32_t first_factor;
        std::uint32_t factor_count;
    };

    std::array<std::uint32_t, kCoordCount + 1> starts_{};
    std::vector<CompiledTerm> terms_;
    std::vector<std::uint8_t> factors_;
};

inline std::array<std::uint8_t, 2 * kCoordCount> pack_args(const LoopElement& x, const LoopElement& y) {
    std::array<std::uint8_t, 2 * kCoordCount> args{};
    for (int i = 0; i < kCoordCount; ++i) {
        args[i] = x[i].value();
        args[kCoordCount + i] = y[i].value();
    }
    return args;
}

}  // namespace detail

/// The loop defined by a pair of tables. All operations are const and pure.
class Loop {
public:
    explicit Loop(Tables tables) : tables_(std::move(tables)), f_(tables_.f), h_(tables_.h) {}

    /// The loop built from the shipped tables.
    static const Loop& standard() {
        static const Loop loop(Tables::shipped());
        return loop;
    }

    const Tables& tables() const { return tables_; }

    LoopElement mul(const LoopElement& x, const LoopElement& y) const {
        const auto args = detail::pack_args(x, y);
        LoopElement r;
        for (int k = 0; k < kCoordCount; ++k) r[k] = Gf3{args[k] + args[kCoordCount + k] + f_.eval(k, args)};
        return r;
    }

    /// -x + h(x), without checking the inverse law.
    LoopElement inverse_formula(const LoopElement& x) const {
        const auto args = detail::pack_args(x, LoopElement{});
        LoopElement r;
        for (int k = 0; k < kCoordCount; ++k) r[k] = Gf3{2 * args[k] + h_.eval(k, args)};
        return r;
    }

    /// -x + h(x); throws InverseLawViolation unless it is a two-sided inverse.
    LoopElement inverse(const LoopElement& x) const {
        LoopElement r = inverse_formula(x);
        if (!mul(x, r).is_identity() || !mul(r, x).is_identity())
            throw InverseLawViolation("x o x^-1 != 1 for x = " + to_dense(x));
        return r;
    }

    /// The w with u o w = v, computed as u^-1 o v.
    LoopElement left_div(const LoopElement& u, const LoopElement& v) const {
        LoopElement w = mul(inverse(u), v);
        if (mul(u, w) != v) throw DivisionCheckFailed("u o (u^-1 o v) != v for u = " + to_dense(u) + ", v = " + to_dense(v));
        return w;
    }

    /// The w with w o u = v, computed as v o u^-1.
    LoopElement right_div(const LoopElement& v, const LoopElement& u) const {
        LoopElement w = mul(v, inverse(u));
        if (mul(w, u) != v) throw DivisionCheckFailed("(v o u^-1) o u != v for u = " + to_dense(u) + ", v = " + to_dense(v));
        return w;
    }

    /// [x, y]: the c with xy = (yx)c.
    LoopElement commutator(const LoopElement& x, const LoopElement& y) const { return left_div(mul(y, x), mul(x, y)); }

    /// (x, y, z): the a with (xy)z = (x(yz))a.
    LoopElement associator(const LoopElement& x, const LoopElement& y, const LoopElement& z) const {
        return left_div(mul(x, mul(y, z)), mul(mul(x, y), z));
    }

    /// Left-nested product of |n| copies of x (of x^-1 when n < 0).
    LoopElement power(const LoopElement& x, long long n) const {
        const LoopElement base = n < 0 ? inverse(x) : x;
        unsigned long long remaining = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
        LoopElement acc;
        unsigned long long k = 0;
        while (k < remaining) {
            acc = mul(acc, base);
            ++k;
            if (acc.is_identity()) {
                // power-associativity: x^n = x^(n mod k) once x^k = 1
                remaining %= k;
                k = 0;
            }
        }
        return acc;
    }

    /// Least n >= 1 with x^n = 1, searching n <= cap.
    long long order(const LoopElement& x, long long cap = 81) const {
        if (cap < 1) throw PreconditionViolation("order cap must be at least 1");
        LoopElement acc = x;
        for (long long n = 1; n <= cap; ++n) {
            if (acc.is_identity()) return n;
            acc = mul(acc, x);
        }
        throw OrderNotFoundWithinCap("no n <= " + std::to_string(cap) + " with x^n = 1 for x = " + to_dense(x));
    }

    static std::string to_dense(const LoopElement& x) {
        std::string s = "(";
        for (int i = 0; i < kCoordCount; ++i) {
            if (i) s += ',';
            s += static_cast<char>('0' + x[i].value());
        }
        return s + ")";
    }

private:
    Tables tables_;
    detail::CompiledTable f_;
    detail::CompiledTable h_;
};

// ---------------------------------------------------------------------------
// Deterministic sampling: xorshift64* (shifts 12/25/27, multiplier
// 2685821657736338717), one output per coordinate, trit = output mod 3.

struct RngState {
    std::uint64_t state = 0;

    friend bool operator==(RngState, RngState) = default;
};

/// Advances the state and returns (output, new state).
inline std::pair<std::uint64_t, RngState> next_output(RngState rng) {
    if (rng.state == 0) throw ZeroSeed();
    std::uint64_t s = rng.state;
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return {s * 2685821657736338717ULL, RngState{s}};
}

inline std::pair<LoopElement, RngState> random_element(RngState rng) {
    if (rng.state == 0) throw ZeroSeed();
    LoopElement x;
    for (int i = 0; i < kCoordCount; ++i) {
        auto [out, next] = next_output(rng);
        x[i] = Gf3{static_cast<long long>(out % 3)};
        rng = next;
    }
    return {x, rng};
}

/// Stateful convenience wrapper over random_element.
class ElementSampler {
public:
    explicit ElementSampler(std::uint64_t seed) : rng_{seed} {
        if (seed == 0) throw ZeroSeed();
    }

    LoopElement next() {
        auto [x, rng] = random_element(rng_);
        rng_ = rng;
        return x;
    }

    RngState state() const { return rng_; }

private:
    RngState rng_;
};

// ---------------------------------------------------------------------------
// Text forms: dense "(t1,...,t19)" and sparse "e1 + 2*e5" / "0".

inline std::string format_element(const LoopElement& x) { return Loop::to_dense(x); }

inline std::string format_sparse(const LoopElement& x) {
    std::string s;
    for (int i = 1; i <= kCoordCount; ++i) {
        const Gf3 c = x.at(i);
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (c.value() == 2) s += "2*";
        s += "e" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

namespace detail {

class ElementParser {
public:
    explicit ElementParser(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    std::size_t position() const { return pos_; }

    /// Parses a dense tuple starting at '('.
    LoopElement dense() {
        expect('(');
        LoopElement x;
        for (int i = 0; i < kCoordCount; ++i) {
            if (i) expect(',');
            skip_space();
            const char c = peek();
            if (c < '0' || c > '2') fail(pos_, "dense coordinates must be 0, 1 or 2");
            x[i] = Gf3{c - '0'};
            ++pos_;
        }
        skip_space();
        if (peek() == ',') fail(pos_, "more than 19 coordinates");
        expect(')');
        return x;
    }

    /// Parses a single "e<i>" atom.
    LoopElement basis_atom() {
        skip_space();
        const std::size_t start = pos_;
        if (peek() != 'e') fail(pos_, "expected e<index>");
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(pos_, "expected basis index after 'e'");
        long long index = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())) && index <= 1000) index = index * 10 + (text_[pos_++] - '0');
        if (index < 1 || index > kCoordCount) fail(start, "basis index outside 1..19");
        return basis(static_cast<int>(index));
    }

    /// Sparse sum "c1*e_i + c2*e_j - ..." or "0".
    LoopElement sparse() {
        LoopElement x;
        skip_space();
        if (peek() == '0') {
            const std::size_t save = pos_;
            ++pos_;
            skip_space();
            if (at_end()) return x;
            pos_ = save;
        }
        bool first = true;
        while (true) {
            skip_space();
            Gf3 sign = Gf3::one();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? Gf3{2} : Gf3::one();
                ++pos_;
            } else if (!first) {
                fail(pos_, "expected '+' or '-'");
            }
            skip_space();
            Gf3 coeff = Gf3::one();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                long long c = 0;
                while (std::isdigit(static_cast<unsigned char>(peek())) && c < 1000000) c = c * 10 + (text_[pos_++] - '0');
                coeff = Gf3{c};
                skip_space();
                if (peek() != '*') fail(pos_, "expected '*' after coefficient");
                ++pos_;
            }
            const LoopElement e = basis_atom();
            x = x + (sign * coeff) * e;
            first = false;
            skip_space();
            if (at_end()) break;
        }
        return x;
    }

    LoopElement any() {
        skip_space();
        if (at_end()) fail(pos_, "empty element");
        LoopElement x = peek() == '(' ? dense() : sparse();
        skip_space();
        if (!at_end()) fail(pos_, "unexpected trailing input");
        return x;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_space();
        if (peek() != c) fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(std::size_t at, const std::string& reason) const { throw ParseError(base_ + at, reason); }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Accepts "(t1,...,t19)" with each t in {0,1,2}, or a sparse sum such as
/// "e1 + 2*e5" ("0" is the identity). Throws ParseError.
inline LoopElement parse_element(std::string_view text) { return detail::ElementParser(text).any(); }

}  // namespace moufang

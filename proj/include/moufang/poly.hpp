#pragma once

// Sparse multivariate polynomials over GF(3) with the reduction x^3 = x.
//
// Every per-variable exponent is kept in {1, 2}, so two polynomials are equal
// as data exactly when they are equal as functions F_3^n -> F_3. That is what
// turns a zero difference polynomial into a proof.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "moufang/errors.hpp"
#include "moufang/gf3.hpp"

namespace moufang {

inline constexpr int kCoordCount = 19;

/// Variable blocks: X and Y carry the two factors of a product, Z a third
/// loop element, T the exponents of the normal-form product.
enum class Block : std::uint8_t { X = 0, Y = 1, Z = 2, T = 3 };

inline constexpr int kBlockCount = 4;
inline constexpr int kVarCount = kBlockCount * kCoordCount;

inline constexpr char block_letter(Block b) {
    constexpr char letters[] = {'x', 'y', 'z', 't'};
    return letters[static_cast<int>(b)];
}

/// A variable (block, index) with index in 1..19. Ordered by (block, index).
class VarId {
public:
    constexpr VarId(Block block, int index) : code_(static_cast<std::uint8_t>(static_cast<int>(block) * kCoordCount + index - 1)) {
        if (index < 1 || index > kCoordCount) throw IndexOutOfRange("variable index " + std::to_string(index) + " outside 1..19");
    }

    static constexpr VarId from_code(int code) { return VarId(static_cast<Block>(code / kCoordCount), code % kCoordCount + 1); }

    constexpr Block block() const { return static_cast<Block>(code_ / kCoordCount); }
    constexpr int index() const { return code_ % kCoordCount + 1; }
    constexpr int code() const { return code_; }

    std::string name() const { return std::string(1, block_letter(block())) + std::to_string(index()); }

    friend constexpr auto operator<=>(VarId, VarId) = default;

private:
    std::uint8_t code_;
};

/// Fixed-width bit set over the 76 variable codes.
class VarSet {
public:
    constexpr VarSet() = default;

    constexpr bool test(int code) const { return (words_[code >> 6] >> (code & 63)) & 1u; }
    constexpr void set(int code) { words_[code >> 6] |= std::uint64_t{1} << (code & 63); }
    constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
    constexpr int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }

    /// Lowest variable code in the set; the set must be nonempty.
    constexpr int lowest() const {
        return words_[0] != 0 ? std::countr_zero(words_[0]) : 64 + std::countr_zero(words_[1]);
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                fn(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    constexpr bool contains(const VarSet& other) const {
        return (other.words_[0] & ~words_[0]) == 0 && (other.words_[1] & ~words_[1]) == 0;
    }

    friend constexpr VarSet operator|(VarSet a, VarSet b) { return {a.words_[0] | b.words_[0], a.words_[1] | b.words_[1]}; }
    friend constexpr VarSet operator&(VarSet a, VarSet b) { return {a.words_[0] & b.words_[0], a.words_[1] & b.words_[1]}; }
    friend constexpr VarSet operator^(VarSet a, VarSet b) { return {a.words_[0] ^ b.words_[0], a.words_[1] ^ b.words_[1]}; }
    /// Set difference a \ b.
    friend constexpr VarSet operator-(VarSet a, VarSet b) { return {a.words_[0] & ~b.words_[0], a.words_[1] & ~b.words_[1]}; }
    constexpr VarSet& operator|=(VarSet b) { return *this = *this | b; }
    friend constexpr bool operator==(const VarSet&, const VarSet&) = default;

    std::size_t hash() const { return std::hash<std::uint64_t>{}(words_[0] * 0x9e3779b97f4a7c15ULL ^ words_[1]); }

private:
    constexpr VarSet(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}

    std::uint64_t words_[2] = {0, 0};
};

/// Power product of variables with exponents in {1, 2}, stored as two bit
/// sets (variables of exponent 1, variables of exponent 2).
class Monomial {
public:
    constexpr Monomial() = default;

    static Monomial variable(VarId v, int exponent = 1) {
        Monomial m;
        exponent = reduce_exponent(exponent);
        if (exponent == 1) m.ones_.set(v.code());
        if (exponent == 2) m.twos_.set(v.code());
        return m;
    }

    /// x^e with x^3 = x applied, except that x^0 stays 1.
    static constexpr int reduce_exponent(int e) {
        while (e >= 3) e -= 2;
        return e;
    }

    int exponent(VarId v) const { return exponent_of(v.code()); }
    int exponent_of(int code) const { return ones_.test(code) ? 1 : twos_.test(code) ? 2 : 0; }
    int degree() const { return ones_.count() + 2 * twos_.count(); }
    bool is_unit() const { return ones_.empty() && twos_.empty(); }
    VarSet support() const { return ones_ | twos_; }
    const VarSet& ones() const { return ones_; }
    const VarSet& twos() const { return twos_; }

    /// (variable, exponent) pairs in variable order.
    std::vector<std::pair<VarId, int>> factors() const {
        std::vector<std::pair<VarId, int>> out;
        support().for_each([&](int code) { out.emplace_back(VarId::from_code(code), exponent_of(code)); });
        return out;
    }

    // Per variable: 1+1 -> 2, 1+2 -> 3 -> 1, 2+2 -> 4 -> 2. The result has
    // exponent 1 exactly when one side has exponent 1.
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.ones_ = a.ones_ ^ b.ones_;
        r.twos_ = (a.support() | b.support()) - r.ones_;
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::size_t hash() const { return ones_.hash() * 31 + twos_.hash(); }

    std::string to_string() const {
        if (is_unit()) return "1";
        std::string s;
        for (auto [v, e] : factors()) {
            if (!s.empty()) s += '*';
            s += v.name();
            if (e == 2) s += "^2";
        }
        return s;
    }

private:
    VarSet ones_;
    VarSet twos_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded lexicographic order: lower total degree first; within a degree the
/// monomial with the larger exponent at the first differing variable first.
inline bool monomial_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const VarSet diff = (a.ones() ^ b.ones()) | (a.twos() ^ b.twos());
    if (diff.empty()) return false;
    const int v = diff.lowest();
    return a.exponent_of(v) > b.exponent_of(v);
}

struct Term {
    Monomial monomial;
    Gf3 coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in canonical form: terms sorted by monomial_less, no zero
/// coefficients, no repeated monomials. The zero polynomial has no terms.
class Poly {
public:
    Poly() = default;

    static Poly constant(Gf3 c) {
        Poly p;
        if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static Poly constant(long long c) { return constant(Gf3{c}); }
    static Poly variable(VarId v) { return monomial(Monomial::variable(v), Gf3::one()); }
    static Poly variable(Block b, int index) { return variable(VarId(b, index)); }
    static Poly monomial(const Monomial& m, Gf3 c) {
        Poly p;
        if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }

    /// Builds a polynomial from arbitrary terms, combining repeated monomials.
    static Poly from_terms(const std::vector<Term>& terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const { return terms_.empty() ? 0 : terms_.back().monomial.degree(); }

    /// Constant term (coefficient of the unit monomial).
    Gf3 constant_term() const {
        return (!terms_.empty() && terms_.front().monomial.is_unit()) ? terms_.front().coeff : Gf3{};
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_unit()); }

    VarSet variables() const {
        VarSet s;
        for (const auto& t : terms_) s |= t.monomial.support();
        return s;
    }

    /// Coefficient of m (zero when absent).
    Gf3 coeff(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.monomial == m) return t.coeff;
        return Gf3{};
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p) {
        Poly r = p;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(Gf3 c, const Poly& p) {
        if (c.is_zero()) return {};
        Poly r = p;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }
    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    std::string to_string() const;

private:
    friend class TermAccumulator;
    std::vector<Term> terms_;
};

/// Hash-based sum of terms, emitted once in canonical order.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t expected = 0) { sums_.reserve(expected); }

    void add(const Monomial& m, Gf3 c) {
        if (c.is_zero()) return;
        auto [it, inserted] = sums_.try_emplace(m, c);
        if (!inserted) it->second += c;
    }

    void add(const Poly& p) {
        for (const auto& t : p.terms()) add(t.monomial, t.coeff);
    }

    Poly finish() && {
        Poly p;
        p.terms_.reserve(sums_.size());
        for (auto& [m, c] : sums_)
            if (!c.is_zero()) p.terms_.push_back({m, c});
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return monomial_less(a.monomial, b.monomial); });
        return p;
    }

private:
    std::unordered_map<Monomial, Gf3, MonomialHash> sums_;
};

inline Poly Poly::from_terms(const std::vector<Term>& terms) {
    TermAccumulator acc(terms.size());
    for (const auto& t : terms) acc.add(t.monomial, t.coeff);
    return std::move(acc).finish();
}

inline Poly operator+(const Poly& p, const Poly& q) {
    Poly r;
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto a = p.terms_.begin(), b = q.terms_.begin();
    while (a != p.terms_.end() && b != q.terms_.end()) {
        if (monomial_less(a->monomial, b->monomial)) {
            r.terms_.push_back(*a++);
        } else if (monomial_less(b->monomial, a->monomial)) {
            r.terms_.push_back(*b++);
        } else {
            const Gf3 c = a->coeff + b->coeff;
            if (!c.is_zero()) r.terms_.push_back({a->monomial, c});
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, p.terms_.end());
    r.terms_.insert(r.terms_.end(), b, q.terms_.end());
    return r;
}

inline Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (p.is_constant()) return p.constant_term() * q;
    if (q.is_constant()) return q.constant_term() * p;
    TermAccumulator acc(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_) acc.add(a.monomial * b.monomial, a.coeff * b.coeff);
    return std::move(acc).finish();
}

inline std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        if (t.monomial.is_unit()) {
            s += std::to_string(t.coeff.value());
        } else {
            if (t.coeff.value() == 2) s += "2*";
            s += t.monomial.to_string();
        }
    }
    return s;
}

inline Poly pow(const Poly& p, int exponent) {
    if (exponent == 0) return Poly::constant(1);
    exponent = Monomial::reduce_exponent(exponent);
    return exponent == 1 ? p : p * p;
}

/// Total assignment of some variables to field values.
class Assignment {
public:
    Assignment() = default;

    void set(VarId v, Gf3 value) {
        values_[v.code()] = value;
        bound_.set(v.code());
    }
    bool bound(VarId v) const { return bound_.test(v.code()); }
    const VarSet& bound_set() const { return bound_; }
    Gf3 operator[](VarId v) const { return value_of(v.code()); }
    Gf3 value_of(int code) const { return values_[code]; }

private:
    std::array<Gf3, kVarCount> values_{};
    VarSet bound_;
};

inline Gf3 evaluate(const Poly& p, const Assignment& sigma) {
    const VarSet needed = p.variables();
    if (!sigma.bound_set().contains(needed)) {
        const VarSet missing = needed - sigma.bound_set();
        throw UnboundVariable("no value for variable " + VarId::from_code(missing.lowest()).name());
    }
    Gf3 total;
    for (const auto& t : p.terms()) {
        Gf3 value = t.coeff;
        t.monomial.ones().for_each([&](int code) { value *= sigma.value_of(code); });
        t.monomial.twos().for_each([&](int code) {
            const Gf3 v = sigma.value_of(code);
            value *= v * v;
        });
        total += value;
    }
    return total;
}

/// Simultaneous substitution of variables by polynomials.
class Substitution {
public:
    Substitution() = default;

    void bind(VarId v, Poly p) { images_[v.code()] = std::move(p); }
    bool bound(VarId v) const { return images_[v.code()].has_value(); }
    const Poly& operator[](int code) const { return *images_[code]; }

private:
    std::array<std::optional<Poly>, kVarCount> images_;
};

inline Poly substitute(const Poly& p, const Substitution& env) {
    p.variables().for_each([&](int code) {
        if (!env.bound(VarId::from_code(code)))
            throw UnboundVariable("no substitution for variable " + VarId::from_code(code).name());
    });
    TermAccumulator acc;
    for (const auto& t : p.terms()) {
        Poly product = Poly::constant(t.coeff);
        for (auto [v, e] : t.monomial.factors()) {
            product = product * pow(env[v.code()], e);
            if (product.is_zero()) break;
        }
        acc.add(product);
    }
    return std::move(acc).finish();
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse() {
        std::vector<Term> terms;
        skip_space();
        if (pos_ == text_.size()) throw ParseError(pos_, "empty polynomial");
        bool first = true;
        while (true) {
            skip_space();
            Gf3 sign = Gf3::one();
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = Gf3{2};
                ++pos_;
                skip_space();
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            Term t = parse_term();
            t.coeff *= sign;
            terms.push_back(t);
            first = false;
            skip_space();
            if (pos_ == text_.size()) break;
        }
        return Poly::from_terms(terms);
    }

private:
    Term parse_term() {
        Term t{Monomial{}, Gf3::one()};
        bool any = false;
        while (true) {
            skip_space();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                t.coeff *= Gf3{parse_int()};
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                const std::size_t start = pos_;
                const char letter = text_[pos_++];
                Block block;
                switch (letter) {
                    case 'x': block = Block::X; break;
                    case 'y': block = Block::Y; break;
                    case 'z': block = Block::Z; break;
                    case 't': block = Block::T; break;
                    default: throw ParseError(start, std::string("unknown variable block '") + letter + "'");
                }
                if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected variable index");
                const long long index = parse_int();
                if (index < 1 || index > kCoordCount) throw ParseError(start, "variable index outside 1..19");
                int exponent = 1;
                skip_space();
                if (peek() == '^') {
                    ++pos_;
                    skip_space();
                    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected exponent");
                    exponent = static_cast<int>(parse_int());
                }
                if (exponent > 0) t.monomial = t.monomial * Monomial::variable(VarId(block, static_cast<int>(index)), exponent);
            } else {
                throw ParseError(pos_, "expected coefficient or variable");
            }
            any = true;
            skip_space();
            if (peek() != '*') break;
            ++pos_;
        }
        if (!any) throw ParseError(pos_, "empty term");
        return t;
    }

    long long parse_int() {
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1'000'000'000) throw ParseError(pos_, "integer too large");
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses forms like "2*x2*y1 + x5*y3", "-x1*x2", "x1^2 + 1".
inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace moufang

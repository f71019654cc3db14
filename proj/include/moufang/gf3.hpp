#pragma once

#include <cstdint>
#include <ostream>

namespace moufang {

/// Element of the three-element field, stored as its residue 0, 1 or 2.
class Gf3 {
public:
    constexpr Gf3() = default;
    /// Reduces any integer (negative included) mod 3.
    constexpr explicit Gf3(long long v) : value_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    static constexpr Gf3 zero() { return Gf3{}; }
    static constexpr Gf3 one() { return Gf3{1}; }

    constexpr std::uint8_t value() const { return value_; }
    constexpr bool is_zero() const { return value_ == 0; }

    friend constexpr Gf3 operator+(Gf3 a, Gf3 b) { return from_raw(kAdd[a.value_][b.value_]); }
    friend constexpr Gf3 operator-(Gf3 a) { return from_raw(kNeg[a.value_]); }
    friend constexpr Gf3 operator-(Gf3 a, Gf3 b) { return a + (-b); }
    friend constexpr Gf3 operator*(Gf3 a, Gf3 b) { return from_raw(kMul[a.value_][b.value_]); }
    constexpr Gf3& operator+=(Gf3 b) { return *this = *this + b; }
    constexpr Gf3& operator-=(Gf3 b) { return *this = *this - b; }
    constexpr Gf3& operator*=(Gf3 b) { return *this = *this * b; }

    friend constexpr bool operator==(Gf3, Gf3) = default;

    friend std::ostream& operator<<(std::ostream& os, Gf3 a) { return os << int{a.value_}; }

private:
    static constexpr Gf3 from_raw(std::uint8_t v) {
        Gf3 r;
        r.value_ = v;
        return r;
    }

    static constexpr std::uint8_t kAdd[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    static constexpr std::uint8_t kNeg[3] = {0, 2, 1};
    static constexpr std::uint8_t kMul[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};

    std::uint8_t value_ = 0;
};

static_assert(Gf3{2} * Gf3{2} == Gf3{1});
static_assert(Gf3{-1} == Gf3{2});

}  // namespace moufang

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace speh {

/// Exact element of (1/2)Z, stored as twice its value.
///
/// Every spectral coordinate in this library (shifts of L-factors, pole
/// locations, exponents of |det| twists) lives in (1/2)Z, so this is the only
/// scalar type the combinatorics needs. Printing is canonical: integers print
/// bare ("-3"), odd halves print as "k/2" ("-3/2").
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t integer) : doubled_(2 * integer) {}  // NOLINT: implicit by intent

    static constexpr HalfInt from_doubled(std::int64_t doubled) {
        HalfInt h;
        h.doubled_ = doubled;
        return h;
    }
    /// n/2 for an arbitrary integer n.
    static constexpr HalfInt half(std::int64_t n) { return from_doubled(n); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }
    long double to_long_double() const { return static_cast<long double>(doubled_) / 2.0L; }

    constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
    constexpr HalfInt& operator+=(HalfInt o) {
        doubled_ += o.doubled_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        doubled_ -= o.doubled_;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt x, HalfInt y) { return x += y; }
    friend constexpr HalfInt operator-(HalfInt x, HalfInt y) { return x -= y; }
    friend constexpr HalfInt abs(HalfInt x) { return x.doubled_ < 0 ? -x : x; }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr bool operator==(HalfInt, HalfInt) = default;

    std::string to_string() const {
        if (is_integer()) return std::to_string(doubled_ / 2);
        return std::to_string(doubled_) + "/2";
    }

    /// Inverse of to_string(); also accepts "2k/2" forms.
    static HalfInt parse(std::string_view text) {
        auto parse_int = [&](std::string_view part) {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
            if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
                throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
            return v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return HalfInt(parse_int(text));
        if (text.substr(slash + 1) != "2")
            throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
        return from_doubled(parse_int(text.substr(0, slash)));
    }

private:
    std::int64_t doubled_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

/// w/2 as a reduced fraction, e.g. w = 3/2 gives "3/4". Used for
/// s-coordinate display (w = 2s).
inline std::string format_halved(HalfInt w) {
    std::int64_t num = w.doubled();
    std::int64_t den = 4;
    while (den > 1 && num % 2 == 0) {
        num /= 2;
        den /= 2;
    }
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

/// Half-integers lo, lo+1, ..., up to and including hi (empty if lo > hi).
template <typename Fn>
constexpr void for_each_step(HalfInt lo, HalfInt hi, Fn&& fn) {
    for (HalfInt x = lo; x <= hi; x += HalfInt(1)) std::invoke(fn, x);
}

}  // namespace speh

template <>
struct std::hash<speh::HalfInt> {
    std::size_t operator()(speh::HalfInt h) const noexcept { return std::hash<std::int64_t>{}(h.doubled()); }
};

#ifndef CHUNKALIGN_RATIO_H_
#define CHUNKALIGN_RATIO_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace chunkalign {

// Non-negative rational number. Alignment scores and thresholds are compared
// exactly so that sorting and threshold tests never depend on rounding.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  constexpr Ratio() = default;
  constexpr Ratio(std::uint64_t n, std::uint64_t d) : num(n), den(d) {}

  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num) * b.den;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) { return (a <=> b) == 0; }
};

// Parses a non-negative decimal such as "0.1", "1.5" or "3" into an exact
// ratio. Throws Error(kInvalidArgument) on anything else.
Ratio parse_ratio(std::string_view text);

// "%.4f"-style rendering used by every TSV/CSV writer.
std::string format_fixed4(double value);

}  // namespace chunkalign

#endif  // CHUNKALIGN_RATIO_H_

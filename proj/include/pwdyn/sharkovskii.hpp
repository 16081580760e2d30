#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pwdyn {

/// Position of a period in Sharkovskii's order
///   3, 5, 7, ..., 2·3, 2·5, ..., 4·3, ..., 2^∞, ..., 8, 4, 2, 1.
/// "Less" means earlier in the order, i.e. the period forces the other one.
class SharkovskiiKey {
public:
    /// n = 2^two_power · odd_part; n >= 1.
    explicit SharkovskiiKey(std::uint64_t n);

    /// The limit point between all non-powers of two and the powers of two.
    static SharkovskiiKey two_infinity() { return SharkovskiiKey(); }

    bool is_two_infinity() const noexcept { return infinity_; }
    unsigned two_power() const noexcept { return two_power_; }
    std::uint64_t odd_part() const noexcept { return odd_part_; }
    bool is_power_of_two() const noexcept { return !infinity_ && odd_part_ == 1; }

    std::string str() const;

    friend std::strong_ordering operator<=>(const SharkovskiiKey& a, const SharkovskiiKey& b);
    friend bool operator==(const SharkovskiiKey& a, const SharkovskiiKey& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    SharkovskiiKey() : infinity_(true) {}

    bool infinity_ = false;
    unsigned two_power_ = 0;
    std::uint64_t odd_part_ = 1;
};

enum class SharkovskiiOrder { before, equal, after };

/// before: m ◁ n (a period-m orbit forces period n).
SharkovskiiOrder sharkovskii_compare(std::uint64_t m, std::uint64_t n);

const char* to_string(SharkovskiiOrder o);

}  // namespace pwdyn

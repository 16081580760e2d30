#include "pwdyn/sharkovskii.hpp"

#include <stdexcept>
#include <tuple>

namespace pwdyn {

SharkovskiiKey::SharkovskiiKey(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Sharkovskii order is defined on positive integers");
    }
    while (n % 2 == 0) {
        n /= 2;
        ++two_power_;
    }
    odd_part_ = n;
}

std::string SharkovskiiKey::str() const {
    if (infinity_) {
        return "2^inf";
    }
    std::string out;
    if (two_power_ > 0) {
        out = "2^" + std::to_string(two_power_);
        if (odd_part_ != 1) {
            out += "*";
        }
    }
    if (odd_part_ != 1 || two_power_ == 0) {
        out += std::to_string(odd_part_);
    }
    return out;
}

std::strong_ordering operator<=>(const SharkovskiiKey& a, const SharkovskiiKey& b) {
    // (block, primary, secondary): block 0 = 2^a·q with q odd > 1, ordered
    // by a then q; block 1 = 2^∞; block 2 = powers of two, descending.
    auto rank = [](const SharkovskiiKey& k) {
        if (k.infinity_) {
            return std::tuple<int, long long, std::uint64_t>{1, 0, 0};
        }
        if (k.odd_part_ == 1) {
            return std::tuple<int, long long, std::uint64_t>{2, -static_cast<long long>(k.two_power_), 0};
        }
        return std::tuple<int, long long, std::uint64_t>{0, k.two_power_, k.odd_part_};
    };
    return rank(a) <=> rank(b);
}

SharkovskiiOrder sharkovskii_compare(std::uint64_t m, std::uint64_t n) {
    const auto c = SharkovskiiKey(m) <=> SharkovskiiKey(n);
    if (c == std::strong_ordering::less) {
        return SharkovskiiOrder::before;
    }
    return c == std::strong_ordering::greater ? SharkovskiiOrder::after : SharkovskiiOrder::equal;
}

const char* to_string(SharkovskiiOrder o) {
    switch (o) {
        case SharkovskiiOrder::before:
            return "before";
        case SharkovskiiOrder::equal:
            return "equal";
        case SharkovskiiOrder::after:
            return "after";
    }
    return "?";
}

}  // namespace pwdyn

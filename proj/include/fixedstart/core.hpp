#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace fixedstart {

/// Fixed-length bit string backed by 64-bit words. Length is set at
/// construction and never changes; unused bits of the last word are kept zero
/// so that equality and popcount work on whole words.
class BitString {
public:
    explicit BitString(std::uint32_t n, bool ones = false)
        : n_(n), words_((n + 63) / 64, ones ? ~std::uint64_t{0} : 0) {
        if (n == 0) throw std::invalid_argument("BitString: length must be positive");
        if (ones && (n & 63u) != 0) words_.back() &= (std::uint64_t{1} << (n & 63u)) - 1;
    }

    std::uint32_t size() const noexcept { return n_; }

    bool test(std::uint32_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63u)) & 1u;
    }

    void flip(std::uint32_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63u); }

    void set(std::uint32_t i, bool v) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63u);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    std::uint32_t popcount() const noexcept {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return static_cast<std::uint32_t>(c);
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool operator==(const BitString&) const = default;

private:
    std::uint32_t n_;
    std::vector<std::uint64_t> words_;
};

/// Hamming distance between two equal-length bit strings.
inline std::uint32_t hamming(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
    auto wa = a.words(), wb = b.words();
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) c += std::popcount(wa[i] ^ wb[i]);
    return static_cast<std::uint32_t>(c);
}

/// Number of 1-bits; the objective value of x.
inline int onemax(const BitString& x) noexcept { return static_cast<int>(x.popcount()); }

/// Hamming distance to the all-ones optimum: n - onemax(x).
inline int distance_to_optimum(const BitString& x) noexcept {
    return static_cast<int>(x.size()) - onemax(x);
}

struct BudgetExhausted : std::runtime_error {
    BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

/// Counts objective calls of one trial against an optional budget.
class EvalCounter {
public:
    static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

    explicit EvalCounter(std::uint64_t budget = kUnlimited) : budget_(budget) {
        if (budget == 0) throw std::invalid_argument("EvalCounter: budget must be positive");
    }

    std::uint64_t count() const noexcept { return count_; }
    std::uint64_t budget() const noexcept { return budget_; }

    bool can_afford(std::uint64_t k) const noexcept {
        return budget_ == kUnlimited || count_ + k <= budget_;
    }

    void charge(std::uint64_t k = 1) {
        if (!can_afford(k)) throw BudgetExhausted{};
        count_ += k;
    }

private:
    std::uint64_t count_ = 0;
    std::uint64_t budget_;
};

/// onemax with evaluation accounting; throws BudgetExhausted at the limit.
inline int counted_eval(const BitString& x, EvalCounter& counter) {
    counter.charge(1);
    return onemax(x);
}

}  // namespace fixedstart

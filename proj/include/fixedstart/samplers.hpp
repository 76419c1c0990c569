#pragma once

#include <cstdint>
#include <vector>

#include "fixedstart/core.hpp"
#include "fixedstart/rng.hpp"

namespace fixedstart {

/// Binomial(n, p) draw. Uses the geometric-gap (waiting time) method, so the
/// expected cost is O(min(np, n(1-p)) + 1) rather than O(n); p = lambda/n with
/// small lambda is the hot case.
std::uint32_t sample_binomial(std::uint32_t n, double p, Rng& rng);

/// Truncated discrete power law on [1..u]: Pr[i] = C * i^-beta with
/// C = (sum_{j=1..u} j^-beta)^-1. Sampling is inverse-CDF lookup on a table
/// built once per (beta, u); immutable and shareable after construction.
class PowerLawDist {
public:
    PowerLawDist(double beta, std::uint32_t u);

    double beta() const noexcept { return beta_; }
    std::uint32_t upper() const noexcept { return u_; }
    double normalizer() const noexcept { return norm_; }

    /// C * i^-beta inside [1..u], 0 outside.
    double pmf(std::int64_t i) const;

    /// Inverse-CDF sample; binary search over the cumulative table.
    std::uint32_t sample(Rng& rng) const;

    const std::vector<double>& cdf_table() const noexcept { return cdf_; }

private:
    double beta_;
    std::uint32_t u_;
    double norm_;
    std::vector<double> cdf_;
};

/// Uniform k-subsets of [0, n) via Floyd's algorithm with a generation-stamped
/// membership array, O(k) per draw after the first. Reusable scratch object;
/// not thread-safe, one per execution context.
class SubsetSampler {
public:
    /// Fills `out` (cleared first) with k distinct positions; order is not
    /// meaningful, the set is uniform over all k-subsets.
    void operator()(std::uint32_t n, std::uint32_t k, Rng& rng, std::vector<std::uint32_t>& out);

private:
    std::vector<std::uint32_t> mark_;
    std::uint32_t gen_ = 0;
};

/// Copy of x with exactly ell bits flipped at a uniform random ell-subset.
BitString flip_random_bits(const BitString& x, std::uint32_t ell, Rng& rng);

/// Uniform crossover biased towards x_prime: each position takes x_prime's bit
/// with probability c, else x's bit, independently. Positions where the
/// parents agree are unaffected, so randomness is only spent on the
/// differing positions (same output distribution).
BitString biased_crossover(const BitString& x, const BitString& x_prime, double c, Rng& rng);

}  // namespace fixedstart

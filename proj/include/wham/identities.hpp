#pragma once

#include "wham/linalg.hpp"
#include "wham/wspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wham {

/// Two independently computed sides of a counting identity.
struct IdentityCheck {
    Rational lhs = 0;
    Rational rhs = 0;

    bool equal() const { return lhs == rhs; }
};

/// Sum of codeword weights over an m-dimensional B (full enumeration) against
/// (q^m - q^(m-1)) times the weight of the image of B (from generators).
IdentityCheck check_codeword_sum(const CodeMatrix& l, const Subspace& b, std::uint64_t cap = kDefaultCap);

/// Sum of image weights over every m-dimensional B containing A (enumerated)
/// against the closed form in Gaussian binomials. Needs dim A < k and
/// dim A < m <= k.
IdentityCheck check_containing_sum(const CodeMatrix& l, const Subspace& a, std::size_t m,
                                   std::uint64_t cap = kDefaultCap);

/// Image weight of U directly against the total image weight minus the
/// weight of coordinates whose nonzero column lies in the annihilator of U.
IdentityCheck check_dual_complement(const CodeMatrix& l, const Subspace& u);

/// For a constant-weight generator with point sum sigma and a column subspace
/// U: weight of coordinates with nonzero column in U against
/// (|U| - 1) * sigma / (q - 1). Throws PreconditionFailed if g is not
/// constant weight.
IdentityCheck check_point_sum(const CodeMatrix& g, const Subspace& u, std::uint64_t cap = kDefaultCap);

/// Pass counts of a seeded randomized sweep over all four identities.
struct IdentitySweepReport {
    struct Tally {
        std::string name;
        std::uint64_t checks = 0;
        std::uint64_t passed = 0;
    };
    std::vector<Tally> tallies;
    std::uint64_t trials = 0;
    /// The first failing instance, if any, with the identity that failed.
    std::optional<CodeMatrix> failing_instance;
    std::string failing_identity;

    bool all_passed() const
    {
        for (const auto& t : tallies)
            if (t.passed != t.checks)
                return false;
        return true;
    }
};

struct SweepOptions {
    std::vector<int> orders{2, 3, 4, 5};
    std::size_t max_k = 3;
    std::size_t max_length = 6;
    int max_numerator = 10;
    int max_denominator = 10;
    std::uint64_t cap = kDefaultCap;
};

/// Runs every identity on one instance: codeword sums and dual complements
/// for every subspace, containing sums for one seeded A per dimension.
/// Tallies accumulate into `report`.
void check_all_identities(const CodeMatrix& l, std::uint64_t seed, IdentitySweepReport& report,
                          std::uint64_t cap = kDefaultCap);

IdentitySweepReport run_identity_sweep(std::uint64_t seed, std::uint64_t trials, const SweepOptions& options = {});

} // namespace wham

#pragma once

#include "wham/linalg.hpp"
#include "wham/wspace.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wham {

/// Coordinate permutation with nonzero scaling: alpha -> alpha * Q where
/// Q[i][perm[i]] = scalars[i].
struct MonomialIsometry {
    std::vector<std::size_t> perm;
    std::vector<Elem> scalars;

    static MonomialIsometry identity(std::size_t n);

    std::size_t size() const noexcept { return perm.size(); }
    Vec apply(std::span<const Elem> alpha, const Field& field) const;
    /// The product L * Q.
    Matrix apply(const Matrix& l) const;
    Matrix matrix(const Field& field) const;

    friend bool operator==(const MonomialIsometry&, const MonomialIsometry&) = default;
};

/// True iff perm is a bijection, every scalar is a nonzero element of the
/// field and the permutation preserves weights. With `exhaustive`, also checks
/// weight preservation on every vector of F^Omega (within `cap`).
bool is_isometry(const MonomialIsometry& phi, const WeightedSpace& space, const Field& field, bool exhaustive = false,
                 std::uint64_t cap = kDefaultCap);

/// Outcome of a local-equivalence test. The witness is the violating input
/// vector (brute force) or projective point (column criterion).
struct EquivalenceResult {
    bool equivalent = true;
    std::optional<Vec> witness;
    Rational left = 0;
    Rational right = 0;
};

/// Compares weights of gamma*L and gamma*M for every gamma in F^k.
EquivalenceResult locally_equivalent_bruteforce(const CodeMatrix& l, const CodeMatrix& m,
                                                std::uint64_t cap = kDefaultCap);

/// Compares per-projective-point column weight sums; no enumeration of F^k.
EquivalenceResult locally_equivalent_projective(const CodeMatrix& l, const CodeMatrix& m,
                                                std::uint64_t cap = kDefaultCap);

/// Weight of the image of every dim-m subspace of F^k, in enumeration order.
std::vector<std::pair<Subspace, Rational>> subspace_weight_profile(const CodeMatrix& l, std::size_t m,
                                                                   std::uint64_t cap = kDefaultCap);

struct UdpCounterexample {
    LabelSet from_h;
    LabelSet from_k;
    Rational sum = 0;
    std::vector<Rational> multiset_h; // ascending
    std::vector<Rational> multiset_k;
};

struct UdpReport {
    bool holds = true;
    std::optional<UdpCounterexample> counterexample;
};

enum class UdpMethod { Auto, Direct, MeetInMiddle };

inline constexpr std::size_t kUdpMaxSetSize = 24;
inline constexpr std::size_t kUdpDirectLimit = 20;

/// Decides the unique decomposition property of (H, K, omega). Subsets are
/// enumerated up to their weight multiset. `Auto` uses meet-in-the-middle when
/// either set has more than kUdpDirectLimit coordinates.
UdpReport udp_check(const LabelSet& h, const LabelSet& k, const WeightedSpace& space,
                    UdpMethod method = UdpMethod::Auto);

LabelSet all_coordinates(const WeightedSpace& space);

struct ExtensionOutcome {
    std::optional<MonomialIsometry> isometry;
    EquivalenceResult local;
    UdpReport udp;
};

/// Builds a weight-preserving monomial map Q with M = L * Q when L and M are
/// locally equivalent and their supports satisfy UDP. Otherwise the outcome
/// carries the failing check.
ExtensionOutcome try_extend_to_isometry(const CodeMatrix& l, const CodeMatrix& m, std::uint64_t cap = kDefaultCap);

/// Throws PreconditionFailed when no isometry can be constructed.
MonomialIsometry extend_to_isometry(const CodeMatrix& l, const CodeMatrix& m, std::uint64_t cap = kDefaultCap);

struct MepReport {
    bool holds = true;
    UdpReport udp;
    /// When MEP fails: all-ones vectors on the two sides of the UDP
    /// counterexample. They have equal weight but no isometry maps one to the other.
    std::optional<Vec> alpha;
    std::optional<Vec> beta;
};

MepReport mep_check(const WeightedSpace& space);

struct TransitivityOutcome {
    std::optional<MonomialIsometry> isometry;
    Rational weight_alpha = 0;
    Rational weight_beta = 0;
    UdpReport udp;
};

TransitivityOutcome try_transitivity_map(std::span<const Elem> alpha, std::span<const Elem> beta,
                                         const WeightedSpace& space, const Field& field);

/// Isometry phi with phi(alpha) = beta; throws PreconditionFailed when the
/// weights differ or the supports fail UDP.
MonomialIsometry transitivity_map(std::span<const Elem> alpha, std::span<const Elem> beta,
                                  const WeightedSpace& space, const Field& field);

} // namespace wham

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace wham {

/// An element of GF(p^m), encoded by the base-p digits of its polynomial
/// coefficients, low-to-high. Index 0 is zero, index 1 is one.
struct Elem {
    std::uint8_t index = 0;

    constexpr bool is_zero() const noexcept { return index == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

/// Immutable description of GF(p^m) with precomputed arithmetic tables.
/// Copies share the tables.
class Field {
public:
    static constexpr int kMaxOrder = 256;

    /// Validates p, m and the modulus (monic, degree m, irreducible). When the
    /// modulus is omitted the lexicographically smallest monic irreducible of
    /// degree m (coefficients compared low-to-high) is used.
    static Field create(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt);

    /// Field of order q = p^m with the default modulus.
    static Field of_order(int q);

    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    int q() const noexcept { return q_; }
    /// m+1 coefficients, low-to-high, monic.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem element(int index) const;
    std::vector<Elem> elements() const;
    std::vector<Elem> nonzero_elements() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    friend bool operator==(const Field& a, const Field& b) noexcept
    {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    struct Tables {
        std::vector<std::uint8_t> add;
        std::vector<std::uint8_t> mul;
        std::vector<std::uint8_t> neg;
        std::vector<std::uint8_t> inv;
    };

    Field(int p, int m, std::vector<int> modulus);
    void check(Elem a) const;

    int p_ = 2;
    int m_ = 1;
    int q_ = 2;
    std::vector<int> modulus_;
    std::shared_ptr<const Tables> tables_;
};

bool is_prime(int n) noexcept;

/// Irreducibility of a monic polynomial over GF(p), coefficients low-to-high.
bool is_irreducible(std::span<const int> poly, int p);

} // namespace wham

#pragma once

// Residue sequence phi_i = i*q mod p and the dual-knot invariants built on it.
//
// For a 1-bridge braid K(L(p,q); u) in a lens space:
//   psi       index i in [1, p-1] with phi_i = u
//   phi       #{ i : 1 <= i < psi, phi_i < u }
//   phi_tilde min(phi, phi - psi + p - u, psi - phi - 1, u - phi - 1)
// phi_tilde >= 2 certifies hyperbolicity when the knot admits a longitudinal
// surgery to S^3. That hypothesis is the caller's to establish.

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace lensbound::modseq {

class DualKnotParams {
public:
    // q is reduced mod p; q = 0 mod p, gcd(p, q) != 1 or u outside (0, p) throw DomainError.
    DualKnotParams(std::uint64_t p, std::uint64_t q, std::uint64_t u);

    // Same as above but accepts a negative q (reduced into (0, p)).
    static DualKnotParams with_signed_q(std::uint64_t p, std::int64_t q, std::uint64_t u);

    [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
    [[nodiscard]] std::uint64_t q() const noexcept { return q_; }
    [[nodiscard]] std::uint64_t u() const noexcept { return u_; }

    friend auto operator<=>(const DualKnotParams&, const DualKnotParams&) = default;

private:
    struct Validated {};
    DualKnotParams(Validated, std::uint64_t p, std::uint64_t q, std::uint64_t u) noexcept
        : p_(p), q_(q), u_(u) {}

    std::uint64_t p_;
    std::uint64_t q_;
    std::uint64_t u_;
};

struct InvariantProfile {
    std::uint64_t psi = 0;
    std::uint64_t phi = 0;
    // (phi, phi - psi + p - u, psi - phi - 1, u - phi - 1)
    std::array<std::uint64_t, 4> candidates{};
    std::uint64_t phi_tilde = 0;

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

// (phi_1, ..., phi_n); requires 1 <= n <= p.
[[nodiscard]] std::vector<std::uint64_t> phi_sequence(const DualKnotParams& params, std::uint64_t n);

// Inverse of q modulo p (gcd(q, p) = 1 is guaranteed by DualKnotParams).
[[nodiscard]] std::uint64_t inverse_mod(std::uint64_t q, std::uint64_t p);

// sum_{i=0}^{n-1} floor((a*i + b) / m), Euclid-style, O(log m) steps.
[[nodiscard]] unsigned __int128 floor_sum(std::uint64_t n, std::uint64_t m, std::uint64_t a,
                                          std::uint64_t b);

[[nodiscard]] std::uint64_t psi(const DualKnotParams& params);

// #{ i : 1 <= i <= n, phi_i < u }; requires 1 <= n < p.
[[nodiscard]] std::uint64_t phi_count_fast(const DualKnotParams& params, std::uint64_t n);

[[nodiscard]] std::uint64_t phi_count(const DualKnotParams& params);

[[nodiscard]] InvariantProfile invariant_profile(const DualKnotParams& params);

// Caller asserts K(L(p,q); u) yields S^3 by a longitudinal surgery.
[[nodiscard]] bool is_hyperbolic_dual(const DualKnotParams& params);

}  // namespace lensbound::modseq

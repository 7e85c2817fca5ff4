#include "lensbound/modseq.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "lensbound/errors.hpp"

namespace lensbound::modseq {

namespace {

using u128 = unsigned __int128;

std::string triple(std::uint64_t p, std::uint64_t q, std::uint64_t u) {
    return "(" + std::to_string(p) + ", " + std::to_string(q) + ", " + std::to_string(u) + ")";
}

// Terms stay below 2^64 whenever m < 2^32, so the 64-bit loop is exact there.
template <typename Word>
u128 floor_sum_impl(Word n, Word m, Word a, Word b) {
    u128 total = 0;
    while (true) {
        if (a >= m) {
            const Word pairs = (n % 2 == 0) ? (n / 2) * (n - 1) : n * ((n - 1) / 2);
            total += static_cast<u128>(pairs) * (a / m);
            a %= m;
        }
        if (b >= m) {
            total += static_cast<u128>(n) * (b / m);
            b %= m;
        }
        const Word y_max = a * n + b;
        if (y_max < m) break;
        n = y_max / m;
        b = y_max % m;
        std::swap(m, a);
    }
    return total;
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    if (x < (std::uint64_t{1} << 32) && y < (std::uint64_t{1} << 32)) return x * y % m;
    return static_cast<std::uint64_t>(static_cast<u128>(x) * y % m);
}

// sum_{i=1}^{n} floor((q*i + c) / p) for 0 <= c < p, arbitrary 64-bit p.
u128 shifted_floor_sum(std::uint64_t n, std::uint64_t p, std::uint64_t q, std::uint64_t c) {
    // q + c < 2p: at most one whole p to peel off before the floor sum.
    const bool wraps = c >= p - q;
    const std::uint64_t rem = wraps ? c - (p - q) : q + c;
    return (wraps ? u128{n} : u128{0}) + floor_sum(n, p, q, rem);
}

template <typename Signed>
std::optional<std::uint64_t> inverse_mod_impl(std::uint64_t q, std::uint64_t p) {
    Signed old_r = static_cast<Signed>(q % p), r = static_cast<Signed>(p);
    Signed old_s = 1, s = 0;
    while (r != 0) {
        const Signed quot = old_r / r;
        old_r = std::exchange(r, old_r - quot * r);
        old_s = std::exchange(s, old_s - quot * s);
    }
    if (old_r != 1) return std::nullopt;
    Signed inv = old_s % static_cast<Signed>(p);
    if (inv < 0) inv += static_cast<Signed>(p);
    return static_cast<std::uint64_t>(inv);
}

}  // namespace

DualKnotParams::DualKnotParams(std::uint64_t p, std::uint64_t q, std::uint64_t u) {
    if (p < 2) throw DomainError("dual knot params " + triple(p, q, u) + ": p must be at least 2");
    const std::uint64_t q_red = q % p;
    if (q_red == 0) throw DomainError("dual knot params " + triple(p, q, u) + ": q must not be 0 mod p");
    if (std::gcd(p, q_red) != 1) throw DomainError("dual knot params " + triple(p, q, u) + ": gcd(p, q) != 1");
    if (u == 0 || u >= p) throw DomainError("dual knot params " + triple(p, q, u) + ": u must satisfy 0 < u < p");
    p_ = p;
    q_ = q_red;
    u_ = u;
}

DualKnotParams DualKnotParams::with_signed_q(std::uint64_t p, std::int64_t q, std::uint64_t u) {
    if (p < 2) throw DomainError("dual knot params: p must be at least 2");
    if (q >= 0) return DualKnotParams(p, static_cast<std::uint64_t>(q), u);
    // -q fits in uint64 even for INT64_MIN.
    const std::uint64_t magnitude = static_cast<std::uint64_t>(-(q + 1)) + 1;
    const std::uint64_t r = magnitude % p;
    return DualKnotParams(p, r == 0 ? 0 : p - r, u);
}

std::vector<std::uint64_t> phi_sequence(const DualKnotParams& params, std::uint64_t n) {
    if (n < 1 || n > params.p())
        throw DomainError("phi_sequence: n must satisfy 1 <= n <= p, got n=" + std::to_string(n));
    std::vector<std::uint64_t> seq;
    seq.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 1; i <= n; ++i) seq.push_back(mul_mod(i % params.p(), params.q(), params.p()));
    return seq;
}

std::uint64_t inverse_mod(std::uint64_t q, std::uint64_t p) {
    if (p < 2) throw DomainError("inverse_mod: modulus must be at least 2");
    // Bezout coefficients stay within (-p, p), so int64 suffices below 2^63.
    const auto inv = p < (std::uint64_t{1} << 63) ? inverse_mod_impl<std::int64_t>(q, p) : inverse_mod_impl<__int128>(q, p);
    if (!inv) throw DomainError("inverse_mod: " + std::to_string(q) + " is not invertible mod " + std::to_string(p));
    return *inv;
}

u128 floor_sum(std::uint64_t n, std::uint64_t m, std::uint64_t a, std::uint64_t b) {
    if (m == 0) throw DomainError("floor_sum: modulus must be positive");
    if (n == 0) return 0;
    // Below 2^32 all intermediate words fit in 64 bits (a, b reduced first).
    if (m < (std::uint64_t{1} << 32) && n < (std::uint64_t{1} << 32)) {
        const u128 head = static_cast<u128>(n) * (n - 1) / 2 * (a / m) + static_cast<u128>(n) * (b / m);
        return head + floor_sum_impl<std::uint64_t>(n, m, a % m, b % m);
    }
    return floor_sum_impl<u128>(n, m, a, b);
}

std::uint64_t psi(const DualKnotParams& params) {
    return mul_mod(params.u(), inverse_mod(params.q(), params.p()), params.p());
}

std::uint64_t phi_count_fast(const DualKnotParams& params, std::uint64_t n) {
    const std::uint64_t p = params.p();
    if (n < 1 || n >= p)
        throw DomainError("phi_count_fast: n must satisfy 1 <= n < p, got n=" + std::to_string(n));
    // [iq mod p < u] = floor(iq/p) - floor((iq + p - u)/p) + 1
    const u128 below = shifted_floor_sum(n, p, params.q(), 0);
    const u128 shifted = shifted_floor_sum(n, p, params.q(), p - params.u());
    return static_cast<std::uint64_t>(static_cast<u128>(n) + below - shifted);
}

std::uint64_t phi_count(const DualKnotParams& params) {
    const std::uint64_t index = psi(params);
    return index == 1 ? 0 : phi_count_fast(params, index - 1);
}

InvariantProfile invariant_profile(const DualKnotParams& params) {
    InvariantProfile prof;
    prof.psi = psi(params);
    prof.phi = prof.psi == 1 ? 0 : phi_count_fast(params, prof.psi - 1);
    const std::uint64_t p = params.p();
    const std::uint64_t u = params.u();
    // Each entry counts a subset of residues, so none of the differences go negative.
    prof.candidates = {
        prof.phi,
        prof.phi + (p - u) - prof.psi,
        prof.psi - prof.phi - 1,
        u - prof.phi - 1,
    };
    prof.phi_tilde = *std::min_element(prof.candidates.begin(), prof.candidates.end());
    return prof;
}

bool is_hyperbolic_dual(const DualKnotParams& params) {
    return invariant_profile(params).phi_tilde >= 2;
}

}  // namespace lensbound::modseq

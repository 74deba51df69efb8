#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glcurve/errors.hpp"

namespace glcurve {

// Elements of F_{p^s} are stored packed in base p: c0 + c1*p + ... + c_{s-1}*p^{s-1},
// where the element is c0 + c1*x + ... modulo the field's irreducible polynomial.
using Elt = std::uint32_t;

struct FieldElement {
    std::vector<long> coeffs; // length s, each in [0, p)
};

// F_{p^s} with eagerly built exponential and discrete-log tables.
// Immutable after construction; cheap O(1) multiplication/dlog afterwards.
class FieldSpec {
public:
    static constexpr std::uint64_t default_size_bound = std::uint64_t(1) << 24;

    long p() const { return p_; }
    long s() const { return s_; }
    std::uint64_t q() const { return q_; }
    // monic modulus of degree s; empty when s == 1
    const std::vector<long>& modulus() const { return modulus_; }
    Elt generator() const { return generator_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt from_int(long long a) const;          // image of an integer in the prime subfield
    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;               // via dlog tables
    Elt inv(Elt a) const;
    Elt pow(Elt a, long long e) const;
    Elt frobenius(Elt a) const { return pow(a, p_); }

    // dlog(v) with generator^dlog = v; throws zero_element on v = 0
    std::uint64_t dlog(Elt v) const;
    Elt exp(std::uint64_t t) const { return exp_table_[t % (q_ - 1)]; }

    // #{ y in F_q : y^n = v }
    long nth_power_count(Elt v, std::uint64_t n) const;

    // absolute trace to F_p, as an integer in [0, p)
    long abs_trace(Elt a) const;

    FieldElement unpack(Elt a) const;
    Elt pack(const FieldElement& v) const;
    std::string to_string(Elt a) const;

    // prime factors of q-1 (used for order checks)
    const std::vector<std::uint64_t>& unit_order_factors() const { return q1_factors_; }

private:
    friend std::shared_ptr<const FieldSpec> build_field(long p, long s, std::uint64_t size_bound);
    FieldSpec() = default;

    Elt poly_mul(Elt a, Elt b) const; // schoolbook, used only during table construction

    long p_ = 0;
    long s_ = 1;
    std::uint64_t q_ = 0;
    std::vector<long> modulus_;  // coeffs low-to-high incl. leading 1, size s+1 (s>1 only)
    Elt generator_ = 0;
    std::vector<Elt> exp_table_;           // size q-1
    std::vector<std::uint32_t> dlog_table_; // size q; dlog_table_[0] is a sentinel
    std::vector<std::uint64_t> q1_factors_;
    std::vector<std::uint32_t> pow_p_;     // p^0..p^s for digit extraction
};

using Field = std::shared_ptr<const FieldSpec>;

// Deterministic construction: lexicographically smallest irreducible monic modulus
// (coefficient tuples ordered by packed value), smallest generator in element order.
Field build_field(long p, long s, std::uint64_t size_bound = FieldSpec::default_size_bound);

bool is_prime_u64(std::uint64_t n); // deterministic Miller-Rabin

} // namespace glcurve

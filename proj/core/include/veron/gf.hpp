#ifndef VERON_GF_HPP
#define VERON_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "veron/errors.hpp"

namespace veron {

/// Element of a finite field, identified by its packed coefficient code.
///
/// The code of the element with polynomial-basis coefficients
/// (c_0, ..., c_{k-1}), low degree first, is sum c_i p^i; it lies in
/// [0, q). Elements carry no reference to their field: every operation
/// goes through the owning Field, which checks that codes are in range.
struct FieldElement {
    std::uint32_t code = 0;

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr bool operator<(FieldElement a, FieldElement b) { return a.code < b.code; }
};

/// Exact arithmetic in GF(p^k).
///
/// Supported range is q = p^k <= 2^16. Small fields (q <= 1024) use full
/// addition/multiplication tables; larger fields fall back to polynomial
/// arithmetic modulo the irreducible modulus. Fields are immutable after
/// construction and cheap to copy (tables are shared). All operations are
/// pure; concurrent use needs no synchronization.
class Field {
public:
    /// GF(p^k) with the lexicographically smallest monic irreducible
    /// modulus of degree k over GF(p), coefficient tuples compared low
    /// degree first.
    Field(std::uint32_t p, std::uint32_t k);

    /// GF(p^k) with an explicit monic modulus of degree k, coefficients
    /// low degree first (k+1 of them, leading coefficient 1).
    Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

    /// Parses "p", "p^k" or "p^k/c0,c1,...,ck" (modulus coefficients low
    /// degree first).
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    bool is_zero(FieldElement a) const { return a.code == 0; }

    /// Embeds n via the prime subfield: n mod p times the field's one.
    FieldElement from_int(std::int64_t n) const;

    /// Element with the given polynomial-basis coefficients (low degree
    /// first, at most k of them, each < p).
    FieldElement element(const std::vector<std::uint32_t>& coeffs) const;

    /// Polynomial-basis coefficients of a, low degree first, length k.
    std::vector<std::uint32_t> coefficients(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;

    /// a^n with the convention pow(a, 0) = 1 for every a, including 0.
    FieldElement pow(FieldElement a, std::uint64_t n) const;

    /// All q elements, code order ascending (zero first). This is the
    /// lexicographic order of coefficient vectors read high degree first.
    std::vector<FieldElement> elements() const;

    std::string to_string(FieldElement a) const;
    /// Field spec string, "p^k" form (with modulus for k > 1).
    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

private:
    struct Tables {
        std::vector<FieldElement> add;  // q*q entries
        std::vector<FieldElement> mul;  // q*q entries
        std::vector<FieldElement> inv;  // q entries, inv[0] unused
        std::vector<FieldElement> neg;  // q entries
    };

    void check(FieldElement a) const {
        if (a.code >= q_)
            throw FieldMismatch("element code " + std::to_string(a.code) +
                                " out of range for " + to_string());
    }

    FieldElement add_slow(FieldElement a, FieldElement b) const;
    FieldElement mul_slow(FieldElement a, FieldElement b) const;
    void validate_and_init();

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

inline FieldElement Field::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (tables_) return tables_->add[std::size_t(a.code) * q_ + b.code];
    return add_slow(a, b);
}

inline FieldElement Field::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (tables_) return tables_->mul[std::size_t(a.code) * q_ + b.code];
    return mul_slow(a, b);
}

inline FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

inline FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

}  // namespace veron

#endif

#include "veron/mono.hpp"

#include <algorithm>
#include <numeric>

namespace veron {

namespace {

void require_prime(std::uint32_t p) {
    if (p < 2) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t tuple_sum(const ExponentTuple& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

std::uint64_t to_u64_checked(const BigInt& b, const char* what) {
    if (b < 0 || b > BigInt(UINT64_MAX)) throw ParamOutOfRange(std::string(what) + " does not fit in 64 bits");
    return b.convert_to<std::uint64_t>();
}

}  // namespace

DigitVector base_p_digits(std::uint64_t n, std::uint32_t p) {
    require_prime(p);
    DigitVector d;
    d.base = p;
    while (n > 0) {
        d.digits.push_back(std::uint32_t(n % p));
        n /= p;
    }
    return d;
}

std::vector<ExponentTuple> enumerate_exponents(std::uint32_t m, std::uint32_t t) {
    std::vector<ExponentTuple> out;
    ExponentTuple e(m + 1, 0);
    e[0] = t;
    out.push_back(e);
    while (true) {
        // descending lexicographic successor: decrement the last positive
        // slot before position m and push everything after it onto the
        // slot right behind
        std::uint32_t j = m;
        bool found = false;
        for (std::uint32_t i = m; i-- > 0;) {
            if (e[i] > 0) {
                j = i;
                found = true;
                break;
            }
        }
        if (!found) break;
        std::uint64_t tail = 0;
        for (std::uint32_t i = j + 1; i <= m; ++i) {
            tail += e[i];
            e[i] = 0;
        }
        e[j] -= 1;
        e[j + 1] = std::uint32_t(tail + 1);
        out.push_back(e);
    }
    return out;
}

std::uint64_t exponent_count(std::uint32_t m, std::uint32_t t) {
    return to_u64_checked(binomial_exact(std::uint64_t(m) + t, t), "C(m+t, t)");
}

std::uint64_t rank_exponent(const ExponentTuple& e) {
    if (e.empty()) throw ParamOutOfRange("exponent tuple must have at least one entry");
    const std::uint32_t m = std::uint32_t(e.size()) - 1;
    std::uint64_t rem = tuple_sum(e);
    BigInt rank = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        // tuples sharing the prefix but carrying a larger value at slot i
        rank += binomial_exact(rem - e[i] + m - i - 1, m - i);
        rem -= e[i];
    }
    return to_u64_checked(rank, "tuple rank");
}

ExponentTuple unrank_exponent(std::uint32_t m, std::uint32_t t, std::uint64_t index) {
    if (BigInt(index) >= binomial_exact(std::uint64_t(m) + t, t))
        throw IndexOutOfRange("tuple index " + std::to_string(index) + " out of range");
    ExponentTuple e(m + 1, 0);
    BigInt left = index;
    std::uint32_t rem = t;
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t v = rem + 1; v-- > 0;) {
            const BigInt block = binomial_exact(std::uint64_t(rem) - v + m - i - 1, m - i - 1);
            if (left < block) {
                e[i] = v;
                rem -= v;
                break;
            }
            left -= block;
        }
    }
    e[m] = rem;
    return e;
}

BigInt binomial_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

BigInt multinomial_exact(std::uint64_t t, const ExponentTuple& e) {
    if (tuple_sum(e) != t) return 0;
    BigInt r = 1;
    std::uint64_t rem = t;
    for (const std::uint32_t ei : e) {
        r *= binomial_exact(rem, ei);
        rem -= ei;
    }
    return r;
}

std::uint32_t multinomial_mod_p(std::uint64_t t, const ExponentTuple& e, std::uint32_t p) {
    require_prime(p);
    if (tuple_sum(e) != t) return 0;

    std::size_t positions = 0;
    std::vector<DigitVector> ed(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        ed[i] = base_p_digits(e[i], p);
        positions = std::max(positions, ed[i].digits.size());
    }
    const DigitVector td = base_p_digits(t, p);
    positions = std::max(positions, td.digits.size());

    // Per-digit multinomials via factorials mod p; every digit is < p, so
    // the factorials involved are invertible.
    std::vector<std::uint64_t> fact(p, 1);
    for (std::uint32_t i = 2; i < p; ++i) fact[i] = fact[i - 1] * i % p;

    std::uint64_t num = 1, den = 1;
    for (std::size_t lambda = 0; lambda < positions; ++lambda) {
        std::uint64_t digit_sum = 0;
        for (const auto& d : ed) digit_sum += d.digit(lambda);
        if (digit_sum != td.digit(lambda)) return 0;  // a carry occurs
        num = num * fact[td.digit(lambda)] % p;
        for (const auto& d : ed) den = den * fact[d.digit(lambda)] % p;
    }
    return std::uint32_t(num * pow_mod(den, p - 2, p) % p);
}

bool carry_free(std::uint64_t t, const ExponentTuple& e, std::uint32_t p) {
    require_prime(p);
    const DigitVector td = base_p_digits(t, p);
    std::vector<DigitVector> ed(e.size());
    std::size_t positions = td.digits.size();
    for (std::size_t i = 0; i < e.size(); ++i) {
        ed[i] = base_p_digits(e[i], p);
        positions = std::max(positions, ed[i].digits.size());
    }
    for (std::size_t lambda = 0; lambda < positions; ++lambda) {
        std::uint64_t digit_sum = 0;
        for (const auto& d : ed) digit_sum += d.digit(lambda);
        if (digit_sum != td.digit(lambda)) return false;
    }
    return true;
}

BigInt count_nonvanishing(std::uint32_t m, std::uint64_t t, std::uint32_t p) {
    const DigitVector td = base_p_digits(t, p);
    BigInt r = 1;
    for (const std::uint32_t digit : td.digits) r *= binomial_exact(std::uint64_t(m) + digit, digit);
    return r;
}

BigInt span_of_powers_dim(std::uint32_t m, std::uint64_t t, std::uint32_t p) {
    return count_nonvanishing(m, t, p);
}

BigInt nucleus_dim_formula(std::uint32_t m, std::uint64_t t, std::uint32_t p) {
    if (t < 1) throw ParamOutOfRange("degree t must be at least 1");
    return binomial_exact(std::uint64_t(m) + t, t) - count_nonvanishing(m, t, p) - 1;
}

std::string_view to_string(NucleusClass c) {
    switch (c) {
        case NucleusClass::TrivialParams: return "TrivialParams";
        case NucleusClass::SmallT: return "SmallT";
        case NucleusClass::CurveSpecial: return "CurveSpecial";
        case NucleusClass::NonEmpty: return "NonEmpty";
    }
    return "?";
}

NucleusClass classify_empty(std::uint32_t m, std::uint64_t t, std::uint32_t p) {
    require_prime(p);
    if (t < 1) throw ParamOutOfRange("degree t must be at least 1");
    if (m == 0 || t <= 1) return NucleusClass::TrivialParams;
    if (t < p) return NucleusClass::SmallT;
    if (m == 1) {
        // t of the form c*p^J - 1: every digit below the leading one is p-1
        const DigitVector td = base_p_digits(t, p);
        const bool special = std::all_of(td.digits.begin(), td.digits.end() - 1,
                                         [&](std::uint32_t d) { return d == p - 1; });
        if (special) return NucleusClass::CurveSpecial;
    }
    return NucleusClass::NonEmpty;
}

}  // namespace veron

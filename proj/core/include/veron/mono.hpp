#ifndef VERON_MONO_HPP
#define VERON_MONO_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "veron/errors.hpp"

namespace veron {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent tuple (e_0, ..., e_m). A tuple belongs to the set E^t_m when
/// its entries sum to t; that set indexes both the degree-t monomial
/// basis and its dual basis, in the order fixed by enumerate_exponents.
using ExponentTuple = std::vector<std::uint32_t>;

/// Base-p representation of a nonnegative integer, least significant
/// digit first. The trailing digit is nonzero unless the integer is 0,
/// which has no digits at all.
struct DigitVector {
    std::vector<std::uint32_t> digits;
    std::uint32_t base = 2;

    std::uint32_t digit(std::size_t lambda) const {
        return lambda < digits.size() ? digits[lambda] : 0;
    }
    std::uint64_t value() const {
        std::uint64_t v = 0;
        for (std::size_t i = digits.size(); i-- > 0;) v = v * base + digits[i];
        return v;
    }
};

DigitVector base_p_digits(std::uint64_t n, std::uint32_t p);

/// All tuples of E^t_m in descending lexicographic order, so (t, 0, ..., 0)
/// comes first and (0, ..., 0, t) last. Exactly C(m+t, t) tuples.
std::vector<ExponentTuple> enumerate_exponents(std::uint32_t m, std::uint32_t t);

/// C(m+t, t) as a machine integer; throws ParamOutOfRange if it does not fit.
std::uint64_t exponent_count(std::uint32_t m, std::uint32_t t);

/// Position of e in enumerate_exponents(len(e)-1, sum(e)) order.
std::uint64_t rank_exponent(const ExponentTuple& e);

/// Inverse of rank_exponent; throws IndexOutOfRange for index >= C(m+t, t).
ExponentTuple unrank_exponent(std::uint32_t m, std::uint32_t t, std::uint64_t index);

/// Exact binomial coefficient, 0 when k > n.
BigInt binomial_exact(std::uint64_t n, std::uint64_t k);

/// Exact multinomial coefficient t! / (e_0! ... e_m!), by the iterative
/// binomial-product update. Returns 0 when the entries of e do not sum
/// to t. This is the arbitrary-precision oracle; it shares no code with
/// the modular path below.
BigInt multinomial_exact(std::uint64_t t, const ExponentTuple& e);

/// Multinomial coefficient modulo a prime p via the Lucas-type digit
/// congruence: the product over base-p digit positions of the per-digit
/// multinomials, where any position whose digit sum differs from the
/// digit of t contributes a zero factor.
std::uint32_t multinomial_mod_p(std::uint64_t t, const ExponentTuple& e, std::uint32_t p);

/// True iff adding e_0 + ... + e_m in base p produces no carries, i.e.
/// the digit of t at every position equals the sum of the digits of the
/// e_i there. Equivalent to multinomial_mod_p(t, e, p) != 0.
bool carry_free(std::uint64_t t, const ExponentTuple& e, std::uint32_t p);

/// Number of tuples in E^t_m whose multinomial coefficient is nonzero
/// mod p: the product over digit positions of C(m + t_lambda, t_lambda).
BigInt count_nonvanishing(std::uint32_t m, std::uint64_t t, std::uint32_t p);

/// Dimension of the subspace of the t-th symmetric power of an
/// (m+1)-dimensional space spanned by the t-th powers of vectors; same
/// product formula as count_nonvanishing. Valid for fields with at
/// least t elements.
BigInt span_of_powers_dim(std::uint32_t m, std::uint64_t t, std::uint32_t p);

/// Projective dimension of the nucleus in characteristic p:
/// C(m+t, t) - prod C(m + t_lambda, t_lambda) - 1, where -1 encodes the
/// empty nucleus. Exact for fields with at least t elements; a lower
/// bound otherwise.
BigInt nucleus_dim_formula(std::uint32_t m, std::uint64_t t, std::uint32_t p);

/// Classification of the parameter triples with empty nucleus.
enum class NucleusClass {
    TrivialParams,  // m == 0 or t <= 1
    SmallT,         // 2 <= t < p
    CurveSpecial,   // m == 1, t >= p, every digit of t below the leading one is p-1
    NonEmpty,       // everything else: the nucleus is nonempty
};

std::string_view to_string(NucleusClass c);

NucleusClass classify_empty(std::uint32_t m, std::uint64_t t, std::uint32_t p);

}  // namespace veron

#endif

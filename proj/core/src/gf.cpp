#include "veron/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace veron {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;    // documented bound on q
constexpr std::uint32_t kTableLimit = 1u << 10;  // build full op tables up to this q

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), coefficients low degree first.
using Poly = std::vector<std::uint32_t>;

std::size_t poly_degree(const Poly& a) {
    std::size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2) mod p
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return std::uint32_t(result);
}

// Remainder of a modulo b (b nonzero).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    const std::size_t db = poly_degree(b);
    const std::uint32_t lead_inv = mod_inverse(b[db], p);
    while (!poly_is_zero(a)) {
        const std::size_t da = poly_degree(a);
        if (da < db && !(da == 0 && db == 0)) break;
        if (db == 0) return Poly{};  // constant divisor
        const std::uint32_t factor = std::uint64_t(a[da]) * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::size_t j = da - db + i;
            a[j] = std::uint32_t((a[j] + std::uint64_t(p - 1) * factor % p * b[i]) % p);
        }
        // leading term is now zero by construction
    }
    return a;
}

bool divides(const Poly& g, const Poly& f, std::uint32_t p) {
    return poly_is_zero(poly_rem(f, g, p));
}

// Trial division by every monic polynomial of degree 1..k/2. A reducible
// monic polynomial of degree k has a monic factor of degree at most k/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t k = poly_degree(f);
    if (k == 0) return false;
    if (k == 1) return true;
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        // odometer over the d lower coefficients
        while (true) {
            if (divides(g, f, p)) return false;
            std::size_t i = 0;
            while (i < d && g[i] == p - 1) g[i++] = 0;
            if (i == d) break;
            ++g[i];
        }
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    validate_and_init();
}

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw ParamOutOfRange("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) throw ParamOutOfRange("field order p^k exceeds the supported bound 2^16");
    }
    if (k == 1) {
        modulus_ = {0, 1};  // x; unused for arithmetic but fixes a canonical form
        validate_and_init();
        return;
    }
    // Smallest monic irreducible in lexicographic order of the coefficient
    // tuple (c_0, ..., c_{k-1}), low degree compared first.
    std::vector<std::uint32_t> c(k, 0);
    while (true) {
        Poly cand(c);
        cand.push_back(1);
        if (is_irreducible(cand, p)) {
            modulus_ = std::move(cand);
            validate_and_init();
            return;
        }
        std::size_t i = k;
        while (i > 0 && c[i - 1] == p - 1) c[--i] = 0;
        if (i == 0) break;  // unreachable: an irreducible of every degree exists
        ++c[i - 1];
    }
    throw ReducibleModulus("no irreducible modulus found");
}

void Field::validate_and_init() {
    if (!is_prime(p_)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p_) + " is not prime");
    if (k_ == 0) throw ParamOutOfRange("extension degree must be at least 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        q *= p_;
        if (q > kMaxOrder) throw ParamOutOfRange("field order p^k exceeds the supported bound 2^16");
    }
    q_ = std::uint32_t(q);

    if (modulus_.size() != std::size_t(k_) + 1 || modulus_.back() != 1)
        throw ParamOutOfRange("modulus must be monic of degree k");
    for (std::uint32_t c : modulus_)
        if (c >= p_) throw ParamOutOfRange("modulus coefficients must lie in [0, p)");
    if (k_ > 1 && !is_irreducible(modulus_, p_))
        throw ReducibleModulus("modulus is reducible over GF(" + std::to_string(p_) + ")");

    if (q_ <= kTableLimit) {
        auto t = std::make_shared<Tables>();
        t->add.resize(std::size_t(q_) * q_);
        t->mul.resize(std::size_t(q_) * q_);
        t->inv.resize(q_, {0});
        t->neg.resize(q_, {0});
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                const FieldElement s = add_slow({a}, {b});
                const FieldElement m = mul_slow({a}, {b});
                t->add[std::size_t(a) * q_ + b] = s;
                t->mul[std::size_t(a) * q_ + b] = m;
                if (m.code == 1) t->inv[a] = {b};
                if (s.code == 0) t->neg[a] = {b};
            }
        }
        tables_ = std::move(t);
    }
}

FieldElement Field::add_slow(FieldElement a, FieldElement b) const {
    if (p_ == 2) return {a.code ^ b.code};
    std::uint32_t out = 0, scale = 1, x = a.code, y = b.code;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += (x % p_ + y % p_) % p_ * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElement Field::mul_slow(FieldElement a, FieldElement b) const {
    if (k_ == 1) return {std::uint32_t(std::uint64_t(a.code) * b.code % p_)};
    // schoolbook product of the coefficient polynomials
    std::vector<std::uint32_t> ca = coefficients(a), cb = coefficients(b);
    Poly prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (ca[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
    }
    Poly rem = poly_rem(std::move(prod), modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += (i < rem.size() ? rem[i] : 0) * scale;
        scale *= p_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const {
    check(a);
    if (p_ == 2) return a;
    if (tables_) return tables_->neg[a.code];
    std::uint32_t out = 0, scale = 1, x = a.code;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t c = x % p_;
        out += (c == 0 ? 0 : p_ - c) * scale;
        x /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElement Field::inv(FieldElement a) const {
    check(a);
    if (a.code == 0) throw DivisionByZero("inverse of zero in " + to_string());
    if (tables_) return tables_->inv[a.code];
    return pow(a, std::uint64_t(q_) - 2);
}

FieldElement Field::pow(FieldElement a, std::uint64_t n) const {
    check(a);
    FieldElement result = one(), base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

FieldElement Field::from_int(std::int64_t n) const {
    std::int64_t r = n % std::int64_t(p_);
    if (r < 0) r += p_;
    return {std::uint32_t(r)};
}

FieldElement Field::element(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > k_) throw ParamOutOfRange("too many coefficients for degree-" + std::to_string(k_) + " field");
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < k_; ++i) {
        const std::uint32_t c = i < coeffs.size() ? coeffs[i] : 0;
        if (c >= p_) throw ParamOutOfRange("coefficient must lie in [0, p)");
        out += c * scale;
        scale *= p_;
    }
    return {out};
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const {
    check(a);
    std::vector<std::uint32_t> c(k_);
    std::uint32_t x = a.code;
    for (std::uint32_t i = 0; i < k_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
    return out;
}

std::string Field::to_string(FieldElement a) const {
    check(a);
    if (k_ == 1) return std::to_string(a.code);
    if (a.code == 0) return "0";
    const auto c = coefficients(a);
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = k_; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string Field::to_string() const {
    if (k_ == 1) return std::to_string(p_);
    std::ostringstream os;
    os << p_ << "^" << k_ << "/";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ",";
        os << modulus_[i];
    }
    return os.str();
}

Field Field::parse(std::string_view text) {
    const auto bad = [&] { return ParamOutOfRange("invalid field spec '" + std::string(text) + "'"); };
    const auto to_u32 = [&](std::string_view s) {
        std::uint32_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw bad();
        return v;
    };

    std::string_view head = text, mod;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        head = text.substr(0, slash);
        mod = text.substr(slash + 1);
    }
    std::uint32_t p = 0, k = 1;
    if (const auto caret = head.find('^'); caret != std::string_view::npos) {
        p = to_u32(head.substr(0, caret));
        k = to_u32(head.substr(caret + 1));
    } else {
        p = to_u32(head);
    }
    if (mod.empty()) return Field(p, k);

    std::vector<std::uint32_t> coeffs;
    while (!mod.empty()) {
        const auto comma = mod.find(',');
        coeffs.push_back(to_u32(mod.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        mod.remove_prefix(comma + 1);
    }
    return Field(p, k, std::move(coeffs));
}

}  // namespace veron

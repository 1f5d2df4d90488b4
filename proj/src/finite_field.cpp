#include "tamecft/finite_field.hpp"

#include <cmath>

#include "tamecft/error.hpp"
#include "tamecft/exactnum.hpp"

namespace tamecft {

namespace {

constexpr std::uint64_t max_field_order = 1ULL << 32;
constexpr std::uint64_t brute_force_limit = 1000;

void trim(FpPoly& f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n)
{
    std::uint64_t r = 1 % n;
    a %= n;
    while (e > 0) {
        if (e & 1U) {
            r = mulmod(r, a, n);
        }
        a = mulmod(a, a, n);
        e >>= 1U;
    }
    return r;
}

std::uint64_t inverse_mod_p(std::uint64_t a, std::uint64_t p)
{
    return powmod(a, p - 2, p);
}

}  // namespace

FpPoly fp_poly_mod(FpPoly a, const FpPoly& b, std::uint64_t p)
{
    FpPoly divisor = b;
    trim(divisor);
    trim(a);
    if (divisor.empty()) {
        throw Error(ErrorKind::ZeroInput, "polynomial division by zero over F_p");
    }
    const std::size_t db = divisor.size() - 1;
    const std::uint64_t inv_lc = p == 2 ? 1 : inverse_mod_p(divisor.back(), p);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t c = mulmod(a.back(), inv_lc, p);
        for (std::size_t j = 0; j <= db; ++j) {
            a[shift + j] = (a[shift + j] + p - mulmod(c, divisor[j], p)) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible_mod_p(const FpPoly& input, std::uint64_t p)
{
    FpPoly f = input;
    for (auto& c : f) {
        c %= p;
    }
    trim(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) {
        return false;
    }
    if (n == 1) {
        return true;
    }
    for (int d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) {
            count *= p;
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            FpPoly divisor(static_cast<std::size_t>(d) + 1, 0);
            divisor[static_cast<std::size_t>(d)] = 1;
            std::uint64_t rest = idx;
            for (int i = 0; i < d; ++i) {
                divisor[static_cast<std::size_t>(i)] = rest % p;
                rest /= p;
            }
            if (fp_poly_mod(f, divisor, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

FqField::FqField(std::uint64_t p, int f, FpPoly modulus)
    : p_(p), f_(f), modulus_(std::move(modulus))
{
    q_ = 1;
    for (int i = 0; i < f; ++i) {
        q_ *= p;
    }
}

FqField FqField::make(std::int64_t p, int f)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (f < 1) {
        throw Error(ErrorKind::PreconditionViolated, "field degree must be >= 1");
    }
    const auto up = static_cast<std::uint64_t>(p);
    std::uint64_t q = 1;
    for (int i = 0; i < f; ++i) {
        if (q > max_field_order / up) {
            throw Error(ErrorKind::PreconditionViolated, "field order too large for desk-scale arithmetic");
        }
        q *= up;
    }

    // Least monic irreducible t^f + r(t), r ordered by index.
    FpPoly modulus;
    const std::uint64_t candidates = q;  // p^f choices of r
    for (std::uint64_t idx = 0; idx < candidates; ++idx) {
        FpPoly m(static_cast<std::size_t>(f) + 1, 0);
        m[static_cast<std::size_t>(f)] = 1;
        std::uint64_t rest = idx;
        for (int i = 0; i < f; ++i) {
            m[static_cast<std::size_t>(i)] = rest % up;
            rest /= up;
        }
        if (is_irreducible_mod_p(m, up)) {
            modulus = std::move(m);
            break;
        }
    }

    FqField field(up, f, std::move(modulus));
    const std::uint64_t group_order = q - 1;
    field.group_primes_ = prime_factors(group_order);
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        const FqElem candidate = field.from_index(idx);
        bool primitive = true;
        for (const auto l : field.group_primes_) {
            if (field.pow(candidate, group_order / l) == field.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            field.generator_ = candidate;
            break;
        }
    }
    field.build_baby_steps();
    return field;
}

void FqField::build_baby_steps()
{
    const std::uint64_t n = q_ - 1;
    if (q_ < brute_force_limit) {
        return;
    }
    giant_stride_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    auto table = std::make_shared<std::unordered_map<std::uint64_t, std::uint64_t>>();
    table->reserve(static_cast<std::size_t>(giant_stride_));
    FqElem x = one();
    for (std::uint64_t j = 0; j < giant_stride_; ++j) {
        table->emplace(index(x), j);
        x = mul(x, generator_);
    }
    baby_steps_ = std::move(table);
    // generator^(-stride) = generator^(n - stride mod n)
    giant_step_ = pow(generator_, (n - giant_stride_ % n) % n);
}

FqElem FqField::zero() const
{
    return FqElem{std::vector<std::uint64_t>(static_cast<std::size_t>(f_), 0)};
}

FqElem FqField::one() const
{
    return from_integer(1);
}

FqElem FqField::from_integer(std::int64_t c) const
{
    FqElem out = zero();
    out.coeffs[0] = static_cast<std::uint64_t>(mod(c, static_cast<std::int64_t>(p_)));
    return out;
}

FqElem FqField::from_index(std::uint64_t idx) const
{
    FqElem out = zero();
    for (int i = 0; i < f_; ++i) {
        out.coeffs[static_cast<std::size_t>(i)] = idx % p_;
        idx /= p_;
    }
    return out;
}

std::uint64_t FqField::index(const FqElem& x) const
{
    std::uint64_t idx = 0;
    for (int i = f_ - 1; i >= 0; --i) {
        idx = idx * p_ + x.coeffs[static_cast<std::size_t>(i)];
    }
    return idx;
}

bool FqField::is_zero(const FqElem& x) const
{
    for (const auto c : x.coeffs) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

FqElem FqField::add(const FqElem& a, const FqElem& b) const
{
    FqElem out = zero();
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
    }
    return out;
}

FqElem FqField::mul(const FqElem& a, const FqElem& b) const
{
    FpPoly product(2 * static_cast<std::size_t>(f_) - 1, 0);
    for (int i = 0; i < f_; ++i) {
        if (a.coeffs[static_cast<std::size_t>(i)] == 0) {
            continue;
        }
        for (int j = 0; j < f_; ++j) {
            auto& slot = product[static_cast<std::size_t>(i + j)];
            slot = (slot + mulmod(a.coeffs[static_cast<std::size_t>(i)], b.coeffs[static_cast<std::size_t>(j)], p_)) % p_;
        }
    }
    FpPoly reduced = fp_poly_mod(std::move(product), modulus_, p_);
    FqElem out = zero();
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        out.coeffs[i] = reduced[i];
    }
    return out;
}

FqElem FqField::pow(FqElem base, std::uint64_t exponent) const
{
    FqElem result = one();
    while (exponent > 0) {
        if (exponent & 1U) {
            result = mul(result, base);
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

std::uint64_t FqField::multiplicative_order(const FqElem& x) const
{
    if (is_zero(x)) {
        throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
    }
    std::uint64_t order = q_ - 1;
    for (const auto l : group_primes_) {
        while (order % l == 0 && pow(x, order / l) == one()) {
            order /= l;
        }
    }
    return order;
}

std::uint64_t FqField::dlog(const FqElem& x) const
{
    if (is_zero(x)) {
        throw Error(ErrorKind::ZeroElement, "discrete logarithm of zero");
    }
    const std::uint64_t n = q_ - 1;
    if (!baby_steps_) {
        FqElem power = one();
        for (std::uint64_t a = 0; a < n; ++a) {
            if (power == x) {
                return a;
            }
            power = mul(power, generator_);
        }
    } else {
        FqElem gamma = x;
        for (std::uint64_t i = 0; i <= giant_stride_; ++i) {
            const auto hit = baby_steps_->find(index(gamma));
            if (hit != baby_steps_->end()) {
                return (i * giant_stride_ + hit->second) % n;
            }
            gamma = mul(gamma, giant_step_);
        }
    }
    throw Error(ErrorKind::InternalInconsistency, "discrete logarithm not found");
}

}  // namespace tamecft

#include "tamecft/poly.hpp"

#include <cctype>
#include <sstream>

#include "tamecft/error.hpp"

namespace tamecft {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
    trim();
}

Poly Poly::constant(const Rational& c)
{
    return Poly(std::vector<Rational>{c});
}

Poly Poly::variable()
{
    return Poly(std::vector<Rational>{0, 1});
}

Poly Poly::linear(const Rational& root)
{
    return Poly(std::vector<Rational>{-root, 1});
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Poly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::derivative() const
{
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.emplace_back(coeffs_[i] * static_cast<long>(i));
    }
    return Poly(std::move(out));
}

Poly Poly::monic() const
{
    if (is_zero()) {
        throw Error(ErrorKind::ZeroInput, "zero polynomial has no monic associate");
    }
    const Rational lc = leading();
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.emplace_back(c / lc);
    }
    return Poly(std::move(out));
}

Poly Poly::reversed() const
{
    return Poly(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

Poly Poly::operator-() const
{
    std::vector<Rational> out;
    for (const auto& c : coeffs_) {
        out.emplace_back(-c);
    }
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    return *this += -o;
}

Poly& Poly::operator*=(const Poly& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

namespace {

std::string rational_string(const Rational& r)
{
    return r.get_str();
}

}  // namespace

std::string Poly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                out << '-';
            }
        } else {
            out << (negative ? '-' : '+');
        }
        first = false;
        if (i == 0) {
            out << rational_string(magnitude);
            continue;
        }
        if (magnitude != 1) {
            out << rational_string(magnitude) << '*';
        }
        out << 't';
        if (i > 1) {
            out << '^' << i;
        }
    }
    return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) {
        throw Error(ErrorKind::ZeroInput, "polynomial division by zero");
    }
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    const Rational lc = b.leading();
    if (a.degree() < db) {
        return {Poly(), a};
    }
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        const Rational c = rem[static_cast<std::size_t>(i)] / lc;
        quo[static_cast<std::size_t>(i - db)] = c;
        if (c == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly pow(const Poly& base, unsigned exponent)
{
    Poly result = Poly::constant(1);
    Poly b = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f)
{
    // Yun's algorithm (characteristic zero).
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() < 1) {
        return out;
    }
    const Poly monic_f = f.monic();
    const Poly fp = monic_f.derivative();
    Poly a = gcd(monic_f, fp);
    Poly b = divmod(monic_f, a).first;
    Poly c = divmod(fp, a).first;
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly s = gcd(b, d);
        if (s.degree() > 0) {
            out.emplace_back(s, i);
        }
        b = divmod(b, s).first;
        c = divmod(d, s).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> rows)
{
    const std::size_t n = rows.size();
    if (n == 0) {
        return 1;
    }
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (rows[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && rows[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(rows[k], rows[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = v;
            }
        }
        prev = rows[k][k];
    }
    return sign * rows[n - 1][n - 1];
}

namespace {

Integer denominator_lcm(const Poly& f)
{
    Integer l = 1;
    for (const auto& c : f.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return l;
}

std::vector<Integer> integer_coefficients(const Poly& f, const Integer& scale)
{
    std::vector<Integer> out;
    for (const auto& c : f.coefficients()) {
        Rational scaled = c * scale;
        out.push_back(scaled.get_num());
    }
    return out;
}

}  // namespace

Rational resultant(const Poly& f, const Poly& g)
{
    if (f.is_zero() || g.is_zero()) {
        throw Error(ErrorKind::ZeroInput, "resultant of the zero polynomial");
    }
    const int n = f.degree();
    const int m = g.degree();
    if (n == 0) {
        return rational_pow(f.leading(), m);
    }
    if (m == 0) {
        return rational_pow(g.leading(), n);
    }
    const Integer sf = denominator_lcm(f);
    const Integer sg = denominator_lcm(g);
    const auto fc = integer_coefficients(f, sf);
    const auto gc = integer_coefficients(g, sg);
    const std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<Integer>> sylvester(size, std::vector<Integer>(size, 0));
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) {
            sylvester[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] =
                fc[static_cast<std::size_t>(n - i)];
        }
    }
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) {
            sylvester[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + i)] =
                gc[static_cast<std::size_t>(m - i)];
        }
    }
    const Integer det = bareiss_determinant(std::move(sylvester));
    // Res(sf f, sg g) = sf^m sg^n Res(f, g)
    return Rational(det) / (rational_pow(Rational(sf), m) * rational_pow(Rational(sg), n));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse_all()
    {
        Poly result = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError,
                    what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly expr()
    {
        Poly acc;
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = text_[pos_++] == '-';
        }
        acc = term();
        if (negate) {
            acc = -acc;
        }
        while (peek() == '+' || peek() == '-') {
            const bool minus = text_[pos_++] == '-';
            Poly rhs = term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = power();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(') {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    Poly power()
    {
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected a nonnegative integer exponent");
            }
            const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (e > 64) {
                fail("exponent too large");
            }
            base = pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Integer digits()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Poly atom()
    {
        const char c = peek();
        if (c == 't') {
            ++pos_;
            return Poly::variable();
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer num = digits();
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                const Integer den = digits();
                if (den == 0) {
                    fail("zero denominator");
                }
                return Poly::constant(make_rational(num, den));
            }
            return Poly::constant(Rational(num));
        }
        if (c == '\0') {
            fail("unexpected end of input");
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

/// Splits s at top-level (depth zero) occurrences of sep.
std::vector<std::string> split_top_level(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : s) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
            if (depth < 0) {
                throw Error(ErrorKind::ParseError, "unbalanced ')' in \"" + s + "\"");
            }
        }
        if (c == sep && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (depth != 0) {
        throw Error(ErrorKind::ParseError, "unbalanced '(' in \"" + s + "\"");
    }
    parts.push_back(current);
    return parts;
}

bool has_top_level_sum(const std::string& s)
{
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        } else if (depth == 0 && (c == '+' || c == '-') && i > 0 && s[i - 1] != '^') {
            return true;
        }
    }
    return false;
}

/// True if s is a single parenthesized group "( ... )".
bool is_wrapped(const std::string& s)
{
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        return false;
    }
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
        if (depth == 0 && i + 1 < s.size()) {
            return false;
        }
    }
    return true;
}

int parse_exponent(std::string e, const std::string& whole)
{
    if (is_wrapped(e)) {
        e = e.substr(1, e.size() - 2);
    }
    std::size_t i = 0;
    if (!e.empty() && (e[0] == '-' || e[0] == '+')) {
        i = 1;
    }
    if (i == e.size() || e.size() - i > 6) {
        throw Error(ErrorKind::ParseError, "bad exponent in \"" + whole + "\"");
    }
    for (std::size_t j = i; j < e.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(e[j]))) {
            throw Error(ErrorKind::ParseError, "bad exponent in \"" + whole + "\"");
        }
    }
    return std::stoi(e);
}

}  // namespace

Poly parse_poly(std::string_view text)
{
    return PolyParser(text).parse_all();
}

std::vector<std::pair<Poly, int>> parse_product(std::string_view text)
{
    std::string s = strip(text);
    if (s.empty()) {
        throw Error(ErrorKind::ParseError, "empty expression");
    }
    std::vector<std::pair<Poly, int>> factors;
    if (has_top_level_sum(s)) {
        factors.emplace_back(parse_poly(s), 1);
        return factors;
    }
    if (s[0] == '-' || s[0] == '+') {
        if (s[0] == '-') {
            factors.emplace_back(Poly::constant(-1), 1);
        }
        s = s.substr(1);
    }
    for (const auto& piece : split_top_level(s, '*')) {
        if (piece.empty()) {
            throw Error(ErrorKind::ParseError, "empty factor in \"" + std::string(text) + "\"");
        }
        // The exponent belongs to the last top-level '^'.
        const auto parts = split_top_level(piece, '^');
        if (parts.size() == 1) {
            factors.emplace_back(parse_poly(piece), 1);
        } else if (parts.size() == 2) {
            const int e = parse_exponent(parts[1], std::string(text));
            const std::string& base = parts[0];
            const bool atomic = base == "t" || is_wrapped(base) ||
                                base.find_first_not_of("0123456789/") == std::string::npos;
            if (atomic) {
                factors.emplace_back(parse_poly(base), e);
            } else if (e >= 0) {
                // e.g. "2t^2": the exponent binds to the last atom only.
                factors.emplace_back(parse_poly(piece), 1);
            } else {
                throw Error(ErrorKind::ParseError, "negative exponent needs a parenthesized base in \"" + piece + "\"");
            }
        } else {
            throw Error(ErrorKind::ParseError, "repeated '^' in \"" + piece + "\"");
        }
    }
    return factors;
}

}  // namespace tamecft

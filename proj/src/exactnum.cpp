#include "hatgrid/exactnum.hpp"

#include <cctype>
#include <stdexcept>

namespace hatgrid {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt big(std::string_view digits)
{
    return BigInt(std::string(digits), 10);
}

// F(k)/F(k+1) -> phi, error below 1/F(k+1)^2 (about 1e-40)
const Rational& phi_estimate()
{
    static const Rational est = [] {
        BigInt a = 0, b = 1;
        for (int i = 0; i < 100; ++i) {
            BigInt c = a + b;
            a = b;
            b = c;
        }
        return Rational(a, b);
    }();
    return est;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw MalformedNumber("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw MalformedNumber("empty number");
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw MalformedNumber("malformed rational '" + std::string(text) + "'");
        out = make_rational(big(num), big(den));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw MalformedNumber("malformed decimal '" + std::string(text) + "'");
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        BigInt num = (ip.empty() ? BigInt(0) : big(ip)) * scale + (fp.empty() ? BigInt(0) : big(fp));
        out = make_rational(num, scale);
    } else {
        if (!all_digits(s)) throw MalformedNumber("malformed number '" + std::string(text) + "'");
        out = Rational(big(s));
    }
    return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

GoldenNumber GoldenNumber::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw MalformedNumber("empty golden number");
    const std::string tag = "phi";
    if (s.size() < tag.size() || s.compare(s.size() - tag.size(), tag.size(), tag) != 0) {
        if (s.find("phi") != std::string::npos) throw MalformedNumber("phi term must come last: " + s);
        return GoldenNumber(parse_rational(s));
    }
    std::string body = s.substr(0, s.size() - tag.size());
    if (!body.empty() && body.back() == '*') {
        body.pop_back();
        if (body.empty() || body.back() == '+' || body.back() == '-')
            throw MalformedNumber("missing coefficient before '*phi' in " + s);
    }
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    std::string qtext = split == std::string::npos ? "" : body.substr(0, split);
    std::string rtext = split == std::string::npos ? body : body.substr(split);
    Rational r;
    if (rtext.empty() || rtext == "+") r = 1;
    else if (rtext == "-") r = -1;
    else r = parse_rational(rtext);
    Rational q = qtext.empty() ? Rational(0) : parse_rational(qtext);
    return {q, r};
}

GoldenNumber GoldenNumber::conjugate() const
{
    return {Rational(q_ - r_), Rational(-r_)};
}

Rational GoldenNumber::norm() const
{
    return q_ * q_ - q_ * r_ - r_ * r_;
}

GoldenNumber GoldenNumber::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational n = norm();
    GoldenNumber c = conjugate();
    return {Rational(c.q_ / n), Rational(c.r_ / n)};
}

int GoldenNumber::sign() const
{
    // value = A + B sqrt5 with A = q - r/2, B = r/2
    Rational A = q_ - r_ / 2;
    int sa = sgn(A), sb = sgn(r_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // signs differ: |A| > |B| sqrt5 iff A^2 - 5B^2 = norm > 0
    return sgn(norm()) > 0 ? sa : sb;
}

bool GoldenNumber::in_integer_lattice() const
{
    return q_.get_den() == 1 && r_.get_den() == 1;
}

double GoldenNumber::to_double() const
{
    static const double phi_d = 0.61803398874989484820;
    return q_.get_d() + r_.get_d() * phi_d;
}

std::string GoldenNumber::str() const
{
    if (sgn(r_) == 0) return q_.get_str();
    std::string out;
    if (sgn(q_) != 0) out = q_.get_str();
    Rational ar = abs(r_);
    if (sgn(r_) < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (ar != 1) out += ar.get_str() + "*";
    return out + "phi";
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o)
{
    q_ += o.q_;
    r_ += o.r_;
    return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o)
{
    q_ -= o.q_;
    r_ -= o.r_;
    return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o)
{
    Rational rr = r_ * o.r_;
    Rational q = q_ * o.q_ + rr;
    Rational r = q_ * o.r_ + o.q_ * r_ - rr;
    q_.swap(q);
    r_.swap(r);
    return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& o)
{
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GoldenNumber& a, const GoldenNumber& b)
{
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Order compare(const GoldenNumber& x, const GoldenNumber& y)
{
    int s = (x - y).sign();
    return s < 0 ? Order::less : s > 0 ? Order::greater : Order::equal;
}

BigInt floor(const GoldenNumber& x)
{
    Rational approx = x.rational_part() + x.phi_part() * phi_estimate();
    BigInt cand;
    mpz_fdiv_q(cand.get_mpz_t(), approx.get_num_mpz_t(), approx.get_den_mpz_t());
    // the estimate is off by far less than one unit; settle the last step exactly
    while (compare(GoldenNumber(Rational(cand)), x) == Order::greater) cand -= 1;
    while (compare(GoldenNumber(Rational(cand + 1)), x) != Order::greater) cand += 1;
    return cand;
}

std::int64_t floor_i64(const GoldenNumber& x)
{
    BigInt f = floor(x);
    if (!f.fits_slong_p()) throw std::overflow_error("floor out of 64-bit range");
    return f.get_si();
}

GoldenNumber pow(const GoldenNumber& x, int e)
{
    GoldenNumber base = e < 0 ? x.inverse() : x;
    unsigned n = e < 0 ? -static_cast<unsigned>(e) : static_cast<unsigned>(e);
    GoldenNumber out(1);
    while (n) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

}  // namespace hatgrid

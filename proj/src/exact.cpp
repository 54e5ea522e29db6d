#include "reeb/exact.hpp"

#include <ostream>

namespace reeb {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view digits) {
        std::string s(digits);
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        if (s[0] == '+') s.erase(0, 1);
        return Integer(s, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_rational(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

PerturbedRational::PerturbedRational(Rational base, Rational eps)
    : base_(std::move(base)), eps_(std::move(eps)) {
    base_.canonicalize();
    eps_.canonicalize();
}

PerturbedRational::PerturbedRational(Rational base, Rational eps, bool truncated)
    : PerturbedRational(std::move(base), std::move(eps)) {
    truncated_ = truncated;
}

int PerturbedRational::sign() const {
    int s = sgn(base_);
    if (s != 0) return s;
    s = sgn(eps_);
    if (s == 0 && truncated_) throw SecondOrderAmbiguity("sign of a truncated quantity vanishes at first order");
    return s;
}

PerturbedRational PerturbedRational::operator-() const { return {-base_, -eps_, truncated_}; }

PerturbedRational& PerturbedRational::operator+=(const PerturbedRational& rhs) {
    base_ += rhs.base_;
    eps_ += rhs.eps_;
    truncated_ = truncated_ || rhs.truncated_;
    return *this;
}

PerturbedRational& PerturbedRational::operator-=(const PerturbedRational& rhs) {
    base_ -= rhs.base_;
    eps_ -= rhs.eps_;
    truncated_ = truncated_ || rhs.truncated_;
    return *this;
}

PerturbedRational& PerturbedRational::operator*=(const Rational& rhs) {
    base_ *= rhs;
    eps_ *= rhs;
    if (rhs == 0) truncated_ = false;
    return *this;
}

PerturbedRational operator*(const PerturbedRational& lhs, const PerturbedRational& rhs) {
    Rational base = lhs.base_ * rhs.base_;
    Rational eps = lhs.base_ * rhs.eps_ + lhs.eps_ * rhs.base_;
    bool dropped = lhs.carries_eps() && rhs.carries_eps();
    return {std::move(base), std::move(eps), lhs.truncated_ || rhs.truncated_ || dropped};
}

std::strong_ordering operator<=>(const PerturbedRational& lhs, const PerturbedRational& rhs) {
    if (auto c = cmp(lhs.base_, rhs.base_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = cmp(lhs.eps_, rhs.eps_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (lhs.truncated_ || rhs.truncated_) {
        throw SecondOrderAmbiguity("comparison ties at first order: " + to_string(lhs) + " vs " + to_string(rhs));
    }
    return std::strong_ordering::equal;
}

bool operator==(const PerturbedRational& lhs, const PerturbedRational& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
}

Integer floor_perturbed(const PerturbedRational& x) {
    if (!is_integral(x.base())) return floor_rational(x.base());
    int s = sgn(x.eps());
    if (s > 0) return x.base().get_num();
    if (s < 0) return x.base().get_num() - 1;
    if (x.truncated()) throw SecondOrderAmbiguity("floor of " + to_string(x) + " needs the second-order term");
    throw DegenerateTie("floor of the exact integer " + x.base().get_num().get_str());
}

PerturbedRational divide(const PerturbedRational& n, const PerturbedRational& d) {
    if (sgn(d.base()) <= 0) throw std::invalid_argument("divide: divisor must have positive base, got " + to_string(d));
    Rational base = n.base() / d.base();
    Rational eps = (n.eps() * d.base() - n.base() * d.eps()) / (d.base() * d.base());
    // When the first-order coefficient vanishes the quotient is exactly the
    // rational base, so nothing is lost.
    bool dropped = d.carries_eps() && sgn(eps) != 0;
    return {std::move(base), std::move(eps), n.truncated() || d.truncated() || dropped};
}

std::string to_string(const PerturbedRational& x) {
    std::string out = x.base().get_str();
    if (x.carries_eps()) {
        if (sgn(x.eps()) > 0) out += "+";
        out += x.eps().get_str() + "ε";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PerturbedRational& x) { return os << to_string(x); }

}  // namespace reeb

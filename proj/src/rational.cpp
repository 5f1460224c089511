// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/rational.hpp"

#include <cctype>
#include <ostream>
#include <vector>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(long n, long d) {
    if (d == 0) throw InvalidInput("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw InvalidInput("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_text(num)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(parse_integer(num));
    const auto den = text.substr(slash + 1);
    if (!is_integer_text(den) || den.front() == '-')
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    return Rational(parse_integer(num), parse_integer(den));
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::inverse() const {
    if (is_zero()) throw InvalidInput("division by zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::decimal(int significant_digits) const {
    mpf_class f(v_, 256);
    std::vector<char> buf(64 + significant_digits);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
    return buf.data();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

const char* to_string(MathSignal::Kind kind) {
    switch (kind) {
        case MathSignal::Kind::NotLogCanonical: return "not_lc";
        case MathSignal::Kind::NotBig: return "not_big";
        case MathSignal::Kind::NoConfigZariski: return "no_configuration_zariski";
        case MathSignal::Kind::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

}  // namespace logsurf

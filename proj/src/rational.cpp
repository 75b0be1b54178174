#include "udvg/rational.hpp"

#include <cctype>

namespace udvg {

std::optional<Rational> Rational::try_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds)) return std::nullopt;
        mpz_class n(ns), d(ds);
        if (d == 0) return std::nullopt;
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty() && fp.empty()) return std::nullopt;
        if (ip.empty()) ip = "0";
        for (char c : ip)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpz_class n = mpz_class(ip) * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp));
        if (neg) n = -n;
        mpq_class q(n, scale);
        q.canonicalize();
        return Rational(q);
    }

    if (!is_int(s)) return std::nullopt;
    return Rational(mpq_class(mpz_class(s)));
}

Rational Rational::parse(const std::string& s) {
    auto r = try_parse(s);
    if (!r) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    return *r;
}

}  // namespace udvg

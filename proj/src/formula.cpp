#include "udvg/formula.hpp"

#include <sstream>
#include <stdexcept>

namespace udvg {

void Formula::validate() const {
    for (const auto& c : clauses)
        for (auto v : c)
            if (v >= num_vars) throw std::invalid_argument("clause variable out of range");
}

Formula parse_formula(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Formula f;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "nae3sat" || n < 0 || m < 0)
                throw std::invalid_argument("bad header; expected 'p nae3sat <n> <m>'");
            f.num_vars = static_cast<std::size_t>(n);
        } else {
            if (n < 0) throw std::invalid_argument("clause before header");
            std::istringstream cs(line);
            long long a, b, c3;
            if (!(cs >> a >> b >> c3)) throw std::invalid_argument("bad clause line: " + line);
            std::string extra;
            if (cs >> extra) throw std::invalid_argument("clause must have exactly 3 literals");
            for (long long v : {a, b, c3})
                if (v < 1 || v > n)
                    throw std::invalid_argument("variable out of range: " + line);
            f.clauses.push_back({static_cast<std::uint32_t>(a - 1),
                                 static_cast<std::uint32_t>(b - 1),
                                 static_cast<std::uint32_t>(c3 - 1)});
        }
    }
    if (n < 0) throw std::invalid_argument("missing 'p nae3sat' header");
    if (static_cast<long long>(f.clauses.size()) != m)
        throw std::invalid_argument("clause count does not match header");
    return f;
}

std::string formula_to_text(const Formula& f) {
    std::ostringstream out;
    out << "p nae3sat " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses)
        out << (c[0] + 1) << ' ' << (c[1] + 1) << ' ' << (c[2] + 1) << '\n';
    return out.str();
}

bool nae_satisfies(const Formula& f, const Assignment& a) {
    if (a.size() != f.num_vars) return false;
    for (const auto& c : f.clauses) {
        const bool x = a[c[0]], y = a[c[1]], z = a[c[2]];
        if (x == y && y == z) return false;
    }
    return true;
}

std::optional<Assignment> nae3sat_oracle(const Formula& f) {
    f.validate();
    if (f.num_vars > 24) throw std::invalid_argument("too many variables to enumerate");
    const std::uint32_t limit = 1u << f.num_vars;
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        Assignment a(f.num_vars);
        for (std::size_t i = 0; i < f.num_vars; ++i) a[i] = (bits >> i) & 1u;
        if (nae_satisfies(f, a)) return a;
    }
    return std::nullopt;
}

}  // namespace udvg

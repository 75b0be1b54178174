#pragma once

// Monotone NAE3SAT formulas: no negations; a clause is satisfied when its
// three variables are not all equal.  Text format is DIMACS-like:
//   p nae3sat <n> <m>
//   <v1> <v2> <v3>        (1-based variable indices, one clause per line)

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace udvg {

struct Formula {
    std::size_t num_vars = 0;
    std::vector<std::array<std::uint32_t, 3>> clauses;  // 0-based indices

    void validate() const;  // throws std::invalid_argument
};

Formula parse_formula(const std::string& text);
std::string formula_to_text(const Formula& f);

using Assignment = std::vector<bool>;

bool nae_satisfies(const Formula& f, const Assignment& a);

// Brute force over all 2^n assignments; n ≤ 24.
std::optional<Assignment> nae3sat_oracle(const Formula& f);

}  // namespace udvg

#pragma once

// Brute-force reference implementations by codeword enumeration.

#include <cstdint>
#include <optional>

#include "mtc/lincode.hpp"

namespace mtc::oracle {

inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 20;

/// Sorted, duplicate-free list of length-n vectors.
struct CodewordSet {
    Field field;
    std::size_t length = 0;
    std::vector<Vec> words;

    bool contains(const Vec& v) const;
    std::size_t size() const { return words.size(); }
    friend bool operator==(const CodewordSet& a, const CodewordSet& b) {
        return a.field == b.field && a.length == b.length && a.words == b.words;
    }
};

/// All a * G. Throws BudgetExceeded when q^k > budget.
CodewordSet enumerate(const LinearCode& c, std::uint64_t budget = kDefaultEnumBudget);
/// All of F_q^n.
CodewordSet enumerate_space(const Field& f, std::size_t n, std::uint64_t budget = kDefaultEnumBudget);
CodewordSet intersect_enum(const CodewordSet& a, const CodewordSet& b);
/// Every v in F_q^n with <c, v>_kappa = 0 for all c in C, by scanning F_q^n.
CodewordSet dual_enum(const LinearCode& c, unsigned kappa, std::uint64_t budget = kDefaultEnumBudget);
/// Image of every word under `map`, sorted.
CodewordSet map_words(const CodewordSet& s, Vec (*map)(const Vec&));

/// T_Lambda: each block (c_0..c_{m-1}) -> (lambda c_{m-1}, c_0, ..., c_{m-2}).
Vec twisted_shift(const Field& f, const Vec& v, const std::vector<Elem>& shifts, const std::vector<std::size_t>& blocks);
bool invariant_under(const CodewordSet& s, const std::vector<Elem>& shifts, const std::vector<std::size_t>& blocks);

/// RREF of the span of the words (the set is assumed linear).
Matrix span_rref(const CodewordSet& s);
LinearCode as_code(const CodewordSet& s);
/// Least nonzero weight; nullopt when the set has no nonzero word.
std::optional<std::size_t> min_weight(const CodewordSet& s);
/// Closed under addition and scalar multiples, checked on up to `samples` pairs.
bool looks_linear(const CodewordSet& s, std::size_t samples = 200);

}  // namespace mtc::oracle

#pragma once

#include "qpc/cyc.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpc::rewrite {

/// Linear combination of words over a small generator alphabet (letters are chars).
using WordElt = std::map<std::string, CycNum>;

enum class Strategy { Leftmost, Rightmost };

/// A string rewriting system acting linearly: each rule replaces one factor
/// lhs by a linear combination of words.
struct System {
    struct Rule {
        std::string lhs;
        std::vector<std::pair<std::string, CycNum>> rhs;
    };
    std::vector<Rule> rules;

    /// Reduces to normal form, picking the leftmost/rightmost match of the
    /// first applicable rule at each step. Throws std::runtime_error when the
    /// step bound is exceeded (implementation bug, not a runtime condition).
    WordElt reduce(const WordElt& input, Strategy strategy = Strategy::Leftmost) const;
    WordElt reduce_word(const std::string& word, Strategy strategy = Strategy::Leftmost) const;
};

WordElt word_add(const WordElt& a, const WordElt& b);
WordElt word_scaled(const WordElt& a, const CycNum& s);
/// Concatenation product extended bilinearly.
WordElt word_mul(const WordElt& a, const WordElt& b);

} // namespace qpc::rewrite

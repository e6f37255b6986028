#include "qpc/rewrite.hpp"

#include <stdexcept>

namespace qpc::rewrite {

namespace {

void add_term(WordElt& e, const std::string& w, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = e.find(w);
    if (it == e.end()) {
        e.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

} // namespace

WordElt System::reduce(const WordElt& input, Strategy strategy) const {
    WordElt work = input;
    // Generous bound: every rewrite step strictly decreases a terminating
    // order for the systems used here; runaway growth means a bad rule set.
    const size_t max_steps = 2'000'000;
    size_t steps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        WordElt next;
        for (const auto& [word, coeff] : work) {
            size_t best_pos = std::string::npos;
            const Rule* best_rule = nullptr;
            for (const auto& rule : rules) {
                size_t pos = (strategy == Strategy::Leftmost)
                                 ? word.find(rule.lhs)
                                 : word.rfind(rule.lhs);
                if (pos == std::string::npos) continue;
                bool better = best_pos == std::string::npos ||
                              (strategy == Strategy::Leftmost ? pos < best_pos : pos > best_pos);
                if (better) {
                    best_pos = pos;
                    best_rule = &rule;
                }
            }
            if (!best_rule) {
                add_term(next, word, coeff);
                continue;
            }
            changed = true;
            if (++steps > max_steps)
                throw std::runtime_error("rewrite::System: step bound exceeded");
            std::string prefix = word.substr(0, best_pos);
            std::string suffix = word.substr(best_pos + best_rule->lhs.size());
            for (const auto& [repl, rc] : best_rule->rhs)
                add_term(next, prefix + repl + suffix, coeff * rc);
        }
        work = std::move(next);
    }
    return work;
}

WordElt System::reduce_word(const std::string& word, Strategy strategy) const {
    WordElt e;
    e.emplace(word, CycNum::one());
    return reduce(e, strategy);
}

WordElt word_add(const WordElt& a, const WordElt& b) {
    WordElt out = a;
    for (const auto& [w, c] : b) add_term(out, w, c);
    return out;
}

WordElt word_scaled(const WordElt& a, const CycNum& s) {
    WordElt out;
    for (const auto& [w, c] : a) add_term(out, w, c * s);
    return out;
}

WordElt word_mul(const WordElt& a, const WordElt& b) {
    WordElt out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) add_term(out, wa + wb, ca * cb);
    return out;
}

} // namespace qpc::rewrite

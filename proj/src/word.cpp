#include "fractop/word.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "fractop/errors.hpp"

namespace fractop {

Word::Word(std::vector<int> symbols, int alphabet) : syms_(std::move(symbols)), m_(alphabet) {
    if (m_ < 1) throw BadSymbol("alphabet must have at least one symbol");
    for (int s : syms_) {
        if (s < 1 || s > m_) throw BadSymbol("symbol " + std::to_string(s) + " outside 1.." + std::to_string(m_));
    }
}

Word Word::parse(const std::string& text, int alphabet) {
    std::vector<int> syms;
    syms.reserve(text.size());
    for (char ch : text) {
        if (ch < '1' || ch > '9') throw BadSymbol(std::string("bad symbol character '") + ch + "'");
        syms.push_back(ch - '0');
    }
    return Word(std::move(syms), alphabet);
}

Word Word::prepended(int symbol) const {
    std::vector<int> s;
    s.reserve(syms_.size() + 1);
    s.push_back(symbol);
    s.insert(s.end(), syms_.begin(), syms_.end());
    return Word(std::move(s), m_);
}

Word Word::appended(int symbol) const {
    std::vector<int> s = syms_;
    s.push_back(symbol);
    return Word(std::move(s), m_);
}

Word Word::dropped_front() const {
    return Word(std::vector<int>(syms_.begin() + (syms_.empty() ? 0 : 1), syms_.end()), m_);
}

Word Word::dropped_back() const {
    std::vector<int> s = syms_;
    if (!s.empty()) s.pop_back();
    return Word(std::move(s), m_);
}

Word Word::reversed() const {
    std::vector<int> s(syms_.rbegin(), syms_.rend());
    return Word(std::move(s), m_);
}

Word Word::prefix(int n) const {
    n = std::min<int>(n, size());
    return Word(std::vector<int>(syms_.begin(), syms_.begin() + n), m_);
}

Word Word::concat(const Word& tail) const {
    std::vector<int> s = syms_;
    s.insert(s.end(), tail.syms_.begin(), tail.syms_.end());
    return Word(std::move(s), m_);
}

std::string Word::str() const {
    if (syms_.empty()) return "-";
    std::string out;
    out.reserve(syms_.size());
    for (int s : syms_) out.push_back(static_cast<char>('0' + s));
    return out;
}

PriorityOrder::PriorityOrder(std::vector<int> highest_first) : order_(std::move(highest_first)) {
    const int m = static_cast<int>(order_.size());
    std::set<int> seen(order_.begin(), order_.end());
    if (static_cast<int>(seen.size()) != m || *seen.begin() != 1 || *seen.rbegin() != m)
        throw BadSymbol("priority order must be a permutation of 1..m");
    rank_.assign(static_cast<size_t>(m) + 1, 0);
    for (int r = 0; r < m; ++r) rank_[static_cast<size_t>(order_[static_cast<size_t>(r)])] = r;
}

PriorityOrder PriorityOrder::standard(int m) {
    std::vector<int> o(static_cast<size_t>(m));
    std::iota(o.begin(), o.end(), 1);
    return PriorityOrder(std::move(o));
}

PriorityOrder PriorityOrder::reversed(int m) {
    std::vector<int> o(static_cast<size_t>(m));
    std::iota(o.rbegin(), o.rend(), 1);
    return PriorityOrder(std::move(o));
}

std::string PriorityOrder::str() const {
    std::string out;
    for (size_t i = 0; i < order_.size(); ++i) {
        if (i) out.push_back('>');
        out.push_back(static_cast<char>('0' + order_[i]));
    }
    return out;
}

InfiniteAddress::InfiniteAddress(Word preperiod, Word period) : pre_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw BadSymbol("period must be nonempty");
    if (pre_.alphabet() != 0 && pre_.alphabet() != period_.alphabet())
        throw BadSymbol("preperiod and period use different alphabets");
    if (pre_.alphabet() == 0) pre_ = Word({}, period_.alphabet());
    canonicalize();
}

InfiniteAddress InfiniteAddress::parse(const std::string& text, int alphabet) {
    const auto open = text.find('(');
    const auto close = text.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open || close + 1 != text.size())
        throw BadSymbol("address must look like \"12(21)\"");
    Word pre = Word::parse(text.substr(0, open), alphabet);
    Word per = Word::parse(text.substr(open + 1, close - open - 1), alphabet);
    return InfiniteAddress(std::move(pre), std::move(per));
}

InfiniteAddress InfiniteAddress::constant(int symbol, int alphabet) {
    return InfiniteAddress(Word({}, alphabet), Word({symbol}, alphabet));
}

void InfiniteAddress::canonicalize() {
    // Minimal period.
    const int plen = period_.size();
    for (int cand = 1; cand < plen; ++cand) {
        if (plen % cand != 0) continue;
        bool ok = true;
        for (int i = cand; i < plen && ok; ++i) ok = period_.at(i) == period_.at(i % cand);
        if (ok) {
            period_ = period_.prefix(cand);
            break;
        }
    }
    // Absorb the preperiod tail: u s (w1..wk-1 s)~ = u (s w1..wk-1)~.
    while (!pre_.empty() && pre_.at(pre_.size() - 1) == period_.at(period_.size() - 1)) {
        pre_ = pre_.dropped_back();
        std::vector<int> rotated;
        rotated.reserve(static_cast<size_t>(period_.size()));
        rotated.push_back(period_.at(period_.size() - 1));
        for (int i = 0; i + 1 < period_.size(); ++i) rotated.push_back(period_.at(i));
        period_ = Word(std::move(rotated), period_.alphabet());
    }
}

int InfiniteAddress::symbol_at(int i) const {
    if (i < pre_.size()) return pre_.at(i);
    return period_.at((i - pre_.size()) % period_.size());
}

Word InfiniteAddress::prefix(int n) const {
    std::vector<int> s;
    s.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s.push_back(symbol_at(i));
    return Word(std::move(s), alphabet());
}

InfiniteAddress InfiniteAddress::shifted() const {
    if (!pre_.empty()) return InfiniteAddress(pre_.dropped_front(), period_);
    std::vector<int> rotated;
    rotated.reserve(static_cast<size_t>(period_.size()));
    for (int i = 1; i < period_.size(); ++i) rotated.push_back(period_.at(i));
    rotated.push_back(period_.at(0));
    return InfiniteAddress(Word({}, alphabet()), Word(std::move(rotated), alphabet()));
}

InfiniteAddress InfiniteAddress::prepended(int symbol) const {
    return InfiniteAddress(pre_.prepended(symbol), period_);
}

std::string InfiniteAddress::str() const {
    std::string out;
    if (!pre_.empty()) out = pre_.str();
    out.push_back('(');
    out += period_.str();
    out.push_back(')');
    return out;
}

Ordering lex_compare(const Word& a, const Word& b, const PriorityOrder& order) {
    const int n = std::min(a.size(), b.size());
    for (int i = 0; i < n; ++i) {
        const int ra = order.rank(a.at(i));
        const int rb = order.rank(b.at(i));
        if (ra != rb) return ra < rb ? Ordering::GT : Ordering::LT;
    }
    if (a.size() == b.size()) return Ordering::EQ;
    return a.size() < b.size() ? Ordering::LT : Ordering::GT;
}

int compare_horizon(const InfiniteAddress& a, const InfiniteAddress& b) {
    const int pa = a.preperiod().size(), pb = b.preperiod().size();
    const long long l = std::lcm<long long>(a.period().size(), b.period().size());
    return std::max(pa, pb) + static_cast<int>(2 * l);
}

Ordering lex_compare(const InfiniteAddress& a, const InfiniteAddress& b, const PriorityOrder& order) {
    const int horizon = compare_horizon(a, b);
    for (int i = 0; i < horizon; ++i) {
        const int ra = order.rank(a.symbol_at(i));
        const int rb = order.rank(b.symbol_at(i));
        if (ra != rb) return ra < rb ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

Word reverse_prefix(const InfiniteAddress& a, int n) {
    return a.prefix(n).reversed();
}

bool is_disjunctive_up_to(const InfiniteAddress& a, int k, int horizon) {
    const int m = a.alphabet();
    for (int len = 1; len <= k; ++len) {
        std::set<std::vector<int>> seen;
        for (int start = 0; start + len <= horizon; ++start) {
            std::vector<int> factor(static_cast<size_t>(len));
            for (int i = 0; i < len; ++i) factor[static_cast<size_t>(i)] = a.symbol_at(start + i);
            seen.insert(std::move(factor));
        }
        uint64_t want = 1;
        for (int i = 0; i < len; ++i) want *= static_cast<uint64_t>(m);
        if (seen.size() != want) return false;
    }
    return true;
}

void check_depth_guard(int alphabet, int depth) {
    if (depth < 0) throw DepthTooLarge("negative depth");
    double bits = depth * std::log2(static_cast<double>(alphabet));
    if (bits > 24.0) throw DepthTooLarge("depth " + std::to_string(depth) + " needs more than 24 bits");
}

uint64_t word_count(int alphabet, int depth) {
    uint64_t n = 1;
    for (int i = 0; i < depth; ++i) n *= static_cast<uint64_t>(alphabet);
    return n;
}

uint32_t pack_word(const Word& w, const PriorityOrder& order) {
    check_depth_guard(w.alphabet(), w.size());
    const uint32_t m = static_cast<uint32_t>(w.alphabet());
    uint32_t key = 0;
    for (int i = 0; i < w.size(); ++i) {
        const uint32_t digit = m - 1 - static_cast<uint32_t>(order.rank(w.at(i)));
        key = key * m + digit;
    }
    return key;
}

Word unpack_word(uint32_t key, int length, const PriorityOrder& order) {
    const int m = order.alphabet();
    std::vector<int> syms(static_cast<size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        const uint32_t digit = key % static_cast<uint32_t>(m);
        key /= static_cast<uint32_t>(m);
        syms[static_cast<size_t>(i)] = order.symbol_at_rank(m - 1 - static_cast<int>(digit));
    }
    return Word(std::move(syms), m);
}

}  // namespace fractop

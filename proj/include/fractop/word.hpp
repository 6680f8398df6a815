#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fractop {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

// Finite word over the alphabet {1..m}. The empty word is allowed.
class Word {
  public:
    Word() = default;
    Word(std::vector<int> symbols, int alphabet);

    static Word parse(const std::string& text, int alphabet);

    int alphabet() const { return m_; }
    int size() const { return static_cast<int>(syms_.size()); }
    bool empty() const { return syms_.empty(); }
    int at(int i) const { return syms_[static_cast<size_t>(i)]; }
    const std::vector<int>& symbols() const { return syms_; }

    Word prepended(int symbol) const;
    Word appended(int symbol) const;
    Word dropped_front() const;  // i2..in
    Word dropped_back() const;   // i1..i(n-1)
    Word reversed() const;
    Word prefix(int n) const;
    Word concat(const Word& tail) const;

    std::string str() const;

    bool operator==(const Word&) const = default;
    // Plain container order, independent of any priority order; used for map keys.
    bool operator<(const Word& o) const { return syms_ < o.syms_; }

  private:
    std::vector<int> syms_;
    int m_ = 0;
};

// Permutation of {1..m}, listed from highest priority to lowest.
class PriorityOrder {
  public:
    PriorityOrder() = default;
    explicit PriorityOrder(std::vector<int> highest_first);

    static PriorityOrder standard(int m);  // 1 highest, then 2, ...
    static PriorityOrder reversed(int m);  // m highest, ..., 1 lowest

    int alphabet() const { return static_cast<int>(order_.size()); }
    // 0 = highest priority.
    int rank(int symbol) const { return rank_[static_cast<size_t>(symbol)]; }
    int symbol_at_rank(int r) const { return order_[static_cast<size_t>(r)]; }
    const std::vector<int>& highest_first() const { return order_; }

    std::string str() const;

  private:
    std::vector<int> order_;
    std::vector<int> rank_;
};

// Eventually periodic infinite word, kept in canonical form: the period is
// minimal and as much of the preperiod as possible has been absorbed into it.
class InfiniteAddress {
  public:
    InfiniteAddress() = default;
    InfiniteAddress(Word preperiod, Word period);

    // "12(21)" = preperiod 12, period 21; "(1)" = 111...
    static InfiniteAddress parse(const std::string& text, int alphabet);
    static InfiniteAddress constant(int symbol, int alphabet);

    int alphabet() const { return period_.alphabet(); }
    const Word& preperiod() const { return pre_; }
    const Word& period() const { return period_; }

    int symbol_at(int i) const;
    Word prefix(int n) const;
    InfiniteAddress shifted() const;
    InfiniteAddress prepended(int symbol) const;

    std::string str() const;

    bool operator==(const InfiniteAddress&) const = default;

  private:
    void canonicalize();

    Word pre_;
    Word period_;
};

Ordering lex_compare(const Word& a, const Word& b, const PriorityOrder& order);
Ordering lex_compare(const InfiniteAddress& a, const InfiniteAddress& b, const PriorityOrder& order);

// i_n i_{n-1} ... i_1 for the first n symbols of `a`.
Word reverse_prefix(const InfiniteAddress& a, int n);

// True iff every word of length <= k occurs as a factor within the first
// `horizon` symbols. A semi-decision in general; for an eventually periodic
// address, horizon >= preperiod + period + k decides membership exactly.
bool is_disjunctive_up_to(const InfiniteAddress& a, int k, int horizon);

// Number of symbols after which two eventually periodic addresses are provably equal.
int compare_horizon(const InfiniteAddress& a, const InfiniteAddress& b);

// Packs equal-length words so that numeric key order equals priority order
// (higher key = higher priority word). Keys fit 24 bits; guarded by DepthTooLarge.
uint32_t pack_word(const Word& w, const PriorityOrder& order);
Word unpack_word(uint32_t key, int length, const PriorityOrder& order);
void check_depth_guard(int alphabet, int depth);
uint64_t word_count(int alphabet, int depth);

}  // namespace fractop

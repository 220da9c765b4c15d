#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace imh {

/// Dynamically sized bitset with word-level set operations, used as the
/// adjacency row and candidate-set type in the exact solvers.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const { return bits_; }
    std::size_t num_words() const { return words_.size(); }

    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

    void set_all() {
        std::fill(words_.begin(), words_.end(), ~Word{0});
        trim();
    }
    void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }
    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (Word w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Lowest set bit index, or size() when empty.
    std::size_t first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return bits_;
    }

    /// Next set bit strictly after i, or size() when none.
    std::size_t next(std::size_t i) const {
        ++i;
        if (i >= bits_)
            return bits_;
        std::size_t w = i / kWordBits;
        Word cur = words_[w] & (~Word{0} << (i % kWordBits));
        while (true) {
            if (cur)
                return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w == words_.size())
                return bits_;
            cur = words_[w];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }
    std::size_t intersection_count(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
        return c;
    }

    void flip_all() {
        for (Word& w : words_)
            w = ~w;
        trim();
    }

    Word word(std::size_t w) const { return words_[w]; }
    Word& word(std::size_t w) { return words_[w]; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word cur = words_[w];
            while (cur) {
                f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

private:
    void trim() {
        if (bits_ % kWordBits && !words_.empty())
            words_.back() &= (Word{1} << (bits_ % kWordBits)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<Word> words_;
};

}  // namespace imh

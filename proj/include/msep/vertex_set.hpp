#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace msep {

/// Subset of {0, ..., universe-1}, packed into 64-bit words.
///
/// Every set is bound to a fixed universe size at construction; binary
/// operations require both operands to share it. Ordering (`operator<`)
/// is lexicographic over the ascending member sequences, which is the
/// canonical order used for all separator listings.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    int size() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool contains(int v) const {
        check_bounds(v);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        check_bounds(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_bounds(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    /// Smallest member, or -1 when empty.
    int lowest() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s = full(universe_);
        s -= *this;
        return s;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                fn(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    // Lexicographic over ascending member sequences: {0,5} < {1,2}, {1} < {1,2}.
    bool operator<(const VertexSet& o) const {
        std::size_t nw = std::max(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < nw; ++i) {
            std::uint64_t a = i < words_.size() ? words_[i] : 0;
            std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
            std::uint64_t d = a ^ b;
            if (!d) continue;
            std::uint64_t low = d & (~d + 1);
            // The set holding the first differing member continues with a
            // smaller element -- unless the other set has nothing beyond it,
            // in which case the other set is a proper prefix.
            if (a & low) return o.any_member_above(i, low);
            return !any_member_above(i, low);
        }
        return false;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        });
        out += "}";
        return out;
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;

    void check_bounds(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside universe of size " + std::to_string(universe_));
    }

    void check_universe(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::invalid_argument("VertexSet: universe mismatch (" +
                                        std::to_string(universe_) + " vs " +
                                        std::to_string(o.universe_) + ")");
    }

    void trim() {
        int rem = universe_ & 63;
        if (rem && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    bool any_member_above(std::size_t word, std::uint64_t lowbit) const {
        if (word >= words_.size()) return false;
        std::uint64_t above = ~(lowbit | (lowbit - 1));
        if (words_[word] & above) return true;
        for (std::size_t i = word + 1; i < words_.size(); ++i)
            if (words_[i]) return true;
        return false;
    }
};

}  // namespace msep

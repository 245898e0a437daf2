#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "amalgam/types.hpp"

namespace amalgam {

/// Fixed-universe bitset over the element indices of one ring.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Element x) const noexcept {
        return (words_[x >> 6] >> (x & 63)) & 1u;
    }
    void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    void erase(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

    void fill() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    ElementSet& operator&=(const ElementSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    ElementSet& operator|=(const ElementSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool subset_of(const ElementSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<Element> members() const {
        std::vector<Element> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::uint64_t hash() const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    void trim() noexcept {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept {
        return static_cast<std::size_t>(s.hash());
    }
};

}  // namespace amalgam

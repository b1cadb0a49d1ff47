#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folx/error.hpp"

namespace folx {

// A universe element, always a canonical id in 0..n-1.
using Element = uint32_t;

// A tuple index: either a variable name or a natural-number position.
// Within one index set the two kinds never mix.
class Index {
public:
    static Index name(std::string n) {
        Index i;
        i.named_ = true;
        i.name_ = std::move(n);
        return i;
    }
    static Index position(uint32_t p) {
        Index i;
        i.pos_ = p;
        return i;
    }

    bool isName() const { return named_; }
    bool isPosition() const { return !named_; }
    const std::string& nameStr() const { return name_; }
    uint32_t positionValue() const { return pos_; }

    std::string display() const { return named_ ? name_ : std::to_string(pos_); }

    friend bool operator==(const Index& a, const Index& b) {
        return a.named_ == b.named_ && a.pos_ == b.pos_ && a.name_ == b.name_;
    }
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
        if (a.named_ != b.named_)
            return a.named_ ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.named_)
            return a.name_ <=> b.name_;
        return a.pos_ <=> b.pos_;
    }

private:
    std::string name_;
    uint32_t pos_ = 0;
    bool named_ = false;
};

// A finite set of indices in canonical sorted order.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<Index> indices);

    static IndexSet positions(uint32_t n);
    static IndexSet names(std::span<const std::string> names);
    static IndexSet names(std::initializer_list<std::string> names);

    size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    const Index& at(size_t slot) const { return indices_[slot]; }

    bool contains(const Index& i) const;
    // Slot of `i` in canonical order, or nullopt.
    std::optional<size_t> slotOf(const Index& i) const;
    // Same for a name index, without constructing an Index.
    std::optional<size_t> slotOfName(const std::string& name) const;

    bool subsetOf(const IndexSet& other) const;
    bool disjointWith(const IndexSet& other) const;
    IndexSet unionWith(const IndexSet& other) const;
    IndexSet intersect(const IndexSet& other) const;
    IndexSet minus(const IndexSet& other) const;

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

    std::string display() const;

private:
    std::vector<Index> indices_; // sorted, unique, one kind only
};

} // namespace folx

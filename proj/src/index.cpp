#include "folx/index.hpp"

#include <algorithm>

namespace folx {

IndexSet::IndexSet(std::vector<Index> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.front().isPosition() != indices_.back().isPosition())
        raise(ErrorCode::MixedIndexKinds,
              "index set mixes variable names and positions: " + display());
}

IndexSet IndexSet::positions(uint32_t n) {
    std::vector<Index> v;
    v.reserve(n);
    for (uint32_t i = 0; i < n; ++i)
        v.push_back(Index::position(i));
    return IndexSet(std::move(v));
}

IndexSet IndexSet::names(std::span<const std::string> names) {
    std::vector<Index> v;
    v.reserve(names.size());
    for (const auto& n : names)
        v.push_back(Index::name(n));
    return IndexSet(std::move(v));
}

IndexSet IndexSet::names(std::initializer_list<std::string> names) {
    return IndexSet::names(std::span<const std::string>(names.begin(), names.size()));
}

bool IndexSet::contains(const Index& i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::optional<size_t> IndexSet::slotOf(const Index& i) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
    if (it == indices_.end() || !(*it == i))
        return std::nullopt;
    return static_cast<size_t>(it - indices_.begin());
}

std::optional<size_t> IndexSet::slotOfName(const std::string& name) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), name,
                               [](const Index& idx, const std::string& n) {
                                   return idx.isPosition() || idx.nameStr() < n;
                               });
    if (it == indices_.end() || !it->isName() || it->nameStr() != name)
        return std::nullopt;
    return static_cast<size_t>(it - indices_.begin());
}

bool IndexSet::subsetOf(const IndexSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(),
                         indices_.begin(), indices_.end());
}

bool IndexSet::disjointWith(const IndexSet& other) const {
    auto a = indices_.begin();
    auto b = other.indices_.begin();
    while (a != indices_.end() && b != other.indices_.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else
            return false;
    }
    return true;
}

IndexSet IndexSet::unionWith(const IndexSet& other) const {
    std::vector<Index> v;
    v.reserve(indices_.size() + other.indices_.size());
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                   other.indices_.end(), std::back_inserter(v));
    return IndexSet(std::move(v));
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
    std::vector<Index> v;
    std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                          other.indices_.end(), std::back_inserter(v));
    return IndexSet(std::move(v));
}

IndexSet IndexSet::minus(const IndexSet& other) const {
    std::vector<Index> v;
    std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(v));
    return IndexSet(std::move(v));
}

std::string IndexSet::display() const {
    std::string s = "{";
    for (size_t i = 0; i < indices_.size(); ++i) {
        if (i)
            s += ", ";
        s += indices_[i].display();
    }
    s += "}";
    return s;
}

} // namespace folx

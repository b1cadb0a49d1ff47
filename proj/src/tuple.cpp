#include "folx/tuple.hpp"

namespace folx {

IndexTuple varTuple(std::span<const std::string> vars) {
    std::vector<Index> values;
    values.reserve(vars.size());
    for (const auto& v : vars)
        values.push_back(Index::name(v));
    return IndexTuple(IndexSet::positions(static_cast<uint32_t>(vars.size())),
                      std::move(values));
}

IndexTuple varTuple(std::initializer_list<std::string> vars) {
    return varTuple(std::span<const std::string>(vars.begin(), vars.size()));
}

IndexTuple identityTuple(const IndexSet& set) {
    std::vector<Index> values(set.begin(), set.end());
    return IndexTuple(set, std::move(values));
}

IndexTuple enumerationInverse(std::span<const std::string> params) {
    std::vector<std::pair<Index, Index>> pairs;
    pairs.reserve(params.size());
    for (uint32_t i = 0; i < params.size(); ++i)
        pairs.emplace_back(Index::name(params[i]), Index::position(i));
    return IndexTuple::fromPairs(std::move(pairs));
}

Tuple namedTuple(std::initializer_list<std::pair<std::string, Element>> pairs) {
    std::vector<std::pair<Index, Element>> v;
    v.reserve(pairs.size());
    for (const auto& [name, value] : pairs)
        v.emplace_back(Index::name(name), value);
    return Tuple::fromPairs(std::move(v));
}

Tuple positionalTuple(std::span<const Element> values) {
    return Tuple(IndexSet::positions(static_cast<uint32_t>(values.size())),
                 std::vector<Element>(values.begin(), values.end()));
}

Tuple positionalTuple(std::initializer_list<Element> values) {
    return positionalTuple(std::span<const Element>(values.begin(), values.size()));
}

} // namespace folx

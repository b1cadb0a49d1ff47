#pragma once

#include "folx/kernels.hpp"
#include "folx/relation.hpp"

namespace folx {

// --- tuple operations ---

// f restricted to a subset of its index set.
template <typename V>
BasicTuple<V> restrict(const BasicTuple<V>& t, const IndexSet& subset) {
    if (!subset.subsetOf(t.indices()))
        raise(ErrorCode::IndexNotPresent,
              "restriction " + subset.display() + " is not a subset of " +
                  t.indices().display());
    std::vector<V> values;
    values.reserve(subset.size());
    for (const Index& i : subset)
        values.push_back(t.at(i));
    return BasicTuple<V>(subset, std::move(values));
}

// The composition g o f: maps i to g(f(i)). f's values must be indices of g.
template <typename V>
BasicTuple<V> compose(const BasicTuple<V>& g, const IndexTuple& f) {
    std::vector<V> values;
    values.reserve(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        const Index& target = f.atSlot(i);
        if (!g.indices().contains(target))
            raise(ErrorCode::CompositionTypeMismatch,
                  "value " + target.display() + " of the inner tuple is not an index of " +
                      g.indices().display());
        values.push_back(g.at(target));
    }
    return BasicTuple<V>(f.indices(), std::move(values));
}

// The quotient h/f: all tuples g over targetIndexSet with g o f = h.
// Target indices not hit by f range over the whole universe. Result is in
// lexicographic order.
std::vector<Tuple> functionQuotient(const Tuple& h, const IndexTuple& f,
                                    const IndexSet& targetIndexSet, uint32_t universeSize);

// --- relation operations ---

// The quotient H/f: union of h/f over h in H, indexed by the set of values
// of f. Realizes repeated arguments and renamings.
Relation relationQuotient(const Relation& H, const IndexTuple& f);

// Projection onto a subset of the index set; duplicates collapse.
Relation project(const Relation& r, const IndexSet& subset);

// Natural join over the union of the index sets.
Relation join(const Relation& r0, const Relation& r1);

// Complement within the full tuple space of r's type.
Relation complement(const Relation& r);

Relation setUnion(const Relation& r0, const Relation& r1);
Relation setIntersection(const Relation& r0, const Relation& r1);

// Extends r with unconstrained columns ranging over the whole universe.
Relation cylindrify(const Relation& r, const IndexSet& extra);

// All tuples of the given type. fullRelation({}) is the truth relation.
Relation fullRelation(const IndexSet& indexSet, uint32_t universeSize);

} // namespace folx

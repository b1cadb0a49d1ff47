#include "folx/render.hpp"

namespace folx {

std::string render(Element e, const Universe& universe) {
    return universe.elementName(e);
}

std::string render(const Tuple& t, const Universe& universe) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ", ";
        const Index& idx = t.indices().at(i);
        if (idx.isName())
            s += idx.nameStr() + "=";
        s += render(t.atSlot(i), universe);
    }
    return s + ")";
}

std::string render(const Relation& r, const Universe& universe) {
    if (r.width() == 0)
        return r.empty() ? "false" : "true";
    std::string s = "{";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i)
            s += ", ";
        s += render(r.tupleAt(i), universe);
    }
    return s + "}";
}

} // namespace folx

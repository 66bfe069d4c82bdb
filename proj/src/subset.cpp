#include "linkhom/subset.hpp"

#include <sstream>

namespace linkhom {

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= kMaxElements; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string SubsetMask::str() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int i : elements()) {
        if (!first) out << ",";
        out << i;
        first = false;
    }
    out << "}";
    return out.str();
}

bool lex_less(SubsetMask a, SubsetMask b) {
    std::vector<int> ea = a.elements(), eb = b.elements();
    return ea < eb;
}

}  // namespace linkhom

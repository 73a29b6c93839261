#include "s2c/pregroup.hpp"

#include <algorithm>
#include <cstdlib>

namespace s2c {

std::string TypeFactor::str() const {
    std::string out = base;
    const char* suffix = z < 0 ? ".l" : ".r";
    for (int i = 0; i < std::abs(z); ++i) out += suffix;
    return out;
}

bool contractible(const TypeFactor& left, const TypeFactor& right) {
    return left.base == right.base && right.z == left.z + 1;
}

PregroupType::PregroupType(std::initializer_list<TypeFactor> factors)
    : factors_(factors) {}

PregroupType::PregroupType(std::vector<TypeFactor> factors)
    : factors_(std::move(factors)) {}

PregroupType PregroupType::base(std::string name) {
    return PregroupType{{std::move(name), 0}};
}

PregroupType PregroupType::tensor(const PregroupType& rhs) const {
    std::vector<TypeFactor> out = factors_;
    out.insert(out.end(), rhs.factors_.begin(), rhs.factors_.end());
    return PregroupType(std::move(out));
}

PregroupType PregroupType::slice(std::size_t pos, std::size_t count) const {
    std::vector<TypeFactor> out(factors_.begin() + pos,
                                factors_.begin() + pos + count);
    return PregroupType(std::move(out));
}

PregroupType PregroupType::left_adjoint() const { return iterated_adjoint(-1); }

PregroupType PregroupType::right_adjoint() const { return iterated_adjoint(1); }

PregroupType PregroupType::iterated_adjoint(int steps) const {
    std::vector<TypeFactor> out = factors_;
    // An odd number of adjoint applications reverses the factor order; an
    // even number restores it. Windings always accumulate additively.
    if (steps % 2 != 0) std::reverse(out.begin(), out.end());
    for (auto& f : out) f.z += steps;
    return PregroupType(std::move(out));
}

std::string PregroupType::str() const {
    if (factors_.empty()) return "I";
    std::string out = factors_[0].str();
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        out += '@';
        out += factors_[i].str();
    }
    return out;
}

PregroupType adjoint(const PregroupType& t, Side side) {
    return side == Side::left ? t.left_adjoint() : t.right_adjoint();
}

}  // namespace s2c

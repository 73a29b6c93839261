#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace s2c {

// One factor of a pregroup type: a base name and an adjoint winding.
// z = 0 is the plain type; z-1 its left adjoint; z+1 its right adjoint.
struct TypeFactor {
    std::string base;
    int z = 0;

    TypeFactor left() const { return {base, z - 1}; }
    TypeFactor right() const { return {base, z + 1}; }

    // "n", "n.l", "n.r", "n.l.l", ... — one suffix step per winding unit.
    std::string str() const;

    auto operator<=>(const TypeFactor&) const = default;
};

// True when the adjacent pair (left, right) may contract, i.e. the pair is
// x (x) x.right() for some factor x — this covers both a^l a and a a^r.
bool contractible(const TypeFactor& left, const TypeFactor& right);

// An object of the free strict monoidal category over typed wires: an
// ordered list of factors. The empty list is the monoidal unit I, so the
// unitor and associator isomorphisms are identities and type equality is
// plain list equality.
class PregroupType {
public:
    PregroupType() = default;
    PregroupType(std::initializer_list<TypeFactor> factors);
    explicit PregroupType(std::vector<TypeFactor> factors);

    // Single plain factor (name, 0).
    static PregroupType base(std::string name);

    const std::vector<TypeFactor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }
    const TypeFactor& operator[](std::size_t i) const { return factors_[i]; }

    PregroupType tensor(const PregroupType& rhs) const;
    PregroupType slice(std::size_t pos, std::size_t count) const;

    // Adjoints reverse factor order and shift every winding by one step.
    PregroupType left_adjoint() const;
    PregroupType right_adjoint() const;

    // steps < 0: |steps| left adjoints; steps > 0: right adjoints; 0: copy.
    // Equivalent to folding left_adjoint/right_adjoint |steps| times.
    PregroupType iterated_adjoint(int steps) const;

    // "I" for the unit, otherwise factors joined with '@': "n.r@n@n.l".
    std::string str() const;

    auto operator<=>(const PregroupType&) const = default;

private:
    std::vector<TypeFactor> factors_;
};

enum class Side { left, right };

PregroupType adjoint(const PregroupType& t, Side side);

}  // namespace s2c

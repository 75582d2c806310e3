#include "omr/fixtures.hpp"

namespace omr {

namespace {

using Cube = std::vector<std::vector<std::vector<Rat>>>;

Cube zero_cube(int d) {
    return Cube(static_cast<size_t>(d),
                std::vector<std::vector<Rat>>(static_cast<size_t>(d),
                                              std::vector<Rat>(static_cast<size_t>(d))));
}

// dim 2 with basis (1, x) and x*x = sq * 1.
AlgebraSpec unit_plus_root(const std::string& name, long sq) {
    Cube c = zero_cube(2);
    c[0][0][0] = Rat(1);  // 1*1 = 1
    c[0][1][1] = Rat(1);  // 1*x = x
    c[1][0][1] = Rat(1);  // x*1 = x
    c[1][1][0] = Rat(sq); // x*x = sq
    return AlgebraSpec(name, 2, std::move(c));
}

}  // namespace

AlgebraSpec fixture_idem1() {
    Cube c = zero_cube(1);
    c[0][0][0] = Rat(1);
    return AlgebraSpec("idem1", 1, std::move(c));
}

AlgebraSpec fixture_nil1() {
    return AlgebraSpec("nil1", 1, zero_cube(1));
}

AlgebraSpec fixture_ax() {
    return unit_plus_root("ax", 1);
}

AlgebraSpec fixture_by() {
    return unit_plus_root("by", -1);
}

}  // namespace omr

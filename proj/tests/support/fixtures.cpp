#include "support/fixtures.hpp"

namespace zeff::tests {

Network resistor_path() {
    return build_network({"a0", "x", "a1"},
                         {{"a0", "x", resistor(1)}, {"x", "a1", resistor(1)}}, "a0", "a1",
                         NetworkMode::Strict);
}

Network solutions_network(const Rational& r, const Rational& l, const Rational& c) {
    Rational d = Rational(1) / c;
    return build_network({"a0", "a1", "z", "y", "x"},
                         {
                             {"a0", "a1", EdgeParams::rlc(r, l, 0)}, // 1/(L s + R)
                             {"a1", "z", capacitor(c)},
                             {"y", "a1", inductor(l)},
                             {"z", "y", capacitor(c)},
                             {"x", "a0", capacitor(c)},
                             {"a0", "y", capacitor(c)},
                             {"y", "x", inductor(l)},
                         },
                         "a0", "a1", NetworkMode::Strict);
}

Network nontrivial_network() {
    return build_network({"a0", "x", "y", "a1"},
                         {
                             {"a0", "x", inductor(1)},
                             {"y", "a0", capacitor(1)},
                             {"x", "a1", capacitor(1)},
                             {"a1", "y", inductor(1)},
                             {"x", "y", EdgeParams::rlc(1, 1, 0)}, // 1/(lambda+1)
                         },
                         "a0", "a1", NetworkMode::Strict);
}

Network nontrivial_network_raw() {
    return build_network({"a0", "x", "y", "a1"},
                         {
                             {"a0", "x", inductor(1)},
                             {"y", "a0", capacitor(1)},
                             {"x", "a1", capacitor(1)},
                             {"a1", "y", inductor(1)},
                             {"x", "y", EdgeParams::raw(rf({1}, {1, 1}))},
                         },
                         "a0", "a1", NetworkMode::Raw);
}

Network minus_lambda_network() {
    return build_network({"a0", "x", "y", "a1"},
                         {
                             {"a0", "x", EdgeParams::raw(rf({0, 1}))},
                             {"a0", "y", EdgeParams::raw(rf({0, -1}))},
                             {"x", "a1", EdgeParams::raw(rf({0, -1}))},
                             {"y", "a1", EdgeParams::raw(rf({0, 1}))},
                             {"x", "y", EdgeParams::raw(rf({1}))},
                         },
                         "a0", "a1", NetworkMode::Raw);
}

Network non_pos_w_network() {
    return build_network({"a0", "x", "y", "a1"},
                         {
                             {"a0", "x", capacitor(1)},
                             {"x", "a1", inductor(1)},
                             {"a0", "y", resistor(1)},
                             {"y", "a1", EdgeParams::raw(rf({1, -1, 1}, {0, 1}))},
                         },
                         "a0", "a1", NetworkMode::Raw);
}

Network complex_omega_network() {
    return build_network({"a0", "a1", "x", "y", "z"},
                         {
                             {"a0", "x", inductor(1)},
                             {"a0", "y", capacitor(1)},
                             {"x", "y", resistor(1)},
                             {"x", "a1", capacitor(1)},
                             {"y", "a1", inductor(1)},
                             {"z", "a0", capacitor(1)},
                             {"a1", "z", inductor(1)},
                         },
                         "a0", "a1", NetworkMode::Strict);
}

} // namespace zeff::tests

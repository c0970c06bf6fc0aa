#pragma once

#include <stdexcept>
#include <string>

namespace coxspec {

// Error tiers map onto the CLI exit-code contract:
//   input_error  -> exit 1 (malformed files, bad flags, invalid parameters)
//   math_error   -> exit 2 (a mathematical contract was violated by the input)
//   verify_error -> exit 3 (a theorem-level verification failed)
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : math_error {
    division_by_zero() : math_error("division by zero") {}
};
struct incompatible_orders : math_error {
    incompatible_orders(int from, int to)
        : math_error("cyclotomic order " + std::to_string(from) +
                     " does not divide target order " + std::to_string(to)) {}
};
struct invalid_label : math_error {
    explicit invalid_label(const std::string& what) : math_error("invalid irrep label: " + what) {}
};
struct modulus_mismatch : math_error {
    modulus_mismatch() : math_error("dihedral elements have different moduli") {}
};
struct order_exceeded : math_error {
    explicit order_exceeded(int max)
        : math_error("product order exceeds bound " + std::to_string(max)) {}
};
struct not_fully_factorable : math_error {
    explicit not_fully_factorable(const std::string& what)
        : math_error("spectrum polynomial does not factor over the curve catalog: " + what) {}
};
struct not_a_representation : math_error {
    explicit not_a_representation(const std::string& what)
        : math_error("not a representation: " + what) {}
};
struct order_violation : math_error {
    explicit order_violation(const std::string& what) : math_error("order violation: " + what) {}
};
struct faithfulness_violation : math_error {
    faithfulness_violation(int i, int j, const std::string& witness)
        : math_error("pair (" + std::to_string(i) + "," + std::to_string(j) +
                     ") is not a faithful dihedral pair; kernel witness " + witness),
          gen_i(i), gen_j(j), witness_name(witness) {}
    int gen_i;
    int gen_j;
    std::string witness_name;
};
struct invalid_curveset : math_error {
    explicit invalid_curveset(const std::string& what) : math_error("invalid curve set: " + what) {}
};
struct missing_pair : math_error {
    missing_pair(int i, int j)
        : math_error("no curve set given for generator pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ")") {}
};
struct sink_failure : input_error {
    sink_failure() : input_error("output sink failed while writing") {}
};

}  // namespace coxspec

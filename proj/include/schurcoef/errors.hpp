#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schurcoef {

// Caller violated an operation contract (shape, order mismatch, bad normalization).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but lies outside the mathematical domain of the operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class near_singular_division : public domain_error {
public:
    using domain_error::domain_error;
};

// Raised by the Schur algorithm when some |f_k(0)| exceeds 1 + tolerance.
// index is the 1-based parameter position, modulus the offending |f_k(0)|.
class not_schur_function : public domain_error {
public:
    not_schur_function(const std::string& what, std::size_t index, double modulus)
        : domain_error(what), index_(index), modulus_(modulus) {}

    std::size_t index() const noexcept { return index_; }
    double modulus() const noexcept { return modulus_; }

private:
    std::size_t index_;
    double modulus_;
};

// A Caratheodory-normalized tuple b does not lie in the coefficient body.
// For an extraction failure index/modulus describe the offending parameter;
// for a failed a-posteriori check modulus is the reconstruction residual.
class not_in_body : public domain_error {
public:
    not_in_body(const std::string& what, std::size_t index, double modulus)
        : domain_error(what), index_(index), modulus_(modulus) {}

    std::size_t index() const noexcept { return index_; }
    double modulus() const noexcept { return modulus_; }

private:
    std::size_t index_;
    double modulus_;
};

// Requested work exceeds a fixed capacity (symbolic expansion order).
class resource_error : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace schurcoef

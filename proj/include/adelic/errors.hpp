#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

/// Base of every domain error raised by the library.
class adelic_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The prime may divide the index [o_K : Z[theta]] or exceeds the desk-scale cap.
class unsupported_prime : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class not_prime : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class not_irreducible : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class precision_loss : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class field_mismatch : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class not_a_partition : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class not_member : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class degenerate_generator : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class invalid_level : public adelic_error {
public:
    using adelic_error::adelic_error;
};

class inconsistent_neighborhood : public adelic_error {
public:
    using adelic_error::adelic_error;
};

/// A prime beyond the sampling bound has a splitting signature never seen below it.
class unwitnessed_signature : public adelic_error {
public:
    using adelic_error::adelic_error;
};

/// Malformed textual input (CLI arguments, serialized values).
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace adelic

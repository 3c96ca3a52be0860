#pragma once

#include <stdexcept>
#include <string>

namespace mcfl {

/// Root of every exception thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text that does not parse, or a letter outside the alphabet.
class malformed_input : public error {
public:
  using error::error;
};

/// A well-formed request the mathematics does not accept: a word outside
/// O_n, a reducible tuple handed to decompose, a scan bound
/// exceeded, and so on.
class domain_error : public error {
public:
  using error::error;
};

class precondition_error : public domain_error {
public:
  using domain_error::domain_error;
};

class not_in_language : public domain_error {
public:
  using domain_error::domain_error;
};

class parity_error : public domain_error {
public:
  using domain_error::domain_error;
};

class bound_exceeded : public domain_error {
public:
  using domain_error::domain_error;
};

class unsupported_grammar : public domain_error {
public:
  using domain_error::domain_error;
};

/// A guaranteed object (zero, split, decomposition) was not found. Never a
/// legitimate outcome; always a bug.
class soundness_error : public error {
public:
  using error::error;
};

} // namespace mcfl

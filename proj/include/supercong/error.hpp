#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

/// Base of every error raised by the library. All checks either return a
/// result or throw one of these; a violated hypothesis is never reported as
/// a plain "false".
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A rational whose denominator is divisible by p was reduced mod p^e.
class non_p_integral : public error {
public:
  using error::error;
};

class not_invertible : public error {
public:
  using error::error;
};

/// A modular kernel met a denominator factor divisible by p.
class degenerate : public error {
public:
  using error::error;
};

/// A partial-fraction argument hit one of the poles 0, -1, ..., -n.
class pole_error : public error {
public:
  using error::error;
};

/// The argument's residue m = <x>_p lies outside the range a lemma covers.
class regime_error : public error {
public:
  using error::error;
};

/// The statement's hypothesis excludes this (p, x) pair.
class hypothesis_violated : public error {
public:
  using error::error;
};

class invalid_prime : public error {
public:
  using error::error;
};

class parse_error : public error {
public:
  parse_error(const std::string &what, int line = 0)
      : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

class io_error : public error {
public:
  using error::error;
};

} // namespace supercong

#pragma once

#include <stdexcept>
#include <string>

namespace ripsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// qubit too close to the bus cavity for the dispersive construction
class DispersiveRegimeViolation : public Error {
 public:
  using Error::Error;
};

// two dressed qubit frequencies coincide within the exchange-coupling scale
class DegenerateQubits : public Error {
 public:
  using Error::Error;
};

class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

// a drive denominator |detuning - k*chi| fell below the cavity linewidth
class ResonantDrive : public Error {
 public:
  using Error::Error;
};

class UnsupportedTarget : public Error {
 public:
  using Error::Error;
};

// tune-up could not reach the requested conditional phase
class Unreachable : public Error {
 public:
  using Error::Error;
};

class InvalidDensityMatrix : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// config parse/validation failure; carries the offending key when known
class ConfigError : public Error {
 public:
  ConfigError(const std::string& msg, std::string key = "")
      : Error(msg), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace ripsim

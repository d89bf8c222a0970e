#pragma once

#include <stdexcept>
#include <string>

namespace netstab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Signal layer
class ZeroSignalError : public Error {
public:
  explicit ZeroSignalError(const std::string& what = "signal norm below zero tolerance")
      : Error(what) {}
};
class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

// LTI layer
class SingularAtFrequency : public Error {
public:
  explicit SingularAtFrequency(const std::string& what) : Error(what) {}
};
class DegenerateStep : public Error {
public:
  explicit DegenerateStep(const std::string& what) : Error(what) {}
};

// Factorization layer
class NotStabilizable : public Error {
public:
  explicit NotStabilizable(const std::string& what) : Error(what) {}
};
class NotDetectable : public Error {
public:
  explicit NotDetectable(const std::string& what) : Error(what) {}
};
class RiccatiFailure : public Error {
public:
  explicit RiccatiFailure(const std::string& what) : Error(what) {}
};

// Feedback layer
class NotWellPosed : public Error {
public:
  explicit NotWellPosed(const std::string& what) : Error(what) {}
};

// Channel / iteration layer
class NoConvergence : public Error {
public:
  explicit NoConvergence(const std::string& what) : Error(what) {}
};
class LoopNotContractive : public Error {
public:
  explicit LoopNotContractive(const std::string& what) : Error(what) {}
};

// Analysis layer
class OutOfRange : public Error {
public:
  explicit OutOfRange(const std::string& what) : Error(what) {}
};
class UnknownLabel : public Error {
public:
  explicit UnknownLabel(const std::string& what) : Error(what) {}
};
class DuplicateLabel : public Error {
public:
  explicit DuplicateLabel(const std::string& what) : Error(what) {}
};
class NotApplicable : public Error {
public:
  explicit NotApplicable(const std::string& what) : Error(what) {}
};
class AngleShortfall : public Error {
public:
  explicit AngleShortfall(const std::string& what) : Error(what) {}
};

// Config / persistence layer
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace netstab

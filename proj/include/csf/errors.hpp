#pragma once

#include <stdexcept>
#include <string>

namespace csf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge operation named an edge the graph does not contain.
class MissingEdgeError : public Error {
 public:
  using Error::Error;
};

/// A unicyclic-only operation received a graph that is not connected unicyclic.
class NotUnicyclicError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain on which an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two partitions of different sizes were compared.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a desk-scale guard (subset enumeration, generator bounds).
class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// Basis change produced a non-integral coefficient.
class NonIntegralError : public Error {
 public:
  using Error::Error;
};

/// A star expansion is not consistent with any connected unicyclic graph.
class InconsistentReportError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (graph6, edge list, partition, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace csf

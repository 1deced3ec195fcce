#pragma once

#include <stdexcept>

namespace minq {

// Misuse of the library or CLI surface. The CLI maps these to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A broken internal invariant. The CLI maps these to exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidRank : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotARoot : public DomainError {
 public:
  using DomainError::DomainError;
};

class BadNodeIndex : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotMinusculeNode : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotMinimalRep : public DomainError {
 public:
  using DomainError::DomainError;
};

class WrongType : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotFullSupport : public DomainError {
 public:
  using DomainError::DomainError;
};

class VertexOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonReducedWord : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotAPeak : public DomainError {
 public:
  using DomainError::DomainError;
};

class BadPeakOrder : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionViolated : public DomainError {
 public:
  using DomainError::DomainError;
};

// Impossible for subdiagrams of A/D/E; reaching it means the Cartan data is bad.
class UnclassifiableDiagram : public InternalError {
 public:
  using InternalError::InternalError;
};

class InternalGoodnessViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

class NonUniqueDescent : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace minq

#pragma once

#include <stdexcept>
#include <string>

namespace splitsteiner {

/// Base of every error raised by the library. Callers that do not care about
/// the specific failure can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SPLITSTEINER_DEFINE_ERROR(Name)   \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// graph construction
SPLITSTEINER_DEFINE_ERROR(PartitionViolation);
SPLITSTEINER_DEFINE_ERROR(Disconnected);
SPLITSTEINER_DEFINE_ERROR(EmptyTerminals);

// imaginary structures
SPLITSTEINER_DEFINE_ERROR(InvalidLayout);
SPLITSTEINER_DEFINE_ERROR(LayoutMismatch);
SPLITSTEINER_DEFINE_ERROR(EmptyNeighborhood);

// solver preconditions
SPLITSTEINER_DEFINE_ERROR(StructureMismatch);
SPLITSTEINER_DEFINE_ERROR(TerminalsNotIndependentSet);
SPLITSTEINER_DEFINE_ERROR(DegreeBoundViolated);
SPLITSTEINER_DEFINE_ERROR(Infeasible);

// kernels and search
SPLITSTEINER_DEFINE_ERROR(BudgetExhausted);
SPLITSTEINER_DEFINE_ERROR(NoInstance);
SPLITSTEINER_DEFINE_ERROR(CorruptCertificate);
SPLITSTEINER_DEFINE_ERROR(CapExceeded);

// reductions
SPLITSTEINER_DEFINE_ERROR(MalformedX3C);
SPLITSTEINER_DEFINE_ERROR(MalformedVC);

// bad caller-supplied parameters (budgets, generator sizes, method names)
SPLITSTEINER_DEFINE_ERROR(InvalidParameter);

#undef SPLITSTEINER_DEFINE_ERROR

/// Instance-file syntax error; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace splitsteiner

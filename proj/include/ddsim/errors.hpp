#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ddsim {

// Every failure raised by the library derives from Error and carries a stable
// kind name; the CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DDSIM_DEFINE_ERROR(Name)                                           \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& message) : Error(#Name, message) {}   \
  }

DDSIM_DEFINE_ERROR(InvalidMatrix);
DDSIM_DEFINE_ERROR(SingularTransform);
DDSIM_DEFINE_ERROR(IllConditionedJordan);
DDSIM_DEFINE_ERROR(DimensionMismatch);
DDSIM_DEFINE_ERROR(NotAchievable);
DDSIM_DEFINE_ERROR(PreconditionViolated);
DDSIM_DEFINE_ERROR(NumericallySingular);
DDSIM_DEFINE_ERROR(SingularInput);

#undef DDSIM_DEFINE_ERROR

// Raised when eigenvalue clustering is not transitive under the tolerance:
// single-linkage and complete-linkage groupings differ.  Both candidate
// groupings are carried so the caller can pick a cluster_tol.
class ClusterAmbiguity : public Error {
 public:
  using Grouping = std::vector<std::vector<std::complex<double>>>;

  ClusterAmbiguity(const std::string& message, Grouping linked, Grouping split)
      : Error("ClusterAmbiguity", message),
        linked_(std::move(linked)),
        split_(std::move(split)) {}

  const Grouping& linked_grouping() const noexcept { return linked_; }
  const Grouping& split_grouping() const noexcept { return split_; }

 private:
  Grouping linked_;
  Grouping split_;
};

// Input parse failure; line/column are 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : Error("ParseError", format(message, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace ddsim

#pragma once

#include <stdexcept>
#include <string>

namespace eqeffort {

enum class ErrorKind {
    Config,
    Io,
    Schema,
    Mapping,
    DegeneratePartition,
    InsufficientComparators,
    SingularDesign,
    EmptySubgroup,
    NonMonotoneModel,
    MissingLevel,
    EmptyCell,
    Cycle,
    Identifiability,
    ZeroProbabilityCondition,
    OptimizationFailure,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Config: return "config";
        case ErrorKind::Io: return "io";
        case ErrorKind::Schema: return "schema";
        case ErrorKind::Mapping: return "mapping";
        case ErrorKind::DegeneratePartition: return "degenerate-partition";
        case ErrorKind::InsufficientComparators: return "insufficient-comparators";
        case ErrorKind::SingularDesign: return "singular-design";
        case ErrorKind::EmptySubgroup: return "empty-subgroup";
        case ErrorKind::NonMonotoneModel: return "non-monotone-model";
        case ErrorKind::MissingLevel: return "missing-level";
        case ErrorKind::EmptyCell: return "empty-cell";
        case ErrorKind::Cycle: return "cycle";
        case ErrorKind::Identifiability: return "identifiability";
        case ErrorKind::ZeroProbabilityCondition: return "zero-probability-condition";
        case ErrorKind::OptimizationFailure: return "optimization-failure";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace eqeffort

#pragma once

#include <stdexcept>
#include <string>

namespace coha {

enum class Err {
    InvalidInput,
    CycleFound,
    OrderViolation,
    LengthMismatch,
    NotDynkin,
    NotConnected,
    NotDisjointCover,
    ContractionCyclic,
    NotOrdered,
    BadPartition,
    NoValidOrder,
    NotSymmetric,
    VariableOutOfRange,
    QuiverMismatch,
    NotDivisible,
    InternalNotDivisible,
    NoUnitCoordinate,
    BadMarker,
    GradeMismatch,
    BoxMismatch,
    ZeroVector,
    E8Block,
    SignMismatch,
    NegativeCodim,
    NonInteger,
    ParseError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::InvalidInput: return "InvalidInput";
        case Err::CycleFound: return "CycleFound";
        case Err::OrderViolation: return "OrderViolation";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::NotDynkin: return "NotDynkin";
        case Err::NotConnected: return "NotConnected";
        case Err::NotDisjointCover: return "NotDisjointCover";
        case Err::ContractionCyclic: return "ContractionCyclic";
        case Err::NotOrdered: return "NotOrdered";
        case Err::BadPartition: return "BadPartition";
        case Err::NoValidOrder: return "NoValidOrder";
        case Err::NotSymmetric: return "NotSymmetric";
        case Err::VariableOutOfRange: return "VariableOutOfRange";
        case Err::QuiverMismatch: return "QuiverMismatch";
        case Err::NotDivisible: return "NotDivisible";
        case Err::InternalNotDivisible: return "InternalNotDivisible";
        case Err::NoUnitCoordinate: return "NoUnitCoordinate";
        case Err::BadMarker: return "BadMarker";
        case Err::GradeMismatch: return "GradeMismatch";
        case Err::BoxMismatch: return "BoxMismatch";
        case Err::ZeroVector: return "ZeroVector";
        case Err::E8Block: return "E8Block";
        case Err::SignMismatch: return "SignMismatch";
        case Err::NegativeCodim: return "NegativeCodim";
        case Err::NonInteger: return "NonInteger";
        case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Library-wide exception; carries a machine-readable kind next to the message.
class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace coha

#ifndef ICRES_ERROR_HPP
#define ICRES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace icres {

enum class ErrorKind {
    EmptyEdge,
    VertexOutOfRange,
    NotAntichain,
    DuplicateEdge,
    NotAGraph,
    InvalidParams,
    DegenerateCone,
    DimensionMismatch,
    MalformedProgram,
    IndexOutOfRange,
    ScaleExceeded,
    NotABCover,
    HypothesisNotMet,
    CrossCheckFailed,
    ParseError,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::EmptyEdge:         return "EmptyEdge";
        case ErrorKind::VertexOutOfRange:  return "VertexOutOfRange";
        case ErrorKind::NotAntichain:      return "NotAntichain";
        case ErrorKind::DuplicateEdge:     return "DuplicateEdge";
        case ErrorKind::NotAGraph:         return "NotAGraph";
        case ErrorKind::InvalidParams:     return "InvalidParams";
        case ErrorKind::DegenerateCone:    return "DegenerateCone";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::MalformedProgram:  return "MalformedProgram";
        case ErrorKind::IndexOutOfRange:   return "IndexOutOfRange";
        case ErrorKind::ScaleExceeded:     return "ScaleExceeded";
        case ErrorKind::NotABCover:        return "NotABCover";
        case ErrorKind::HypothesisNotMet:  return "HypothesisNotMet";
        case ErrorKind::CrossCheckFailed:  return "CrossCheckFailed";
        case ErrorKind::ParseError:        return "ParseError";
    }
    return "Unknown";
}

/**
 * Every failure raised by the library.  The kind is the machine-readable
 * part; the message names the offending object (edge, facet, index).
 */
class Error : public std::runtime_error
{
    public:
        Error(ErrorKind kind, const std::string& what)
            : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
        {
        }

        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
};

}   // namespace icres

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace zf {

/// Base class of all domain errors. `code()` is a stable machine-readable
/// name; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define ZF_ERROR_TYPE(Name)                                                  \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

ZF_ERROR_TYPE(NotAClutter);       // containment between distinct edges/members
ZF_ERROR_TYPE(EmptyEdge);         // hypergraph edge with no vertices
ZF_ERROR_TYPE(VertexOutOfRange);  // vertex outside {1,...,n}
ZF_ERROR_TYPE(GroundSetTooLarge); // n exceeds a hard enumeration cap
ZF_ERROR_TYPE(RuleNotApplicable); // graph-only rule on a non-graph
ZF_ERROR_TYPE(EmptySet);          // empty candidate where nonempty required
ZF_ERROR_TYPE(NotAnEdge);         // set is not an edge of the hypergraph
ZF_ERROR_TYPE(EmptyMember);       // clutter member empty where forbidden
ZF_ERROR_TYPE(OutOfRange);        // numeric parameter outside its domain
ZF_ERROR_TYPE(NotRealizable);     // no realization exists for the request
ZF_ERROR_TYPE(SearchBoundExceeded); // exhaustive search refused above bound
ZF_ERROR_TYPE(ParseError);        // malformed textual or JSON input
ZF_ERROR_TYPE(IoError);           // unreadable or unwritable stream/file

#undef ZF_ERROR_TYPE

} // namespace zf

#ifndef NUAR_GUARD_ERRORS_HH
#define NUAR_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>
#include <vector>

namespace nuar
{
    enum class ErrorKind
    {
        InvalidArgument,
        NotBipartite,
        NotConnected,
        SizeCapExceeded,
        NotInduced,
        NotInjective,
        PreconditionViolated,
        TemplateMismatch,
        NotAnObstruction,
        HypothesisViolated,
        FamilyMemberFeasible,
        VertexIsLeaf,
        VertexColored,
        Unreachable,
        Parse
    };

    auto to_string(ErrorKind kind) -> std::string;

    /// Thrown for every precondition failure in the library. The witness, when
    /// non-empty, carries vertex ids that explain the failure (an odd cycle, the
    /// offending pair of an embedding, the index of a family member, ...).
    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;
            std::vector<int> _witness;

        public:
            Error(ErrorKind kind, const std::string & message, std::vector<int> witness = { });

            [[nodiscard]] auto kind() const -> ErrorKind { return _kind; }
            [[nodiscard]] auto witness() const -> const std::vector<int> & { return _witness; }
    };

    class ParseError : public Error
    {
        private:
            int _line;

        public:
            ParseError(int line, const std::string & message);

            [[nodiscard]] auto line() const -> int { return _line; }
    };
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_ERRORS_HH
#define RAMSEY_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace ramsey
{
    /// Malformed textual input (graph6, edge lists, rationals, config files).
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An argument outside its documented domain (index out of range, r = 0, ...).
    class InvalidArgument : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A host graph too small for the pattern, or a pattern too large to enumerate.
    class SizeError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An exhaustive computation would exceed its configured cap.
    class BudgetExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}

#endif

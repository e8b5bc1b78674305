#pragma once

#include <stdexcept>
#include <string>

namespace dgraceful
{
    /// A parameter is outside the domain of the operation (e.g. e = 0, k < 3).
    class InvalidParameter : public std::invalid_argument
    {
        public:
            explicit InvalidParameter(const std::string & what) : std::invalid_argument(what) { }
    };

    /// The requested d does not divide the edge count, or a family rules it out.
    class NotAdmissible : public std::invalid_argument
    {
        public:
            explicit NotAdmissible(const std::string & what) : std::invalid_argument(what) { }
    };

    /// The input does not satisfy a structural precondition (not bipartite,
    /// not connected, not complete, not verified, ...).
    class PreconditionFailed : public std::invalid_argument
    {
        public:
            explicit PreconditionFailed(const std::string & what) : std::invalid_argument(what) { }
    };

    /// Malformed serialized input.
    class FormatError : public std::runtime_error
    {
        public:
            explicit FormatError(const std::string & what) : std::runtime_error(what) { }
    };
}

#pragma once

#include <stdexcept>
#include <string>

namespace udgfvs {

// Malformed input: bad ids, self-loops, unparsable files, invalid parameters.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed its configured budget (oracle size caps, DP state caps).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace udgfvs

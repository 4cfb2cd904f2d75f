#ifndef GEOTRANS_ERRORS_HPP
#define GEOTRANS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geotrans {

// Bad arguments: degree mismatches, malformed input files, out-of-range
// parameters. The CLI maps this to exit code 2.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A computation refused to start (or stopped) because a configured resource
// cap would be exceeded. Distinct from InvalidInput so callers can degrade
// gracefully. The CLI maps this to exit code 3.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A group-theoretic precondition failed: the group does not act transitively
// where the operation requires it.
class NotTransitive : public std::runtime_error {
public:
    explicit NotTransitive(const std::string& what) : std::runtime_error(what) {}
};

// The graph is not locally m disjoint copies of K_r, so operations that need
// the clique incidence structure cannot run.
class NotInF : public std::runtime_error {
public:
    explicit NotInF(const std::string& what) : std::runtime_error(what) {}
};

// A bundled data file failed its self-verification block.
class AssetCorrupt : public std::runtime_error {
public:
    explicit AssetCorrupt(const std::string& what) : std::runtime_error(what) {}
};

// A deterministic search exhausted its space without finding the requested
// object (or its preconditions ruled the search out).
class NotFound : public std::runtime_error {
public:
    explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

// A tuple set handed to a transitivity check is not closed under the group
// action, so "transitive on it" is not even well posed.
class ActionNotClosed : public std::runtime_error {
public:
    explicit ActionNotClosed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geotrans

#endif

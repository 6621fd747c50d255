#ifndef QCLASS_UTIL_HPP
#define QCLASS_UTIL_HPP

// Error taxonomy and global enumeration bounds shared by all modules.

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qclass {

// A caller passed data outside an operation's domain (unknown element,
// malformed relation, group that is not a subgroup of the automorphisms, ...).
struct invalid_input_error : std::runtime_error {
    explicit invalid_input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated theorem/operation hypothesis does not hold (e.g. a double poset
// that is not locally special where local specialness is required).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration or closure would exceed the configured size bounds.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency guarantee failed; indicates a bug or corrupted input
// (e.g. a quotient relation losing antisymmetry, or a non-integer orbit count).
struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ground-set bound for double posets / digraphs.  Overridable through the
// QCLASS_MAX_N environment variable; re-read on every call so tests can set
// and unset it.
inline int max_ground_n() {
    if (const char* s = std::getenv("QCLASS_MAX_N")) {
        try {
            int v = std::stoi(s);
            if (v > 0) return v;
        } catch (...) {
            // fall through to the default on unparsable values
        }
    }
    return 9;
}

// Guard for raw set-composition enumeration (one larger than the ground-set
// bound so that enumeration over a full ground set always stays legal).
inline int max_set_composition_n() { return max_ground_n() + 1; }

}  // namespace qclass

#endif  // QCLASS_UTIL_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

// Bad user input: malformed words, mismatched alphabets, invalid data files.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard was exceeded (ambient too large, degree too high).
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// A computation budget ran out: state explosion, memo budget, search budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Three-valued verdict for properties that are only semi-decidable at desk
// scale (F-core triviality and everything downstream of it).
enum class Tri { False = 0, True = 1, Unknown = 2 };

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::True;
}

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        default: return "unknown";
    }
}

} // namespace selfsim

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chowq {

enum class Errc {
    invalid_argument,
    syntax,
    index_out_of_range,
    arity_mismatch,
    geometry_mismatch,
    insufficient_data,
    family_inconsistent,
    not_closed,
};

const char* to_string(Errc code);

// All library failures are reported through this type; callers that need to
// distinguish misuse from mathematical failure switch on code().
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Error(Errc code, const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          code_(code),
          position_(position),
          has_position_(true) {}

    Errc code() const noexcept { return code_; }
    bool has_position() const noexcept { return has_position_; }
    std::size_t position() const noexcept { return position_; }

private:
    Errc code_;
    std::size_t position_ = 0;
    bool has_position_ = false;
};

inline void require(bool condition, Errc code, const std::string& message)
{
    if (!condition)
        throw Error(code, message);
}

} // namespace chowq

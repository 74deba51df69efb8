#pragma once

#include <stdexcept>
#include <string>

namespace glcurve {

enum class errc {
    not_prime,
    field_too_large,
    zero_element,
    field_mismatch,
    extension_field_exact_unsupported,
    non_unit_quotient,
    not_coprime,
    wrong_congruence,
    bad_reduction,
    non_integer_total,
    weil_bound_violation,
    pole_at_nonpositive_integer,
    outside_convergence_domain,
    pole_in_c,
    unsupported_family,
    precondition,
    usage,
    internal
};

// Library-wide error. `precondition_like()` distinguishes caller mistakes
// (CLI exit 2) from internal consistency failures (CLI exit 1).
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

    bool precondition_like() const {
        switch (code_) {
        case errc::non_integer_total:
        case errc::weil_bound_violation:
        case errc::non_unit_quotient:
        case errc::internal:
            return false;
        default:
            return true;
        }
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace glcurve

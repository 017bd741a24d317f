#ifndef QLRC_ERRORS_HPP
#define QLRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlrc {

// Base for all library errors; subclasses mirror the precondition they guard.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct not_prime_error : error { using error::error; };
struct hermitian_needs_even_s_error : error { using error::error; };
struct does_not_divide_group_order_error : error { using error::error; };
struct not_a_subfield_error : error { using error::error; };
struct division_by_zero_error : error { using error::error; };
struct tower_mismatch_error : error { using error::error; };

struct base_not_coprime_error : error { using error::error; };
struct modulus_mismatch_error : error { using error::error; };
struct not_a_divisor_error : error { using error::error; };
struct index_out_of_range_error : error { using error::error; };
struct not_complete_error : error { using error::error; };

struct dimension_mismatch_error : error { using error::error; };

struct divisibility_error : error { using error::error; };
struct exponent_out_of_range_error : error { using error::error; };

struct field_not_square_error : error { using error::error; };
struct empty_index_set_error : error { using error::error; };
struct infeasible_error : error { using error::error; };
struct zero_code_error : error { using error::error; };

struct not_locally_recoverable_error : error { using error::error; };
struct search_infeasible_error : error { using error::error; };
struct not_self_orthogonal_error : error { using error::error; };
struct not_dual_containing_error : error { using error::error; };

struct spec_invalid_error : error { using error::error; };
struct verification_mismatch_error : error { using error::error; };
struct axis_error : error { using error::error; };

} // namespace qlrc

#endif

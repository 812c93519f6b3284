#pragma once

#include <stdexcept>
#include <string>

namespace macref {

struct error : std::runtime_error {
    explicit error(const std::string& m) : std::runtime_error(m) {}
};

struct zero_denominator_error : error {
    explicit zero_denominator_error(const std::string& m = "zero denominator") : error(m) {}
};

struct denominator_vanishes_error : error {
    explicit denominator_vanishes_error(const std::string& m = "denominator vanishes at specialization") : error(m) {}
};

struct incompatible_exponents_error : error {
    explicit incompatible_exponents_error(const std::string& m = "incompatible fractional exponents") : error(m) {}
};

struct not_series_expandable_error : error {
    explicit not_series_expandable_error(const std::string& m = "not series-expandable") : error(m) {}
};

struct box_outside_diagram_error : error {
    explicit box_outside_diagram_error(const std::string& m = "box outside diagram") : error(m) {}
};

struct too_many_rows_error : error {
    explicit too_many_rows_error(const std::string& m = "partition has more rows than the rank") : error(m) {}
};

struct row_out_of_range_error : error {
    explicit row_out_of_range_error(const std::string& m = "row index outside matrix range") : error(m) {}
};

struct internal_mismatch_error : error {
    explicit internal_mismatch_error(const std::string& m = "dual-route evaluation mismatch") : error(m) {}
};

struct not_defined_along_family_error : error {
    explicit not_defined_along_family_error(const std::string& m = "not defined along the deformation family") : error(m) {}
};

} // namespace macref

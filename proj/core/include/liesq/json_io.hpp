#pragma once

#include "liesq/matrixrep.hpp"

#include <iosfwd>
#include <string>

namespace liesq {

/// Parse a generator-set description:
///   {"dim": d,
///    "scalars": "gaussian-rational" | "float",
///    "generators": [ [ [ entry ... row ] ... ] ... ]}
/// where an exact entry is [re_num, re_den, im_num, im_den] (integers or
/// decimal strings for big values) and a float entry is [re, im].
/// Shapes and scalar kinds are validated.
MatrixRep load_matrix_rep(std::istream& in);
MatrixRep load_matrix_rep_file(const std::string& path);

std::string save_matrix_rep(const MatrixRep& r);

}  // namespace liesq

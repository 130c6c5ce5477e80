#pragma once

#include <string>

#include "wharf/core/matrix.hpp"

namespace wharf {

/// Binary state dump: one JSON header line ({"rows","cols","format"}) followed
/// by little-endian f64 interleaved re/im, row-major.
void dump_matrix(const CMatrix& m, const std::string& path, const std::string& meta_json = "{}");
CMatrix load_matrix_dump(const std::string& path);

}  // namespace wharf

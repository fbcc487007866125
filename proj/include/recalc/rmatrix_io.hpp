#ifndef RECALC_RMATRIX_IO_HPP
#define RECALC_RMATRIX_IO_HPP

#include <string>

#include "recalc/hecke_symmetry.hpp"

namespace recalc {

// Custom operator file:
//   { "N": int,
//     "entries": [ {"row_pair": [i,j], "col_pair": [k,l], "value": "<scalar literal>"} ] }
// with 1-based pair indices and basis ordering x_i (x) x_j -> N*(i-1)+(j-1).
TensorOp load_rmatrix_json(const std::string& path, const QMode& mode);
TensorOp parse_rmatrix_json(const std::string& text, const QMode& mode);
std::string rmatrix_to_json(const TensorOp& R);

} // namespace recalc

#endif

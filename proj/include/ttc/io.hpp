#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ttc/matrix.hpp"

namespace ttc {

// Matrix text format:
//   # optional comment lines
//   field Q            |  field p  |  field p k c0 c1 ... ck
//   rows cols
//   row entries, whitespace separated
// Entries: integers mod p, rationals "a/b" or "a", extension scalars as
// comma-joined coefficients "c0,c1,...".

FieldPtr parse_field_spec(const std::string& spec);  // "Q" | "7" | "2 3 1 1 0 1"
std::string field_header(const Field& f);            // "field ..."

Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m,
                  const std::vector<std::string>& comments = {});
void write_matrix_file(const std::string& path, const Matrix& m,
                       const std::vector<std::string>& comments = {});

}  // namespace ttc
